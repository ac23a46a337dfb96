#pragma once

#include <string>
#include <vector>

#include "multider/poly.hpp"

namespace multider {

/// Affine-linear form a1*x1 + ... + an*xn + constant, stored normalized so
/// that the first nonzero variable coefficient is 1. Central forms have
/// constant 0.
template <class K>
struct LinearForm {
    std::vector<K> coeffs;
    K constant = K(0);

    LinearForm() = default;
    LinearForm(std::vector<K> c, K k0 = K(0)) : coeffs(std::move(c)), constant(std::move(k0)) {
        normalize();
    }

    void normalize() {
        for (const auto& c : coeffs) {
            if (!c.is_zero()) {
                K inv = c.inverse();
                for (auto& a : coeffs) a *= inv;
                constant *= inv;
                return;
            }
        }
        throw DomainError("linear form with no variable part");
    }

    bool is_central() const { return constant.is_zero(); }

    Poly<K> to_poly(const Vars& vars) const {
        if (static_cast<int>(coeffs.size()) != vars.count())
            throw DomainError("form length does not match variable set " + vars.describe());
        Poly<K> p(vars);
        for (int v = 0; v < vars.count(); ++v)
            if (!coeffs[v].is_zero())
                p += Poly<K>::monomial_power(vars, v, 1, coeffs[v]);
        if (!constant.is_zero()) p += Poly<K>::constant(vars, constant);
        return p;
    }

    friend bool operator==(const LinearForm& a, const LinearForm& b) {
        return a.coeffs == b.coeffs && a.constant == b.constant;
    }
};

template <class K>
struct Hyperplane {
    LinearForm<K> form;
    int mult = 0;
};

/// A list of pairwise non-proportional forms with nonnegative multiplicities.
/// Hyperplanes with multiplicity zero are retained; membership checks skip
/// them. field_r is the cyclotomic conductor (1 for plain Q).
template <class K>
struct Multiarrangement {
    Vars vars;
    int field_r = 1;
    std::vector<Hyperplane<K>> hyperplanes;

    Multiarrangement(Vars v, int r = 1) : vars(v), field_r(r) { vars.validate(); }

    void add(LinearForm<K> form, int mult) {
        if (mult < 0) throw DomainError("negative multiplicity");
        for (const auto& h : hyperplanes)
            if (h.form == form)
                throw DomainError("proportional forms in one arrangement");
        hyperplanes.push_back({std::move(form), mult});
    }

    size_t size() const { return hyperplanes.size(); }

    bool is_central() const {
        for (const auto& h : hyperplanes)
            if (!h.form.is_central()) return false;
        return true;
    }

    long total_multiplicity() const {
        long s = 0;
        for (const auto& h : hyperplanes) s += h.mult;
        return s;
    }

    /// Q(A, m) = prod over H of alpha_H^{m(H)}; exact, degree |m|.
    Poly<K> defining_polynomial() const {
        Poly<K> q = Poly<K>::constant(vars, K(1));
        for (const auto& h : hyperplanes) {
            if (h.mult == 0) continue;
            q = q * h.form.to_poly(vars).pow(h.mult);
        }
        return q;
    }
};

using ArrangementQ = Multiarrangement<Rational>;
using ArrangementC = Multiarrangement<Cyclotomic>;

/// The rank-2 multiarrangement x1^p x2^q (x1-x2)^r; zero multiplicities keep
/// their hyperplanes.
ArrangementQ three_lines(int p, int q, int r);

/// prod x_i^{a_i+b+1} * prod_{i<j} (x_i-x_j)^{a_i+a_j+1}; without coordinates
/// only the difference forms prod (x_i-x_j)^{a_i+a_j+1} appear.
ArrangementQ braid_coordinate(const std::vector<int>& a, int b, bool with_coordinates);

/// Reflection multiarrangement of the monomial group over Q(zeta_r):
/// coordinate hyperplanes x_i with multiplicity m_i (retained when zero) and
/// all x_i - zeta_r^k x_j with multiplicity u.
ArrangementC monomial_reflection(int r, int p, int ell, const std::vector<long>& m_i, int u);

/// Named multiplicity maps on the reflecting hyperplanes of G(r, p, l):
/// beta is 1 on coordinate hyperplanes, delta_r is 1 on the x_i - zeta x_j,
/// and omega assigns the order of the corresponding reflection.
struct MultiplicityMap {
    long coordinate = 0; // value on each x_i
    long reflection = 0; // value on each x_i - zeta^k x_j

    static MultiplicityMap beta() { return {1, 0}; }
    static MultiplicityMap delta() { return {0, 1}; }
    static MultiplicityMap omega(int r, int p) {
        if (p != 1 && p != r) throw DomainError("omega requires p in {1, r}");
        return p < r ? MultiplicityMap{r / p, 2} : MultiplicityMap{0, 2};
    }

    MultiplicityMap scaled(long s) const { return {coordinate * s, reflection * s}; }
    MultiplicityMap shifted(long b) const { return {coordinate + b, reflection + b}; }
    friend MultiplicityMap operator+(MultiplicityMap a, MultiplicityMap b) {
        return {a.coordinate + b.coordinate, a.reflection + b.reflection};
    }
    friend bool operator==(const MultiplicityMap& a, const MultiplicityMap& b) {
        return a.coordinate == b.coordinate && a.reflection == b.reflection;
    }
};

/// The reflection arrangement of G(r, p, l) carrying the given constant
/// multiplicity map; coordinate hyperplanes are retained at multiplicity 0
/// when the map does not charge them.
ArrangementC reflection_arrangement(int r, int p, int ell, const MultiplicityMap& m);

/// Extended Catalan arrangement of type B_2: affine forms x1-k, x2-k,
/// x1+x2-k, x1-x2-k for k = -m..m, each with multiplicity 1.
ArrangementQ catalan_B2(int m);

/// Coning: homogenize every affine form by the new variable z (the constant
/// becomes the z coefficient) and append the hyperplane z with multiplicity 1.
template <class K>
Multiarrangement<K> cone(const Multiarrangement<K>& a) {
    if (a.vars.with_z || a.vars.with_t)
        throw DomainError("cone expects an arrangement in plain x variables");
    Vars cv{a.vars.ell, false, true};
    Multiarrangement<K> out(cv, a.field_r);
    for (const auto& h : a.hyperplanes) {
        std::vector<K> c = h.form.coeffs;
        c.push_back(h.form.constant);
        out.add(LinearForm<K>(std::move(c)), h.mult);
    }
    std::vector<K> zc(cv.count(), K(0));
    zc.back() = K(1);
    out.add(LinearForm<K>(std::move(zc)), 1);
    return out;
}

/// Checks the product-with-a-line identity: substituting x_i -> y_i - y_{l+1}
/// into Q of the coordinate-braid arrangement (with a_{l+1} := b) yields Q of
/// the pure braid arrangement in l+1 variables, exactly.
bool product_with_line_check(const std::vector<int>& a, int b);

} // namespace multider
