#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "multider/arrangement.hpp"
#include "multider/poly.hpp"

namespace multider {

/// A derivation sum_i f_i d/dx_i, one component per ambient variable
/// (including z for coned arrangements).
template <class K>
struct VectorField {
    Vars vars;
    std::vector<Poly<K>> comps;

    VectorField() : vars{1, false, false} {}
    explicit VectorField(Vars v) : vars(v), comps(v.count(), Poly<K>(v)) { vars.validate(); }
    VectorField(Vars v, std::vector<Poly<K>> c) : vars(v), comps(std::move(c)) {
        vars.validate();
        if (static_cast<int>(comps.size()) != vars.count())
            throw DomainError("vector field needs one component per variable");
        for (const auto& p : comps)
            if (p.vars() != vars) throw VarMismatch("component over wrong variable set");
    }

    bool is_polynomial() const {
        for (const auto& p : comps)
            if (!p.is_polynomial()) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& p : comps)
            if (!p.is_zero()) return false;
        return true;
    }

    /// Common total degree of the nonzero components when the field is
    /// homogeneous; nullopt otherwise (or for the zero field).
    std::optional<long> homogeneous_degree() const {
        std::optional<long> deg;
        for (const auto& p : comps) {
            if (p.is_zero()) continue;
            if (!p.is_homogeneous()) return std::nullopt;
            long d = p.total_degree();
            if (deg && *deg != d) return std::nullopt;
            deg = d;
        }
        return deg;
    }

    VectorField operator-() const {
        VectorField out(vars);
        for (int i = 0; i < static_cast<int>(comps.size()); ++i) out.comps[i] = -comps[i];
        return out;
    }
    VectorField& operator+=(const VectorField& o) {
        if (vars != o.vars) throw VarMismatch("vector fields over different variables");
        for (size_t i = 0; i < comps.size(); ++i) comps[i] += o.comps[i];
        return *this;
    }
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }

    friend VectorField operator*(const Poly<K>& g, VectorField f) {
        if (g.vars() != f.vars) throw VarMismatch("scaling polynomial over different variables");
        for (auto& c : f.comps) c = g * c;
        return f;
    }
    friend VectorField operator*(const K& s, VectorField f) {
        for (auto& c : f.comps) c *= s;
        return f;
    }
};

using FieldQ = VectorField<Rational>;
using FieldC = VectorField<Cyclotomic>;

/// The derivation action: sum_i f_i * df/dx_i.
template <class K>
Poly<K> apply(const VectorField<K>& delta, const Poly<K>& f) {
    if (delta.vars != f.vars()) throw VarMismatch("field and polynomial over different variables");
    Poly<K> out(delta.vars);
    for (int v = 0; v < delta.vars.count(); ++v) {
        if (delta.comps[v].is_zero()) continue;
        out += delta.comps[v] * f.partial_derivative(v);
    }
    return out;
}

template <class K>
VectorField<K> euler_field(Vars vars) {
    VectorField<K> f(vars);
    for (int v = 0; v < vars.count(); ++v) f.comps[v] = Poly<K>::variable(vars, v);
    return f;
}

template <class K>
VectorField<K> unit_sum_field(Vars vars) {
    VectorField<K> f(vars);
    for (int v = 0; v < vars.count(); ++v) f.comps[v] = Poly<K>::constant(vars, K(1));
    return f;
}

/// Homogenization into one more variable: every term of each component is
/// padded with the power of z that lifts it to target_degree; the new z
/// component is zero.
template <class K>
VectorField<K> homogenize_field(const VectorField<K>& f, long target_degree) {
    if (f.vars.with_t || f.vars.with_z)
        throw DomainError("homogenize_field expects a field in plain x variables");
    if (!f.is_polynomial()) throw DomainError("homogenize_field expects a polynomial field");
    Vars cv{f.vars.ell, false, true};
    VectorField<K> out(cv);
    for (int v = 0; v < f.vars.ell; ++v) {
        Poly<K> h(cv);
        for (const auto& [key, coeff] : f.comps[v].terms()) {
            std::vector<int> e = mono::decode(key, f.vars.ell);
            long d = mono::total_degree(key, f.vars.ell);
            if (d > target_degree)
                throw DomainError("component degree exceeds homogenization target");
            e.push_back(static_cast<int>(target_degree - d));
            h += Poly<K>::from_term(cv, e, coeff);
        }
        out.comps[v] = h;
    }
    return out;
}

struct MembershipReport {
    bool member = false;
    // orders[h] = vanishing order of delta(alpha_H) along alpha_H, for every
    // hyperplane in arrangement order (kInfiniteOrder when the image is 0).
    std::vector<long> orders;
};

/// Per-hyperplane membership test for D(A, m): every hyperplane with
/// m(H) > 0 must satisfy alpha_H^{m(H)} | delta(alpha_H).
template <class K>
MembershipReport member_of(const VectorField<K>& delta, const Multiarrangement<K>& arr) {
    if (delta.vars != arr.vars)
        throw VarMismatch("field and arrangement over different variables");
    if (!delta.is_polynomial())
        throw DomainError("member_of requires a polynomial vector field");
    MembershipReport rep;
    rep.member = true;
    rep.orders.reserve(arr.hyperplanes.size());
    for (const auto& h : arr.hyperplanes) {
        Poly<K> alpha = h.form.to_poly(arr.vars);
        long ord = vanishing_order(alpha, apply(delta, alpha));
        rep.orders.push_back(ord);
        if (ord < h.mult) rep.member = false;
    }
    return rep;
}

/// Saito matrix: entry (i, j) = delta_i(x_j), i.e. component j of field i.
template <class K>
std::vector<std::vector<Poly<K>>> saito_matrix(const std::vector<VectorField<K>>& fields) {
    std::vector<std::vector<Poly<K>>> m;
    m.reserve(fields.size());
    for (const auto& f : fields) m.push_back(f.comps);
    return m;
}

/// Fraction-free Bareiss elimination; all interior divisions are exact.
template <class K>
Poly<K> det_bareiss(std::vector<std::vector<Poly<K>>> m) {
    size_t n = m.size();
    if (n == 0) throw DomainError("determinant of empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("determinant of non-square matrix");
    Vars vars = m[0][0].vars();
    if (n == 1) return m[0][0];
    bool negate = false;
    Poly<K> prev = Poly<K>::constant(vars, K(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Poly<K>::zero(vars);
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Poly<K> num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = try_divide_exact(num, prev);
                if (!q) throw Error("Bareiss elimination: interior division not exact");
                m[i][j] = std::move(*q);
            }
            m[i][k] = Poly<K>::zero(vars);
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

/// Cofactor expansion along the first row; used as a cross-check in low
/// dimensions.
template <class K>
Poly<K> det_cofactor(const std::vector<std::vector<Poly<K>>>& m) {
    size_t n = m.size();
    if (n == 0) throw DomainError("determinant of empty matrix");
    Vars vars = m[0][0].vars();
    if (n == 1) return m[0][0];
    Poly<K> det(vars);
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly<K>>> minor;
        minor.reserve(n - 1);
        for (size_t i = 1; i < n; ++i) {
            std::vector<Poly<K>> row;
            row.reserve(n - 1);
            for (size_t jj = 0; jj < n; ++jj)
                if (jj != j) row.push_back(m[i][jj]);
            minor.push_back(std::move(row));
        }
        Poly<K> term = m[0][j] * det_cofactor(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

enum class Verdict { basis, not_member, dependent, degree_mismatch };

std::string to_string(Verdict v);

/// Result of a Saito-Ziegler basis verification. The verdict is `basis`
/// exactly when all candidate fields are members and the Saito determinant
/// is a nonzero constant multiple of Q(A, m) (which subsumes the degree-sum
/// criterion).
struct FreenessReport {
    Verdict verdict = Verdict::not_member;
    std::vector<long> degrees;
    long multiplicity_total = 0;
    bool membership_ok = false;
    bool degree_sum_matches = false;
    bool det_nonzero = false;
    std::string det_over_q_constant; // empty unless proportional
    std::vector<std::vector<long>> orders;
};

template <class K>
FreenessReport verify_basis(const std::vector<VectorField<K>>& fields,
                            const Multiarrangement<K>& arr) {
    if (static_cast<int>(fields.size()) != arr.vars.count())
        throw DomainError("need exactly one candidate field per ambient dimension");
    FreenessReport rep;
    rep.multiplicity_total = arr.total_multiplicity();

    long degree_sum = 0;
    for (const auto& f : fields) {
        auto d = f.homogeneous_degree();
        long deg = d ? *d : (f.is_zero() ? 0 : f.comps[0].total_degree());
        rep.degrees.push_back(deg);
        degree_sum += deg;
    }
    rep.degree_sum_matches = degree_sum == rep.multiplicity_total;

    rep.membership_ok = true;
    for (const auto& f : fields) {
        if (!f.is_polynomial()) {
            rep.membership_ok = false;
            rep.orders.emplace_back();
            continue;
        }
        MembershipReport m = member_of(f, arr);
        rep.orders.push_back(m.orders);
        if (!m.member) rep.membership_ok = false;
    }
    if (!rep.membership_ok) {
        rep.verdict = Verdict::not_member;
        return rep;
    }

    Poly<K> det = det_bareiss(saito_matrix(fields));
    if (arr.vars.count() <= 3) {
        Poly<K> check = det_cofactor(saito_matrix(fields));
        if (det != check) throw Error("determinant cross-check failed");
    }
    rep.det_nonzero = !det.is_zero();
    if (det.is_zero()) {
        rep.verdict = Verdict::dependent;
        return rep;
    }

    Poly<K> q = arr.defining_polynomial();
    auto [qn, qc] = q.normalize_primitive();
    auto [dn, dc] = det.normalize_primitive();
    if (qn == dn) {
        rep.verdict = Verdict::basis;
        rep.det_over_q_constant = (dc / qc).to_string();
        // det proportional to Q forces the degree-sum criterion; the two
        // Saito-Ziegler routes must agree.
        if (!rep.degree_sum_matches)
            throw Error("verify_basis: determinant and degree-count criteria disagree");
    } else {
        rep.verdict = Verdict::degree_mismatch;
    }
    return rep;
}

} // namespace multider
