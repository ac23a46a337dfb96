#pragma once

#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "multider/cyclotomic.hpp"
#include "multider/monomial.hpp"
#include "multider/rational.hpp"
#include "multider/vars.hpp"

namespace multider {

/// Order of vanishing reported for the zero polynomial.
inline constexpr long kInfiniteOrder = std::numeric_limits<long>::max();

/// Sparse multivariate Laurent polynomial over an exact coefficient field K
/// (Rational or Cyclotomic). Terms are kept in a map ordered by descending
/// lexicographic monomial order, so begin() is the leading term; zero
/// coefficients are never stored. All operations are pure value semantics.
template <class K>
class Poly {
public:
    using TermMap = std::map<MonoKey, K, std::greater<MonoKey>>;

    Poly() : vars_{1, false, false} {}
    explicit Poly(Vars vars) : vars_(vars) { vars_.validate(); }

    static Poly zero(Vars vars) { return Poly(vars); }

    static Poly constant(Vars vars, K c) {
        Poly p(vars);
        if (!c.is_zero()) p.terms_.emplace(mono::one(), std::move(c));
        return p;
    }

    static Poly variable(Vars vars, int index) {
        return monomial_power(vars, index, 1);
    }

    static Poly monomial_power(Vars vars, int index, long e, K c = K(1)) {
        Poly p(vars);
        if (index < 0 || index >= vars.count())
            throw DomainError("variable index out of range for " + vars.describe());
        if (!c.is_zero()) p.terms_.emplace(mono::power_of_var(index, e), std::move(c));
        return p;
    }

    static Poly from_term(Vars vars, const std::vector<int>& exps, K c) {
        Poly p(vars);
        if (static_cast<int>(exps.size()) != vars.count())
            throw DomainError("exponent vector length does not match variable set");
        if (!c.is_zero()) p.terms_.emplace(mono::encode(exps), std::move(c));
        return p;
    }

    const Vars& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t n_terms() const { return terms_.size(); }

    bool is_polynomial() const {
        for (const auto& [k, c] : terms_)
            if (!mono::is_polynomial(k)) return false;
        return true;
    }

    /// Maximum total degree over the terms; -1 for the zero polynomial.
    long total_degree() const {
        long d = std::numeric_limits<long>::min();
        for (const auto& [k, c] : terms_)
            d = std::max(d, mono::total_degree(k, vars_.count()));
        return terms_.empty() ? -1 : d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        long d = mono::total_degree(terms_.begin()->first, vars_.count());
        for (const auto& [k, c] : terms_)
            if (mono::total_degree(k, vars_.count()) != d) return false;
        return true;
    }

    /// Largest exponent of variable v appearing; 0 for the zero polynomial.
    long degree_in(int v) const {
        long d = 0;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            long e = mono::exponent(k, v);
            d = first ? e : std::max(d, e);
            first = false;
        }
        return terms_.empty() ? 0 : d;
    }

    MonoKey leading_key() const {
        if (terms_.empty()) throw DomainError("leading term of zero polynomial");
        return terms_.begin()->first;
    }
    const K& leading_coeff() const {
        if (terms_.empty()) throw DomainError("leading term of zero polynomial");
        return terms_.begin()->second;
    }

    K coeff(const std::vector<int>& exps) const {
        auto it = terms_.find(mono::encode(exps));
        return it == terms_.end() ? K(0) : it->second;
    }

    Poly operator-() const {
        Poly out(vars_);
        for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
        return out;
    }

    Poly& operator+=(const Poly& o) {
        require_same_vars(o);
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        require_same_vars(o);
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.require_same_vars(b);
        Poly out(a.vars_);
        if (a.terms_.empty() || b.terms_.empty()) return out;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                out.add_term(mono::mul(ka, kb), ca * cb);
        return out;
    }

    Poly& operator*=(const K& s) {
        if (s.is_zero()) { terms_.clear(); return *this; }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }
    friend Poly operator*(Poly a, const K& s) { return a *= s; }
    friend Poly operator*(const K& s, Poly a) { return a *= s; }

    Poly& operator/=(const K& s) {
        if (s.is_zero()) throw ZeroDivisor("polynomial divided by zero scalar");
        return *this *= s.inverse();
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(long n) const {
        if (n < 0) {
            if (n_terms() != 1)
                throw PoleError("negative power of a non-monomial");
            auto [k, c] = *terms_.begin();
            Poly out(vars_);
            Poly inv(vars_);
            inv.terms_.emplace(mono::div(mono::one(), k), c.inverse());
            return inv.pow(-n);
        }
        Poly result = constant(vars_, K(1));
        Poly base = *this;
        while (n > 0) {
            if (n & 1) result = result * base;
            base = n > 1 ? base * base : base;
            n >>= 1;
        }
        return result;
    }

    /// Exact termwise partial derivative with respect to variable v,
    /// valid for negative exponents as well.
    Poly partial_derivative(int v) const {
        if (v < 0 || v >= vars_.count()) throw DomainError("derivative variable out of range");
        Poly out(vars_);
        for (const auto& [k, c] : terms_) {
            long e = mono::exponent(k, v);
            if (e == 0) continue;
            out.add_term(mono::div(k, mono::power_of_var(v, 1)), c * K(e));
        }
        return out;
    }

    /// Image under the ring homomorphism sending variable v to images[v].
    /// All images must share one target variable set. A negative exponent is
    /// accepted only when the corresponding image is a nonzero monomial;
    /// otherwise the substitution would create a genuine pole.
    Poly substitute(const std::vector<Poly>& images) const {
        if (static_cast<int>(images.size()) != vars_.count())
            throw DomainError("substitution needs one image per variable");
        Vars target = images.empty() ? vars_ : images[0].vars();
        for (const auto& g : images)
            if (g.vars() != target)
                throw VarMismatch("substitution images over mixed variable sets");
        std::map<std::pair<int, long>, Poly> cache;
        auto image_power = [&](int v, long e) -> const Poly& {
            auto it = cache.find({v, e});
            if (it != cache.end()) return it->second;
            if (e < 0 && images[v].n_terms() != 1)
                throw PoleError("substitution creates a pole: negative power of " +
                                vars_.name(v) + " with non-monomial image");
            if (e < 0 && images[v].is_zero())
                throw PoleError("substitution creates a pole: negative power of zero");
            return cache.emplace(std::make_pair(v, e), images[v].pow(e)).first->second;
        };
        Poly out(target);
        for (const auto& [k, c] : terms_) {
            Poly term = constant(target, c);
            for (int v = 0; v < vars_.count(); ++v) {
                long e = mono::exponent(k, v);
                if (e == 0) continue;
                term = term * image_power(v, e);
            }
            out += term;
        }
        return out;
    }

    /// Substitute a single variable, leaving the others in place.
    Poly substitute_var(int v, const Poly& image) const {
        if (image.vars() != vars_) throw VarMismatch("substitute_var image over different variables");
        std::vector<Poly> images;
        images.reserve(vars_.count());
        for (int i = 0; i < vars_.count(); ++i)
            images.push_back(i == v ? image : variable(vars_, i));
        return substitute(images);
    }

    /// Normal form for equality up to a nonzero constant: g with lexicographic
    /// leading coefficient 1, and the constant c with *this == c * g.
    std::pair<Poly, K> normalize_primitive() const {
        if (terms_.empty()) throw DomainError("normalize_primitive of zero polynomial");
        K lead = leading_coeff();
        Poly g = *this;
        g *= lead.inverse();
        return {g, lead};
    }

    friend bool proportional_to(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        return a.normalize_primitive().first == b.normalize_primitive().first;
    }

private:
    void require_same_vars(const Poly& o) const {
        if (vars_ != o.vars_)
            throw VarMismatch("operands over " + vars_.describe() + " and " + o.vars_.describe());
    }

    void add_term(MonoKey k, const K& c) {
        if (c.is_zero()) return;
        auto it = terms_.lower_bound(k);
        if (it != terms_.end() && it->first == k) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        } else {
            terms_.emplace_hint(it, k, c);
        }
    }

    Vars vars_;
    TermMap terms_;

    template <class K2>
    friend std::optional<Poly<K2>> try_divide_exact(const Poly<K2>&, const Poly<K2>&);
    template <class K2>
    friend std::pair<Poly<K2>, Poly<K2>> divmod_linear(const Poly<K2>&, const Poly<K2>&);
};

using PolyQ = Poly<Rational>;
using PolyC = Poly<Cyclotomic>;

/// Quotient f / d when the division is exact, std::nullopt otherwise.
/// Both arguments must be true polynomials (no negative exponents).
template <class K>
std::optional<Poly<K>> try_divide_exact(const Poly<K>& f, const Poly<K>& d) {
    if (d.is_zero()) throw ZeroDivisor("exact division by zero polynomial");
    if (f.vars() != d.vars())
        throw VarMismatch("exact division over mixed variable sets");
    if (!f.is_polynomial() || !d.is_polynomial())
        throw DomainError("exact division requires polynomial operands");
    Poly<K> quotient(f.vars());
    Poly<K> rem = f;
    MonoKey dk = d.leading_key();
    const K& dc = d.leading_coeff();
    while (!rem.is_zero()) {
        MonoKey rk = rem.leading_key();
        if (!mono::divides(dk, rk)) return std::nullopt;
        K q = rem.leading_coeff() / dc;
        MonoKey qk = mono::div(rk, dk);
        quotient.add_term(qk, q);
        Poly<K> t(f.vars());
        t.add_term(qk, q);
        rem -= t * d;
    }
    return quotient;
}

/// Division by an affine-linear form: the form is solved for its pivot
/// variable (the first one with a nonzero coefficient) and f is reduced by
/// synthetic division in that variable. Returns {quotient, remainder} with
/// f == quotient * form + remainder and the remainder free of the pivot.
template <class K>
std::pair<Poly<K>, Poly<K>> divmod_linear(const Poly<K>& f, const Poly<K>& form) {
    const Vars& vars = f.vars();
    if (form.vars() != vars) throw VarMismatch("form over different variable set");
    if (form.is_zero()) throw ZeroDivisor("division by zero form");
    if (form.total_degree() > 1 || !form.is_polynomial())
        throw DomainError("divmod_linear requires an affine-linear form");
    if (!f.is_polynomial()) throw DomainError("divmod_linear requires a polynomial dividend");

    int pivot = -1;
    K pivot_coeff(0);
    for (int v = 0; v < vars.count() && pivot < 0; ++v) {
        std::vector<int> e(vars.count(), 0);
        e[v] = 1;
        K c = form.coeff(e);
        if (!c.is_zero()) { pivot = v; pivot_coeff = c; }
    }
    if (pivot < 0) throw DomainError("form has no variable part");

    // form / pivot_coeff = x_pivot - v  with  v = -(rest)/pivot_coeff
    Poly<K> scaled = form;
    scaled *= pivot_coeff.inverse();
    Poly<K> v = Poly<K>::variable(vars, pivot) - scaled;

    // Decompose f by pivot degree.
    std::map<long, Poly<K>> slices;
    for (const auto& [k, c] : f.terms()) {
        long e = mono::exponent(k, pivot);
        Poly<K>& slice = slices.try_emplace(e, vars).first->second;
        slice.add_term(mono::div(k, mono::power_of_var(pivot, e)), c);
    }
    long dmax = slices.empty() ? 0 : slices.rbegin()->first;

    // Horner: remainder = sum A_d v^d; quotient via q_{d-1} = A_d + v*q_d.
    Poly<K> q(vars), acc(vars);
    for (long d = dmax; d >= 1; --d) {
        auto it = slices.find(d);
        if (it != slices.end()) acc += it->second;
        q += acc * Poly<K>::monomial_power(vars, pivot, d - 1);
        acc = acc * v;
    }
    auto it0 = slices.find(0);
    Poly<K> rem = acc;
    if (it0 != slices.end()) rem += it0->second;
    q *= pivot_coeff.inverse();
    return {q, rem};
}

/// True iff d divides f exactly in the polynomial ring. Affine-linear
/// divisors go through pivot substitution; general divisors through
/// leading-term reduction.
template <class K>
bool divides(const Poly<K>& d, const Poly<K>& f) {
    if (d.is_zero()) throw ZeroDivisor("divisibility by zero polynomial");
    if (!f.is_polynomial() || !d.is_polynomial())
        throw DomainError("divides requires polynomial operands");
    if (f.is_zero()) return true;
    if (d.total_degree() == 1) {
        auto [q, r] = divmod_linear(f, d);
        return r.is_zero();
    }
    return try_divide_exact(f, d).has_value();
}

/// Largest e with form^e | f; kInfiniteOrder when f == 0. The form must be a
/// nonzero affine-linear form.
template <class K>
long vanishing_order(const Poly<K>& form, const Poly<K>& f) {
    if (form.is_zero() || form.total_degree() < 1 || form.total_degree() > 1)
        throw DomainError("vanishing_order requires a nonzero affine-linear form");
    if (f.is_zero()) return kInfiniteOrder;
    long order = 0;
    Poly<K> cur = f;
    while (true) {
        auto [q, r] = divmod_linear(cur, form);
        if (!r.is_zero()) return order;
        ++order;
        cur = std::move(q);
    }
}

/// Embed a rational polynomial into Q(zeta_r)[x].
inline PolyC to_cyclotomic(const PolyQ& p, int r) {
    PolyC out(p.vars());
    for (const auto& [k, c] : p.terms()) {
        std::vector<int> e = mono::decode(k, p.vars().count());
        out += PolyC::from_term(p.vars(), e, Cyclotomic(c).promoted(r));
    }
    return out;
}

} // namespace multider
