#pragma once

#include <utility>

#include "multider/poly.hpp"

namespace multider {

/// The formal antiderivative in t evaluated at x_i: the linear operator with
/// t^k dt |-> x_i^{k+1}/(k+1) for k != -1, applied termwise. For k >= 0 this
/// agrees with the definite integral from 0; for k <= -2 with the integral
/// from infinity. The integration variable t is eliminated from the result.
/// Throws LogarithmicTerm if any term has t-exponent -1.
template <class K>
Poly<K> antiderivative_at(const Poly<K>& f, int xi) {
    const Vars& vin = f.vars();
    if (!vin.with_t) throw DomainError("integrand has no t variable");
    if (xi < 0 || xi >= vin.ell) throw DomainError("antiderivative target out of range");
    Vars vout{vin.ell, false, vin.with_z};
    int t = vin.t_index();
    Poly<K> out(vout);
    for (const auto& [key, coeff] : f.terms()) {
        std::vector<int> e = mono::decode(key, vin.count());
        long k = e[t];
        if (k == -1)
            throw LogarithmicTerm("term with t-exponent -1 has no formal antiderivative");
        std::vector<int> eo(e.begin(), e.begin() + vin.ell);
        if (vin.with_z) eo.push_back(e[vin.z_index()]);
        eo[xi] += static_cast<int>(k) + 1;
        out += Poly<K>::from_term(vout, eo, coeff * K(k + 1).inverse());
    }
    return out;
}

/// Symbolically computes int^x t^{rn} (t^r - x^r)^m dt in a single x variable
/// and confirms it is a nonzero multiple c * x^{r(n+m)+1}. Returns {true, c}
/// or {false, 0} if the integral vanishes.
std::pair<bool, Rational> check_nonzero_integral(int r, int n, int m);

} // namespace multider
