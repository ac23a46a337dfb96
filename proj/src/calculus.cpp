#include "multider/calculus.hpp"

namespace multider {

std::pair<bool, Rational> check_nonzero_integral(int r, int n, int m) {
    if (r < 2) throw DomainError("check_nonzero_integral requires r >= 2");
    if (m < 0) throw DomainError("check_nonzero_integral requires m >= 0");
    Vars vars{1, true, false};
    PolyQ x = PolyQ::variable(vars, 0);
    PolyQ t = PolyQ::variable(vars, 1);
    PolyQ integrand = PolyQ::monomial_power(vars, 1, static_cast<long>(r) * n) *
                      (t.pow(r) - x.pow(r)).pow(m);
    PolyQ result = antiderivative_at(integrand, 0);
    if (result.is_zero()) return {false, Rational(0)};
    long expected = static_cast<long>(r) * (n + m) + 1;
    if (result.n_terms() != 1 || mono::exponent(result.leading_key(), 0) != expected)
        throw Error("nonzero-integral check produced an unexpected shape");
    return {true, result.leading_coeff()};
}

} // namespace multider
