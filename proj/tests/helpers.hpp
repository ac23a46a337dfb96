#pragma once

#include <random>

#include "multider/poly_io.hpp"

namespace multider::testing {

inline const Vars kV1{1, false, false};
inline const Vars kV2{2, false, false};
inline const Vars kV3{3, false, false};
inline const Vars kV2t{2, true, false};

inline PolyQ q2(const std::string& text) { return parse_q(text, kV2); }
inline PolyQ q3(const std::string& text) { return parse_q(text, kV3); }

/// Random sparse Laurent polynomial with small integer exponents and
/// rational coefficients; deterministic given the engine state.
inline PolyQ random_poly(std::mt19937& rng, Vars vars, int max_terms = 5,
                         int max_abs_exp = 3, bool laurent = false) {
    std::uniform_int_distribution<int> n_terms(0, max_terms);
    std::uniform_int_distribution<int> exp_dist(laurent ? -max_abs_exp : 0, max_abs_exp);
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 9);
    PolyQ p(vars);
    int n = n_terms(rng);
    for (int i = 0; i < n; ++i) {
        std::vector<int> exps(vars.count());
        for (auto& e : exps) e = exp_dist(rng);
        p += PolyQ::from_term(vars, exps, Rational(BigInt(num(rng)), BigInt(den(rng))));
    }
    return p;
}

inline PolyQ random_nonzero_poly(std::mt19937& rng, Vars vars, int max_terms = 5,
                                 int max_abs_exp = 3, bool laurent = false) {
    while (true) {
        PolyQ p = random_poly(rng, vars, max_terms, max_abs_exp, laurent);
        if (!p.is_zero()) return p;
    }
}

} // namespace multider::testing
