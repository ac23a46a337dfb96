#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// binary. Every generator is seeded deterministically by the caller.

#include <random>

#include "helpers.hpp"
#include "multider/calculus.hpp"
#include "multider/derivation.hpp"

namespace multider::testing {

struct PropertyStats {
    long cases = 0;
    long failures = 0;

    void tally(bool ok) {
        ++cases;
        if (!ok) ++failures;
    }
    PropertyStats& operator+=(const PropertyStats& o) {
        cases += o.cases;
        failures += o.failures;
        return *this;
    }
};

inline PropertyStats ring_axiom_properties(std::mt19937& rng, int n) {
    PropertyStats stats;
    for (int i = 0; i < n; ++i) {
        Vars vars = i % 2 == 0 ? kV2 : kV3;
        PolyQ a = random_poly(rng, vars, 4, 3, true);
        PolyQ b = random_poly(rng, vars, 4, 3, true);
        PolyQ c = random_poly(rng, vars, 4, 3, true);
        bool ok = (a + b) + c == a + (b + c);
        ok = ok && (a * b) * c == a * (b * c);
        ok = ok && a * (b + c) == a * b + a * c;
        ok = ok && a * b == b * a;
        ok = ok && (a + (-a)).is_zero();
        stats.tally(ok);
    }
    return stats;
}

inline PropertyStats cyclotomic_field_properties(std::mt19937& rng, int n) {
    PropertyStats stats;
    std::uniform_int_distribution<int> pick_r(2, 12);
    std::uniform_int_distribution<long long> coeff(-9, 9);
    for (int i = 0; i < n; ++i) {
        int r = pick_r(rng);
        int phi = euler_phi(r);
        auto random_elt = [&] {
            std::vector<Rational> c(phi);
            for (auto& x : c) x = Rational(coeff(rng));
            return Cyclotomic(r, std::move(c));
        };
        Cyclotomic a = random_elt(), b = random_elt(), c = random_elt();
        bool ok = (a * b) * c == a * (b * c);
        ok = ok && a * (b + c) == a * b + a * c;
        ok = ok && a * b == b * a;
        if (!a.is_zero()) ok = ok && (a * a.inverse()).is_one();
        stats.tally(ok);
    }
    return stats;
}

inline PropertyStats divides_consistency_properties(std::mt19937& rng, int n) {
    PropertyStats stats;
    for (int i = 0; i < n; ++i) {
        Vars vars = i % 2 == 0 ? kV2 : kV3;
        PolyQ d = random_nonzero_poly(rng, vars, 3, 2);
        PolyQ g = random_poly(rng, vars, 3, 2);
        PolyQ f = d * g;
        bool ok = divides(d, f);
        if (ok) {
            auto q = try_divide_exact(f, d);
            ok = q.has_value() && *q * d == f;
        }
        stats.tally(ok);
    }
    return stats;
}

inline PropertyStats vanishing_order_properties(std::mt19937& rng, int n) {
    PropertyStats stats;
    std::uniform_int_distribution<int> order(0, 5);
    std::uniform_int_distribution<long long> shift(-3, 3);
    for (int i = 0; i < n; ++i) {
        // alpha = x1 - c*x2 - k, with g not divisible by alpha
        Rational c(shift(rng));
        Rational k(shift(rng));
        PolyQ alpha = PolyQ::variable(kV2, 0) - PolyQ::monomial_power(kV2, 1, 1, c) -
                      PolyQ::constant(kV2, k);
        int e = order(rng);
        PolyQ g = random_nonzero_poly(rng, kV2, 3, 2);
        auto [quot, rem] = divmod_linear(g, alpha);
        g = g - quot * alpha; // remainder: now alpha does not divide g
        if (g.is_zero()) g = PolyQ::constant(kV2, Rational(1));
        PolyQ f = alpha.pow(e) * g;
        stats.tally(vanishing_order(alpha, f) == e);
    }
    return stats;
}

inline PropertyStats leibniz_properties(std::mt19937& rng, int n) {
    PropertyStats stats;
    for (int i = 0; i < n; ++i) {
        Vars vars = i % 2 == 0 ? kV2 : kV3;
        VectorField<Rational> delta(vars);
        for (int v = 0; v < vars.count(); ++v)
            delta.comps[v] = random_poly(rng, vars, 3, 2);
        PolyQ f = random_poly(rng, vars, 3, 2, true);
        PolyQ g = random_poly(rng, vars, 3, 2, true);
        stats.tally(apply(delta, f * g) == f * apply(delta, g) + g * apply(delta, f));
    }
    return stats;
}

inline PropertyStats antiderivative_linearity_properties(std::mt19937& rng, int n) {
    PropertyStats stats;
    Vars vt{2, true, false};
    for (int i = 0; i < n; ++i) {
        PolyQ f = random_poly(rng, vt, 4, 3, true);
        PolyQ g = random_poly(rng, vt, 4, 3, true);
        // avoid the logarithmic exponent
        auto strip = [&](const PolyQ& p) {
            PolyQ out(vt);
            for (const auto& [key, coeff] : p.terms())
                if (mono::exponent(key, 2) != -1)
                    out += PolyQ::from_term(vt, mono::decode(key, 3), coeff);
            return out;
        };
        PolyQ fs = strip(f), gs = strip(g);
        Rational a(3), b(-7);
        int xi = i % 2;
        bool ok = antiderivative_at(fs * a + gs * b, xi) ==
                  antiderivative_at(fs, xi) * a + antiderivative_at(gs, xi) * b;
        stats.tally(ok);
    }
    return stats;
}

inline PropertyStats fundamental_theorem_properties(std::mt19937& rng, int n) {
    PropertyStats stats;
    Vars vt{2, true, false};
    for (int i = 0; i < n; ++i) {
        // integrand free of x1: d/dx1 int^{x1} f dt == f with t -> x1
        PolyQ f(vt);
        PolyQ raw = random_poly(rng, vt, 4, 3, true);
        for (const auto& [key, coeff] : raw.terms()) {
            std::vector<int> e = mono::decode(key, 3);
            if (e[2] == -1) continue;
            e[0] = 0;
            f += PolyQ::from_term(vt, e, coeff);
        }
        PolyQ integral = antiderivative_at(f, 0);
        PolyQ derivative = integral.partial_derivative(0);
        PolyQ expected = f.substitute({PolyQ::variable(kV2, 0), PolyQ::variable(kV2, 1),
                                       PolyQ::variable(kV2, 0)});
        stats.tally(derivative == expected);
    }
    return stats;
}

inline PropertyStats cyclotomic_factorization_properties(int r_max) {
    PropertyStats stats;
    for (int r = 2; r <= r_max; ++r) {
        PolyC prod = PolyC::constant(kV2, Cyclotomic(1).promoted(r));
        Cyclotomic zk = Cyclotomic(1).promoted(r);
        Cyclotomic z = Cyclotomic::zeta(r);
        for (int k = 0; k < r; ++k) {
            prod = prod * (PolyC::variable(kV2, 0) - PolyC::monomial_power(kV2, 1, 1, zk));
            zk *= z;
        }
        PolyC expected =
            PolyC::monomial_power(kV2, 0, r) - PolyC::monomial_power(kV2, 1, r);
        stats.tally(prod == expected);
    }
    return stats;
}

inline PropertyStats determinant_crosscheck_properties(std::mt19937& rng, int n3, int n4) {
    PropertyStats stats;
    auto run = [&](int size, int count) {
        Vars vars = size == 3 ? kV3 : Vars{4, false, false};
        for (int i = 0; i < count; ++i) {
            std::vector<std::vector<PolyQ>> m(size);
            for (int a = 0; a < size; ++a)
                for (int b = 0; b < size; ++b)
                    m[a].push_back(random_poly(rng, vars, 2, 2));
            stats.tally(det_bareiss(m) == det_cofactor(m));
        }
    };
    run(3, n3);
    run(4, n4);
    return stats;
}

inline PropertyStats substitution_homomorphism_properties(std::mt19937& rng, int n) {
    PropertyStats stats;
    for (int i = 0; i < n; ++i) {
        PolyQ f = random_poly(rng, kV2, 3, 2);
        PolyQ g = random_poly(rng, kV2, 3, 2);
        std::vector<PolyQ> images = {random_poly(rng, kV3, 2, 1), random_poly(rng, kV3, 2, 1)};
        bool ok = (f * g).substitute(images) == f.substitute(images) * g.substitute(images);
        ok = ok && (f + g).substitute(images) == f.substitute(images) + g.substitute(images);
        stats.tally(ok);
    }
    return stats;
}

inline PropertyStats io_roundtrip_properties(std::mt19937& rng, int n) {
    PropertyStats stats;
    for (int i = 0; i < n; ++i) {
        Vars vars = i % 2 == 0 ? kV2 : kV3;
        PolyQ p = random_poly(rng, vars, 5, 4, true);
        stats.tally(parse_q(to_string(p), vars) == p);
    }
    return stats;
}

/// The full acceptance bundle: at least 1000 randomized cases.
inline PropertyStats all_property_suites(unsigned seed) {
    std::mt19937 rng(seed);
    PropertyStats stats;
    stats += ring_axiom_properties(rng, 250);
    stats += cyclotomic_field_properties(rng, 100);
    stats += divides_consistency_properties(rng, 100);
    stats += vanishing_order_properties(rng, 100);
    stats += leibniz_properties(rng, 150);
    stats += antiderivative_linearity_properties(rng, 150);
    stats += fundamental_theorem_properties(rng, 100);
    stats += cyclotomic_factorization_properties(8);
    stats += determinant_crosscheck_properties(rng, 60, 40);
    stats += substitution_homomorphism_properties(rng, 50);
    stats += io_roundtrip_properties(rng, 50);
    return stats;
}

} // namespace multider::testing
