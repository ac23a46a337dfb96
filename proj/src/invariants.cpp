#include "multider/invariants.hpp"

#include <optional>

namespace multider {

namespace {

// Elementary symmetric polynomials e_1..e_l of the given values.
std::vector<PolyQ> elementary_symmetric(const std::vector<PolyQ>& vals, Vars vars) {
    std::vector<PolyQ> e(vals.size() + 1, PolyQ::zero(vars));
    e[0] = PolyQ::constant(vars, Rational(1));
    for (size_t n = 0; n < vals.size(); ++n)
        for (size_t i = std::min(n + 1, vals.size()); i >= 1; --i)
            e[i] += e[i - 1] * vals[n];
    return e;
}

std::vector<std::vector<PolyQ>> jacobian_matrix(const BasicInvariants& inv) {
    std::vector<std::vector<PolyQ>> m(inv.ell);
    for (int i = 0; i < inv.ell; ++i)
        for (int j = 0; j < inv.ell; ++j)
            m[i].push_back(inv.P[i].partial_derivative(j));
    return m;
}

// Proportionality of vector fields with one shared constant:
// f == c * g componentwise. Returns the constant when it exists.
std::optional<Rational> field_ratio(const FieldQ& f, const FieldQ& g) {
    std::optional<Rational> c;
    for (size_t i = 0; i < f.comps.size(); ++i) {
        const PolyQ& a = f.comps[i];
        const PolyQ& b = g.comps[i];
        if (a.is_zero() != b.is_zero()) return std::nullopt;
        if (a.is_zero()) continue;
        auto [an, ac] = a.normalize_primitive();
        auto [bn, bc] = b.normalize_primitive();
        if (an != bn) return std::nullopt;
        Rational ratio = ac / bc;
        if (c && *c != ratio) return std::nullopt;
        c = ratio;
    }
    return c;
}

} // namespace

PolyQ BasicInvariants::jacobian() const { return det_bareiss(jacobian_matrix(*this)); }

BasicInvariants make_basic_invariants(int r, int p, int ell) {
    if (r < 2) throw DomainError("basic invariants require r >= 2");
    if (p != 1 && p != r) throw DomainError("basic invariants require p in {1, r}");
    if (ell < 2) throw DomainError("basic invariants require ell >= 2");
    BasicInvariants inv;
    inv.r = r;
    inv.p = p;
    inv.ell = ell;
    Vars vars{ell, false, false};
    std::vector<PolyQ> powers;
    for (int i = 0; i < ell; ++i) powers.push_back(PolyQ::variable(vars, i).pow(r));
    std::vector<PolyQ> e = elementary_symmetric(powers, vars);
    for (int i = 1; i <= ell - 1; ++i)
        inv.P.push_back(i % 2 == 0 ? e[i] : -e[i]);
    std::vector<int> exps(ell, r / p);
    inv.P.push_back(PolyQ::from_term(vars, exps, Rational(1)));
    return inv;
}

bool invariant_identities_check(int r, int p, int ell) {
    BasicInvariants inv = make_basic_invariants(r, p, ell);
    Vars vars{ell, false, false};
    Vars vt{ell, true, false};

    // (i) lambda(t) = t^{rl} + P_1 t^{r(l-1)} + ... + P_{l-1} t^r + (-1)^l P_l^p
    PolyQ lambda = lambda_poly(r, ell);
    std::vector<PolyQ> lift_x;
    for (int i = 0; i < ell; ++i) lift_x.push_back(PolyQ::variable(vt, i));
    PolyQ expansion = PolyQ::monomial_power(vt, ell, static_cast<long>(r) * ell);
    for (int i = 1; i <= ell - 1; ++i)
        expansion += inv.P[i - 1].substitute(lift_x) *
                     PolyQ::monomial_power(vt, ell, static_cast<long>(r) * (ell - i));
    PolyQ plp = inv.P[ell - 1].pow(p).substitute(lift_x);
    expansion += ell % 2 == 0 ? plp : -plp;
    if (lambda != expansion) return false;

    // (ii) Jacobian = (x_1...x_l)^{r/p - 1} prod_{i<j} (x_i^r - x_j^r), up to
    // a nonzero constant.
    std::vector<int> coord(ell, r / p - 1);
    PolyQ expected = PolyQ::from_term(vars, coord, Rational(1));
    for (int i = 0; i < ell; ++i)
        for (int j = i + 1; j < ell; ++j)
            expected = expected *
                       (PolyQ::variable(vars, i).pow(r) - PolyQ::variable(vars, j).pow(r));
    return proportional_to(inv.jacobian(), expected);
}

PolyQ primitive_apply(const BasicInvariants& inv, const PolyQ& f) {
    Vars vars{inv.ell, false, false};
    if (f.vars() != vars) throw VarMismatch("primitive_apply input over wrong variables");
    if (!f.is_polynomial()) throw DomainError("primitive_apply requires a polynomial");
    int pos = inv.primitive_index();
    std::vector<std::vector<PolyQ>> m(inv.ell);
    for (int i = 0; i < inv.ell; ++i) {
        for (int j = 0; j < inv.ell; ++j) {
            const PolyQ& src = j == pos ? f : inv.P[j];
            m[i].push_back(src.partial_derivative(i));
        }
    }
    PolyQ num = det_bareiss(m);
    PolyQ q = inv.jacobian();
    if (num.is_zero()) return PolyQ::zero(vars);
    auto quotient = try_divide_exact(num, q);
    if (!quotient)
        throw NotPolynomialImage("primitive derivative left the polynomial ring");
    return *quotient;
}

FieldQ nabla_D(const BasicInvariants& inv, const FieldQ& eta) {
    VectorField<Rational> out(eta.vars);
    for (size_t i = 0; i < eta.comps.size(); ++i)
        out.comps[i] = primitive_apply(inv, eta.comps[i]);
    return out;
}

bool dual_basis_check(const BasicInvariants& inv) {
    Vars vars{inv.ell, false, false};
    for (int j = 0; j < inv.ell; ++j) {
        PolyQ expected = j == inv.primitive_index()
                             ? PolyQ::constant(vars, Rational(1))
                             : PolyQ::zero(vars);
        if (primitive_apply(inv, inv.P[j]) != expected) return false;
    }
    return true;
}

bool lambda_derivative_law(int r, int p, int ell, int m) {
    if (m < 1) throw DomainError("lambda derivative law requires m >= 1");
    BasicInvariants inv = make_basic_invariants(r, p, ell);
    Vars vars{ell, false, false};
    Vars vt{ell, true, false};
    PolyQ lm = lambda_poly(r, ell).pow(m);

    // Apply D to each t-coefficient and reassemble in t.
    std::map<long, PolyQ> slices;
    for (const auto& [key, coeff] : lm.terms()) {
        std::vector<int> e = mono::decode(key, vt.count());
        long td = e[ell];
        std::vector<int> ex(e.begin(), e.begin() + ell);
        PolyQ& slice = slices.try_emplace(td, vars).first->second;
        slice += PolyQ::from_term(vars, ex, coeff);
    }
    PolyQ image(vt);
    std::vector<PolyQ> lift_x;
    for (int i = 0; i < ell; ++i) lift_x.push_back(PolyQ::variable(vt, i));
    for (const auto& [td, slice] : slices) {
        PolyQ d = primitive_apply(inv, slice);
        if (d.is_zero()) continue;
        image += d.substitute(lift_x) * PolyQ::monomial_power(vt, ell, td);
    }

    PolyQ expected = lambda_poly(r, ell).pow(m - 1) * Rational(m);
    if (p == 1) {
        if (ell % 2 == 1) expected = -expected;
    } else {
        expected = expected * PolyQ::monomial_power(vt, ell, r);
    }
    return image == expected;
}

PrimitiveRelationReport verify_primitive_relations(int r, int p, int ell, int m_max) {
    BasicInvariants inv = make_basic_invariants(r, p, ell);
    PrimitiveRelationReport rep;
    Vars vars{ell, false, false};

    auto record = [&](const std::string& desc, auto&& make_image, auto&& make_target) {
        PrimitiveRelation rel;
        rel.description = desc;
        try {
            FieldQ image = make_image();
            FieldQ target = make_target();
            auto c = field_ratio(image, target);
            rel.holds = c.has_value();
            if (c) rel.constant = c->to_string();
        } catch (const NotPolynomialImage&) {
            rel.holds = false;
            rel.constant = "non-polynomial image";
        }
        if (!rel.holds) rep.all_hold = false;
        rep.relations.push_back(std::move(rel));
    };

    for (int m = 1; m <= m_max; ++m) {
        if (p == 1) {
            for (int u = 0; u <= ell - 1; ++u) {
                record("nabla_D eta_" + std::to_string(u) + "^" + std::to_string(m) +
                           " = c * eta_" + std::to_string(u) + "^" + std::to_string(m - 1),
                       [&] { return nabla_D(inv, eta_field(r, ell, m, u)); },
                       [&] { return eta_field(r, ell, m - 1, u); });
            }
        } else {
            for (int u = -m; u <= -m + ell - 2; ++u) {
                record("nabla_D eta_" + std::to_string(u) + "^" + std::to_string(m) +
                           " = c * eta_" + std::to_string(u + 1) + "^" + std::to_string(m - 1),
                       [&] { return nabla_D(inv, eta_field(r, ell, m, u)); },
                       [&] { return eta_field(r, ell, m - 1, u + 1); });
            }
            // P_l^{r-1}-prefactored relation, checked forward:
            // nabla_D (P_l^{r-1} eta_{-m-1}^m) = c * P_l^{r-1} eta_{-m}^{m-1}.
            std::vector<int> exps(ell, r - 1);
            PolyQ prefactor = PolyQ::from_term(vars, exps, Rational(1));
            record("nabla_D (P_l^{r-1} eta_{-m-1}^" + std::to_string(m) +
                       ") = c * P_l^{r-1} eta_{-m}^" + std::to_string(m - 1),
                   [&] { return nabla_D(inv, prefactor * eta_field(r, ell, m, -m - 1)); },
                   [&] { return prefactor * eta_field(r, ell, m - 1, -m); });
        }
    }
    return rep;
}

} // namespace multider
