#include "multider/catalan.hpp"

#include "multider/calculus.hpp"

namespace multider {

namespace {

constexpr int kX = 0;
constexpr int kY = 1;

PolyQ swap_xy(const PolyQ& f) {
    Vars vars = f.vars();
    return f.substitute({PolyQ::variable(vars, kY), PolyQ::variable(vars, kX)});
}

// Sequential exact division by prod_{k=-m..m} (cx*x + cy*y - k).
bool divisible_by_shift_product(const PolyQ& f, const Rational& cx, const Rational& cy, int m) {
    Vars vars = f.vars();
    PolyQ base(vars);
    if (!cx.is_zero()) base += PolyQ::monomial_power(vars, kX, 1, cx);
    if (!cy.is_zero()) base += PolyQ::monomial_power(vars, kY, 1, cy);
    PolyQ cur = f;
    for (int k = -m; k <= m; ++k) {
        auto [q, rem] = divmod_linear(cur, base - PolyQ::constant(vars, Rational(k)));
        if (!rem.is_zero()) return false;
        cur = std::move(q);
    }
    return true;
}

} // namespace

FmiPoly f_poly(int m, int i) {
    if (m < 0 || i < 0) throw DomainError("f_poly requires m, i >= 0");
    Vars vt{2, true, false};
    PolyQ t = PolyQ::variable(vt, 2);
    PolyQ x = PolyQ::variable(vt, kX);
    PolyQ y = PolyQ::variable(vt, kY);
    PolyQ integrand = t.pow(2 * i) * (t * t - x * x).pow(m) * (t * t - y * y).pow(m);
    FmiPoly out;
    out.m = m;
    out.i = i;
    out.poly = antiderivative_at(integrand, kX);

    // Shape of the result: sum_{k=0..m} c_k x^{4m+2i+1-2k} y^{2k}.
    PolyQ normalized = out.poly.normalize_primitive().first;
    out.coeffs.assign(m + 1, Rational(0));
    long top = 4L * m + 2 * i + 1;
    for (const auto& [key, coeff] : normalized.terms()) {
        long ex = mono::exponent(key, kX);
        long ey = mono::exponent(key, kY);
        long k = ey / 2;
        if (ey % 2 != 0 || k < 0 || k > m || ex != top - 2 * k)
            throw Error("f_poly result violates the expected coefficient shape");
        out.coeffs[k] = coeff;
    }
    return out;
}

PolyQ shifted_power(const Rational& base_shift, int var, int n, bool falling, Vars vars) {
    if (n < 0) throw DomainError("shifted_power requires n >= 0");
    PolyQ out = PolyQ::constant(vars, Rational(1));
    PolyQ v = PolyQ::variable(vars, var);
    for (int j = 0; j < n; ++j) {
        Rational shift = falling ? base_shift - Rational(j) : base_shift + Rational(j);
        out = out * (v + PolyQ::constant(vars, shift));
    }
    return out;
}

PolyQ deform(const FmiPoly& f) {
    Vars vars{2, false, false};
    int m = f.m;
    int p = 2 * f.m + f.i;
    PolyQ out(vars);
    for (int k = 0; k <= m; ++k) {
        if (f.coeffs[k].is_zero()) continue;
        PolyQ term = shifted_power(Rational(p - k), kX, 2 * p + 1 - 2 * k, true, vars);
        term = term * shifted_power(Rational(p - m), kY, k, true, vars);
        term = term * shifted_power(Rational(-(p - m)), kY, k, false, vars);
        out += f.coeffs[k] * term;
    }
    return out;
}

ConjectureResult conjecture_check(int m, int i) {
    ConjectureResult res;
    res.m = m;
    res.i = i;
    PolyQ ft = deform(f_poly(m, i));
    PolyQ ft_swapped = swap_xy(ft);
    res.x_div = divisible_by_shift_product(ft, Rational(1), Rational(0), m);
    res.sum_div = divisible_by_shift_product(ft + ft_swapped, Rational(1), Rational(1), m);
    res.diff_div = divisible_by_shift_product(ft - ft_swapped, Rational(1), Rational(-1), m);
    return res;
}

CatalanBasisResult catalan_basis_check(int m) {
    CatalanBasisResult result;
    for (int i = 0; i <= 1; ++i) {
        ConjectureResult cc = conjecture_check(m, i);
        if (!cc.x_div)
            result.failed_preconditions.push_back("x-divisibility fails for f^" +
                                                  std::to_string(m) + "_" + std::to_string(i));
        if (!cc.sum_div)
            result.failed_preconditions.push_back("(x+y)-divisibility fails for f^" +
                                                  std::to_string(m) + "_" + std::to_string(i));
        if (!cc.diff_div)
            result.failed_preconditions.push_back("(x-y)-divisibility fails for f^" +
                                                  std::to_string(m) + "_" + std::to_string(i));
    }
    result.preconditions_ok = result.failed_preconditions.empty();

    Vars vars{2, false, false};
    ArrangementQ affine = catalan_B2(m);
    std::vector<FieldQ> homogenized;
    for (int i = 0; i <= 1; ++i) {
        PolyQ g = deform(f_poly(m, i));
        VectorField<Rational> field(vars);
        field.comps[kX] = g;
        field.comps[kY] = swap_xy(g);
        result.affine_member[i] = member_of(field, affine).member;
        homogenized.push_back(homogenize_field(field, 4L * m + 1 + 2 * i));
    }

    Multiarrangement<Rational> coned = cone(affine);
    std::vector<FieldQ> fields;
    fields.push_back(euler_field<Rational>(coned.vars));
    fields.push_back(homogenized[0]);
    fields.push_back(homogenized[1]);
    result.report = verify_basis(fields, coned);
    return result;
}

} // namespace multider
