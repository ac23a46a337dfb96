#include "multider/basis.hpp"

#include <algorithm>

namespace multider {

namespace {

// Integrate one shared integrand at every coordinate.
FieldQ integral_field(const PolyQ& integrand, int ell) {
    Vars vars{ell, false, false};
    VectorField<Rational> f(vars);
    for (int i = 0; i < ell; ++i) f.comps[i] = antiderivative_at(integrand, i);
    return f;
}

PolyQ binomial_sum(const Vars& vars, int r, int lo, int hi) {
    // sum_{i=lo..hi} C(r,i) (-x1)^i x2^{r-i}
    PolyQ out(vars);
    Rational binom(1);
    for (int i = 1; i <= lo - 1; ++i) binom = binom * Rational(r - i + 1) / Rational(i);
    for (int i = lo; i <= hi; ++i) {
        if (i >= 1) binom = binom * Rational(r - i + 1) / Rational(i);
        Rational c = (i % 2 == 0) ? binom : -binom;
        out += PolyQ::from_term(vars, {i, r - i}, c);
    }
    return out;
}

} // namespace

FieldQ theta3(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) throw DomainError("theta3 requires nonnegative exponents");
    Vars vt{2, true, false};
    PolyQ t = PolyQ::variable(vt, 2);
    PolyQ x1 = PolyQ::variable(vt, 0);
    PolyQ x2 = PolyQ::variable(vt, 1);
    PolyQ integrand = t.pow(c) * (t - x1).pow(b) * (t - x2).pow(a);
    FieldQ theta = integral_field(integrand, 2);
    if (theta.homogeneous_degree() != a + b + c + 1)
        throw Error("theta3 degree postcondition failed");
    return theta;
}

FieldQ theta_multi(const std::vector<int>& a, int b) {
    int ell = static_cast<int>(a.size());
    if (ell < 2) throw DomainError("theta_multi requires ell >= 2");
    if (b < 0) throw DomainError("theta_multi requires b >= 0");
    Vars vt{ell, true, false};
    PolyQ t = PolyQ::variable(vt, ell);
    PolyQ integrand = t.pow(b);
    long degree = b + 1;
    for (int j = 0; j < ell; ++j) {
        if (a[j] < 0) throw DomainError("theta_multi requires nonnegative exponents");
        integrand = integrand * (t - PolyQ::variable(vt, j)).pow(a[j]);
        degree += a[j];
    }
    FieldQ theta = integral_field(integrand, ell);
    if (theta.homogeneous_degree() != degree)
        throw Error("theta_multi degree postcondition failed");
    return theta;
}

namespace {

// The symmetry group of the three lines {x1, x2, x1-x2}: each element is a
// 2x2 rational substitution matrix B (acting by x -> Bx) together with the
// slot permutation it induces on the three forms.
struct ThreeLineSymmetry {
    std::array<std::array<Rational, 2>, 2> mat;
    std::array<int, 3> perm; // substitution maps form[s] to form[perm[s]]
};

std::array<Rational, 2> act_covector(const std::array<Rational, 2>& alpha,
                                     const std::array<std::array<Rational, 2>, 2>& b) {
    return {alpha[0] * b[0][0] + alpha[1] * b[1][0],
            alpha[0] * b[0][1] + alpha[1] * b[1][1]};
}

int match_slot(std::array<Rational, 2> v) {
    const std::array<std::array<Rational, 2>, 3> slots = {{{Rational(1), Rational(0)},
                                                           {Rational(0), Rational(1)},
                                                           {Rational(1), Rational(-1)}}};
    // normalize: first nonzero entry -> 1
    Rational lead = v[0].is_zero() ? v[1] : v[0];
    v = {v[0] / lead, v[1] / lead};
    for (int s = 0; s < 3; ++s)
        if (v == slots[s]) return s;
    throw Error("three-lines symmetry left the form set");
}

std::vector<ThreeLineSymmetry> three_line_symmetries() {
    using Mat = std::array<std::array<Rational, 2>, 2>;
    const Mat id = {{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}};
    const Mat swap01 = {{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}};
    const Mat swap12 = {{{Rational(1), Rational(0)}, {Rational(1), Rational(-1)}}};
    auto mul = [](const Mat& a, const Mat& b) {
        Mat c;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        return c;
    };
    auto perm_of = [](const Mat& b) {
        const std::array<std::array<Rational, 2>, 3> slots = {{{Rational(1), Rational(0)},
                                                               {Rational(0), Rational(1)},
                                                               {Rational(1), Rational(-1)}}};
        std::array<int, 3> p{};
        for (int s = 0; s < 3; ++s) p[s] = match_slot(act_covector(slots[s], b));
        return p;
    };
    std::vector<ThreeLineSymmetry> group;
    std::vector<Mat> frontier = {id};
    auto known = [&](const std::array<int, 3>& p) {
        for (const auto& g : group)
            if (g.perm == p) return true;
        return false;
    };
    while (!frontier.empty() && group.size() < 6) {
        std::vector<Mat> next;
        for (const auto& b : frontier) {
            auto p = perm_of(b);
            if (known(p)) continue;
            group.push_back({b, p});
            next.push_back(mul(swap01, b));
            next.push_back(mul(swap12, b));
        }
        frontier = std::move(next);
    }
    return group;
}

// Transport a field through the substitution x -> Bx: if delta lies in
// D(forms alpha), the result lies in D(forms alpha o B^{-1}). Components:
// g_j(x) = sum_i (B^{-1})_{ji} f_i(Bx).
FieldQ push_field(const FieldQ& f, const std::array<std::array<Rational, 2>, 2>& b) {
    Vars vars = f.vars;
    Rational det = b[0][0] * b[1][1] - b[0][1] * b[1][0];
    std::array<std::array<Rational, 2>, 2> binv = {
        {{b[1][1] / det, -b[0][1] / det}, {-b[1][0] / det, b[0][0] / det}}};
    std::vector<PolyQ> images;
    for (int v = 0; v < 2; ++v) {
        PolyQ img(vars);
        for (int w = 0; w < 2; ++w)
            if (!b[v][w].is_zero()) img += PolyQ::monomial_power(vars, w, 1, b[v][w]);
        images.push_back(img);
    }
    std::array<PolyQ, 2> subs = {f.comps[0].substitute(images), f.comps[1].substitute(images)};
    VectorField<Rational> out(vars);
    for (int j = 0; j < 2; ++j) {
        PolyQ g(vars);
        for (int i = 0; i < 2; ++i)
            if (!binv[j][i].is_zero()) g += binv[j][i] * subs[i];
        out.comps[j] = g;
    }
    return out;
}

std::array<FieldQ, 2> large_r_pair(int p, int q, int r) {
    Vars vars{2, false, false};
    FieldQ f1(vars);
    PolyQ mono = PolyQ::from_term(vars, {p, q}, Rational(1));
    f1.comps[0] = mono;
    f1.comps[1] = mono;
    FieldQ f2(vars);
    f2.comps[0] = binomial_sum(vars, r, p, r);
    f2.comps[1] = -binomial_sum(vars, r, 0, p - 1);
    return {f1, f2};
}

} // namespace

ThreeLinesBasis three_lines_basis(int p, int q, int r) {
    if (p < 0 || q < 0 || r < 0 || p + q + r < 1)
        throw DomainError("three_lines_basis needs nonnegative multiplicities, not all zero");
    ThreeLinesBasis out;
    if (r >= p + q - 1) {
        out.fields = large_r_pair(p, q, r);
        out.construction = ThreeLinesCase::large_r;
        out.sorted_p = p;
        out.sorted_q = q;
        out.sorted_r = r;
        return out;
    }
    // Move the largest multiplicity onto the difference form, build there,
    // then transport the fields back through the inverse substitution.
    const std::array<int, 3> mult = {p, q, r};
    for (const auto& g : three_line_symmetries()) {
        int sp = mult[g.perm[0]], sq = mult[g.perm[1]], sr = mult[g.perm[2]];
        if (std::max(sp, sq) > sr) continue;
        out.sorted_p = sp;
        out.sorted_q = sq;
        out.sorted_r = sr;
        std::array<FieldQ, 2> sorted_fields;
        if (sr >= sp + sq - 1) {
            sorted_fields = large_r_pair(sp, sq, sr);
            out.construction = ThreeLinesCase::large_r;
        } else if ((sp + sq + sr) % 2 == 1) {
            int a = (-sp + sq + sr - 1) / 2;
            int b = (sp - sq + sr - 1) / 2;
            int c = (sp + sq - sr - 1) / 2;
            sorted_fields = {theta3(a, b, c), theta3(a, b, c + 1)};
            out.construction = ThreeLinesCase::odd;
        } else {
            int a = (-sp + sq + sr) / 2;
            int b = (sp - sq + sr - 2) / 2;
            int c = (sp + sq - sr - 2) / 2;
            Vars vars{2, false, false};
            sorted_fields = {PolyQ::variable(vars, 0) * theta3(a, b, c),
                             PolyQ::variable(vars, 1) * theta3(a - 1, b + 1, c)};
            out.construction = ThreeLinesCase::even;
        }
        if (g.perm == std::array<int, 3>{0, 1, 2}) {
            out.fields = sorted_fields;
        } else {
            out.fields = {push_field(sorted_fields[0], g.mat),
                          push_field(sorted_fields[1], g.mat)};
        }
        return out;
    }
    throw Error("three_lines_basis: no admissible coordinate permutation");
}

std::vector<FieldQ> braid_coordinate_basis(const std::vector<int>& a, int b) {
    int ell = static_cast<int>(a.size());
    if (ell < 2) throw DomainError("braid_coordinate_basis requires ell >= 2");
    std::vector<FieldQ> fields;
    fields.reserve(ell);
    for (int j = 0; j < ell; ++j) fields.push_back(theta_multi(a, b + j));
    return fields;
}

std::vector<FieldQ> braid_basis(const std::vector<int>& a) {
    int ell = static_cast<int>(a.size());
    if (ell < 2) throw DomainError("braid_basis requires ell >= 2");
    std::vector<FieldQ> fields;
    fields.reserve(ell);
    fields.push_back(unit_sum_field<Rational>(Vars{ell, false, false}));
    for (int b = 0; b <= ell - 2; ++b) fields.push_back(theta_multi(a, b));
    return fields;
}

HmrsParams HmrsParams::create(int r, int p, int ell, int m, int k, std::vector<int> mbar) {
    if (r < 2) throw DomainError("hmrs parameters require r >= 2");
    if (p != 1 && p != r) throw DomainError("hmrs parameters require p in {1, r}");
    if (ell < 2) throw DomainError("hmrs parameters require ell >= 2");
    if (m < 0) throw DomainError("hmrs parameters require m >= 0");
    if (k < -m - 1) throw DomainError("hmrs parameters require k >= -m-1");
    if (static_cast<int>(mbar.size()) != ell)
        throw DomainError("hmrs parameters need one mbar per coordinate");
    HmrsParams params;
    params.r = r;
    params.p = p;
    params.ell = ell;
    params.m = m;
    params.k = k;
    params.mbar = std::move(mbar);
    params.a = static_cast<long>(ell - 1) * r;
    params.q = m + k;
    params.c = static_cast<long>(m) * params.a + params.q * r + 1;
    for (int v : params.mbar) {
        if (v < 0 || v > r - 1)
            throw DomainError("hmrs parameters require 0 <= mbar_i <= r-1");
        long mi = static_cast<long>(r) * (m + k) + 1 + v;
        if (mi < 0)
            throw DomainError("hmrs parameters require m_i = r(m+k)+1+mbar_i >= 0");
        params.m_i.push_back(mi);
        params.m_prime += mi;
    }
    return params;
}

PolyQ lambda_poly(int r, int ell) {
    Vars vt{ell, true, false};
    PolyQ t = PolyQ::variable(vt, ell);
    PolyQ lambda = PolyQ::constant(vt, Rational(1));
    for (int i = 0; i < ell; ++i)
        lambda = lambda * (t.pow(r) - PolyQ::variable(vt, i).pow(r));
    return lambda;
}

PolyQ lambda_i_poly(int r, int ell, int i) {
    if (i < 0 || i >= ell) throw DomainError("lambda_i index out of range");
    Vars vt{ell, true, false};
    PolyQ t = PolyQ::variable(vt, ell);
    PolyQ out = PolyQ::constant(vt, Rational(1));
    for (int j = 0; j < ell; ++j) {
        if (j == i) continue;
        out = out * (t.pow(r) - PolyQ::variable(vt, j).pow(r));
    }
    return out;
}

FieldQ eta_field(int r, int ell, int m, int u) {
    if (r < 2) throw DomainError("eta requires r >= 2");
    if (m < 0) throw DomainError("eta requires m >= 0");
    Vars vt{ell, true, false};
    PolyQ integrand = PolyQ::monomial_power(vt, ell, static_cast<long>(r) * u) *
                      lambda_poly(r, ell).pow(m);
    FieldQ f = integral_field(integrand, ell);
    if (u >= -m && !f.is_polynomial())
        throw Error("eta with u >= -m must be polynomial");
    if (f.homogeneous_degree() != static_cast<long>(r) * (ell * m + u) + 1)
        throw Error("eta degree postcondition failed");
    return f;
}

FieldQ eta(const HmrsParams& params, int u, bool with_prefactor) {
    FieldQ f = eta_field(params.r, params.ell, params.m, u);
    if (!with_prefactor) return f;
    Vars vars{params.ell, false, false};
    std::vector<int> e(params.mbar.begin(), params.mbar.end());
    PolyQ prefactor = PolyQ::from_term(vars, e, Rational(1));
    FieldQ out = prefactor * f;
    if (u == params.k && !out.is_polynomial())
        throw Error("prefactored eta at u = k must be polynomial");
    return out;
}

FieldQ sigma(const HmrsParams& params, int i) {
    if (params.m < 1) throw DomainError("sigma requires m >= 1");
    if (i < 0 || i >= params.ell) throw DomainError("sigma index out of range");
    int r = params.r, ell = params.ell;
    Vars vt{ell, true, false};
    PolyQ integrand = PolyQ::monomial_power(vt, ell, static_cast<long>(r) * (params.k + 1)) *
                      lambda_poly(r, ell).pow(params.m - 1) * lambda_i_poly(r, ell, i);
    return integral_field(integrand, ell);
}

std::vector<long> expected_exponents(const HmrsParams& params, HmrsParity parity) {
    std::vector<long> exps;
    if (parity == HmrsParity::odd) {
        exps.push_back(params.c + params.m_prime - params.ell * (params.q * params.r + 1));
        for (int j = 1; j <= params.ell - 1; ++j)
            exps.push_back(params.c + static_cast<long>(j) * params.r);
    } else {
        if (params.m < 1) throw DomainError("even exponents require m >= 1");
        for (long mi : params.m_i)
            exps.push_back(static_cast<long>(params.m) * params.a + mi);
    }
    std::sort(exps.begin(), exps.end());
    return exps;
}

std::vector<FieldQ> hmrs_basis(const HmrsParams& params, HmrsParity parity) {
    std::vector<FieldQ> fields;
    if (parity == HmrsParity::odd) {
        fields.push_back(eta(params, params.k, true));
        for (int j = 1; j <= params.ell - 1; ++j)
            fields.push_back(eta(params, params.k + j));
    } else {
        if (params.m < 1) throw DomainError("even basis requires m >= 1");
        Vars vars{params.ell, false, false};
        for (int i = 0; i < params.ell; ++i) {
            PolyQ prefactor = PolyQ::monomial_power(vars, i, params.mbar[i]);
            FieldQ f = prefactor * sigma(params, i);
            if (!f.is_polynomial() ||
                f.homogeneous_degree() != params.m_i[i] + params.m * params.a)
                throw Error("prefactored sigma degree postcondition failed");
            fields.push_back(std::move(f));
        }
    }
    return fields;
}

ArrangementC hmrs_arrangement(const HmrsParams& params, HmrsParity parity) {
    int u = parity == HmrsParity::odd ? 2 * params.m + 1 : 2 * params.m;
    if (parity == HmrsParity::even && params.m < 1)
        throw DomainError("even arrangement requires m >= 1");
    return monomial_reflection(params.r, params.p, params.ell, params.m_i, u);
}

FieldC lift_field(const FieldQ& f, int r) {
    VectorField<Cyclotomic> out(f.vars);
    for (size_t i = 0; i < f.comps.size(); ++i) out.comps[i] = to_cyclotomic(f.comps[i], r);
    return out;
}

} // namespace multider
