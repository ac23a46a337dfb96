#pragma once

#include <string>
#include <vector>

#include "multider/basis.hpp"

namespace multider {

/// Basic invariants of the monomial group G(r, p, l), p in {1, r}:
/// P_i = (-1)^i e_i(x_1^r, ..., x_l^r) for i < l and P_l = (x_1...x_l)^{r/p}.
struct BasicInvariants {
    int r = 2;
    int p = 1;
    int ell = 2;
    std::vector<PolyQ> P; // size ell, over Vars{ell}

    /// 0-based index of the invariant the primitive derivation differentiates
    /// by: P_l for p = 1, P_{l-1} for p = r.
    int primitive_index() const { return p == 1 ? ell - 1 : ell - 2; }

    /// Jacobian determinant det(dP_i / dx_j).
    PolyQ jacobian() const;
};

BasicInvariants make_basic_invariants(int r, int p, int ell);

/// Verifies (i) the lambda-coefficient expansion
/// lambda(t) = t^{rl} + sum_i P_i t^{r(l-i)} + (-1)^l P_l^p, exactly, and
/// (ii) the Jacobian identity det(dP_i/dx_j) = (x_1...x_l)^{r/p-1}
/// prod_{i<j} (x_i^r - x_j^r) up to a nonzero constant.
bool invariant_identities_check(int r, int p, int ell);

/// The primitive derivation D = d/dP_index applied to f, via the determinant
/// formula with the derivative column of f in the primitive position; the
/// Jacobian must divide the determinant exactly, else NotPolynomialImage.
PolyQ primitive_apply(const BasicInvariants& inv, const PolyQ& f);

/// Componentwise primitive derivative: nabla_D (sum f_i d_i) = sum (D f_i) d_i.
FieldQ nabla_D(const BasicInvariants& inv, const FieldQ& eta);

/// Dual-basis property: D P_j equals 1 at the primitive index and 0 elsewhere.
bool dual_basis_check(const BasicInvariants& inv);

/// The lambda-derivative law, exactly: applying D to every t-coefficient of
/// lambda^m gives (-1)^l m lambda^{m-1} when p = 1 and m t^r lambda^{m-1}
/// when p = r.
bool lambda_derivative_law(int r, int p, int ell, int m);

struct PrimitiveRelation {
    std::string description;
    bool holds = false;
    std::string constant; // eta-side proportionality constant when it holds
};

struct PrimitiveRelationReport {
    std::vector<PrimitiveRelation> relations;
    bool all_hold = true;
};

/// Checks the proportionalities nabla_D eta_u^m = c * eta_u^{m-1} (p = 1)
/// resp. nabla_D eta_u^m = c * eta_{u+1}^{m-1} (p = r) over 1 <= m <= m_max
/// and the u-range of the corresponding basis, plus, for p = r, the
/// P_l^{r-1}-prefactored relation.
PrimitiveRelationReport verify_primitive_relations(int r, int p, int ell, int m_max);

} // namespace multider
