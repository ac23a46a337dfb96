#pragma once

#include <array>
#include <vector>

#include "multider/calculus.hpp"
#include "multider/derivation.hpp"

namespace multider {

/// theta_{a,b,c}: components int^{x_i} t^c (t-x1)^b (t-x2)^a dt for i = 1, 2.
/// Degree a+b+c+1; lies in D(A, m) for Q = x1^{b+c+1} x2^{a+c+1} (x1-x2)^{a+b+1}.
FieldQ theta3(int a, int b, int c);

/// theta_{a_1..a_l, b}: components int^{x_i} t^b prod_j (t-x_j)^{a_j} dt.
FieldQ theta_multi(const std::vector<int>& a, int b);

enum class ThreeLinesCase { large_r, odd, even };

struct ThreeLinesBasis {
    std::array<FieldQ, 2> fields;
    ThreeLinesCase construction;
    // Multiplicities actually used for the construction (after moving the
    // largest one onto the difference form); identity when no move was needed.
    int sorted_p = 0, sorted_q = 0, sorted_r = 0;
};

/// Basis of D(A, m) for the three-lines multiarrangement x1^p x2^q (x1-x2)^r.
/// Uses the explicit pair when r >= p+q-1, otherwise the integral pair of the
/// appropriate parity, constructed in sorted coordinates and mapped back.
ThreeLinesBasis three_lines_basis(int p, int q, int r);

/// Basis theta_{a,b}, ..., theta_{a,b+l-1} of the coordinate-braid
/// multiarrangement prod x_i^{a_i+b+1} prod (x_i-x_j)^{a_i+a_j+1}.
std::vector<FieldQ> braid_coordinate_basis(const std::vector<int>& a, int b);

/// Basis E, theta_{a,0}, ..., theta_{a,l-2} of the braid multiarrangement
/// prod (x_i-x_j)^{a_i+a_j+1}, with E the unit-sum field.
std::vector<FieldQ> braid_basis(const std::vector<int>& a);

/// Parameters of the free reflection multiarrangements: m >= 0 half-
/// multiplicity, k >= -m-1 shift, 0 <= mbar_i <= r-1 residues, and the
/// derived m_i = r(m+k)+1+mbar_i >= 0, a = (l-1)r, m' = sum m_i, q = m+k,
/// c = ma+qr+1.
struct HmrsParams {
    int r = 2;
    int p = 1;
    int ell = 2;
    int m = 0;
    int k = 0;
    std::vector<int> mbar;

    std::vector<long> m_i;
    long a = 0;
    long m_prime = 0;
    long q = 0;
    long c = 0;

    static HmrsParams create(int r, int p, int ell, int m, int k, std::vector<int> mbar);
};

/// lambda(t) = prod_i (t^r - x_i^r) over {x1..xl, t}.
PolyQ lambda_poly(int r, int ell);

/// lambda_i(t) = lambda(t) / (t^r - x_i^r), built directly as a product.
PolyQ lambda_i_poly(int r, int ell, int i);

/// eta_u^m = sum_i (int^{x_i} t^{ru} lambda^m dt) d_i. May be a Laurent field
/// when u < -m; polynomial whenever u >= -m.
FieldQ eta_field(int r, int ell, int m, int u);

/// eta_u^m for the given parameters, optionally multiplied by the monomial
/// prod x_i^{mbar_i} that makes the u = k case polynomial.
FieldQ eta(const HmrsParams& params, int u, bool with_prefactor = false);

/// sigma_i^m = sum_j (int^{x_j} t^{r(k+1)} lambda^{m-1} lambda_i dt) d_j.
/// Requires m >= 1.
FieldQ sigma(const HmrsParams& params, int i);

enum class HmrsParity { odd, even };

/// Exponents claimed for the odd (u = 2m+1) and even (u = 2m) families,
/// sorted ascending.
std::vector<long> expected_exponents(const HmrsParams& params, HmrsParity parity);

/// The candidate basis: odd gives (prod x_i^{mbar_i}) eta_k, eta_{k+1}, ...,
/// eta_{k+l-1}; even gives x_i^{mbar_i} sigma_i (m >= 1).
std::vector<FieldQ> hmrs_basis(const HmrsParams& params, HmrsParity parity);

/// The arrangement the parity family lives on: reflection forms with
/// multiplicity 2m+1 (odd) or 2m (even) and coordinates with m_i.
ArrangementC hmrs_arrangement(const HmrsParams& params, HmrsParity parity);

/// Lift a rational vector field into Q(zeta_r) coefficients.
FieldC lift_field(const FieldQ& f, int r);

} // namespace multider
