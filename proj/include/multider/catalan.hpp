#pragma once

#include <string>
#include <vector>

#include "multider/derivation.hpp"

namespace multider {

/// f^m_i(x, y) = int_0^x t^{2i} (t^2-x^2)^m (t^2-y^2)^m dt, with the
/// coefficients c_k of its shape sum_k c_k x^{4m+2i+1-2k} y^{2k} extracted
/// from the monic normal form (so c_0 = 1).
struct FmiPoly {
    int m = 0;
    int i = 0;
    PolyQ poly;                   // the exact integral, over {x1, x2}
    std::vector<Rational> coeffs; // c_0..c_m of the normalized form
};

FmiPoly f_poly(int m, int i);

/// Falling power prod_{j=0..n-1} (var + base_shift - j) or rising power
/// prod_{j=0..n-1} (var + base_shift + j); n = 0 gives 1.
PolyQ shifted_power(const Rational& base_shift, int var, int n, bool falling, Vars vars);

/// The deformation sum_k c_k (x+p-k)^{falling 2p+1-2k} (y+p-m)^{falling k}
/// (y-p+m)^{rising k} with p = 2m+i, built from the normalized coefficients.
PolyQ deform(const FmiPoly& f);

struct ConjectureResult {
    int m = 0;
    int i = 0;
    bool x_div = false;   // prod_{k=-m..m} (x-k) divides ftilde(x,y)
    bool sum_div = false; // prod (x+y-k) divides ftilde(x,y)+ftilde(y,x)
    bool diff_div = false; // prod (x-y-k) divides ftilde(x,y)-ftilde(y,x)
    bool all() const { return x_div && sum_div && diff_div; }
};

/// Exact divisibility checks behind the conjecture; false results are
/// findings, not errors.
ConjectureResult conjecture_check(int m, int i);

struct CatalanBasisResult {
    bool preconditions_ok = false;
    std::vector<std::string> failed_preconditions;
    bool affine_member[2] = {false, false}; // deformed eta_0, eta_1 in Cat(B2, m)
    FreenessReport report;                  // coned verification with the Euler field
};

/// Builds the deformed fields from f^m_0 and f^m_1, checks affine membership
/// in Cat(B2, m), homogenizes to degrees 4m+1 and 4m+3, appends the Euler
/// field of the cone, and verifies the Saito-Ziegler criterion there.
CatalanBasisResult catalan_basis_check(int m);

} // namespace multider
