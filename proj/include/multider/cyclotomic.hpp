#pragma once

#include <string>
#include <vector>

#include "multider/rational.hpp"

namespace multider {

/// Coefficients of the r-th cyclotomic polynomial Phi_r, ascending by degree.
/// Computed by dividing z^r - 1 by the product of Phi_d over proper divisors d | r.
std::vector<Rational> cyclotomic_polynomial(int r);

/// Euler totient; equals deg Phi_r.
int euler_phi(int r);

/// Element of the cyclotomic field Q(zeta_r), stored as a residue modulo
/// Phi_r(z) of length phi(r), where z stands for zeta_r = e^{2 pi i / r}.
/// Values with r == 1 are plain rationals and promote implicitly into any
/// Q(zeta_r); mixing two distinct r > 1 is a FieldMismatch.
class Cyclotomic {
public:
    Cyclotomic() : r_(1), c_{Rational(0)} {}
    Cyclotomic(long long n) : r_(1), c_{Rational(n)} {}
    Cyclotomic(const Rational& a) : r_(1), c_{a} {}

    /// Residue with explicit coefficients (length at most phi(r); reduced as given).
    Cyclotomic(int r, std::vector<Rational> coeffs);

    /// The generator zeta_r.
    static Cyclotomic zeta(int r);

    /// Embed this value into Q(zeta_r). Only rationals (r == 1) can be promoted.
    Cyclotomic promoted(int r) const;

    int conductor() const { return r_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when the residue has no z-terms beyond degree 0.
    bool is_rational() const;
    /// The degree-0 coefficient; only meaningful when is_rational().
    Rational rational_part() const { return c_.empty() ? Rational(0) : c_[0]; }

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// Inverse in the field; nonzero elements are always invertible since
    /// Phi_r is irreducible over Q.
    Cyclotomic inverse() const;

    /// Bracketed polynomial in z, e.g. "[1 - z^2]"; plain rationals print bare.
    std::string to_string() const;

private:
    int r_;
    std::vector<Rational> c_; // length phi(r_), ascending powers of z

    static void align(Cyclotomic& a, Cyclotomic& b);
};

} // namespace multider
