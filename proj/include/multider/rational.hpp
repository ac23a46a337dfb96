#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "multider/errors.hpp"

namespace multider {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Kept in lowest terms with a positive denominator
/// (the backing boost::multiprecision::cpp_rational maintains both).
class Rational {
public:
    Rational() = default;
    Rational(long long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw ZeroDivisor("rational with zero denominator");
        v_ = boost::multiprecision::cpp_rational(num, den);
    }

    static Rational from_string(const std::string& s);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ZeroDivisor("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational inverse() const {
        if (is_zero()) throw ZeroDivisor("inverse of zero");
        return Rational(1) / *this;
    }

    /// "3", "-7/2"
    std::string to_string() const;

private:
    explicit Rational(const boost::multiprecision::cpp_rational& v) : v_(v) {}
    boost::multiprecision::cpp_rational v_;
};

} // namespace multider
