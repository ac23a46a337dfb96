#include "multider/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace multider {

namespace {

using UPoly = std::vector<Rational>; // dense, ascending, no trailing zeros

void utrim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly c(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    utrim(c);
    return c;
}

UPoly usub(UPoly a, const UPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    utrim(a);
    return a;
}

// Euclidean division over Q[z]; requires monic or general nonzero divisor.
void udivmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    q.clear();
    r = a;
    utrim(r);
    if (b.empty()) throw ZeroDivisor("univariate division by zero");
    while (r.size() >= b.size()) {
        Rational c = r.back() / b.back();
        size_t shift = r.size() - b.size();
        if (q.size() < shift + 1) q.resize(shift + 1, Rational(0));
        q[shift] += c;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        utrim(r);
        if (r.empty()) break;
    }
}

UPoly umod(const UPoly& a, const UPoly& b) {
    UPoly q, r;
    udivmod(a, b, q, r);
    return r;
}

// Extended gcd: returns g and s with s*a = g (mod b); g is a nonzero constant
// when gcd(a, b) = 1, which is the only case we use.
void uxgcd(const UPoly& a, const UPoly& b, UPoly& g, UPoly& s) {
    UPoly r0 = a, r1 = b;
    UPoly s0 = {Rational(1)}, s1 = {};
    utrim(r0);
    while (!r1.empty()) {
        UPoly q, r;
        udivmod(r0, r1, q, r);
        UPoly s2 = usub(s0, umul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    g = std::move(r0);
    s = std::move(s0);
}

std::mutex g_phi_mutex;
std::map<int, UPoly> g_phi_cache;

UPoly phi_locked(int r) {
    auto it = g_phi_cache.find(r);
    if (it != g_phi_cache.end()) return it->second;
    // z^r - 1 divided by the product of Phi_d over proper divisors d of r.
    UPoly num(r + 1, Rational(0));
    num[0] = Rational(-1);
    num[r] = Rational(1);
    UPoly den = {Rational(1)};
    for (int d = 1; d < r; ++d)
        if (r % d == 0) den = umul(den, phi_locked(d));
    UPoly q, rem;
    udivmod(num, den, q, rem);
    if (!rem.empty()) throw Error("cyclotomic polynomial division left a remainder");
    g_phi_cache.emplace(r, q);
    return q;
}

UPoly phi(int r) {
    if (r < 1) throw DomainError("cyclotomic_polynomial requires r >= 1");
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    return phi_locked(r);
}

} // namespace

std::vector<Rational> cyclotomic_polynomial(int r) { return phi(r); }

int euler_phi(int r) { return static_cast<int>(phi(r).size()) - 1; }

Cyclotomic::Cyclotomic(int r, std::vector<Rational> coeffs) : r_(r) {
    if (r < 1) throw DomainError("cyclotomic conductor must be >= 1");
    UPoly p = std::move(coeffs);
    utrim(p);
    p = umod(p, phi(r));
    p.resize(euler_phi(r), Rational(0));
    c_ = std::move(p);
    if (c_.empty()) c_.push_back(Rational(0));
}

Cyclotomic Cyclotomic::zeta(int r) {
    if (r < 1) throw DomainError("zeta requires r >= 1");
    std::vector<Rational> c(2, Rational(0));
    c[1] = Rational(1);
    return Cyclotomic(r, std::move(c));
}

Cyclotomic Cyclotomic::promoted(int r) const {
    if (r_ == r) return *this;
    if (r_ != 1) throw FieldMismatch("cannot embed Q(zeta_" + std::to_string(r_) +
                                     ") into Q(zeta_" + std::to_string(r) + ")");
    return Cyclotomic(r, {rational_part()});
}

void Cyclotomic::align(Cyclotomic& a, Cyclotomic& b) {
    if (a.r_ == b.r_) return;
    if (a.r_ == 1) { a = a.promoted(b.r_); return; }
    if (b.r_ == 1) { b = b.promoted(a.r_); return; }
    throw FieldMismatch("mixed cyclotomic fields Q(zeta_" + std::to_string(a.r_) +
                        ") and Q(zeta_" + std::to_string(b.r_) + ")");
}

bool Cyclotomic::is_zero() const {
    for (const auto& a : c_)
        if (!a.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_one() const {
    if (c_.empty() || !c_[0].is_one()) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& a : out.c_) a = -a;
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    Cyclotomic rhs = o;
    align(*this, rhs);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    Cyclotomic rhs = o;
    align(*this, rhs);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    Cyclotomic rhs = o;
    align(*this, rhs);
    if (r_ == 1) {
        c_[0] *= rhs.c_[0];
        return *this;
    }
    UPoly prod = umul(c_, rhs.c_);
    *this = Cyclotomic(r_, std::move(prod));
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
    Cyclotomic rhs = o;
    align(*this, rhs);
    return *this *= rhs.inverse();
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw ZeroDivisor("inverse of zero cyclotomic element");
    if (r_ == 1) return Cyclotomic(c_[0].inverse());
    UPoly a = c_;
    utrim(a);
    UPoly g, s;
    uxgcd(a, phi(r_), g, s);
    if (g.size() != 1) throw Error("cyclotomic inverse: gcd with Phi_r not constant");
    Rational inv = g[0].inverse();
    for (auto& x : s) x *= inv;
    return Cyclotomic(r_, std::move(s));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic x = a, y = b;
    if (x.r_ != y.r_) {
        if (x.is_rational() && y.is_rational())
            return x.rational_part() == y.rational_part();
        try {
            Cyclotomic::align(x, y);
        } catch (const FieldMismatch&) {
            return false;
        }
    }
    return x.c_ == y.c_;
}

std::string Cyclotomic::to_string() const {
    if (is_rational()) return rational_part().to_string();
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Rational a = c_[i];
        if (first) {
            if (a.sign() < 0) { os << '-'; a = -a; }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool unit = a.is_one() && i > 0;
        if (!unit) os << a.to_string();
        if (i > 0) {
            if (!unit) os << '*';
            os << 'z';
            if (i > 1) os << '^' << i;
        }
    }
    if (first) os << '0';
    os << ']';
    return os.str();
}

} // namespace multider
