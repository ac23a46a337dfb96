#include "multider/rational.hpp"

#include <sstream>

namespace multider {

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    BigInt num;
    BigInt den = 1;
    try {
        if (slash == std::string::npos) {
            num = BigInt(s);
        } else {
            num = BigInt(s.substr(0, slash));
            den = BigInt(s.substr(slash + 1));
        }
    } catch (const std::runtime_error&) {
        throw ParseError("bad rational literal '" + s + "'");
    }
    if (den == 0) throw ZeroDivisor("rational with zero denominator: " + s);
    return Rational(num, den);
}

std::string Rational::to_string() const {
    std::ostringstream os;
    os << numerator();
    if (!is_integer()) os << '/' << denominator();
    return os.str();
}

} // namespace multider
