#include "trackcut/rational.hpp"

#include <stdexcept>

namespace trackcut {

std::string to_fraction_string(const Rational& value) {
    return boost::multiprecision::numerator(value).str() + "/" +
           boost::multiprecision::denominator(value).str();
}

Rational parse_fraction(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("empty rational");
    }
    const auto slash = text.find('/');
    auto parse_int = [&](const std::string& part) {
        if (part.empty() || part.find_first_not_of("+-0123456789") != std::string::npos) {
            throw std::invalid_argument("malformed rational '" + text + "'");
        }
        return Integer(part);
    };
    if (slash == std::string::npos) {
        return Rational(parse_int(text));
    }
    const Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + text + "'");
    }
    return Rational(parse_int(text.substr(0, slash)), den);
}

Integer floor_of(const Rational& value) {
    const Integer& num = boost::multiprecision::numerator(value);
    const Integer& den = boost::multiprecision::denominator(value);
    Integer q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) {
        q -= 1;
    }
    return q;
}

Rational fractional_part(const Rational& value) {
    return value - Rational(floor_of(value));
}

bool is_integral(const Rational& value) {
    return boost::multiprecision::denominator(value) == 1;
}

}  // namespace trackcut
