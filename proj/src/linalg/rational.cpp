#include "atlas/linalg/rational.hpp"

#include <algorithm>

namespace atlas::linalg {

Rational make_rational(const Integer& numerator, const Integer& denominator)
{
    if (denominator == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(s));
        }
        return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

std::string to_string(const Rational& value)
{
    return value.get_str();
}

std::size_t bit_length(const Integer& value)
{
    if (value == 0) {
        return 0;
    }
    return mpz_sizeinbase(value.get_mpz_t(), 2);
}

bool is_zero(const RationalVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

} // namespace atlas::linalg
