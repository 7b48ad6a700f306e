#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace atlas::linalg {

// GMP keeps mpq_class canonical (lowest terms, positive denominator, 0 = 0/1)
// as long as values are not built from raw numerator/denominator pairs; use
// make_rational() for those.
using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

Rational make_rational(const Integer& numerator, const Integer& denominator);

/// Parses "n" or "n/d" (optional leading sign on n).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

/// Number of bits in |value|; 0 for zero.
std::size_t bit_length(const Integer& value);

bool is_zero(const RationalVector& v);

} // namespace atlas::linalg
