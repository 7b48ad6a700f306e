#pragma once

#include "atlas/linalg/rational.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>

namespace atlas::linalg {

/// Raised when a probe prime divides an entry denominator; pick another prime.
class BadPrimeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline constexpr std::uint64_t kMinProbePrime = std::uint64_t{1} << 30;
inline constexpr std::uint64_t kMaxProbePrime = std::uint64_t{1} << 31;

bool is_prime(std::uint64_t n);

/// Uniformly random prime in (2^30, 2^31).
std::uint64_t random_probe_prime(std::mt19937_64& rng);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

/// Image of a rational in Z/p. Throws BadPrimeError if p divides the denominator.
std::uint64_t reduce_mod(const Rational& value, std::uint64_t p);
std::uint64_t reduce_mod(const Integer& value, std::uint64_t p);

/// Smallest n/d with n = d*residue (mod modulus), |n|, d <= sqrt(modulus/2).
/// Empty when no such fraction exists.
std::optional<Rational> rational_reconstruct(const Integer& residue, const Integer& modulus);

} // namespace atlas::linalg
