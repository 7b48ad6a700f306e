#pragma once

#include "atlas/linalg/matrix.hpp"

#include <cstdint>
#include <stdexcept>
#include <stop_token>
#include <vector>

namespace atlas::linalg {

/// Thrown from long-running eliminations when the caller requests a stop.
class Cancelled : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a nullspace candidate fails exact substitution on a path that
/// has no further fallback.
class CertificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Above this many rows, nullspaces are found mod p, lifted and certified.
inline constexpr std::size_t kModularRowThreshold = 2000;

/// Exact rank over Q.
std::size_t rank(const RationalMatrix& m, std::stop_token stop = {});

/// Basis of {v : m v = 0}, cols - rank vectors. Vector k has a 1 in the k-th
/// free column of the reduced echelon form of m and 0 in the other free
/// columns, so the result is canonical for the row space of m. Every vector is
/// checked by exact substitution before it is returned.
std::vector<RationalVector> nullspace_basis(const RationalMatrix& m, std::stop_token stop = {});

/// Rank of m reduced mod `prime`. Lower bound for rank(m).
/// Requires a prime in (2^30, 2^31); throws BadPrimeError if it divides a
/// denominator of m.
std::size_t rank_modular_probe(const RationalMatrix& m, std::uint64_t prime);

// The two nullspace routes, exposed so they can be checked against each other.

/// Fraction-free (Bareiss) elimination over Z after clearing row denominators.
std::vector<RationalVector> nullspace_basis_exact(const RationalMatrix& m, std::stop_token stop = {});

/// Candidate nullspace mod random 31-bit primes (CRT over several primes if
/// needed), rational reconstruction, exact certification; falls back to
/// nullspace_basis_exact when certification keeps failing.
std::vector<RationalVector> nullspace_basis_modular(const RationalMatrix& m, std::uint64_t seed,
                                                    std::stop_token stop = {});

/// Reduced row echelon form over Q of the given rows; zero rows are dropped.
/// `pivots`, when given, receives the pivot column of each returned row.
std::vector<RationalVector> reduced_row_echelon(std::vector<RationalVector> rows,
                                                std::vector<std::size_t>* pivots = nullptr);

Rational determinant(const RationalMatrix& m);

/// Delta_1 .. Delta_n, the leading principal minors of a square matrix.
std::vector<Rational> leading_principal_minors(const RationalMatrix& m);

enum class Definiteness { positive, negative, neither };

/// Sylvester's criterion on a symmetric matrix.
Definiteness definiteness(const RationalMatrix& symmetric);

} // namespace atlas::linalg
