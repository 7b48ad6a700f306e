#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace atlas::catalog {

class UnknownGroup : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A compact Lie group (or a real form, named as such) with dimension data.
/// Simple groups carry their exponents e_i; the group then has the rational
/// cohomology of a product of spheres S^(2 e_i + 1).
struct GroupRecord {
    std::string name;
    std::string series; // Cartan type ("A5", "D8", "E7") for simple groups, else the family
    std::size_t dim = 0;
    std::size_t rank = 0;
    std::vector<std::size_t> exponents;

    bool simple() const noexcept { return !exponents.empty(); }
    friend bool operator==(const GroupRecord&, const GroupRecord&) = default;
};

/// SO(n), O(n), Spin(n) -> n(n-1)/2; SU(n) -> n^2 - 1; U(n) -> n^2;
/// Sq(n) -> n(2n+1); q(n) = Sq(n)·Sq(1) -> n(2n+1) + 3.
std::size_t classical_group_dim(std::string_view series, std::size_t n);

/// Parses labels such as "SO(10)", "Sq(3)", "E7", "U(1)", "Spin(9)" and the
/// split real forms "E6(+6)", "SO(5,5)", "SL(5,R)" (dims of a real form equal
/// those of its compact form).
GroupRecord resolve_group(std::string_view label);

/// Dimension of a product label: factors joined by 'x', each optionally
/// raised to a power, e.g. "SU(6)xSU(2)", "Sq(2)^2".
std::size_t group_dim(std::string_view product_label);

struct CheckResult {
    bool pass = false;
    std::string detail;
};

/// dim = sum (2 e_i + 1) and rank = number of exponents.
CheckResult exponents_check(const GroupRecord& g);

/// Consecutive differences read the same in both directions. Fewer than two
/// exponents pass trivially.
CheckResult palindrome_check(std::span<const std::size_t> exponents);

/// Every group the atlas refers to, plus the simple classical groups of small
/// rank. Simple entries carry exponent fixtures.
std::vector<GroupRecord> group_catalog();

} // namespace atlas::catalog
