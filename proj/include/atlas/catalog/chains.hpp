#pragma once

#include "atlas/catalog/groups.hpp"

#include <string>
#include <vector>

namespace atlas::catalog {

/// Maximal supergravity in d dimensions: scalars parametrize the split group
/// over its maximal compact subgroup.
struct ChainRecord {
    std::size_t spacetime_dim = 0;
    std::string split_group;
    std::string compact_subgroup;
    std::size_t compact_dim = 0;  // recorded maximal-compact dimension
    std::size_t scalar_count = 0; // recorded
    std::string notes;
    friend bool operator==(const ChainRecord&, const ChainRecord&) = default;
};

std::vector<ChainRecord> supergravity_chain();

/// Recomputes dim G - dim K from the labels and compares with both recorded
/// counts.
CheckResult verify_chain(const ChainRecord& c);

/// A homogeneous sphere G/H = S^n, checked as dim G - dim H = n.
struct SphereQuotient {
    std::string numerator;
    std::string denominator;
    std::size_t sphere_dim = 0;
};

std::vector<SphereQuotient> sphere_quotients();

CheckResult verify_sphere(const SphereQuotient& s);

/// Exponents a putative compact group Oct(3) would carry.
std::vector<std::size_t> oct3_exponents();

} // namespace atlas::catalog
