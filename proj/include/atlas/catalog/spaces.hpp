#pragma once

#include "atlas/catalog/groups.hpp"

#include <optional>
#include <string>
#include <vector>

namespace atlas::catalog {

class InvalidFamilyParams : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// (n) for one-parameter families, (p, q) for grassmannians.
struct FamilyParams {
    std::size_t n = 0;
    std::size_t p = 0;
    std::size_t q = 0;
    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// A compact symmetric space G/K. The isotropy group K is a list of
/// non-abelian factors (group labels) plus an explicit count of U(1)
/// factors, so dim G/K = dim G - sum dim K_i - abelian_dim.
struct SymmetricSpaceRecord {
    std::string cartan_label;
    std::string name;
    std::string numerator;
    std::vector<std::string> denominator;
    std::size_t abelian_dim = 0;
    std::size_t dim = 0;
    std::optional<std::size_t> rank;
    std::string rank_source; // "lie-engine", "external", "rank one", or empty
    std::optional<FamilyParams> family_params;
    std::string notes;

    friend bool operator==(const SymmetricSpaceRecord&, const SymmetricSpaceRecord&) = default;
};

struct RecordReport {
    bool pass = false;
    std::size_t stored = 0;
    std::size_t computed = 0;
    long delta = 0; // stored - computed
    std::string detail;
};

/// Recomputes dim G - dim K from the group labels and compares with the stored
/// dimension. Throws UnknownGroup for an unresolvable label.
RecordReport verify_record(const SymmetricSpaceRecord& r);

/// The seven classical families.
struct FamilyRecord {
    std::string cartan_label;
    std::string quotient;    // in n or p, q
    std::string dim_formula; // in n or p, q
    bool two_parameter = false;
    friend bool operator==(const FamilyRecord&, const FamilyRecord&) = default;
};

std::vector<FamilyRecord> classical_families();

/// AI (n-1)(n+2)/2, CI n(n+1), AII (2n+1)(n-1), DIII n(n-1), BDI pq, AIII 2pq, CII 4pq.
std::size_t family_space_dim(const std::string& label, const FamilyParams& params);

/// The concrete quotient for a family member, e.g. AI n=3 -> SU(3)/SO(3).
SymmetricSpaceRecord family_instance(const std::string& label, const FamilyParams& params);

/// The twelve exceptional spaces, ordered G; FI, FII; EI..EIV; EV..EVII; EVIII, EIX.
std::vector<SymmetricSpaceRecord> exceptional_atlas();

/// RP^n, CP^n, HP^n for n = 1..max_n, CP^1 as Sq(1)/U(1), OP^1 and OP^2.
std::vector<SymmetricSpaceRecord> projective_spaces(std::size_t max_n = 4);

/// Number of exceptional records whose numerator is G2, F4, E6, E7, E8.
std::vector<std::size_t> exceptional_partition(const std::vector<SymmetricSpaceRecord>& records);

} // namespace atlas::catalog
