#include "atlas/catalog/spaces.hpp"

#include <doctest.h>

#include <set>

using namespace atlas::catalog;

TEST_CASE("family dimensions")
{
    CHECK(family_space_dim("AI", {3, 0, 0}) == 5);
    CHECK(family_space_dim("CII", {0, 1, 1}) == 4);
    CHECK(group_dim("Sq(2)") - group_dim("Sq(1)^2") == 4);
    for (std::size_t n = 1; n <= 10; ++n) {
        CHECK(family_space_dim("BDI", {0, 1, n}) == n);
        CHECK(group_dim("SO(" + std::to_string(n + 1) + ")") - group_dim("SO(" + std::to_string(n) + ")") == n);
    }
    CHECK_THROWS_AS(family_space_dim("XI", {1, 0, 0}), InvalidFamilyParams);
    CHECK_THROWS_AS(family_space_dim("AI", {0, 0, 0}), InvalidFamilyParams);
    CHECK_THROWS_AS(family_space_dim("BDI", {3, 0, 2}), InvalidFamilyParams);
}

TEST_CASE("property: family formulas equal dim G - dim K")
{
    for (const auto& f : classical_families()) {
        for (std::size_t a = 1; a <= 7; ++a) {
            for (std::size_t b = 1; b <= (f.two_parameter ? 7u : 1u); ++b) {
                const FamilyParams params = f.two_parameter ? FamilyParams{0, a, b} : FamilyParams{a + 1, 0, 0};
                const auto r = family_instance(f.cartan_label, params);
                const auto rep = verify_record(r);
                CHECK_MESSAGE(rep.pass, rep.detail);
                CHECK(r.family_params == params);
            }
        }
    }
}

TEST_CASE("the exceptional atlas")
{
    const auto records = exceptional_atlas();
    REQUIRE(records.size() == 12);
    CHECK(exceptional_partition(records) == std::vector<std::size_t>{1, 2, 4, 3, 2});
    std::set<std::string> labels;
    for (const auto& r : records) {
        labels.insert(r.cartan_label);
        const auto rep = verify_record(r);
        CHECK_MESSAGE(rep.pass, rep.detail);
        CHECK(rep.delta == 0);
        REQUIRE(r.rank.has_value());
        CHECK(*r.rank <= resolve_group(r.numerator).rank);
    }
    CHECK(labels.size() == 12);
    auto dim_of = [&](const std::string& label) {
        for (const auto& r : records) {
            if (r.cartan_label == label) {
                return r.dim;
            }
        }
        return std::size_t{0};
    };
    const std::vector<std::pair<const char*, std::size_t>> dims{{"EIV", 26}, {"EII", 40},  {"EIII", 32},
                                                                {"EVII", 54}, {"EVI", 64}, {"EIX", 112},
                                                                {"EVIII", 128}, {"EI", 42}, {"EV", 70},
                                                                {"G", 8},      {"FI", 28}, {"FII", 16}};
    for (const auto& [label, dim] : dims) {
        CHECK_MESSAGE(dim_of(label) == dim, label);
    }
}

TEST_CASE("verify_record details")
{
    auto records = exceptional_atlas();
    const auto& eviii = records.at(10);
    CHECK(eviii.cartan_label == "EVIII");
    const auto rep = verify_record(eviii);
    CHECK(rep.computed == 128);
    auto ev = records.at(7);
    CHECK(verify_record(ev).computed == 70);
    ev.dim = 71;
    const auto bad = verify_record(ev);
    CHECK_FALSE(bad.pass);
    CHECK(bad.delta == 1);
    CHECK(bad.detail.find("delta 1") != std::string::npos);
    ev.denominator = {"Nope(3)"};
    CHECK_THROWS_AS(verify_record(ev), UnknownGroup);
    ev.denominator = {"E8"};
    CHECK_FALSE(verify_record(ev).pass);
}

TEST_CASE("projective spaces")
{
    bool saw_op1 = false;
    bool saw_op2 = false;
    bool saw_sq1 = false;
    for (const auto& r : projective_spaces()) {
        const auto rep = verify_record(r);
        CHECK_MESSAGE(rep.pass, rep.detail);
        CHECK(r.rank == std::optional<std::size_t>{1});
        if (r.cartan_label == "OP1") {
            saw_op1 = rep.computed == 8;
        }
        if (r.cartan_label == "OP2") {
            saw_op2 = rep.computed == 16;
        }
        if (r.numerator == "Sq(1)") {
            saw_sq1 = rep.computed == 2;
        }
    }
    CHECK(saw_op1);
    CHECK(saw_op2);
    CHECK(saw_sq1);
    CHECK(projective_spaces(2).size() == 9);
}
