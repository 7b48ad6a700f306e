#include "atlas/catalog/groups.hpp"

#include <doctest.h>

using namespace atlas::catalog;

TEST_CASE("classical group dimensions")
{
    CHECK(classical_group_dim("Sq", 3) == 21);
    CHECK(classical_group_dim("Sq", 1) == 3);
    CHECK(classical_group_dim("Spin", 9) == 36);
    CHECK(classical_group_dim("SO", 4) == 6);
    CHECK(classical_group_dim("SU", 8) == 63);
    CHECK(classical_group_dim("U", 6) == 36);
    CHECK(classical_group_dim("q", 3) == 24);
    CHECK_THROWS_AS(classical_group_dim("XY", 3), UnknownGroup);
    CHECK_THROWS(classical_group_dim("SO", 0));
}

TEST_CASE("quotient dimensions from group dims")
{
    CHECK(resolve_group("F4").dim - group_dim("Sq(3)xSq(1)") == 28);
    CHECK(resolve_group("F4").dim - resolve_group("Spin(9)").dim == 16);
    CHECK(resolve_group("G2").dim - resolve_group("SO(4)").dim == 8);
}

TEST_CASE("label resolution")
{
    CHECK(resolve_group("E7").dim == 133);
    CHECK(resolve_group("E6(+6)").dim == 78);
    CHECK(resolve_group("E6(+6)").exponents.empty());
    CHECK(resolve_group("SO(5,5)").dim == 45);
    CHECK(resolve_group("SL(5,R)").dim == 24);
    CHECK(resolve_group("O(8)").dim == 28);
    CHECK_FALSE(resolve_group("O(8)").simple());
    CHECK(resolve_group("U(1)").dim == 1);
    CHECK(group_dim("Sq(2)^2") == 20);
    CHECK(group_dim("SU(6)xSU(2)") == 38);
    for (const char* bad : {"", "E9", "SO(x)", "SO(3", "Foo(3)", "Sq(2)^x", "SL(1,R)"}) {
        CHECK_THROWS_AS(group_dim(bad), UnknownGroup);
    }
}

TEST_CASE("exponent checks")
{
    const auto spin10 = resolve_group("Spin(10)");
    CHECK(spin10.exponents == std::vector<std::size_t>{1, 3, 4, 5, 7});
    CHECK(exponents_check(spin10).pass);
    CHECK(exponents_check(resolve_group("F4")).pass);
    CHECK(exponents_check(resolve_group("SU(2)")).pass);
    CHECK_FALSE(exponents_check(resolve_group("U(3)")).pass);
    GroupRecord wrong{"X", "test", 10, 2, {1, 2}};
    CHECK_FALSE(exponents_check(wrong).pass);
}

TEST_CASE("palindromes")
{
    const std::vector<std::size_t> spin10{1, 3, 4, 5, 7};
    const std::vector<std::size_t> oct3{1, 3, 5, 7, 11};
    const std::vector<std::size_t> f4{1, 5, 7, 11};
    CHECK(palindrome_check(spin10).pass);
    CHECK(palindrome_check(spin10).detail == "diffs (2,1,1,2)");
    CHECK_FALSE(palindrome_check(oct3).pass);
    CHECK(palindrome_check(oct3).detail == "diffs (2,2,2,4)");
    CHECK(palindrome_check(f4).pass);
    CHECK(palindrome_check(std::vector<std::size_t>{1}).pass);
    CHECK(palindrome_check(std::vector<std::size_t>{}).pass);
}

TEST_CASE("every simple group in the catalog passes both exponent checks")
{
    std::size_t simple = 0;
    for (const auto& g : group_catalog()) {
        if (!g.simple()) {
            continue;
        }
        ++simple;
        CHECK_MESSAGE(exponents_check(g).pass, g.name);
        CHECK_MESSAGE(palindrome_check(g.exponents).pass, g.name);
    }
    CHECK(simple >= 30);
}
