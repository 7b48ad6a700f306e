#include "atlas/catalog/chains.hpp"

namespace atlas::catalog {

std::vector<ChainRecord> supergravity_chain()
{
    return {
        {3, "E8(+8)", "SO(16)", 120, 128, "E8 over O(16)"},
        {4, "E7(+7)", "SU(8)", 63, 70, "35 + 35 scalars"},
        {5, "E6(+6)", "Sq(4)", 36, 42, "E6 over Sq(4)"},
        {6, "SO(5,5)", "Sq(2)^2", 20, 25, "D5 over Sq(2)^2"},
        {7, "SL(5,R)", "Sq(2)", 10, 14, "A4 over Sq(2)"},
    };
}

CheckResult verify_chain(const ChainRecord& c)
{
    const std::size_t g = group_dim(c.split_group);
    const std::size_t k = group_dim(c.compact_subgroup);
    const std::size_t scalars = g - k;
    std::string detail = std::to_string(c.spacetime_dim) + "d " + c.split_group + "/" + c.compact_subgroup + ": " +
                         std::to_string(g) + " - " + std::to_string(k) + " = " + std::to_string(scalars) +
                         ", recorded " + std::to_string(c.scalar_count) + " scalars, compact dim " +
                         std::to_string(c.compact_dim);
    return {k <= g && k == c.compact_dim && scalars == c.scalar_count, std::move(detail)};
}

std::vector<SphereQuotient> sphere_quotients()
{
    return {
        {"Spin(7)", "G2", 7},
        {"Spin(9)", "Spin(7)", 15},
        {"G2", "SU(3)", 6},
    };
}

CheckResult verify_sphere(const SphereQuotient& s)
{
    const std::size_t g = group_dim(s.numerator);
    const std::size_t h = group_dim(s.denominator);
    std::string detail = s.numerator + "/" + s.denominator + " = S" + std::to_string(s.sphere_dim) + ": " +
                         std::to_string(g) + " - " + std::to_string(h);
    return {h <= g && g - h == s.sphere_dim, std::move(detail)};
}

std::vector<std::size_t> oct3_exponents()
{
    return {1, 3, 5, 7, 11};
}

} // namespace atlas::catalog
