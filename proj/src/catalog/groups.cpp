#include "atlas/catalog/groups.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>

namespace atlas::catalog {

namespace {

std::optional<std::size_t> parse_count(std::string_view s)
{
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

std::vector<std::size_t> odd_run(std::size_t count)
{
    std::vector<std::size_t> e(count);
    for (std::size_t i = 0; i < count; ++i) {
        e[i] = 2 * i + 1;
    }
    return e;
}

// Exponent fixtures by Cartan type.
std::vector<std::size_t> type_a(std::size_t r)
{
    std::vector<std::size_t> e(r);
    std::iota(e.begin(), e.end(), 1);
    return e;
}

std::vector<std::size_t> type_d(std::size_t r)
{
    auto e = odd_run(r - 1);
    e.push_back(r - 1);
    std::sort(e.begin(), e.end());
    return e;
}

GroupRecord exceptional(std::string_view name)
{
    if (name == "G2") return {"G2", "G2", 14, 2, {1, 5}};
    if (name == "F4") return {"F4", "F4", 52, 4, {1, 5, 7, 11}};
    if (name == "E6") return {"E6", "E6", 78, 6, {1, 4, 5, 7, 8, 11}};
    if (name == "E7") return {"E7", "E7", 133, 7, {1, 5, 7, 9, 11, 13, 17}};
    if (name == "E8") return {"E8", "E8", 248, 8, {1, 7, 11, 13, 17, 19, 23, 29}};
    throw UnknownGroup("unknown exceptional group '" + std::string(name) + "'");
}

GroupRecord orthogonal(std::string name, std::size_t n, bool connected)
{
    GroupRecord g{std::move(name), "orthogonal", n * (n - 1) / 2, n / 2, {}};
    if (!connected) {
        return g;
    }
    if (n == 3 || (n >= 5 && n % 2 == 1)) {
        g.series = "B" + std::to_string(n / 2);
        g.exponents = odd_run(n / 2);
    } else if (n >= 6 && n % 2 == 0) {
        g.series = "D" + std::to_string(n / 2);
        g.exponents = type_d(n / 2);
    }
    return g;
}

} // namespace

std::size_t classical_group_dim(std::string_view series, std::size_t n)
{
    if (n < 1) {
        throw std::invalid_argument("classical_group_dim: n must be at least 1");
    }
    if (series == "SO" || series == "O" || series == "Spin") return n * (n - 1) / 2;
    if (series == "SU") return n * n - 1;
    if (series == "U") return n * n;
    if (series == "Sq") return n * (2 * n + 1);
    if (series == "q") return n * (2 * n + 1) + 3;
    throw UnknownGroup("unknown classical series '" + std::string(series) + "'");
}

GroupRecord resolve_group(std::string_view label)
{
    const std::string full(label);
    if (label.size() == 2 && (label[0] == 'G' || label[0] == 'F' || label[0] == 'E')) {
        return exceptional(label);
    }
    const auto open = label.find('(');
    if (open == std::string_view::npos || label.back() != ')') {
        throw UnknownGroup("cannot resolve group label '" + full + "'");
    }
    const auto head = label.substr(0, open);
    const auto arg = label.substr(open + 1, label.size() - open - 2);

    // Split real forms of exceptional groups: E6(+6), E7(+7), E8(+8), ...
    if (head.size() == 2 && (head[0] == 'E' || head[0] == 'F' || head[0] == 'G') &&
        (arg.starts_with('+') || arg.starts_with('-'))) {
        auto g = exceptional(head);
        g.name = full;
        g.series = "real form of " + std::string(head);
        g.exponents.clear();
        return g;
    }
    if (head == "SO" && arg.find(',') != std::string_view::npos) {
        const auto comma = arg.find(',');
        const auto p = parse_count(arg.substr(0, comma));
        const auto q = parse_count(arg.substr(comma + 1));
        if (!p || !q) {
            throw UnknownGroup("cannot resolve group label '" + full + "'");
        }
        auto g = orthogonal(full, *p + *q, false);
        g.series = "real form of SO(" + std::to_string(*p + *q) + ")";
        return g;
    }
    if (head == "SL" && arg.ends_with(",R")) {
        const auto n = parse_count(arg.substr(0, arg.size() - 2));
        if (!n || *n < 2) {
            throw UnknownGroup("cannot resolve group label '" + full + "'");
        }
        return {full, "real form of SU(" + std::to_string(*n) + ")", *n * *n - 1, *n - 1, {}};
    }

    const auto n = parse_count(arg);
    if (!n || *n < 1) {
        throw UnknownGroup("cannot resolve group label '" + full + "'");
    }
    if (head == "SO" || head == "Spin") {
        return orthogonal(full, *n, true);
    }
    if (head == "O") {
        return orthogonal(full, *n, false);
    }
    if (head == "SU") {
        GroupRecord g{full, "special unitary", *n * *n - 1, *n - 1, {}};
        if (*n >= 2) {
            g.series = "A" + std::to_string(*n - 1);
            g.exponents = type_a(*n - 1);
        }
        return g;
    }
    if (head == "U") {
        return {full, "unitary", *n * *n, *n, {}};
    }
    if (head == "Sq") {
        return {full, "C" + std::to_string(*n), *n * (2 * *n + 1), *n, odd_run(*n)};
    }
    if (head == "q") {
        return {full, "symplectic", classical_group_dim("q", *n), *n + 1, {}};
    }
    throw UnknownGroup("cannot resolve group label '" + full + "'");
}

std::size_t group_dim(std::string_view product_label)
{
    std::size_t total = 0;
    std::size_t start = 0;
    while (start <= product_label.size()) {
        auto end = product_label.find('x', start);
        if (end == std::string_view::npos) {
            end = product_label.size();
        }
        auto factor = product_label.substr(start, end - start);
        std::size_t power = 1;
        if (const auto caret = factor.find('^'); caret != std::string_view::npos) {
            const auto p = parse_count(factor.substr(caret + 1));
            if (!p) {
                throw UnknownGroup("bad power in '" + std::string(product_label) + "'");
            }
            power = *p;
            factor = factor.substr(0, caret);
        }
        total += power * resolve_group(factor).dim;
        start = end + 1;
    }
    return total;
}

CheckResult exponents_check(const GroupRecord& g)
{
    if (g.exponents.empty()) {
        return {false, g.name + ": no exponents recorded"};
    }
    std::size_t sum = 0;
    for (auto e : g.exponents) {
        sum += 2 * e + 1;
    }
    const bool dim_ok = sum == g.dim;
    const bool rank_ok = g.exponents.size() == g.rank;
    std::string detail = g.name + ": sum(2e+1) = " + std::to_string(sum) + " vs dim " + std::to_string(g.dim) +
                         ", " + std::to_string(g.exponents.size()) + " exponents vs rank " +
                         std::to_string(g.rank);
    return {dim_ok && rank_ok, std::move(detail)};
}

CheckResult palindrome_check(std::span<const std::size_t> exponents)
{
    if (exponents.size() < 2) {
        return {true, "single sphere"};
    }
    std::vector<long> diffs;
    for (std::size_t i = 1; i < exponents.size(); ++i) {
        diffs.push_back(static_cast<long>(exponents[i]) - static_cast<long>(exponents[i - 1]));
    }
    std::string detail = "diffs (";
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        detail += (i ? "," : "") + std::to_string(diffs[i]);
    }
    detail += ")";
    return {std::equal(diffs.begin(), diffs.end(), diffs.rbegin()), std::move(detail)};
}

std::vector<GroupRecord> group_catalog()
{
    std::vector<GroupRecord> out;
    for (std::size_t n = 2; n <= 9; ++n) {
        out.push_back(resolve_group("SU(" + std::to_string(n) + ")"));
    }
    for (std::size_t n = 3; n <= 16; ++n) {
        if (n != 4) {
            out.push_back(resolve_group("Spin(" + std::to_string(n) + ")"));
        }
    }
    for (std::size_t n = 1; n <= 6; ++n) {
        out.push_back(resolve_group("Sq(" + std::to_string(n) + ")"));
    }
    for (const char* e : {"G2", "F4", "E6", "E7", "E8"}) {
        out.push_back(resolve_group(e));
    }
    for (const char* other : {"SO(4)", "SO(2)", "U(1)", "U(2)", "U(3)", "U(4)", "U(6)", "O(2)", "O(8)",
                              "q(1)", "E6(+6)", "E7(+7)", "E8(+8)", "SO(5,5)", "SL(5,R)"}) {
        out.push_back(resolve_group(other));
    }
    return out;
}

} // namespace atlas::catalog
