#include "atlas/catalog/spaces.hpp"

#include <array>

namespace atlas::catalog {

namespace {

std::string num(std::size_t n)
{
    return std::to_string(n);
}

std::string join(const std::vector<std::string>& parts, std::size_t abelian_dim)
{
    std::string out;
    for (const auto& p : parts) {
        out += (out.empty() ? "" : "x") + p;
    }
    for (std::size_t i = 0; i < abelian_dim; ++i) {
        out += (out.empty() ? "" : "x") + std::string("U(1)");
    }
    return out.empty() ? "1" : out;
}

SymmetricSpaceRecord make(std::string label, std::string numerator, std::vector<std::string> denominator,
                          std::size_t abelian_dim, std::size_t dim)
{
    SymmetricSpaceRecord r;
    r.cartan_label = std::move(label);
    r.name = numerator + "/" + join(denominator, abelian_dim);
    r.numerator = std::move(numerator);
    r.denominator = std::move(denominator);
    r.abelian_dim = abelian_dim;
    r.dim = dim;
    return r;
}

void require_n(const FamilyParams& params, const std::string& label)
{
    if (params.n < 1) {
        throw InvalidFamilyParams(label + " needs n >= 1");
    }
}

void require_pq(const FamilyParams& params, const std::string& label)
{
    if (params.p < 1 || params.q < 1) {
        throw InvalidFamilyParams(label + " needs p, q >= 1");
    }
}

} // namespace

RecordReport verify_record(const SymmetricSpaceRecord& r)
{
    const std::size_t g = resolve_group(r.numerator).dim;
    std::size_t k = r.abelian_dim;
    for (const auto& part : r.denominator) {
        k += group_dim(part);
    }
    RecordReport out;
    out.stored = r.dim;
    if (k > g) {
        out.detail = r.name + ": isotropy dim " + num(k) + " exceeds dim " + r.numerator + " = " + num(g);
        out.computed = 0;
        out.delta = static_cast<long>(r.dim);
        return out;
    }
    out.computed = g - k;
    out.delta = static_cast<long>(r.dim) - static_cast<long>(out.computed);
    out.pass = out.delta == 0;
    out.detail = r.name + ": " + num(g) + " - " + num(k) + " = " + num(out.computed) + ", stored " + num(r.dim);
    if (!out.pass) {
        out.detail += " (delta " + std::to_string(out.delta) + ")";
    }
    return out;
}

std::vector<FamilyRecord> classical_families()
{
    return {
        {"AI", "SU(n)/SO(n)", "(n-1)(n+2)/2", false},
        {"CI", "Sq(n)/U(n)", "n(n+1)", false},
        {"AII", "SU(2n)/Sq(n)", "(2n+1)(n-1)", false},
        {"DIII", "SO(2n)/U(n)", "n(n-1)", false},
        {"BDI", "SO(p+q)/SO(p)xSO(q)", "pq", true},
        {"AIII", "SU(p+q)/S(U(p)xU(q))", "2pq", true},
        {"CII", "Sq(p+q)/Sq(p)xSq(q)", "4pq", true},
    };
}

std::size_t family_space_dim(const std::string& label, const FamilyParams& params)
{
    const std::size_t n = params.n;
    const std::size_t p = params.p;
    const std::size_t q = params.q;
    if (label == "AI") {
        require_n(params, label);
        return (n - 1) * (n + 2) / 2;
    }
    if (label == "CI") {
        require_n(params, label);
        return n * (n + 1);
    }
    if (label == "AII") {
        require_n(params, label);
        return (2 * n + 1) * (n - 1);
    }
    if (label == "DIII") {
        require_n(params, label);
        return n * (n - 1);
    }
    if (label == "BDI") {
        require_pq(params, label);
        return p * q;
    }
    if (label == "AIII") {
        require_pq(params, label);
        return 2 * p * q;
    }
    if (label == "CII") {
        require_pq(params, label);
        return 4 * p * q;
    }
    throw InvalidFamilyParams("unknown family label '" + label + "'");
}

SymmetricSpaceRecord family_instance(const std::string& label, const FamilyParams& params)
{
    const std::size_t dim = family_space_dim(label, params);
    const std::string n = num(params.n);
    const std::string p = num(params.p);
    const std::string q = num(params.q);
    const std::string pq = num(params.p + params.q);
    SymmetricSpaceRecord r;
    if (label == "AI") {
        r = make(label, "SU(" + n + ")", {"SO(" + n + ")"}, 0, dim);
    } else if (label == "CI") {
        r = make(label, "Sq(" + n + ")", {"U(" + n + ")"}, 0, dim);
    } else if (label == "AII") {
        r = make(label, "SU(" + num(2 * params.n) + ")", {"Sq(" + n + ")"}, 0, dim);
    } else if (label == "DIII") {
        r = make(label, "SO(" + num(2 * params.n) + ")", {"U(" + n + ")"}, 0, dim);
    } else if (label == "BDI") {
        r = make(label, "SO(" + pq + ")", {"SO(" + p + ")", "SO(" + q + ")"}, 0, dim);
    } else if (label == "AIII") {
        // S(U(p) x U(q)) = SU(p) x SU(q) x U(1)
        r = make(label, "SU(" + pq + ")", {"SU(" + p + ")", "SU(" + q + ")"}, 1, dim);
    } else {
        r = make(label, "Sq(" + pq + ")", {"Sq(" + p + ")", "Sq(" + q + ")"}, 0, dim);
    }
    r.family_params = params;
    return r;
}

std::vector<SymmetricSpaceRecord> exceptional_atlas()
{
    struct Row {
        const char* label;
        const char* numerator;
        std::vector<std::string> denominator;
        std::size_t abelian;
        std::size_t dim;
        std::size_t rank;
        const char* rank_source;
        const char* notes;
    };
    const std::array<Row, 12> rows{{
        {"G", "G2", {"SO(4)"}, 0, 8, 2, "lie-engine",
         "isotropy SO(4) = q(1); fixed algebra of the quaternion-fixing involution of O; quaternionic-plane analogue"},
        {"FI", "F4", {"Sq(3)", "Sq(1)"}, 0, 28, 4, "lie-engine",
         "isotropy q(3); fixed algebra of the quaternion-fixing involution applied entrywise to J3(O)"},
        {"FII", "F4", {"Spin(9)"}, 0, 16, 1, "lie-engine",
         "octonionic projective plane OP2; fixed algebra of conjugation by diag(-1,1,1) on J3(O)"},
        {"EI", "E6", {"Sq(4)"}, 0, 42, 6, "external",
         "split form E6(+6) over its maximal compact subgroup; 36 + 42 = 78"},
        {"EII", "E6", {"SU(6)", "SU(2)"}, 0, 40, 4, "external", "from U(6) in E6"},
        {"EIII", "E6", {"SO(10)"}, 1, 32, 2, "external", "from O(10) in E6; the U(1) factor is counted explicitly"},
        {"EIV", "E6", {"F4"}, 0, 26, 2, "external", "from F4 in E6; traceless part of J3(O)"},
        {"EV", "E7", {"SU(8)"}, 0, 70, 7, "external",
         "split form E7(+7) over its maximal compact subgroup; 63 + 70 = 133"},
        {"EVI", "E7", {"SO(12)", "Sq(1)"}, 0, 64, 4, "external", "from O(12) in E7"},
        {"EVII", "E7", {"E6"}, 1, 54, 3, "external", "from E6 in E7; the U(1) factor is counted explicitly"},
        {"EVIII", "E8", {"SO(16)"}, 0, 128, 8, "external",
         "from O(16) in E8; half-spin representation of dimension 128, 120 + 128 = 248"},
        {"EIX", "E8", {"E7", "Sq(1)"}, 0, 112, 4, "external", "from E7 in E8"},
    }};
    std::vector<SymmetricSpaceRecord> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        auto r = make(row.label, row.numerator, row.denominator, row.abelian, row.dim);
        r.rank = row.rank;
        r.rank_source = row.rank_source;
        r.notes = row.notes;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<SymmetricSpaceRecord> projective_spaces(std::size_t max_n)
{
    std::vector<SymmetricSpaceRecord> out;
    auto add = [&](SymmetricSpaceRecord r, std::optional<FamilyParams> params, std::string notes) {
        r.rank = 1;
        r.rank_source = "rank one";
        r.family_params = params;
        r.notes = std::move(notes);
        out.push_back(std::move(r));
    };
    for (std::size_t n = 1; n <= max_n; ++n) {
        const std::string s = num(n);
        const std::string s1 = num(n + 1);
        add(make("RP" + s, "SO(" + s1 + ")", {"O(" + s + ")"}, 0, n), FamilyParams{n, 1, n},
            "real projective space, BDI with p = 1");
        add(make("CP" + s, "SU(" + s1 + ")", {"U(" + s + ")"}, 0, 2 * n), FamilyParams{n, 1, n},
            "complex projective space, AIII with p = 1");
        add(make("HP" + s, "Sq(" + s1 + ")", {"Sq(" + s + ")", "Sq(1)"}, 0, 4 * n), FamilyParams{n, 1, n},
            "quaternionic projective space Sq(n+1)/q(n), CII with p = 1");
    }
    add(make("CP1", "Sq(1)", {}, 1, 2), FamilyParams{1, 1, 1}, "CP1 = S2 written as Sq(1)/U(1)");
    add(make("OP1", "Spin(9)", {"Spin(8)"}, 0, 8), std::nullopt, "octonionic projective line = S8");
    add(make("OP2", "F4", {"Spin(9)"}, 0, 16), std::nullopt, "octonionic projective plane, Cartan FII");
    return out;
}

std::vector<std::size_t> exceptional_partition(const std::vector<SymmetricSpaceRecord>& records)
{
    const std::array<const char*, 5> groups{"G2", "F4", "E6", "E7", "E8"};
    std::vector<std::size_t> counts(groups.size(), 0);
    for (const auto& r : records) {
        for (std::size_t i = 0; i < groups.size(); ++i) {
            if (r.numerator == groups[i]) {
                ++counts[i];
            }
        }
    }
    return counts;
}

} // namespace atlas::catalog
