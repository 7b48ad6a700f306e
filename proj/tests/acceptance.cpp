// Acceptance run: one line per criterion, exit 0 iff all pass.
// Usage: acceptance <path-to-atlas> <golden-dir>

#include "atlas/catalog/chains.hpp"
#include "atlas/catalog/magic_square.hpp"
#include "atlas/catalog/spaces.hpp"
#include "atlas/jordan/jordan.hpp"
#include "atlas/lie/cartan.hpp"
#include "atlas/lie/derivations.hpp"
#include "atlas/linalg/elimination.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <iostream>
#include <sstream>

namespace {

using namespace atlas;
using Clock = std::chrono::steady_clock;

// Pinned limits, seconds.
constexpr double kCompositionLimit = 5;
constexpr double kDerOctonionLimit = 10;
constexpr double kDerJ3OLimit = 300;
constexpr double kJordanLimit = 30;
constexpr double kVerifyAllLimit = 300;

constexpr std::size_t kCompositionPairs = 1000;
constexpr std::size_t kJordanPairs = 500;
constexpr std::size_t kRankTrials = 5;
constexpr std::uint64_t kSeed = 1;

struct Verdict {
    bool pass = false;
    std::string detail;
};

double since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double seconds)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", seconds);
    return buf;
}

struct Captured {
    int code = -1;
    std::string out;
};

Captured capture(const std::string& command)
{
    Captured c;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (!pipe) {
        return c;
    }
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
        c.out.append(buf, n);
    }
    const int status = ::pclose(pipe);
    c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return c;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::optional<lie::LieAlgebraBasis> der_o;
std::optional<lie::LieAlgebraBasis> der_j3o;

Verdict composition_law()
{
    const auto start = Clock::now();
    std::size_t held = 0;
    std::size_t total = 0;
    for (const char* name : {"R", "C", "H", "O"}) {
        const auto k = composition::algebra_by_name(name);
        composition::ElementSampler s(kSeed + k->dim());
        for (std::size_t t = 0; t < kCompositionPairs; ++t) {
            const auto x = s.element(k);
            const auto y = s.element(k);
            held += composition::norm(x * y) == composition::norm(x) * composition::norm(y);
            ++total;
        }
    }
    const auto [x, y] = composition::sedenion_composition_witness();
    const bool violated = composition::norm(x * y) != composition::norm(x) * composition::norm(y);
    const double t = since(start);
    return {held == total && violated && t < kCompositionLimit,
            std::to_string(held) + "/" + std::to_string(total) + " pairs, sedenion witness " +
                (violated ? "violates" : "holds") + ", " + fmt(t) + " < " + fmt(kCompositionLimit)};
}

bool certified(const composition::StructureTable& table, const lie::LieAlgebraBasis& l)
{
    for (const auto& d : l.basis()) {
        if (!lie::is_derivation(table, d)) {
            return false;
        }
    }
    return true;
}

Verdict derivation_dims()
{
    const auto c = lie::derivation_algebra(*composition::complexes());
    const auto h = lie::derivation_algebra(*composition::quaternions());
    auto start = Clock::now();
    der_o = lie::derivation_algebra(*composition::octonions());
    const double t_o = since(start);
    start = Clock::now();
    der_j3o = lie::derivation_algebra(*jordan::j3("O"));
    const double t_j = since(start);
    const bool ok = c.dim() == 0 && h.dim() == 3 && der_o->dim() == 14 && der_j3o->dim() == 52 &&
                    certified(composition::quaternions()->table(), h) &&
                    certified(composition::octonions()->table(), *der_o) &&
                    certified(jordan::j3("O")->table(), *der_j3o) && t_o < kDerOctonionLimit && t_j < kDerJ3OLimit;
    return {ok, "C " + std::to_string(c.dim()) + ", H " + std::to_string(h.dim()) + ", O " +
                    std::to_string(der_o->dim()) + " (" + fmt(t_o) + "), J3(O) " + std::to_string(der_j3o->dim()) +
                    " (" + fmt(t_j) + ")"};
}

Verdict generic_ranks()
{
    if (!der_o || !der_j3o) {
        return {false, "derivation algebras unavailable"};
    }
    const auto ro = lie::generic_rank(*der_o, kRankTrials, kSeed);
    const auto rj = lie::generic_rank(*der_j3o, kRankTrials, kSeed);
    return {ro == 2 && rj == 4, "Der(O) " + std::to_string(ro) + ", Der(J3(O)) " + std::to_string(rj)};
}

// theta [x, y] = sign [x, y] for every x in xs, y in ys.
bool bracket_eigen(const lie::LieAlgebraBasis& l, const linalg::RationalMatrix& theta,
                   const std::vector<linalg::RationalVector>& xs, const std::vector<linalg::RationalVector>& ys,
                   int sign)
{
    for (const auto& x : xs) {
        for (const auto& y : ys) {
            const auto b = l.bracket(x, y);
            for (std::size_t i = 0; i < b.size(); ++i) {
                linalg::Rational t = 0;
                for (std::size_t j = 0; j < b.size(); ++j) {
                    t += theta(i, j) * b[j];
                }
                if (t != sign * b[i]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool inclusions(const lie::LieAlgebraBasis& l, const linalg::RationalMatrix& theta, const lie::CartanPair& c)
{
    return bracket_eigen(l, theta, c.k_basis, c.k_basis, 1) && bracket_eigen(l, theta, c.k_basis, c.p_basis, -1) &&
           bracket_eigen(l, theta, c.p_basis, c.p_basis, 1);
}

Verdict cartan_splits()
{
    if (!der_o || !der_j3o) {
        return {false, "derivation algebras unavailable"};
    }
    const auto theta_g =
        lie::induced_involution(lie::quaternion_fixing_involution(composition::octonions()->table()), *der_o);
    const auto theta_f =
        lie::induced_involution(lie::diagonal_sign_involution(jordan::j3("O")->table()), *der_j3o);
    const auto g = lie::cartan_split(*der_o, theta_g);
    const auto f = lie::cartan_split(*der_j3o, theta_f);
    const bool incl = inclusions(*der_o, theta_g, g) && inclusions(*der_j3o, theta_f, f);
    const bool ok = g.dim_k == 6 && g.dim_p == 8 && g.pp_spans_k() && f.dim_k == 36 && f.dim_p == 16 &&
                    f.pp_spans_k() && incl;
    return {ok, "g2 (" + std::to_string(g.dim_k) + ", " + std::to_string(g.dim_p) + "), f4 (" +
                    std::to_string(f.dim_k) + ", " + std::to_string(f.dim_p) + "), bracket inclusions " +
                    (incl ? "hold" : "fail") + ", [p,p] spans k: " + (g.pp_spans_k() && f.pp_spans_k() ? "yes" : "no")};
}

Verdict magic_square()
{
    const auto sq = catalog::magic_square_level3(catalog::compute_derivation_dims());
    const std::array<std::array<std::size_t, 4>, 4> expected{{
        {3, 8, 21, 52},
        {8, 16, 35, 78},
        {21, 35, 66, 133},
        {52, 78, 133, 248},
    }};
    const auto dims = catalog::dimension_matrix(sq);
    const bool labels = sq[3][0].group_label == "F4" && sq[3][1].group_label == "E6" &&
                        sq[3][2].group_label == "E7" && sq[3][3].group_label == "E8";
    const bool split = sq[3][3].lie_dim == catalog::group_dim("SO(16)") + 128;
    std::string row;
    for (auto d : dims[3]) {
        row += (row.empty() ? "" : ",") + std::to_string(d);
    }
    return {dims == expected && catalog::is_symmetric(sq) && labels && split,
            "bottom row (" + row + "), symmetric " + (catalog::is_symmetric(sq) ? "yes" : "no")};
}

Verdict exceptional_atlas()
{
    const auto records = catalog::exceptional_atlas();
    const std::vector<std::size_t> dims{8, 28, 16, 42, 40, 32, 26, 70, 64, 54, 128, 112};
    bool ok = records.size() == 12 &&
              catalog::exceptional_partition(records) == std::vector<std::size_t>{1, 2, 4, 3, 2};
    std::size_t verified = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        ok = ok && i < dims.size() && records[i].dim == dims[i];
        verified += catalog::verify_record(records[i]).pass;
    }
    ok = ok && verified == records.size();
    return {ok, std::to_string(records.size()) + " records, " + std::to_string(verified) + " verified"};
}

Verdict exponents()
{
    std::size_t simple = 0;
    std::size_t passed = 0;
    for (const auto& g : catalog::group_catalog()) {
        if (g.simple()) {
            ++simple;
            passed += catalog::exponents_check(g).pass && catalog::palindrome_check(g.exponents).pass;
        }
    }
    const auto spin10 = catalog::resolve_group("Spin(10)");
    const bool spin10_ok = spin10.exponents == std::vector<std::size_t>{1, 3, 4, 5, 7} &&
                           catalog::exponents_check(spin10).pass && catalog::palindrome_check(spin10.exponents).pass;
    const std::vector<std::size_t> oct3{1, 3, 5, 7, 11};
    const std::vector<std::size_t> f4{1, 5, 7, 11};
    const bool pal = !catalog::palindrome_check(oct3).pass && catalog::palindrome_check(f4).pass;
    return {passed == simple && spin10_ok && pal,
            std::to_string(passed) + "/" + std::to_string(simple) + " simple groups, Spin(10) " +
                (spin10_ok ? "ok" : "bad") + ", (1,3,5,7,11) rejected and (1,5,7,11) accepted: " + (pal ? "yes" : "no")};
}

Verdict supergravity()
{
    const std::vector<std::size_t> expected{128, 70, 42, 25, 14};
    std::vector<std::size_t> got;
    bool ok = true;
    for (const auto& c : catalog::supergravity_chain()) {
        got.push_back(catalog::group_dim(c.split_group) - catalog::group_dim(c.compact_subgroup));
        ok = ok && catalog::verify_chain(c).pass;
    }
    std::string list;
    for (auto g : got) {
        list += (list.empty() ? "" : ",") + std::to_string(g);
    }
    return {ok && got == expected, "scalars (" + list + ")"};
}

Verdict killing_forms()
{
    if (!der_o || !der_j3o) {
        return {false, "derivation algebras unavailable"};
    }
    const auto h = lie::derivation_algebra(*composition::quaternions());
    const bool ok = linalg::definiteness(lie::killing_form(h)) == linalg::Definiteness::negative &&
                    linalg::definiteness(lie::killing_form(*der_o)) == linalg::Definiteness::negative &&
                    linalg::definiteness(lie::killing_form(*der_j3o)) == linalg::Definiteness::negative;
    return {ok, ok ? "Der(H), Der(O), Der(J3(O)) negative definite" : "a Killing form is not negative definite"};
}

Verdict jordan_identity()
{
    const auto start = Clock::now();
    std::size_t held = 0;
    std::size_t total = 0;
    for (const char* name : {"R", "C", "H", "O"}) {
        const auto k = composition::algebra_by_name(name);
        composition::ElementSampler s(kSeed + 100 + k->dim());
        for (std::size_t t = 0; t < kJordanPairs; ++t) {
            const auto x = jordan::random_hermitian(k, s);
            const auto y = jordan::random_hermitian(k, s);
            held += jordan::jordan_identity_holds(x, y);
            ++total;
        }
    }
    const double t = since(start);
    return {held == total && t < kJordanLimit,
            std::to_string(held) + "/" + std::to_string(total) + " pairs, " + fmt(t) + " < " + fmt(kJordanLimit)};
}

Verdict cli(const std::string& atlas_path, const std::string& golden_dir)
{
    const auto start = Clock::now();
    const auto all = capture("'" + atlas_path + "' verify all 2>&1");
    const double t = since(start);
    const auto corrupt = capture("'" + atlas_path + "' --inject-corrupt verify atlas 2>&1");
    std::size_t stable = 0;
    const std::vector<std::string> tables{"magic-square", "exceptional-spaces", "chains", "families"};
    for (const auto& name : tables) {
        const auto golden = read_file(golden_dir + "/" + name + ".md");
        const auto a = capture("'" + atlas_path + "' table " + name + " --format markdown");
        const auto b = capture("'" + atlas_path + "' table " + name + " --format markdown");
        stable += !golden.empty() && a.code == 0 && a.out == golden && b.out == golden;
    }
    return {all.code == 0 && t < kVerifyAllLimit && corrupt.code == 1 && stable == tables.size(),
            "verify all exit " + std::to_string(all.code) + " in " + fmt(t) + ", corrupted exit " +
                std::to_string(corrupt.code) + ", golden tables " + std::to_string(stable) + "/" +
                std::to_string(tables.size())};
}

} // namespace

int main(int argc, char** argv)
{
    if (argc != 3) {
        std::cerr << "usage: acceptance <atlas-binary> <golden-dir>\n";
        return 2;
    }
    const std::string atlas_path = argv[1];
    const std::string golden_dir = argv[2];

    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"composition law", composition_law},
        {"derivation dimensions", derivation_dims},
        {"generic ranks", generic_ranks},
        {"Cartan splits", cartan_splits},
        {"magic square", magic_square},
        {"exceptional atlas", exceptional_atlas},
        {"exponents", exponents},
        {"supergravity chain", supergravity},
        {"Killing forms", killing_forms},
        {"Jordan identity", jordan_identity},
        {"CLI", [&] { return cli(atlas_path, golden_dir); }},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("error: ") + e.what()};
        }
        failures += !v.pass;
        std::cout << "criterion " << (i + 1) << " " << (v.pass ? "PASS" : "FAIL") << "  " << criteria[i].first
                  << ": " << v.detail << "\n"
                  << std::flush;
    }
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << "\n";
    return failures == 0 ? 0 : 1;
}
