#include "atlas/cli/suites.hpp"

#include "atlas/catalog/chains.hpp"
#include "atlas/catalog/serialize.hpp"
#include "atlas/catalog/spaces.hpp"
#include "atlas/jordan/jordan.hpp"
#include "atlas/lie/cartan.hpp"
#include "atlas/linalg/elimination.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <map>
#include <stdexcept>

namespace atlas::cli {

namespace {

using composition::AlgebraElement;
using composition::ElementSampler;

struct Outcome {
    Status status = Status::fail;
    std::string computed;
};

Outcome verdict(bool pass, std::string computed)
{
    return {pass ? Status::pass : Status::fail, std::move(computed)};
}

class SuiteBuilder {
public:
    explicit SuiteBuilder(std::string name) { report_.suite = std::move(name); }

    void check(std::string id, std::string expected, const std::function<Outcome()>& fn)
    {
        CheckEntry entry{std::move(id), Status::fail, std::move(expected), "", 0};
        const auto start = std::chrono::steady_clock::now();
        try {
            auto outcome = fn();
            entry.status = outcome.status;
            entry.computed = std::move(outcome.computed);
        } catch (const std::exception& e) {
            entry.status = Status::fail;
            entry.computed = std::string("error: ") + e.what();
        }
        entry.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report_.checks.push_back(std::move(entry));
    }

    VerificationReport take() { return std::move(report_); }

private:
    VerificationReport report_;
};

std::string str(std::size_t n)
{
    return std::to_string(n);
}

template <class Seq>
std::string list(const Seq& values)
{
    std::string out = "(";
    bool first = true;
    for (const auto& v : values) {
        out += (first ? "" : ",") + std::to_string(v);
        first = false;
    }
    return out + ")";
}

Outcome over_budget(Workbench& bench, const std::string& key)
{
    char budget[32];
    std::snprintf(budget, sizeof budget, "%g", bench.options().budget_seconds);
    return {Status::skipped_budget, "Der(" + key + ") exceeded the budget of " + budget + " s"};
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt)
{
    return seed * 0x9e3779b97f4a7c15ULL + salt;
}

// ---------------------------------------------------------------- algebras

VerificationReport algebras_suite(Workbench& bench)
{
    SuiteBuilder s("algebras");
    const auto& opt = bench.options();
    const std::size_t trials = opt.trials;

    for (const char* name : {"R", "C", "H", "O"}) {
        const auto k = composition::algebra_by_name(name);
        s.check("composition-law/" + std::string(name), "N(xy) = N(x)N(y) on " + str(trials) + " pairs", [&] {
            ElementSampler sampler(mix(opt.seed, k->dim()));
            std::size_t held = 0;
            for (std::size_t t = 0; t < trials; ++t) {
                const auto x = sampler.element(k);
                const auto y = sampler.element(k);
                held += composition::norm(x * y) == composition::norm(x) * composition::norm(y);
            }
            return verdict(held == trials, str(held) + "/" + str(trials) + " pairs");
        });
    }
    s.check("composition-law/S-witness", "stored sedenion pair violates N(xy) = N(x)N(y)", [] {
        const auto [x, y] = composition::sedenion_composition_witness();
        const linalg::Rational lhs = composition::norm(x * y);
        const linalg::Rational rhs = composition::norm(x) * composition::norm(y);
        return verdict(lhs != rhs, "N(xy) = " + linalg::to_string(lhs) + ", N(x)N(y) = " + linalg::to_string(rhs));
    });
    s.check("nonassociative/O", "(e1 e2) e4 = -e1 (e2 e4) != 0", [] {
        const auto o = composition::octonions();
        const auto e1 = AlgebraElement::unit(o, 1);
        const auto e2 = AlgebraElement::unit(o, 2);
        const auto e4 = AlgebraElement::unit(o, 4);
        const auto left = (e1 * e2) * e4;
        const auto right = e1 * (e2 * e4);
        return verdict(!left.is_zero() && left == -right,
                       "(e1e2)e4 = " + composition::to_string(left) + ", e1(e2e4) = " + composition::to_string(right));
    });
    s.check("alternative/O", "associator alternating on " + str(trials) + " triples", [&] {
        const auto o = composition::octonions();
        ElementSampler sampler(mix(opt.seed, 101));
        std::size_t held = 0;
        for (std::size_t t = 0; t < trials; ++t) {
            const auto x = sampler.element(o);
            const auto y = sampler.element(o);
            const auto z = sampler.element(o);
            held += composition::associator(x, x, y).is_zero() && composition::associator(y, x, x).is_zero() &&
                    composition::associator(x, y, z) == -composition::associator(y, x, z);
        }
        return verdict(held == trials, str(held) + "/" + str(trials) + " triples");
    });
    s.check("associative/H", "(xy)z = x(yz) on " + str(trials) + " triples", [&] {
        const auto h = composition::quaternions();
        ElementSampler sampler(mix(opt.seed, 102));
        std::size_t held = 0;
        for (std::size_t t = 0; t < trials; ++t) {
            held += composition::associator(sampler.element(h), sampler.element(h), sampler.element(h)).is_zero();
        }
        return verdict(held == trials, str(held) + "/" + str(trials) + " triples");
    });
    s.check("inverse/O", "x x^-1 = x^-1 x = 1 on " + str(trials) + " elements", [&] {
        const auto o = composition::octonions();
        const auto one = AlgebraElement::unit(o, 0);
        ElementSampler sampler(mix(opt.seed, 103));
        std::size_t held = 0;
        for (std::size_t t = 0; t < trials; ++t) {
            const auto x = sampler.nonzero_element(o);
            const auto inv = composition::inverse(x);
            held += x * inv == one && inv * x == one;
        }
        return verdict(held == trials, str(held) + "/" + str(trials) + " elements");
    });
    for (const char* name : {"R", "C", "H", "O"}) {
        s.check("jordan-identity/J3(" + std::string(name) + ")",
                "(x^2 o (x o y)) = (x o (x^2 o y)) on " + str(trials) + " pairs", [&] {
                    const auto k = composition::algebra_by_name(name);
                    ElementSampler sampler(mix(opt.seed, 200 + k->dim()));
                    std::size_t held = 0;
                    for (std::size_t t = 0; t < trials; ++t) {
                        const auto x = jordan::random_hermitian(k, sampler);
                        const auto y = jordan::random_hermitian(k, sampler);
                        held += jordan::jordan_identity_holds(x, y);
                    }
                    return verdict(held == trials, str(held) + "/" + str(trials) + " pairs");
                });
    }
    return s.take();
}

// ------------------------------------------------------------- derivations

const std::map<std::string, std::size_t>& expected_derivation_dims()
{
    static const std::map<std::string, std::size_t> dims{{"R", 0},     {"C", 0},     {"H", 3},      {"O", 14},
                                                         {"J3(R)", 3}, {"J3(C)", 8}, {"J3(H)", 21}, {"J3(O)", 52}};
    return dims;
}

std::size_t atlas_rank(const std::string& label)
{
    for (const auto& r : catalog::exceptional_atlas()) {
        if (r.cartan_label == label && r.rank) {
            return *r.rank;
        }
    }
    throw std::logic_error("no stored rank for " + label);
}

VerificationReport derivations_suite(Workbench& bench)
{
    SuiteBuilder s("derivations");
    const auto& opt = bench.options();

    for (const char* key : {"C", "H", "O", "J3(R)", "J3(C)", "J3(H)", "J3(O)"}) {
        const auto expected = expected_derivation_dims().at(key);
        s.check("dim/Der(" + std::string(key) + ")", str(expected), [&] {
            const auto l = bench.derivations(key);
            if (!l) {
                return over_budget(bench, key);
            }
            return verdict(l->dim() == expected, str(l->dim()) + ", certified");
        });
    }

    const std::vector<std::pair<std::string, std::size_t>> ranks{{"H", 1}, {"O", 2}, {"J3(O)", 4}};
    for (const auto& [key, expected] : ranks) {
        s.check("generic-rank/Der(" + key + ")", str(expected) + " over 5 trials", [&] {
            const auto l = bench.derivations(key);
            if (!l) {
                return over_budget(bench, key);
            }
            const auto r = lie::generic_rank(*l, 5, opt.seed);
            return verdict(r == expected, str(r));
        });
    }

    for (const char* key : {"H", "O", "J3(R)", "J3(C)", "J3(H)", "J3(O)"}) {
        s.check("killing/Der(" + std::string(key) + ")", "negative definite", [&] {
            const auto l = bench.derivations(key);
            if (!l) {
                return over_budget(bench, key);
            }
            const auto d = linalg::definiteness(lie::killing_form(*l));
            const char* name = d == linalg::Definiteness::negative   ? "negative definite"
                               : d == linalg::Definiteness::positive ? "positive definite"
                                                                     : "indefinite";
            return verdict(d == linalg::Definiteness::negative, name);
        });
    }

    struct Split {
        std::string label;
        std::string key;
        std::size_t dim_k;
        std::size_t dim_p;
        std::function<lie::Involution(const composition::StructureTable&)> involution;
    };
    const std::vector<Split> splits{
        {"G", "O", 6, 8, [](const auto& t) { return lie::quaternion_fixing_involution(t); }},
        {"FII", "J3(O)", 36, 16, [](const auto& t) { return lie::diagonal_sign_involution(t); }},
        {"FI", "J3(O)", 24, 28,
         [](const auto& t) {
             return lie::entrywise_involution(t, lie::quaternion_fixing_involution(composition::octonions()->table()));
         }},
    };
    for (const auto& split : splits) {
        const auto rank = atlas_rank(split.label);
        s.check("cartan/" + split.label,
                "k + p = " + str(split.dim_k) + " + " + str(split.dim_p) + ", [p,p] = k, rank " + str(rank), [&] {
                    const auto l = bench.derivations(split.key);
                    if (!l) {
                        return over_budget(bench, split.key);
                    }
                    const auto& table = split.key == "O" ? composition::octonions()->table()
                                                         : jordan::j3("O")->table();
                    const auto theta = lie::induced_involution(split.involution(table), *l);
                    const auto pair = lie::cartan_split(*l, theta);
                    const auto r = lie::symmetric_pair_rank(*l, pair, 5, opt.seed);
                    return verdict(pair.dim_k == split.dim_k && pair.dim_p == split.dim_p && pair.pp_spans_k() &&
                                       r == rank,
                                   "k + p = " + str(pair.dim_k) + " + " + str(pair.dim_p) + ", dim [p,p] = " +
                                       str(pair.pp_span_dim) + ", rank " + str(r));
                });
    }
    return s.take();
}

// ------------------------------------------------------------ magic square

constexpr std::array<std::array<std::size_t, 4>, 4> kLevel3Expected{{
    {3, 8, 21, 52},
    {8, 16, 35, 78},
    {21, 35, 66, 133},
    {52, 78, 133, 248},
}};

std::string matrix_string(const std::array<std::array<std::size_t, 4>, 4>& m)
{
    std::string out;
    for (std::size_t r = 0; r < 4; ++r) {
        out += (r ? " / " : "") + list(m[r]);
    }
    return out;
}

VerificationReport magic_square_suite(Workbench& bench)
{
    SuiteBuilder s("magic-square");
    const auto dims = derivation_dims(bench);
    auto need = [&](const std::function<Outcome(const catalog::MagicSquare&)>& fn) {
        return [&, fn] {
            if (!dims) {
                return over_budget(bench, "J3(O)");
            }
            return fn(catalog::magic_square_level3(*dims));
        };
    };
    s.check("level3/derivation-inputs", "Der(R,C,H,O) = (0,0,3,14), Der(J3(R,C,H,O)) = (3,8,21,52)", [&] {
        if (!dims) {
            return over_budget(bench, "J3(O)");
        }
        const std::array<std::size_t, 4> a{0, 0, 3, 14};
        const std::array<std::size_t, 4> j{3, 8, 21, 52};
        return verdict(dims->algebra == a && dims->jordan == j,
                       "Der(A) = " + list(dims->algebra) + ", Der(J3(B)) = " + list(dims->jordan));
    });
    s.check("level3/tits", matrix_string(kLevel3Expected), need([](const auto& sq) {
                const auto m = catalog::dimension_matrix(sq);
                return verdict(m == kLevel3Expected, matrix_string(m));
            }));
    s.check("level3/symmetric", "dim L(A,B) = dim L(B,A)",
            need([](const auto& sq) { return verdict(catalog::is_symmetric(sq), catalog::is_symmetric(sq) ? "symmetric" : "asymmetric"); }));
    s.check("level3/bottom-row", "F4 E6 E7 E8 = (52,78,133,248)", need([](const auto& sq) {
                std::array<std::size_t, 4> row{};
                std::string labels;
                for (std::size_t b = 0; b < 4; ++b) {
                    row[b] = sq[3][b].lie_dim;
                    labels += (b ? " " : "") + sq[3][b].group_label;
                }
                const std::array<std::size_t, 4> expected{52, 78, 133, 248};
                return verdict(row == expected && labels == "F4 E6 E7 E8", labels + " = " + list(row));
            }));
    s.check("level3/e8-split", "248 = dim Spin(16) + dim E8/SO(16) = 120 + 128", need([](const auto& sq) {
                const auto spin16 = catalog::magic_square_level2()[3][3].lie_dim;
                std::size_t evm = 0;
                for (const auto& r : catalog::exceptional_atlas()) {
                    if (r.cartan_label == "EVIII") {
                        evm = r.dim;
                    }
                }
                return verdict(sq[3][3].lie_dim == spin16 + evm,
                               str(sq[3][3].lie_dim) + " = " + str(spin16) + " + " + str(evm));
            }));
    s.check("level3/labels", "dim of each cell label equals the Tits dimension", need([](const auto& sq) {
                std::size_t held = 0;
                std::string bad;
                for (const auto& row : sq) {
                    for (const auto& cell : row) {
                        const bool ok = catalog::group_dim(cell.group_label) == cell.lie_dim;
                        held += ok;
                        if (!ok) {
                            bad += " " + cell.group_label;
                        }
                    }
                }
                return verdict(held == 16, str(held) + "/16 cells" + bad);
            }));
    s.check("level2/labels", "recorded dims match the group labels, symmetric, (O,O) = Spin(16) = 120", [] {
        const auto sq = catalog::magic_square_level2();
        std::size_t held = 0;
        for (const auto& row : sq) {
            for (const auto& cell : row) {
                held += catalog::group_dim(cell.group_label) == cell.lie_dim;
            }
        }
        const bool ok = held == 16 && catalog::is_symmetric(sq) && sq[3][3].lie_dim == 120;
        return verdict(ok, str(held) + "/16 cells, " + matrix_string(catalog::dimension_matrix(sq)));
    });
    return s.take();
}

// ------------------------------------------------------------------ atlas

VerificationReport atlas_suite(Workbench& bench)
{
    SuiteBuilder s("atlas");
    auto records = catalog::exceptional_atlas();

    s.check("exceptional/count", "12 records, partition 1+2+4+3+2", [&] {
        const auto part = catalog::exceptional_partition(records);
        const std::vector<std::size_t> expected{1, 2, 4, 3, 2};
        return verdict(records.size() == 12 && part == expected,
                       str(records.size()) + " records, partition " + list(part));
    });
    s.check("exceptional/dims", "(8,28,16,42,40,32,26,70,64,54,128,112)", [&] {
        std::vector<std::size_t> dims;
        for (const auto& r : records) {
            dims.push_back(r.dim);
        }
        const std::vector<std::size_t> expected{8, 28, 16, 42, 40, 32, 26, 70, 64, 54, 128, 112};
        return verdict(dims == expected, list(dims));
    });

    if (bench.options().inject_corrupt) {
        auto bad = records.at(7);
        bad.dim += 1;
        bad.notes = "corrupted copy";
        bad.cartan_label += "-corrupted";
        records.push_back(bad);
    }
    for (const auto& r : records) {
        s.check("record/" + r.cartan_label, r.name + " dim " + str(r.dim), [&] {
            const auto rep = catalog::verify_record(r);
            return verdict(rep.pass, rep.detail);
        });
    }

    s.check("families/examples", "AI n=3 -> 5, BDI (1,n) -> n, CII (1,1) -> 4", [] {
        bool ok = catalog::family_space_dim("AI", {3, 0, 0}) == 5 && catalog::family_space_dim("CII", {0, 1, 1}) == 4;
        for (std::size_t n = 1; n <= 8; ++n) {
            ok = ok && catalog::family_space_dim("BDI", {0, 1, n}) == n;
        }
        return verdict(ok, ok ? "all match" : "mismatch");
    });
    s.check("families/instances", "dim formula = dim G - dim K for n = 2..6 and p, q = 1..4", [] {
        std::size_t total = 0;
        std::size_t held = 0;
        std::string bad;
        for (const auto& f : catalog::classical_families()) {
            std::vector<catalog::FamilyParams> params;
            if (f.two_parameter) {
                for (std::size_t p = 1; p <= 4; ++p) {
                    for (std::size_t q = 1; q <= 4; ++q) {
                        params.push_back({0, p, q});
                    }
                }
            } else {
                for (std::size_t n = 2; n <= 6; ++n) {
                    params.push_back({n, 0, 0});
                }
            }
            for (const auto& p : params) {
                const auto rep = catalog::verify_record(catalog::family_instance(f.cartan_label, p));
                ++total;
                held += rep.pass;
                if (!rep.pass) {
                    bad += "; " + rep.detail;
                }
            }
        }
        return verdict(held == total, str(held) + "/" + str(total) + " instances" + bad);
    });
    for (const auto& r : catalog::projective_spaces()) {
        s.check("projective/" + r.cartan_label, r.name + " dim " + str(r.dim) + ", rank 1", [&] {
            const auto rep = catalog::verify_record(r);
            return verdict(rep.pass && r.rank == 1u, rep.detail);
        });
    }
    s.check("json/round-trip", "parse(emit(atlas)) = atlas", [&] {
        const auto atlas = catalog::build_atlas(derivation_dims(bench).value_or(catalog::DerivationDims{}));
        const auto text = catalog::canonical_dump(nlohmann::json(atlas));
        const auto back = nlohmann::json::parse(text).get<catalog::Atlas>();
        return verdict(back == atlas && catalog::canonical_dump(nlohmann::json(back)) == text,
                       str(text.size()) + " bytes, equal after round trip");
    });
    return s.take();
}

// ----------------------------------------------------------------- chains

VerificationReport chains_suite(Workbench&)
{
    SuiteBuilder s("chains");
    const auto chain = catalog::supergravity_chain();
    for (const auto& c : chain) {
        s.check("chain/" + str(c.spacetime_dim) + "d", str(c.scalar_count) + " scalars", [&] {
            const auto rep = catalog::verify_chain(c);
            return verdict(rep.pass, rep.detail);
        });
    }
    s.check("chain/scalars", "(128,70,42,25,14), compact dims (120,63,36,20,10)", [&] {
        std::vector<std::size_t> scalars;
        std::vector<std::size_t> compact;
        for (const auto& c : chain) {
            scalars.push_back(catalog::group_dim(c.split_group) - catalog::group_dim(c.compact_subgroup));
            compact.push_back(catalog::group_dim(c.compact_subgroup));
        }
        const std::vector<std::size_t> e_scalars{128, 70, 42, 25, 14};
        const std::vector<std::size_t> e_compact{120, 63, 36, 20, 10};
        return verdict(scalars == e_scalars && compact == e_compact, list(scalars) + ", " + list(compact));
    });
    for (const auto& q : catalog::sphere_quotients()) {
        s.check("sphere/" + q.numerator + "/" + q.denominator, "S" + str(q.sphere_dim), [&] {
            const auto rep = catalog::verify_sphere(q);
            return verdict(rep.pass, rep.detail);
        });
    }
    return s.take();
}

// -------------------------------------------------------------- exponents

VerificationReport exponents_suite(Workbench&)
{
    SuiteBuilder s("exponents");
    for (const auto& g : catalog::group_catalog()) {
        if (!g.simple()) {
            continue;
        }
        s.check("group/" + g.name, "dim " + str(g.dim) + " = sum(2e+1), rank " + str(g.rank) + ", palindromic", [&] {
            const auto e = catalog::exponents_check(g);
            const auto p = catalog::palindrome_check(g.exponents);
            return verdict(e.pass && p.pass, list(g.exponents) + ": " + e.detail + "; " + p.detail);
        });
    }
    s.check("spin10", "Spin(10) exponents (1,3,4,5,7), diffs (2,1,1,2)", [] {
        const auto g = catalog::resolve_group("Spin(10)");
        const auto p = catalog::palindrome_check(g.exponents);
        const std::vector<std::size_t> expected{1, 3, 4, 5, 7};
        return verdict(g.exponents == expected && p.pass && catalog::exponents_check(g).pass,
                       list(g.exponents) + " " + p.detail);
    });
    s.check("oct3", "(1,3,5,7,11) is not palindromic", [] {
        const auto p = catalog::palindrome_check(catalog::oct3_exponents());
        return verdict(!p.pass, p.detail + (p.pass ? " palindromic" : " not palindromic"));
    });
    s.check("f4", "(1,5,7,11) is palindromic", [] {
        const std::vector<std::size_t> e{1, 5, 7, 11};
        const auto p = catalog::palindrome_check(e);
        return verdict(p.pass, p.detail);
    });
    return s.take();
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"algebras", "derivations", "magic-square",
                                                "atlas",    "chains",      "exponents"};
    return names;
}

std::optional<catalog::DerivationDims> derivation_dims(Workbench& bench)
{
    catalog::DerivationDims out;
    for (std::size_t i = 0; i < catalog::kDivisionAlgebras.size(); ++i) {
        const std::string a = catalog::kDivisionAlgebras[i];
        const auto der = bench.derivations(a);
        const auto jor = bench.derivations("J3(" + a + ")");
        if (!der || !jor) {
            return std::nullopt;
        }
        out.algebra[i] = der->dim();
        out.jordan[i] = jor->dim();
    }
    return out;
}

VerificationReport run_suite(const std::string& name, Workbench& bench)
{
    if (name == "algebras") return algebras_suite(bench);
    if (name == "derivations") return derivations_suite(bench);
    if (name == "magic-square") return magic_square_suite(bench);
    if (name == "atlas") return atlas_suite(bench);
    if (name == "chains") return chains_suite(bench);
    if (name == "exponents") return exponents_suite(bench);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<VerificationReport> run_scope(const std::string& scope, Workbench& bench)
{
    if (scope != "all") {
        return {run_suite(scope, bench)};
    }
    std::vector<std::future<VerificationReport>> pending;
    for (const auto& name : suite_names()) {
        pending.push_back(std::async(std::launch::async, [&bench, name] { return run_suite(name, bench); }));
    }
    std::vector<VerificationReport> out;
    for (auto& f : pending) {
        out.push_back(f.get());
    }
    return out;
}

} // namespace atlas::cli
