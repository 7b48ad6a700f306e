#include "atlas/cli/workbench.hpp"

#include "atlas/lie/derivations.hpp"

#include <stdexcept>

namespace atlas::cli {

const std::vector<DeriveTarget>& derive_targets()
{
    static const std::vector<DeriveTarget> targets{
        {"reals", "R", "R", false},        {"complex", "C", "C", false},      {"quaternions", "H", "H", false}, {"octonions", "O", "O", false},
        {"j3r", "J3(R)", "R", true},       {"j3c", "J3(C)", "C", true},      {"j3h", "J3(H)", "H", true},
        {"j3o", "J3(O)", "O", true},
    };
    return targets;
}

const DeriveTarget& derive_target(const std::string& name)
{
    for (const auto& t : derive_targets()) {
        if (t.cli_name == name || t.key == name) {
            return t;
        }
    }
    throw std::invalid_argument("unknown derivation target '" + name + "'");
}

Workbench::Workbench(RunOptions options) : options_(options)
{
    for (const auto& t : derive_targets()) {
        slots_.emplace(t.key, std::make_unique<Slot>());
    }
}

std::shared_ptr<const lie::LieAlgebraBasis> Workbench::derivations(const std::string& key)
{
    const auto& target = derive_target(key);
    auto& slot = *slots_.at(target.key);
    std::call_once(slot.once, [&] {
        const auto start = std::chrono::steady_clock::now();
        auto result = run_with_budget(options_.budget_seconds, [&](std::stop_token stop) {
            if (target.jordan) {
                return lie::derivation_algebra(*jordan::j3(target.algebra), stop);
            }
            return lie::derivation_algebra(*composition::algebra_by_name(target.algebra), stop);
        });
        slot.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (result) {
            slot.value = std::make_shared<const lie::LieAlgebraBasis>(std::move(*result));
        }
    });
    return slot.value;
}

double Workbench::elapsed(const std::string& key)
{
    return slots_.at(derive_target(key).key)->seconds;
}

} // namespace atlas::cli
