#pragma once

#include "atlas/lie/lie_algebra.hpp"

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stop_token>
#include <string>
#include <thread>
#include <vector>

namespace atlas::cli {

struct RunOptions {
    std::uint64_t seed = 1;
    std::size_t trials = 200;
    double budget_seconds = 300;
    bool inject_corrupt = false;
};

/// A derivation target: CLI name, algebra key ("O", "J3(O)") and whether it
/// is a Jordan algebra.
struct DeriveTarget {
    std::string cli_name;
    std::string key;
    std::string algebra;
    bool jordan = false;
};

const std::vector<DeriveTarget>& derive_targets();
const DeriveTarget& derive_target(const std::string& cli_name_or_key);

/// Runs fn(stop) and requests a stop once `seconds` have elapsed. Returns
/// nullopt when fn was cancelled.
template <class F>
auto run_with_budget(double seconds, F&& fn) -> std::optional<decltype(fn(std::stop_token{}))>
{
    std::stop_source source;
    std::mutex m;
    std::condition_variable cv;
    bool done = false;
    std::jthread watchdog([&] {
        std::unique_lock lock(m);
        const auto limit = std::chrono::duration<double>(seconds > 0 ? seconds : 0);
        if (!cv.wait_for(lock, limit, [&] { return done; })) {
            source.request_stop();
        }
    });
    auto finish = [&] {
        {
            std::lock_guard lock(m);
            done = true;
        }
        cv.notify_all();
    };
    try {
        auto result = fn(source.get_token());
        finish();
        return result;
    } catch (const linalg::Cancelled&) {
        finish();
        return std::nullopt;
    } catch (...) {
        finish();
        throw;
    }
}

/// Shared lazily computed derivation algebras. Each is computed once, under
/// the budget; safe to use from concurrent suites.
class Workbench {
public:
    explicit Workbench(RunOptions options);

    const RunOptions& options() const noexcept { return options_; }

    /// nullptr when the computation ran out of budget.
    std::shared_ptr<const lie::LieAlgebraBasis> derivations(const std::string& key);

    /// Wall-clock seconds spent computing `key` (0 before it runs).
    double elapsed(const std::string& key);

private:
    struct Slot {
        std::once_flag once;
        std::shared_ptr<const lie::LieAlgebraBasis> value;
        double seconds = 0;
    };
    RunOptions options_;
    std::map<std::string, std::unique_ptr<Slot>> slots_;
};

} // namespace atlas::cli
