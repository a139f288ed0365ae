#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace baselgeo {

// Knobs shared by every check run.
struct RunConfig {
    enum class Format { Text, Json };

    std::uint64_t seed = 0;
    std::uint64_t mc_samples = 1'000'000;
    double quad_rel_tol = 1e-10;
    std::uint64_t jacobian_sweep_points = 10'000;
    Format format = Format::Text;
};

// One check outcome.  `measured` compares against `expected` under the
// check's comparison mode; auxiliary conditions a check folds in can only
// clear `passed`, never set it.
struct CheckReport {
    std::string name;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::uint64_t work = 0;
    std::optional<std::uint64_t> seed;
};

// Registered check names, in run order.
const std::vector<std::string>& check_names();

// Runs one named check.  UnknownCheck if the name is not registered.
CheckReport run_check(const std::string& name, const RunConfig& cfg);

// Runs every registered check in order.
std::vector<CheckReport> run_all(const RunConfig& cfg);

// Test seam: the hook may tamper with each report after measurement; the
// pass flag is then re-derived from the tampered numbers.
using ReportHook = std::function<void(CheckReport&)>;
std::vector<CheckReport> run_all(const RunConfig& cfg, const ReportHook& hook);

// 0 when every report passed, 1 otherwise.
int exit_status(const std::vector<CheckReport>& reports);

// Stable text table, one line per check plus a summary line.
std::string to_text(const std::vector<CheckReport>& reports);

// Deterministic JSON: config echo plus a flat array of check objects.
// Byte-identical across runs with the same config.
std::string to_json(const std::vector<CheckReport>& reports, const RunConfig& cfg);

} // namespace baselgeo
