#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zitter/core.hpp"

// Configuration-driven scenario runner. Configs are flat key-value text with
// [section] headers; builtin scenario names preload the canonical parameter
// sets and any key can be overridden. All outputs are delimiter-separated
// text with a header line, written deterministically (identical config gives
// byte-identical files).
namespace zitter::scenario {

// section.key -> value, with source line numbers kept for diagnostics
struct RawConfig {
    std::map<std::string, std::string> values;
    std::map<std::string, int> lines;

    void set(const std::string& key, const std::string& value, int line = 0);
    void merge(const RawConfig& overrides);
};

RawConfig parse_config_text(std::istream& in, const std::string& source_name);

// builtin parameter sets: default, fig2, fig3a, fig3c, fig3ef, fig4a, fig4b
std::vector<std::string> builtin_names();
RawConfig builtin_raw(const std::string& name);

// "fig4" expands to {fig4a, fig4b}; every other builtin to itself.
std::vector<std::string> expand_scenario_name(const std::string& name);

struct ScenarioConfig {
    std::string name = "default";
    bool run_full = true, run_dirac = false;

    core::GaussianSpec initial;
    core::DimensionlessParams params;
    std::optional<core::PhysicalParams> physical;  // enables physical-unit columns

    double k_min = -8.0, k_max = 8.0;
    std::size_t grid_n = 4096;

    double tau_max = 20.0;
    std::size_t tau_samples = 401;

    std::string out_dir = "out";
    std::vector<std::string> kinds;  // com, populations, density_x, density_k, analytic_overlay

    std::vector<double> compare_deltas{0.4, 0.2, 0.1, 0.05};
    double compare_tau_max = 5.0;
    std::size_t compare_samples = 11;

    bool wants(const std::string& kind) const;
    std::vector<double> tau_grid() const;
};

// Validates every key and value; unknown keys are rejected.
ScenarioConfig make_scenario(const RawConfig& raw);

struct SummaryEntry {
    std::string metric;
    double value = 0;
    double reference = 0;
    double tolerance = 0;  // 0 = informational only
    bool pass = true;
};

struct RunSummary {
    std::vector<SummaryEntry> entries;
    bool all_pass() const;
};

// Evolve one scenario and write the requested outputs plus
// <name>_summary.csv. Residual checks that apply to the configuration are
// included in the summary.
RunSummary run_scenario(const ScenarioConfig& cfg);

struct CompareResult {
    std::vector<double> deltas;
    std::vector<double> residuals;  // max |rho_full - rho_dirac| over the map
    bool monotone = false;
};

// Dirac-limit convergence ladder: the same initial state at decreasing
// momentum width, full vs dirac position densities.
CompareResult compare_limits(const ScenarioConfig& cfg);

// Tabulate the closed-form oracles on the scenario's tau grid.
void write_analytic_table(const ScenarioConfig& cfg);

// Quick invariant suite wired through the same summary machinery.
RunSummary run_selftest();

}  // namespace zitter::scenario
