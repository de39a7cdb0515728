// Command-line front end: scenario runner, Dirac-vs-full comparison ladder,
// analytic tables, physical-scale report and a quick selftest.
//
// Exit codes: 0 success, 2 configuration error, 3 tolerance failure.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zitter/analytic.hpp"
#include "zitter/errors.hpp"
#include "zitter/scenario.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::string scenario_name;
    std::string out_dir;
    std::size_t grid_n = 0;
    std::vector<std::string> overrides;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "Scenario config file");
    cmd->add_option("--scenario", o.scenario_name, "Builtin scenario name");
    cmd->add_option("--out", o.out_dir, "Output directory");
    cmd->add_option("--grid-n", o.grid_n, "Override momentum grid node count");
    cmd->add_option("--set", o.overrides, "Override a config key: section.key=value");
}

zitter::scenario::RawConfig overrides_to_raw(const CommonOpts& o) {
    zitter::scenario::RawConfig raw;
    for (const auto& kv : o.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0 || kv.find('.') == std::string::npos ||
            kv.find('.') > eq)
            throw zitter::ConfigError("--set expects section.key=value, got '" + kv + "'");
        raw.set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (!o.out_dir.empty()) raw.set("output.dir", o.out_dir);
    if (o.grid_n > 0) raw.set("grid.n", std::to_string(o.grid_n));
    return raw;
}

// builtin defaults, then the config file, then --set overrides
std::vector<zitter::scenario::ScenarioConfig> resolve(const CommonOpts& o) {
    using namespace zitter::scenario;
    std::vector<std::string> names =
        expand_scenario_name(o.scenario_name.empty() ? "default" : o.scenario_name);
    std::vector<ScenarioConfig> out;
    for (const auto& name : names) {
        RawConfig raw = builtin_raw(name);
        if (!o.config_path.empty()) {
            std::ifstream in(o.config_path);
            if (!in) throw zitter::ConfigError("cannot open config file: " + o.config_path);
            raw.merge(parse_config_text(in, o.config_path));
        }
        raw.merge(overrides_to_raw(o));
        out.push_back(make_scenario(raw));
    }
    return out;
}

void print_summary(const zitter::scenario::RunSummary& sum) {
    for (const auto& e : sum.entries) {
        std::printf("  %-24s %.6e  (ref %.6e, tol %.2e)  %s\n", e.metric.c_str(), e.value,
                    e.reference, e.tolerance, e.pass ? "PASS" : "FAIL");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zitter: wave-packet dynamics under light-induced gauge potentials"};
    app.require_subcommand(1);

    CommonOpts evolve_opts, compare_opts, analytic_opts, scales_opts;
    auto* cmd_evolve = app.add_subcommand("evolve", "Run one scenario and write its outputs");
    add_common(cmd_evolve, evolve_opts);
    auto* cmd_compare =
        app.add_subcommand("compare", "Dirac-vs-full residual ladder over packet widths");
    add_common(cmd_compare, compare_opts);
    auto* cmd_analytic =
        app.add_subcommand("analytic", "Tabulate the closed-form drift/oscillation oracles");
    add_common(cmd_analytic, analytic_opts);
    auto* cmd_scales =
        app.add_subcommand("scales", "Physical-unit report for a laboratory parameter set");
    add_common(cmd_scales, scales_opts);
    double scales_sigma_um = 10.0;
    cmd_scales->add_option("--sigma-um", scales_sigma_um, "Packet width in micrometres");
    app.add_subcommand("selftest", "Run the built-in invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_evolve->parsed()) {
            bool ok = true;
            for (const auto& cfg : resolve(evolve_opts)) {
                std::printf("scenario %s -> %s\n", cfg.name.c_str(), cfg.out_dir.c_str());
                const auto sum = zitter::scenario::run_scenario(cfg);
                print_summary(sum);
                ok = ok && sum.all_pass();
            }
            return ok ? 0 : 3;
        }
        if (cmd_compare->parsed()) {
            if (compare_opts.scenario_name.empty()) compare_opts.scenario_name = "fig2";
            bool ok = true;
            for (const auto& cfg : resolve(compare_opts)) {
                const auto res = zitter::scenario::compare_limits(cfg);
                std::printf("width ladder (delta -> max density residual):\n");
                for (std::size_t i = 0; i < res.deltas.size(); ++i)
                    std::printf("  %8.4f -> %.6e\n", res.deltas[i], res.residuals[i]);
                std::printf("monotone decrease: %s\n", res.monotone ? "PASS" : "FAIL");
                ok = ok && res.monotone;
            }
            return ok ? 0 : 3;
        }
        if (cmd_analytic->parsed()) {
            for (const auto& cfg : resolve(analytic_opts)) {
                zitter::scenario::write_analytic_table(cfg);
                std::printf("wrote %s/%s_analytic.csv\n", cfg.out_dir.c_str(), cfg.name.c_str());
            }
            return 0;
        }
        if (cmd_scales->parsed()) {
            // default: 87Rb at 780 nm with the trap offset placing the gap in
            // the millisecond-damping window
            zitter::scenario::RawConfig raw;
            raw.set("physical.mass_kg", "1.4431606e-25");
            raw.set("physical.lambda_nm", "780");
            raw.set("physical.theta_rad", "1.5707963267948966");
            raw.set("physical.v1_joule", "0");
            raw.set("physical.v3_joule", "2.18924e-30");
            raw.merge(overrides_to_raw(scales_opts));
            raw.set("scenario.name", "scales");
            auto cfg = zitter::scenario::make_scenario(raw);
            if (!cfg.physical)
                throw zitter::ConfigError("scales needs a [physical] parameter block");
            const auto s =
                zitter::analytic::physical_scales(*cfg.physical, scales_sigma_um * 1e-6);
            std::printf("recoil velocity      %.6e m/s\n", s.recoil_velocity);
            std::printf("time unit            %.6e s\n", s.time_unit_s);
            std::printf("reduced gap v_z      %.6e\n", s.v_z);
            std::printf("reduced width delta  %.6e\n", s.delta);
            std::printf("ZB frequency         %.6e Hz  (%.6e rad/s)\n", s.zb_frequency_hz,
                        s.zb_angular_frequency);
            std::printf("damping onset        %.6e s\n", s.damping_onset_s);
            return 0;
        }
        // selftest
        const auto sum = zitter::scenario::run_selftest();
        print_summary(sum);
        return sum.all_pass() ? 0 : 3;
    } catch (const zitter::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const zitter::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
