#include "zitter/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <set>
#include <sstream>

#include "zitter/analytic.hpp"
#include "zitter/errors.hpp"
#include "zitter/evolve.hpp"
#include "zitter/extract.hpp"
#include "zitter/observables.hpp"
#include "zitter/twolevel.hpp"

namespace zitter::scenario {

namespace {

namespace fs = std::filesystem;
constexpr double kPi = 3.14159265358979323846;

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "scenario.name",      "scenario.limit",      "initial.k0",
        "initial.delta",      "initial.c1",          "initial.c2",
        "params.v_z",         "params.c_theta",      "physical.mass_kg",
        "physical.lambda_nm", "physical.kappa_per_m", "physical.theta_rad",
        "physical.v1_joule",  "physical.v3_joule",   "physical.sigma_m",
        "grid.k_min",         "grid.k_max",          "grid.n",
        "time.tau_max",       "time.samples",        "output.dir",
        "output.kinds",       "compare.deltas",      "compare.tau_max",
        "compare.samples",
    };
    return keys;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(const std::string& msg, const std::string& key, int line) {
    std::string where = key;
    if (line > 0) where += " (line " + std::to_string(line) + ")";
    throw ConfigError(msg + ": " + where);
}

double parse_double(const RawConfig& raw, const std::string& key) {
    const std::string& s = raw.values.at(key);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || trim(end) != "")
        fail("config value is not a number", key, raw.lines.count(key) ? raw.lines.at(key) : 0);
    return v;
}

std::size_t parse_count(const RawConfig& raw, const std::string& key) {
    const double v = parse_double(raw, key);
    if (!(v >= 1) || v != std::floor(v))
        fail("config value is not a positive integer", key,
             raw.lines.count(key) ? raw.lines.at(key) : 0);
    return static_cast<std::size_t>(v);
}

std::vector<double> parse_list(const RawConfig& raw, const std::string& key) {
    std::vector<double> out;
    std::stringstream ss(raw.values.at(key));
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        if (end == item.c_str() || trim(end) != "")
            fail("config list entry is not a number", key,
                 raw.lines.count(key) ? raw.lines.at(key) : 0);
        out.push_back(v);
    }
    if (out.empty())
        fail("config list is empty", key, raw.lines.count(key) ? raw.lines.at(key) : 0);
    return out;
}

// "re" or "re, im"
cxd parse_complex(const RawConfig& raw, const std::string& key) {
    const auto parts = parse_list(raw, key);
    if (parts.size() == 1) return {parts[0], 0.0};
    if (parts.size() == 2) return {parts[0], parts[1]};
    fail("complex value must be 're' or 're, im'", key,
         raw.lines.count(key) ? raw.lines.at(key) : 0);
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", v);
    return buf;
}

struct CsvFile {
    std::ofstream out;
    explicit CsvFile(const fs::path& path, const std::string& header)
        : out(path, std::ios::binary) {
        if (!out) throw Error("cannot open output file: " + path.string());
        out << header << "\n";
    }
    void row(const std::vector<double>& vals) {
        for (std::size_t i = 0; i < vals.size(); ++i)
            out << (i ? "," : "") << fmt(vals[i]);
        out << "\n";
    }
};

}  // namespace

void RawConfig::set(const std::string& key, const std::string& value, int line) {
    values[key] = value;
    if (line > 0) lines[key] = line;
}

void RawConfig::merge(const RawConfig& overrides) {
    for (const auto& [k, v] : overrides.values)
        set(k, v, overrides.lines.count(k) ? overrides.lines.at(k) : 0);
}

RawConfig parse_config_text(std::istream& in, const std::string& source_name) {
    RawConfig raw;
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(source_name + ":" + std::to_string(lineno) +
                                  ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw ConfigError(source_name + ":" + std::to_string(lineno) +
                                  ": empty section name");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(source_name + ":" + std::to_string(lineno) +
                              ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError(source_name + ":" + std::to_string(lineno) +
                              ": expected 'key = value'");
        if (section.empty())
            throw ConfigError(source_name + ":" + std::to_string(lineno) +
                              ": key outside any [section]");
        raw.set(section + "." + key, value, lineno);
    }
    return raw;
}

std::vector<std::string> builtin_names() {
    return {"default", "fig2", "fig3a", "fig3c", "fig3ef", "fig4a", "fig4b"};
}

RawConfig builtin_raw(const std::string& name) {
    RawConfig r;
    // common defaults
    r.set("scenario.name", name);
    r.set("scenario.limit", "full");
    r.set("initial.k0", "0");
    r.set("initial.delta", "0.05");
    r.set("initial.c1", "1, 0");
    r.set("initial.c2", "1, 0");
    r.set("grid.k_min", "-8");
    r.set("grid.k_max", "8");
    r.set("grid.n", "4096");
    r.set("time.tau_max", "20");
    r.set("time.samples", "401");
    r.set("output.dir", "out");
    r.set("output.kinds", "com, populations");

    if (name == "default") {
        return r;
    }
    if (name == "fig2") {
        // width ladder, full vs dirac position densities
        r.set("scenario.limit", "both");
        r.set("initial.delta", "0.2");
        r.set("time.tau_max", "5");
        r.set("time.samples", "11");
        r.set("output.kinds", "density_x");
        r.set("compare.deltas", "0.4, 0.2, 0.1, 0.05");
        r.set("compare.tau_max", "5");
        r.set("compare.samples", "11");
        return r;
    }
    if (name == "fig3a" || name == "fig3c") {
        r.set("params.v_z", name == "fig3a" ? "1" : "3");
        r.set("output.kinds", "density_x, com, analytic_overlay");
        return r;
    }
    if (name == "fig3ef") {
        // moving packet, dephasing superposition: oscillation dies out
        r.set("initial.k0", "1");
        r.set("initial.c2", "0.70710678118654752, 0.70710678118654752");  // e^{i pi/4}
        r.set("grid.n", "8192");  // moving packets need the larger conjugate box
        r.set("time.samples", "801");
        r.set("output.kinds", "density_x, com, populations");
        return r;
    }
    if (name == "fig4a" || name == "fig4b") {
        r.set("initial.k0", "1");
        if (name == "fig4b")
            r.set("initial.c2", "0.70710678118654752, 0.70710678118654752");
        r.set("time.tau_max", "10");
        r.set("time.samples", "801");
        r.set("output.kinds", "density_x, density_k, populations");
        return r;
    }
    throw ConfigError("unknown builtin scenario: " + name);
}

std::vector<std::string> expand_scenario_name(const std::string& name) {
    if (name == "fig4") return {"fig4a", "fig4b"};
    return {name};
}

bool ScenarioConfig::wants(const std::string& kind) const {
    return std::find(kinds.begin(), kinds.end(), kind) != kinds.end();
}

std::vector<double> ScenarioConfig::tau_grid() const {
    std::vector<double> taus(tau_samples);
    for (std::size_t i = 0; i < tau_samples; ++i)
        taus[i] = tau_max * static_cast<double>(i) / static_cast<double>(tau_samples - 1);
    return taus;
}

ScenarioConfig make_scenario(const RawConfig& raw) {
    for (const auto& [key, value] : raw.values) {
        (void)value;
        if (!known_keys().count(key))
            fail("unknown config key", key, raw.lines.count(key) ? raw.lines.at(key) : 0);
    }

    ScenarioConfig cfg;
    auto has = [&](const char* k) { return raw.values.count(k) != 0; };

    if (has("scenario.name")) cfg.name = raw.values.at("scenario.name");
    if (has("scenario.limit")) {
        const std::string& lim = raw.values.at("scenario.limit");
        if (lim == "full") { cfg.run_full = true; cfg.run_dirac = false; }
        else if (lim == "dirac") { cfg.run_full = false; cfg.run_dirac = true; }
        else if (lim == "both") { cfg.run_full = true; cfg.run_dirac = true; }
        else fail("scenario.limit must be full, dirac or both", "scenario.limit",
                  raw.lines.count("scenario.limit") ? raw.lines.at("scenario.limit") : 0);
    }

    if (has("initial.k0")) cfg.initial.k0 = parse_double(raw, "initial.k0");
    if (has("initial.delta")) cfg.initial.delta = parse_double(raw, "initial.delta");
    cxd c1 = has("initial.c1") ? parse_complex(raw, "initial.c1") : cxd(1, 0);
    cxd c2 = has("initial.c2") ? parse_complex(raw, "initial.c2") : cxd(1, 0);
    const double cn = std::sqrt(std::norm(c1) + std::norm(c2));
    if (cn == 0.0) fail("initial spinor must be nonzero", "initial.c1", 0);
    cfg.initial.c1 = c1 / cn;
    cfg.initial.c2 = c2 / cn;

    const bool physical = has("physical.mass_kg") || has("physical.lambda_nm") ||
                          has("physical.kappa_per_m") || has("physical.theta_rad") ||
                          has("physical.v1_joule") || has("physical.v3_joule") ||
                          has("physical.sigma_m");
    if (physical) {
        if (has("params.v_z") || has("params.c_theta"))
            throw ConfigError("give either a [params] or a [physical] block, not both");
        core::PhysicalParams p{};
        if (!has("physical.mass_kg")) throw ConfigError("[physical] needs mass_kg");
        p.mass = parse_double(raw, "physical.mass_kg");
        if (has("physical.kappa_per_m") == has("physical.lambda_nm"))
            throw ConfigError("[physical] needs exactly one of lambda_nm, kappa_per_m");
        p.kappa = has("physical.kappa_per_m")
                      ? parse_double(raw, "physical.kappa_per_m")
                      : 2.0 * kPi / (parse_double(raw, "physical.lambda_nm") * 1e-9);
        p.theta = has("physical.theta_rad") ? parse_double(raw, "physical.theta_rad") : kPi / 2;
        p.v1 = has("physical.v1_joule") ? parse_double(raw, "physical.v1_joule") : 0.0;
        p.v3 = has("physical.v3_joule") ? parse_double(raw, "physical.v3_joule") : 0.0;
        p.validate();
        cfg.physical = p;
        cfg.params = core::reduce_params(p);
        if (has("physical.sigma_m"))
            cfg.initial.delta = core::delta_from_sigma(p.kappa, parse_double(raw, "physical.sigma_m"));
    } else {
        if (has("params.v_z")) cfg.params.v_z = parse_double(raw, "params.v_z");
        if (has("params.c_theta")) cfg.params.c_theta = parse_double(raw, "params.c_theta");
    }
    if (!(cfg.params.c_theta >= 0.0 && cfg.params.c_theta <= 1.0))
        fail("params.c_theta must lie in [0, 1]", "params.c_theta", 0);

    if (has("grid.k_min")) cfg.k_min = parse_double(raw, "grid.k_min");
    if (has("grid.k_max")) cfg.k_max = parse_double(raw, "grid.k_max");
    if (has("grid.n")) cfg.grid_n = parse_count(raw, "grid.n");
    if (has("time.tau_max")) cfg.tau_max = parse_double(raw, "time.tau_max");
    if (has("time.samples")) cfg.tau_samples = parse_count(raw, "time.samples");
    if (cfg.tau_samples < 2) fail("time.samples must be at least 2", "time.samples", 0);
    if (!(cfg.tau_max > 0)) fail("time.tau_max must be positive", "time.tau_max", 0);

    if (has("output.dir")) cfg.out_dir = raw.values.at("output.dir");
    if (has("output.kinds")) {
        cfg.kinds.clear();
        std::stringstream ss(raw.values.at("output.kinds"));
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item.empty()) continue;
            if (item != "com" && item != "populations" && item != "density_x" &&
                item != "density_k" && item != "analytic_overlay")
                fail("unknown output kind '" + item + "'", "output.kinds",
                     raw.lines.count("output.kinds") ? raw.lines.at("output.kinds") : 0);
            cfg.kinds.push_back(item);
        }
    } else {
        cfg.kinds = {"com", "populations"};
    }

    if (has("compare.deltas")) cfg.compare_deltas = parse_list(raw, "compare.deltas");
    if (has("compare.tau_max")) cfg.compare_tau_max = parse_double(raw, "compare.tau_max");
    if (has("compare.samples")) cfg.compare_samples = parse_count(raw, "compare.samples");

    cfg.initial.validate();
    return cfg;
}

bool RunSummary::all_pass() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const SummaryEntry& e) { return e.pass; });
}

namespace {

void add_entry(RunSummary& sum, const std::string& metric, double value, double reference,
               double tolerance) {
    const bool pass = tolerance <= 0 || std::abs(value - reference) <= tolerance;
    sum.entries.push_back({metric, value, reference, tolerance, pass});
}

void write_summary(const RunSummary& sum, const fs::path& path) {
    CsvFile f(path, "metric,value,reference,tolerance,status");
    for (const auto& e : sum.entries) {
        f.out << e.metric << "," << fmt(e.value) << "," << fmt(e.reference) << ","
              << fmt(e.tolerance) << "," << (e.pass ? "PASS" : "FAIL") << "\n";
    }
}

// long-format map, decimated to a plottable grid of at most max_rows time
// slices by max_cols axis nodes
void write_density(const observables::DensityMap& m, const fs::path& path,
                   double axis_min, double axis_max, std::size_t max_cols,
                   std::size_t max_rows = 121) {
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < m.axis.size(); ++i)
        if (m.axis[i] >= axis_min && m.axis[i] <= axis_max) cols.push_back(i);
    const std::size_t cstride = std::max<std::size_t>(1, cols.size() / max_cols);
    const std::size_t rstride = std::max<std::size_t>(1, m.tau.size() / max_rows);

    CsvFile f(path, m.space == observables::Space::x ? "tau,x,rho,rho1,rho2"
                                                     : "tau,k,rho,rho1,rho2");
    for (std::size_t r = 0; r < m.tau.size(); r += rstride)
        for (std::size_t j = 0; j < cols.size(); j += cstride) {
            const std::size_t i = cols[j];
            f.row({m.tau[r], m.axis[i], m.rho[r][i], m.rho1[r][i], m.rho2[r][i]});
        }
}

// population-oscillation angular frequency from mean-removed zero crossings
// over roughly the first two cycles; the crossings sit half a cycle apart and
// the signal oscillates at twice the transfer frequency.
double extract_population_frequency(const std::vector<double>& tau,
                                    const std::vector<double>& delta_n, double omega_ref) {
    std::vector<double> t, r;
    const double window = 2.5 * kPi / omega_ref;
    double lo = 1e300, hi = -1e300;
    for (std::size_t i = 0; i < tau.size() && tau[i] <= window; ++i) {
        t.push_back(tau[i]);
        r.push_back(delta_n[i]);
        lo = std::min(lo, delta_n[i]);
        hi = std::max(hi, delta_n[i]);
    }
    const double mid = 0.5 * (lo + hi);
    for (auto& v : r) v -= mid;
    return 0.5 * extract::zero_crossing_frequency(t, r);
}

}  // namespace

RunSummary run_scenario(const ScenarioConfig& cfg) {
    const core::KGrid grid = core::make_k_grid(cfg.k_min, cfg.k_max, cfg.grid_n);
    const std::vector<double> taus = cfg.tau_grid();
    fs::create_directories(cfg.out_dir);
    const fs::path dir(cfg.out_dir);

    RunSummary sum;
    const double vz = cfg.params.v_z;
    const double ratio = std::abs(vz) / cfg.initial.delta;
    const bool equal_spinor = std::abs(cfg.initial.c1 - cfg.initial.c2) < 1e-12 &&
                              std::abs(cfg.initial.c1.imag()) < 1e-12;
    const bool zb_regime = cfg.initial.k0 == 0.0 && equal_spinor && vz != 0.0;
    const bool track_com = cfg.wants("com") || (zb_regime && ratio >= 5.0);

    struct LimitRun { evolve::Limit limit; const char* tag; };
    std::vector<LimitRun> runs;
    if (cfg.run_full) runs.push_back({evolve::Limit::full, "full"});
    if (cfg.run_dirac) runs.push_back({evolve::Limit::dirac, "dirac"});

    for (const auto& lr : runs) {
        const std::string prefix = cfg.name + "_" + lr.tag;
        const auto series = observables::observe_series(cfg.initial, cfg.params, lr.limit, grid,
                                                        taus, track_com);

        double norm_drift = 0;
        for (double n : series.norm) norm_drift = std::max(norm_drift, std::abs(n - 1.0));
        add_entry(sum, std::string(lr.tag) + ".norm_drift", norm_drift, 0.0, 1e-10);

        if (cfg.wants("com")) {
            const bool phys = cfg.physical.has_value();
            CsvFile f(dir / (prefix + "_com.csv"),
                      phys ? "tau,x_mean,t_s,x_mean_m" : "tau,x_mean");
            for (std::size_t i = 0; i < taus.size(); ++i) {
                if (phys) {
                    const double tu = core::time_unit_seconds(*cfg.physical);
                    f.row({taus[i], series.x_mean[i], taus[i] * tu,
                           series.x_mean[i] / cfg.physical->kappa});
                } else {
                    f.row({taus[i], series.x_mean[i]});
                }
            }
        }
        if (cfg.wants("populations")) {
            CsvFile f(dir / (prefix + "_populations.csv"), "tau,n1,n2,delta_n");
            for (std::size_t i = 0; i < taus.size(); ++i)
                f.row({taus[i], series.n1[i], series.n2[i], series.delta_n[i]});
        }
        std::vector<double> map_taus;
        if (cfg.wants("density_x") || cfg.wants("density_k")) {
            const std::size_t rstride = std::max<std::size_t>(1, taus.size() / 121);
            for (std::size_t i = 0; i < taus.size(); i += rstride) map_taus.push_back(taus[i]);
        }
        if (cfg.wants("density_x")) {
            const auto m = observables::density_map(cfg.initial, cfg.params, lr.limit, grid,
                                                    map_taus, observables::Space::x);
            write_density(m, dir / (prefix + "_density_x.csv"), -80.0, 80.0, 400);
        }
        if (cfg.wants("density_k")) {
            const auto m = observables::density_map(cfg.initial, cfg.params, lr.limit, grid,
                                                    map_taus, observables::Space::k);
            write_density(m, dir / (prefix + "_density_k.csv"),
                          cfg.initial.k0 - 8.0 * cfg.initial.delta,
                          cfg.initial.k0 + 8.0 * cfg.initial.delta, 400);
        }

        if (zb_regime) {
            double dn_max = 0;
            for (double d : series.delta_n) dn_max = std::max(dn_max, std::abs(d));
            add_entry(sum, std::string(lr.tag) + ".delta_n_zero", dn_max, 0.0, 1e-10);
        }

        // ZB oscillation checks need a clean drift + oscillation split, which
        // holds for the centred equal superposition well inside the gap.
        const bool enough_periods = cfg.tau_max * std::abs(vz) / kPi >= 3.0;
        if (zb_regime && track_com && ratio >= 5.0 && enough_periods) {
            std::vector<double> resid(taus.size());
            const double slope = analytic::drift_slope(cfg.params, cfg.initial.delta);
            for (std::size_t i = 0; i < taus.size(); ++i)
                resid[i] = series.x_mean[i] - slope * taus[i];
            const double w_est = extract::zero_crossing_frequency(taus, resid);
            add_entry(sum, std::string(lr.tag) + ".zb_frequency", w_est, 2.0 * std::abs(vz),
                      0.005 * 2.0 * std::abs(vz));

            if (ratio >= 10.0) {
                double worst = 0;
                for (std::size_t i = 0; i < taus.size(); ++i) {
                    const double xz =
                        analytic::zitter_term(taus[i], cfg.params, cfg.initial.delta).x_z;
                    worst = std::max(worst, std::abs(resid[i] - xz));
                }
                add_entry(sum, std::string(lr.tag) + ".com_vs_analytic", worst, 0.0,
                          0.01 / std::abs(vz));
            }
        }

        if (cfg.initial.k0 != 0.0 && track_com && cfg.wants("com")) {
            // informational: first tau where the oscillation amplitude of the
            // centre of mass has halved (the moving-packet breakdown)
            const auto fit = extract::least_squares(taus, series.x_mean);
            std::vector<double> resid(taus.size());
            for (std::size_t i = 0; i < taus.size(); ++i)
                resid[i] = series.x_mean[i] - (fit.slope * taus[i] + fit.intercept);
            const auto extrema = extract::local_extrema(taus, resid);
            double breakdown = std::numeric_limits<double>::quiet_NaN();
            if (!extrema.empty()) {
                const double first = std::abs(extrema.front().second);
                for (const auto& [t, a] : extrema)
                    if (std::abs(a) < 0.5 * first) {
                        breakdown = t;
                        break;
                    }
            }
            sum.entries.push_back(
                {std::string(lr.tag) + ".zb_breakdown_tau", breakdown, 0.0, 0.0, true});
        }

        if (cfg.initial.k0 != 0.0 && std::abs(cfg.initial.c1) > 1e-8 &&
            std::abs(cfg.initial.c2) > 1e-8) {
            // two-level reduction cross-check on the population oscillation
            const auto xs = core::to_position(core::sample_gaussian(cfg.initial, grid));
            auto normalize = [&](std::vector<cxd> v) {
                long double s = 0;
                for (const auto& a : v) s += std::norm(a);
                const double inv = 1.0 / std::sqrt(static_cast<double>(s) * xs.grid.dx);
                for (auto& a : v) a *= inv;
                return v;
            };
            const auto phi1 = normalize(xs.a1);
            const auto phi2 = normalize(xs.a2);
            const cxd w = twolevel::coupling_overlap(phi1, phi2, xs.grid, cfg.params);
            const double omega_r =
                twolevel::rabi_frequency(twolevel::reduce_constant_gap(w, vz));
            const double w_pop = extract_population_frequency(taus, series.delta_n, omega_r);
            add_entry(sum, std::string(lr.tag) + ".rabi_frequency", w_pop, omega_r,
                      0.02 * omega_r);
        }
    }

    if (cfg.wants("analytic_overlay")) write_analytic_table(cfg);
    write_summary(sum, dir / (cfg.name + "_summary.csv"));
    return sum;
}

CompareResult compare_limits(const ScenarioConfig& cfg) {
    const core::KGrid grid = core::make_k_grid(cfg.k_min, cfg.k_max, cfg.grid_n);
    std::vector<double> taus(cfg.compare_samples);
    for (std::size_t i = 0; i < cfg.compare_samples; ++i)
        taus[i] = cfg.compare_tau_max * static_cast<double>(i) /
                  static_cast<double>(cfg.compare_samples - 1);

    CompareResult res;
    for (double delta : cfg.compare_deltas) {
        core::GaussianSpec spec = cfg.initial;
        spec.delta = delta;
        const auto full = observables::density_map(spec, cfg.params, evolve::Limit::full, grid,
                                                   taus, observables::Space::x);
        const auto dirac = observables::density_map(spec, cfg.params, evolve::Limit::dirac, grid,
                                                    taus, observables::Space::x);
        double worst = 0;
        for (std::size_t r = 0; r < taus.size(); ++r)
            for (std::size_t i = 0; i < full.axis.size(); ++i)
                worst = std::max(worst, std::abs(full.rho[r][i] - dirac.rho[r][i]));
        res.deltas.push_back(delta);
        res.residuals.push_back(worst);
    }
    res.monotone = true;
    for (std::size_t i = 1; i < res.residuals.size(); ++i)
        if (!(res.residuals[i] < res.residuals[i - 1])) res.monotone = false;

    fs::create_directories(cfg.out_dir);
    CsvFile f(fs::path(cfg.out_dir) / (cfg.name + "_compare.csv"),
              "delta,max_density_residual");
    for (std::size_t i = 0; i < res.deltas.size(); ++i)
        f.row({res.deltas[i], res.residuals[i]});
    return res;
}

void write_analytic_table(const ScenarioConfig& cfg) {
    fs::create_directories(cfg.out_dir);
    CsvFile f(fs::path(cfg.out_dir) / (cfg.name + "_analytic.csv"),
              "tau,x_drift,x_zb,x_total,delta_n_delta_limit");
    for (double tau : cfg.tau_grid()) {
        const double xd = analytic::drift(tau, cfg.params, cfg.initial.delta).x_d;
        const double xz =
            cfg.params.v_z != 0.0
                ? analytic::zitter_term(tau, cfg.params, cfg.initial.delta).x_z
                : 0.0;
        const double dn = analytic::delta_limit_population(cfg.initial.k0, cfg.params, tau);
        f.row({tau, xd, xz, xd + xz, dn});
    }
}

RunSummary run_selftest() {
    RunSummary sum;
    const core::DimensionlessParams params{1.0, 1.0};
    const core::KGrid grid = core::default_k_grid();

    // unitarity and population-sum checks on the default packet
    {
        core::GaussianSpec spec;
        spec.k0 = 0;
        spec.delta = 0.05;
        spec.c1 = spec.c2 = cxd(1.0 / std::sqrt(2.0), 0);
        const auto s0 = core::sample_gaussian(spec, grid);
        add_entry(sum, "sample_norm", s0.norm(), 1.0, 1e-12);
        const auto s1 = evolve::propagate(s0, 50.0, params, evolve::Limit::full);
        add_entry(sum, "unitarity_tau50", s1.norm(), 1.0, 1e-12);
        const auto p = observables::populations(s1);
        add_entry(sum, "population_sum", p.n1 + p.n2, 1.0, 1e-10);
        add_entry(sum, "no_transfer_k0_zero", p.delta_n(), 0.0, 1e-10);

        const auto xs = core::to_position(s0);
        add_entry(sum, "parseval", xs.norm(), s0.norm(), 1e-10);
        const auto back = core::from_position(xs, grid);
        double worst = 0;
        for (std::size_t i = 0; i < grid.n; ++i)
            worst = std::max(worst, std::abs(back.a1[i] - s0.a1[i]));
        add_entry(sum, "round_trip", worst, 0.0, 1e-10);
    }

    // closed-form drift and oscillation against direct quadrature
    {
        const double delta = 0.1;
        const double tau = 24.0;
        long double drift_q = 0, zb_q = 0;
        const std::size_t n = 200001;
        const double kmax = 2.0, dk = 2 * kmax / (n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            const double k = -kmax + dk * static_cast<double>(i);
            const double g2 = std::exp(-k * k / (delta * delta)) / (delta * std::sqrt(kPi));
            const double w2 = 4 * k * k + 1.0;
            drift_q += g2 * 8.0 * k * k / w2 * dk;
            zb_q += g2 * std::sin(2.0 * std::sqrt(w2) * tau) / (w2 * std::sqrt(w2)) * dk;
        }
        add_entry(sum, "drift_closed_form", analytic::drift_slope(params, delta),
                  static_cast<double>(drift_q), 1e-10);
        add_entry(sum, "zitter_closed_form", analytic::zitter_term(tau, params, delta).x_z,
                  static_cast<double>(zb_q), 1e-3);
    }

    // delta-limit population difference against a narrow packet
    {
        const double k0 = 1.0, delta = 1e-3;
        const double w0 = std::sqrt(4 * k0 * k0 + 1.0);
        const double tau = kPi / (2.0 * w0);
        core::GaussianSpec spec;
        spec.k0 = k0;
        spec.delta = delta;
        spec.c1 = spec.c2 = cxd(1.0 / std::sqrt(2.0), 0);
        const auto narrow = core::make_k_grid(k0 - 0.02, k0 + 0.02, 4096);
        const auto st = evolve::propagate(core::sample_gaussian(spec, narrow), tau, params,
                                          evolve::Limit::full);
        add_entry(sum, "delta_limit_population", observables::populations(st).delta_n(),
                  analytic::delta_limit_population(k0, params, tau), 1e-4);
    }

    // special function sanity
    add_entry(sum, "erfc_at_1", analytic::erfc(1.0), 0.15729920705028513, 1e-14);
    add_entry(sum, "erfc_reflection", analytic::erfc(0.7) + analytic::erfc(-0.7), 2.0, 1e-14);
    add_entry(sum, "erfcx_scaling", analytic::erfcx(30.0) * 30.0 * std::sqrt(kPi),
              1.0 - 1.0 / (2.0 * 30.0 * 30.0) + 3.0 / (4.0 * std::pow(30.0, 4)), 1e-6);
    return sum;
}

}  // namespace zitter::scenario
