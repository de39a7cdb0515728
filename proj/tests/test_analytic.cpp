#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "zitter/analytic.hpp"
#include "zitter/errors.hpp"
#include "zitter/evolve.hpp"
#include "zitter/observables.hpp"

using namespace zitter;
using namespace zitter::core;
using namespace zitter::analytic;

TEST_CASE("erfc endpoints and frozen value") {
    CHECK(analytic::erfc(0.0) == 1.0);
    CHECK(analytic::erfc(40.0) == 0.0);  // underflow limit plays the role of x -> inf
    CHECK(analytic::erfc(1.0) == doctest::Approx(0.15729920705028513).epsilon(1e-15));
    CHECK(analytic::erf(0.3) == doctest::Approx(1.0 - analytic::erfc(0.3)).epsilon(1e-15));
}

TEST_CASE("erfc matches the quadrature oracle to 1e-14") {
    for (double x : {0.0, 0.1, 0.25, 0.4687, 0.47, 0.8, 1.0, 1.5, 2.0, 3.0, 3.99, 4.0, 4.01,
                     5.0, 6.0}) {
        const double ref = oracles::erfc_quadrature(x);
        CHECK(std::abs(analytic::erfc(x) - ref) / ref < 1e-14);
    }
}

TEST_CASE("erfcx matches the quadrature oracle over the full range") {
    for (double x : {0.0, 0.3, 1.0, 2.5, 4.0, 5.0, 10.0, 20.0, 26.0, 30.0, 100.0, 1000.0}) {
        const double ref = oracles::erfcx_quadrature(x);
        CHECK(std::abs(analytic::erfcx(x) - ref) / ref < 1e-13);
    }
    // scaled and unscaled versions agree where both are representable
    for (double x : {0.5, 1.0, 3.0, 10.0, 20.0})
        CHECK(analytic::erfcx(x) == doctest::Approx(std::exp(x * x) * analytic::erfc(x)).epsilon(1e-13));
}

TEST_CASE("erfc reflection identity") {
    std::mt19937 rng(3371);
    std::uniform_real_distribution<double> ux(0.0, 6.0);
    for (int i = 0; i < 200; ++i) {
        const double x = ux(rng);
        CHECK(std::abs(analytic::erfc(x) + analytic::erfc(-x) - 2.0) < 1e-14);
    }
}

TEST_CASE("drift closed form against the branch-velocity quadrature") {
    // slope = Int G^2 (2k + w' n_x) dk, evaluated independently
    for (double vz : {0.5, 1.0, 3.0}) {
        for (double delta : {0.5, 0.1, 0.05}) {
            const DimensionlessParams p{vz, 1.0};
            const double oracle = oracles::drift_slope_quadrature(vz, delta);
            CHECK(drift_slope(p, delta) == doctest::Approx(oracle).epsilon(1e-9));
        }
    }
}

TEST_CASE("drift limits and frozen values") {
    const DimensionlessParams gapless{0.0, 1.0};
    // no gap: the equal superposition rides a single branch at the light
    // speed of the analogy, two grid units per unit tau
    CHECK(drift(3.0, gapless, 0.1).x_d == doctest::Approx(6.0).epsilon(1e-14));

    // v_z/delta = 1: bracket 2 [1 - sqrt(pi) X e^{X^2} analytic::erfc(X)] at X = 1/2
    const DimensionlessParams unit{1.0, 1.0};
    CHECK(drift(1.0, unit, 1.0).x_d == doctest::Approx(0.908717278470).epsilon(1e-10));
    CHECK(drift(1.0, unit, 1.0).regime == DriftRegime::exact_erfc);
    CHECK(drift(1.0, unit, 0.02).regime == DriftRegime::asymptotic);

    // large-gap falloff: x_d / tau -> (2 delta / v_z)^2 / ... -> 4 delta^2/v_z^2
    const double deep = drift(1.0, DimensionlessParams{20.0, 1.0}, 0.1).x_d;
    CHECK(deep == doctest::Approx(4.0 * 0.01 / 400.0).epsilon(2e-2));

    CHECK_THROWS_AS(drift(1.0, unit, 0.0), PreconditionError);
}

TEST_CASE("drift slope is monotone in the gap-to-width ratio and bounded") {
    const double delta = 0.1;
    double prev = 2.0 + 1e-12;
    for (double ratio = 0.1; ratio <= 30.0; ratio *= 1.5) {
        const DimensionlessParams p{ratio * delta, 1.0};
        const double s = drift_slope(p, delta);
        CHECK(s >= 0.0);
        CHECK(s <= 2.0);
        CHECK(s < prev);
        prev = s;
    }
}

TEST_CASE("asymptotic drift series") {
    const DimensionlessParams p{1.0, 1.0};

    // leading term at v_z/delta = 10: bracket 1/X^2 with X = 5
    const auto lead = drift_asymptotic(1.0, p, 0.1, 1);
    CHECK(lead.x_d == doctest::Approx(0.04).epsilon(1e-12));
    CHECK(lead.n_star == 25);
    CHECK(!lead.truncation_warning);

    // convergence well inside the optimal truncation
    const double exact = drift(1.0, p, 0.1).x_d;
    CHECK(std::abs(drift_asymptotic(1.0, p, 0.1, 12).x_d - exact) / exact < 1e-6);
    CHECK(std::abs(drift_asymptotic(1.0, p, 0.1, 5).x_d - exact) / exact < 1e-4);

    // running past the optimal truncation raises the warning
    const DimensionlessParams p3{3.0, 1.0};
    const auto diverging = drift_asymptotic(1.0, p3, 1.0, 3);  // X = 1.5, n* = 2
    CHECK(diverging.n_star == 2);
    CHECK(diverging.truncation_warning);
    CHECK(!drift_asymptotic(1.0, p3, 1.0, 2).truncation_warning);

    CHECK_THROWS_AS(drift_asymptotic(1.0, p, 0.5, 2), PreconditionError);  // ratio 2 < 3
}

TEST_CASE("zitter_term closed cases") {
    const DimensionlessParams p{1.0, 1.0};

    CHECK(zitter_term(0.0, p, 0.1).x_z == doctest::Approx(0.0).epsilon(1e-300));

    // vanishing width: undamped oscillation sin(2 v_z tau)/v_z
    const DimensionlessParams p3{3.0, 1.0};
    for (double tau : {0.3, 2.0, 40.0}) {
        CHECK(zitter_term(tau, p3, 1e-8).x_z ==
              doctest::Approx(std::sin(6.0 * tau) / 3.0).epsilon(1e-9));
    }

    // envelope reduced by 2^{-1/4} where the damping argument reaches one
    const double delta = 0.1;
    const double tau_onset = 1.0 / (4.0 * delta * delta);  // v_z = 1
    CHECK(zitter_envelope(tau_onset, 1.0, delta) ==
          doctest::Approx(0.8408964152537145).epsilon(1e-12));

    CHECK(zitter_term(1.0, p, 0.3).regime_warning);        // ratio 10/3 < 5
    CHECK(!zitter_term(1.0, p, 0.1).regime_warning);
    CHECK_THROWS_AS(zitter_term(1.0, DimensionlessParams{0.0, 1.0}, 0.1), PreconditionError);
}

TEST_CASE("zitter_term tracks the oscillation quadrature deep into the damped regime") {
    // residual error is the next order in (delta/v_z)^2: a few 1e-3 at
    // gap-to-width ratio 10, an order of magnitude less at 20
    const DimensionlessParams p{1.0, 1.0};
    const double delta = 0.1;
    for (double tau : {1.0, 5.0, 12.7, 25.0, 60.0, 100.0}) {
        const double oracle = oracles::zitter_quadrature(1.0, delta, tau);
        CHECK(std::abs(zitter_term(tau, p, delta).x_z - oracle) < 3e-3);
    }
    for (double tau : {5.0, 50.0, 200.0}) {
        const double oracle = oracles::zitter_quadrature(1.0, 0.05, tau);
        CHECK(std::abs(zitter_term(tau, p, 0.05).x_z - oracle) < 2e-4);
    }
}

TEST_CASE("delta_limit_population closed form") {
    const DimensionlessParams p{1.0, 1.0};
    CHECK(delta_limit_population(0.0, p, 2.0) == 0.0);
    CHECK(delta_limit_population(1.0, DimensionlessParams{0.0, 1.0}, 2.0) == 0.0);

    // k0 = v_z = 1: amplitude 4/5, angular frequency 2 sqrt(5) in the
    // squared sine (period pi/sqrt(5))
    const double w0 = std::sqrt(5.0);
    CHECK(delta_limit_population(1.0, p, M_PI / (2 * w0)) ==
          doctest::Approx(0.8).epsilon(1e-12));
    CHECK(delta_limit_population(1.0, p, M_PI / w0) ==
          doctest::Approx(0.0).epsilon(1e-12));

    // bounded by one for every parameter combination
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(0.0, 5.0);
    for (int i = 0; i < 300; ++i)
        CHECK(std::abs(delta_limit_population(u(rng), DimensionlessParams{u(rng), 1.0},
                                              u(rng))) <= 1.0);
}

TEST_CASE("delta_limit_population against the narrow-Gaussian quadrature") {
    for (double k0 : {0.5, 1.0, 2.0}) {
        for (double vz : {1.0, 3.0}) {
            const DimensionlessParams p{vz, 1.0};
            const double w0 = std::sqrt(4 * k0 * k0 + vz * vz);
            for (double tau : {0.3 / w0, M_PI / (2 * w0), 2.4 / w0}) {
                const double oracle = oracles::delta_n_quadrature(k0, vz, 1e-3, tau);
                CHECK(std::abs(delta_limit_population(k0, p, tau) - oracle) < 1e-4);
            }
        }
    }
}

TEST_CASE("physical_scales for rubidium at 780 nm") {
    PhysicalParams p{};
    p.mass = 1.4431606e-25;  // 87 amu
    p.kappa = 2.0 * M_PI / 780e-9;
    p.theta = M_PI / 2;
    p.v1 = 0.0;
    p.v3 = 0.0;

    const auto s = physical_scales(p, 10e-6);
    CHECK(s.recoil_velocity == doctest::Approx(5.886e-3).epsilon(1e-3));  // ~0.59 cm/s
    CHECK(s.delta == doctest::Approx(std::sqrt(2.0) / (p.kappa * 10e-6)).epsilon(1e-12));

    // recoil-scale gap: kilohertz-range oscillation, damping onset tens of ms
    PhysicalParams pg = p;
    pg.v1 = energy_unit(p);  // v_z = 1
    const auto sg = physical_scales(pg, 10e-6);
    CHECK(sg.v_z == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sg.zb_frequency_hz > 300.0);
    CHECK(sg.zb_frequency_hz < 3.0e4);
    CHECK(sg.damping_onset_s > 1e-3);
    CHECK(sg.damping_onset_s < 1.0);

    // doubling the packet width quarters the momentum width and quadruples
    // the damping onset
    const auto swide = physical_scales(pg, 20e-6);
    CHECK(swide.damping_onset_s == doctest::Approx(4.0 * sg.damping_onset_s).epsilon(1e-12));
    CHECK_THROWS_AS(physical_scales(pg, 0.0), PreconditionError);
}

TEST_CASE("centre of mass equals drift plus oscillation within 1% of the amplitude") {
    // the full simulation against the two closed forms combined, for
    // gap-to-width ratios 10 and 20
    const DimensionlessParams params{1.0, 1.0};
    const KGrid grid = make_k_grid(-2, 2, 4096);
    for (double delta : {0.1, 0.05}) {
        GaussianSpec spec;
        spec.k0 = 0;
        spec.delta = delta;
        spec.c1 = spec.c2 = cxd(1.0 / std::sqrt(2.0), 0);
        const SpinorK s0 = sample_gaussian(spec, grid);
        const double slope = drift_slope(params, delta);
        double worst = 0;
        for (double tau = 0.0; tau <= 50.0; tau += 0.25) {
            const double x = zitter::observables::centre_of_mass(
                zitter::evolve::propagate(s0, tau, params, zitter::evolve::Limit::full));
            const double ref = slope * tau + zitter_term(tau, params, delta).x_z;
            worst = std::max(worst, std::abs(x - ref));
        }
        CAPTURE(delta);
        CHECK(worst < 0.01 / params.v_z);
    }
}

TEST_CASE("drift stays below the light-speed bound") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> uv(0.0, 5.0), ud(0.01, 1.0), ut(0.0, 100.0);
    for (int i = 0; i < 200; ++i) {
        const double tau = ut(rng);
        const auto r = drift(tau, DimensionlessParams{uv(rng), 1.0}, ud(rng));
        CHECK(r.x_d >= 0.0);
        CHECK(r.x_d <= 2.0 * tau + 1e-12);
    }
}
