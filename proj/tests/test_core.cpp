#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "zitter/core.hpp"
#include "zitter/errors.hpp"

using namespace zitter;
using namespace zitter::core;

namespace {
const double kSqrt2Inv = 1.0 / std::sqrt(2.0);
}

TEST_CASE("make_k_grid produces uniform nodes") {
    const KGrid g = make_k_grid(-8, 8, 5);
    CHECK(g.dk == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(g.node(0) == doctest::Approx(-8.0));
    CHECK(g.node(1) == doctest::Approx(-4.0));
    CHECK(g.node(2) == doctest::Approx(0.0));
    CHECK(g.node(4) == doctest::Approx(8.0));

    const KGrid d = make_k_grid(-8, 8, 4096);
    CHECK(d.dk == doctest::Approx(16.0 / 4095.0).epsilon(1e-14));
    CHECK(d.dk == doctest::Approx(0.003907).epsilon(1e-4));
}

TEST_CASE("make_k_grid rejects bad bounds") {
    CHECK_THROWS_AS(make_k_grid(8, -8, 4), InvalidBoundsError);
    CHECK_THROWS_AS(make_k_grid(0, 0, 4), InvalidBoundsError);
    CHECK_THROWS_AS(make_k_grid(-1, 1, 1), InvalidBoundsError);
}

TEST_CASE("k grid is symmetric about zero") {
    const KGrid g = default_k_grid();
    for (std::size_t i : {std::size_t(0), std::size_t(17), std::size_t(2047)})
        CHECK(g.node(i) == -g.node(g.n - 1 - i));
}

TEST_CASE("sample_gaussian peak density") {
    // envelope squared at the centre is 1/(delta sqrt(pi)); use an odd node
    // count so k = 0 is an exact node
    GaussianSpec spec;
    spec.k0 = 0;
    spec.delta = 0.1;
    spec.c1 = cxd(1, 0);
    spec.c2 = cxd(0, 0);
    const KGrid g = make_k_grid(-8, 8, 4097);
    const SpinorK s = sample_gaussian(spec, g);
    const double peak = std::norm(s.a1[2048]);
    CHECK(g.node(2048) == doctest::Approx(0.0).epsilon(1e-300));
    CHECK(peak == doctest::Approx(1.0 / (0.1 * std::sqrt(M_PI))).epsilon(1e-9));
    CHECK(peak == doctest::Approx(5.6419).epsilon(1e-4));
}

TEST_CASE("sample_gaussian discrete norm is exactly one") {
    GaussianSpec spec;
    spec.k0 = 1;
    spec.delta = 0.05;
    spec.c1 = cxd(kSqrt2Inv, 0);
    spec.c2 = cxd(0, kSqrt2Inv);
    const SpinorK s = sample_gaussian(spec, default_k_grid());
    // direct summation oracle
    long double acc = 0;
    for (std::size_t i = 0; i < s.grid.n; ++i) acc += std::norm(s.a1[i]) + std::norm(s.a2[i]);
    CHECK(static_cast<double>(acc) * s.grid.dk == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sample_gaussian validates the spinor weights") {
    GaussianSpec spec;
    spec.c1 = cxd(1, 0);
    spec.c2 = cxd(0.5, 0);  // norm 1.25
    CHECK_THROWS_AS(sample_gaussian(spec, default_k_grid()), PreconditionError);
}

TEST_CASE("sample_gaussian rejects unresolvable states") {
    GaussianSpec spec;
    spec.k0 = 0;
    spec.delta = 1e-3;  // far below the default grid spacing
    spec.c1 = cxd(1, 0);
    spec.c2 = cxd(0, 0);
    CHECK_THROWS_AS(sample_gaussian(spec, default_k_grid()), TruncationError);
    // too-narrow span is a precondition violation
    spec.delta = 0.1;
    CHECK_THROWS_AS(sample_gaussian(spec, make_k_grid(-0.3, 0.3, 512)), PreconditionError);
}

TEST_CASE("to_position reproduces the Gaussian pair with delta * sigma = sqrt(2)") {
    GaussianSpec spec;
    spec.k0 = 0;
    spec.delta = 0.1;
    spec.c1 = cxd(1, 0);
    spec.c2 = cxd(0, 0);
    const SpinorX xs = to_position(sample_gaussian(spec, default_k_grid()));

    // density exp(-2 x^2 / sigma^2): sigma from the second moment, <x^2> = sigma^2/4
    long double m2 = 0;
    for (std::size_t i = 0; i < xs.grid.n; ++i) {
        const double x = xs.grid.node(i);
        m2 += x * x * std::norm(xs.a1[i]);
    }
    const double sigma = 2.0 * std::sqrt(static_cast<double>(m2) * xs.grid.dx);
    CHECK(sigma * spec.delta == doctest::Approx(std::sqrt(2.0)).epsilon(1e-8));

    // quadrature check of the analytic pair: rho(x) = (delta/sqrt(pi)) e^{-delta^2 x^2}
    for (std::size_t i : {xs.grid.n / 2, xs.grid.n / 2 + 40, xs.grid.n / 2 + 90}) {
        const double x = xs.grid.node(i);
        const double expected =
            spec.delta / std::sqrt(M_PI) * std::exp(-spec.delta * spec.delta * x * x);
        CHECK(std::norm(xs.a1[i]) == doctest::Approx(expected).epsilon(1e-8));
    }
}

TEST_CASE("momentum boost leaves the position density unchanged") {
    GaussianSpec a, b;
    a.delta = b.delta = 0.1;
    a.c1 = b.c1 = cxd(kSqrt2Inv, 0);
    a.c2 = b.c2 = cxd(kSqrt2Inv, 0);
    a.k0 = 0;
    b.k0 = 1.0;
    const SpinorX xa = to_position(sample_gaussian(a, default_k_grid()));
    const SpinorX xb = to_position(sample_gaussian(b, default_k_grid()));
    double worst = 0;
    for (std::size_t i = 0; i < xa.grid.n; ++i) {
        const double ra = std::norm(xa.a1[i]) + std::norm(xa.a2[i]);
        const double rb = std::norm(xb.a1[i]) + std::norm(xb.a2[i]);
        worst = std::max(worst, std::abs(ra - rb));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("Parseval and round trip on a random spinor") {
    std::mt19937 rng(20240811);
    std::normal_distribution<double> gauss(0.0, 1.0);
    SpinorK s;
    s.grid = make_k_grid(-8, 8, 1024);
    s.a1.resize(s.grid.n);
    s.a2.resize(s.grid.n);
    for (std::size_t i = 0; i < s.grid.n; ++i) {
        s.a1[i] = cxd(gauss(rng), gauss(rng));
        s.a2[i] = cxd(gauss(rng), gauss(rng));
    }
    const double scale = 1.0 / std::sqrt(s.norm());
    for (std::size_t i = 0; i < s.grid.n; ++i) {
        s.a1[i] *= scale;
        s.a2[i] *= scale;
    }

    const SpinorX xs = to_position(s);
    CHECK(xs.norm() == doctest::Approx(s.norm()).epsilon(1e-10));

    const SpinorK back = from_position(xs, s.grid);
    double worst = 0;
    for (std::size_t i = 0; i < s.grid.n; ++i) {
        worst = std::max(worst, std::abs(back.a1[i] - s.a1[i]));
        worst = std::max(worst, std::abs(back.a2[i] - s.a2[i]));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("conjugate grid requires a power-of-two node count") {
    CHECK_THROWS_AS(conjugate_grid(make_k_grid(-8, 8, 4097)), PreconditionError);
}

TEST_CASE("reduce_params reproduces the canonical gaps") {
    // theta = pi/2 with equal traps: v_z = 1/2 from the geometric potential
    PhysicalParams p{};
    p.mass = 1.4431606e-25;
    p.kappa = 2.0 * M_PI / 780e-9;
    p.theta = M_PI / 2;
    p.v1 = 0;
    p.v3 = 0;
    CHECK(reduce_params(p).v_z == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(reduce_params(p).c_theta == doctest::Approx(0.0).epsilon(1e-12));

    // trap offsets tuned to the recoil scale: v_z = 1 and v_z = 3
    const double er = energy_unit(p);
    p.v1 = er;  // V_z = (v1 - v3)/2 + er/2 at theta = pi/2
    p.v3 = 0;
    CHECK(reduce_params(p).v_z == doctest::Approx(1.0).epsilon(1e-12));
    p.v1 = 5.0 * er;
    CHECK(reduce_params(p).v_z == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("reduce_params is scale invariant") {
    PhysicalParams p{};
    p.mass = 1.4431606e-25;
    p.kappa = 8.0e6;
    p.theta = 1.1;
    p.v1 = 3.0e-30;
    p.v3 = 1.0e-30;
    const auto base = reduce_params(p);

    PhysicalParams q = p;
    q.kappa *= 2.0;  // energy unit scales by 4
    q.v1 *= 4.0;
    q.v3 *= 4.0;
    const auto scaled = reduce_params(q);
    CHECK(scaled.v_z == doctest::Approx(base.v_z).epsilon(1e-12));
    CHECK(scaled.c_theta == doctest::Approx(base.c_theta).epsilon(1e-15));
}

TEST_CASE("parameter validation") {
    PhysicalParams p{};
    p.mass = -1;
    p.kappa = 1;
    p.theta = 0.3;
    CHECK_THROWS_AS(p.validate(), PreconditionError);
    p.mass = 1;
    p.theta = 2.0;  // > pi/2
    CHECK_THROWS_AS(p.validate(), PreconditionError);
}

TEST_CASE("delta_from_sigma") {
    // real-space envelope e^{-x^2/sigma^2} maps to momentum width sqrt(2)/(kappa sigma)
    CHECK(delta_from_sigma(2.0, 3.0) == doctest::Approx(std::sqrt(2.0) / 6.0).epsilon(1e-15));
    CHECK_THROWS_AS(delta_from_sigma(2.0, 0.0), PreconditionError);
}
