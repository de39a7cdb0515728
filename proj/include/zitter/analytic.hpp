#pragma once

#include <cstddef>

#include "zitter/core.hpp"

// Closed-form results for the centre-of-mass motion and the population
// transfer of a Gaussian packet with k0 = 0, c = (1,1)/sqrt(2), c_theta = 1
// (drift and oscillation), plus the narrow-packet population-difference
// formula and physical-unit scale conversions. Every expression here is
// cross-checked against brute-force quadrature and the full propagator in the
// test suite.
namespace zitter::analytic {

// Complementary error function, |relative error| < 1e-14 wherever the result
// is representable (x < ~26.5); rational approximations after Cody.
double erfc(double x);
double erf(double x);
// exp(x^2) erfc(x), evaluated as a single scaled function so the drift
// bracket stays well-conditioned when both factors overflow/underflow.
double erfcx(double x);

enum class DriftRegime { exact_erfc, asymptotic };

struct DriftResult {
    double x_d = 0;
    DriftRegime regime = DriftRegime::exact_erfc;
};

// Centre-of-mass drift
//   x_d(tau) = 2 tau [ 1 - sqrt(pi) X e^{X^2} erfc(X) ],   X = v_z / (2 delta).
// The bracket is exact (Gaussian average of the branch-weighted group
// velocity 8 k^2 / omega_k^2); the slope is constant in tau, bounded by the
// light-speed drift 2 tau, and vanishes as v_z/delta -> infinity. Above
// v_z/delta = 25 the scaled-erfcx branch is flagged as asymptotic.
DriftResult drift(double tau, const core::DimensionlessParams& p, double delta);

double drift_slope(const core::DimensionlessParams& p, double delta);

struct AsymptoticDriftResult {
    double x_d = 0;
    std::size_t n_star = 0;        // optimal truncation index ~ X^2
    bool truncation_warning = false;  // n_terms ran past n_star
};

// Same drift with erfcx replaced by its large-X asymptotic series truncated
// after n_terms terms:
//   sqrt(pi) X e^{X^2} erfc(X) ~ sum_n (-1)^n (2n)! / (n! (2X)^{2n}).
// Requires v_z/delta >= 3; going past the optimal truncation sets the flag.
AsymptoticDriftResult drift_asymptotic(double tau, const core::DimensionlessParams& p,
                                       double delta, std::size_t n_terms);

struct ZitterResult {
    double x_z = 0;
    double envelope = 0;       // leading damping envelope (see below)
    bool regime_warning = false;  // v_z/delta < 5: outside the validity regime
};

// Oscillating part of the centre of mass. Leading closed form
//   x_z = (1/v_z) sin(2 v_z tau + (1/2) arctan(4 delta^2 tau / v_z))
//         / (1 + 16 delta^4 tau^2 / v_z^2)^{1/4},
// evaluated here with the first-order width corrections of the Gaussian
// average included (relative accuracy O((delta/v_z)^4)):
//   x_z = (1/v_z) Im[ e^{2 i v_z tau} q^{-1/2}
//                     (1 - 3 delta^2/(v_z^2 q) - 3 i delta^4 tau/(v_z^3 q^2)) ],
//   q = 1 - 4 i delta^2 tau / v_z.
ZitterResult zitter_term(double tau, const core::DimensionlessParams& p, double delta);

// The leading envelope (1 + 16 delta^4 tau^2 / v_z^2)^{-1/4}.
double zitter_envelope(double tau, double v_z, double delta);

// Narrow-packet limit of the population difference for c = (1,1)/sqrt(2):
//   dN(tau) = [4 k0 v_z / (4 k0^2 + v_z^2)] sin^2( sqrt(4 k0^2 + v_z^2) tau ).
// The quadratic denominator keeps |dN| <= 1 and is the one the narrow-Gaussian
// quadrature reproduces.
double delta_limit_population(double k0, const core::DimensionlessParams& p, double tau);

struct PhysicalScales {
    double recoil_velocity = 0;       // hbar kappa / m, m/s
    double zb_angular_frequency = 0;  // 2 V_z / hbar, rad/s
    double zb_frequency_hz = 0;       // the same over 2 pi
    double damping_onset_s = 0;       // where 4 delta^2 tau / v_z = 1, in s
    double delta = 0;                 // reduced width from sigma
    double v_z = 0;                   // reduced gap
    double time_unit_s = 0;
};

// Convert reduced-unit results to laboratory numbers for a packet of
// real-space width sigma (envelope exp(-x^2/sigma^2)).
PhysicalScales physical_scales(const core::PhysicalParams& p, double sigma_m);

}  // namespace zitter::analytic
