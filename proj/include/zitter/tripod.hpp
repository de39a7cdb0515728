#pragma once

#include <array>
#include <utility>

#include "zitter/mat2.hpp"

// Dark states of the tripod laser configuration and the induced gauge
// potentials. Laser geometry: beams 1 and 2 counter-propagate along x with
// equal intensity, beam 3 runs along y. All quantities are SI unless noted.
namespace zitter::tripod {

inline constexpr double kHbar = 1.054571817e-34;  // J s

// complex amplitudes on the bare ground states |1>, |2>, |3>
using Vec3c = std::array<cxd, 3>;

struct DarkStatePair {
    Vec3c d1, d2;
    // evaluation point and parameters, kept so numeric differentiation can
    // re-evaluate the pair nearby
    double theta = 0;  // rad
    double kappa = 0;  // 1/m
    double x = 0, y = 0;
};

struct MixingResult {
    double theta;        // rad, in [0, pi/2]
    double omega_total;  // sqrt(sum |Omega_n|^2), same units as inputs
};

// tan(theta) = sqrt(|O1|^2 + |O2|^2) / |O3|
MixingResult mixing_angle(cxd omega1, cxd omega2, cxd omega3);

DarkStatePair dark_states(double theta, double kappa, double x, double y);

// x-component of the geometric vector potential: -hbar kappa cos(theta) sigma_x
Mat2 vector_potential(double theta, double kappa, double hbar = kHbar);

// kappa' = kappa cos(theta), the effective wave number of the coupling
double effective_wave_number(double theta, double kappa);

// Returns {Phi, V}. Phi = (hbar^2 kappa^2 / 2m) diag(sin^2 t, sin^2(2t)/4),
// V = diag(V1, V1 cos^2 t + V3 sin^2 t). Traps for states 1 and 2 are equal.
std::pair<Mat2, Mat2> scalar_potentials(double theta, double kappa, double v1, double v3,
                                        double mass, double hbar = kHbar);

// Gap between the two dressed levels: (1/2)[(V+Phi)_11 - (V+Phi)_22]. The
// remaining trace part only shifts the energy zero.
double rest_energy(const Mat2& phi, const Mat2& v);

// Central-difference estimate of A_nm = i hbar <D_n | d/dx D_m> at the pair's
// evaluation point. Requires step * kappa <= 1e-4; accuracy O((step kappa)^2).
Mat2 connection_numeric(const DarkStatePair& states, double step, double hbar = kHbar);

// Central-difference estimate of the scalar (geometric) potential
//   Phi_nm = (hbar^2 / 2m) [ <grad D_n | grad D_m>
//                            - sum_l <grad D_n | D_l><D_l | grad D_m> ],
// with both the x and y gradients of the dark states included. Cross-checks
// the closed form returned by scalar_potentials.
Mat2 scalar_potential_numeric(const DarkStatePair& states, double mass, double step,
                              double hbar = kHbar);

}  // namespace zitter::tripod
