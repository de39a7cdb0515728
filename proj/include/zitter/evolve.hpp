#pragma once

#include <utility>
#include <vector>

#include "zitter/core.hpp"
#include "zitter/mat2.hpp"

// Time evolution in momentum space. Per mode the Hamiltonian is the 2x2
//   H(k) = k^2 I + 2 c_theta k sigma_x + v_z sigma_z        (full)
//   H(k) =         2 c_theta k sigma_x + v_z sigma_z        (dirac)
// in reduced units; the propagator is the exact Pauli-form exponential, never
// a series. propagate is a data-parallel map over nodes with no coupling.
namespace zitter::evolve {

enum class Limit { full, dirac };

struct ModeHamiltonian {
    double k = 0;
    Mat2 h;  // Hermitian, reduced units
};

ModeHamiltonian hamiltonian_k(double k, const core::DimensionlessParams& p, Limit limit);

// omega_k = sqrt(4 c_theta^2 k^2 + v_z^2) >= |v_z|
double mode_frequency(double k, const core::DimensionlessParams& p);

// exp(-i (a I + b . sigma) tau) = e^{-i a tau} [cos(|b| tau) I - i sin(|b| tau) bhat . sigma]
Mat2 mode_propagator(double k, double tau, const core::DimensionlessParams& p, Limit limit);

core::SpinorK propagate(const core::SpinorK& state, double tau,
                        const core::DimensionlessParams& p, Limit limit);

// Evolved amplitudes of a Gaussian initial state at one momentum node,
// written out in closed form (sign convention matching propagate, global
// phase e^{-i k^2 tau}):
//   psi1 = G e^{-i k^2 tau} [ c1 cos(w tau) - i (c1 v_z + 2 k c2) sin(w tau)/w ]
//   psi2 = G e^{-i k^2 tau} [ c2 cos(w tau) - i (2 k c1 - v_z c2) sin(w tau)/w ]
// Only valid for c_theta == 1 (throws UnsupportedRegimeError otherwise).
std::pair<cxd, cxd> closed_form_spinor(const core::GaussianSpec& spec, double k, double tau,
                                       const core::DimensionlessParams& p);

// <x(tau)> - <x(0)> of a single momentum mode under the dirac-limit
// Hamiltonian: a linear branch-averaged drift plus the interference
// oscillation at angular frequency 2 omega_k.
std::vector<double> mode_zb_trajectory(double k, cxd c1, cxd c2,
                                       const core::DimensionlessParams& p,
                                       const std::vector<double>& tau_grid);

}  // namespace zitter::evolve
