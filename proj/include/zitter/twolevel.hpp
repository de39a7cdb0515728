#pragma once

#include <vector>

#include "zitter/core.hpp"

// Quantum-optics reduction: factorize the spinor into slowly varying spatial
// envelopes phi_i(x) and populations c_i(t). The populations then obey
//   i d/dtau (c1, c2) = ((vz1, W), (W*, vz2)) (c1, c2)
// with W the momentum overlap of the envelopes. A diagnostic reduction; the
// full propagator stays the source of truth.
namespace zitter::twolevel {

struct TwoLevelParams {
    cxd omega_tilde{0.0, 0.0};  // coupling W, reduced units
    double vz1 = 0.0, vz2 = 0.0;  // effective level shifts
};

// W = 2 c_theta <phi2| k_op |phi1> with k_op = -i d/dx (spectral
// differentiation; the factor 2 c_theta is the reduced recoil velocity).
// Both envelopes must be unit-normalized on the grid.
cxd coupling_overlap(const std::vector<cxd>& phi1, const std::vector<cxd>& phi2,
                     const core::PositionGrid& grid, const core::DimensionlessParams& p);

// Effective shifts for a constant gap: +v_z and -v_z weighted by the envelope
// norms (identity for normalized envelopes).
TwoLevelParams reduce_constant_gap(cxd omega_tilde, double v_z);

// omega_R = sqrt(|W|^2 + (vz1 - vz2)^2 / 4)
double rabi_frequency(const TwoLevelParams& p);

struct PopulationSeries {
    std::vector<double> tau;
    std::vector<double> p1, p2;  // |c1|^2, |c2|^2
};

// Exact 2x2 matrix exponential of the coupling matrix; |c1|^2 oscillates with
// angular frequency 2 omega_R (full population cycle pi / omega_R).
PopulationSeries evolve_populations(cxd c1, cxd c2, const TwoLevelParams& p,
                                    const std::vector<double>& tau_grid);

}  // namespace zitter::twolevel
