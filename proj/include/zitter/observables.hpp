#pragma once

#include <vector>

#include "zitter/core.hpp"
#include "zitter/evolve.hpp"

// Physical observables of evolved spinors, each by controlled quadrature on
// the uniform grids (trapezoid; spectral accuracy for smooth decaying
// integrands).
namespace zitter::observables {

struct Populations {
    double n1 = 0, n2 = 0;
    double delta_n() const { return n1 - n2; }
};

// N_i = Int dk |Psi_i(k)|^2
Populations populations(const core::SpinorK& state);

// <x> = i Int dk Psi^dag d_k Psi, evaluated with a spectral derivative.
// The imaginary residual of the integral must stay below 1e-10 (it is checked
// and discarded). Throws ResolutionError when the packet's position support
// comes too close to the conjugate box, i.e. max|x| * dk > pi/4 at relative
// density 1e-12 (the phase gradient of Psi(k) is the position content).
double centre_of_mass(const core::SpinorK& state);

// First moment Int x rho(x) dx of the position density; cross-check route.
double centre_of_mass_position(const core::SpinorK& state);

struct ObservableSeries {
    std::vector<double> tau;
    std::vector<double> x_mean;
    std::vector<double> n1, n2, delta_n;
    std::vector<double> norm;  // discrete norm at each tau, drift diagnostic
};

// Evolve a Gaussian initial state and record the observables at each tau.
ObservableSeries observe_series(const core::GaussianSpec& spec,
                                const core::DimensionlessParams& params, evolve::Limit limit,
                                const core::KGrid& grid, const std::vector<double>& tau_grid,
                                bool with_centre_of_mass = true);

enum class Space { x, k };

struct DensityMap {
    Space space = Space::x;
    std::vector<double> tau;
    std::vector<double> axis;               // x or k nodes
    std::vector<std::vector<double>> rho;   // one row per tau, |Psi1|^2 + |Psi2|^2
    std::vector<std::vector<double>> rho1;  // per-component rows
    std::vector<std::vector<double>> rho2;
};

DensityMap density_map(const core::GaussianSpec& spec, const core::DimensionlessParams& params,
                       evolve::Limit limit, const core::KGrid& grid,
                       const std::vector<double>& tau_grid, Space space);

}  // namespace zitter::observables
