#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "zitter/mat2.hpp"

// Domain types, grids, Gaussian state sampling and unit reduction.
//
// Reduced units used throughout: momenta in units of the laser wave number
// kappa, positions in 1/kappa, time in 2m/(hbar kappa^2), energies in
// hbar^2 kappa^2 / (2m). All values are immutable after construction; every
// function is pure.
namespace zitter::core {

inline constexpr double kHbar = 1.054571817e-34;  // J s

struct PhysicalParams {
    double mass;   // kg
    double kappa;  // 1/m
    double theta;  // rad, mixing angle in [0, pi/2]
    double v1;     // J, trap offset for bare states 1 and 2
    double v3;     // J, trap offset for bare state 3
    double hbar = kHbar;

    void validate() const;  // throws PreconditionError
};

struct DimensionlessParams {
    double v_z = 1.0;      // gap in units of hbar^2 kappa^2 / 2m
    double c_theta = 1.0;  // cos(theta); the closed forms assume 1
};

struct KGrid {
    double k_min = 0, k_max = 0;
    std::size_t n = 0;
    double dk = 0;

    // Symmetric evaluation so that node(i) == -node(n-1-i) holds exactly for
    // grids with k_min == -k_max.
    double node(std::size_t i) const {
        double j = static_cast<double>(i), m = static_cast<double>(n - 1);
        return (k_min * (m - j) + k_max * j) / m;
    }
};

KGrid make_k_grid(double k_min, double k_max, std::size_t n);
// [-8, 8] with 4096 nodes; resolves delta down to ~0.01 and |k0| up to 2.
KGrid default_k_grid();

struct GaussianSpec {
    double k0 = 0.0;      // centre momentum
    double delta = 0.05;  // width of the amplitude envelope exp(-(k-k0)^2 / 2 delta^2)
    cxd c1{1.0, 0.0}, c2{0.0, 0.0};

    void validate() const;  // delta > 0 and |c1|^2 + |c2|^2 == 1
};

struct PositionGrid {
    double x0 = 0, dx = 0;
    std::size_t n = 0;
    double node(std::size_t i) const { return x0 + dx * static_cast<double>(i); }
};

// Two-component momentum-space state on a uniform grid.
struct SpinorK {
    KGrid grid;
    std::vector<cxd> a1, a2;

    // sum_i (|a1_i|^2 + |a2_i|^2) dk
    double norm() const;
};

struct SpinorX {
    PositionGrid grid;
    std::vector<cxd> a1, a2;

    double norm() const;
};

// Envelope (delta sqrt(pi))^{-1/2} exp(-(k-k0)^2 / 2 delta^2) per component,
// then renormalized on the discrete grid so invariants hold to rounding.
// Throws TruncationError when the grid cannot hold the state (pre-renormalization
// norm deficit above 1e-6) and PreconditionError when the grid span does not
// cover [k0 - 6 delta, k0 + 6 delta].
SpinorK sample_gaussian(const GaussianSpec& spec, const KGrid& grid);

// The position grid conjugate to a momentum grid: n nodes, dx = 2 pi / (n dk),
// centred on x = 0. Requires power-of-two n.
PositionGrid conjugate_grid(const KGrid& grid);

// Psi(x) = (2 pi)^{-1/2} Int dk e^{+i k x} Psi(k), evaluated on the conjugate
// grid. Parseval holds to rounding for the rectangle-rule norms.
SpinorX to_position(const SpinorK& state);

// Exact inverse of to_position on the same grid pairing.
SpinorK from_position(const SpinorX& state, const KGrid& grid);

// v_z = V_z / (hbar^2 kappa^2 / 2m) with V_z from tripod::rest_energy;
// c_theta = cos(theta).
DimensionlessParams reduce_params(const PhysicalParams& p);

double energy_unit(const PhysicalParams& p);        // hbar^2 kappa^2 / 2m, J
double time_unit_seconds(const PhysicalParams& p);  // 2m / (hbar kappa^2), s

// Momentum width of a packet whose real-space envelope is exp(-x^2/sigma^2):
// delta = sqrt(2) / (kappa sigma).
double delta_from_sigma(double kappa, double sigma_m);

}  // namespace zitter::core
