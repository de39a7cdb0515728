#include "zitter/core.hpp"

#include <cmath>

#include "zitter/errors.hpp"
#include "zitter/fft.hpp"
#include "zitter/tripod.hpp"

namespace zitter::core {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2Pi = 2.50662827463100050242;

double norm_of(const std::vector<cxd>& a1, const std::vector<cxd>& a2, double dw) {
    long double s = 0;
    for (std::size_t i = 0; i < a1.size(); ++i) s += std::norm(a1[i]) + std::norm(a2[i]);
    return static_cast<double>(s) * dw;
}

}  // namespace

void PhysicalParams::validate() const {
    if (!(mass > 0)) throw PreconditionError("PhysicalParams: mass must be positive");
    if (!(kappa > 0)) throw PreconditionError("PhysicalParams: kappa must be positive");
    if (!(theta >= 0 && theta <= kPi / 2))
        throw PreconditionError("PhysicalParams: theta must lie in [0, pi/2]");
}

void GaussianSpec::validate() const {
    if (!(delta > 0)) throw PreconditionError("GaussianSpec: delta must be positive");
    const double n = std::norm(c1) + std::norm(c2);
    if (std::abs(n - 1.0) > 1e-9)
        throw PreconditionError("GaussianSpec: |c1|^2 + |c2|^2 must equal 1");
}

KGrid make_k_grid(double k_min, double k_max, std::size_t n) {
    if (!(k_max > k_min)) throw InvalidBoundsError("make_k_grid: k_max must exceed k_min");
    if (n < 2) throw InvalidBoundsError("make_k_grid: need at least two nodes");
    return {k_min, k_max, n, (k_max - k_min) / static_cast<double>(n - 1)};
}

KGrid default_k_grid() { return make_k_grid(-8.0, 8.0, 4096); }

double SpinorK::norm() const { return norm_of(a1, a2, grid.dk); }
double SpinorX::norm() const { return norm_of(a1, a2, grid.dx); }

SpinorK sample_gaussian(const GaussianSpec& spec, const KGrid& grid) {
    spec.validate();
    if (grid.k_min > spec.k0 - 6.0 * spec.delta || grid.k_max < spec.k0 + 6.0 * spec.delta)
        throw PreconditionError("sample_gaussian: grid must span [k0 - 6 delta, k0 + 6 delta]");

    SpinorK s;
    s.grid = grid;
    s.a1.resize(grid.n);
    s.a2.resize(grid.n);
    const double amp = 1.0 / std::sqrt(spec.delta * std::sqrt(kPi));
    for (std::size_t i = 0; i < grid.n; ++i) {
        const double dk0 = grid.node(i) - spec.k0;
        const double g = amp * std::exp(-dk0 * dk0 / (2.0 * spec.delta * spec.delta));
        s.a1[i] = spec.c1 * g;
        s.a2[i] = spec.c2 * g;
    }

    const double norm = s.norm();
    if (std::abs(norm - 1.0) > 1e-6)
        throw TruncationError("sample_gaussian: grid too narrow or too coarse for this state");
    const double scale = 1.0 / std::sqrt(norm);
    for (std::size_t i = 0; i < grid.n; ++i) {
        s.a1[i] *= scale;
        s.a2[i] *= scale;
    }
    return s;
}

PositionGrid conjugate_grid(const KGrid& grid) {
    if (!fft::is_pow2(grid.n))
        throw PreconditionError("conjugate_grid: node count must be a power of two");
    const double dx = 2.0 * kPi / (static_cast<double>(grid.n) * grid.dk);
    const double x0 = -dx * static_cast<double>(grid.n / 2);
    return {x0, dx, grid.n};
}

namespace {

// One component of the dk-weighted transform; sign +1 maps k -> x.
std::vector<cxd> transform_component(const std::vector<cxd>& in, const KGrid& grid,
                                     const PositionGrid& xg) {
    const std::size_t n = grid.n;
    std::vector<cxd> out(n);
    for (std::size_t j = 0; j < n; ++j)
        out[j] = in[j] * std::exp(cxd(0, static_cast<double>(j) * grid.dk * xg.x0));
    fft::transform(out, +1);
    const double scale = grid.dk / kSqrt2Pi;
    for (std::size_t l = 0; l < n; ++l)
        out[l] *= scale * std::exp(cxd(0, grid.k_min * xg.node(l)));
    return out;
}

std::vector<cxd> inverse_component(const std::vector<cxd>& in, const KGrid& grid,
                                   const PositionGrid& xg) {
    const std::size_t n = grid.n;
    std::vector<cxd> out(n);
    for (std::size_t l = 0; l < n; ++l)
        out[l] = in[l] * std::exp(cxd(0, -grid.k_min * xg.node(l)));
    fft::transform(out, -1);
    const double scale = xg.dx / kSqrt2Pi;
    for (std::size_t j = 0; j < n; ++j)
        out[j] *= scale * std::exp(cxd(0, -static_cast<double>(j) * grid.dk * xg.x0));
    return out;
}

}  // namespace

SpinorX to_position(const SpinorK& state) {
    SpinorX x;
    x.grid = conjugate_grid(state.grid);
    x.a1 = transform_component(state.a1, state.grid, x.grid);
    x.a2 = transform_component(state.a2, state.grid, x.grid);
    return x;
}

SpinorK from_position(const SpinorX& state, const KGrid& grid) {
    if (state.grid.n != grid.n)
        throw PreconditionError("from_position: grids do not pair up");
    SpinorK k;
    k.grid = grid;
    k.a1 = inverse_component(state.a1, grid, state.grid);
    k.a2 = inverse_component(state.a2, grid, state.grid);
    return k;
}

DimensionlessParams reduce_params(const PhysicalParams& p) {
    p.validate();
    auto [phi, v] = tripod::scalar_potentials(p.theta, p.kappa, p.v1, p.v3, p.mass, p.hbar);
    const double vz = tripod::rest_energy(phi, v);
    return {vz / energy_unit(p), std::cos(p.theta)};
}

double energy_unit(const PhysicalParams& p) {
    return p.hbar * p.hbar * p.kappa * p.kappa / (2.0 * p.mass);
}

double time_unit_seconds(const PhysicalParams& p) {
    return 2.0 * p.mass / (p.hbar * p.kappa * p.kappa);
}

double delta_from_sigma(double kappa, double sigma_m) {
    if (!(sigma_m > 0) || !(kappa > 0))
        throw PreconditionError("delta_from_sigma: kappa and sigma must be positive");
    return std::sqrt(2.0) / (kappa * sigma_m);
}

}  // namespace zitter::core
