#include "zitter/observables.hpp"

#include <cmath>

#include "zitter/errors.hpp"
#include "zitter/fft.hpp"

namespace zitter::observables {

namespace {

constexpr double kPi = 3.14159265358979323846;

// trapezoid weights: half at the ends; long-double accumulator
template <typename F>
double trapezoid(std::size_t n, double dw, F value) {
    long double s = 0.5L * (value(0) + value(n - 1));
    for (std::size_t i = 1; i + 1 < n; ++i) s += value(i);
    return static_cast<double>(s) * dw;
}

}  // namespace

Populations populations(const core::SpinorK& state) {
    const auto& g = state.grid;
    Populations p;
    p.n1 = trapezoid(g.n, g.dk, [&](std::size_t i) { return std::norm(state.a1[i]); });
    p.n2 = trapezoid(g.n, g.dk, [&](std::size_t i) { return std::norm(state.a2[i]); });
    return p;
}

double centre_of_mass(const core::SpinorK& state) {
    const auto& g = state.grid;

    // Resolution guard: position support at relative density 1e-12 must stay
    // well inside the conjugate box so the spectral derivative is exact.
    const core::SpinorX xs = core::to_position(state);
    double rho_max = 0;
    for (std::size_t i = 0; i < g.n; ++i)
        rho_max = std::max(rho_max, std::norm(xs.a1[i]) + std::norm(xs.a2[i]));
    double x_support = 0;
    for (std::size_t i = 0; i < g.n; ++i) {
        const double rho = std::norm(xs.a1[i]) + std::norm(xs.a2[i]);
        if (rho > 1e-12 * rho_max) x_support = std::max(x_support, std::abs(xs.grid.node(i)));
    }
    if (x_support * g.dk > kPi / 4.0)
        throw ResolutionError("centre_of_mass: grid does not resolve the phase gradient");

    const std::vector<cxd> d1 = fft::derivative(state.a1, g.dk);
    const std::vector<cxd> d2 = fft::derivative(state.a2, g.dk);
    long double re = 0, im = 0;
    for (std::size_t i = 0; i < g.n; ++i) {
        const double w = (i == 0 || i + 1 == g.n) ? 0.5 : 1.0;
        const cxd v = std::conj(state.a1[i]) * d1[i] + std::conj(state.a2[i]) * d2[i];
        re += w * v.real();
        im += w * v.imag();
    }
    // x = i * Int; its imaginary part is Re(Int), which vanishes for states
    // with no density flowing through the grid ends.
    const double residual = static_cast<double>(re) * g.dk;
    if (std::abs(residual) > 1e-10)
        throw ResolutionError("centre_of_mass: imaginary residual above 1e-10");
    return -static_cast<double>(im) * g.dk;
}

double centre_of_mass_position(const core::SpinorK& state) {
    const core::SpinorX xs = core::to_position(state);
    const auto& g = xs.grid;
    return trapezoid(g.n, g.dx, [&](std::size_t i) {
        return g.node(i) * (std::norm(xs.a1[i]) + std::norm(xs.a2[i]));
    });
}

ObservableSeries observe_series(const core::GaussianSpec& spec,
                                const core::DimensionlessParams& params, evolve::Limit limit,
                                const core::KGrid& grid, const std::vector<double>& tau_grid,
                                bool with_centre_of_mass) {
    const core::SpinorK initial = core::sample_gaussian(spec, grid);
    ObservableSeries s;
    s.tau = tau_grid;
    for (double tau : tau_grid) {
        const core::SpinorK st = evolve::propagate(initial, tau, params, limit);
        const Populations p = populations(st);
        s.n1.push_back(p.n1);
        s.n2.push_back(p.n2);
        s.delta_n.push_back(p.delta_n());
        s.norm.push_back(st.norm());
        s.x_mean.push_back(with_centre_of_mass ? centre_of_mass(st) : 0.0);
    }
    return s;
}

DensityMap density_map(const core::GaussianSpec& spec, const core::DimensionlessParams& params,
                       evolve::Limit limit, const core::KGrid& grid,
                       const std::vector<double>& tau_grid, Space space) {
    const core::SpinorK initial = core::sample_gaussian(spec, grid);
    DensityMap m;
    m.space = space;
    m.tau = tau_grid;
    if (space == Space::x) {
        const core::PositionGrid xg = core::conjugate_grid(grid);
        for (std::size_t i = 0; i < xg.n; ++i) m.axis.push_back(xg.node(i));
    } else {
        for (std::size_t i = 0; i < grid.n; ++i) m.axis.push_back(grid.node(i));
    }
    for (double tau : tau_grid) {
        const core::SpinorK st = evolve::propagate(initial, tau, params, limit);
        std::vector<double> r1(grid.n), r2(grid.n), r(grid.n);
        if (space == Space::x) {
            const core::SpinorX xs = core::to_position(st);
            for (std::size_t i = 0; i < grid.n; ++i) {
                r1[i] = std::norm(xs.a1[i]);
                r2[i] = std::norm(xs.a2[i]);
                r[i] = r1[i] + r2[i];
            }
        } else {
            for (std::size_t i = 0; i < grid.n; ++i) {
                r1[i] = std::norm(st.a1[i]);
                r2[i] = std::norm(st.a2[i]);
                r[i] = r1[i] + r2[i];
            }
        }
        m.rho.push_back(std::move(r));
        m.rho1.push_back(std::move(r1));
        m.rho2.push_back(std::move(r2));
    }
    return m;
}

}  // namespace zitter::observables
