#include "zitter/evolve.hpp"

#include <cmath>

#include "zitter/errors.hpp"

namespace zitter::evolve {

namespace {

constexpr double kPi = 3.14159265358979323846;

// sin(x)/x, safe at the origin
double sinc(double x) {
    if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

}  // namespace

ModeHamiltonian hamiltonian_k(double k, const core::DimensionlessParams& p, Limit limit) {
    ModeHamiltonian mh;
    mh.k = k;
    const double a = (limit == Limit::full) ? k * k : 0.0;
    const double bx = 2.0 * p.c_theta * k;
    mh.h(0, 0) = a + p.v_z;
    mh.h(0, 1) = bx;
    mh.h(1, 0) = bx;
    mh.h(1, 1) = a - p.v_z;
    return mh;
}

double mode_frequency(double k, const core::DimensionlessParams& p) {
    return std::hypot(2.0 * p.c_theta * k, p.v_z);
}

Mat2 mode_propagator(double k, double tau, const core::DimensionlessParams& p, Limit limit) {
    const double a = (limit == Limit::full) ? k * k : 0.0;
    const double bx = 2.0 * p.c_theta * k;
    const double bz = p.v_z;
    const double w = std::hypot(bx, bz);
    const double cw = std::cos(w * tau);
    const double s = tau * sinc(w * tau);  // sin(w tau)/w
    const cxd phase = std::exp(cxd(0, -a * tau));

    Mat2 u;
    u(0, 0) = phase * cxd(cw, -s * bz);
    u(0, 1) = phase * cxd(0, -s * bx);
    u(1, 0) = phase * cxd(0, -s * bx);
    u(1, 1) = phase * cxd(cw, s * bz);
    return u;
}

core::SpinorK propagate(const core::SpinorK& state, double tau,
                        const core::DimensionlessParams& p, Limit limit) {
    core::SpinorK out;
    out.grid = state.grid;
    out.a1.resize(state.grid.n);
    out.a2.resize(state.grid.n);
    for (std::size_t i = 0; i < state.grid.n; ++i) {
        const Mat2 u = mode_propagator(state.grid.node(i), tau, p, limit);
        out.a1[i] = u(0, 0) * state.a1[i] + u(0, 1) * state.a2[i];
        out.a2[i] = u(1, 0) * state.a1[i] + u(1, 1) * state.a2[i];
    }
    return out;
}

std::pair<cxd, cxd> closed_form_spinor(const core::GaussianSpec& spec, double k, double tau,
                                       const core::DimensionlessParams& p) {
    if (std::abs(p.c_theta - 1.0) > 1e-12)
        throw UnsupportedRegimeError("closed_form_spinor: only valid for c_theta == 1");
    spec.validate();

    const double dk0 = k - spec.k0;
    const double g = std::exp(-dk0 * dk0 / (2.0 * spec.delta * spec.delta)) /
                     std::sqrt(spec.delta * std::sqrt(kPi));
    const double w = std::hypot(2.0 * k, p.v_z);
    const double cw = std::cos(w * tau);
    const double s = tau * sinc(w * tau);
    const cxd phase = std::exp(cxd(0, -k * k * tau));

    const cxd psi1 = g * phase * (spec.c1 * cw - cxd(0, s) * (spec.c1 * p.v_z + 2.0 * k * spec.c2));
    const cxd psi2 = g * phase * (spec.c2 * cw - cxd(0, s) * (2.0 * k * spec.c1 - spec.c2 * p.v_z));
    return {psi1, psi2};
}

std::vector<double> mode_zb_trajectory(double k, cxd c1, cxd c2,
                                       const core::DimensionlessParams& p,
                                       const std::vector<double>& tau_grid) {
    if (std::abs(std::norm(c1) + std::norm(c2) - 1.0) > 1e-9)
        throw PreconditionError("mode_zb_trajectory: spinor must be normalized");

    // Bloch vector of the initial spinor and the precession axis of the
    // dirac-limit field b = (2 c_theta k, 0, v_z).
    const double sx = 2.0 * (std::conj(c1) * c2).real();
    const double sy = 2.0 * (std::conj(c1) * c2).imag();
    const double sz = std::norm(c1) - std::norm(c2);
    const double bx = 2.0 * p.c_theta * k;
    const double bz = p.v_z;
    const double w = std::hypot(bx, bz);
    const double vscale = 2.0 * p.c_theta;  // velocity operator is 2 c_theta sigma_x

    std::vector<double> x(tau_grid.size());
    if (w < 1e-300) {
        // field-free: the velocity never precesses
        for (std::size_t i = 0; i < tau_grid.size(); ++i) x[i] = vscale * sx * tau_grid[i];
        return x;
    }

    // Spin precession about n = b/|b| at angular frequency 2w:
    //   <sigma_x(t)> = nx (n.s0) + [sx - nx (n.s0)] cos(2wt) + (n x s0)_x sin(2wt),
    // and (n x s0)_x = -nz sy since n has no y component. Integrating the
    // velocity 2 c_theta <sigma_x(t)> gives the displacement.
    const double nx = bx / w, nz = bz / w;
    const double ns = nx * sx + nz * sz;
    const double ox = sx - nx * ns;
    const double cx = nz * sy;
    for (std::size_t i = 0; i < tau_grid.size(); ++i) {
        const double t = tau_grid[i];
        const double lin = nx * ns * t;
        const double osc = ox * std::sin(2.0 * w * t) / (2.0 * w) -
                           cx * (1.0 - std::cos(2.0 * w * t)) / (2.0 * w);
        x[i] = vscale * (lin + osc);
    }
    return x;
}

}  // namespace zitter::evolve
