#include "zitter/twolevel.hpp"

#include <cmath>

#include "zitter/errors.hpp"
#include "zitter/fft.hpp"

namespace zitter::twolevel {

namespace {

double envelope_norm(const std::vector<cxd>& phi, double dx) {
    long double s = 0;
    for (const auto& v : phi) s += std::norm(v);
    return static_cast<double>(s) * dx;
}

}  // namespace

cxd coupling_overlap(const std::vector<cxd>& phi1, const std::vector<cxd>& phi2,
                     const core::PositionGrid& grid, const core::DimensionlessParams& p) {
    if (phi1.size() != grid.n || phi2.size() != grid.n)
        throw PreconditionError("coupling_overlap: envelope length does not match grid");
    if (std::abs(envelope_norm(phi1, grid.dx) - 1.0) > 1e-8 ||
        std::abs(envelope_norm(phi2, grid.dx) - 1.0) > 1e-8)
        throw NormalizationError("coupling_overlap: envelopes must be unit-normalized");

    const std::vector<cxd> dphi1 = fft::derivative(phi1, grid.dx);
    cxd acc(0, 0);
    for (std::size_t i = 0; i < grid.n; ++i)
        acc += std::conj(phi2[i]) * cxd(0, -1) * dphi1[i];
    return 2.0 * p.c_theta * acc * grid.dx;
}

TwoLevelParams reduce_constant_gap(cxd omega_tilde, double v_z) {
    return {omega_tilde, v_z, -v_z};
}

double rabi_frequency(const TwoLevelParams& p) {
    return std::hypot(std::abs(p.omega_tilde), 0.5 * (p.vz1 - p.vz2));
}

PopulationSeries evolve_populations(cxd c1, cxd c2, const TwoLevelParams& p,
                                    const std::vector<double>& tau_grid) {
    if (std::abs(std::norm(c1) + std::norm(c2) - 1.0) > 1e-9)
        throw PreconditionError("evolve_populations: initial populations must sum to 1");

    // coupling matrix as a I + b . sigma; the trace part only contributes a
    // global phase and never reaches the populations
    const double bx = p.omega_tilde.real();
    const double by = -p.omega_tilde.imag();
    const double bz = 0.5 * (p.vz1 - p.vz2);
    const double w = std::sqrt(bx * bx + by * by + bz * bz);

    PopulationSeries out;
    out.tau = tau_grid;
    out.p1.resize(tau_grid.size());
    out.p2.resize(tau_grid.size());
    for (std::size_t i = 0; i < tau_grid.size(); ++i) {
        const double t = tau_grid[i];
        const double cw = std::cos(w * t);
        double s;  // sin(w t)/w
        if (w < 1e-12) s = t;
        else s = std::sin(w * t) / w;
        // e^{-i a t} [cos(wt) I - i sin(wt) bhat.sigma]; the a-phase drops out
        // of the populations.
        const cxd u00(cw, -s * bz), u11(cw, s * bz);
        const cxd u01 = cxd(0, -s) * cxd(bx, -by);
        const cxd u10 = cxd(0, -s) * cxd(bx, by);
        out.p1[i] = std::norm(u00 * c1 + u01 * c2);
        out.p2[i] = std::norm(u10 * c1 + u11 * c2);
    }
    return out;
}

}  // namespace zitter::twolevel
