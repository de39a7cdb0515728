#include "zitter/tripod.hpp"

#include <cmath>

#include "zitter/errors.hpp"

namespace zitter::tripod {

namespace {

cxd inner(const Vec3c& a, const Vec3c& b) {
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] + std::conj(a[2]) * b[2];
}

Vec3c sub_scaled(const Vec3c& a, const Vec3c& b, double inv_h) {
    // (a - b) * inv_h
    return {(a[0] - b[0]) * inv_h, (a[1] - b[1]) * inv_h, (a[2] - b[2]) * inv_h};
}

}  // namespace

MixingResult mixing_angle(cxd omega1, cxd omega2, cxd omega3) {
    const double n12 = std::norm(omega1) + std::norm(omega2);
    const double n3 = std::abs(omega3);
    if (n12 == 0.0 && n3 == 0.0) throw ZeroFieldError("mixing_angle: all Rabi frequencies vanish");
    return {std::atan2(std::sqrt(n12), n3), std::sqrt(n12 + n3 * n3)};
}

DarkStatePair dark_states(double theta, double kappa, double x, double y) {
    const double st = std::sin(theta), ct = std::cos(theta);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const cxd ey = std::exp(cxd(0, -kappa * y));
    const cxd ep = std::exp(cxd(0, kappa * x));
    const cxd em = std::conj(ep);

    DarkStatePair p;
    // |D1> = e^{-i k y} ( e^{+i k x}|1> - e^{-i k x}|2> ) / sqrt(2)
    p.d1 = {ey * ep * inv_sqrt2, -ey * em * inv_sqrt2, cxd(0)};
    // |D2> = e^{-i k y} cos(t) ( e^{+i k x}|1> + e^{-i k x}|2> ) / sqrt(2) - sin(t)|3>
    // The relative sign between |1> and |2> makes D2 both dark and orthogonal
    // to D1; it is fixed by <0|H_int|D2> = 0 with
    // Omega_1 ~ sin(t) e^{-i k x}, Omega_2 ~ sin(t) e^{+i k x}, Omega_3 ~ cos(t) e^{-i k y}.
    p.d2 = {ey * ep * ct * inv_sqrt2, ey * em * ct * inv_sqrt2, cxd(-st)};
    p.theta = theta;
    p.kappa = kappa;
    p.x = x;
    p.y = y;
    return p;
}

Mat2 vector_potential(double theta, double kappa, double hbar) {
    return (cxd(-hbar * kappa * std::cos(theta))) * pauli_x();
}

double effective_wave_number(double theta, double kappa) { return kappa * std::cos(theta); }

std::pair<Mat2, Mat2> scalar_potentials(double theta, double kappa, double v1, double v3,
                                        double mass, double hbar) {
    if (!(mass > 0)) throw PreconditionError("scalar_potentials: mass must be positive");
    const double er = hbar * hbar * kappa * kappa / (2.0 * mass);
    const double st = std::sin(theta), ct = std::cos(theta);
    const double s2t = std::sin(2.0 * theta);
    Mat2 phi = Mat2::diag(er * st * st, er * s2t * s2t / 4.0);
    Mat2 v = Mat2::diag(v1, v1 * ct * ct + v3 * st * st);
    return {phi, v};
}

double rest_energy(const Mat2& phi, const Mat2& v) {
    return 0.5 * ((v(0, 0) + phi(0, 0)) - (v(1, 1) + phi(1, 1))).real();
}

Mat2 connection_numeric(const DarkStatePair& states, double step, double hbar) {
    if (!(step > 0) || step * states.kappa > 1e-4)
        throw StepTooLargeError("connection_numeric: require 0 < step * kappa <= 1e-4");

    const auto plus = dark_states(states.theta, states.kappa, states.x + step, states.y);
    const auto minus = dark_states(states.theta, states.kappa, states.x - step, states.y);
    const double inv_2h = 1.0 / (2.0 * step);
    const Vec3c dd1 = sub_scaled(plus.d1, minus.d1, inv_2h);
    const Vec3c dd2 = sub_scaled(plus.d2, minus.d2, inv_2h);

    const cxd ih(0, hbar);
    Mat2 a;
    a(0, 0) = ih * inner(states.d1, dd1);
    a(0, 1) = ih * inner(states.d1, dd2);
    a(1, 0) = ih * inner(states.d2, dd1);
    a(1, 1) = ih * inner(states.d2, dd2);
    return a;
}

Mat2 scalar_potential_numeric(const DarkStatePair& states, double mass, double step,
                              double hbar) {
    if (!(mass > 0)) throw PreconditionError("scalar_potential_numeric: mass must be positive");
    if (!(step > 0) || step * states.kappa > 1e-4)
        throw StepTooLargeError("scalar_potential_numeric: require 0 < step * kappa <= 1e-4");

    const double inv_2h = 1.0 / (2.0 * step);
    const auto xp = dark_states(states.theta, states.kappa, states.x + step, states.y);
    const auto xm = dark_states(states.theta, states.kappa, states.x - step, states.y);
    const auto yp = dark_states(states.theta, states.kappa, states.x, states.y + step);
    const auto ym = dark_states(states.theta, states.kappa, states.x, states.y - step);

    // gradients of both dark states, x and y directions
    const std::array<Vec3c, 2> dx = {sub_scaled(xp.d1, xm.d1, inv_2h),
                                     sub_scaled(xp.d2, xm.d2, inv_2h)};
    const std::array<Vec3c, 2> dy = {sub_scaled(yp.d1, ym.d1, inv_2h),
                                     sub_scaled(yp.d2, ym.d2, inv_2h)};
    const std::array<Vec3c, 2> d = {states.d1, states.d2};

    Mat2 phi;
    const double pref = hbar * hbar / (2.0 * mass);
    for (int n = 0; n < 2; ++n) {
        for (int m = 0; m < 2; ++m) {
            cxd full = inner(dx[n], dx[m]) + inner(dy[n], dy[m]);
            cxd dark_part(0);
            for (int l = 0; l < 2; ++l) {
                dark_part += inner(dx[n], d[l]) * inner(d[l], dx[m]);
                dark_part += inner(dy[n], d[l]) * inner(d[l], dy[m]);
            }
            phi(n, m) = pref * (full - dark_part);
        }
    }
    return phi;
}

}  // namespace zitter::tripod
