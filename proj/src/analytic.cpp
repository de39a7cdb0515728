#include "zitter/analytic.hpp"

#include <cmath>
#include <limits>

#include "zitter/errors.hpp"

namespace zitter::analytic {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.77245385090551602730;

// Rational-approximation evaluation of erf/erfc/erfcx after W. J. Cody,
// "Rational Chebyshev approximation for the error function" (the netlib
// specfun CALERF scheme): three intervals, ~1e-17 theoretical accuracy.
// mode 0 -> erf, 1 -> erfc, 2 -> erfcx.
double calerf(double x, int mode) {
    static const double a[5] = {3.1611237438705656, 113.864154151050156, 377.485237685302021,
                                3209.37758913846947, 0.185777706184603153};
    static const double b[4] = {23.6012909523441209, 244.024637934444173, 1282.61652607737228,
                                2844.23683343917062};
    static const double c[9] = {0.564188496988670089, 8.88314979438837594, 66.1191906371416295,
                                298.635138197400131,  881.95222124176909,  1712.04761263407058,
                                2051.07837782607147,  1230.33935479799725, 2.15311535474403846e-8};
    static const double d[8] = {15.7449261107098347, 117.693950891312499, 537.181101862009858,
                                1621.38957456669019, 3290.79923573345963, 4362.61909014324716,
                                3439.36767414372164, 1230.33935480374942};
    static const double p[6] = {0.305326634961232344, 0.360344899949804439, 0.125781726111229246,
                                0.0160837851487422766, 6.58749161529837803e-4,
                                0.0163153871373020978};
    static const double q[5] = {2.56852019228982242, 1.87295284992346047, 0.527905102951428412,
                                0.0605183413124413191, 0.00233520497626869185};
    constexpr double inv_sqrt_pi = 0.56418958354775628695;
    constexpr double thresh = 0.46875;
    constexpr double xbig = 26.543;    // erfc underflows past here
    constexpr double xneg = -26.628;   // erfcx overflows below here
    constexpr double xhuge = 6.71e7;   // 1 - 1/(2x^2) == 1 past here
    constexpr double xmax = 2.53e307;

    const double y = std::abs(x);
    double result;

    if (y <= thresh) {
        // erf on the central interval
        const double ysq = (y > 1.11e-16) ? y * y : 0.0;
        double xnum = a[4] * ysq, xden = ysq;
        for (int i = 0; i < 3; ++i) {
            xnum = (xnum + a[i]) * ysq;
            xden = (xden + b[i]) * ysq;
        }
        result = x * (xnum + a[3]) / (xden + b[3]);
        if (mode == 0) return result;
        result = 1.0 - result;
        if (mode == 2) result *= std::exp(ysq);
        return result;
    }

    if (y <= 4.0) {
        double xnum = c[8] * y, xden = y;
        for (int i = 0; i < 7; ++i) {
            xnum = (xnum + c[i]) * y;
            xden = (xden + d[i]) * y;
        }
        result = (xnum + c[7]) / (xden + d[7]);  // = erfcx(y)
        if (mode != 2) {
            // e^{-y^2} split for full precision in the exponent
            const double ysq = std::trunc(y * 16.0) / 16.0;
            const double del = (y - ysq) * (y + ysq);
            result *= std::exp(-ysq * ysq) * std::exp(-del);
        }
    } else {
        // y > 4
        if (y >= xbig && mode != 2) {
            result = 0.0;
        } else if (y >= xhuge && mode == 2) {
            result = inv_sqrt_pi / y;
        } else if (y >= xmax) {
            result = 0.0;
        } else {
            const double ysq = 1.0 / (y * y);
            double xnum = p[5] * ysq, xden = ysq;
            for (int i = 0; i < 4; ++i) {
                xnum = (xnum + p[i]) * ysq;
                xden = (xden + q[i]) * ysq;
            }
            result = ysq * (xnum + p[4]) / (xden + q[4]);
            result = (inv_sqrt_pi - result) / y;  // = erfcx(y)
            if (mode != 2) {
                const double ysq2 = std::trunc(y * 16.0) / 16.0;
                const double del = (y - ysq2) * (y + ysq2);
                result *= std::exp(-ysq2 * ysq2) * std::exp(-del);
            }
        }
    }

    // reflect to negative arguments
    if (mode == 0) {
        // here |x| > thresh and result holds erfc(|x|)
        return (x > 0) ? 1.0 - result : result - 1.0;
    }
    if (mode == 1) {
        if (x < 0) result = 2.0 - result;
        return result;
    }
    // erfcx(-x) = 2 e^{x^2} - erfcx(x)
    if (x < 0) {
        if (x < xneg) return std::numeric_limits<double>::infinity();
        const double ysq = std::trunc(x * 16.0) / 16.0;
        const double del = (x - ysq) * (x + ysq);
        result = 2.0 * std::exp(ysq * ysq) * std::exp(del) - result;
    }
    return result;
}

}  // namespace

double erf(double x) { return calerf(x, 0); }
double erfc(double x) { return calerf(x, 1); }
double erfcx(double x) { return calerf(x, 2); }

namespace {

// 1 - sqrt(pi) X e^{X^2} erfc(X): the drift bracket per unit slope
double drift_bracket(double big_x) { return 1.0 - kSqrtPi * big_x * erfcx(big_x); }

}  // namespace

double drift_slope(const core::DimensionlessParams& p, double delta) {
    if (!(delta > 0)) throw PreconditionError("drift: delta must be positive");
    return 2.0 * drift_bracket(std::abs(p.v_z) / (2.0 * delta));
}

DriftResult drift(double tau, const core::DimensionlessParams& p, double delta) {
    DriftResult r;
    r.regime = (std::abs(p.v_z) / delta > 25.0) ? DriftRegime::asymptotic
                                                : DriftRegime::exact_erfc;
    r.x_d = drift_slope(p, delta) * tau;
    return r;
}

AsymptoticDriftResult drift_asymptotic(double tau, const core::DimensionlessParams& p,
                                       double delta, std::size_t n_terms) {
    if (!(delta > 0)) throw PreconditionError("drift_asymptotic: delta must be positive");
    const double ratio = std::abs(p.v_z) / delta;
    if (ratio < 3.0)
        throw PreconditionError("drift_asymptotic: requires v_z/delta >= 3");

    const double big_x = ratio / 2.0;
    AsymptoticDriftResult r;
    // term ratio t_{n+1}/t_n = (2n+1)/(2 X^2); terms shrink while n < X^2
    r.n_star = static_cast<std::size_t>(big_x * big_x);
    r.truncation_warning = n_terms > r.n_star;

    // sqrt(pi) X e^{X^2} erfc(X) ~ sum_{n>=0} (-1)^n (2n)!/(n! (2X)^{2n});
    // the bracket is 1 minus that, i.e. -sum_{n>=1}.
    double term = 1.0;
    double series = 0.0;
    const double inv_2x2 = 1.0 / (2.0 * big_x * big_x);
    for (std::size_t n = 1; n <= n_terms; ++n) {
        term *= -static_cast<double>(2 * n - 1) * inv_2x2;
        series += term;
    }
    r.x_d = 2.0 * (-series) * tau;
    return r;
}

ZitterResult zitter_term(double tau, const core::DimensionlessParams& p, double delta) {
    if (!(delta > 0)) throw PreconditionError("zitter_term: delta must be positive");
    const double vz = p.v_z;
    if (vz == 0.0) throw PreconditionError("zitter_term: requires a nonzero gap");

    ZitterResult r;
    r.regime_warning = std::abs(vz) / delta < 5.0;
    r.envelope = zitter_envelope(tau, vz, delta);

    const double d2 = delta * delta;
    const cxd q(1.0, -4.0 * d2 * tau / vz);
    const cxd corr = 1.0 - 3.0 * d2 / (vz * vz) / q -
                     cxd(0, 3.0) * d2 * d2 * tau / (vz * vz * vz) / (q * q);
    const cxd val = std::exp(cxd(0, 2.0 * vz * tau)) / std::sqrt(q) * corr;
    r.x_z = val.imag() / vz;
    return r;
}

double zitter_envelope(double tau, double v_z, double delta) {
    const double a = 4.0 * delta * delta * tau / v_z;
    return std::pow(1.0 + a * a, -0.25);
}

double delta_limit_population(double k0, const core::DimensionlessParams& p, double tau) {
    const double w2 = 4.0 * k0 * k0 + p.v_z * p.v_z;
    if (w2 == 0.0) return 0.0;
    const double s = std::sin(std::sqrt(w2) * tau);
    return 4.0 * k0 * p.v_z / w2 * s * s;
}

PhysicalScales physical_scales(const core::PhysicalParams& p, double sigma_m) {
    p.validate();
    if (!(sigma_m > 0)) throw PreconditionError("physical_scales: sigma must be positive");

    PhysicalScales s;
    s.time_unit_s = core::time_unit_seconds(p);
    s.recoil_velocity = p.hbar * p.kappa / p.mass;
    s.delta = core::delta_from_sigma(p.kappa, sigma_m);
    s.v_z = core::reduce_params(p).v_z;
    // oscillation at 2 v_z in reduced time, i.e. 2 V_z / hbar
    s.zb_angular_frequency = 2.0 * s.v_z / s.time_unit_s;
    s.zb_frequency_hz = s.zb_angular_frequency / (2.0 * kPi);
    // damping becomes order unity where 4 delta^2 tau / v_z = 1
    s.damping_onset_s = s.v_z / (4.0 * s.delta * s.delta) * s.time_unit_s;
    return s;
}

}  // namespace zitter::analytic
