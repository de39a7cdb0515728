#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

// Small helpers to pull frequencies, slopes and extrema out of sampled
// series. Shared by the scenario summaries and the verification suites.
namespace zitter::extract {

struct LinearFit {
    double slope = 0, intercept = 0;
};

inline LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double d = n * sxx - sx * sx;
    LinearFit f;
    f.slope = (n * sxy - sx * sy) / d;
    f.intercept = (sy - f.slope * sx) / n;
    return f;
}

// Linear-interpolated zero crossings of y(tau).
inline std::vector<double> zero_crossings(const std::vector<double>& tau,
                                          const std::vector<double>& y) {
    std::vector<double> out;
    for (std::size_t i = 1; i < y.size(); ++i) {
        if (y[i - 1] == 0.0) continue;
        if ((y[i - 1] > 0) != (y[i] > 0) || y[i] == 0.0)
            out.push_back(tau[i - 1] + (tau[i] - tau[i - 1]) * y[i - 1] / (y[i - 1] - y[i]));
    }
    return out;
}

// Angular frequency of an oscillation around zero from the mean crossing
// spacing (crossings are half a period apart). NaN when underdetermined.
inline double zero_crossing_frequency(const std::vector<double>& tau,
                                      const std::vector<double>& y) {
    const auto zc = zero_crossings(tau, y);
    if (zc.size() < 2) return std::numeric_limits<double>::quiet_NaN();
    const double pi = 3.14159265358979323846;
    return pi * static_cast<double>(zc.size() - 1) / (zc.back() - zc.front());
}

// Vertex of the parabola through (x0,y0), (x1,y1), (x2,y2); assumes distinct,
// roughly uniform abscissae.
inline std::pair<double, double> parabola_vertex(double x0, double y0, double x1, double y1,
                                                 double x2, double y2) {
    const double d1 = (y1 - y0) / (x1 - x0);
    const double d2 = (y2 - y1) / (x2 - x1);
    const double a = (d2 - d1) / (x2 - x0);
    if (a == 0.0) return {x1, y1};
    const double xv = 0.5 * (x0 + x1) - 0.5 * d1 / a;
    const double b = d1 - a * (x0 + x1);
    const double c = y0 - x0 * (d1 - a * x1);
    return {xv, (a * xv + b) * xv + c};
}

// First interior local maximum of y, parabola-refined. NaN pair if none.
inline std::pair<double, double> first_maximum(const std::vector<double>& tau,
                                               const std::vector<double>& y) {
    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
        if (y[i] >= y[i - 1] && y[i] > y[i + 1])
            return parabola_vertex(tau[i - 1], y[i - 1], tau[i], y[i], tau[i + 1], y[i + 1]);
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {nan, nan};
}

// All interior extrema of y (both signs), parabola-refined: (tau_i, y_i).
inline std::vector<std::pair<double, double>> local_extrema(const std::vector<double>& tau,
                                                            const std::vector<double>& y) {
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
        const bool max = y[i] >= y[i - 1] && y[i] > y[i + 1];
        const bool min = y[i] <= y[i - 1] && y[i] < y[i + 1];
        if (max || min)
            out.push_back(parabola_vertex(tau[i - 1], y[i - 1], tau[i], y[i], tau[i + 1], y[i + 1]));
    }
    return out;
}

}  // namespace zitter::extract
