#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace zitter {

using cxd = std::complex<double>;

// Minimal complex 2x2 matrix, row major. Just enough algebra for the
// dark-state block and per-mode propagators; not a linear-algebra library.
struct Mat2 {
    std::array<cxd, 4> m{};

    cxd& operator()(int r, int c) { return m[2 * r + c]; }
    const cxd& operator()(int r, int c) const { return m[2 * r + c]; }

    static Mat2 identity() { return {{cxd(1), cxd(0), cxd(0), cxd(1)}}; }
    static Mat2 zero() { return {}; }
    static Mat2 diag(cxd a, cxd b) { return {{a, cxd(0), cxd(0), b}}; }

    Mat2 adjoint() const {
        return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
    }

    friend Mat2 operator+(const Mat2& a, const Mat2& b) {
        return {{a.m[0] + b.m[0], a.m[1] + b.m[1], a.m[2] + b.m[2], a.m[3] + b.m[3]}};
    }
    friend Mat2 operator-(const Mat2& a, const Mat2& b) {
        return {{a.m[0] - b.m[0], a.m[1] - b.m[1], a.m[2] - b.m[2], a.m[3] - b.m[3]}};
    }
    friend Mat2 operator*(cxd s, const Mat2& a) {
        return {{s * a.m[0], s * a.m[1], s * a.m[2], s * a.m[3]}};
    }
    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
                 a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
    }

    // max |entry| of (this - other)
    double max_abs_diff(const Mat2& o) const {
        double d = 0;
        for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(m[i] - o.m[i]));
        return d;
    }
    double max_abs() const {
        double d = 0;
        for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(m[i]));
        return d;
    }
    bool is_hermitian(double tol) const { return max_abs_diff(adjoint()) <= tol; }
};

inline Mat2 pauli_x() { return {{cxd(0), cxd(1), cxd(1), cxd(0)}}; }
inline Mat2 pauli_y() { return {{cxd(0), cxd(0, -1), cxd(0, 1), cxd(0)}}; }
inline Mat2 pauli_z() { return {{cxd(1), cxd(0), cxd(0), cxd(-1)}}; }

}  // namespace zitter
