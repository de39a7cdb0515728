#include "zitter/fft.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace zitter::fft {

namespace {

constexpr double kPi = 3.14159265358979323846;

// twiddle table: w[j] = exp(-i 2 pi j / n), j in [0, n/2)
const std::vector<cxd>& twiddles(std::size_t n) {
    static std::map<std::size_t, std::vector<cxd>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<cxd> w(n / 2);
    for (std::size_t j = 0; j < n / 2; ++j) {
        double ang = -2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
        w[j] = cxd(std::cos(ang), std::sin(ang));
    }
    return cache.emplace(n, std::move(w)).first->second;
}

}  // namespace

bool is_pow2(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

void transform(std::vector<cxd>& a, int sign) {
    const std::size_t n = a.size();
    if (!is_pow2(n)) throw std::invalid_argument("fft: length must be a power of two");

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    const auto& w = twiddles(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t step = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                cxd tw = w[j * step];
                if (sign > 0) tw = std::conj(tw);
                cxd u = a[i + j];
                cxd v = a[i + j + len / 2] * tw;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
            }
        }
    }
}

std::vector<cxd> derivative(const std::vector<cxd>& a, double dk) {
    const std::size_t n = a.size();
    std::vector<cxd> b = a;
    transform(b, -1);
    // conjugate-variable node for bin l (wrapped): m * 2 pi / (n dk)
    const double du = 2.0 * kPi / (static_cast<double>(n) * dk);
    for (std::size_t l = 0; l < n; ++l) {
        double m = (l < n / 2) ? static_cast<double>(l)
                               : static_cast<double>(l) - static_cast<double>(n);
        b[l] *= cxd(0, m * du);
    }
    transform(b, +1);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (auto& v : b) v *= inv_n;
    return b;
}

}  // namespace zitter::fft
