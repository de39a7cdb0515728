#pragma once

#include <cstddef>
#include <vector>

#include "zitter/mat2.hpp"

namespace zitter::fft {

bool is_pow2(std::size_t n);

// In-place radix-2 transform, length must be a power of two.
// sign = -1: sum_j a_j e^{-2 pi i j l / n};  sign = +1: positive exponent.
// No 1/n normalization either way.
void transform(std::vector<cxd>& a, int sign);

// Spectral derivative of samples of a smooth function on a uniform grid with
// spacing dk (treated as one period of a periodic extension). Exact while the
// conjugate-space content of `a` stays inside the Nyquist box.
std::vector<cxd> derivative(const std::vector<cxd>& a, double dk);

}  // namespace zitter::fft
