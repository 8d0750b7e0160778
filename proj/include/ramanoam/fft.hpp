#pragma once

#include <complex>
#include <span>

namespace ramanoam::fft {

enum class Direction { Forward, Inverse };

// In-place 2-D DFT of a row-major ny x nx array. Forward uses e^{-i2pi f x};
// Inverse is normalized by 1/(nx*ny) so forward followed by inverse is identity.
void transform_2d(std::span<std::complex<double>> data, int nx, int ny, Direction dir);

// In-place 1-D DFT, same conventions.
void transform_1d(std::span<std::complex<double>> data, Direction dir);

// Signed frequency index of FFT bin i on an n-point axis.
inline int signed_bin(int i, int n) { return i < (n + 1) / 2 ? i : i - n; }

}  // namespace ramanoam::fft
