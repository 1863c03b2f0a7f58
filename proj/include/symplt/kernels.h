#pragma once

// Inner loops shared by the dense routines. Each kernel has a serial
// reference and an OpenMP version that splits work by output row only, so
// every output entry sees the same sequence of floating-point operations and
// both versions agree bit-for-bit.

#include <span>

#include "symplt/matrix.h"

namespace symplt::kernels {

/// Below this many multiply-adds the dispatching entry points stay serial.
inline constexpr Index kParallelThreshold = 64 * 64 * 64;

namespace serial {
void matmul(const Matrix& a, const Matrix& b, Matrix& c);
void matvec(const Matrix& a, std::span<const double> x, std::span<double> y);
void matvec_transposed(const Matrix& a, std::span<const double> x, std::span<double> y);
}  // namespace serial

namespace parallel {
void matmul(const Matrix& a, const Matrix& b, Matrix& c);
void matvec(const Matrix& a, std::span<const double> x, std::span<double> y);
void matvec_transposed(const Matrix& a, std::span<const double> x, std::span<double> y);
}  // namespace parallel

// Dispatch on problem size.
void matmul(const Matrix& a, const Matrix& b, Matrix& c);
void matvec(const Matrix& a, std::span<const double> x, std::span<double> y);
void matvec_transposed(const Matrix& a, std::span<const double> x, std::span<double> y);

}  // namespace symplt::kernels
