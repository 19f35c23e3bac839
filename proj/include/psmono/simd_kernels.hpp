#pragma once

#include <cstddef>
#include <cstdint>

namespace psmono::kernels {

// Coefficient-array kernels backing the dense multivector arithmetic.
// Every entry point has a scalar reference implementation and may have
// SIMD variants; the active table is chosen once at startup from CPU
// features (override with PSMONO_KERNELS=scalar|avx2|neon).
struct Ops {
  const char* name;
  void (*add)(double* dst, const double* a, const double* b, std::size_t n);
  void (*sub)(double* dst, const double* a, const double* b, std::size_t n);
  void (*scale)(double* dst, const double* a, double s, std::size_t n);
  void (*axpy)(double* dst, const double* a, double s, std::size_t n);  // dst += s*a
  double (*sum_squares)(const double* a, std::size_t n);
  // dst[i] += sign(parity(i & sign_mask)) * s * src[i ^ xor_mask], i in [0, n).
  // n must be a power of two and both masks < n. This is the inner loop of
  // the geometric product with one operand blade fixed.
  void (*xor_signed_axpy)(double* dst, const double* src, std::size_t n,
                          std::uint32_t xor_mask, std::uint32_t sign_mask, double s);
};

/// Portable reference kernels.
const Ops& scalar_ops();

/// AVX2 kernels, or nullptr when the CPU (or build) lacks AVX2.
const Ops* avx2_ops();

/// NEON kernels, or nullptr off aarch64.
const Ops* neon_ops();

/// The runtime-selected table.
const Ops& active();

}  // namespace psmono::kernels
