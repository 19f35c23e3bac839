#include "psmono/simd_kernels.hpp"

#include <bit>
#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define PSMONO_HAVE_AVX2_BUILD 1
#endif

#if defined(__ARM_NEON)
#include <arm_neon.h>
#endif

namespace psmono::kernels {

namespace {

// ---------------------------------------------------------------- scalar

void s_add(double* dst, const double* a, const double* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] + b[i];
}

void s_sub(double* dst, const double* a, const double* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] - b[i];
}

void s_scale(double* dst, const double* a, double s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] * s;
}

void s_axpy(double* dst, const double* a, double s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] += a[i] * s;
}

double s_sum_squares(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * a[i];
  return acc;
}

void s_xor_signed_axpy(double* dst, const double* src, std::size_t n,
                       std::uint32_t xm, std::uint32_t sm, double s) {
  for (std::size_t i = 0; i < n; ++i) {
    const double v = src[i ^ xm] * s;
    dst[i] += (std::popcount(static_cast<std::uint32_t>(i) & sm) & 1) ? -v : v;
  }
}

constexpr Ops kScalar = {"scalar", s_add, s_sub, s_scale, s_axpy,
                         s_sum_squares, s_xor_signed_axpy};

// ---------------------------------------------------------------- avx2

#if PSMONO_HAVE_AVX2_BUILD

__attribute__((target("avx2,fma"))) void v_add(double* dst, const double* a,
                                               const double* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(dst + i, _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < n; ++i) dst[i] = a[i] + b[i];
}

__attribute__((target("avx2,fma"))) void v_sub(double* dst, const double* a,
                                               const double* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(dst + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < n; ++i) dst[i] = a[i] - b[i];
}

__attribute__((target("avx2,fma"))) void v_scale(double* dst, const double* a,
                                                 double s, std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(dst + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), vs));
  for (; i < n; ++i) dst[i] = a[i] * s;
}

__attribute__((target("avx2,fma"))) void v_axpy(double* dst, const double* a,
                                                double s, std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(dst + i,
                     _mm256_fmadd_pd(_mm256_loadu_pd(a + i), vs, _mm256_loadu_pd(dst + i)));
  for (; i < n; ++i) dst[i] += a[i] * s;
}

__attribute__((target("avx2,fma"))) double v_sum_squares(const double* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(a + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = ((lanes[0] + lanes[1]) + (lanes[2] + lanes[3]));
  for (; i < n; ++i) total += a[i] * a[i];
  return total;
}

// Lane permutation within a 4-block under XOR with the low two mask bits,
// and the matching per-lane sign pattern for the low two sign-mask bits.
__attribute__((target("avx2,fma"))) void v_xor_signed_axpy(double* dst, const double* src,
                                                           std::size_t n, std::uint32_t xm,
                                                           std::uint32_t sm, double s) {
  if (n < 4) {
    s_xor_signed_axpy(dst, src, n, xm, sm, s);
    return;
  }
  const std::uint32_t xl = xm & 3u;
  const std::uint32_t xh = xm & ~3u;
  const std::uint32_t sl = sm & 3u;
  const std::uint32_t sh = sm & ~3u;

  const std::uint64_t neg = 0x8000000000000000ull;
  alignas(32) std::uint64_t lane_bits[4];
  for (std::uint32_t j = 0; j < 4; ++j)
    lane_bits[j] = (std::popcount(j & sl) & 1) ? neg : 0ull;
  const __m256d lane_sign = _mm256_load_pd(reinterpret_cast<const double*>(lane_bits));

  for (std::size_t i = 0; i < n; i += 4) {
    const double* blk = src + ((static_cast<std::uint32_t>(i) ^ xh));
    __m256d v = _mm256_loadu_pd(blk);
    switch (xl) {
      case 1: v = _mm256_permute_pd(v, 0b0101); break;                 // j ^ 1
      case 2: v = _mm256_permute2f128_pd(v, v, 0x01); break;           // j ^ 2
      case 3:                                                          // j ^ 3
        v = _mm256_permute2f128_pd(v, v, 0x01);
        v = _mm256_permute_pd(v, 0b0101);
        break;
      default: break;
    }
    const double bs = (std::popcount(static_cast<std::uint32_t>(i) & sh) & 1) ? -s : s;
    v = _mm256_xor_pd(_mm256_mul_pd(v, _mm256_set1_pd(bs)), lane_sign);
    _mm256_storeu_pd(dst + i, _mm256_add_pd(_mm256_loadu_pd(dst + i), v));
  }
}

constexpr Ops kAvx2 = {"avx2", v_add, v_sub, v_scale, v_axpy,
                       v_sum_squares, v_xor_signed_axpy};

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"); }

#endif  // PSMONO_HAVE_AVX2_BUILD

// ---------------------------------------------------------------- neon

#if defined(__ARM_NEON)

void n_add(double* dst, const double* a, const double* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(dst + i, vaddq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  for (; i < n; ++i) dst[i] = a[i] + b[i];
}

void n_sub(double* dst, const double* a, const double* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(dst + i, vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  for (; i < n; ++i) dst[i] = a[i] - b[i];
}

void n_scale(double* dst, const double* a, double s, std::size_t n) {
  const float64x2_t vs = vdupq_n_f64(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(dst + i, vmulq_f64(vld1q_f64(a + i), vs));
  for (; i < n; ++i) dst[i] = a[i] * s;
}

void n_axpy(double* dst, const double* a, double s, std::size_t n) {
  const float64x2_t vs = vdupq_n_f64(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_f64(dst + i, vfmaq_f64(vld1q_f64(dst + i), vld1q_f64(a + i), vs));
  for (; i < n; ++i) dst[i] += a[i] * s;
}

double n_sum_squares(const double* a, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t v = vld1q_f64(a + i);
    acc = vfmaq_f64(acc, v, v);
  }
  double total = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; i < n; ++i) total += a[i] * a[i];
  return total;
}

constexpr Ops kNeon = {"neon", n_add, n_sub, n_scale, n_axpy,
                       n_sum_squares, s_xor_signed_axpy};

#endif  // __ARM_NEON

const Ops& select() {
  if (const char* env = std::getenv("PSMONO_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return kScalar;
#if PSMONO_HAVE_AVX2_BUILD
    if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return kAvx2;
#endif
#if defined(__ARM_NEON)
    if (std::strcmp(env, "neon") == 0) return kNeon;
#endif
    return kScalar;
  }
#if PSMONO_HAVE_AVX2_BUILD
  if (cpu_has_avx2()) return kAvx2;
#endif
#if defined(__ARM_NEON)
  return kNeon;
#else
  return kScalar;
#endif
}

}  // namespace

const Ops& scalar_ops() { return kScalar; }

const Ops* avx2_ops() {
#if PSMONO_HAVE_AVX2_BUILD
  return cpu_has_avx2() ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const Ops* neon_ops() {
#if defined(__ARM_NEON)
  return &kNeon;
#else
  return nullptr;
#endif
}

const Ops& active() {
  static const Ops& chosen = select();
  return chosen;
}

}  // namespace psmono::kernels
