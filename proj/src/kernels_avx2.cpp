#include <immintrin.h>

#include <cstring>

#include "maffkit/kernels.hpp"

// AVX2 lane: two interleaved complex doubles per 256-bit vector. A complex
// multiply-accumulate uses the fmaddsub pattern on the broadcast scalar and a
// pair-swapped copy of the vector operand.

namespace maff::kernels::detail {

namespace {

// acc += (ar + i*ai) * v, v holds [re0, im0, re1, im1]
inline __m256d cmadd(__m256d acc, __m256d ar, __m256d ai, __m256d v) noexcept {
  __m256d swapped = _mm256_permute_pd(v, 0x5);        // [im0, re0, im1, re1]
  __m256d t = _mm256_mul_pd(ai, swapped);             // [ai*im, ai*re, ...]
  __m256d prod = _mm256_fmaddsub_pd(ar, v, t);        // [ar*re - ai*im, ar*im + ai*re, ...]
  return _mm256_add_pd(acc, prod);
}

}  // namespace

void cgemm_avx2(const double* a, const double* b, double* c, int m, int k, int p) noexcept {
  std::memset(c, 0, sizeof(double) * 2u * static_cast<size_t>(m) * static_cast<size_t>(p));
  const int p2 = p & ~1;  // vectorized columns, two complexes at a time
  for (int i = 0; i < m; ++i) {
    const double* arow = a + 2u * static_cast<size_t>(i) * k;
    double* crow = c + 2u * static_cast<size_t>(i) * p;
    for (int l = 0; l < k; ++l) {
      const double ar = arow[2 * l];
      const double ai = arow[2 * l + 1];
      if (ar == 0.0 && ai == 0.0) continue;
      const double* brow = b + 2u * static_cast<size_t>(l) * p;
      const __m256d var = _mm256_set1_pd(ar);
      const __m256d vai = _mm256_set1_pd(ai);
      int j = 0;
      for (; j < p2; j += 2) {
        __m256d v = _mm256_loadu_pd(brow + 2 * j);
        __m256d acc = _mm256_loadu_pd(crow + 2 * j);
        _mm256_storeu_pd(crow + 2 * j, cmadd(acc, var, vai, v));
      }
      for (; j < p; ++j) {
        const double br = brow[2 * j];
        const double bi = brow[2 * j + 1];
        crow[2 * j] += ar * br - ai * bi;
        crow[2 * j + 1] += ar * bi + ai * br;
      }
    }
  }
}

void caxpy_avx2(double ar, double ai, const double* x, double* y, int n) noexcept {
  const __m256d var = _mm256_set1_pd(ar);
  const __m256d vai = _mm256_set1_pd(ai);
  const int n2 = n & ~1;
  int j = 0;
  for (; j < n2; j += 2) {
    __m256d v = _mm256_loadu_pd(x + 2 * j);
    __m256d acc = _mm256_loadu_pd(y + 2 * j);
    _mm256_storeu_pd(y + 2 * j, cmadd(acc, var, vai, v));
  }
  for (; j < n; ++j) {
    const double xr = x[2 * j];
    const double xi = x[2 * j + 1];
    y[2 * j] += ar * xr - ai * xi;
    y[2 * j + 1] += ar * xi + ai * xr;
  }
}

double fro_norm_sq_avx2(const double* a, int n) noexcept {
  __m256d acc = _mm256_setzero_pd();
  const int len = 2 * n;
  const int len4 = len & ~3;
  int j = 0;
  for (; j < len4; j += 4) {
    __m256d v = _mm256_loadu_pd(a + j);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; j < len; ++j) s += a[j] * a[j];
  return s;
}

}  // namespace maff::kernels::detail
