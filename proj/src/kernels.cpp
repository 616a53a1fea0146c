#include "maffkit/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "maffkit/errors.hpp"

namespace maff::kernels {

namespace detail {

void cgemm_scalar(const double* a, const double* b, double* c, int m, int k, int p) noexcept {
  std::memset(c, 0, sizeof(double) * 2u * static_cast<size_t>(m) * static_cast<size_t>(p));
  for (int i = 0; i < m; ++i) {
    const double* arow = a + 2u * static_cast<size_t>(i) * k;
    double* crow = c + 2u * static_cast<size_t>(i) * p;
    for (int l = 0; l < k; ++l) {
      const double ar = arow[2 * l];
      const double ai = arow[2 * l + 1];
      if (ar == 0.0 && ai == 0.0) continue;
      const double* brow = b + 2u * static_cast<size_t>(l) * p;
      for (int j = 0; j < p; ++j) {
        const double br = brow[2 * j];
        const double bi = brow[2 * j + 1];
        crow[2 * j] += ar * br - ai * bi;
        crow[2 * j + 1] += ar * bi + ai * br;
      }
    }
  }
}

void caxpy_scalar(double ar, double ai, const double* x, double* y, int n) noexcept {
  for (int j = 0; j < n; ++j) {
    const double xr = x[2 * j];
    const double xi = x[2 * j + 1];
    y[2 * j] += ar * xr - ai * xi;
    y[2 * j + 1] += ar * xi + ai * xr;
  }
}

double fro_norm_sq_scalar(const double* a, int n) noexcept {
  double s = 0.0;
  for (int j = 0; j < 2 * n; ++j) s += a[j] * a[j];
  return s;
}

}  // namespace detail

namespace {

Lane pick_lane() {
#if defined(MAFFKIT_AVX2_BUILD)
  bool avx2_ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  bool avx2_ok = false;
#endif
  if (const char* env = std::getenv("MAFFKIT_KERNEL")) {
    if (std::strcmp(env, "scalar") == 0) return Lane::scalar;
    if (std::strcmp(env, "avx2") == 0 && avx2_ok) return Lane::avx2;
    return Lane::scalar;
  }
  return avx2_ok ? Lane::avx2 : Lane::scalar;
}

Lane g_lane = pick_lane();

}  // namespace

Lane active_lane() noexcept { return g_lane; }

bool lane_available(Lane lane) noexcept {
  if (lane == Lane::scalar) return true;
#if defined(MAFFKIT_AVX2_BUILD)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

void force_lane(Lane lane) {
  if (!lane_available(lane)) fail(errc::bad_input, "requested kernel lane is unavailable");
  g_lane = lane;
}

void cgemm(const double* a, const double* b, double* c, int m, int k, int p) noexcept {
#if defined(MAFFKIT_AVX2_BUILD)
  if (g_lane == Lane::avx2) {
    detail::cgemm_avx2(a, b, c, m, k, p);
    return;
  }
#endif
  detail::cgemm_scalar(a, b, c, m, k, p);
}

void caxpy(double ar, double ai, const double* x, double* y, int n) noexcept {
#if defined(MAFFKIT_AVX2_BUILD)
  if (g_lane == Lane::avx2) {
    detail::caxpy_avx2(ar, ai, x, y, n);
    return;
  }
#endif
  detail::caxpy_scalar(ar, ai, x, y, n);
}

double fro_norm_sq(const double* a, int n) noexcept {
#if defined(MAFFKIT_AVX2_BUILD)
  if (g_lane == Lane::avx2) return detail::fro_norm_sq_avx2(a, n);
#endif
  return detail::fro_norm_sq_scalar(a, n);
}

}  // namespace maff::kernels
