#pragma once

#include <complex>

// Arithmetic kernels behind CMatrix. All pointers address interleaved complex
// doubles (re, im) in row-major order and must not alias. A scalar reference
// lane always exists; an AVX2+FMA lane is selected at runtime when the CPU
// supports it. MAFFKIT_KERNEL=scalar|avx2 in the environment overrides the
// selection at startup.

namespace maff::kernels {

enum class Lane { scalar, avx2 };

Lane active_lane() noexcept;
bool lane_available(Lane lane) noexcept;
void force_lane(Lane lane);  // throws if the lane is unavailable

// c = a * b for an (m x k) by (k x p) complex product.
void cgemm(const double* a, const double* b, double* c, int m, int k, int p) noexcept;

// y += alpha * x over n complex entries.
void caxpy(double alpha_re, double alpha_im, const double* x, double* y, int n) noexcept;

// sum of |z|^2 over n complex entries.
double fro_norm_sq(const double* a, int n) noexcept;

namespace detail {
void cgemm_scalar(const double* a, const double* b, double* c, int m, int k, int p) noexcept;
void caxpy_scalar(double ar, double ai, const double* x, double* y, int n) noexcept;
double fro_norm_sq_scalar(const double* a, int n) noexcept;
#if defined(MAFFKIT_AVX2_BUILD)
void cgemm_avx2(const double* a, const double* b, double* c, int m, int k, int p) noexcept;
void caxpy_avx2(double ar, double ai, const double* x, double* y, int n) noexcept;
double fro_norm_sq_avx2(const double* a, int n) noexcept;
#endif
}  // namespace detail

}  // namespace maff::kernels
