#include "maffkit/rng.hpp"

#include <cmath>

namespace maff::rng {

uint64_t mix(uint64_t seed, uint64_t stream, uint64_t index) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1) + 0xbf58476d1ce4e5b9ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double uniform(Engine& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

double uniform(Engine& eng, double lo, double hi) { return lo + (hi - lo) * uniform(eng); }

int uniform_int(Engine& eng, int lo, int hi) {
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(eng() % span);
}

complexd gaussian(Engine& eng) {
  double u1 = uniform(eng);
  while (u1 <= 0.0) u1 = uniform(eng);
  const double u2 = uniform(eng);
  const double r = std::sqrt(-2.0 * std::log(u1));
  return complexd(r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2));
}

CMatrix gaussian_matrix(int rows, int cols, Engine& eng) {
  CMatrix m(rows, cols);
  for (auto& v : m.data()) v = gaussian(eng);
  return m;
}

CMatrix haar_unitary(int n, Engine& eng) {
  CMatrix z = gaussian_matrix(n, n, eng);
  // modified Gram-Schmidt, re-orthogonalized once
  CMatrix q(n, n);
  for (int j = 0; j < n; ++j) {
    CMatrix v = z.col(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        const CMatrix qk = q.col(k);
        complexd proj(0.0, 0.0);
        for (int i = 0; i < n; ++i) proj += std::conj(qk.at(i, 0)) * v.at(i, 0);
        v -= proj * qk;
      }
    }
    double norm = v.fro_norm();
    if (norm < 1e-12) {
      // astronomically unlikely; fall back to a fresh draw for this column
      v = gaussian_matrix(n, 1, eng);
      norm = v.fro_norm();
    }
    v = (1.0 / norm) * v;
    q.set_block(0, j, v);
  }
  return q;
}

CMatrix matrix_with_rank(int n, int rank, Engine& eng) {
  const CMatrix u = haar_unitary(n, eng);
  const CMatrix v = haar_unitary(n, eng);
  std::vector<complexd> sigma(n, complexd(0.0, 0.0));
  for (int i = 0; i < rank; ++i) sigma[i] = uniform(eng, 0.5, 2.0);
  return u * CMatrix::diag(sigma) * v.adjoint();
}

CMatrix psd_with_rank(int n, int rank, Engine& eng) {
  const CMatrix u = haar_unitary(n, eng);
  std::vector<complexd> lambda(n, complexd(0.0, 0.0));
  for (int i = 0; i < rank; ++i) lambda[i] = uniform(eng, 0.5, 2.0);
  CMatrix out = u * CMatrix::diag(lambda) * u.adjoint();
  return 0.5 * (out + out.adjoint());
}

CMatrix projection_with_rank(int n, int rank, Engine& eng) {
  const CMatrix u = haar_unitary(n, eng);
  std::vector<complexd> lambda(n, complexd(0.0, 0.0));
  for (int i = 0; i < rank; ++i) lambda[i] = 1.0;
  CMatrix out = u * CMatrix::diag(lambda) * u.adjoint();
  return 0.5 * (out + out.adjoint());
}

CMatrix unit_vector(int n, Engine& eng) {
  CMatrix v = gaussian_matrix(n, 1, eng);
  double norm = v.fro_norm();
  while (norm < 1e-12) {
    v = gaussian_matrix(n, 1, eng);
    norm = v.fro_norm();
  }
  return (1.0 / norm) * v;
}

}  // namespace maff::rng
