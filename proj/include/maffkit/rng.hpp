#pragma once

#include <cstdint>
#include <random>

#include "maffkit/numkernel.hpp"

namespace maff::rng {

using Engine = std::mt19937_64;

/// Stream/index mixing for per-case engines; splitmix64 finalizer.
uint64_t mix(uint64_t seed, uint64_t stream, uint64_t index);

/// Uniform in [0, 1); consumes one engine draw. Distributions are hand-rolled
/// on the standardized mt19937_64 bit stream so reports are reproducible
/// across standard libraries.
double uniform(Engine& eng);
double uniform(Engine& eng, double lo, double hi);
int uniform_int(Engine& eng, int lo, int hi);  // inclusive bounds

/// Standard complex Gaussian (Box-Muller).
complexd gaussian(Engine& eng);

CMatrix gaussian_matrix(int rows, int cols, Engine& eng);

/// Haar-distributed unitary via Gram-Schmidt of a Ginibre matrix.
CMatrix haar_unitary(int n, Engine& eng);

/// n x n matrix of the given rank with singular values in [0.5, 2]; rank
/// decisions are unambiguous by construction.
CMatrix matrix_with_rank(int n, int rank, Engine& eng);

/// Hermitian PSD with the given rank, eigenvalues in [0.5, 2].
CMatrix psd_with_rank(int n, int rank, Engine& eng);

/// Random orthogonal projection of the given rank.
CMatrix projection_with_rank(int n, int rank, Engine& eng);

/// Unit vector in C^n.
CMatrix unit_vector(int n, Engine& eng);

}  // namespace maff::rng
