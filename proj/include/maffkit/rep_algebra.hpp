#pragma once

#include <utility>
#include <vector>

#include "maffkit/rng.hpp"
#include "maffkit/subspace.hpp"

namespace maff {

/// Finite-dimensional represented von Neumann algebra: a direct sum of full
/// matrix blocks with multiplicities. Elements are block-diagonal matrices
/// ⊕_i (A_i ⊗ I_{k_i}); the commutant is ⊕_i (I_{n_i} ⊗ M_{k_i}).
struct RepAlgebra {
  struct Block {
    int n = 1;  // matrix size
    int k = 1;  // multiplicity
  };
  std::vector<Block> blocks;

  int ambient_dim() const;
  int block_offset(int index) const;  // offset of block `index` in the ambient space
  void validate() const;

  static RepAlgebra full(int n) { return RepAlgebra{{{n, 1}}}; }
};

/// Block component A_i recovered by partial trace over the multiplicity
/// factor; exact on algebra members, a conditional expectation otherwise.
CMatrix block_component(const CMatrix& x, const RepAlgebra& alg, int index);

/// ⊕_i (comp_i ⊗ I_{k_i})
CMatrix assemble(const RepAlgebra& alg, const std::vector<CMatrix>& components);

/// Nearest algebra element (block-structured projection of x).
CMatrix algebra_project(const CMatrix& x, const RepAlgebra& alg);

bool algebra_membership(const CMatrix& x, const RepAlgebra& alg, const Tolerance& tol = {});

CMatrix random_element(const RepAlgebra& alg, rng::Engine& eng);
CMatrix random_commutant_unitary(const RepAlgebra& alg, rng::Engine& eng);

/// Unital normal *-homomorphism between represented algebras: a multiplicity
/// matrix plus one conjugating unitary per target block. Target block j acts
/// as U_j (⊕_i A_i ⊗ I_{mult[j][i]}) U_j^*.
struct Homomorphism {
  RepAlgebra source;
  RepAlgebra target;
  std::vector<std::vector<int>> mult;  // target blocks x source blocks
  std::vector<CMatrix> conjugators;    // one m_j x m_j unitary per target block

  void validate(const Tolerance& tol = {}) const;

  static Homomorphism identity(const RepAlgebra& alg);
};

CMatrix hom_apply(const Homomorphism& phi, const CMatrix& a, const Tolerance& tol = {});

/// Entrywise extension to 2x2 block matrices over the source, M_2(M) acting
/// on H ⊕ H.
Homomorphism hom_amplify2(const Homomorphism& phi);

/// psi ∘ phi as a single multiplicity-and-conjugator homomorphism.
Homomorphism hom_compose(const Homomorphism& psi, const Homomorphism& phi);

/// M_2 of a represented algebra in canonical block-major layout, and the
/// permutation taking canonical coordinates to the H ⊕ H layout.
RepAlgebra doubled_algebra(const RepAlgebra& alg);
CMatrix doubling_permutation(const RepAlgebra& alg);  // x_doubled = P x_canonical

}  // namespace maff
