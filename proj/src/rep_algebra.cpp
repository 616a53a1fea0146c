#include "maffkit/rep_algebra.hpp"

#include <cmath>

namespace maff {

int RepAlgebra::ambient_dim() const {
  int total = 0;
  for (const auto& b : blocks) total += b.n * b.k;
  return total;
}

int RepAlgebra::block_offset(int index) const {
  int offset = 0;
  for (int i = 0; i < index; ++i) offset += blocks[i].n * blocks[i].k;
  return offset;
}

void RepAlgebra::validate() const {
  if (blocks.empty()) fail(errc::bad_input, "algebra needs at least one block");
  for (const auto& b : blocks)
    if (b.n < 1 || b.k < 1) fail(errc::bad_input, "block sizes and multiplicities must be >= 1");
}

CMatrix block_component(const CMatrix& x, const RepAlgebra& alg, int index) {
  const auto& b = alg.blocks[index];
  const int off = alg.block_offset(index);
  CMatrix comp(b.n, b.n);
  for (int u = 0; u < b.n; ++u)
    for (int v = 0; v < b.n; ++v) {
      complexd sum(0.0, 0.0);
      for (int s = 0; s < b.k; ++s) sum += x.at(off + u * b.k + s, off + v * b.k + s);
      comp.at(u, v) = sum / static_cast<double>(b.k);
    }
  return comp;
}

CMatrix assemble(const RepAlgebra& alg, const std::vector<CMatrix>& components) {
  if (components.size() != alg.blocks.size()) fail(errc::bad_input, "component count mismatch");
  CMatrix out(alg.ambient_dim(), alg.ambient_dim());
  for (size_t i = 0; i < alg.blocks.size(); ++i) {
    const auto& b = alg.blocks[i];
    const auto& comp = components[i];
    if (comp.rows() != b.n || comp.cols() != b.n)
      fail(errc::dimension_mismatch, "component size mismatch");
    const int off = alg.block_offset(static_cast<int>(i));
    for (int u = 0; u < b.n; ++u)
      for (int v = 0; v < b.n; ++v) {
        const complexd value = comp.at(u, v);
        if (value == complexd(0.0, 0.0)) continue;
        for (int s = 0; s < b.k; ++s) out.at(off + u * b.k + s, off + v * b.k + s) = value;
      }
  }
  return out;
}

CMatrix algebra_project(const CMatrix& x, const RepAlgebra& alg) {
  if (x.rows() != alg.ambient_dim() || x.cols() != alg.ambient_dim())
    fail(errc::dimension_mismatch, "algebra projection");
  std::vector<CMatrix> comps;
  comps.reserve(alg.blocks.size());
  for (size_t i = 0; i < alg.blocks.size(); ++i)
    comps.push_back(block_component(x, alg, static_cast<int>(i)));
  return assemble(alg, comps);
}

bool algebra_membership(const CMatrix& x, const RepAlgebra& alg, const Tolerance& tol) {
  if (x.rows() != alg.ambient_dim() || x.cols() != alg.ambient_dim())
    fail(errc::dimension_mismatch, "membership check");
  const CMatrix delta = x - algebra_project(x, alg);
  return operator_norm_est(delta) < tol.eq_threshold(operator_norm_est(x));
}

CMatrix random_element(const RepAlgebra& alg, rng::Engine& eng) {
  std::vector<CMatrix> comps;
  comps.reserve(alg.blocks.size());
  for (const auto& b : alg.blocks) comps.push_back(rng::gaussian_matrix(b.n, b.n, eng));
  return assemble(alg, comps);
}

CMatrix random_commutant_unitary(const RepAlgebra& alg, rng::Engine& eng) {
  CMatrix out(alg.ambient_dim(), alg.ambient_dim());
  for (size_t i = 0; i < alg.blocks.size(); ++i) {
    const auto& b = alg.blocks[i];
    const CMatrix w = rng::haar_unitary(b.k, eng);
    const int off = alg.block_offset(static_cast<int>(i));
    for (int u = 0; u < b.n; ++u)
      for (int s = 0; s < b.k; ++s)
        for (int t = 0; t < b.k; ++t) out.at(off + u * b.k + s, off + u * b.k + t) = w.at(s, t);
  }
  return out;
}

void Homomorphism::validate(const Tolerance& tol) const {
  source.validate();
  target.validate();
  if (mult.size() != target.blocks.size()) fail(errc::bad_input, "multiplicity row count");
  if (conjugators.size() != target.blocks.size()) fail(errc::bad_input, "conjugator count");
  for (size_t j = 0; j < target.blocks.size(); ++j) {
    if (mult[j].size() != source.blocks.size()) fail(errc::bad_input, "multiplicity column count");
    int total = 0;
    for (size_t i = 0; i < source.blocks.size(); ++i) {
      if (mult[j][i] < 0) fail(errc::bad_input, "negative multiplicity");
      total += mult[j][i] * source.blocks[i].n;
    }
    if (total != target.blocks[j].n) fail(errc::bad_input, "unitality violated");
    const CMatrix& u = conjugators[j];
    if (u.rows() != target.blocks[j].n || u.cols() != target.blocks[j].n)
      fail(errc::bad_input, "conjugator size mismatch");
    const CMatrix defect = u.adjoint() * u - CMatrix::identity(u.rows());
    if (defect.fro_norm() > tol.eq_threshold(1.0) * u.rows())
      fail(errc::bad_input, "conjugator is not unitary");
  }
}

Homomorphism Homomorphism::identity(const RepAlgebra& alg) {
  Homomorphism phi;
  phi.source = alg;
  phi.target = alg;
  const size_t nb = alg.blocks.size();
  phi.mult.assign(nb, std::vector<int>(nb, 0));
  for (size_t i = 0; i < nb; ++i) {
    phi.mult[i][i] = 1;
    phi.conjugators.push_back(CMatrix::identity(alg.blocks[i].n));
  }
  return phi;
}

CMatrix hom_apply(const Homomorphism& phi, const CMatrix& a, const Tolerance& tol) {
  if (!algebra_membership(a, phi.source, tol)) fail(errc::not_in_algebra, "hom_apply operand");
  // block components at the rounding floor of the operand are cancellation
  // residue; a non-faithful homomorphism could otherwise promote them to the
  // whole image
  const double scale = operator_norm_est(a);
  std::vector<CMatrix> source_comps;
  for (size_t i = 0; i < phi.source.blocks.size(); ++i)
    source_comps.push_back(
        flush_cancellation(block_component(a, phi.source, static_cast<int>(i)), scale, tol));

  std::vector<CMatrix> target_comps;
  for (size_t j = 0; j < phi.target.blocks.size(); ++j) {
    CMatrix stacked(0, 0);
    for (size_t i = 0; i < phi.source.blocks.size(); ++i) {
      const int copies = phi.mult[j][i];
      if (copies == 0) continue;
      stacked = direct_sum(stacked, kron(source_comps[i], CMatrix::identity(copies)));
    }
    target_comps.push_back(phi.conjugators[j] * stacked * phi.conjugators[j].adjoint());
  }
  return assemble(phi.target, target_comps);
}

RepAlgebra doubled_algebra(const RepAlgebra& alg) {
  RepAlgebra out;
  for (const auto& b : alg.blocks) out.blocks.push_back({2 * b.n, b.k});
  return out;
}

CMatrix doubling_permutation(const RepAlgebra& alg) {
  // canonical index (i, w in [2 n_i], s in [k_i]) with w = c*n_i + u maps to
  // doubled index c*N + offset_i + u*k_i + s
  const int n_amb = alg.ambient_dim();
  const RepAlgebra dbl = doubled_algebra(alg);
  CMatrix p(2 * n_amb, 2 * n_amb);
  for (size_t i = 0; i < alg.blocks.size(); ++i) {
    const auto& b = alg.blocks[i];
    const int off_single = alg.block_offset(static_cast<int>(i));
    const int off_canon = dbl.block_offset(static_cast<int>(i));
    for (int w = 0; w < 2 * b.n; ++w) {
      const int c = w / b.n;
      const int u = w % b.n;
      for (int s = 0; s < b.k; ++s) {
        const int canonical = off_canon + w * b.k + s;
        const int doubled = c * n_amb + off_single + u * b.k + s;
        p.at(doubled, canonical) = 1.0;
      }
    }
  }
  return p;
}

namespace {

// Permutation taking the basis ordered (i-major, w in [2 n_i], s in [m_ji])
// to the ordering (c in [2], i, u in [n_i], s) with w = c*n_i + u.
CMatrix amplify2_shuffle(const Homomorphism& phi, int j) {
  const int mj = phi.target.blocks[j].n;
  CMatrix shuffle(2 * mj, 2 * mj);
  std::vector<int> offsets_doubled;   // per source block, in (i, w, s) ordering
  std::vector<int> offsets_single;    // per source block, in (i, u, s) ordering inside one copy
  int acc_d = 0;
  int acc_s = 0;
  for (size_t i = 0; i < phi.source.blocks.size(); ++i) {
    offsets_doubled.push_back(acc_d);
    offsets_single.push_back(acc_s);
    acc_d += 2 * phi.source.blocks[i].n * phi.mult[j][i];
    acc_s += phi.source.blocks[i].n * phi.mult[j][i];
  }
  for (size_t i = 0; i < phi.source.blocks.size(); ++i) {
    const int ni = phi.source.blocks[i].n;
    const int copies = phi.mult[j][static_cast<int>(i)];
    for (int w = 0; w < 2 * ni; ++w) {
      const int c = w / ni;
      const int u = w % ni;
      for (int s = 0; s < copies; ++s) {
        const int from = offsets_doubled[i] + w * copies + s;        // (i, w, s)
        const int to = c * mj + offsets_single[i] + u * copies + s;  // (c, i, u, s)
        shuffle.at(to, from) = 1.0;
      }
    }
  }
  return shuffle;
}

}  // namespace

Homomorphism hom_amplify2(const Homomorphism& phi) {
  Homomorphism out;
  out.source = doubled_algebra(phi.source);
  out.target = doubled_algebra(phi.target);
  out.mult = phi.mult;
  for (size_t j = 0; j < phi.target.blocks.size(); ++j) {
    const CMatrix i2u = kron(CMatrix::identity(2), phi.conjugators[j]);
    out.conjugators.push_back(i2u * amplify2_shuffle(phi, static_cast<int>(j)));
  }
  return out;
}

namespace {

// Permutation taking the composite basis (i, v in [n_i], r=(j, t, s)) to the
// nested ordering (j, t in [psi_lj], i, v, s in [phi_ji]) of block l.
CMatrix compose_shuffle(const Homomorphism& psi, const Homomorphism& phi, int l) {
  const int pl = psi.target.blocks[l].n;
  CMatrix shuffle(pl, pl);
  const size_t nsrc = phi.source.blocks.size();
  const size_t nmid = phi.target.blocks.size();

  // offsets in the nested ordering: for (j, t) give the start of source block i
  // nested position = sum over j' < j of m_j' * psi_lj' + t * m_j + (i, v, s) offset
  std::vector<int> mid_offsets(nmid, 0);
  {
    int acc = 0;
    for (size_t j = 0; j < nmid; ++j) {
      mid_offsets[j] = acc;
      acc += phi.target.blocks[j].n * psi.mult[l][j];
    }
  }
  // offsets of source block i inside one copy of target block j
  std::vector<std::vector<int>> inner_offsets(nmid, std::vector<int>(nsrc, 0));
  for (size_t j = 0; j < nmid; ++j) {
    int acc = 0;
    for (size_t i = 0; i < nsrc; ++i) {
      inner_offsets[j][i] = acc;
      acc += phi.source.blocks[i].n * phi.mult[j][i];
    }
  }
  // composite multiplicities and offsets of source block i in composite layout
  std::vector<int> comp_mult(nsrc, 0);
  for (size_t i = 0; i < nsrc; ++i)
    for (size_t j = 0; j < nmid; ++j) comp_mult[i] += psi.mult[l][j] * phi.mult[j][i];
  std::vector<int> comp_offsets(nsrc, 0);
  {
    int acc = 0;
    for (size_t i = 0; i < nsrc; ++i) {
      comp_offsets[i] = acc;
      acc += phi.source.blocks[i].n * comp_mult[i];
    }
  }

  for (size_t i = 0; i < nsrc; ++i) {
    const int ni = phi.source.blocks[i].n;
    int r = 0;  // composite copy index for source block i, enumerated as (j, t, s)
    for (size_t j = 0; j < nmid; ++j) {
      for (int t = 0; t < psi.mult[l][j]; ++t) {
        for (int s = 0; s < phi.mult[j][i]; ++s) {
          for (int v = 0; v < ni; ++v) {
            const int from = comp_offsets[i] + v * comp_mult[i] + r;
            const int inner = inner_offsets[j][i] + v * phi.mult[j][i] + s;
            const int to = mid_offsets[j] + inner * psi.mult[l][j] + t;
            shuffle.at(to, from) = 1.0;
          }
          ++r;
        }
      }
    }
  }
  return shuffle;
}

}  // namespace

Homomorphism hom_compose(const Homomorphism& psi, const Homomorphism& phi) {
  if (psi.source.ambient_dim() != phi.target.ambient_dim() ||
      psi.source.blocks.size() != phi.target.blocks.size())
    fail(errc::dimension_mismatch, "composition of non-composable homomorphisms");
  Homomorphism out;
  out.source = phi.source;
  out.target = psi.target;
  const size_t nsrc = phi.source.blocks.size();
  const size_t nmid = phi.target.blocks.size();
  const size_t ntgt = psi.target.blocks.size();
  out.mult.assign(ntgt, std::vector<int>(nsrc, 0));
  for (size_t l = 0; l < ntgt; ++l)
    for (size_t i = 0; i < nsrc; ++i)
      for (size_t j = 0; j < nmid; ++j) out.mult[l][i] += psi.mult[l][j] * phi.mult[j][i];

  for (size_t l = 0; l < ntgt; ++l) {
    CMatrix inner(0, 0);
    for (size_t j = 0; j < nmid; ++j) {
      const int copies = psi.mult[l][j];
      if (copies == 0) continue;
      inner = direct_sum(inner, kron(phi.conjugators[j], CMatrix::identity(copies)));
    }
    out.conjugators.push_back(psi.conjugators[l] * inner *
                              compose_shuffle(psi, phi, static_cast<int>(l)));
  }
  return out;
}

}  // namespace maff
