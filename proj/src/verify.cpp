#include "maffkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace maff::verify {

namespace {

constexpr int kMaxStoredFailures = 10;

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

class Recorder {
public:
  explicit Recorder(const std::string& name) : start_(now_seconds()) { result_.name = name; }

  void begin_case() { ++result_.cases_run; }

  /// Passes when observed < bound.
  void check_below(uint64_t case_seed, const std::string& what, double observed, double bound,
                   const json& inputs) {
    if (observed < bound) return;
    ++result_.failures_total;
    if (static_cast<int>(result_.failures.size()) < kMaxStoredFailures)
      result_.failures.push_back({case_seed, what, observed, bound, inputs});
  }

  void check_true(uint64_t case_seed, const std::string& what, bool ok, const json& inputs) {
    check_below(case_seed, what, ok ? 0.0 : 1.0, 0.5, inputs);
  }

  SuiteResult finish() {
    result_.wall_seconds = now_seconds() - start_;
    return std::move(result_);
  }

private:
  SuiteResult result_;
  double start_;
};

int suite_count(const Config& cfg, int fallback) { return cfg.cases > 0 ? cfg.cases : fallback; }

int dim_for_case(const Config& cfg, rng::Engine& eng) {
  return cfg.dims[rng::uniform_int(eng, 0, static_cast<int>(cfg.dims.size()) - 1)];
}

double spectral(const CMatrix& m) { return operator_norm_est(m); }

bool psd_leq(const CMatrix& x, const CMatrix& y, double slack) {
  return psd_within(y - x, slack);
}

json quotient_inputs(const Quotient& t) { return to_json(t); }

json pair_inputs(const Quotient& t1, const Quotient& t2) {
  return json{{"t1", to_json(t1)}, {"t2", to_json(t2)}};
}

CMatrix block_respecting_factor(const RepAlgebra& alg, rng::Engine& eng) {
  std::vector<CMatrix> comps;
  for (const auto& blk : alg.blocks)
    comps.push_back(rng::matrix_with_rank(blk.n, rng::uniform_int(eng, 1, blk.n), eng));
  return assemble(alg, comps);
}

}  // namespace

namespace gen {

CMatrix random_invertible(int n, rng::Engine& eng) { return rng::matrix_with_rank(n, n, eng); }

Quotient random_quotient(int n, rng::Engine& eng, const Tolerance& tol) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const int rb = rng::uniform_int(eng, 0, n);
    if (rb == 0) return trivial_quotient(n);
    const CMatrix b = rng::matrix_with_rank(n, rb, eng);
    const int ra = rng::uniform_int(eng, 1, n);
    const CMatrix a0 = rng::matrix_with_rank(n, ra, eng);
    const CMatrix a = a0 * (CMatrix::identity(n) - null_projection(b, tol));
    if (!ranks_clean(a, tol)) continue;
    return quotient_new(a, b, tol);
  }
  fail(errc::bad_input, "random quotient generator failed to find a clean-rank sample");
}

PositiveCase random_positive_quotient(int n, rng::Engine& eng, const Tolerance& tol) {
  const int dom_dim = rng::uniform_int(eng, 0, n);
  const int psd_rank = rng::uniform_int(eng, 0, n);
  const CMatrix m = rng::psd_with_rank(n, psd_rank, eng);
  if (dom_dim == 0) return {trivial_quotient(n), m};
  const CMatrix p = rng::projection_with_rank(n, dom_dim, eng);
  return {quotient_new(m * p, p, tol), m};
}

RepAlgebra random_algebra(rng::Engine& eng, bool need_multiplicity, int max_ambient) {
  for (;;) {
    RepAlgebra alg;
    const int nblocks = rng::uniform_int(eng, 1, 2);
    for (int i = 0; i < nblocks; ++i)
      alg.blocks.push_back({rng::uniform_int(eng, 1, 3), rng::uniform_int(eng, 1, 2)});
    if (need_multiplicity) alg.blocks[rng::uniform_int(eng, 0, nblocks - 1)].k = 2;
    if (alg.ambient_dim() <= max_ambient) return alg;
  }
}

Homomorphism random_hom(const RepAlgebra& source, rng::Engine& eng, int max_block) {
  int min_block = source.blocks[0].n;
  for (const auto& b : source.blocks) min_block = std::min(min_block, b.n);
  if (max_block < min_block) max_block = min_block;
  constexpr int kMaxTargetAmbient = 12;

  for (;;) {
    Homomorphism phi;
    phi.source = source;
    const int nsrc = static_cast<int>(source.blocks.size());
    const int ntgt = rng::uniform_int(eng, 1, 2);
    bool ok = true;
    for (int j = 0; j < ntgt && ok; ++j) {
      int mj = 0;
      std::vector<int> row(nsrc, 0);
      for (int tries = 0; tries < 64; ++tries) {
        mj = 0;
        for (int i = 0; i < nsrc; ++i) {
          row[i] = rng::uniform_int(eng, 0, 2);
          mj += row[i] * source.blocks[i].n;
        }
        if (mj >= 1 && mj <= max_block) break;
        mj = 0;
      }
      if (mj == 0) {
        ok = false;
        break;
      }
      phi.mult.push_back(row);
      phi.target.blocks.push_back({mj, rng::uniform_int(eng, 1, 2)});
      phi.conjugators.push_back(rng::haar_unitary(mj, eng));
    }
    if (ok && phi.target.ambient_dim() <= kMaxTargetAmbient) return phi;
  }
}

Quotient random_affiliated_quotient(const RepAlgebra& alg, rng::Engine& eng,
                                    const Tolerance& tol) {
  const int n = alg.ambient_dim();
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<CMatrix> b_comps, a_comps;
    bool b_zero = true;
    for (const auto& blk : alg.blocks) {
      const int rb = rng::uniform_int(eng, 0, blk.n);
      if (rb > 0) b_zero = false;
      b_comps.push_back(rb == 0 ? CMatrix(blk.n, blk.n) : rng::matrix_with_rank(blk.n, rb, eng));
      a_comps.push_back(rng::matrix_with_rank(blk.n, rng::uniform_int(eng, 1, blk.n), eng));
    }
    if (b_zero) return trivial_quotient(n);
    const CMatrix b = assemble(alg, b_comps);
    const CMatrix a = assemble(alg, a_comps) * (CMatrix::identity(n) - null_projection(b, tol));
    if (!ranks_clean(a, tol)) continue;
    return quotient_new(a, b, tol);
  }
  fail(errc::bad_input, "affiliated quotient generator failed to find a clean-rank sample");
}

}  // namespace gen

namespace {

// ---------------------------------------------------------------------------
// oracle: quotient arithmetic against the graph-subspace constructions
// ---------------------------------------------------------------------------
SuiteResult suite_oracle(const Config& cfg) {
  Recorder rec("oracle");
  const int per_op = suite_count(cfg, 500);
  const double bound = 1e-7;
  const char* ops[] = {"sum", "product", "kaufman", "adjoint"};
  for (int d = 0; d < static_cast<int>(cfg.dims.size()); ++d) {
    const int n = cfg.dims[d];
    for (int op = 0; op < 4; ++op) {
      for (int c = 0; c < per_op; ++c) {
        const uint64_t case_seed = rng::mix(cfg.seed, 1000 + 10 * d + op, c);
        rng::Engine eng(case_seed);
        rec.begin_case();
        const Quotient t1 = gen::random_quotient(n, eng, cfg.tol);
        const PartialGraph g1 = graph_from_quotient(t1, cfg.tol);
        try {
          if (op == 0 || op == 1) {
            const Quotient t2 = gen::random_quotient(n, eng, cfg.tol);
            const PartialGraph g2 = graph_from_quotient(t2, cfg.tol);
            const Quotient got = op == 0 ? quotient_sum(t1, t2, cfg.tol)
                                         : quotient_product(t1, t2, cfg.tol);
            const PartialGraph want =
                op == 0 ? graph_sum(g1, g2, cfg.tol) : graph_product(g1, g2, cfg.tol);
            rec.check_below(case_seed, std::string(ops[op]) + " graph distance",
                            graph_distance(graph_from_quotient(got, cfg.tol), want), bound,
                            pair_inputs(t1, t2));
          } else if (op == 2) {
            const KaufmanResult got = quotient_kaufman(t1, cfg.tol);
            const PartialGraph want = graph_kaufman(g1, cfg.tol);
            rec.check_below(case_seed, "kaufman graph distance",
                            graph_distance(graph_from_quotient(got.dagger, cfg.tol), want),
                            bound, quotient_inputs(t1));
          } else {
            const Quotient got = quotient_adjoint(t1, cfg.tol);
            const PartialGraph want = graph_adjoint(g1, cfg.tol);
            rec.check_below(case_seed, "adjoint graph distance",
                            graph_distance(graph_from_quotient(got, cfg.tol), want), bound,
                            quotient_inputs(t1));
          }
        } catch (const Error& e) {
          rec.check_true(case_seed, std::string(ops[op]) + " threw " + e.what(), false,
                         quotient_inputs(t1));
        }
      }
    }
  }
  return rec.finish();
}

// ---------------------------------------------------------------------------
// kaufman: T-dagger identities on domain and range bases
// ---------------------------------------------------------------------------
SuiteResult suite_kaufman(const Config& cfg) {
  Recorder rec("kaufman");
  const int total = suite_count(cfg, 500);
  const double bound = 1e-8;
  for (int c = 0; c < total; ++c) {
    const uint64_t case_seed = rng::mix(cfg.seed, 2000, c);
    rng::Engine eng(case_seed);
    rec.begin_case();
    const int n = dim_for_case(cfg, eng);
    const Quotient t = gen::random_quotient(n, eng, cfg.tol);
    const KaufmanResult kr = quotient_kaufman(t, cfg.tol);
    const json inputs = quotient_inputs(t);
    const CMatrix dom_basis = from_range(t.B, cfg.tol).basis;
    const CMatrix comp = CMatrix::identity(n) - kr.null_proj;
    for (int j = 0; j < dom_basis.cols(); ++j) {
      const CMatrix y = dom_basis.col(j);
      const CMatrix lhs = quotient_apply(kr.dagger, quotient_apply(t, y, cfg.tol), cfg.tol);
      rec.check_below(case_seed, "T-dagger T vs I - N(T)", (lhs - comp * y).fro_norm(), bound,
                      inputs);
    }
    const CMatrix ran_basis = from_range(t.A, cfg.tol).basis;
    for (int j = 0; j < ran_basis.cols(); ++j) {
      const CMatrix z = ran_basis.col(j);
      const CMatrix lhs = quotient_apply(t, quotient_apply(kr.dagger, z, cfg.tol), cfg.tol);
      rec.check_below(case_seed, "T T-dagger vs identity on ran(T)", (lhs - z).fro_norm(),
                      bound, inputs);
    }
  }
  return rec.finish();
}

// ---------------------------------------------------------------------------
// douglas: factorization, uniqueness through two routes, majorization
// ---------------------------------------------------------------------------
SuiteResult suite_douglas(const Config& cfg) {
  Recorder rec("douglas");
  const int total = suite_count(cfg, 500);
  for (int c = 0; c < total; ++c) {
    const uint64_t case_seed = rng::mix(cfg.seed, 3000, c);
    rng::Engine eng(case_seed);
    rec.begin_case();
    const int n = dim_for_case(cfg, eng);
    const CMatrix b = rng::matrix_with_rank(n, rng::uniform_int(eng, 1, n), eng);
    const CMatrix a = b * rng::matrix_with_rank(n, rng::uniform_int(eng, 1, n), eng);
    const json inputs = json{{"A", to_json(a)}, {"B", to_json(b)}};

    rec.check_true(case_seed, "containment detected", range_contained(a, b, cfg.tol), inputs);
    const CMatrix x = douglas_solve(a, b, cfg.tol);
    rec.check_below(case_seed, "BX = A residual", operator_norm(b * x - a), 1e-9, inputs);
    rec.check_below(case_seed, "R(B*) X = X residual",
                    operator_norm(range_projection(b.adjoint(), cfg.tol) * x - x), 1e-9, inputs);

    // independent second route: B^+ = B* (B B*)^+
    const CMatrix alt = b.adjoint() * pseudo_inverse(b * b.adjoint(), cfg.tol) * a;
    rec.check_below(case_seed, "two solution routes agree", operator_norm(x - alt), 1e-9,
                    inputs);

    const double lambda = operator_norm(x) + 1e-6;
    const CMatrix gap = lambda * lambda * (b * b.adjoint()) - a * a.adjoint();
    rec.check_true(case_seed, "A A* below lambda^2 B B*",
                   psd_within(gap, psd_slack(n, spectral(gap))), inputs);
  }
  return rec.finish();
}

// ---------------------------------------------------------------------------
// lattice: box_plus / box_dot / inv_circ against subspace oracles
// ---------------------------------------------------------------------------
SuiteResult suite_lattice(const Config& cfg) {
  Recorder rec("lattice");
  const int per_op = suite_count(cfg, 500);
  const double bound = 1e-7;
  for (int c = 0; c < per_op; ++c) {
    const uint64_t case_seed = rng::mix(cfg.seed, 4000, c);
    rng::Engine eng(case_seed);
    rec.begin_case();
    const int n = dim_for_case(cfg, eng);
    const CMatrix a = rng::matrix_with_rank(n, rng::uniform_int(eng, 0, n), eng);
    const CMatrix b = rng::matrix_with_rank(n, rng::uniform_int(eng, 0, n), eng);
    const json inputs = json{{"A", to_json(a)}, {"B", to_json(b)}};
    const Subspace ra = from_range(a, cfg.tol);
    const Subspace rb = from_range(b, cfg.tol);

    rec.check_below(case_seed, "box_plus vs subspace sum",
                    subspace_distance(from_range(box_plus(a, b, cfg.tol), cfg.tol),
                                      subspace_sum(ra, rb, cfg.tol)),
                    bound, inputs);
    rec.check_below(case_seed, "box_dot vs subspace intersection",
                    subspace_distance(from_range(box_dot(a, b, cfg.tol), cfg.tol),
                                      subspace_intersect(ra, rb, cfg.tol)),
                    bound, inputs);
    rec.check_below(case_seed, "inv_circ vs preimage",
                    subspace_distance(from_range(inv_circ(a, b, cfg.tol), cfg.tol),
                                      preimage(a, rb, cfg.tol)),
                    bound, inputs);
  }
  return rec.finish();
}

// ---------------------------------------------------------------------------
// uniqueness: representation equality, extension order, equi-range witness
// ---------------------------------------------------------------------------
SuiteResult suite_uniqueness(const Config& cfg) {
  Recorder rec("uniqueness");
  const int total = suite_count(cfg, 1000);
  for (int c = 0; c < total; ++c) {
    const uint64_t case_seed = rng::mix(cfg.seed, 5000, c);
    rng::Engine eng(case_seed);
    rec.begin_case();
    const int n = dim_for_case(cfg, eng);
    const Quotient t = gen::random_quotient(n, eng, cfg.tol);
    const CMatrix cmat = gen::random_invertible(n, eng);
    const Quotient same = quotient_new(t.A * cmat, t.B * cmat, cfg.tol);
    const Quotient other = gen::random_quotient(n, eng, cfg.tol);

    const PartialGraph gt = graph_from_quotient(t, cfg.tol);
    rec.check_true(case_seed, "rescaled representation equal",
                   quotient_equals(t, same, cfg.tol), pair_inputs(t, same));
    rec.check_true(case_seed, "rescaled graphs equal",
                   graph_equals(gt, graph_from_quotient(same, cfg.tol), cfg.tol),
                   pair_inputs(t, same));
    const bool eq_q = quotient_equals(t, other, cfg.tol);
    const bool eq_g = graph_equals(gt, graph_from_quotient(other, cfg.tol), cfg.tol);
    rec.check_true(case_seed, "quotient_equals agrees with graph equality", eq_q == eq_g,
                   pair_inputs(t, other));

    // extension order vs graph containment
    const CMatrix z = rng::matrix_with_rank(n, rng::uniform_int(eng, 0, n), eng);
    const Quotient restricted = quotient_new(t.A * z, t.B * z, cfg.tol);
    rec.check_true(case_seed, "restriction extends",
                   quotient_extends(restricted, t, cfg.tol), pair_inputs(restricted, t));
    rec.check_true(case_seed, "restriction graph contained",
                   subspace_contains(graph_from_quotient(restricted, cfg.tol).graph, gt.graph,
                                     cfg.tol),
                   pair_inputs(restricted, t));
    const bool ext_q = quotient_extends(t, restricted, cfg.tol);
    const bool ext_g = subspace_contains(gt.graph, graph_from_quotient(restricted, cfg.tol).graph,
                                         cfg.tol);
    rec.check_true(case_seed, "quotient_extends agrees with graph containment", ext_q == ext_g,
                   pair_inputs(t, restricted));
    if (const auto witness = extension_witness(restricted, t, cfg.tol)) {
      rec.check_below(case_seed, "extension witness A1 = A2 C",
                      operator_norm(restricted.A - t.A * *witness), 1e-8,
                      pair_inputs(restricted, t));
      rec.check_below(case_seed, "extension witness B1 = B2 C",
                      operator_norm(restricted.B - t.B * *witness), 1e-8,
                      pair_inputs(restricted, t));
    }

    // equi-range witness over a random block algebra
    const RepAlgebra alg = gen::random_algebra(eng, false, 8);
    const int amb = alg.ambient_dim();
    std::vector<CMatrix> base, scaled;
    for (const auto& blk : alg.blocks) {
      base.push_back(rng::matrix_with_rank(blk.n, rng::uniform_int(eng, 0, blk.n), eng));
      scaled.push_back(base.back() * gen::random_invertible(blk.n, eng));
    }
    const CMatrix wb = assemble(alg, base);
    const CMatrix wa = assemble(alg, scaled);
    const EquiRangeWitness wit = equirange_witness(wa, wb, alg, cfg.tol);
    const json winputs = json{{"A", to_json(wa)}, {"B", to_json(wb)}};
    rec.check_below(case_seed, "witness A P = B C P",
                    operator_norm(wa * wit.P - wb * wit.C * wit.P), 1e-8, winputs);
    rec.check_below(case_seed, "witness B Q = A C Q",
                    operator_norm(wb * wit.Q - wa * wit.C * wit.Q), 1e-8, winputs);
    rec.check_below(case_seed, "witness C D = I",
                    operator_norm(wit.C * wit.D - CMatrix::identity(amb)), 1e-8, winputs);
  }
  return rec.finish();
}

// ---------------------------------------------------------------------------
// functor: Phi_aff laws, graph/characteristic functoriality, composition
// ---------------------------------------------------------------------------
SuiteResult suite_functor(const Config& cfg) {
  Recorder rec("functor");
  const int total = suite_count(cfg, 200);
  Tolerance eq7 = cfg.tol;
  eq7.eq_abs = 1e-7;
  for (int c = 0; c < total; ++c) {
    const uint64_t case_seed = rng::mix(cfg.seed, 6000, c);
    rng::Engine eng(case_seed);
    rec.begin_case();
    const RepAlgebra src = gen::random_algebra(eng, false, 6);
    const Homomorphism phi = gen::random_hom(src, eng, 8);
    const Quotient t1 = gen::random_affiliated_quotient(src, eng, cfg.tol);
    const Quotient t2 = gen::random_affiliated_quotient(src, eng, cfg.tol);
    const json inputs = json{{"phi", to_json(phi)}, {"t1", to_json(t1)}, {"t2", to_json(t2)}};

    const Quotient p1 = phi_aff(phi, t1, cfg.tol);
    const Quotient p2 = phi_aff(phi, t2, cfg.tol);

    rec.check_true(case_seed, "Phi_aff preserves sum",
                   quotient_equals(phi_aff(phi, quotient_sum(t1, t2, cfg.tol), cfg.tol),
                                   quotient_sum(p1, p2, cfg.tol), eq7),
                   inputs);
    rec.check_true(case_seed, "Phi_aff preserves product",
                   quotient_equals(phi_aff(phi, quotient_product(t1, t2, cfg.tol), cfg.tol),
                                   quotient_product(p1, p2, cfg.tol), eq7),
                   inputs);
    rec.check_true(
        case_seed, "Phi_aff preserves Kaufman inverse",
        quotient_equals(phi_aff(phi, quotient_kaufman(t1, cfg.tol).dagger, cfg.tol),
                        quotient_kaufman(p1, cfg.tol).dagger, eq7),
        inputs);
    rec.check_true(case_seed, "Phi_aff preserves adjoint",
                   quotient_equals(phi_aff(phi, quotient_adjoint(t1, cfg.tol), cfg.tol),
                                   quotient_adjoint(p1, cfg.tol), eq7),
                   inputs);

    // characteristic projection and graph functoriality
    const CMatrix chi_image = phi2_apply(phi, characteristic_projection(t1, cfg.tol), cfg.tol);
    rec.check_below(case_seed, "chi of Phi_aff equals Phi_2 of chi",
                    spectral(characteristic_projection(p1, cfg.tol) - chi_image), 1e-7, inputs);
    rec.check_below(case_seed, "graph functor",
                    subspace_distance(graph_from_quotient(p1, cfg.tol).graph,
                                      from_range(chi_image, cfg.tol)),
                    1e-7, inputs);

    // domains
    rec.check_below(case_seed, "dom(Phi_aff T) = Phi_aff_s(dom T)",
                    subspace_distance(from_range(p1.B, cfg.tol),
                                      phi_aff_s(phi, from_range(t1.B, cfg.tol), cfg.tol)),
                    1e-7, inputs);

    // bounded-level identities
    const CMatrix a = t1.A;
    const CMatrix b = t1.B;
    const CMatrix fa = hom_apply(phi, a, cfg.tol);
    const CMatrix fb = hom_apply(phi, b, cfg.tol);
    rec.check_below(case_seed, "morph_prop range projection",
                    spectral(hom_apply(phi, range_projection(a, cfg.tol), cfg.tol) -
                             range_projection(fa, cfg.tol)),
                    1e-7, inputs);
    rec.check_below(case_seed, "Phi(A box_plus B) = Phi(A) box_plus Phi(B)",
                    spectral(hom_apply(phi, box_plus(a, b, cfg.tol), cfg.tol) -
                             box_plus(fa, fb, cfg.tol)),
                    1e-7, inputs);
    rec.check_below(case_seed, "Phi(A box_dot B) = Phi(A) box_dot Phi(B)",
                    spectral(hom_apply(phi, box_dot(a, b, cfg.tol), cfg.tol) -
                             box_dot(fa, fb, cfg.tol)),
                    1e-7, inputs);
    rec.check_below(case_seed, "Phi(A inv_circ B) = Phi(A) inv_circ Phi(B)",
                    spectral(hom_apply(phi, inv_circ(a, b, cfg.tol), cfg.tol) -
                             inv_circ(fa, fb, cfg.tol)),
                    1e-7, inputs);
    {
      // Douglas naturality on a contained-range pair
      const CMatrix contained = b * block_respecting_factor(src, eng);
      const CMatrix lhs = hom_apply(phi, douglas_solve(contained, b, cfg.tol), cfg.tol);
      const CMatrix rhs = douglas_solve(hom_apply(phi, contained, cfg.tol), fb, cfg.tol);
      rec.check_below(case_seed, "Douglas naturality", spectral(lhs - rhs), 1e-7, inputs);
    }

    // extension preservation
    const CMatrix z = block_respecting_factor(src, eng);
    const Quotient restricted = quotient_new(t1.A * z, t1.B * z, cfg.tol);
    rec.check_true(case_seed, "Phi_aff preserves extension",
                   quotient_extends(phi_aff(phi, restricted, cfg.tol), p1, cfg.tol), inputs);

    // amplification consistency
    const Homomorphism amp = hom_amplify2(phi);
    const CMatrix pm = doubling_permutation(src);
    const CMatrix pn = doubling_permutation(phi.target);
    const CMatrix x2 = characteristic_projection(t1, cfg.tol);
    rec.check_below(case_seed, "hom_amplify2 matches entrywise Phi_2",
                    spectral(hom_apply(amp, pm.adjoint() * x2 * pm, cfg.tol) -
                             pn.adjoint() * phi2_apply(phi, x2, cfg.tol) * pn),
                    1e-7, inputs);
    {
      const int na = src.ambient_dim();
      const int nb = phi.target.ambient_dim();
      CMatrix s(2 * na, 2 * na);
      s.set_block(0, 0, b);
      s.set_block(na, 0, a);
      CMatrix s_img(2 * nb, 2 * nb);
      s_img.set_block(0, 0, fb);
      s_img.set_block(nb, 0, fa);
      rec.check_below(case_seed, "Phi_2 intertwines the graph stack",
                      spectral(phi2_apply(phi, s, cfg.tol) - s_img), 1e-7, inputs);
    }

    // composition functoriality
    const Homomorphism psi = gen::random_hom(phi.target, eng, 8);
    const Homomorphism comp = hom_compose(psi, phi);
    rec.check_below(case_seed, "composition on bounded elements",
                    spectral(hom_apply(comp, a, cfg.tol) -
                             hom_apply(psi, hom_apply(phi, a, cfg.tol), cfg.tol)),
                    1e-7, inputs);
    rec.check_true(case_seed, "composition on quotients",
                   quotient_equals(phi_aff(comp, t1, cfg.tol), phi_aff(psi, p1, cfg.tol), eq7),
                   inputs);
  }
  return rec.finish();
}

// ---------------------------------------------------------------------------
// numrange: predicate certificates vs sampled numerical ranges
// ---------------------------------------------------------------------------
SuiteResult suite_numrange(const Config& cfg) {
  Recorder rec("numrange");
  const int per_predicate = suite_count(cfg, 200);
  const int samples = 10000;
  const double inner_slack = 1e-7;   // samples of a certified operator stay this close
  const double foil_margin = 1e-3;   // constructed counterexamples violate at least this much

  const auto hp_margin = [](const HalfPlane& h, complexd zz) {
    const complexd pulled = std::polar(1.0, -h.theta) * zz - h.alpha;
    return -pulled.real();
  };

  for (int c = 0; c < per_predicate; ++c) {
    const uint64_t case_seed = rng::mix(cfg.seed, 7000, c);
    rng::Engine eng(case_seed);
    rec.begin_case();
    const int n = dim_for_case(cfg, eng);
    const int dom_dim = rng::uniform_int(eng, 1, n);
    const CMatrix p = rng::projection_with_rank(n, dom_dim, eng);
    const CMatrix rescale = gen::random_invertible(n, eng);
    const CMatrix id = CMatrix::identity(n);

    const CMatrix h =
        rng::psd_with_rank(n, n, eng) - rng::uniform(eng, 0.0, 1.0) * id;
    const CMatrix g = rng::gaussian_matrix(n, n, eng);
    const CMatrix skew = 0.5 * (g - g.adjoint());
    const CMatrix pos = rng::psd_with_rank(n, rng::uniform_int(eng, 0, n), eng);
    const CMatrix acc = pos + skew;

    const auto restricted = [&](const CMatrix& m) {
      return quotient_new(m * p * rescale, p * rescale, cfg.tol);
    };
    // average of the quadratic form over the domain, for centering foils
    const auto dom_average = [&](const CMatrix& m) {
      const CMatrix basis = from_range(p, cfg.tol).basis;
      const CMatrix compressed = basis.adjoint() * m * basis;
      complexd tr(0.0, 0.0);
      for (int i = 0; i < compressed.rows(); ++i) tr += compressed.at(i, i);
      return tr.real() / std::max(1, compressed.rows());
    };

    const HalfPlane hp{rng::uniform(eng, -M_PI, M_PI),
                       complexd(rng::uniform(eng, -1.0, 1.0), rng::uniform(eng, -1.0, 1.0))};
    const Sector sec{complexd(rng::uniform(eng, -0.5, 0.5), rng::uniform(eng, -0.5, 0.5)),
                     rng::uniform(eng, 0.15, M_PI / 2 - 0.1)};

    struct Probe {
      std::string name;
      Quotient t;
      bool expect;  // expected verdict for the constructed operator
      std::function<double(complexd)> margin;
      std::function<bool()> verdict;
    };
    std::vector<Probe> probes;
    const auto add = [&](std::string name, Quotient t, bool expect,
                         std::function<double(complexd)> margin) {
      probes.push_back({std::move(name), std::move(t), expect, std::move(margin), nullptr});
    };

    add("symmetric true", restricted(h), true,
        [](complexd zz) { return std::abs(zz.imag()); });
    add("symmetric foil",
        restricted(h + complexd(0.0, rng::uniform(eng, 0.01, 0.5)) * id), false,
        [](complexd zz) { return std::abs(zz.imag()); });
    add("positive true", restricted(pos), true,
        [](complexd zz) { return std::max(std::abs(zz.imag()), -zz.real()); });
    add("positive foil",
        restricted(pos - (dom_average(pos) + rng::uniform(eng, 0.1, 0.5)) * id), false,
        [](complexd zz) { return std::max(std::abs(zz.imag()), -zz.real()); });
    add("accretive true", restricted(acc), true, [](complexd zz) { return -zz.real(); });
    add("accretive foil",
        restricted(acc - (dom_average(pos) + rng::uniform(eng, 0.1, 0.5)) * id), false,
        [](complexd zz) { return -zz.real(); });
    add("half-plane true",
        restricted(std::polar(1.0, hp.theta) * (acc + hp.alpha * id)), true,
        [&](complexd zz) { return hp_margin(hp, zz); });
    {
      const double rot = rng::uniform(eng, -1.0, 1.0) * (sec.theta - 0.1);
      add("sectorial true",
          restricted(sec.c * id + std::polar(1.0, rot) * rng::psd_with_rank(n, n, eng)), true,
          [&](complexd zz) {
            const auto [h1, h2] = sector_half_planes(sec);
            return std::max(hp_margin(h1, zz), hp_margin(h2, zz));
          });
      const double bad_rot = std::min(sec.theta + rng::uniform(eng, 0.25, 0.6), 3.0);
      add("sectorial foil",
          restricted(sec.c * id +
                     std::polar(1.0, bad_rot) * (rng::psd_with_rank(n, n, eng) + 0.5 * id)),
          false, [&](complexd zz) {
            const auto [h1, h2] = sector_half_planes(sec);
            return std::max(hp_margin(h1, zz), hp_margin(h2, zz));
          });
    }

    for (auto& probe : probes) {
      bool verdict = false;
      if (probe.name.rfind("symmetric", 0) == 0)
        verdict = is_symmetric(probe.t, cfg.tol);
      else if (probe.name.rfind("positive", 0) == 0)
        verdict = is_positive(probe.t, cfg.tol);
      else if (probe.name.rfind("accretive", 0) == 0)
        verdict = is_accretive(probe.t, cfg.tol);
      else if (probe.name.rfind("half-plane", 0) == 0)
        verdict = in_half_plane(probe.t, hp, cfg.tol);
      else
        verdict = is_sectorial(probe.t, sec, cfg.tol);

      const json inputs = json{{"probe", probe.name}, {"t", to_json(probe.t)}};
      rec.check_true(case_seed, probe.name + " verdict", verdict == probe.expect, inputs);

      double worst = 0.0;
      for (const auto& zz :
           numerical_range_sample(probe.t, samples, rng::mix(case_seed, 77, 0), cfg.tol))
        worst = std::max(worst, probe.margin(zz));
      if (verdict)
        rec.check_below(case_seed, probe.name + " samples inside the region", worst,
                        inner_slack, inputs);
      else
        rec.check_below(case_seed, probe.name + " sampled violation visible", foil_margin,
                        worst, inputs);
    }

    // self-adjoint / normal
    const Quotient herm_total = total_quotient(h);
    rec.check_true(case_seed, "Hermitian total operator is self-adjoint",
                   is_self_adjoint(herm_total, cfg.tol), quotient_inputs(herm_total));
    const CMatrix u = rng::haar_unitary(n, eng);
    const Quotient unitary_total = total_quotient(u);
    rec.check_true(case_seed, "unitary is normal", is_normal(unitary_total, cfg.tol),
                   quotient_inputs(unitary_total));
    if (dom_dim < n) {
      const Quotient strict_restriction = quotient_new(h * p, p, cfg.tol);
      rec.check_true(case_seed, "proper restriction is not self-adjoint",
                     !is_self_adjoint(strict_restriction, cfg.tol),
                     quotient_inputs(strict_restriction));
    }

    // preservation under Phi_aff
    const RepAlgebra full = RepAlgebra::full(n);
    const Homomorphism phi = gen::random_hom(full, eng, n);
    Tolerance eq7 = cfg.tol;
    eq7.eq_abs = 1e-7;
    rec.check_true(case_seed, "Phi_aff preserves symmetric",
                   is_symmetric(phi_aff(phi, probes[0].t, cfg.tol), eq7),
                   quotient_inputs(probes[0].t));
    rec.check_true(case_seed, "Phi_aff preserves positive",
                   is_positive(phi_aff(phi, probes[2].t, cfg.tol), eq7),
                   quotient_inputs(probes[2].t));
    rec.check_true(case_seed, "Phi_aff preserves accretive",
                   is_accretive(phi_aff(phi, probes[4].t, cfg.tol), eq7),
                   quotient_inputs(probes[4].t));
    rec.check_true(case_seed, "Phi_aff preserves half-plane containment",
                   in_half_plane(phi_aff(phi, probes[6].t, cfg.tol), hp, eq7),
                   quotient_inputs(probes[6].t));
    rec.check_true(case_seed, "Phi_aff preserves sectorial",
                   is_sectorial(phi_aff(phi, probes[7].t, cfg.tol), sec, eq7),
                   quotient_inputs(probes[7].t));
    rec.check_true(case_seed, "Phi_aff preserves self-adjoint",
                   is_self_adjoint(phi_aff(phi, herm_total, cfg.tol), eq7),
                   quotient_inputs(herm_total));
    rec.check_true(case_seed, "Phi_aff preserves normal",
                   is_normal(phi_aff(phi, unitary_total, cfg.tol), eq7),
                   quotient_inputs(unitary_total));

    // affine covariance of the half-plane reduction
    const double tp = -hp.theta;
    const complexd ap = -std::polar(1.0, hp.theta) * hp.alpha;
    rec.check_true(case_seed, "affine covariance",
                   in_half_plane(probes[6].t, hp, cfg.tol) ==
                       is_accretive(affine_map(probes[6].t, tp, ap), cfg.tol),
                   quotient_inputs(probes[6].t));
  }
  return rec.finish();
}

// ---------------------------------------------------------------------------
// krein: shorted operator, transform bijection, extension bounds
// ---------------------------------------------------------------------------
SuiteResult suite_krein(const Config& cfg) {
  Recorder rec("krein");
  const int shorted_cases = suite_count(cfg, 300);
  const int roundtrip_cases = suite_count(cfg, 300);
  const int bounds_cases = std::max(1, suite_count(cfg, 100));
  Tolerance eq6 = cfg.tol;
  eq6.eq_abs = 1e-6;

  // shorted operator vs the Schur-complement oracle, plus maximality
  for (int c = 0; c < shorted_cases; ++c) {
    const uint64_t case_seed = rng::mix(cfg.seed, 8000, c);
    rng::Engine eng(case_seed);
    rec.begin_case();
    const int n = dim_for_case(cfg, eng);
    CMatrix a, e;
    for (;;) {
      a = rng::psd_with_rank(n, rng::uniform_int(eng, 0, n), eng);
      e = rng::projection_with_rank(n, rng::uniform_int(eng, 0, n), eng);
      // a marginal coupling singular value degrades both routes
      // quadratically; resample such pairs like other ambiguous draws
      const CMatrix coupled = (CMatrix::identity(n) - e) * psd_sqrt(a, cfg.tol);
      bool clean = true;
      for (double s : singular_values(coupled, cfg.tol))
        if (s > 1e-9 && s < 1e-3) clean = false;
      if (clean) break;
    }
    const json inputs = json{{"A", to_json(a)}, {"E", to_json(e)}};
    const CMatrix shorted = shorted_operator(a, e, cfg.tol);
    rec.check_below(case_seed, "shorted vs Schur oracle",
                    operator_norm(shorted - schur_shorted(a, e, cfg.tol)), 1e-8, inputs);
    rec.check_true(case_seed, "shorted below A",
                   psd_leq(shorted, a, psd_slack(n, spectral(a))), inputs);
    rec.check_true(case_seed, "shorted range within E",
                   numerical_rank(shorted, cfg.tol) == 0 || range_contained(shorted, e, cfg.tol),
                   inputs);
    {
      const CMatrix root = psd_sqrt(a, cfg.tol);
      const CMatrix nproj = null_projection((CMatrix::identity(n) - e) * root, cfg.tol,
                                            operator_norm_est(root));
      const Subspace inside = from_range(nproj, cfg.tol, 1.0);
      if (inside.dim() > 0) {
        const int sub = rng::uniform_int(eng, 0, inside.dim());
        CMatrix q(n, n);
        for (int j = 0; j < sub; ++j) {
          const CMatrix v = inside.basis.col(j);
          q += v * v.adjoint();
        }
        const CMatrix candidate = root * q * root;
        rec.check_true(case_seed, "shorted maximality", psd_leq(candidate, shorted, 1e-8),
                       inputs);
      }
    }
  }

  // Krein transform round trip
  for (int c = 0; c < roundtrip_cases; ++c) {
    const uint64_t case_seed = rng::mix(cfg.seed, 8100, c);
    rng::Engine eng(case_seed);
    rec.begin_case();
    const int n = dim_for_case(cfg, eng);
    const auto pc = gen::random_positive_quotient(n, eng, cfg.tol);
    const SymContraction b = krein_transform(pc.s, cfg.tol);
    rec.check_true(case_seed, "transform lands in F(H)", is_in_F(b, cfg.tol),
                   quotient_inputs(pc.s));
    const Quotient back = inverse_krein_transform(b, cfg.tol);
    rec.check_true(case_seed, "inverse transform returns S",
                   quotient_equals(back, pc.s, cfg.tol), quotient_inputs(pc.s));
  }

  // extension bounds: seed independence, ordering, functoriality
  for (int c = 0; c < bounds_cases; ++c) {
    const uint64_t case_seed = rng::mix(cfg.seed, 8200, c);
    rng::Engine eng(case_seed);
    rec.begin_case();
    const int n = dim_for_case(cfg, eng);
    const auto pc = gen::random_positive_quotient(n, eng, cfg.tol);
    const json inputs = quotient_inputs(pc.s);
    const SymContraction b = krein_transform(pc.s, cfg.tol);
    const CMatrix id = CMatrix::identity(n);
    const CMatrix off_dom = id - dom_projection(pc.s, cfg.tol);

    const CMatrix w2 =
        pc.witness +
        off_dom * rng::psd_with_rank(n, rng::uniform_int(eng, 0, n), eng) * off_dom;
    const CMatrix k1 = id - 2.0 * hermitian_inverse(pc.witness + id, cfg.tol);
    const CMatrix k2 = id - 2.0 * hermitian_inverse(0.5 * (w2 + w2.adjoint()) + id, cfg.tol);
    const ExtensionBounds b1 = extension_bounds(b, 0.5 * (k1 + k1.adjoint()), cfg.tol);
    const ExtensionBounds b2 = extension_bounds(b, 0.5 * (k2 + k2.adjoint()), cfg.tol);
    rec.check_below(case_seed, "K_min seed independence", operator_norm(b1.K_min - b2.K_min),
                    1e-7, inputs);
    rec.check_below(case_seed, "K_max seed independence", operator_norm(b1.K_max - b2.K_max),
                    1e-7, inputs);

    const auto ext = positive_extensions(pc.s, pc.witness, cfg.tol);
    rec.check_true(case_seed, "krein_vn extends S",
                   quotient_extends(pc.s, ext.krein_vn, cfg.tol), inputs);
    rec.check_true(case_seed, "krein_vn positive", is_positive(ext.krein_vn, cfg.tol), inputs);
    rec.check_true(case_seed, "krein_vn self-adjoint", is_self_adjoint(ext.krein_vn, eq6),
                   inputs);
    if (ext.friedrichs) {
      rec.check_true(case_seed, "friedrichs extends S",
                     quotient_extends(pc.s, *ext.friedrichs, cfg.tol), inputs);
      rec.check_true(case_seed, "friedrichs positive", is_positive(*ext.friedrichs, cfg.tol),
                     inputs);
    }
    if (numerical_rank(pc.s.B, cfg.tol) == n)
      rec.check_true(case_seed, "total S has both extensions equal to S",
                     ext.friedrichs && quotient_equals(ext.krein_vn, pc.s, eq6) &&
                         quotient_equals(*ext.friedrichs, pc.s, eq6),
                     inputs);

    const CMatrix vn_m = canonicalize(ext.krein_vn, cfg.tol).M;
    for (int ti = 0; ti < 20; ++ti) {
      const double t = ti / 20.0;
      const CMatrix kt = sample_extension(ext.bounds, t);
      rec.check_true(case_seed, "K_t within bounds",
                     psd_leq(ext.bounds.K_min, kt, 1e-8) && psd_leq(kt, ext.bounds.K_max, 1e-8),
                     inputs);
      rec.check_true(case_seed, "K_t in F(H)", numerical_rank(id - kt, cfg.tol, 1.0) == n,
                     inputs);
      const CMatrix st_raw = 2.0 * hermitian_inverse(id - kt, cfg.tol) - id;
      const CMatrix st = 0.5 * (st_raw + st_raw.adjoint());
      const Quotient ext_t = total_quotient(st);
      rec.check_true(case_seed, "K_t gives a positive extension",
                     is_positive(ext_t, cfg.tol) && quotient_extends(pc.s, ext_t, cfg.tol),
                     inputs);
      // form minimality of the Krein-von Neumann extension
      const CMatrix x = rng::unit_vector(n, eng);
      const CMatrix dx = (st - vn_m) * x;
      complexd form(0.0, 0.0);
      for (int i = 0; i < n; ++i) form += std::conj(x.at(i, 0)) * dx.at(i, 0);
      rec.check_below(case_seed, "krein_vn form minimality", -form.real(), 1e-8, inputs);
    }

    // functoriality of the extensions along a random homomorphism
    const RepAlgebra full = RepAlgebra::full(n);
    const Homomorphism phi = gen::random_hom(full, eng, n);
    const Quotient s_img = phi_aff(phi, pc.s, cfg.tol);
    const CMatrix w_img = hom_apply(phi, pc.witness, cfg.tol);
    const auto ext_img = positive_extensions(s_img, w_img, cfg.tol);
    rec.check_true(case_seed, "Phi_aff maps krein_vn to krein_vn",
                   quotient_equals(phi_aff(phi, ext.krein_vn, cfg.tol), ext_img.krein_vn, eq6),
                   inputs);
    rec.check_true(case_seed, "Friedrichs existence transfers",
                   static_cast<bool>(ext.friedrichs) == static_cast<bool>(ext_img.friedrichs),
                   inputs);
    if (ext.friedrichs && ext_img.friedrichs)
      rec.check_true(case_seed, "Phi_aff maps Friedrichs to Friedrichs",
                     quotient_equals(phi_aff(phi, *ext.friedrichs, cfg.tol), *ext_img.friedrichs,
                                     eq6),
                     inputs);
    const SymContraction b_img = krein_transform(s_img, cfg.tol);
    rec.check_below(case_seed, "Phi_aff commutes with the Krein transform",
                    spectral(hom_apply(phi, b.M, cfg.tol) - b_img.M) +
                        spectral(hom_apply(phi, b.E, cfg.tol) - b_img.E),
                    1e-6, inputs);
    const CMatrix dae = shorted_operator(pc.witness + id, id - b.E, cfg.tol);
    const CMatrix id_img = CMatrix::identity(s_img.n);
    rec.check_below(case_seed, "Phi of a shorted operator",
                    spectral(hom_apply(phi, dae, cfg.tol) -
                             shorted_operator(w_img + id_img, id_img - b_img.E, cfg.tol)),
                    1e-6, inputs);
  }

  // worked 2x2 example, pinned
  {
    rec.begin_case();
    const uint64_t case_seed = rng::mix(cfg.seed, 8300, 0);
    const CMatrix e1 = CMatrix::diag({1.0, 0.0});
    const Quotient s = quotient_new(e1, e1, cfg.tol);
    const auto ext = positive_extensions(s, std::nullopt, cfg.tol);
    const json inputs = quotient_inputs(s);
    rec.check_below(case_seed, "worked example krein_vn",
                    (canonicalize(ext.krein_vn, cfg.tol).M - e1).fro_norm(), 1e-9, inputs);
    rec.check_true(case_seed, "worked example Friedrichs unbounded", !ext.friedrichs, inputs);
    rec.check_below(case_seed, "worked example K_min",
                    (ext.bounds.K_min - CMatrix::diag({0.0, -1.0})).fro_norm(), 1e-9, inputs);
    rec.check_below(case_seed, "worked example K_max",
                    (ext.bounds.K_max - CMatrix::diag({0.0, 1.0})).fro_norm(), 1e-9, inputs);
  }

  // operator with no PSD extension: flagged, never fabricated
  {
    rec.begin_case();
    const uint64_t case_seed = rng::mix(cfg.seed, 8300, 1);
    const CMatrix a = CMatrix::from_rows({{0.0, 0.0}, {1.0, 0.0}});
    const CMatrix b = CMatrix::diag({1.0, 0.0});
    const Quotient s = quotient_new(a, b, cfg.tol);
    bool flagged = false;
    try {
      (void)positive_extensions(s, std::nullopt, cfg.tol);
    } catch (const Error& e) {
      flagged = e.code() == errc::no_extension_found;
    }
    rec.check_true(case_seed, "nonexistent extension is flagged", flagged, quotient_inputs(s));
  }

  return rec.finish();
}

// ---------------------------------------------------------------------------
// mvn: commutant-unitary affiliation test
// ---------------------------------------------------------------------------
SuiteResult suite_mvn(const Config& cfg) {
  Recorder rec("mvn");
  const int affiliated_cases = suite_count(cfg, 100);
  const int unitaries = 50;
  for (int c = 0; c < affiliated_cases; ++c) {
    const uint64_t case_seed = rng::mix(cfg.seed, 9000, c);
    rng::Engine eng(case_seed);
    rec.begin_case();
    const RepAlgebra alg = gen::random_algebra(eng, true, 8);
    const Quotient t = gen::random_affiliated_quotient(alg, eng, cfg.tol);
    rec.check_true(case_seed, "affiliated quotient passes",
                   mvn_check(t, alg, unitaries, rng::mix(case_seed, 1, 0), cfg.tol),
                   quotient_inputs(t));
  }
  // detection of non-affiliated perturbations; at least 95% must be caught
  int detected = 0;
  const int perturbed_cases = suite_count(cfg, 100);
  for (int c = 0; c < perturbed_cases; ++c) {
    const uint64_t case_seed = rng::mix(cfg.seed, 9100, c);
    rng::Engine eng(case_seed);
    rec.begin_case();
    const RepAlgebra alg = gen::random_algebra(eng, true, 8);
    const int n = alg.ambient_dim();
    Quotient t = gen::random_affiliated_quotient(alg, eng, cfg.tol);
    while (numerical_rank(t.B, cfg.tol) == 0) t = gen::random_affiliated_quotient(alg, eng, cfg.tol);
    const CMatrix noise = 0.25 * rng::gaussian_matrix(n, n, eng) *
                          (CMatrix::identity(n) - null_projection(t.B, cfg.tol));
    const Quotient perturbed = quotient_new(t.A + noise, t.B, cfg.tol);
    if (!mvn_check(perturbed, alg, unitaries, rng::mix(case_seed, 2, 0), cfg.tol)) ++detected;
  }
  rec.check_true(rng::mix(cfg.seed, 9100, 0), "at least 95% of perturbations detected",
                 detected * 100 >= 95 * perturbed_cases,
                 json{{"detected", detected}, {"cases", perturbed_cases}});
  return rec.finish();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "oracle", "kaufman", "douglas", "lattice", "uniqueness",
      "functor", "numrange", "krein", "mvn"};
  return names;
}

bool is_suite_name(const std::string& name) {
  for (const auto& s : suite_names())
    if (s == name) return true;
  return false;
}

SuiteResult run_suite(const std::string& name, const Config& cfg) {
  if (cfg.dims.empty()) fail(errc::bad_input, "dims must be nonempty");
  for (int d : cfg.dims)
    if (d < 1 || d > 32) fail(errc::bad_input, "dims must lie in [1, 32]");
  cfg.tol.validate();
  if (name == "oracle") return suite_oracle(cfg);
  if (name == "kaufman") return suite_kaufman(cfg);
  if (name == "douglas") return suite_douglas(cfg);
  if (name == "lattice") return suite_lattice(cfg);
  if (name == "uniqueness") return suite_uniqueness(cfg);
  if (name == "functor") return suite_functor(cfg);
  if (name == "numrange") return suite_numrange(cfg);
  if (name == "krein") return suite_krein(cfg);
  if (name == "mvn") return suite_mvn(cfg);
  fail(errc::bad_input, "unknown suite: " + name);
}

json report_to_json(const std::vector<SuiteResult>& suites, const Config& cfg,
                    double wall_seconds) {
  json out;
  out["seed"] = cfg.seed;
  out["cases"] = cfg.cases;
  out["dims"] = cfg.dims;
  out["tolerance"] = to_json(cfg.tol);
  int failures_total = 0;
  json suites_json = json::array();
  for (const auto& s : suites) {
    json fj = json::array();
    for (const auto& f : s.failures)
      fj.push_back(json{{"case_seed", f.case_seed},
                        {"what", f.what},
                        {"observed", f.observed},
                        {"expected_below", f.expected},
                        {"inputs", f.inputs}});
    suites_json.push_back(json{{"name", s.name},
                               {"cases_run", s.cases_run},
                               {"failures_total", s.failures_total},
                               {"failures", std::move(fj)},
                               {"wall_seconds", s.wall_seconds}});
    failures_total += s.failures_total;
  }
  out["suites"] = std::move(suites_json);
  out["failures_total"] = failures_total;
  out["wall_seconds"] = wall_seconds;
  return out;
}

}  // namespace maff::verify
