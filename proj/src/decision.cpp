#include "algeq/decision.hpp"

#include <algorithm>

#include "algeq/lsem.hpp"

namespace algeq {

namespace {

Rational over_prime(const BigInt& numerator, const PrimeModulus& m) {
  return Rational(numerator, to_bigint(m.value()));
}

Rational clamp_probability(const Rational& r) {
  return r >= Rational::one() ? Rational::one() : r;
}

void require_same_size(const MixedGraph& g, const MixedGraph& gp) {
  if (g.size() != gp.size())
    throw Error(ErrorKind::NodeCountMismatch, "graphs have " + std::to_string(g.size()) + " and " +
                                                  std::to_string(gp.size()) + " nodes");
}

std::vector<bool> as_mask(const std::vector<NodeId>& nodes, std::size_t n) {
  std::vector<bool> mask(n, false);
  for (NodeId v : nodes) mask[v] = true;
  return mask;
}

void solve_unchecked(const MixedGraph& gp, const FieldMatrix& sigma, NodeId v, SolveState& state) {
  if (state.called[v]) return;
  state.called[v] = true;
  const std::vector<NodeId> pa = gp.parents(v);
  if (pa.empty()) return;

  const std::size_t n = gp.size();
  const std::vector<bool> in_htr = as_mask(half_trek_reachable(gp, v), n);
  for (NodeId w : pa)
    if (in_htr[w]) solve_unchecked(gp, sigma, w, state);

  const PrimeModulus& m = sigma.modulus();
  const std::size_t k = pa.size();
  FieldMatrix rows(k, n, m);  // M^(v)
  for (std::size_t i = 0; i < k; ++i) {
    const NodeId w = pa[i];
    if (in_htr[w]) {
      for (NodeId x = 0; x < n; ++x) rows(i, x) = state.lambda_tilde(x, w);
    } else {
      rows(i, w) = 1;
    }
  }
  // [A | b] = M^(v) * Sigma restricted to columns pa(v) followed by v.
  std::vector<std::size_t> all(n);
  for (std::size_t x = 0; x < n; ++x) all[x] = x;
  std::vector<std::size_t> cols(pa.begin(), pa.end());
  cols.push_back(v);
  const FieldMatrix augmented = mat_mul(rows, submatrix(sigma, all, cols));

  const std::vector<FieldElement> minors = all_column_deleted_minors(augmented);
  const u128 det_a = minors[k].residue();
  if (det_a == 0) state.singular_pivot_seen = true;
  state.lambda_tilde(v, v) = det_a;
  // Cramer: |A with column j replaced by b| = (-1)^(k-1-j) * minors[j].
  for (std::size_t j = 0; j < k; ++j) {
    const u128 replaced = (k - 1 - j) % 2 == 0 ? minors[j].residue() : m.neg(minors[j].residue());
    state.lambda_tilde(pa[j], v) = m.neg(replaced);
  }
}

}  // namespace

Rational error_bound_constraint(const MixedGraph& g, const Constraint& f, const PrimeModulus& m) {
  const std::size_t l = longest_directed_path(g);
  return over_prime(BigInt(2 * l + 1) * degree(f), m);
}

Decision decide_constraint(const MixedGraph& g, const Constraint& f, const PrimeModulus& m,
                           RandomStream& rng) {
  require_acyclic(g, "G");
  if (const auto top = max_node_ref(f); top && *top >= g.size())
    throw Error(ErrorKind::IndexOutOfRange, "constraint refers to a node outside the graph");
  const FieldMatrix sigma = phi(sample_params(g, m, rng));
  Decision d;
  d.verdict = evaluate(f, sigma).is_zero();
  d.error_bound = d.verdict ? clamp_probability(error_bound_constraint(g, f, m)) : Rational::zero();
  d.diagnostics.seed = rng.seed();
  return d;
}

void solve_column(const MixedGraph& gp, const FieldMatrix& sigma, NodeId v, SolveState& state) {
  require_bap(gp, "G'");
  if (sigma.rows() != gp.size() || !sigma.is_square() ||
      state.lambda_tilde.rows() != gp.size() || state.called.size() != gp.size())
    throw Error(ErrorKind::DimensionMismatch, "Sigma and solver state must match G'");
  if (v >= gp.size()) throw Error(ErrorKind::IndexOutOfRange, "node out of range");
  solve_unchecked(gp, sigma, v, state);
}

FieldMatrix omega_tilde(const MixedGraph& gp, const FieldMatrix& sigma, bool* singular_seen) {
  require_bap(gp, "G'");
  const std::size_t n = gp.size();
  SolveState state(n, sigma.modulus());
  for (NodeId v = 0; v < n; ++v)
    if (gp.degree(v) + 1 < n) solve_unchecked(gp, sigma, v, state);
  if (singular_seen) *singular_seen = state.singular_pivot_seen;
  return congruence(state.lambda_tilde, sigma);
}

Decision decide_inclusion(const MixedGraph& g, const MixedGraph& gp, const PrimeModulus& m,
                          RandomStream& rng) {
  require_acyclic(g, "G");
  require_bap(gp, "G'");
  require_same_size(g, gp);
  const std::size_t n = g.size();

  const FieldMatrix sigma = phi(sample_params(g, m, rng));
  Decision d;
  d.diagnostics.seed = rng.seed();
  const FieldMatrix omega = omega_tilde(gp, sigma, &d.diagnostics.singular_pivot_seen);

  d.verdict = true;
  bool any_nonadjacent = false;
  for (NodeId v = 0; v < n && d.verdict; ++v) {
    for (NodeId w = v + 1; w < n; ++w) {
      if (gp.adjacent(v, w)) continue;
      any_nonadjacent = true;
      if (omega(v, w) != 0) {
        d.verdict = false;
        d.diagnostics.witness_pair = NodePair{v, w};
        break;
      }
    }
  }
  if (d.verdict && any_nonadjacent)
    d.error_bound = clamp_probability(error_bound_inclusion(g, gp, m));
  return d;
}

AVector a_values(const MixedGraph& gp) {
  require_bap(gp, "G'");
  const std::size_t n = gp.size();
  AVector a{std::vector<BigInt>(n, 0), std::vector<bool>(n, false)};
  std::function<void(NodeId)> solve = [&](NodeId v) {
    if (a.solved[v]) return;
    a.solved[v] = true;
    const auto pa = gp.parents(v);
    if (pa.empty()) return;
    const auto in_htr = as_mask(half_trek_reachable(gp, v), n);
    BigInt value = pa.size();
    for (NodeId w : pa) {
      if (!in_htr[w]) continue;
      solve(w);
      value += a.values[w];
    }
    a.values[v] = value;
  };
  for (NodeId v = 0; v < n; ++v)
    if (gp.degree(v) + 1 < n) solve(v);
  return a;
}

Rational error_bound_inclusion(const MixedGraph& g, const MixedGraph& gp, const PrimeModulus& m) {
  require_acyclic(g, "G");
  require_bap(gp, "G'");
  require_same_size(g, gp);
  const AVector a = a_values(gp);
  std::optional<BigInt> best;
  for (NodeId v = 0; v < gp.size(); ++v)
    for (NodeId w = v + 1; w < gp.size(); ++w)
      if (!gp.adjacent(v, w)) {
        const BigInt sum = a.values[v] + a.values[w];
        if (!best || sum > *best) best = sum;
      }
  if (!best)
    throw Error(ErrorKind::NoNonadjacentPair, "G' is complete: no constraint is checked");
  const std::size_t l = longest_directed_path(g);
  return over_prime(BigInt(2 * l + 1) * (1 + *best), m);
}

Rational error_bound_generic(std::size_t n, const PrimeModulus& m) {
  if (n < 4) throw Error(ErrorKind::NTooSmall, "the generic bound needs n >= 4");
  // (3/8) 2^n - 1 = 3 * 2^(n-3) - 1 for n >= 3.
  const BigInt factor = 3 * (BigInt(1) << (n - 3)) - 1;
  return over_prime(BigInt(2 * n - 1) * factor, m);
}

Decision decide_equivalence(const MixedGraph& g, const MixedGraph& gp, const PrimeModulus& m,
                            RandomStream& rng) {
  require_bap(g, "G");
  require_bap(gp, "G'");
  require_same_size(g, gp);
  if (skeleton(g) != skeleton(gp)) {
    Decision d;
    d.verdict = false;
    d.diagnostics.seed = rng.seed();
    return d;
  }
  return decide_inclusion(g, gp, m, rng);
}

Decision decide_with_repeats(const DecisionTask& task, std::size_t k, std::uint64_t master_seed) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "repeats must be at least 1");
  Decision last;
  for (std::size_t i = 0; i < k; ++i) {
    RandomStream rng(master_seed, i);
    last = task(rng);
    last.diagnostics.seed = master_seed;
    if (!last.verdict) {
      last.repeats_used = i + 1;
      last.error_bound = Rational::zero();
      return last;
    }
  }
  last.repeats_used = k;
  last.error_bound =
      last.error_bound >= Rational::one() ? Rational::one() : last.error_bound.pow(k);
  return last;
}

}  // namespace algeq
