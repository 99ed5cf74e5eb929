#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "algeq/constraint.hpp"
#include "algeq/field_matrix.hpp"
#include "algeq/mixed_graph.hpp"
#include "algeq/rational.hpp"

namespace algeq {

struct Diagnostics {
  /// Nonadjacent pair whose determinant constraint evaluated nonzero.
  std::optional<NodePair> witness_pair;
  /// Some |A^(v)| evaluated to zero during identification.
  bool singular_pivot_seen = false;
  std::uint64_t seed = 0;
};

/// Outcome of a one-sided Monte Carlo test. A false verdict is certain and
/// carries bound 0; a true verdict carries an upper bound on the probability
/// that it is a false positive.
struct Decision {
  bool verdict = false;
  Rational error_bound;
  std::size_t repeats_used = 1;
  Diagnostics diagnostics;
};

// ---- constraint test ---------------------------------------------------------

/// Samples parameters for g, forms Sigma and reports whether f(Sigma) = 0.
Decision decide_constraint(const MixedGraph& g, const Constraint& f, const PrimeModulus& m,
                           RandomStream& rng);

/// (2 l_G + 1) deg(f) / p.
Rational error_bound_constraint(const MixedGraph& g, const Constraint& f, const PrimeModulus& m);

// ---- inclusion test ----------------------------------------------------------

/// Working state of the division-free identification: lambda_tilde starts as
/// the identity and column v is filled in by solve_column(v).
struct SolveState {
  FieldMatrix lambda_tilde;
  std::vector<bool> called;
  bool singular_pivot_seen = false;

  SolveState(std::size_t n, const PrimeModulus& m)
      : lambda_tilde(FieldMatrix::identity(n, m)), called(n, false) {}
};

/// Computes column v of lambda_tilde from Sigma with the parents of v as the
/// identifying set, recursing into parents that v reaches by a half-trek.
/// Memoized through state.called. Throws NotBAP.
void solve_column(const MixedGraph& gp, const FieldMatrix& sigma, NodeId v, SolveState& state);

/// Omega-tilde = lambda_tilde^T Sigma lambda_tilde after solving every node of
/// gp that has a non-neighbour. Exposed for tests of the identification step.
FieldMatrix omega_tilde(const MixedGraph& gp, const FieldMatrix& sigma, bool* singular_seen = nullptr);

/// Evidence that every algebraic constraint of gp holds on the model of g.
/// Throws CyclicGraph (g), NotBAP (gp), NodeCountMismatch.
Decision decide_inclusion(const MixedGraph& g, const MixedGraph& gp, const PrimeModulus& m,
                          RandomStream& rng);

/// Degree bookkeeping for the inclusion bound. values[v] is zero for nodes the
/// algorithm never solves.
struct AVector {
  std::vector<BigInt> values;
  std::vector<bool> solved;
};

AVector a_values(const MixedGraph& gp);

/// (2 l_G + 1)(1 + max over nonadjacent {v,w} of a_v + a_w) / p.
/// Throws NoNonadjacentPair when gp is complete.
Rational error_bound_inclusion(const MixedGraph& g, const MixedGraph& gp, const PrimeModulus& m);

/// Graph-independent bound for n >= 4: (2n - 1)((3/8) 2^n - 1) / p.
Rational error_bound_generic(std::size_t n, const PrimeModulus& m);

// ---- equivalence test --------------------------------------------------------

/// False (certain, no sampling) if the skeletons differ; otherwise the
/// inclusion verdict for (g, gp). Both graphs must be BAPs.
Decision decide_equivalence(const MixedGraph& g, const MixedGraph& gp, const PrimeModulus& m,
                            RandomStream& rng);

// ---- repetition ----------------------------------------------------------------

using DecisionTask = std::function<Decision(RandomStream&)>;

/// Runs `task` on streams (master_seed, 0), (master_seed, 1), ... until it
/// answers false once or true k times. The reported bound is the single-run
/// bound to the k-th power (1 if the single-run bound is not below 1).
Decision decide_with_repeats(const DecisionTask& task, std::size_t k, std::uint64_t master_seed);

}  // namespace algeq
