#pragma once

#include <variant>
#include <vector>

#include "algeq/field_matrix.hpp"
#include "algeq/mixed_graph.hpp"

namespace algeq {

/// Edge weights Lambda (Lambda[v][w] nonzero only for v -> w) and the error
/// covariance Omega (symmetric, nonzero only on the diagonal and for v <-> w).
struct ParamAssignment {
  FieldMatrix lambda;
  FieldMatrix omega;
};

/// One uniform draw per directed edge, per diagonal entry and per bidirected
/// pair, in that order and in index order within each group. Zero is a
/// possible draw. Throws CyclicGraph.
ParamAssignment sample_params(const MixedGraph& g, const PrimeModulus& m, RandomStream& rng);

/// Sigma = (I - Lambda)^{-T} Omega (I - Lambda)^{-1}.
FieldMatrix phi(const ParamAssignment& theta);

struct TopNode {
  NodeId node;
};
struct BidirectedMiddle {
  NodeId left;   // endpoint on the side of the path down to v
  NodeId right;  // endpoint on the side of the path down to w
};

/// A trek between v and w: a directed path from the top down to v, the top
/// itself (a node or a bidirected edge), and a directed path down to w. Paths
/// are listed top-first; a path of length 0 holds just its start node.
struct Trek {
  std::vector<NodeId> left;
  std::variant<TopNode, BidirectedMiddle> top;
  std::vector<NodeId> right;

  /// Number of lambda factors plus the one omega factor.
  std::size_t monomial_degree() const { return left.size() + right.size() - 1; }
};

/// Exhaustive trek enumeration; exponential, meant for small graphs.
std::vector<Trek> enumerate_treks(const MixedGraph& g, NodeId v, NodeId w);

/// sigma_{vw} as the sum over treks of the lambda products times omega_top.
FieldElement sigma_via_trek_rule(const MixedGraph& g, const ParamAssignment& theta, NodeId v,
                                 NodeId w);

}  // namespace algeq
