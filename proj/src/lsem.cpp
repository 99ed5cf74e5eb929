#include "algeq/lsem.hpp"

#include <functional>

namespace algeq {

ParamAssignment sample_params(const MixedGraph& g, const PrimeModulus& m, RandomStream& rng) {
  require_acyclic(g, "G");
  const std::size_t n = g.size();
  ParamAssignment theta{FieldMatrix(n, n, m), FieldMatrix(n, n, m)};
  for (const auto& [tail, head] : g.directed_edges())
    theta.lambda(tail, head) = rng.uniform_below(m.value());
  for (NodeId v = 0; v < n; ++v) theta.omega(v, v) = rng.uniform_below(m.value());
  for (const NodePair& e : g.bidirected_edges()) {
    const u128 value = rng.uniform_below(m.value());
    theta.omega(e.first, e.second) = value;
    theta.omega(e.second, e.first) = value;
  }
  return theta;
}

FieldMatrix phi(const ParamAssignment& theta) {
  const PrimeModulus& m = theta.lambda.modulus();
  const FieldMatrix i_minus_lambda =
      mat_sub(FieldMatrix::identity(theta.lambda.rows(), m), theta.lambda);
  const FieldMatrix inv = mat_inverse(i_minus_lambda);
  return congruence(inv, theta.omega);
}

namespace {

// All directed paths ending at `target`, each listed from its first node.
std::vector<std::vector<NodeId>> paths_into(const MixedGraph& g, NodeId target) {
  std::vector<std::vector<NodeId>> out;
  std::vector<NodeId> reversed{target};
  std::function<void(NodeId)> extend = [&](NodeId x) {
    out.emplace_back(reversed.rbegin(), reversed.rend());
    for (NodeId p : g.parents(x)) {
      reversed.push_back(p);
      extend(p);
      reversed.pop_back();
    }
  };
  extend(target);
  return out;
}

}  // namespace

std::vector<Trek> enumerate_treks(const MixedGraph& g, NodeId v, NodeId w) {
  require_acyclic(g, "G");
  const auto into_v = paths_into(g, v);
  const auto into_w = paths_into(g, w);
  std::vector<Trek> treks;
  for (const auto& left : into_v) {
    for (const auto& right : into_w) {
      const NodeId a = left.front();
      const NodeId b = right.front();
      if (a == b) treks.push_back({left, TopNode{a}, right});
      if (a != b && g.has_bidirected(a, b)) treks.push_back({left, BidirectedMiddle{a, b}, right});
    }
  }
  return treks;
}

FieldElement sigma_via_trek_rule(const MixedGraph& g, const ParamAssignment& theta, NodeId v,
                                 NodeId w) {
  const PrimeModulus& m = theta.lambda.modulus();
  auto path_weight = [&](const std::vector<NodeId>& path) {
    u128 weight = 1;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      weight = m.mul(weight, theta.lambda(path[i], path[i + 1]));
    return weight;
  };
  u128 total = 0;
  for (const Trek& trek : enumerate_treks(g, v, w)) {
    u128 omega_top = 0;
    if (const auto* top = std::get_if<TopNode>(&trek.top))
      omega_top = theta.omega(top->node, top->node);
    else {
      const auto& mid = std::get<BidirectedMiddle>(trek.top);
      omega_top = theta.omega(mid.left, mid.right);
    }
    total = m.add(total, m.mul(m.mul(path_weight(trek.left), omega_top), path_weight(trek.right)));
  }
  return {total, m};
}

}  // namespace algeq
