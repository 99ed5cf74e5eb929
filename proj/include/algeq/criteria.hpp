#pragma once

#include <string>

#include "algeq/mixed_graph.hpp"

namespace algeq {

enum class PairStatus { DefinitelyEquivalent, DefinitelyNotEquivalent, Undetermined };

const char* to_string(PairStatus status);

/// Structural verdict on two BAPs. reason is one of skeleton-mismatch,
/// v-structure-mismatch, same-collider-triples or gap.
struct PairClassification {
  PairStatus status = PairStatus::Undetermined;
  std::string reason;
};

/// Necessary condition: equal skeletons and v-structures. Sufficient
/// condition: equal skeletons and collider triples. Between the two the
/// answer is Undetermined.
PairClassification classify_pair(const MixedGraph& g, const MixedGraph& gp);

/// Verma-Pearl: same skeleton and same v-structures. Throws NotDAG.
bool dag_markov_equivalent(const MixedGraph& g, const MixedGraph& gp);

}  // namespace algeq
