#include "algeq/criteria.hpp"

namespace algeq {

const char* to_string(PairStatus status) {
  switch (status) {
    case PairStatus::DefinitelyEquivalent: return "DefinitelyEquivalent";
    case PairStatus::DefinitelyNotEquivalent: return "DefinitelyNotEquivalent";
    case PairStatus::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

PairClassification classify_pair(const MixedGraph& g, const MixedGraph& gp) {
  require_bap(g, "G");
  require_bap(gp, "G'");
  if (g.size() != gp.size())
    throw Error(ErrorKind::NodeCountMismatch, "graphs differ in node count");
  if (skeleton(g) != skeleton(gp))
    return {PairStatus::DefinitelyNotEquivalent, "skeleton-mismatch"};
  if (v_structures(g) != v_structures(gp))
    return {PairStatus::DefinitelyNotEquivalent, "v-structure-mismatch"};
  if (collider_triples(g) == collider_triples(gp))
    return {PairStatus::DefinitelyEquivalent, "same-collider-triples"};
  return {PairStatus::Undetermined, "gap"};
}

bool dag_markov_equivalent(const MixedGraph& g, const MixedGraph& gp) {
  if (!classify(g).is_dag || !classify(gp).is_dag)
    throw Error(ErrorKind::NotDAG, "Markov equivalence oracle needs two DAGs");
  if (g.size() != gp.size())
    throw Error(ErrorKind::NodeCountMismatch, "graphs differ in node count");
  return skeleton(g) == skeleton(gp) && v_structures(g) == v_structures(gp);
}

}  // namespace algeq
