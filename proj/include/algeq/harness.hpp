#pragma once

#include <cstdint>
#include <vector>

#include "algeq/decision.hpp"
#include "algeq/mixed_graph.hpp"

namespace algeq {

enum class GraphFamily { AllBAPs, AllDAGs, CompleteBAPs, ExtremalFamily };

struct GraphFamilySpec {
  std::size_t n = 0;
  GraphFamily family = GraphFamily::AllBAPs;
  /// Exhaustive families refuse n > 6 unless this is set.
  bool allow_large = false;
};

/// Every unordered pair gets one of {none, ->, <-, <->} (DAGs drop <->,
/// complete families drop none); cyclic results are discarded. The first
/// pair varies slowest. ExtremalFamily yields build_extremal_pair(n, s) for
/// s = 0..n-2.
std::vector<MixedGraph> enumerate(const GraphFamilySpec& spec);

struct ExtremalGraph {
  MixedGraph graph;
  NodePair nonadjacent;  // (s, n-1)
};

/// The BAP on n >= 4 nodes that maximises the inclusion bound among graphs
/// whose only non-adjacency is {s, n-1}: 0 -> 1; every v in 2..n-2 has
/// 0 <-> v and parents 1..v-1; the last node has a bidirected edge to 0
/// (to 1 when s = 0) and parents all other earlier nodes except s.
ExtremalGraph build_extremal_pair(std::size_t n, NodeId s);

struct EquivalenceClassReport {
  std::vector<std::vector<std::size_t>> classes;  // indices into the input, ascending
  std::size_t repeats = 1;
  PrimeModulus prime = PrimeModulus::m31();
  std::uint64_t seed = 0;
  /// Merges that rest on a randomized verdict rather than the structural
  /// sufficient condition.
  std::size_t undetermined_pairs = 0;
  std::size_t randomized_calls = 0;
  /// Spanning pairs that the consistency pass found non-equivalent.
  std::size_t consistency_failures = 0;
};

/// Buckets by skeleton, then within a bucket compares each graph against the
/// representative of every class found so far. A consistency pass re-decides
/// each merge (member vs. previous member) on fresh streams.
EquivalenceClassReport partition_classes(const std::vector<MixedGraph>& graphs,
                                         const PrimeModulus& m, std::size_t repeats,
                                         std::uint64_t master_seed);

struct Table1Report {
  std::size_t n = 0;
  PrimeModulus prime = PrimeModulus::m31();
  std::size_t instances = 0;
  std::size_t false_positive_count = 0;
  double mean_time_ms = 0.0;
  Rational theoretical_bound;
};

/// Runs decide_inclusion over ordered pairs of distinct extremal graphs (all
/// of them non-inclusions) until at least `trials` instances have run.
Table1Report table1_experiment(std::size_t n, const PrimeModulus& m, std::size_t trials,
                               std::uint64_t master_seed);

}  // namespace algeq
