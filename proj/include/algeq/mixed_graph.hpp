#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "algeq/error.hpp"

namespace algeq {

using NodeId = std::size_t;

/// Unordered node pair, stored with first < second.
struct NodePair {
  NodeId first = 0;
  NodeId second = 0;

  static NodePair of(NodeId a, NodeId b) { return a < b ? NodePair{a, b} : NodePair{b, a}; }
  auto operator<=>(const NodePair&) const = default;
};

/// Collider triple (u, v, w) with u < w and arrowheads into v from both sides.
struct Triple {
  NodeId u = 0;
  NodeId v = 0;
  NodeId w = 0;
  auto operator<=>(const Triple&) const = default;
};

/// Directed mixed graph: directed edges tail -> head and bidirected edges
/// a <-> b on nodes 0..n-1. Names are labels only; all queries use indices.
class MixedGraph {
 public:
  MixedGraph() = default;
  /// Nodes named a, b, c, ... (or v0, v1, ... beyond 26 nodes).
  explicit MixedGraph(std::size_t n);
  explicit MixedGraph(std::vector<std::string> names);

  std::size_t size() const noexcept { return n_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(NodeId v) const;
  std::optional<NodeId> find(const std::string& name) const;

  /// Throws SelfLoop, IndexOutOfRange or DuplicateEdge.
  void add_directed(NodeId tail, NodeId head);
  void add_bidirected(NodeId a, NodeId b);
  void remove_directed(NodeId tail, NodeId head);
  void remove_bidirected(NodeId a, NodeId b);

  bool has_directed(NodeId tail, NodeId head) const;
  bool has_bidirected(NodeId a, NodeId b) const;
  bool adjacent(NodeId a, NodeId b) const;

  std::vector<NodeId> parents(NodeId v) const;
  std::vector<NodeId> children(NodeId v) const;
  std::vector<NodeId> spouses(NodeId v) const;
  /// Number of distinct nodes joined to v by any edge.
  std::size_t degree(NodeId v) const;

  std::vector<std::pair<NodeId, NodeId>> directed_edges() const;
  std::vector<NodePair> bidirected_edges() const;
  std::size_t edge_count() const;

  friend bool operator==(const MixedGraph&, const MixedGraph&) = default;

 private:
  void check_node(NodeId v) const;
  std::size_t idx(NodeId a, NodeId b) const noexcept { return a * n_ + b; }

  std::size_t n_ = 0;
  std::vector<std::string> names_;
  std::vector<unsigned char> directed_;    // n*n, [tail*n + head]
  std::vector<unsigned char> bidirected_;  // n*n, symmetric
};

struct GraphClassReport {
  bool acyclic = false;
  bool bow_free = false;
  bool is_bap = false;
  bool is_dag = false;
  bool ancestral = false;
};

GraphClassReport classify(const MixedGraph& g);
bool is_acyclic(const MixedGraph& g);
/// Throws NotBAP unless g is acyclic and bow-free.
void require_bap(const MixedGraph& g, const char* role);
void require_acyclic(const MixedGraph& g, const char* role);

/// Kahn's algorithm, smallest ready index first. Throws CyclicGraph.
std::vector<NodeId> topological_order(const MixedGraph& g);

/// Nodes reachable from v by a directed path of length >= 1, or by v <-> x
/// followed by a directed path of length >= 0 from x. Sorted ascending.
std::vector<NodeId> half_trek_reachable(const MixedGraph& g, NodeId v);

/// Edge count of the longest directed path. Throws CyclicGraph.
std::size_t longest_directed_path(const MixedGraph& g);

std::set<NodePair> skeleton(const MixedGraph& g);
std::set<Triple> collider_triples(const MixedGraph& g);
std::set<Triple> v_structures(const MixedGraph& g);

/// Keeps the nodes in `keep` (in the given order) and the edges among them.
MixedGraph induced_subgraph(const MixedGraph& g, std::span<const NodeId> keep);

}  // namespace algeq
