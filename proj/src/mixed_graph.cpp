#include "algeq/mixed_graph.hpp"

#include <algorithm>
#include <deque>

namespace algeq {

namespace {

std::string default_name(std::size_t i, std::size_t n) {
  if (n <= 26) return std::string(1, static_cast<char>('a' + i));
  return "v" + std::to_string(i);
}

// reach[v*n + w]: a directed path of length >= 1 runs from v to w.
std::vector<unsigned char> directed_reachability(const MixedGraph& g) {
  const std::size_t n = g.size();
  std::vector<unsigned char> reach(n * n, 0);
  for (NodeId v = 0; v < n; ++v) {
    std::deque<NodeId> queue;
    for (NodeId c : g.children(v)) {
      reach[v * n + c] = 1;
      queue.push_back(c);
    }
    while (!queue.empty()) {
      const NodeId x = queue.front();
      queue.pop_front();
      for (NodeId c : g.children(x)) {
        if (!reach[v * n + c]) {
          reach[v * n + c] = 1;
          queue.push_back(c);
        }
      }
    }
  }
  return reach;
}

}  // namespace

MixedGraph::MixedGraph(std::size_t n)
    : n_(n), directed_(n * n, 0), bidirected_(n * n, 0) {
  names_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names_.push_back(default_name(i, n));
}

MixedGraph::MixedGraph(std::vector<std::string> names)
    : n_(names.size()), names_(std::move(names)), directed_(n_ * n_, 0), bidirected_(n_ * n_, 0) {}

void MixedGraph::check_node(NodeId v) const {
  if (v >= n_)
    throw Error(ErrorKind::IndexOutOfRange,
                "node " + std::to_string(v) + " out of range for " + std::to_string(n_) + " nodes");
}

const std::string& MixedGraph::name(NodeId v) const {
  check_node(v);
  return names_[v];
}

std::optional<NodeId> MixedGraph::find(const std::string& name) const {
  for (NodeId v = 0; v < n_; ++v)
    if (names_[v] == name) return v;
  return std::nullopt;
}

void MixedGraph::add_directed(NodeId tail, NodeId head) {
  check_node(tail);
  check_node(head);
  if (tail == head) throw Error(ErrorKind::SelfLoop, "self-loop at " + names_[tail]);
  if (directed_[idx(tail, head)])
    throw Error(ErrorKind::DuplicateEdge, "duplicate edge " + names_[tail] + " -> " + names_[head]);
  directed_[idx(tail, head)] = 1;
}

void MixedGraph::add_bidirected(NodeId a, NodeId b) {
  check_node(a);
  check_node(b);
  if (a == b) throw Error(ErrorKind::SelfLoop, "self-loop at " + names_[a]);
  if (bidirected_[idx(a, b)])
    throw Error(ErrorKind::DuplicateEdge, "duplicate edge " + names_[a] + " <-> " + names_[b]);
  bidirected_[idx(a, b)] = 1;
  bidirected_[idx(b, a)] = 1;
}

void MixedGraph::remove_directed(NodeId tail, NodeId head) {
  check_node(tail);
  check_node(head);
  directed_[idx(tail, head)] = 0;
}

void MixedGraph::remove_bidirected(NodeId a, NodeId b) {
  check_node(a);
  check_node(b);
  bidirected_[idx(a, b)] = 0;
  bidirected_[idx(b, a)] = 0;
}

bool MixedGraph::has_directed(NodeId tail, NodeId head) const {
  check_node(tail);
  check_node(head);
  return directed_[idx(tail, head)] != 0;
}

bool MixedGraph::has_bidirected(NodeId a, NodeId b) const {
  check_node(a);
  check_node(b);
  return bidirected_[idx(a, b)] != 0;
}

bool MixedGraph::adjacent(NodeId a, NodeId b) const {
  check_node(a);
  check_node(b);
  return directed_[idx(a, b)] || directed_[idx(b, a)] || bidirected_[idx(a, b)];
}

std::vector<NodeId> MixedGraph::parents(NodeId v) const {
  check_node(v);
  std::vector<NodeId> out;
  for (NodeId w = 0; w < n_; ++w)
    if (directed_[idx(w, v)]) out.push_back(w);
  return out;
}

std::vector<NodeId> MixedGraph::children(NodeId v) const {
  check_node(v);
  std::vector<NodeId> out;
  for (NodeId w = 0; w < n_; ++w)
    if (directed_[idx(v, w)]) out.push_back(w);
  return out;
}

std::vector<NodeId> MixedGraph::spouses(NodeId v) const {
  check_node(v);
  std::vector<NodeId> out;
  for (NodeId w = 0; w < n_; ++w)
    if (bidirected_[idx(v, w)]) out.push_back(w);
  return out;
}

std::size_t MixedGraph::degree(NodeId v) const {
  check_node(v);
  std::size_t d = 0;
  for (NodeId w = 0; w < n_; ++w)
    if (w != v && adjacent(v, w)) ++d;
  return d;
}

std::vector<std::pair<NodeId, NodeId>> MixedGraph::directed_edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (NodeId t = 0; t < n_; ++t)
    for (NodeId h = 0; h < n_; ++h)
      if (directed_[idx(t, h)]) out.emplace_back(t, h);
  return out;
}

std::vector<NodePair> MixedGraph::bidirected_edges() const {
  std::vector<NodePair> out;
  for (NodeId a = 0; a < n_; ++a)
    for (NodeId b = a + 1; b < n_; ++b)
      if (bidirected_[idx(a, b)]) out.push_back({a, b});
  return out;
}

std::size_t MixedGraph::edge_count() const {
  return directed_edges().size() + bidirected_edges().size();
}

bool is_acyclic(const MixedGraph& g) {
  try {
    topological_order(g);
    return true;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CyclicGraph) throw;
    return false;
  }
}

GraphClassReport classify(const MixedGraph& g) {
  GraphClassReport report;
  const std::size_t n = g.size();
  report.acyclic = is_acyclic(g);
  report.bow_free = true;
  bool any_bidirected = false;
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = 0; b < n; ++b) {
      if (!g.has_bidirected(a, b)) continue;
      any_bidirected = true;
      if (g.has_directed(a, b)) report.bow_free = false;
    }
  }
  report.is_bap = report.acyclic && report.bow_free;
  report.is_dag = report.acyclic && !any_bidirected;
  report.ancestral = report.acyclic;
  if (report.acyclic) {
    const auto reach = directed_reachability(g);
    for (NodeId v = 0; v < n && report.ancestral; ++v)
      for (NodeId w : g.spouses(v))
        if (reach[v * n + w]) report.ancestral = false;
  }
  return report;
}

void require_acyclic(const MixedGraph& g, const char* role) {
  if (!is_acyclic(g))
    throw Error(ErrorKind::CyclicGraph, std::string(role) + " has a directed cycle");
}

void require_bap(const MixedGraph& g, const char* role) {
  if (!classify(g).is_bap) throw Error(ErrorKind::NotBAP, std::string(role) + " must be a BAP");
}

std::vector<NodeId> topological_order(const MixedGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [t, h] : g.directed_edges()) ++indegree[h];
  std::vector<bool> placed(n, false);
  std::vector<NodeId> order;
  order.reserve(n);
  while (order.size() < n) {
    NodeId next = n;
    for (NodeId v = 0; v < n; ++v) {
      if (!placed[v] && indegree[v] == 0) {
        next = v;
        break;
      }
    }
    if (next == n) throw Error(ErrorKind::CyclicGraph, "graph has a directed cycle");
    placed[next] = true;
    order.push_back(next);
    for (NodeId c : g.children(next)) --indegree[c];
  }
  return order;
}

std::vector<NodeId> half_trek_reachable(const MixedGraph& g, NodeId v) {
  const std::size_t n = g.size();
  std::vector<bool> reached(n, false);
  std::deque<NodeId> queue;
  auto visit = [&](NodeId w) {
    if (!reached[w]) {
      reached[w] = true;
      queue.push_back(w);
    }
  };
  for (NodeId c : g.children(v)) visit(c);
  for (NodeId x : g.spouses(v)) visit(x);
  while (!queue.empty()) {
    const NodeId x = queue.front();
    queue.pop_front();
    for (NodeId c : g.children(x)) visit(c);
  }
  std::vector<NodeId> out;
  for (NodeId w = 0; w < n; ++w)
    if (reached[w]) out.push_back(w);
  return out;
}

std::size_t longest_directed_path(const MixedGraph& g) {
  const auto order = topological_order(g);
  std::vector<std::size_t> depth(g.size(), 0);
  std::size_t best = 0;
  for (NodeId v : order) {
    for (NodeId c : g.children(v)) {
      depth[c] = std::max(depth[c], depth[v] + 1);
      best = std::max(best, depth[c]);
    }
  }
  return best;
}

std::set<NodePair> skeleton(const MixedGraph& g) {
  std::set<NodePair> out;
  for (NodeId a = 0; a < g.size(); ++a)
    for (NodeId b = a + 1; b < g.size(); ++b)
      if (g.adjacent(a, b)) out.insert({a, b});
  return out;
}

std::set<Triple> collider_triples(const MixedGraph& g) {
  const std::size_t n = g.size();
  auto arrow_into = [&](NodeId from, NodeId at) {
    return g.has_directed(from, at) || g.has_bidirected(from, at);
  };
  std::set<Triple> out;
  for (NodeId v = 0; v < n; ++v)
    for (NodeId u = 0; u < n; ++u)
      for (NodeId w = u + 1; w < n; ++w)
        if (u != v && w != v && arrow_into(u, v) && arrow_into(w, v)) out.insert({u, v, w});
  return out;
}

std::set<Triple> v_structures(const MixedGraph& g) {
  std::set<Triple> out;
  for (const Triple& t : collider_triples(g))
    if (!g.adjacent(t.u, t.w)) out.insert(t);
  return out;
}

MixedGraph induced_subgraph(const MixedGraph& g, std::span<const NodeId> keep) {
  std::vector<std::string> names;
  std::vector<bool> seen(g.size(), false);
  for (NodeId v : keep) {
    names.push_back(g.name(v));
    if (seen[v])
      throw Error(ErrorKind::InvalidArgument, "node " + g.name(v) + " listed twice");
    seen[v] = true;
  }
  MixedGraph sub(std::move(names));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (i == j) continue;
      if (g.has_directed(keep[i], keep[j])) sub.add_directed(i, j);
      if (i < j && g.has_bidirected(keep[i], keep[j])) sub.add_bidirected(i, j);
    }
  }
  return sub;
}

}  // namespace algeq
