#include "algeq/harness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "algeq/criteria.hpp"

namespace algeq {

namespace {

enum EdgeChoice : unsigned char { kNone = 0, kForward = 1, kBackward = 2, kBidirected = 3 };

std::vector<unsigned char> choices_for(GraphFamily family) {
  switch (family) {
    case GraphFamily::AllBAPs: return {kNone, kForward, kBackward, kBidirected};
    case GraphFamily::AllDAGs: return {kNone, kForward, kBackward};
    case GraphFamily::CompleteBAPs: return {kForward, kBackward, kBidirected};
    case GraphFamily::ExtremalFamily: break;
  }
  return {};
}

}  // namespace

std::vector<MixedGraph> enumerate(const GraphFamilySpec& spec) {
  if (spec.n == 0) throw Error(ErrorKind::InvalidArgument, "family needs at least one node");
  if (spec.family == GraphFamily::ExtremalFamily) {
    std::vector<MixedGraph> out;
    for (NodeId s = 0; s + 1 < spec.n; ++s) out.push_back(build_extremal_pair(spec.n, s).graph);
    return out;
  }
  if (spec.n > 6 && !spec.allow_large)
    throw Error(ErrorKind::TooLarge, "exhaustive enumeration beyond 6 nodes needs an override");

  const std::size_t n = spec.n;
  std::vector<NodePair> pairs;
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b) pairs.push_back({a, b});
  const auto options = choices_for(spec.family);

  std::vector<std::size_t> digit(pairs.size(), 0);
  std::vector<MixedGraph> out;
  for (;;) {
    MixedGraph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto [a, b] = pairs[i];
      switch (options[digit[i]]) {
        case kForward: g.add_directed(a, b); break;
        case kBackward: g.add_directed(b, a); break;
        case kBidirected: g.add_bidirected(a, b); break;
        default: break;
      }
    }
    if (is_acyclic(g)) out.push_back(std::move(g));
    // odometer, last pair fastest
    std::size_t i = pairs.size();
    while (i > 0) {
      --i;
      if (++digit[i] < options.size()) break;
      digit[i] = 0;
      if (i == 0) return out;
    }
    if (pairs.empty()) return out;
  }
}

ExtremalGraph build_extremal_pair(std::size_t n, NodeId s) {
  if (n < 4) throw Error(ErrorKind::NTooSmall, "extremal family needs n >= 4");
  const NodeId t = n - 1;
  if (s >= t) throw Error(ErrorKind::InvalidArgument, "s must be below n-1");
  MixedGraph g(n);
  g.add_directed(0, 1);
  for (NodeId v = 2; v < t; ++v) {
    g.add_bidirected(0, v);
    for (NodeId w = 1; w < v; ++w) g.add_directed(w, v);
  }
  const NodeId partner = s == 0 ? 1 : 0;
  g.add_bidirected(partner, t);
  for (NodeId w = 0; w < t; ++w)
    if (w != s && w != partner) g.add_directed(w, t);
  return {std::move(g), NodePair{s, t}};
}

EquivalenceClassReport partition_classes(const std::vector<MixedGraph>& graphs,
                                         const PrimeModulus& m, std::size_t repeats,
                                         std::uint64_t master_seed) {
  EquivalenceClassReport report;
  report.repeats = repeats;
  report.prime = m;
  report.seed = master_seed;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    require_bap(graphs[i], "input graph");
    if (graphs[i].size() != graphs.front().size())
      throw Error(ErrorKind::NodeCountMismatch, "all graphs must share one node set");
  }

  std::uint64_t task_index = 0;
  auto decide = [&](std::size_t a, std::size_t b) {
    const std::uint64_t seed = mix_seed(master_seed, task_index++);
    ++report.randomized_calls;
    return decide_with_repeats(
        [&](RandomStream& rng) { return decide_equivalence(graphs[a], graphs[b], m, rng); },
        repeats, seed);
  };

  std::map<std::set<NodePair>, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < graphs.size(); ++i) buckets[skeleton(graphs[i])].push_back(i);

  for (const auto& [skel, members] : buckets) {
    std::vector<std::vector<std::size_t>> local;
    for (std::size_t idx : members) {
      bool placed = false;
      for (auto& cls : local) {
        const std::size_t rep = cls.front();
        if (decide(idx, rep).verdict) {
          if (classify_pair(graphs[idx], graphs[rep]).status != PairStatus::DefinitelyEquivalent)
            ++report.undetermined_pairs;
          cls.push_back(idx);
          placed = true;
          break;
        }
      }
      if (!placed) local.push_back({idx});
    }
    for (auto& cls : local) report.classes.push_back(std::move(cls));
  }

  for (const auto& cls : report.classes)
    for (std::size_t i = 2; i < cls.size(); ++i)
      if (!decide(cls[i], cls[i - 1]).verdict) ++report.consistency_failures;

  std::sort(report.classes.begin(), report.classes.end());
  return report;
}

Table1Report table1_experiment(std::size_t n, const PrimeModulus& m, std::size_t trials,
                               std::uint64_t master_seed) {
  Table1Report report;
  report.n = n;
  report.prime = m;
  report.theoretical_bound = error_bound_generic(n, m);

  const auto family = enumerate({n, GraphFamily::ExtremalFamily});
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = 0; b < family.size(); ++b)
      if (a != b) pairs.emplace_back(a, b);

  std::uint64_t task_index = 0;
  auto run = [&](const std::pair<std::size_t, std::size_t>& p) {
    RandomStream rng(master_seed, task_index++);
    return decide_inclusion(family[p.first], family[p.second], m, rng);
  };

  for (std::size_t i = 0; i < std::min<std::size_t>(3, pairs.size()); ++i) run(pairs[i]);

  using clock = std::chrono::steady_clock;
  clock::duration total{};
  while (report.instances < trials) {
    for (const auto& p : pairs) {
      const auto start = clock::now();
      const Decision d = run(p);
      total += clock::now() - start;
      ++report.instances;
      if (d.verdict) ++report.false_positive_count;
    }
  }
  if (report.instances > 0)
    report.mean_time_ms =
        std::chrono::duration<double, std::milli>(total).count() / static_cast<double>(report.instances);
  return report;
}

}  // namespace algeq
