#pragma once

#include <string>
#include <vector>

#include "algeq/finite_field.hpp"
#include "algeq/io.hpp"
#include "algeq/mixed_graph.hpp"

namespace algeq::testing {

inline MixedGraph fixture(const std::string& name) {
  return parse_graph(read_file(std::string(ALGEQ_TEST_DATA) + "/" + name + ".graph"));
}

inline std::string fixture_path(const std::string& name) {
  return std::string(ALGEQ_TEST_DATA) + "/" + name + ".graph";
}

inline const std::vector<PrimeModulus>& presets() {
  static const std::vector<PrimeModulus> all{PrimeModulus::m31(), PrimeModulus::p63(),
                                             PrimeModulus::m127()};
  return all;
}

// Random BAP: a random permutation fixes the causal order, each pair gets
// nothing / directed forward / bidirected.
inline MixedGraph random_bap(std::size_t n, RandomStream& rng, unsigned edge_percent = 60,
                             bool allow_bidirected = true) {
  std::vector<NodeId> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.uniform_below(i)]);
  MixedGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.uniform_below(100) >= edge_percent) continue;
      if (allow_bidirected && rng.uniform_below(3) == 0)
        g.add_bidirected(order[i], order[j]);
      else
        g.add_directed(order[i], order[j]);
    }
  return g;
}

}  // namespace algeq::testing
