#pragma once

#include <string>
#include <string_view>

#include "algeq/constraint.hpp"
#include "algeq/mixed_graph.hpp"

namespace algeq {

/// Graph text format:
///
///   # comment
///   nodes: a b c
///   a -> b
///   b <-> c
///
/// Names match [A-Za-z0-9_]+ and must be unique. Errors carry the 1-based
/// line number in their message.
MixedGraph parse_graph(std::string_view text);

/// Canonical form: the nodes line, directed edges by (tail, head) index, then
/// bidirected edges by (min, max) index.
std::string serialize_graph(const MixedGraph& g);

/// Constraint text format, node names resolved against `g`:
///
///   corr v w
///   pcorr v w | s1 s2 ...
///   minor a,b ; c,d
///   pattern r        (followed by r rows of r cells, each `0` or `v:w`)
Constraint parse_constraint(std::string_view text, const MixedGraph& g);

/// Re-indexes `other` so that node i carries the name of node i in
/// `reference`. Throws NodeCountMismatch or UnknownNode if the name sets
/// differ.
MixedGraph align_by_name(const MixedGraph& reference, const MixedGraph& other);

std::string read_file(const std::string& path);

}  // namespace algeq
