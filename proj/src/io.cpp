#include "algeq/io.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <vector>

namespace algeq {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Non-blank lines with comments stripped.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({number, std::move(t)});
  }
  return out;
}

Error parse_error(std::size_t line, const std::string& what) {
  return Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

NodeId resolve(const MixedGraph& g, const std::string& name, std::size_t line) {
  const auto id = g.find(name);
  if (!id)
    throw Error(ErrorKind::UnknownNode,
                "line " + std::to_string(line) + ": unknown node '" + name + "'");
  return *id;
}

std::vector<NodeId> resolve_list(const MixedGraph& g, const std::string& list, std::size_t line) {
  std::vector<NodeId> out;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) throw parse_error(line, "empty node name in list");
    out.push_back(resolve(g, item, line));
  }
  return out;
}

}  // namespace

MixedGraph parse_graph(std::string_view text) {
  static const std::regex name_re("[A-Za-z0-9_]+");
  static const std::regex edge_re(R"(([A-Za-z0-9_]+)\s*(<->|->)\s*([A-Za-z0-9_]+))");
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorKind::ParseError, "empty graph file");

  const Line& header = lines.front();
  if (header.text.rfind("nodes:", 0) != 0)
    throw parse_error(header.number, "expected 'nodes: <name>+'");
  const auto names = split_ws(header.text.substr(6));
  if (names.empty()) throw parse_error(header.number, "no node names");
  std::set<std::string> unique;
  for (const auto& name : names) {
    if (!std::regex_match(name, name_re)) throw parse_error(header.number, "bad node name '" + name + "'");
    if (!unique.insert(name).second) throw parse_error(header.number, "duplicate node '" + name + "'");
  }
  MixedGraph g(names);

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    std::smatch match;
    if (!std::regex_match(line.text, match, edge_re))
      throw parse_error(line.number, "expected 'X -> Y' or 'X <-> Y'");
    const NodeId a = resolve(g, match[1], line.number);
    const NodeId b = resolve(g, match[3], line.number);
    try {
      if (match[2] == "->")
        g.add_directed(a, b);
      else
        g.add_bidirected(a, b);
    } catch (const Error& e) {
      throw Error(e.kind(), "line " + std::to_string(line.number) + ": " + e.what());
    }
  }
  return g;
}

std::string serialize_graph(const MixedGraph& g) {
  std::string out = "nodes:";
  for (const auto& name : g.names()) out += " " + name;
  out += "\n";
  for (const auto& [t, h] : g.directed_edges()) out += g.name(t) + " -> " + g.name(h) + "\n";
  for (const auto& e : g.bidirected_edges())
    out += g.name(e.first) + " <-> " + g.name(e.second) + "\n";
  return out;
}

Constraint parse_constraint(std::string_view text, const MixedGraph& g) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorKind::ParseError, "empty constraint file");
  const Line& head = lines.front();
  const auto tokens = split_ws(head.text);
  const std::string& kind = tokens.front();
  auto expect_single = [&] {
    if (lines.size() != 1) throw parse_error(lines[1].number, "unexpected trailing content");
  };

  if (kind == "corr") {
    expect_single();
    if (tokens.size() != 3) throw parse_error(head.number, "expected 'corr v w'");
    return build_correlation(resolve(g, tokens[1], head.number), resolve(g, tokens[2], head.number));
  }
  if (kind == "pcorr") {
    expect_single();
    const std::string rest = head.text.substr(5);
    const auto bar = rest.find('|');
    const auto pair = split_ws(rest.substr(0, bar));
    if (pair.size() != 2) throw parse_error(head.number, "expected 'pcorr v w | s1 s2 ...'");
    std::vector<NodeId> cond;
    if (bar != std::string::npos)
      for (const auto& s : split_ws(rest.substr(bar + 1))) cond.push_back(resolve(g, s, head.number));
    const NodeId v = resolve(g, pair[0], head.number);
    const NodeId w = resolve(g, pair[1], head.number);
    try {
      return build_partial_correlation(v, w, cond);
    } catch (const Error& e) {
      throw parse_error(head.number, e.what());
    }
  }
  if (kind == "minor") {
    expect_single();
    const std::string rest = head.text.substr(5);
    const auto semi = rest.find(';');
    if (semi == std::string::npos) throw parse_error(head.number, "expected 'minor a,b ; c,d'");
    const auto rows = resolve_list(g, trim(rest.substr(0, semi)), head.number);
    const auto cols = resolve_list(g, trim(rest.substr(semi + 1)), head.number);
    if (rows.size() != cols.size())
      throw parse_error(head.number, "minor needs as many rows as columns");
    return build_minor(rows, cols);
  }
  if (kind == "pattern") {
    if (tokens.size() != 2) throw parse_error(head.number, "expected 'pattern r'");
    std::size_t r = 0;
    try {
      r = static_cast<std::size_t>(parse_u128(tokens[1]));
    } catch (const Error&) {
      throw parse_error(head.number, "bad pattern size '" + tokens[1] + "'");
    }
    if (r == 0) throw parse_error(head.number, "pattern size must be positive");
    if (lines.size() != r + 1)
      throw parse_error(head.number, "pattern " + std::to_string(r) + " needs exactly " +
                                         std::to_string(r) + " rows");
    std::vector<PatternCell> cells;
    for (std::size_t i = 1; i <= r; ++i) {
      const auto row = split_ws(lines[i].text);
      if (row.size() != r)
        throw parse_error(lines[i].number, "expected " + std::to_string(r) + " cells");
      for (const auto& cell : row) {
        if (cell == "0") {
          cells.emplace_back(std::nullopt);
          continue;
        }
        const auto colon = cell.find(':');
        if (colon == std::string::npos)
          throw parse_error(lines[i].number, "cell '" + cell + "' is neither 0 nor v:w");
        cells.emplace_back(SigmaRef{resolve(g, cell.substr(0, colon), lines[i].number),
                                    resolve(g, cell.substr(colon + 1), lines[i].number)});
      }
    }
    return PatternMatrixConstraint(r, std::move(cells));
  }
  throw parse_error(head.number, "unknown constraint kind '" + kind + "'");
}

MixedGraph align_by_name(const MixedGraph& reference, const MixedGraph& other) {
  if (reference.size() != other.size())
    throw Error(ErrorKind::NodeCountMismatch, "graphs have different node counts");
  std::vector<NodeId> to_ref(other.size());
  for (NodeId v = 0; v < other.size(); ++v) {
    const auto id = reference.find(other.name(v));
    if (!id)
      throw Error(ErrorKind::UnknownNode, "node '" + other.name(v) + "' missing from the other graph");
    to_ref[v] = *id;
  }
  MixedGraph out(reference.names());
  for (const auto& [t, h] : other.directed_edges()) out.add_directed(to_ref[t], to_ref[h]);
  for (const auto& e : other.bidirected_edges()) out.add_bidirected(to_ref[e.first], to_ref[e.second]);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace algeq
