#include "algeq/constraint.hpp"

#include <algorithm>
#include <string>

namespace algeq {

namespace {

void check_ref(const SigmaRef& ref, std::size_t n) {
  if (ref.row >= n || ref.col >= n)
    throw Error(ErrorKind::IndexOutOfRange, "constraint refers to sigma_(" +
                                                std::to_string(ref.row) + "," +
                                                std::to_string(ref.col) + ") outside a " +
                                                std::to_string(n) + "x" + std::to_string(n) +
                                                " Sigma");
}

}  // namespace

PatternMatrixConstraint::PatternMatrixConstraint(std::size_t size, std::vector<PatternCell> cells)
    : size_(size), cells_(std::move(cells)) {
  if (size == 0) throw Error(ErrorKind::InvalidArgument, "pattern matrix must be at least 1x1");
  if (cells_.size() != size * size)
    throw Error(ErrorKind::DimensionMismatch, "pattern matrix needs " +
                                                  std::to_string(size * size) + " cells, got " +
                                                  std::to_string(cells_.size()));
}

PatternMatrixConstraint build_correlation(NodeId v, NodeId w) {
  return PatternMatrixConstraint(1, {SigmaRef{v, w}});
}

PatternMatrixConstraint build_partial_correlation(NodeId v, NodeId w,
                                                  const std::vector<NodeId>& conditioning) {
  if (std::find(conditioning.begin(), conditioning.end(), v) != conditioning.end() ||
      std::find(conditioning.begin(), conditioning.end(), w) != conditioning.end())
    throw Error(ErrorKind::InvalidArgument, "partial correlation: v and w must not be in S");
  std::vector<NodeId> rows{v}, cols{w};
  rows.insert(rows.end(), conditioning.begin(), conditioning.end());
  cols.insert(cols.end(), conditioning.begin(), conditioning.end());
  return build_minor(rows, cols);
}

PatternMatrixConstraint build_minor(const std::vector<NodeId>& rows,
                                    const std::vector<NodeId>& cols) {
  if (rows.size() != cols.size())
    throw Error(ErrorKind::DimensionMismatch, "minor needs |A| = |B|");
  const std::size_t r = rows.size();
  std::vector<PatternCell> cells;
  cells.reserve(r * r);
  for (NodeId a : rows)
    for (NodeId b : cols) cells.emplace_back(SigmaRef{a, b});
  return PatternMatrixConstraint(r, std::move(cells));
}

FieldElement evaluate(const PatternMatrixConstraint& c, const FieldMatrix& sigma) {
  const std::size_t r = c.size();
  FieldMatrix filled(r, r, sigma.modulus());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const PatternCell& cell = c.cell(i, j);
      if (!cell) continue;
      check_ref(*cell, sigma.rows());
      filled(i, j) = sigma(cell->row, cell->col);
    }
  }
  return determinant(filled);
}

FieldElement evaluate(const PolynomialConstraint& c, const FieldMatrix& sigma) {
  const PrimeModulus& m = sigma.modulus();
  u128 total = 0;
  for (const auto& term : c.terms) {
    u128 value = m.reduce(term.coefficient);
    for (const SigmaRef& f : term.factors) {
      check_ref(f, sigma.rows());
      value = m.mul(value, sigma(f.row, f.col));
    }
    total = m.add(total, value);
  }
  return {total, m};
}

FieldElement evaluate(const Constraint& c, const FieldMatrix& sigma) {
  return std::visit([&](const auto& inner) { return evaluate(inner, sigma); }, c);
}

std::size_t degree(const PatternMatrixConstraint& c) { return c.size(); }

std::size_t degree(const PolynomialConstraint& c) {
  std::size_t d = 0;
  for (const auto& term : c.terms) d = std::max(d, term.factors.size());
  return d;
}

std::size_t degree(const Constraint& c) {
  return std::visit([](const auto& inner) { return degree(inner); }, c);
}

std::optional<NodeId> max_node_ref(const Constraint& c) {
  std::optional<NodeId> best;
  auto note = [&](const SigmaRef& ref) {
    const NodeId m = std::max(ref.row, ref.col);
    if (!best || m > *best) best = m;
  };
  if (const auto* pattern = std::get_if<PatternMatrixConstraint>(&c)) {
    for (const auto& cell : pattern->cells())
      if (cell) note(*cell);
  } else {
    for (const auto& term : std::get<PolynomialConstraint>(c).terms)
      for (const auto& f : term.factors) note(f);
  }
  return best;
}

}  // namespace algeq
