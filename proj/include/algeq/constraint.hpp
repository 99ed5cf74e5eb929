#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "algeq/field_matrix.hpp"
#include "algeq/mixed_graph.hpp"

namespace algeq {

/// A reference to sigma_{row,col}.
struct SigmaRef {
  NodeId row = 0;
  NodeId col = 0;
  friend bool operator==(const SigmaRef&, const SigmaRef&) = default;
};

/// Either a structural zero (nullopt) or a sigma entry.
using PatternCell = std::optional<SigmaRef>;

/// The determinant of an r x r matrix whose cells are sigma entries or zeros.
/// Covers correlations, partial-correlation numerators, minors of Sigma and
/// graphical representations, which may be larger than Sigma itself.
class PatternMatrixConstraint {
 public:
  PatternMatrixConstraint(std::size_t size, std::vector<PatternCell> cells);

  std::size_t size() const noexcept { return size_; }
  const PatternCell& cell(std::size_t r, std::size_t c) const { return cells_.at(r * size_ + c); }
  const std::vector<PatternCell>& cells() const noexcept { return cells_; }

  friend bool operator==(const PatternMatrixConstraint&, const PatternMatrixConstraint&) = default;

 private:
  std::size_t size_;
  std::vector<PatternCell> cells_;
};

/// Sum of integer-weighted monomials in the sigma entries. Coefficients are
/// reduced modulo p only when evaluated.
struct PolynomialConstraint {
  struct Term {
    std::int64_t coefficient = 0;
    std::vector<SigmaRef> factors;
  };
  std::vector<Term> terms;
};

using Constraint = std::variant<PatternMatrixConstraint, PolynomialConstraint>;

PatternMatrixConstraint build_correlation(NodeId v, NodeId w);
/// Rows {v} u S, columns {w} u S, in that order.
PatternMatrixConstraint build_partial_correlation(NodeId v, NodeId w,
                                                  const std::vector<NodeId>& conditioning);
PatternMatrixConstraint build_minor(const std::vector<NodeId>& rows,
                                    const std::vector<NodeId>& cols);

FieldElement evaluate(const PatternMatrixConstraint& c, const FieldMatrix& sigma);
FieldElement evaluate(const PolynomialConstraint& c, const FieldMatrix& sigma);
FieldElement evaluate(const Constraint& c, const FieldMatrix& sigma);

std::size_t degree(const PatternMatrixConstraint& c);
std::size_t degree(const PolynomialConstraint& c);
std::size_t degree(const Constraint& c);

/// Largest node index referenced, or nullopt if none.
std::optional<NodeId> max_node_ref(const Constraint& c);

}  // namespace algeq
