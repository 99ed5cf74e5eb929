#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "algeq/constraint.hpp"
#include "algeq/lsem.hpp"
#include "support.hpp"

using namespace algeq;

namespace {

// A positive definite matrix on a..e that satisfies every generator of fig1a's
// constraints without lying in its model. Entries are num/den.
FieldMatrix example1_sigma(const PrimeModulus& m) {
  const std::int64_t num[5][5] = {{1, 3, 2, 0, 0}, {3, 1, 3, 0, 0}, {2, 3, 1, 0, 0}, {0, 0, 0, 1, 1}, {0, 0, 0, 1, 1}};
  const std::int64_t den[5][5] = {{1, 4, 9, 1, 1}, {4, 1, 4, 1, 1}, {9, 4, 1, 1, 1}, {1, 1, 1, 1, 2}, {1, 1, 1, 2, 1}};
  FieldMatrix s(5, 5, m);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) s.set(i, j, ff_from_rational(num[i][j], den[i][j], m));
  return s;
}

PolynomialConstraint expand(const PatternMatrixConstraint& c) {
  PolynomialConstraint poly;
  std::vector<std::size_t> perm(c.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    PolynomialConstraint::Term term{inversions % 2 ? -1 : 1, {}};
    bool zero = false;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      const auto& cell = c.cell(i, perm[i]);
      if (!cell) zero = true;
      else term.factors.push_back(*cell);
    }
    if (!zero) poly.terms.push_back(term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return poly;
}

}  // namespace

TEST_CASE("builders") {
  const auto corr = build_correlation(0, 4);
  CHECK(corr.size() == 1);
  CHECK(corr.cell(0, 0) == PatternCell(SigmaRef{0, 4}));
  const auto minor = build_minor({0, 1}, {2, 3});
  CHECK(minor.cell(0, 0) == PatternCell(SigmaRef{0, 2}));
  CHECK(minor.cell(0, 1) == PatternCell(SigmaRef{0, 3}));
  CHECK(minor.cell(1, 0) == PatternCell(SigmaRef{1, 2}));
  CHECK(minor.cell(1, 1) == PatternCell(SigmaRef{1, 3}));
  CHECK(build_partial_correlation(2, 3, {}) == build_correlation(2, 3));
  const auto pc = build_partial_correlation(0, 1, {2, 3});
  CHECK(pc.size() == 3);
  CHECK(pc.cell(0, 0) == PatternCell(SigmaRef{0, 1}));
  CHECK(pc.cell(2, 0) == PatternCell(SigmaRef{3, 1}));
  CHECK(pc.cell(1, 2) == PatternCell(SigmaRef{2, 3}));
  CHECK_THROWS_AS(build_minor({0, 1}, {2}), Error);
  CHECK_THROWS_AS(build_partial_correlation(0, 1, {1}), Error);
  CHECK_THROWS_AS(PatternMatrixConstraint(2, std::vector<PatternCell>(3)), Error);
  CHECK_THROWS_AS(PatternMatrixConstraint(0, {}), Error);
}

TEST_CASE("degrees") {
  CHECK(degree(Constraint(build_correlation(0, 1))) == 1);
  CHECK(degree(Constraint(build_minor({0, 1, 2}, {2, 3, 4}))) == 3);
  PolynomialConstraint p{{{1, {{0, 1}, {2, 3}}}, {-1, {{0, 3}, {2, 1}}}}};
  CHECK(degree(Constraint(p)) == 2);
  CHECK(degree(PolynomialConstraint{}) == 0);
  CHECK(max_node_ref(Constraint(p)) == NodeId{3});
  CHECK_FALSE(max_node_ref(Constraint(PolynomialConstraint{})).has_value());
}

TEST_CASE("fig1a generators vanish on a spurious Sigma") {
  for (const auto& m : testing::presets()) {
    const auto sigma = example1_sigma(m);
    const NodeId a = 0, b = 1, c = 2, d = 3, e = 4;
    CHECK(evaluate(build_correlation(a, e), sigma).is_zero());
    CHECK(evaluate(build_correlation(b, e), sigma).is_zero());
    CHECK(evaluate(build_correlation(c, e), sigma).is_zero());
    CHECK(evaluate(PatternMatrixConstraint(2, {SigmaRef{b, d}, SigmaRef{b, c}, SigmaRef{c, d}, SigmaRef{c, c}}),
                   sigma)
              .is_zero());
    const PatternMatrixConstraint with_bd(3, {SigmaRef{a, a}, SigmaRef{a, b}, std::nullopt, SigmaRef{b, a},
                                              SigmaRef{b, b}, SigmaRef{b, d}, SigmaRef{c, a}, SigmaRef{c, b},
                                              SigmaRef{c, d}});
    const PatternMatrixConstraint with_bc(3, {SigmaRef{a, a}, SigmaRef{a, b}, std::nullopt, SigmaRef{b, a},
                                              SigmaRef{b, b}, SigmaRef{b, c}, SigmaRef{c, a}, SigmaRef{c, b},
                                              SigmaRef{c, c}});
    CHECK(evaluate(with_bd, sigma).is_zero());
    CHECK(evaluate(with_bc, sigma).is_zero());
    // Sanity: the matrix is not degenerate everywhere.
    CHECK_FALSE(evaluate(build_correlation(a, b), sigma).is_zero());
  }
}

TEST_CASE("evaluation details") {
  const auto m = PrimeModulus::m31();
  RandomStream rng(1);
  auto sigma = phi(sample_params(testing::random_bap(5, rng), m, rng));
  sigma(0, 2) = sigma(2, 0) = 0;
  sigma(0, 3) = sigma(3, 0) = 0;
  CHECK(evaluate(build_minor({0, 1}, {2, 3}), sigma).is_zero());
  CHECK(evaluate(PolynomialConstraint{}, sigma).is_zero());
  CHECK_THROWS_AS(evaluate(build_correlation(0, 7), sigma), Error);
  PolynomialConstraint neg{{{-3, {{1, 1}}}, {5, {}}}};
  CHECK(evaluate(neg, sigma) == FieldElement::from_int(5, m) - FieldElement::from_int(3, m) * sigma.at(1, 1));
}

TEST_CASE("pattern determinants agree with symbolic expansion") {
  RandomStream rng(2);
  for (const auto& m : testing::presets())
    for (int t = 0; t < 150; ++t) {
      const std::size_t r = 1 + t % 3;
      std::vector<PatternCell> cells;
      for (std::size_t i = 0; i < r * r; ++i) {
        if (rng.uniform_below(4) == 0)
          cells.emplace_back(std::nullopt);
        else
          cells.emplace_back(SigmaRef{static_cast<NodeId>(rng.uniform_below(5)), static_cast<NodeId>(rng.uniform_below(5))});
      }
      const PatternMatrixConstraint c(r, cells);
      const auto sigma = phi(sample_params(testing::random_bap(5, rng), m, rng));
      CHECK(evaluate(c, sigma) == evaluate(expand(c), sigma));
    }
}

TEST_CASE("degree-one constraints are linear in Sigma") {
  RandomStream rng(3);
  const auto m = PrimeModulus::p63();
  for (int t = 0; t < 100; ++t) {
    const Constraint c = build_correlation(static_cast<NodeId>(rng.uniform_below(4)), static_cast<NodeId>(rng.uniform_below(4)));
    const auto s1 = phi(sample_params(testing::random_bap(4, rng), m, rng));
    const auto s2 = phi(sample_params(testing::random_bap(4, rng), m, rng));
    const auto k = ff_sample_uniform(m, rng);
    FieldMatrix combo(4, 4, m);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) combo.set(i, j, s1.at(i, j) + k * s2.at(i, j));
    CHECK(evaluate(c, combo) == evaluate(c, s1) + k * evaluate(c, s2));
  }
}
