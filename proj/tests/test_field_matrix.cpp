#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "algeq/field_matrix.hpp"
#include "support.hpp"

using namespace algeq;

namespace {

FieldMatrix random_matrix(std::size_t r, std::size_t c, const PrimeModulus& m, RandomStream& rng,
                          unsigned zero_percent = 0) {
  FieldMatrix a(r, c, m);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      a(i, j) = rng.uniform_below(100) < zero_percent ? 0 : rng.uniform_below(m.value());
  return a;
}

FieldMatrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows,
                      const PrimeModulus& m) {
  const std::size_t r = rows.size();
  const std::size_t c = rows.begin()->size();
  FieldMatrix a(r, c, m);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (auto v : row) a.set(i, j++, FieldElement::from_int(v, m));
    ++i;
  }
  return a;
}

// Leibniz expansion: sum over permutations with inversion-count sign.
FieldElement leibniz(const FieldMatrix& a) {
  const auto& m = a.modulus();
  std::vector<std::size_t> perm(a.rows());
  std::iota(perm.begin(), perm.end(), 0);
  FieldElement total = FieldElement::zero(m);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    FieldElement term = FieldElement::one(m);
    for (std::size_t i = 0; i < perm.size(); ++i) term = term * a.at(i, perm[i]);
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

FieldMatrix delete_column(const FieldMatrix& a, std::size_t j) {
  std::vector<std::size_t> rows(a.rows()), cols;
  std::iota(rows.begin(), rows.end(), 0);
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (c != j) cols.push_back(c);
  return submatrix(a, rows, cols);
}

}  // namespace

TEST_CASE("basic shapes") {
  const auto m = PrimeModulus::m31();
  RandomStream rng(1);
  const auto a = random_matrix(3, 4, m, rng);
  CHECK(mat_mul(FieldMatrix::identity(3, m), a) == a);
  CHECK(transpose(transpose(a)) == a);
  const std::vector<std::size_t> rows{0, 1}, cols{2};
  const auto s = submatrix(a, rows, cols);
  CHECK(s.rows() == 2);
  CHECK(s.cols() == 1);
  CHECK(s(1, 0) == a(1, 2));
  const std::vector<std::size_t> reversed{2, 0};
  CHECK(submatrix(a, reversed, cols)(0, 0) == a(2, 2));
  const std::vector<std::size_t> dup{0, 0}, bad{5};
  CHECK_THROWS_AS(submatrix(a, dup, cols), Error);
  CHECK_THROWS_AS(submatrix(a, bad, cols), Error);
  CHECK_THROWS_AS(mat_mul(a, a), Error);
  CHECK_THROWS_AS(mat_add(a, transpose(a)), Error);
  CHECK_THROWS_AS(a.at(3, 0), Error);
  CHECK(mat_sub(mat_add(a, a), a) == a);
}

TEST_CASE("inverse") {
  const auto m = PrimeModulus::m31();
  CHECK(mat_inverse(FieldMatrix::identity(4, m)) == FieldMatrix::identity(4, m));
  RandomStream rng(2);
  auto u = random_matrix(5, 5, m, rng);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j <= i; ++j) u(i, j) = i == j ? 1 : 0;
  CHECK(mat_mul(u, mat_inverse(u)) == FieldMatrix::identity(5, m));
  CHECK_THROWS_AS(mat_inverse(FieldMatrix(2, 2, m)), Error);
  CHECK_THROWS_AS(mat_inverse(FieldMatrix(2, 3, m)), Error);
  for (const auto& pm : testing::presets()) {
    for (int t = 0; t < 50; ++t) {
      const auto a = random_matrix(6, 6, pm, rng, t % 3 == 0 ? 60 : 0);
      try {
        const auto inv = mat_inverse(a);
        CHECK(mat_mul(inv, a) == FieldMatrix::identity(6, pm));
        CHECK_FALSE(determinant(a).is_zero());
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Singular);
        CHECK(determinant(a).is_zero());
      }
    }
  }
}

TEST_CASE("determinant examples and oracle") {
  const auto p7 = PrimeModulus::custom(7);
  CHECK(determinant(from_rows({{1, 2}, {3, 4}}, p7)).residue() == 5);
  CHECK(determinant(FieldMatrix::identity(3, p7)) == FieldElement::one(p7));
  CHECK(determinant(from_rows({{1, 2, 3}, {0, 0, 0}, {4, 5, 6}}, p7)).is_zero());
  CHECK(determinant(FieldMatrix(0, 0, p7)) == FieldElement::one(p7));
  CHECK_THROWS_AS(determinant(FieldMatrix(2, 3, p7)), Error);

  RandomStream rng(3);
  for (const auto& m : testing::presets())
    for (int t = 0; t < 60; ++t) {
      const std::size_t k = 1 + t % 6;
      const auto a = random_matrix(k, k, m, rng, t % 2 ? 50 : 0);
      CHECK(determinant(a) == leibniz(a));
    }
}

TEST_CASE("determinant is multiplicative") {
  RandomStream rng(4);
  for (const auto& m : testing::presets())
    for (int t = 0; t < 100; ++t) {
      const std::size_t k = 1 + t % 8;
      const auto a = random_matrix(k, k, m, rng, t % 4 == 0 ? 70 : 0);
      const auto b = random_matrix(k, k, m, rng);
      CHECK(determinant(mat_mul(a, b)) == determinant(a) * determinant(b));
    }
}

TEST_CASE("column-deleted minors examples") {
  const auto p7 = PrimeModulus::custom(7);
  const auto r = all_column_deleted_minors(from_rows({{1, 0, 2}, {0, 1, 3}}, p7));
  REQUIRE(r.size() == 3);
  CHECK(r[0].residue() == 5);
  CHECK(r[1].residue() == 3);
  CHECK(r[2].residue() == 1);

  FieldMatrix id_zero(4, 5, p7);
  for (std::size_t i = 0; i < 4; ++i) id_zero(i, i) = 1;
  const auto z = all_column_deleted_minors(id_zero);
  for (std::size_t j = 0; j < 4; ++j) CHECK(z[j].is_zero());
  CHECK(z[4] == FieldElement::one(p7));

  const auto empty = all_column_deleted_minors(FieldMatrix(0, 1, p7));
  REQUIRE(empty.size() == 1);
  CHECK(empty[0] == FieldElement::one(p7));
  CHECK_THROWS_AS(all_column_deleted_minors(FieldMatrix(2, 2, p7)), Error);
}

TEST_CASE("column-deleted minors match independent determinants") {
  RandomStream rng(5);
  for (const auto& m : testing::presets())
    for (int t = 0; t < 300; ++t) {
      const std::size_t k = t % 13;
      // Sparse cases exercise rank deficiency and pivot skipping.
      const auto a = random_matrix(k, k + 1, m, rng, t % 5 == 0 ? 75 : 0);
      const auto minors = all_column_deleted_minors(a);
      REQUIRE(minors.size() == k + 1);
      for (std::size_t j = 0; j <= k; ++j) REQUIRE(minors[j] == determinant(delete_column(a, j)));
    }
}

TEST_CASE("Cramer sign bridge") {
  RandomStream rng(6);
  for (const auto& m : testing::presets())
    for (int t = 0; t < 100; ++t) {
      const std::size_t k = 1 + t % 7;
      const auto ab = random_matrix(k, k + 1, m, rng, t % 4 == 0 ? 50 : 0);
      const auto minors = all_column_deleted_minors(ab);
      for (std::size_t j = 0; j < k; ++j) {
        FieldMatrix replaced(k, k, m);
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < k; ++c) replaced(r, c) = ab(r, c == j ? k : c);
        const bool negate = (k - 1 - j) % 2 == 1;
        CHECK(determinant(replaced) == (negate ? -minors[j] : minors[j]));
      }
    }
}

TEST_CASE("congruence") {
  const auto m = PrimeModulus::p63();
  RandomStream rng(7);
  auto s = random_matrix(4, 4, m, rng);
  s = mat_add(s, transpose(s));
  const auto b = random_matrix(4, 4, m, rng);
  CHECK(congruence(FieldMatrix::identity(4, m), s) == s);
  const auto c = congruence(b, s);
  CHECK(c == transpose(c));
  CHECK(c == mat_mul(mat_mul(transpose(b), s), b));
  CHECK(congruence(FieldMatrix(4, 4, m), s) == FieldMatrix(4, 4, m));
  CHECK_THROWS_AS(congruence(FieldMatrix(3, 3, m), s), Error);
}
