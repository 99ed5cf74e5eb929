#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "algeq/finite_field.hpp"

namespace algeq {

/// Dense row-major matrix over F_p. Entries are stored as reduced residues and
/// share the matrix's modulus; the raw accessors trust callers to keep them
/// reduced.
class FieldMatrix {
 public:
  FieldMatrix(std::size_t rows, std::size_t cols, const PrimeModulus& modulus);

  static FieldMatrix identity(std::size_t n, const PrimeModulus& modulus);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const PrimeModulus& modulus() const noexcept { return modulus_; }

  u128 operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  u128& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

  // Checked element access.
  FieldElement at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const FieldElement& value);

  std::span<const u128> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<u128> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }

  bool is_square() const noexcept { return rows_ == cols_; }

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) noexcept {
    return a.modulus_ == b.modulus_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  PrimeModulus modulus_;
  std::vector<u128> data_;
};

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix mat_add(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix mat_sub(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix transpose(const FieldMatrix& a);
/// Rows and columns in the order given; duplicate indices are rejected.
FieldMatrix submatrix(const FieldMatrix& a, std::span<const std::size_t> rows,
                      std::span<const std::size_t> cols);
/// Gauss-Jordan inversion; throws Singular when det(a) = 0.
FieldMatrix mat_inverse(const FieldMatrix& a);
/// Gaussian elimination with first-nonzero pivoting. The 0x0 determinant is 1.
FieldElement determinant(const FieldMatrix& a);

/// For a k x (k+1) matrix, the k+1 determinants obtained by deleting each
/// column in turn (result[j] deletes column j). One forward elimination plus a
/// right-to-left back-elimination pass that touches only the non-pivot
/// column; O(k^3) overall and exact.
std::vector<FieldElement> all_column_deleted_minors(const FieldMatrix& m);

/// B^T S B.
FieldMatrix congruence(const FieldMatrix& b, const FieldMatrix& s);

}  // namespace algeq
