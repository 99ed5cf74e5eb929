#include "algeq/field_matrix.hpp"

#include <string>
#include <utility>

namespace algeq {

namespace {

void require_same_modulus(const FieldMatrix& a, const FieldMatrix& b) {
  if (!(a.modulus() == b.modulus()))
    throw Error(ErrorKind::ModulusMismatch, "matrices over different primes");
}

std::string shape(const FieldMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void check_indices(std::span<const std::size_t> indices, std::size_t bound, const char* what) {
  std::vector<bool> seen(bound, false);
  for (std::size_t i : indices) {
    if (i >= bound)
      throw Error(ErrorKind::IndexOutOfRange, std::string(what) + " index " + std::to_string(i) +
                                                  " out of range");
    if (seen[i])
      throw Error(ErrorKind::InvalidArgument,
                  std::string("duplicate ") + what + " index " + std::to_string(i));
    seen[i] = true;
  }
}

}  // namespace

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, const PrimeModulus& modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {}

FieldMatrix FieldMatrix::identity(std::size_t n, const PrimeModulus& modulus) {
  FieldMatrix id(n, n, modulus);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

FieldElement FieldMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_)
    throw Error(ErrorKind::IndexOutOfRange, "matrix index out of range");
  return {(*this)(r, c), modulus_};
}

void FieldMatrix::set(std::size_t r, std::size_t c, const FieldElement& value) {
  if (r >= rows_ || c >= cols_)
    throw Error(ErrorKind::IndexOutOfRange, "matrix index out of range");
  if (!(value.modulus() == modulus_))
    throw Error(ErrorKind::ModulusMismatch, "element and matrix over different primes");
  (*this)(r, c) = value.residue();
}

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_modulus(a, b);
  if (a.cols() != b.rows())
    throw Error(ErrorKind::DimensionMismatch, "cannot multiply " + shape(a) + " by " + shape(b));
  const PrimeModulus& m = a.modulus();
  FieldMatrix out(a.rows(), b.cols(), m);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out_row = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const u128 aik = a(i, k);
      if (aik == 0) continue;
      auto b_row = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j)
        out_row[j] = m.add(out_row[j], m.mul(aik, b_row[j]));
    }
  }
  return out;
}

FieldMatrix mat_add(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_modulus(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch, "cannot add " + shape(a) + " and " + shape(b));
  FieldMatrix out(a.rows(), a.cols(), a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.modulus().add(a(i, j), b(i, j));
  return out;
}

FieldMatrix mat_sub(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_modulus(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch, "cannot subtract " + shape(b) + " from " + shape(a));
  FieldMatrix out(a.rows(), a.cols(), a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.modulus().sub(a(i, j), b(i, j));
  return out;
}

FieldMatrix transpose(const FieldMatrix& a) {
  FieldMatrix out(a.cols(), a.rows(), a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

FieldMatrix submatrix(const FieldMatrix& a, std::span<const std::size_t> rows,
                      std::span<const std::size_t> cols) {
  check_indices(rows, a.rows(), "row");
  check_indices(cols, a.cols(), "column");
  FieldMatrix out(rows.size(), cols.size(), a.modulus());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = a(rows[i], cols[j]);
  return out;
}

FieldMatrix mat_inverse(const FieldMatrix& a) {
  if (!a.is_square())
    throw Error(ErrorKind::DimensionMismatch, "cannot invert non-square " + shape(a));
  const PrimeModulus& m = a.modulus();
  const std::size_t n = a.rows();
  FieldMatrix work = a;
  FieldMatrix inv = FieldMatrix::identity(n, m);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorKind::Singular, "matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const u128 scale = m.inv(work(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) = m.mul(work(col, j), scale);
      inv(col, j) = m.mul(inv(col, j), scale);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const u128 factor = work(r, col);
      if (factor == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) = m.sub(work(r, j), m.mul(factor, work(col, j)));
        inv(r, j) = m.sub(inv(r, j), m.mul(factor, inv(col, j)));
      }
    }
  }
  return inv;
}

FieldElement determinant(const FieldMatrix& a) {
  if (!a.is_square())
    throw Error(ErrorKind::DimensionMismatch, "determinant of non-square " + shape(a));
  const PrimeModulus& m = a.modulus();
  const std::size_t n = a.rows();
  FieldMatrix work = a;
  bool negate = false;
  u128 det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col) == 0) ++pivot;
    if (pivot == n) return FieldElement::zero(m);
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(work(pivot, j), work(col, j));
      negate = !negate;
    }
    const u128 d = work(col, col);
    det = m.mul(det, d);
    const u128 d_inv = m.inv(d);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (work(r, col) == 0) continue;
      const u128 factor = m.mul(work(r, col), d_inv);
      for (std::size_t j = col; j < n; ++j)
        work(r, j) = m.sub(work(r, j), m.mul(factor, work(col, j)));
    }
  }
  return {negate ? m.neg(det) : det, m};
}

std::vector<FieldElement> all_column_deleted_minors(const FieldMatrix& input) {
  if (input.cols() != input.rows() + 1)
    throw Error(ErrorKind::DimensionMismatch,
                "column-deleted minors need a k x (k+1) matrix, got " + shape(input));
  const PrimeModulus& m = input.modulus();
  const std::size_t k = input.rows();
  const std::size_t width = k + 1;
  std::vector<FieldElement> minors(width, FieldElement::zero(m));
  if (k == 0) {
    minors[0] = FieldElement::one(m);
    return minors;
  }

  // Forward elimination to row-echelon form. Row additions leave every
  // column-deleted minor unchanged; swaps flip all of them.
  FieldMatrix u = input;
  bool negate = false;
  std::vector<std::size_t> pivot_col;
  pivot_col.reserve(k);
  for (std::size_t col = 0; col < width && pivot_col.size() < k; ++col) {
    const std::size_t row = pivot_col.size();
    std::size_t pivot = row;
    while (pivot < k && u(pivot, col) == 0) ++pivot;
    if (pivot == k) continue;
    if (pivot != row) {
      for (std::size_t j = col; j < width; ++j) std::swap(u(pivot, j), u(row, j));
      negate = !negate;
    }
    const u128 d_inv = m.inv(u(row, col));
    for (std::size_t r = row + 1; r < k; ++r) {
      if (u(r, col) == 0) continue;
      const u128 factor = m.mul(u(r, col), d_inv);
      for (std::size_t j = col; j < width; ++j)
        u(r, j) = m.sub(u(r, j), m.mul(factor, u(row, j)));
    }
    pivot_col.push_back(col);
  }
  if (pivot_col.size() < k) return minors;  // rank < k: every k x k minor vanishes

  std::vector<bool> is_pivot(width, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;

  // Right-to-left pass over the flipped pivot order: clearing pivot column
  // c_i from the rows above only changes their entries in c_i and free_col,
  // so tracking the free column suffices.
  std::vector<u128> z(k);
  for (std::size_t i = 0; i < k; ++i) z[i] = u(i, free_col);
  for (std::size_t flipped = 0; flipped < k; ++flipped) {
    const std::size_t i = k - 1 - flipped;
    if (z[i] == 0) continue;
    const u128 d_inv = m.inv(u(i, pivot_col[i]));
    for (std::size_t r = 0; r < i; ++r) {
      const u128 above = u(r, pivot_col[i]);
      if (above == 0) continue;
      z[r] = m.sub(z[r], m.mul(m.mul(above, d_inv), z[i]));
    }
  }

  // prefix[i] * suffix[i+1] is the pivot product with pivot i left out.
  std::vector<u128> prefix(k + 1, 1), suffix(k + 1, 1);
  for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = m.mul(prefix[i], u(i, pivot_col[i]));
  for (std::size_t i = k; i-- > 0;) suffix[i] = m.mul(suffix[i + 1], u(i, pivot_col[i]));

  auto signed_value = [&](u128 value, bool flip) {
    return FieldElement(flip != negate ? m.neg(value) : value, m);
  };

  minors[free_col] = signed_value(prefix[k], false);
  std::size_t pivots_before_free = 0;
  for (std::size_t c : pivot_col)
    if (c < free_col) ++pivots_before_free;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t c = pivot_col[i];
    const std::size_t free_pos = c < free_col ? pivots_before_free - 1 : pivots_before_free;
    const std::size_t shift = i > free_pos ? i - free_pos : free_pos - i;
    const u128 value = m.mul(m.mul(prefix[i], suffix[i + 1]), z[i]);
    minors[c] = signed_value(value, shift % 2 == 1);
  }
  return minors;
}

FieldMatrix congruence(const FieldMatrix& b, const FieldMatrix& s) {
  if (!s.is_square() || !b.is_square() || b.rows() != s.rows())
    throw Error(ErrorKind::DimensionMismatch,
                "congruence needs square matrices of equal size, got " + shape(b) + " and " +
                    shape(s));
  return mat_mul(transpose(b), mat_mul(s, b));
}

}  // namespace algeq
