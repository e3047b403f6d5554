#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "anick/rational.hpp"

namespace anick {

/// Sparse vector of fixed length; zero entries are never stored.
class RationalVector {
 public:
  explicit RationalVector(std::size_t length = 0) : length_(length) {}

  std::size_t length() const { return length_; }
  Rational get(std::size_t i) const;
  void set(std::size_t i, const Rational& v);
  void add(std::size_t i, const Rational& v);
  const std::map<std::size_t, Rational>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  friend bool operator==(const RationalVector&, const RationalVector&) = default;

 private:
  std::size_t length_;
  std::map<std::size_t, Rational> entries_;
};

/// Exact sparse matrix stored row-major.
class SparseRationalMatrix {
 public:
  using Row = std::map<std::size_t, Rational>;

  SparseRationalMatrix(std::size_t rows = 0, std::size_t cols = 0);
  static SparseRationalMatrix from_dense(const std::vector<std::vector<Rational>>& rows);
  /// Matrix whose j-th column is vectors[j]; every vector must have length `rows`.
  static SparseRationalMatrix from_columns(std::size_t rows, std::span<const RationalVector> cols);

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_; }
  std::size_t nonzero_count() const;

  Rational get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& v);
  void add(std::size_t r, std::size_t c, const Rational& v);
  const Row& row(std::size_t r) const { return rows_.at(r); }

  SparseRationalMatrix transpose() const;
  RationalVector multiply(const RationalVector& v) const;
  SparseRationalMatrix multiply(const SparseRationalMatrix& rhs) const;
  bool is_zero() const { return nonzero_count() == 0; }

  friend bool operator==(const SparseRationalMatrix&, const SparseRationalMatrix&) = default;

 private:
  void check_index(std::size_t r, std::size_t c) const;

  std::vector<Row> rows_;
  std::size_t cols_;
};

/// Reduced row echelon form: nonzero rows only, each with leading entry 1 at
/// pivots[i]; pivots strictly increasing.
struct RowEchelon {
  std::vector<SparseRationalMatrix::Row> rows;
  std::vector<std::size_t> pivots;
  std::size_t col_count = 0;
};

std::size_t rank(const SparseRationalMatrix& m);

/// Basis of {v : m v = 0}. One vector per free column f (in increasing order),
/// with v_f = 1 and zeros on the other free columns.
std::vector<RationalVector> nullspace_basis(const SparseRationalMatrix& m);

/// dim span(kernel_basis) - rank(image_generators). Throws StructuralError if
/// an image generator is not in the span of kernel_basis.
std::size_t quotient_dim(std::span<const RationalVector> kernel_basis,
                         std::span<const RationalVector> image_generators);

std::size_t rank_of_vectors(std::span<const RationalVector> vectors, std::size_t length);

RowEchelon reduced_row_echelon(const SparseRationalMatrix& m);

namespace detail {
// Both elimination paths are exposed so tests can cross-check them.
RowEchelon rref_dense(const SparseRationalMatrix& m);
RowEchelon rref_sparse(const SparseRationalMatrix& m);
std::size_t rank_sparse(const SparseRationalMatrix& m);
constexpr std::size_t kDenseLimit = 64;
}  // namespace detail

}  // namespace anick
