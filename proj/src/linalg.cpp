#include "anick/linalg.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "anick/errors.hpp"

namespace anick {

namespace {

using Row = SparseRationalMatrix::Row;

// row -= factor * pivot
void subtract_scaled(Row& row, const Row& pivot, const Rational& factor) {
  for (const auto& [c, v] : pivot) {
    auto [it, inserted] = row.try_emplace(c, -factor * v);
    if (!inserted) {
      it->second -= factor * v;
      if (it->second == 0) row.erase(it);
    }
  }
}

void normalize(Row& row) {
  Rational lead = row.begin()->second;
  if (lead == 1) return;
  for (auto& [c, v] : row) v /= lead;
}

void back_substitute(RowEchelon& e) {
  for (std::size_t i = e.rows.size(); i-- > 0;) {
    const std::size_t p = e.pivots[i];
    for (std::size_t k = 0; k < i; ++k) {
      auto it = e.rows[k].find(p);
      if (it == e.rows[k].end()) continue;
      Rational f = it->second;
      subtract_scaled(e.rows[k], e.rows[i], f);
    }
  }
}

// Forward elimination, one column at a time in increasing order. The pivot for
// a column is the candidate row with the fewest nonzeros (ties: smallest row
// index). Returns echelon rows in pivot order, not yet normalized.
RowEchelon forward_sparse(const SparseRationalMatrix& m) {
  std::vector<Row> rows;
  rows.reserve(m.row_count());
  std::map<std::size_t, std::set<std::size_t>> buckets;
  for (std::size_t r = 0; r < m.row_count(); ++r) {
    if (m.row(r).empty()) continue;
    rows.push_back(m.row(r));
    buckets[rows.back().begin()->first].insert(rows.size() - 1);
  }
  RowEchelon e;
  e.col_count = m.col_count();
  while (!buckets.empty()) {
    auto node = buckets.extract(buckets.begin());
    const std::size_t col = node.key();
    auto& cands = node.mapped();
    std::size_t piv = *cands.begin();
    for (std::size_t r : cands)
      if (rows[r].size() < rows[piv].size()) piv = r;
    const Rational lead = rows[piv].begin()->second;
    for (std::size_t r : cands) {
      if (r == piv) continue;
      Rational f = rows[r].begin()->second / lead;
      subtract_scaled(rows[r], rows[piv], f);
      if (!rows[r].empty()) buckets[rows[r].begin()->first].insert(r);
    }
    e.rows.push_back(std::move(rows[piv]));
    e.pivots.push_back(col);
  }
  return e;
}

}  // namespace

// ---------------------------------------------------------------------------

Rational RationalVector::get(std::size_t i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? Rational(0) : it->second;
}

void RationalVector::set(std::size_t i, const Rational& v) {
  if (i >= length_) throw PreconditionError("RationalVector index out of range");
  if (v == 0) {
    entries_.erase(i);
  } else {
    entries_[i] = v;
  }
}

void RationalVector::add(std::size_t i, const Rational& v) {
  if (i >= length_) throw PreconditionError("RationalVector index out of range");
  if (v == 0) return;
  auto [it, inserted] = entries_.try_emplace(i, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) entries_.erase(it);
  }
}

// ---------------------------------------------------------------------------

SparseRationalMatrix::SparseRationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols) {}

SparseRationalMatrix SparseRationalMatrix::from_dense(
    const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  SparseRationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw PreconditionError("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

SparseRationalMatrix SparseRationalMatrix::from_columns(
    std::size_t rows, std::span<const RationalVector> cols) {
  SparseRationalMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].length() != rows) throw PreconditionError("column length mismatch");
    for (const auto& [r, v] : cols[c].entries()) m.rows_[r].emplace(c, v);
  }
  return m;
}

void SparseRationalMatrix::check_index(std::size_t r, std::size_t c) const {
  if (r >= rows_.size() || c >= cols_)
    throw PreconditionError("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                            ") out of range");
}

std::size_t SparseRationalMatrix::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

Rational SparseRationalMatrix::get(std::size_t r, std::size_t c) const {
  check_index(r, c);
  auto it = rows_[r].find(c);
  return it == rows_[r].end() ? Rational(0) : it->second;
}

void SparseRationalMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  check_index(r, c);
  if (v == 0) {
    rows_[r].erase(c);
  } else {
    rows_[r][c] = v;
  }
}

void SparseRationalMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  check_index(r, c);
  if (v == 0) return;
  auto [it, inserted] = rows_[r].try_emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) rows_[r].erase(it);
  }
}

SparseRationalMatrix SparseRationalMatrix::transpose() const {
  SparseRationalMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace(r, v);
  return t;
}

RationalVector SparseRationalMatrix::multiply(const RationalVector& v) const {
  if (v.length() != cols_) throw PreconditionError("matrix-vector dimension mismatch");
  RationalVector out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rational acc = 0;
    for (const auto& [c, x] : rows_[r]) {
      auto it = v.entries().find(c);
      if (it != v.entries().end()) acc += x * it->second;
    }
    out.set(r, acc);
  }
  return out;
}

SparseRationalMatrix SparseRationalMatrix::multiply(const SparseRationalMatrix& rhs) const {
  if (rhs.row_count() != cols_) throw PreconditionError("matrix-matrix dimension mismatch");
  SparseRationalMatrix out(rows_.size(), rhs.col_count());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [k, a] : rows_[r])
      for (const auto& [c, b] : rhs.rows_[k]) out.add(r, c, a * b);
  return out;
}

// ---------------------------------------------------------------------------

namespace detail {

RowEchelon rref_dense(const SparseRationalMatrix& m) {
  const std::size_t nr = m.row_count(), nc = m.col_count();
  std::vector<std::vector<Rational>> a(nr, std::vector<Rational>(nc));
  for (std::size_t r = 0; r < nr; ++r)
    for (const auto& [c, v] : m.row(r)) a[r][c] = v;

  RowEchelon e;
  e.col_count = nc;
  std::size_t top = 0;
  for (std::size_t c = 0; c < nc && top < nr; ++c) {
    std::size_t piv = top;
    while (piv < nr && a[piv][c] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(a[piv], a[top]);
    const Rational lead = a[top][c];
    for (std::size_t k = c; k < nc; ++k) a[top][k] /= lead;
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == top || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = c; k < nc; ++k) a[r][k] -= f * a[top][k];
    }
    e.pivots.push_back(c);
    ++top;
  }
  for (std::size_t r = 0; r < top; ++r) {
    Row row;
    for (std::size_t c = 0; c < nc; ++c)
      if (a[r][c] != 0) row.emplace(c, a[r][c]);
    e.rows.push_back(std::move(row));
  }
  return e;
}

RowEchelon rref_sparse(const SparseRationalMatrix& m) {
  RowEchelon e = forward_sparse(m);
  for (auto& row : e.rows) normalize(row);
  back_substitute(e);
  return e;
}

std::size_t rank_sparse(const SparseRationalMatrix& m) { return forward_sparse(m).rows.size(); }

}  // namespace detail

RowEchelon reduced_row_echelon(const SparseRationalMatrix& m) {
  if (m.row_count() < detail::kDenseLimit && m.col_count() < detail::kDenseLimit)
    return detail::rref_dense(m);
  return detail::rref_sparse(m);
}

std::size_t rank(const SparseRationalMatrix& m) {
  if (m.row_count() < detail::kDenseLimit && m.col_count() < detail::kDenseLimit)
    return detail::rref_dense(m).rows.size();
  // Eliminating along the shorter side keeps the bucket structure small.
  if (m.col_count() > m.row_count()) return detail::rank_sparse(m.transpose());
  return detail::rank_sparse(m);
}

std::vector<RationalVector> nullspace_basis(const SparseRationalMatrix& m) {
  const RowEchelon e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.col_count(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.col_count(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.col_count());
    v.set(f, 1);
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      auto it = e.rows[i].find(f);
      if (it != e.rows[i].end()) v.set(e.pivots[i], -it->second);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_of_vectors(std::span<const RationalVector> vectors, std::size_t length) {
  if (vectors.empty()) return 0;
  // Vectors as rows: rank is the same and row count stays small.
  SparseRationalMatrix m = SparseRationalMatrix::from_columns(length, vectors).transpose();
  return rank(m);
}

std::size_t quotient_dim(std::span<const RationalVector> kernel_basis,
                         std::span<const RationalVector> image_generators) {
  std::size_t length = 0;
  if (!kernel_basis.empty()) {
    length = kernel_basis.front().length();
  } else if (!image_generators.empty()) {
    length = image_generators.front().length();
  }
  for (const auto& v : kernel_basis)
    if (v.length() != length) throw PreconditionError("quotient_dim: vector length mismatch");
  for (const auto& v : image_generators)
    if (v.length() != length) throw PreconditionError("quotient_dim: vector length mismatch");

  const std::size_t k = rank_of_vectors(kernel_basis, length);
  std::vector<RationalVector> all(kernel_basis.begin(), kernel_basis.end());
  all.insert(all.end(), image_generators.begin(), image_generators.end());
  if (rank_of_vectors(all, length) != k)
    throw StructuralError("quotient_dim: image is not contained in the kernel");
  return k - rank_of_vectors(image_generators, length);
}

}  // namespace anick
