#include "rephom/exactlin/sparse_matrix.hpp"

#include <algorithm>
#include <map>

#include "rephom/error.hpp"

namespace rephom {

void canonicalize(SparseVector& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  out.reserve(v.size());
  for (auto& [i, x] : v) {
    if (!out.empty() && out.back().first == i) {
      out.back().second += x;
      if (sgn(out.back().second) == 0) out.pop_back();
    } else if (sgn(x) != 0) {
      out.emplace_back(i, std::move(x));
    }
  }
  v = std::move(out);
}

SparseVector add_scaled(const SparseVector& a, const SparseVector& b, const Rational& scale) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, scale * b[j].second);
      ++j;
    } else {
      Rational s = a[i].second + scale * b[j].second;
      if (sgn(s) != 0) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

SparseMatrix SparseMatrix::from_entries(std::size_t rows, std::size_t cols,
                                        std::vector<MatrixEntry> entries) {
  SparseMatrix m(rows, cols);
  for (const auto& e : entries) {
    if (e.row >= rows || e.col >= cols) fail(ErrorKind::DimensionMismatch, "matrix entry out of range");
  }
  std::sort(entries.begin(), entries.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (auto& e : entries) {
    if (!m.entries_.empty() && m.entries_.back().row == e.row && m.entries_.back().col == e.col) {
      m.entries_.back().value += e.value;
      if (sgn(m.entries_.back().value) == 0) m.entries_.pop_back();
    } else if (sgn(e.value) != 0) {
      m.entries_.push_back(std::move(e));
    }
  }
  return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, const std::vector<SparseVector>& columns) {
  std::vector<MatrixEntry> entries;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [r, x] : columns[c]) entries.push_back({r, c, x});
  }
  return from_entries(rows, columns.size(), std::move(entries));
}

SparseMatrix SparseMatrix::from_rows(std::size_t cols, const std::vector<SparseVector>& rows) {
  std::vector<MatrixEntry> entries;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, x] : rows[r]) entries.push_back({r, c, x});
  }
  return from_entries(rows.size(), cols, std::move(entries));
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_.push_back({i, i, Rational(1)});
  return m;
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{r, c},
                             [](const MatrixEntry& e, const std::pair<std::size_t, std::size_t>& k) {
                               return e.row != k.first ? e.row < k.first : e.col < k.second;
                             });
  if (it != entries_.end() && it->row == r && it->col == c) return it->value;
  return Rational(0);
}

std::vector<SparseVector> SparseMatrix::row_vectors() const {
  std::vector<SparseVector> out(rows_);
  for (const auto& e : entries_) out[e.row].emplace_back(e.col, e.value);
  return out;
}

std::vector<SparseVector> SparseMatrix::column_vectors() const {
  std::vector<SparseVector> out(cols_);
  for (const auto& e : entries_) out[e.col].emplace_back(e.row, e.value);
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<MatrixEntry> t;
  t.reserve(entries_.size());
  for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
  return from_entries(cols_, rows_, std::move(t));
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  std::vector<Rational> dense_v(cols_);
  for (const auto& [i, x] : v) {
    if (i >= cols_) fail(ErrorKind::DimensionMismatch, "vector index out of range");
    dense_v[i] = x;
  }
  std::map<std::size_t, Rational> acc;
  for (const auto& e : entries_) {
    if (sgn(dense_v[e.col]) != 0) acc[e.row] += e.value * dense_v[e.col];
  }
  SparseVector out;
  for (auto& [i, x] : acc) {
    if (sgn(x) != 0) out.emplace_back(i, std::move(x));
  }
  return out;
}

SparseMatrix SparseMatrix::permuted(const std::vector<std::size_t>& row_perm,
                                    const std::vector<std::size_t>& col_perm) const {
  if (row_perm.size() != rows_ || col_perm.size() != cols_) {
    fail(ErrorKind::DimensionMismatch, "permutation size");
  }
  std::vector<MatrixEntry> p;
  p.reserve(entries_.size());
  for (const auto& e : entries_) p.push_back({row_perm[e.row], col_perm[e.col], e.value});
  return from_entries(rows_, cols_, std::move(p));
}

SparseMatrix SparseMatrix::vstack(const std::vector<SparseMatrix>& blocks) {
  if (blocks.empty()) return {};
  std::size_t cols = blocks.front().cols_;
  std::size_t offset = 0;
  std::vector<MatrixEntry> all;
  for (const auto& b : blocks) {
    if (b.cols_ != cols) fail(ErrorKind::DimensionMismatch, "vstack column count");
    for (const auto& e : b.entries_) all.push_back({e.row + offset, e.col, e.value});
    offset += b.rows_;
  }
  return from_entries(offset, cols, std::move(all));
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::DimensionMismatch, "matrix product shapes");
  auto b_rows = b.row_vectors();
  std::vector<MatrixEntry> out;
  std::size_t i = 0;
  while (i < a.entries_.size()) {
    std::size_t r = a.entries_[i].row;
    std::map<std::size_t, Rational> acc;
    for (; i < a.entries_.size() && a.entries_[i].row == r; ++i) {
      const auto& e = a.entries_[i];
      for (const auto& [c, x] : b_rows[e.col]) acc[c] += e.value * x;
    }
    for (auto& [c, x] : acc) {
      if (sgn(x) != 0) out.push_back({r, c, std::move(x)});
    }
  }
  SparseMatrix m(a.rows_, b.cols_);
  m.entries_ = std::move(out);
  return m;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    const auto& x = a.entries_[i];
    const auto& y = b.entries_[i];
    if (x.row != y.row || x.col != y.col || x.value != y.value) return false;
  }
  return true;
}

}  // namespace rephom
