#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rephom/exactlin/rational.hpp"

namespace rephom {

// Sorted by index, no explicit zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

void canonicalize(SparseVector& v);
SparseVector add_scaled(const SparseVector& a, const SparseVector& b, const Rational& scale);

struct MatrixEntry {
  std::size_t row;
  std::size_t col;
  Rational value;
};

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  // Duplicate positions are summed, zeros dropped, result is row-major.
  static SparseMatrix from_entries(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries);
  static SparseMatrix from_columns(std::size_t rows, const std::vector<SparseVector>& columns);
  static SparseMatrix from_rows(std::size_t cols, const std::vector<SparseVector>& rows);
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  const std::vector<MatrixEntry>& entries() const { return entries_; }

  Rational at(std::size_t r, std::size_t c) const;
  std::vector<SparseVector> row_vectors() const;
  std::vector<SparseVector> column_vectors() const;
  SparseMatrix transpose() const;
  SparseVector apply(const SparseVector& v) const;

  // row_perm[i] is the new index of old row i; likewise for columns.
  SparseMatrix permuted(const std::vector<std::size_t>& row_perm,
                        const std::vector<std::size_t>& col_perm) const;

  static SparseMatrix vstack(const std::vector<SparseMatrix>& blocks);

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MatrixEntry> entries_;
};

}  // namespace rephom
