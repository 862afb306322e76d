#pragma once

#include <cstddef>
#include <vector>

#include "rephom/exactlin/sparse_matrix.hpp"

namespace rephom {

struct RankKernel {
  std::size_t rank = 0;
  // One vector per pivot-free column f, with coordinate f equal to 1 and
  // zero on every other free column.
  std::vector<SparseVector> kernel;
};

std::size_t rank(const SparseMatrix& m);
RankKernel rank_and_kernel(const SparseMatrix& m);

// Rank of the span of the given vectors inside a space of dimension `dim`.
std::size_t rank_of_vectors(const std::vector<SparseVector>& vectors, std::size_t dim);

// Incremental row echelon form over the integers. Rows are kept primitive
// (content 1, positive leading entry), so coefficient growth stays bounded by
// the data rather than by the elimination history.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim);

  // Returns true when v is independent of the rows inserted so far.
  bool insert(const SparseVector& v);
  bool contains(const SparseVector& v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dimension() const { return dim_; }

  // Pivot columns in increasing order.
  std::vector<std::size_t> pivot_columns() const;

  // Basis of {x : <row, x> = 0 for all inserted rows}, unit coordinates on
  // the non-pivot columns.
  std::vector<SparseVector> orthogonal_complement() const;

 private:
  struct Row {
    std::vector<std::size_t> idx;
    std::vector<BigInt> val;
  };

  static Row from_rational(const SparseVector& v);
  static void make_primitive(Row& r);
  static Row combine(const Row& r, const Row& pivot, std::size_t at);
  static std::size_t cost(const Row& r);
  Row reduce(Row r) const;

  std::size_t dim_;
  std::vector<Row> rows_;
  std::vector<long> pivot_of_col_;
};

}  // namespace rephom
