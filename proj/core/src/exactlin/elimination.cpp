#include "rephom/exactlin/elimination.hpp"

#include <algorithm>
#include <numeric>

#include "rephom/error.hpp"

namespace rephom {

EchelonBasis::EchelonBasis(std::size_t dim) : dim_(dim), pivot_of_col_(dim, -1) {}

EchelonBasis::Row EchelonBasis::from_rational(const SparseVector& v) {
  Row r;
  BigInt den = 1;
  for (const auto& [i, x] : v) {
    if (sgn(x) == 0) continue;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  for (const auto& [i, x] : v) {
    if (sgn(x) == 0) continue;
    r.idx.push_back(i);
    r.val.push_back(x.get_num() * (den / x.get_den()));
  }
  make_primitive(r);
  return r;
}

void EchelonBasis::make_primitive(Row& r) {
  if (r.idx.empty()) return;
  BigInt g = 0;
  for (const auto& x : r.val) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(r.val.front()) < 0) g = -g;
  if (g != 1) {
    for (auto& x : r.val) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

// Cancels the entry of r at column `at` against the pivot row whose leading
// column is `at`.
EchelonBasis::Row EchelonBasis::combine(const Row& r, const Row& pivot, std::size_t at) {
  auto pos = std::lower_bound(r.idx.begin(), r.idx.end(), at) - r.idx.begin();
  const BigInt& rv = r.val[pos];
  const BigInt& pv = pivot.val.front();
  BigInt g;
  mpz_gcd(g.get_mpz_t(), rv.get_mpz_t(), pv.get_mpz_t());
  BigInt a = pv / g;  // multiplier for r
  BigInt b = rv / g;  // multiplier for pivot
  Row out;
  out.idx.reserve(r.idx.size() + pivot.idx.size());
  out.val.reserve(r.idx.size() + pivot.idx.size());
  std::size_t i = 0, j = 0;
  while (i < r.idx.size() || j < pivot.idx.size()) {
    if (j == pivot.idx.size() || (i < r.idx.size() && r.idx[i] < pivot.idx[j])) {
      out.idx.push_back(r.idx[i]);
      out.val.push_back(a * r.val[i]);
      ++i;
    } else if (i == r.idx.size() || pivot.idx[j] < r.idx[i]) {
      out.idx.push_back(pivot.idx[j]);
      out.val.push_back(-b * pivot.val[j]);
      ++j;
    } else {
      BigInt s = a * r.val[i] - b * pivot.val[j];
      if (sgn(s) != 0) {
        out.idx.push_back(r.idx[i]);
        out.val.push_back(std::move(s));
      }
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  return out;
}

std::size_t EchelonBasis::cost(const Row& r) {
  std::size_t bits = 0;
  for (const auto& x : r.val) bits += mpz_sizeinbase(x.get_mpz_t(), 2);
  return bits;
}

EchelonBasis::Row EchelonBasis::reduce(Row r) const {
  while (!r.idx.empty()) {
    long p = pivot_of_col_[r.idx.front()];
    if (p < 0) break;
    r = combine(r, rows_[static_cast<std::size_t>(p)], r.idx.front());
  }
  return r;
}

bool EchelonBasis::insert(const SparseVector& v) {
  for (const auto& [i, x] : v) {
    if (i >= dim_) fail(ErrorKind::DimensionMismatch, "vector index out of range");
  }
  Row r = from_rational(v);
  while (!r.idx.empty()) {
    std::size_t lead = r.idx.front();
    long p = pivot_of_col_[lead];
    if (p < 0) {
      pivot_of_col_[lead] = static_cast<long>(rows_.size());
      rows_.push_back(std::move(r));
      return true;
    }
    Row& pivot = rows_[static_cast<std::size_t>(p)];
    // Keep the cheaper row as pivot; the displaced one is reduced instead.
    if (cost(r) < cost(pivot)) std::swap(r, pivot);
    r = combine(r, pivot, lead);
  }
  return false;
}

bool EchelonBasis::contains(const SparseVector& v) const {
  return reduce(from_rational(v)).idx.empty();
}

std::vector<std::size_t> EchelonBasis::pivot_columns() const {
  std::vector<std::size_t> cols;
  for (const auto& r : rows_) cols.push_back(r.idx.front());
  std::sort(cols.begin(), cols.end());
  return cols;
}

std::vector<SparseVector> EchelonBasis::orthogonal_complement() const {
  // Reduced row echelon form: clear every non-leading pivot-column entry,
  // working from the last pivot backwards.
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rows_[a].idx.front() > rows_[b].idx.front(); });
  std::vector<Row> reduced(rows_.size());
  for (std::size_t k : order) {
    Row r = rows_[k];
    for (;;) {
      std::size_t hit = 0;
      bool found = false;
      for (std::size_t t = 1; t < r.idx.size(); ++t) {
        long p = pivot_of_col_[r.idx[t]];
        if (p >= 0) {
          hit = r.idx[t];
          found = true;
          break;
        }
      }
      if (!found) break;
      std::size_t p = static_cast<std::size_t>(pivot_of_col_[hit]);
      r = combine(r, reduced[p], hit);
    }
    reduced[k] = std::move(r);
  }

  std::vector<SparseVector> by_free_col(dim_);
  for (const auto& r : reduced) {
    const BigInt& lead = r.val.front();
    for (std::size_t t = 1; t < r.idx.size(); ++t) {
      Rational c(-r.val[t], lead);
      c.canonicalize();
      by_free_col[r.idx[t]].emplace_back(r.idx.front(), std::move(c));
    }
  }
  std::vector<SparseVector> out;
  for (std::size_t f = 0; f < dim_; ++f) {
    if (pivot_of_col_[f] >= 0) continue;
    SparseVector v = std::move(by_free_col[f]);
    v.emplace_back(f, Rational(1));
    canonicalize(v);
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t rank_of_vectors(const std::vector<SparseVector>& vectors, std::size_t dim) {
  std::vector<std::size_t> order(vectors.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return vectors[a].size() < vectors[b].size(); });
  EchelonBasis e(dim);
  for (std::size_t i : order) {
    e.insert(vectors[i]);
    if (e.rank() == dim) break;
  }
  return e.rank();
}

std::size_t rank(const SparseMatrix& m) {
  if (m.rows() <= m.cols()) return rank_of_vectors(m.row_vectors(), m.cols());
  return rank_of_vectors(m.column_vectors(), m.rows());
}

RankKernel rank_and_kernel(const SparseMatrix& m) {
  auto rows = m.row_vectors();
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rows[a].size() < rows[b].size(); });
  EchelonBasis e(m.cols());
  for (std::size_t i : order) e.insert(rows[i]);
  return {e.rank(), e.orthogonal_complement()};
}

}  // namespace rephom
