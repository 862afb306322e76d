#pragma once

// Small reference implementations used as independent oracles by the unit
// tests. They are deliberately naive: dense matrices, explicit fractions,
// and closed-form counting formulas.

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "rephom/error.hpp"
#include "rephom/exactlin/rational.hpp"
#include "rephom/exactlin/sparse_matrix.hpp"

namespace oracle {

using rephom::Rational;
using Dense = std::vector<std::vector<Rational>>;

inline Dense dense(const rephom::SparseMatrix& m) {
  Dense d(m.rows(), std::vector<Rational>(m.cols(), 0));
  for (const auto& e : m.entries()) d[e.row][e.col] = e.value;
  return d;
}

// Textbook Gauss-Jordan over Q.
inline std::size_t rank(Dense a) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

inline rephom::SparseMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density,
                                          int range = 5) {
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> v(-range, range);
  std::vector<rephom::MatrixEntry> e;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (u(rng) < density) e.push_back({i, j, Rational(v(rng), 1 + std::abs(v(rng)))});
  return rephom::SparseMatrix::from_entries(rows, cols, std::move(e));
}

inline long binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Coefficients of prod_i (1 + t^{a_i}) for odd a_i and 1/(1 - t^{a_i}) for
// even a_i, truncated at degree top: the Poincare series of the free graded
// commutative algebra on generators of degrees a_i >= 1.
inline std::vector<long> free_gca_series(const std::vector<int>& degrees, int top) {
  std::vector<long> s(static_cast<std::size_t>(top) + 1, 0);
  s[0] = 1;
  for (int a : degrees) {
    std::vector<long> next(s.size(), 0);
    if (a % 2 != 0) {
      for (int d = 0; d <= top; ++d) {
        next[d] += s[d];
        if (d + a <= top) next[d + a] += s[d];
      }
    } else {
      for (int d = 0; d <= top; ++d)
        for (int k = d; k <= top; k += a) next[k] += s[d];
    }
    s = std::move(next);
  }
  return s;
}

// Moebius function.
inline int mobius(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  if (n > 1) m = -m;
  return m;
}

// Witt's formula: dimension of the degree-n part of the free Lie algebra on
// k generators of degree 1 (ungraded).
inline long witt(int k, int n) {
  long s = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    long p = 1;
    for (int i = 0; i < n / d; ++i) p *= k;
    s += mobius(d) * p;
  }
  return s / n;
}

// Kind of the rephom::Error thrown by f, if any.
template <class F>
std::optional<rephom::ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const rephom::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace oracle
