#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rephom/error.hpp"
#include "rephom/exactlin/chain.hpp"
#include "rephom/exactlin/elimination.hpp"

using namespace rephom;

TEST_CASE("rank agrees with dense Gauss-Jordan on random sparse matrices") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + rng() % 14, cols = 1 + rng() % 14;
    double density = 0.1 + 0.1 * (trial % 6);
    auto m = oracle::random_matrix(rng, rows, cols, density);
    CHECK(rank(m) == oracle::rank(oracle::dense(m)));
  }
}

TEST_CASE("rank of structured low-rank products") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t k = 1 + rng() % 4;
    auto a = oracle::random_matrix(rng, 12, k, 0.9);
    auto b = oracle::random_matrix(rng, k, 15, 0.9);
    auto m = a * b;
    auto r = rank(m);
    CHECK(r <= k);
    CHECK(r == oracle::rank(oracle::dense(m)));
  }
}

TEST_CASE("kernel vectors are annihilated and count is cols - rank") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = oracle::random_matrix(rng, 1 + rng() % 10, 1 + rng() % 12, 0.35);
    auto rk = rank_and_kernel(m);
    CHECK(rk.rank == oracle::rank(oracle::dense(m)));
    CHECK(rk.kernel.size() == m.cols() - rk.rank);
    for (const auto& v : rk.kernel) CHECK(m.apply(v).empty());
    CHECK(rank_of_vectors(rk.kernel, m.cols()) == rk.kernel.size());
  }
}

TEST_CASE("echelon basis membership and orthogonal complement") {
  EchelonBasis e(4);
  CHECK(e.insert({{0, Rational(2)}, {1, Rational(4)}}));
  CHECK(e.insert({{1, Rational(1)}, {3, Rational(-1)}}));
  CHECK_FALSE(e.insert({{0, Rational(1)}, {1, Rational(3)}, {3, Rational(-1)}}));
  CHECK(e.contains({{0, Rational(1)}, {1, Rational(2)}}));
  CHECK_FALSE(e.contains({{2, Rational(1)}}));
  CHECK(e.rank() == 2);
  auto comp = e.orthogonal_complement();
  CHECK(comp.size() == 2);
}

TEST_CASE("large entries stay exact") {
  // Hilbert-type matrix: full rank, with rapidly growing denominators.
  std::vector<MatrixEntry> e;
  const std::size_t n = 9;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e.push_back({i, j, Rational(1, static_cast<unsigned long>(i + j + 1))});
  auto h = SparseMatrix::from_entries(n, n, e);
  CHECK(rank(h) == n);
}

TEST_CASE("homology_dimension of a short exact sequence") {
  // 0 -> Q -> Q^2 -> Q -> 0: homology vanishes in the middle.
  auto in = ChainSlice(1, std::nullopt, SparseMatrix::from_entries(2, 1, {{0, 0, Rational(1)}, {1, 0, Rational(1)}}));
  auto out = ChainSlice(0, std::nullopt, SparseMatrix::from_entries(1, 2, {{0, 0, Rational(1)}, {0, 1, Rational(-1)}}));
  CHECK(homology_dimension(in, out) == 0);
}

TEST_CASE("Betti table trusted range and serialization") {
  BettiTable t(TrustedRange{3, 2});
  t.set(0, 0, 1);
  t.set(1, 1, 3);
  CHECK(t.get(1, 1) == 3);
  CHECK(t.get(2, 2) == 0);
  CHECK_THROWS_AS(t.set(4, 0, 1), Error);
  auto back = BettiTable::from_json(t.to_json());
  CHECK(back == t);
  CHECK(t.restricted(TrustedRange{0, 0}).get(1, 1) == 0);
  BettiTable u(TrustedRange{4, std::nullopt});
  u.set(0, std::nullopt, 1);
  u.set(3, std::nullopt, 2);
  CHECK(poincare_series(u).to_string() == "1 + 2t^3 + O(t^5)");
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
}
