#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rephom/error.hpp"
#include "rephom/gca/subcomplex.hpp"
#include "rephom/lie/current_lie.hpp"
#include "rephom/lie/free_lie.hpp"
#include "rephom/lie/lie_data.hpp"

using namespace rephom;
using namespace rephom::lie;

namespace {

// Graded dimensions of the free graded Lie algebra from the PBW identity
//   1 / (1 - sum_i t^{d_i}) = prod_{n odd} (1 + t^n)^{l_n} prod_{n even} (1 - t^n)^{-l_n}.
std::vector<long> pbw_dimensions(const std::vector<int>& degrees, int top) {
  std::vector<long> tensor(static_cast<std::size_t>(top) + 1, 0);
  tensor[0] = 1;
  for (int n = 1; n <= top; ++n)
    for (int d : degrees)
      if (d <= n) tensor[static_cast<std::size_t>(n)] += tensor[static_cast<std::size_t>(n - d)];
  std::vector<long> l(static_cast<std::size_t>(top) + 1, 0);
  std::vector<long> prod(static_cast<std::size_t>(top) + 1, 0);
  prod[0] = 1;
  for (int n = 1; n <= top; ++n) {
    // The unknown factor contributes l_n t^n at order n in either parity.
    l[static_cast<std::size_t>(n)] = tensor[static_cast<std::size_t>(n)] - prod[static_cast<std::size_t>(n)];
    for (long k = 0; k < l[static_cast<std::size_t>(n)]; ++k) {
      std::vector<long> next(prod.size(), 0);
      if (n % 2) {
        for (int i = 0; i <= top; ++i) {
          next[static_cast<std::size_t>(i)] += prod[static_cast<std::size_t>(i)];
          if (i + n <= top) next[static_cast<std::size_t>(i + n)] += prod[static_cast<std::size_t>(i)];
        }
      } else {
        for (int i = 0; i <= top; ++i)
          for (int j = i; j <= top; j += n) next[static_cast<std::size_t>(j)] += prod[static_cast<std::size_t>(i)];
      }
      prod = next;
    }
  }
  return l;
}

LieElement random_element(const FreeGradedLie& L, int degree, std::mt19937& rng) {
  LieElement x;
  for (auto id : L.basis_ids(degree))
    if (rng() % 2) x.add(id, Rational(static_cast<long>(rng() % 7) - 3));
  return x;
}

}  // namespace

TEST_CASE("free graded Lie dimensions match the PBW recursion") {
  for (const auto& degs : std::vector<std::vector<int>>{{1}, {1, 1}, {1, 2}, {2, 3}, {1, 3}, {3, 5}, {1, 1, 2}}) {
    const int top = 8;
    std::vector<LieGenerator> gens;
    for (std::size_t i = 0; i < degs.size(); ++i) gens.push_back({"v" + std::to_string(i), degs[i]});
    FreeGradedLie L(gens, top);
    auto expect = pbw_dimensions(degs, top);
    for (int n = 1; n <= top; ++n)
      CHECK_MESSAGE(static_cast<long>(L.basis_ids(n).size()) == expect[static_cast<std::size_t>(n)],
                    "degree " << n);
  }
}

TEST_CASE("even generators give the Witt dimensions") {
  for (int k = 1; k <= 3; ++k) {
    std::vector<LieGenerator> gens;
    for (int i = 0; i < k; ++i) gens.push_back({"x" + std::to_string(i), 2});
    FreeGradedLie L(gens, 10);
    for (int m = 1; m <= 5; ++m) CHECK(static_cast<long>(L.basis_ids(2 * m).size()) == oracle::witt(k, m));
  }
}

TEST_CASE("graded antisymmetry and Jacobi on random elements") {
  FreeGradedLie L({{"a", 1}, {"b", 2}, {"c", 3}}, 9);
  std::mt19937 rng(17);
  auto sgn = [](int e) { return (e % 2) ? Rational(-1) : Rational(1); };
  for (int trial = 0; trial < 25; ++trial) {
    int p = 1 + static_cast<int>(rng() % 3), q = 1 + static_cast<int>(rng() % 3), r = 1 + static_cast<int>(rng() % 3);
    auto x = random_element(L, p, rng), y = random_element(L, q, rng), z = random_element(L, r, rng);
    CHECK(L.bracket(x, y) == (Rational(-1) * sgn(p * q)) * L.bracket(y, x));
    auto j = sgn(p * r) * L.bracket(x, L.bracket(y, z)) + sgn(q * p) * L.bracket(y, L.bracket(z, x)) +
             sgn(r * q) * L.bracket(z, L.bracket(x, y));
    CHECK(j.is_zero());
    auto t = L.to_tensor(L.bracket(x, y));
    if (!t.is_zero()) CHECK(L.from_tensor(t, p + q) == L.bracket(x, y));
  }
}

TEST_CASE("odd squares do not vanish in a free graded Lie algebra") {
  FreeGradedLie L({{"a", 1}}, 4);
  auto a = L.generator(0);
  CHECK_FALSE(L.bracket(a, a).is_zero());
  CHECK(L.bracket(a, L.bracket(a, a)).is_zero());
  CHECK(L.bracket(L.bracket(a, a), L.bracket(a, a)).is_zero());
  FreeGradedLie M({{"a", 1}, {"b", 1}}, 2);
  CHECK_THROWS_AS(M.bracket(M.bracket(M.generator(0), M.generator(1)), M.generator(0)), Error);
}

TEST_CASE("projective space models square to zero") {
  for (int r = 2; r <= 4; ++r) {
    auto L = cp_model(r);
    CHECK(L.d_squared_zero());
    CHECK(L.generators().size() == static_cast<std::size_t>(r));
    CHECK(L.generators().back().degree == 2 * r - 1);
  }
  CHECK_THROWS_AS(cp_model(1), Error);
  auto L = cp_model(2);
  auto v1 = L.generator(0);
  CHECK(L.d(L.generator(1)) == Rational(1, 2) * L.bracket(v1, v1));
  auto w = sphere_wedge_model({2, 3}, 6);
  CHECK(w.has_zero_differential());
}

TEST_CASE("Lie expression parser") {
  FreeGradedLie L({{"x", 1}, {"y", 2}}, 5);
  auto e = parse_lie_expression(L, "[x,y] + 2*[y,x]");
  CHECK(e == Rational(-1) * L.bracket(L.generator(0), L.generator(1)));
  CHECK_THROWS_AS(parse_lie_expression(L, "[x,"), Error);
}

TEST_CASE("Lie algebra data") {
  auto sl2 = LieData::sl2();
  CHECK(sl2.dim() == 3);
  CHECK(sl2.has_form());
  CHECK(sl2.reductive());
  CHECK(LieData::abelian(3).is_abelian());
  CHECK(LieData::gl(2).dim() == 4);
  CHECK(LieData::builtin("gl:2").dim() == 4);
  auto round = LieData::from_json(sl2.to_json());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) CHECK(round.c(i, j, k) == sl2.c(i, j, k));
  // [x, y] = y, [x, z] = x violates nothing; [y, z] = y with [x,y]=z breaks Jacobi.
  CHECK_THROWS_AS(LieData::create({"x", "y", "z"}, {{0, 1, 2, 1}, {1, 2, 1, 1}, {0, 2, 0, 1}}), Error);
}

TEST_CASE("Chevalley-Eilenberg cohomology of sl2 and of current algebras") {
  auto sl2 = LieData::sl2();
  CurrentLie point(sl2, CoefficientAlgebra::ground_field());
  auto ce = ce_complex(point);
  CHECK(ce_d_squared_zero(ce));
  gca::HomologyRequest req;
  req.min_degree = -3;
  req.max_degree = 0;
  auto t = gca::homology_table(ce.d, req);
  CHECK(t.get(0) == 1);
  CHECK(t.get(-1) == 0);
  CHECK(t.get(-2) == 0);
  CHECK(t.get(-3) == 1);

  // sl2 (x) H~(S^2): Lambda-free part gives 1, 3, 3, 1 in degrees 0..3.
  CurrentLie s2(sl2, CoefficientAlgebra::truncated_polynomial(2, 1, false));
  auto ce2 = ce_complex(s2);
  CHECK(ce_d_squared_zero(ce2));
  gca::HomologyRequest r2;
  r2.max_degree = 4;
  auto t2 = gca::homology_table(ce2.d, r2);
  CHECK(t2.get(0) == 1);
  CHECK(t2.get(1) == 3);
  CHECK(t2.get(2) == 3);
  CHECK(t2.get(3) == 1);
  CHECK(t2.get(4) == 0);

  CurrentLie s2u(sl2, CoefficientAlgebra::truncated_polynomial(2, 1, true));
  auto rel = ce_relative(s2u);
  auto inv = gca::homology_table(rel.d, r2, rel.constraints());
  CHECK(inv.get(0) == 1);
  CHECK(inv.get(1) == 0);
  CHECK(inv.get(2) == 0);
  CHECK(inv.get(3) == 1);

  auto no_form = LieData::create({"x", "y"}, {{0, 1, 1, 1}});
  CurrentLie bad(no_form, CoefficientAlgebra::truncated_polynomial(2, 1, true));
  CHECK_THROWS_AS(ce_relative(bad), Error);
}
