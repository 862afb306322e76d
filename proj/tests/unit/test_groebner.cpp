#include <doctest.h>

#include <random>

#include "rephom/error.hpp"
#include "rephom/gca/algebra.hpp"
#include "rephom/groebner/bridge.hpp"
#include "rephom/groebner/buchberger.hpp"

using namespace rephom;
using namespace rephom::groebner;

namespace {

Polynomial poly(std::vector<std::pair<Exponents, long>> terms) {
  std::size_t n = terms.front().first.size();
  std::vector<Term> ts;
  for (auto& [e, c] : terms) ts.push_back({e, Rational(c)});
  return Polynomial::from_terms(n, std::move(ts));
}

Polynomial random_poly(std::mt19937& rng, std::size_t nvars, int max_deg, int nterms) {
  std::vector<Term> ts;
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int t = 0; t < nterms; ++t) {
    Exponents e(nvars, 0);
    int budget = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    for (int k = 0; k < budget; ++k) ++e[rng() % nvars];
    ts.push_back({e, Rational(coef(rng))});
  }
  return Polynomial::from_terms(nvars, std::move(ts));
}

bool is_reduced(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].leading().coeff != 1) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : basis[i].terms())
        if (divides(basis[j].leading().exps, t.exps)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("degree reverse lexicographic order") {
  CHECK(degrevlex_greater({2, 0, 0}, {1, 1, 0}));
  CHECK(degrevlex_greater({1, 1, 0}, {0, 2, 0}));
  CHECK(degrevlex_greater({0, 2, 0}, {1, 0, 1}));
  CHECK(degrevlex_greater({0, 3, 0}, {1, 0, 2}));
  CHECK(degrevlex_greater({0, 0, 3}, {2, 0, 0}));
  CHECK_FALSE(degrevlex_greater({1, 1, 0}, {1, 1, 0}));
}

TEST_CASE("twisted cubic") {
  // y - x^2, z - x^3 in degrevlex with x > y > z.
  auto f = poly({{{0, 1, 0}, 1}, {{2, 0, 0}, -1}});
  auto g = poly({{{0, 0, 1}, 1}, {{3, 0, 0}, -1}});
  auto res = groebner_basis(PolyIdeal::make({"x", "y", "z"}, {f, g}));
  REQUIRE_FALSE(res.exhausted);
  CHECK(res.basis.size() == 3);
  CHECK(satisfies_buchberger_criterion(res.basis));
  CHECK(is_reduced(res.basis));
  auto y2_xz = poly({{{0, 2, 0}, 1}, {{1, 0, 1}, -1}});
  auto xy_z = poly({{{1, 1, 0}, 1}, {{0, 0, 1}, -1}});
  auto x2_y = poly({{{2, 0, 0}, 1}, {{0, 1, 0}, -1}});
  for (const auto& p : {y2_xz, xy_z, x2_y}) CHECK(normal_form(p, res.basis).is_zero());
  CHECK(normal_form(poly({{{3, 0, 0}, 1}}), res.basis) == poly({{{0, 0, 1}, 1}}));
}

TEST_CASE("normal form is reduced and idempotent on random ideals") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_poly(rng, 3, 2, 3));
    auto ideal = PolyIdeal::make({"x", "y", "z"}, gens);
    auto res = groebner_basis(ideal);
    REQUIRE_FALSE(res.exhausted);
    CHECK(satisfies_buchberger_criterion(res.basis));
    CHECK(is_reduced(res.basis));
    for (const auto& g : ideal.generators) CHECK(normal_form(g, res.basis).is_zero());
    Polynomial member(3);
    for (const auto& g : ideal.generators) member = member + random_poly(rng, 3, 2, 2) * g;
    CHECK(normal_form(member, res.basis).is_zero());
    auto p = random_poly(rng, 3, 4, 5);
    auto r = normal_form(p, res.basis);
    CHECK(normal_form(r, res.basis) == r);
    for (const auto& t : r.terms())
      for (const auto& b : res.basis) CHECK_FALSE(divides(b.leading().exps, t.exps));
    CHECK(normal_form(p - r, res.basis).is_zero());
  }
}

TEST_CASE("ideal equality") {
  auto x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  auto a = PolyIdeal::make({"x", "y"}, {x, y});
  auto b = PolyIdeal::make({"x", "y"}, {x + y, x - y});
  auto c = PolyIdeal::make({"x", "y"}, {x * x, y});
  CHECK(ideals_equal(a, b).equal);
  CHECK_FALSE(ideals_equal(a, c).equal);
  auto one = PolyIdeal::make({"x", "y"}, {x * y - Polynomial::constant(2, 1), x});
  auto res = groebner_basis(one);
  REQUIRE(res.basis.size() == 1);
  CHECK(res.basis[0] == Polynomial::constant(2, 1));
}

TEST_CASE("effort cap reports exhaustion") {
  std::mt19937 rng(9);
  std::vector<Polynomial> gens;
  for (int k = 0; k < 4; ++k) gens.push_back(random_poly(rng, 4, 3, 4));
  auto res = groebner_basis(PolyIdeal::make({"a", "b", "c", "d"}, gens), 1);
  CHECK(res.exhausted);
  CHECK(res.basis.empty());
}

TEST_CASE("bridge from graded commutative algebras") {
  auto alg = gca::GradedCommAlgebra::create({{"u", 0, {}}, {"v", 2, {}}, {"e", 1, {}}});
  auto p = to_polynomial(alg->gen("u") * alg->gen("v") + alg->constant(3));
  CHECK(p.nvars() == 3);
  CHECK(p.total_degree() == 2);
  CHECK_THROWS_AS(to_polynomial(alg->gen("e")), Error);
}
