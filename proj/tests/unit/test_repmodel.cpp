#include <doctest.h>

#include <memory>

#include "oracles.hpp"
#include "rephom/gca/subcomplex.hpp"
#include "rephom/groebner/buchberger.hpp"
#include "rephom/lie/free_lie.hpp"
#include "rephom/repmodel/invariants.hpp"
#include "rephom/repmodel/rep_complex.hpp"
#include "rephom/repmodel/trace.hpp"

using namespace rephom;
using namespace rephom::repmodel;

namespace {

std::vector<long> sym_series(std::size_t dim, int degree, int top) {
  return oracle::free_gca_series(std::vector<int>(dim, degree), top);
}

// Cauchy product of two truncated series.
std::vector<long> convolve(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

}  // namespace

TEST_CASE("spheres: representation homology is free on g^* shifted by n-1") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& g : {lie::LieData::abelian(1), lie::LieData::abelian(2), lie::LieData::sl2()}) {
      auto L = lie::sphere_wedge_model({n}, 6);
      auto rc = build_rep_complex(L, g);
      auto t = homology_table(rc, 6);
      auto expect = sym_series(g.dim(), n - 1, 6);
      for (int q = 0; q <= 6; ++q)
        CHECK_MESSAGE(static_cast<long>(t.get(q)) == expect[static_cast<std::size_t>(q)],
                      "S^" << n << " " << g.name() << " degree " << q);
    }
  }
}

TEST_CASE("wedge S^2 v S^3 with sl2 is the product of the sphere series") {
  auto L = lie::sphere_wedge_model({2, 3}, 6);
  auto rc = build_rep_complex(L, lie::LieData::sl2());
  auto t = homology_table(rc, 5);
  auto expect = convolve(sym_series(3, 1, 5), sym_series(3, 2, 5));
  for (int q = 0; q <= 5; ++q) CHECK(static_cast<long>(t.get(q)) == expect[static_cast<std::size_t>(q)]);
}

TEST_CASE("weighted tables for abelian targets") {
  auto L = lie::sphere_wedge_model({2}, 4);
  auto rc = build_rep_complex(L, lie::LieData::abelian(2));
  REQUIRE(rc.weighted());
  auto t = homology_table(rc, 2, 3);
  // Lambda on two degree-1 generators of weight 1.
  CHECK(t.get(0, 0) == 1);
  CHECK(t.get(1, 1) == 2);
  CHECK(t.get(2, 2) == 1);
  CHECK(t.get(1, 2) == 0);
  auto sl = build_rep_complex(L, lie::LieData::sl2());
  CHECK_FALSE(sl.weighted());
}

TEST_CASE("universal representation is a DG Lie map") {
  auto L = std::make_shared<lie::FreeGradedLie>(lie::cp_model(2, 5));
  RepComplex rc(L, lie::LieData::sl2());
  CHECK_FALSE(check_dg_lie_map(rc).has_value());
  gca::DSquaredOptions opt;
  opt.max_degree = 6;
  CHECK(gca::check_d_squared(rc.d(), opt).ok);
  RepComplex gl(L, lie::LieData::gl(2));
  CHECK_FALSE(check_dg_lie_map(gl).has_value());
}

TEST_CASE("coadjoint action commutes with d and represents g") {
  auto L = lie::cp_model(2);
  auto rc = build_rep_complex(L, lie::LieData::sl2());
  AdjointAction act(rc);
  CHECK(act.derivations().size() == 3);
  CHECK(act.commutes_with_differential());
  CHECK(act.satisfies_bracket_relations());
  CHECK_FALSE(act.is_invariant(rc.algebra()->gen("v1.h")));
}

TEST_CASE("invariant homology of S^2 with sl2") {
  auto L = lie::sphere_wedge_model({2}, 4);
  auto rc = build_rep_complex(L, lie::LieData::sl2());
  auto t = invariant_homology_table(rc, 4);
  CHECK(t.get(0) == 1);
  CHECK(t.get(1) == 0);
  CHECK(t.get(2) == 0);
  CHECK(t.get(3) == 1);
  auto no_reductive = build_rep_complex(L, lie::LieData::create({"x", "y"}, {{0, 1, 1, 1}}));
  CHECK(oracle::error_kind([&] { invariant_homology_table(no_reductive, 2); }) == ErrorKind::NotReductive);
}

TEST_CASE("quadratic trace on S^3") {
  auto L = lie::sphere_wedge_model({3}, 4);
  auto rc = build_rep_complex(L, lie::LieData::sl2());
  SymSquare sym(L);
  auto w = L.generator(0);
  auto chain = sym.product(w, w);
  CHECK(sym.degree(chain) == 4);
  CHECK(sym.closed_in_coinvariants(chain));
  auto tr = drinfeld_trace_quadratic(rc, chain);
  const auto& A = rc.algebra();
  // Trace form of sl2: B(e, f) = 1, B(h, h) = 2.
  auto e = A->gen("w1.e"), h = A->gen("w1.h"), f = A->gen("w1.f");
  CHECK(tr.value == Rational(2) * (e * f) + Rational(2) * (h * h));
  CHECK(tr.invariant);
  CHECK(tr.closed);
  CHECK_FALSE(gca::is_boundary(rc.d(), tr.value));

  auto ab = build_rep_complex(L, lie::LieData::create({"x", "y"}, {{0, 1, 1, 1}}));
  CHECK(oracle::error_kind([&] { drinfeld_trace_quadratic(ab, chain); }) == ErrorKind::NoInvariantForm);
}

TEST_CASE("odd squares vanish in Sym^2") {
  auto L = lie::sphere_wedge_model({2}, 3);
  SymSquare sym(L);
  auto v = L.generator(0);
  CHECK(sym.product(v, v).is_zero());
  auto vv = L.bracket(v, v);
  CHECK_FALSE(sym.product(v, vv).is_zero());
}

TEST_CASE("representation variety of an ordinary Lie algebra") {
  // Lie maps sl2 -> Q vanish, since sl2 is perfect.
  auto ideal = rep_algebra_presentation(lie::LieData::sl2(), lie::LieData::abelian(1));
  auto gb = groebner::groebner_basis(ideal);
  REQUIRE_FALSE(gb.exhausted);
  CHECK(gb.basis.size() == 3);
  for (const auto& p : gb.basis) CHECK(p.total_degree() == 1);
  // Every linear map from an abelian algebra to an abelian one is a Lie map.
  auto free_maps = rep_algebra_presentation(lie::LieData::abelian(2), lie::LieData::abelian(2));
  CHECK(groebner::groebner_basis(free_maps).basis.empty());
}
