#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "rephom/gca/derivation.hpp"
#include "rephom/groebner/buchberger.hpp"
#include "rephom/groupschemes/group_scheme.hpp"
#include "rephom/groupschemes/models.hpp"
#include "rephom/groupschemes/words.hpp"

using namespace rephom;
using namespace rephom::groupschemes;

namespace {

FreeGroupMap braid(std::size_t strands, std::vector<int> gens) { return artin_action({strands, std::move(gens)}); }

bool d_squared_ok(const DGModel& m) {
  gca::DSquaredOptions opt;
  opt.max_degree = 3;
  opt.cutoffs.aux_poly_degree = 2;
  return gca::check_d_squared(m.d, opt).ok;
}

// Polynomial of the ideal's ring from (variable name, exponent) monomials.
groebner::Polynomial poly(const groebner::PolyIdeal& ideal,
                          std::vector<std::pair<std::vector<std::pair<std::string, int>>, long>> terms) {
  std::vector<groebner::Term> ts;
  for (auto& [mono, c] : terms) {
    groebner::Exponents e(ideal.variables.size(), 0);
    for (auto& [name, k] : mono) {
      auto it = std::find(ideal.variables.begin(), ideal.variables.end(), name);
      REQUIRE(it != ideal.variables.end());
      e[static_cast<std::size_t>(it - ideal.variables.begin())] += k;
    }
    ts.push_back({e, Rational(c)});
  }
  return groebner::Polynomial::from_terms(ideal.variables.size(), std::move(ts));
}

}  // namespace

TEST_CASE("free group words") {
  std::vector<std::string> syms{"a", "b"};
  auto w = GroupWord::parse("a b a^-1 b^-1", syms);
  CHECK(w == commutator(GroupWord::generator(0), GroupWord::generator(1)));
  CHECK(GroupWord::parse("[a,b]", syms) == w);
  CHECK((w * w.inverse()).empty());
  CHECK(GroupWord::parse("a a^-1 b", syms) == GroupWord::generator(1));
  CHECK(w.exponent_sums(2) == std::vector<int>{0, 0});
  CHECK(GroupWord::parse("a^3 b^-2", syms).exponent_sums(2) == std::vector<int>{3, -2});
  CHECK(GroupWord::parse("a b^2", syms).power(2).to_string(syms) == "a b^2 a b^2");
  CHECK(oracle::error_kind([&] { GroupWord::parse("c", syms); }) == ErrorKind::InvalidInput);
}

TEST_CASE("Artin action satisfies the braid relations") {
  CHECK(braid(3, {1, 2, 1}) == braid(3, {2, 1, 2}));
  CHECK(braid(4, {1, 2, 1}) == braid(4, {2, 1, 2}));
  CHECK(braid(4, {2, 3, 2}) == braid(4, {3, 2, 3}));
  CHECK(braid(4, {1, 3}) == braid(4, {3, 1}));
  CHECK(braid(3, {1, -1}) == FreeGroupMap::identity(3));
  CHECK(braid(4, {-2, 3, 2, -3}) == braid(4, {-2, 3, 2, -3}));
  CHECK_FALSE(braid(3, {1, 2}) == braid(3, {2, 1}));
  // The product x_1 ... x_n is fixed by every braid.
  for (const auto& b : {braid(3, {1, 2, -1}), braid(4, {3, -2, 1, 1}), braid(2, {1, 1, 1})}) {
    auto n = b.images.size();
    GroupWord prod;
    for (std::size_t i = 0; i < n; ++i) prod = prod * GroupWord::generator(i);
    CHECK(b.apply(prod) == prod);
  }
}

TEST_CASE("group catalog") {
  CHECK(GroupSchemeData::parse("GL:2").dimension() == 4);
  CHECK(GroupSchemeData::parse("SL2").dimension() == 3);
  CHECK(GroupSchemeData::parse("Gm:2").dimension() == 2);
  CHECK(GroupSchemeData::parse("Ga").is_abelian());
  CHECK_FALSE(GroupSchemeData::parse("GL:2").is_abelian());
  CHECK(GroupSchemeData::from_json(R"({"kind":"GL","n":3})").n() == 3);
  CHECK(GroupSchemeData::parse("SL:2").lie_algebra().dim() == 3);
  CHECK(oracle::error_kind([] { GroupSchemeData::parse("SL:3").lie_algebra(); }) == ErrorKind::UnsupportedGroup);
  CHECK(oracle::error_kind([] { GroupSchemeData::parse("Sp:4"); }).has_value());
}

TEST_CASE("adjugate law for generic matrices") {
  for (int n : {2, 3}) {
    CoordinateRing ring(GroupSchemeData::general_linear(n), {"1"});
    auto X = ring.generic(0);
    auto adj = ring.adjugate(X);
    auto det = ring.det(X);
    auto left = ring.multiply(adj, X), right = ring.multiply(X, adj);
    const auto nn = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < nn; ++i)
      for (std::size_t j = 0; j < nn; ++j) {
        auto expect = i == j ? det : ring.algebra()->zero();
        CHECK(left.entries[i * nn + j] == expect);
        CHECK(right.entries[i * nn + j] == expect);
      }
  }
}

TEST_CASE("Koszul complexes of the augmentation ideal") {
  for (auto g : {GroupSchemeData::additive(2), GroupSchemeData::torus(1), GroupSchemeData::general_linear(2)}) {
    auto m = koszul_complex(g);
    CHECK(d_squared_ok(m));
  }
  CHECK(oracle::error_kind([] { koszul_complex(GroupSchemeData::special_linear(2)); }) ==
        ErrorKind::NoRegularSequence);
  CHECK(oracle::error_kind([] { surface_model(GroupSchemeData::special_linear(2), 1, true); }) ==
        ErrorKind::NoRegularSequence);
}

TEST_CASE("knot complements in R^3 with G_a look like S^1 v S^2") {
  // Additive coefficients only see rational homology; R^3 minus a knot has
  // b1 = b2 = 1, giving Q[t] in degree 0 and Q[t] e in degree 1 (e of weight 1).
  for (const auto& b : {BraidWord{1, {}}, BraidWord{2, {1, 1, 1}}, BraidWord{3, {1, -2, 1, -2}}}) {
    auto m = twisted_hochschild_complex(GroupSchemeData::additive(1), b);
    CHECK(d_squared_ok(m));
    auto t = model_homology(m, 3, 4);
    for (int w = 0; w <= 4; ++w) {
      CHECK(t.get(0, w) == 1);
      CHECK(t.get(1, w) == (w >= 1 ? 1u : 0u));
      CHECK(t.get(2, w) == 0);
    }
  }
}

TEST_CASE("Hopf link with G_a") {
  // b1 = b2 = 2: Q[t1, t2] (x) Lambda(e1, e2).
  auto m = twisted_hochschild_complex(GroupSchemeData::additive(1), {2, {1, 1}});
  auto t = model_homology(m, 3, 3);
  for (int w = 0; w <= 3; ++w) {
    CHECK(t.get(0, w) == static_cast<std::size_t>(w + 1));
    CHECK(t.get(1, w) == static_cast<std::size_t>(w >= 1 ? 2 * w : 0));
    CHECK(t.get(2, w) == static_cast<std::size_t>(w >= 2 ? w - 1 : 0));
  }
}

TEST_CASE("torus with G_m: zero differential and Laurent counts") {
  auto m = surface_model(GroupSchemeData::torus(1), 1, true);
  CHECK(m.d.is_zero());
  auto t = model_homology(m, 2, 4);
  for (int q = 0; q <= 1; ++q)
    for (int w = 0; w <= 4; ++w) CHECK(t.get(q, w) == static_cast<std::size_t>(w == 0 ? 1 : 4 * w));
  for (int w = 0; w <= 4; ++w) CHECK(t.get(2, w) == 0);
}

TEST_CASE("torus with GL2: degree-0 ideal is the commuting variety") {
  auto G = GroupSchemeData::general_linear(2);
  auto m = surface_model(G, 1, true);
  CHECK(d_squared_ok(m));
  CHECK(oracle::error_kind([&] { model_homology(m, 1, 1); }) == ErrorKind::UnsupportedForExactHomology);
  std::vector<std::string> syms{"a", "b"};
  auto direct = rep0_presentation(G, 2, {GroupWord::parse("[a,b]", syms)}, m.ring->labels());
  auto cmp = groebner::ideals_equal(model_degree0_ideal(m), direct);
  REQUIRE_FALSE(cmp.exhausted);
  CHECK(cmp.equal);
  auto other = rep0_presentation(G, 2, {GroupWord::parse("a b a b^-1", syms)}, m.ring->labels());
  CHECK_FALSE(groebner::ideals_equal(model_degree0_ideal(m), other).equal);
}

TEST_CASE("cyclic and projective-plane presentations with G_m") {
  auto Gm = GroupSchemeData::torus(1);
  auto z3 = rep0_presentation(Gm, 1, {GroupWord::generator(0, 3)});
  auto expect3 = groebner::PolyIdeal::make(
      z3.variables, {poly(z3, {{{{"z1", 3}}, 1}, {{}, -1}}), poly(z3, {{{{"z1", 1}, {"wz1", 1}}, 1}, {{}, -1}})});
  CHECK(groebner::ideals_equal(z3, expect3).equal);

  auto rp2 = surface_model(Gm, 1, false);
  CHECK_FALSE(rp2.d.is_zero());
  CHECK(oracle::error_kind([&] { model_homology(rp2, 1, 1); }) == ErrorKind::UnsupportedForExactHomology);
  auto deg0 = model_degree0_ideal(rp2);
  auto expect2 = groebner::PolyIdeal::make(
      deg0.variables,
      {poly(deg0, {{{{deg0.variables[0], 2}}, 1}, {{}, -1}}),
       poly(deg0, {{{{deg0.variables[0], 1}, {deg0.variables[1], 1}}, 1}, {{}, -1}})});
  CHECK(groebner::ideals_equal(deg0, expect2).equal);
}
