#include <doctest.h>

#include "oracles.hpp"
#include "rephom/groebner/buchberger.hpp"
#include "rephom/groupschemes/models.hpp"
#include "rephom/simplicial/loop_group.hpp"
#include "rephom/simplicial/pipeline.hpp"
#include "rephom/simplicial/simplicial_set.hpp"

using namespace rephom;
using namespace rephom::simplicial;
using groupschemes::GroupSchemeData;

namespace {

using Set = FiniteSimplicialSet;

void check_levels(const Set& x, std::size_t top, auto expected) {
  for (std::size_t m = 0; m <= top; ++m)
    CHECK_MESSAGE(static_cast<long>(x.level(m).size()) == expected(static_cast<long>(m)), "level " << m);
}

}  // namespace

TEST_CASE("surjections are counted by binomials") {
  for (std::size_t m = 0; m <= 6; ++m)
    for (std::size_t k = 0; k <= m; ++k)
      CHECK(static_cast<long>(surjections(m, k).size()) ==
            oracle::binomial(static_cast<long>(m), static_cast<long>(k)));
}

TEST_CASE("level sizes of standard sets") {
  check_levels(Set::point(), 4, [](long) { return 1L; });
  for (int n = 1; n <= 3; ++n)
    check_levels(Set::sphere(n), 5, [n](long m) { return 1 + oracle::binomial(m, n); });
  check_levels(Set::suspension(Set::sphere(1)), 5, [](long m) { return 1 + oracle::binomial(m, 2); });
  check_levels(Set::suspension(Set::plus_point(Set::point())), 5, [](long m) { return 1 + m; });
  check_levels(Set::wedge(Set::sphere(1), Set::sphere(2)), 5,
               [](long m) { return 1 + m + oracle::binomial(m, 2); });
  check_levels(Set::plus_point(Set::sphere(1)), 4, [](long m) { return 2 + m; });
  auto bz3 = Set::classifying_cyclic(3, 4);
  check_levels(bz3, 4, [](long m) {
    long p = 1;
    for (long i = 0; i < m; ++i) p *= 3;
    return p;
  });
  CHECK(oracle::error_kind([&] { bz3.level(5); }) == ErrorKind::CutoffExceeded);
}

TEST_CASE("simplicial identities hold") {
  for (const auto& x : {Set::sphere(2), Set::suspension(Set::sphere(2)), Set::wedge(Set::sphere(1), Set::sphere(1)),
                        Set::plus_point(Set::sphere(1)), Set::classifying_cyclic(2, 4)})
    CHECK_FALSE(x.check_identities(4).has_value());
}

TEST_CASE("faces and degeneracies of a degenerate simplex") {
  auto s2 = Set::sphere(2);
  auto top = s2.cell_simplex(2, 0);
  auto s = s2.degeneracy(top, 1);
  CHECK(s.dim() == 3);
  CHECK_FALSE(s.nondegenerate());
  CHECK(s2.face(s, 1) == top);
  CHECK(s2.face(s, 2) == top);
  CHECK(s2.is_basepoint(s2.face(s, 0)));
  CHECK(s2.face(s2.face(top, 0), 0) == s2.basepoint(0));
}

TEST_CASE("JSON round trip") {
  auto x = Set::wedge(Set::sphere(1), Set::suspension(Set::sphere(1)));
  auto y = Set::from_json(x.to_json());
  for (std::size_t m = 0; m <= 4; ++m) CHECK(x.level(m) == y.level(m));
  auto z = Set::from_json(R"({"cells":[{"name":"*","dim":0},{"name":"e","dim":1,"faces":["*","*"]},
    {"name":"f","dim":2,"faces":["e",{"cell":"*","degeneracies":[0]},"e"]}]})");
  CHECK_FALSE(z.check_identities(3).has_value());
  CHECK(z.level(2).size() == 4);
  CHECK(oracle::error_kind([] {
          Set::from_json(R"({"cells":[{"name":"*","dim":0},{"name":"a","dim":0},{"name":"e","dim":1,"faces":["*","a"]},
            {"name":"f","dim":2,"faces":["e","e","e"]}]})");
        }).has_value());
}

TEST_CASE("Kan loop group ranks and identities") {
  for (int n = 1; n <= 3; ++n) {
    auto g = kan_loop_group(Set::sphere(n), 4);
    CHECK_FALSE(g.check_identities().has_value());
    for (std::size_t k = 0; k <= 4; ++k)
      CHECK(static_cast<long>(g.rank(k)) ==
            oracle::binomial(static_cast<long>(k) + 1, n) - oracle::binomial(static_cast<long>(k), n));
  }
  CHECK(oracle::error_kind([] { kan_loop_group(Set::plus_point(Set::point()), 2); }) == ErrorKind::NotReduced);
}

TEST_CASE("Milnor's construction agrees with the loop group of the suspension") {
  for (const auto& k : {Set::plus_point(Set::point()), Set::sphere(1), Set::wedge(Set::sphere(1), Set::sphere(1)),
                        Set::sphere(2)}) {
    auto fk = milnor_fk(k, 3);
    CHECK_FALSE(fk.check_identities().has_value());
    for (std::size_t n = 0; n <= 3; ++n) CHECK(fk.rank(n) + 1 == k.level(n).size());
    CHECK_FALSE(compare_milnor_with_kan(k, 3).has_value());
  }
}

TEST_CASE("representation homology of spheres with G_a") {
  auto s1 = simplicial_hr(Set::sphere(1), GroupSchemeData::additive(1), 2, 4);
  for (int w = 0; w <= 4; ++w) {
    CHECK(s1.get(0, w) == 1);
    CHECK(s1.get(1, w) == 0);
  }
  for (auto form : {Normalization::KernelIntersection, Normalization::DegenerateQuotient}) {
    auto s2 = simplicial_hr(Set::sphere(2), GroupSchemeData::additive(2), 2, 3, form);
    CHECK(s2.get(0, 0) == 1);
    CHECK(s2.get(1, 1) == 2);
    CHECK(s2.get(2, 2) == 1);
    std::size_t total = 0;
    for (const auto& [slot, dim] : s2.entries()) total += dim;
    CHECK(total == 4);
  }
  CHECK(oracle::error_kind([] { simplicial_hr(Set::sphere(2), GroupSchemeData::torus(1), 1, 1); }) ==
        ErrorKind::UnsupportedGroup);
}

TEST_CASE("both normalizations agree") {
  for (const auto& x : {Set::sphere(2), Set::wedge(Set::sphere(1), Set::sphere(2))}) {
    auto a = simplicial_hr(x, GroupSchemeData::additive(1), 2, 3, Normalization::KernelIntersection);
    auto b = simplicial_hr(x, GroupSchemeData::additive(1), 2, 3, Normalization::DegenerateQuotient);
    CHECK(a == b);
  }
  auto l1 = loday_homology(Set::sphere(2), 1, 2, 3, Normalization::KernelIntersection);
  auto l2 = loday_homology(Set::sphere(2), 1, 2, 3, Normalization::DegenerateQuotient);
  CHECK(l1 == l2);
}

TEST_CASE("higher Hochschild homology of Q[t]") {
  // Along S^1: Q[t] (+) Q[t] dt; along S^2: Q[t] (x) Q[dt] with |dt| = 2.
  auto c = loday_homology(Set::sphere(1), 1, 2, 4);
  for (int w = 0; w <= 4; ++w) {
    CHECK(c.get(0, w) == 1);
    CHECK(c.get(1, w) == (w >= 1 ? 1u : 0u));
    CHECK(c.get(2, w) == 0);
  }
  auto s = loday_homology(Set::sphere(2), 1, 4, 3);
  for (int q = 0; q <= 4; ++q)
    for (int w = 0; w <= 3; ++w) CHECK(s.get(q, w) == ((q % 2 == 0 && w >= q / 2) ? 1u : 0u));
  auto hr = simplicial_hr(Set::suspension(Set::plus_point(Set::sphere(1))), GroupSchemeData::additive(1), 2, 4);
  CHECK(hr == c);
  CHECK(oracle::error_kind([] { loday_construction(Set::sphere(1), GroupSchemeData::torus(1), 1, 2); }) ==
        ErrorKind::UnsupportedCoefficients);
}

TEST_CASE("nerve of Z/3: degree 0 matches the representation scheme") {
  auto hr = simplicial_hr(Set::classifying_cyclic(3, 4), GroupSchemeData::additive(1), 1, 3);
  CHECK(hr.get(0, 0) == 1);
  for (int w = 1; w <= 3; ++w) CHECK(hr.get(0, w) == 0);
  // Rep_{G_a}(Z/3) is the reduced point: the ideal (3t) = (t).
  auto ideal = groupschemes::rep0_presentation(GroupSchemeData::additive(1), 1, {groupschemes::GroupWord::generator(0, 3)});
  auto gb = groebner::groebner_basis(ideal);
  REQUIRE(gb.basis.size() == 1);
  CHECK(gb.basis[0] == groebner::Polynomial::variable(1, 0));
}
