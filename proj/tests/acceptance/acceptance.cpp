// Acceptance runner: one PASS/FAIL line per criterion, with wall time and
// the time budget. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rephom/cli/descriptor.hpp"
#include "rephom/error.hpp"
#include "rephom/gca/derivation.hpp"
#include "rephom/gca/subcomplex.hpp"
#include "rephom/groebner/buchberger.hpp"
#include "rephom/groupschemes/group_scheme.hpp"
#include "rephom/groupschemes/models.hpp"
#include "rephom/groupschemes/words.hpp"
#include "rephom/lie/current_lie.hpp"
#include "rephom/lie/free_lie.hpp"
#include "rephom/repmodel/invariants.hpp"
#include "rephom/repmodel/rep_complex.hpp"
#include "rephom/repmodel/trace.hpp"
#include "rephom/simplicial/loop_group.hpp"
#include "rephom/simplicial/pipeline.hpp"

using namespace rephom;
using groupschemes::GroupSchemeData;
using simplicial::FiniteSimplicialSet;
using simplicial::Normalization;

namespace {

// Collects failures; a criterion passes when nothing was recorded.
class Probe {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": got " << got << ", want " << want;
      failures_.push_back(os.str());
    }
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

// Poincare series of a free graded commutative algebra on generators of the
// given degrees, truncated at `top`.
std::vector<long> free_series(const std::vector<int>& degrees, int top) {
  std::vector<long> s(static_cast<std::size_t>(top) + 1, 0);
  s[0] = 1;
  for (int a : degrees) {
    std::vector<long> next(s.size(), 0);
    for (int i = 0; i <= top; ++i) {
      if (!s[static_cast<std::size_t>(i)]) continue;
      if (a % 2) {
        next[static_cast<std::size_t>(i)] += s[static_cast<std::size_t>(i)];
        if (i + a <= top) next[static_cast<std::size_t>(i + a)] += s[static_cast<std::size_t>(i)];
      } else {
        for (int j = i; j <= top; j += a) next[static_cast<std::size_t>(j)] += s[static_cast<std::size_t>(i)];
      }
    }
    s = next;
  }
  return s;
}

std::vector<long> series_of(const BettiTable& t, int top) {
  std::vector<long> s(static_cast<std::size_t>(top) + 1, 0);
  for (int q = 0; q <= top; ++q) s[static_cast<std::size_t>(q)] = static_cast<long>(t.get(q));
  return s;
}

std::string format_series(const std::vector<long>& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  return os.str();
}

std::vector<lie::LieData> sphere_targets() {
  return {lie::LieData::abelian(1), lie::LieData::abelian(2), lie::LieData::abelian(3), lie::LieData::sl2()};
}

BettiTable sphere_table(int n, const lie::LieData& g, int top) {
  auto L = lie::sphere_wedge_model({n}, top);
  return repmodel::homology_table(repmodel::build_rep_complex(L, g), top);
}

void sphere_formula(Probe& p) {
  for (int n = 2; n <= 4; ++n)
    for (const auto& g : sphere_targets()) {
      auto got = series_of(sphere_table(n, g, 8), 8);
      auto want = free_series(std::vector<int>(g.dim(), n - 1), 8);
      p.expect(got == want, "S^" + std::to_string(n) + "/" + g.name() + ": " + format_series(got) +
                                " vs " + format_series(want));
    }
}

void wedge_product(Probe& p) {
  const int top = 6;
  auto g = lie::LieData::sl2();
  auto a = series_of(sphere_table(2, g, top), top), b = series_of(sphere_table(3, g, top), top);
  std::vector<long> conv(static_cast<std::size_t>(top) + 1, 0);
  for (int i = 0; i <= top; ++i)
    for (int j = 0; i + j <= top; ++j)
      conv[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  auto L = lie::sphere_wedge_model({2, 3}, top);
  auto wedge = series_of(repmodel::homology_table(repmodel::build_rep_complex(L, g), top), top);
  p.expect(wedge == conv, "S^2 v S^3: " + format_series(wedge) + " vs " + format_series(conv));
}

void suspension_formula(Probe& p) {
  // Reduced homology of S^1 v S^1 is two classes in degree 1; tensored with
  // g^* and placed in degree 1 of the representation complex they generate
  // an exterior algebra on 2 dim(g) classes.
  auto x = cli::SpaceDescriptor::from_json_text(
      R"({"kind":"suspension","of":{"kind":"wedge","of":[{"kind":"sphere","n":1},{"kind":"sphere","n":1}]}})");
  auto betti = x.reduced_betti();
  p.expect(betti && betti->size() == 1 && betti->count(2) && betti->at(2) == 2, "reduced homology of the suspension");
  for (std::size_t d = 1; d <= 2; ++d) {
    auto L = x.quillen_model(4);
    auto got = series_of(repmodel::homology_table(repmodel::build_rep_complex(L, lie::LieData::abelian(d)), 4), 4);
    auto want = free_series(std::vector<int>(2 * d, 1), 4);
    p.expect(got == want, "abelian:" + std::to_string(d) + ": " + format_series(got) + " vs " + format_series(want));
    auto simp = simplicial::simplicial_hr(*x.simplicial_set(0), GroupSchemeData::additive(static_cast<int>(d)), 2,
                                          static_cast<int>(2 * d));
    for (int q = 0; q <= 2; ++q) {
      std::size_t total = 0;
      for (int w = 0; w <= static_cast<int>(2 * d); ++w) total += simp.get(q, w);
      p.equal(static_cast<long>(total), want[static_cast<std::size_t>(q)],
              "simplicial abelian:" + std::to_string(d) + " degree " + std::to_string(q));
    }
  }
}

void cp2_invariants(Probe& p) {
  auto rc = repmodel::build_rep_complex(lie::cp_model(2), lie::LieData::sl2());
  auto t = repmodel::invariant_homology_table(rc, 12);
  std::vector<long> want(13, 0);
  want[0] = want[5] = want[7] = want[12] = 1;
  auto got = series_of(t, 12);
  p.expect(got == want, "invariants " + format_series(got));
}

BettiTable ce_table(const lie::LieData& g, const lie::CoefficientAlgebra& a, int top) {
  auto ce = lie::ce_complex(lie::CurrentLie(g, a));
  gca::HomologyRequest req;
  req.max_degree = top;
  return gca::homology_table(ce.d, req);
}

void comparison_theorem(Probe& p) {
  auto g = lie::LieData::sl2();
  auto quillen = series_of(repmodel::homology_table(repmodel::build_rep_complex(lie::cp_model(2), g), 12), 12);
  auto ce = series_of(ce_table(g, lie::CoefficientAlgebra::truncated_polynomial(2, 2, false), 12), 12);
  p.expect(quillen == ce, "CP^2: " + format_series(quillen) + " vs " + format_series(ce));
  auto q3 = series_of(sphere_table(3, g, 8), 8);
  auto c3 = series_of(ce_table(g, lie::CoefficientAlgebra::truncated_polynomial(3, 1, false), 8), 8);
  p.expect(q3 == c3, "S^3: " + format_series(q3) + " vs " + format_series(c3));
}

void connectivity_window(Probe& p) {
  auto g = lie::LieData::sl2();
  auto t = sphere_table(3, g, 4);
  auto s3 = cli::SpaceDescriptor::from_json_text(R"({"kind":"sphere","n":3})");
  auto betti = *s3.reduced_betti();
  auto h = [&](int k) { return static_cast<std::size_t>(betti.count(k) ? betti.at(k) : 0) * g.dim(); };
  p.equal(t.get(1), std::size_t{0}, "HR_1");
  for (int q : {2, 3}) p.equal(t.get(q), h(q + 1), "HR_" + std::to_string(q) + " vs H_" + std::to_string(q + 1));
}

void simplicial_oracle(Probe& p) {
  auto s1 = simplicial::simplicial_hr(FiniteSimplicialSet::sphere(1), GroupSchemeData::additive(1), 3, 4);
  for (int w = 0; w <= 4; ++w) {
    p.equal(s1.get(0, w), std::size_t{1}, "S^1 degree 0 weight " + std::to_string(w));
    for (int q = 1; q <= 3; ++q) p.equal(s1.get(q, w), std::size_t{0}, "S^1 degree " + std::to_string(q));
  }
  auto s2 = simplicial::simplicial_hr(FiniteSimplicialSet::sphere(2), GroupSchemeData::additive(1), 3, 2);
  auto rc = repmodel::build_rep_complex(lie::sphere_wedge_model({2}, 3), lie::LieData::abelian(1));
  auto quillen = repmodel::homology_table(rc, 3, 2);
  for (int q = 0; q <= 3; ++q)
    for (int w = 0; w <= 2; ++w)
      p.equal(s2.get(q, w), quillen.get(q, w), "S^2 slot (" + std::to_string(q) + "," + std::to_string(w) + ")");
}

void hochschild_bridge(Probe& p) {
  auto x = FiniteSimplicialSet::suspension(FiniteSimplicialSet::plus_point(FiniteSimplicialSet::sphere(1)));
  auto hr = simplicial::simplicial_hr(x, GroupSchemeData::additive(1), 2, 3);
  auto hh = simplicial::loday_homology(FiniteSimplicialSet::sphere(1), 1, 2, 3);
  for (int q = 0; q <= 2; ++q)
    for (int w = 0; w <= 3; ++w) {
      std::size_t classical = (q == 0 || (q == 1 && w >= 1)) ? 1 : 0;
      std::string slot = "(" + std::to_string(q) + "," + std::to_string(w) + ")";
      p.equal(hr.get(q, w), classical, "suspension " + slot);
      p.equal(hh.get(q, w), classical, "Loday " + slot);
    }
}

void link_complement(Probe& p) {
  auto m = groupschemes::twisted_hochschild_complex(GroupSchemeData::additive(1), {1, {}});
  auto t = groupschemes::model_homology(m, 2, 3);
  // Wedge formula for S^1 v S^2 with G_a: Q[t] from S^1 times Lambda(e)
  // with e of degree 1, weight 1 from S^2.
  auto rc = repmodel::build_rep_complex(lie::sphere_wedge_model({2}, 3), lie::LieData::abelian(1));
  auto s2 = repmodel::homology_table(rc, 2, 3);
  for (int q = 0; q <= 2; ++q)
    for (int w = 0; w <= 3; ++w) {
      std::size_t want = 0;
      for (int k = 0; k <= w; ++k) want += s2.get(q, k);  // S^1 contributes t^{w-k}
      p.equal(t.get(q, w), want, "(" + std::to_string(q) + "," + std::to_string(w) + ")");
    }
}

void torus_models(Probe& p) {
  auto gm = groupschemes::surface_model(GroupSchemeData::torus(1), 1, true);
  p.expect(gm.d.is_zero(), "G_m differential vanishes");
  auto t = groupschemes::model_homology(gm, 2, 4);
  for (int w = 0; w <= 4; ++w) {
    // Laurent monomials z1^a z2^b with |a| + |b| = w.
    std::size_t laurent = 0;
    for (int a = -w; a <= w; ++a) laurent += (std::abs(a) == w) ? 1 : 2;
    p.equal(t.get(0, w), laurent, "H_0 weight " + std::to_string(w));
    p.equal(t.get(1, w), laurent, "H_1 weight " + std::to_string(w));
    p.equal(t.get(2, w), std::size_t{0}, "H_2 weight " + std::to_string(w));
  }
  auto G = GroupSchemeData::general_linear(2);
  auto gl = groupschemes::surface_model(G, 1, true);
  gca::DSquaredOptions opt;
  opt.max_degree = 3;
  opt.cutoffs.aux_poly_degree = 2;
  p.expect(gca::check_d_squared(gl.d, opt).ok, "GL2 d^2 = 0");
  std::vector<std::string> syms{"a", "b"};
  auto direct = groupschemes::rep0_presentation(G, 2, {groupschemes::GroupWord::parse("[a,b]", syms)}, gl.ring->labels());
  auto cmp = groebner::ideals_equal(direct, groupschemes::model_degree0_ideal(gl));
  p.expect(!cmp.exhausted && cmp.equal, "rep0(Z^2, GL2) equals the model's degree-0 ideal");
}

// Random homogeneous element of the given degree.
gca::AlgebraElement random_element(const gca::AlgebraPtr& alg, int degree, std::mt19937& rng) {
  gca::AlgebraElement e(alg);
  for (const auto& m : gca::degree_slice_basis(*alg, degree, std::nullopt))
    if (rng() % 2) e.add_term(m, Rational(static_cast<long>(rng() % 7) - 3));
  return e;
}

void property_suites(Probe& p) {
  gca::DSquaredOptions opt;
  opt.max_degree = 5;
  opt.cutoffs.aux_poly_degree = 2;

  // d^2 = 0 on every model family.
  for (int r = 2; r <= 3; ++r) {
    auto L = std::make_shared<lie::FreeGradedLie>(lie::cp_model(r, 2 * r + 1));
    p.expect(L->d_squared_zero(), "cp_model d^2");
    for (const auto& g : {lie::LieData::sl2(), lie::LieData::gl(2), lie::LieData::abelian(2)}) {
      repmodel::RepComplex rc(L, g);
      p.expect(gca::check_d_squared(rc.d(), opt).ok, "representation complex d^2");
      auto bad = repmodel::check_dg_lie_map(rc);
      p.expect(!bad, "rho is a DG Lie map: " + bad.value_or(""));
    }
  }
  {
    auto L = std::make_shared<lie::FreeGradedLie>(lie::sphere_wedge_model({2, 3, 3}, 6));
    repmodel::RepComplex rc(L, lie::LieData::sl2());
    auto bad = repmodel::check_dg_lie_map(rc);
    p.expect(!bad, "rho on a wedge: " + bad.value_or(""));
  }
  for (const auto& a : {lie::CoefficientAlgebra::truncated_polynomial(2, 2, false),
                        lie::CoefficientAlgebra::truncated_polynomial(2, 2, true),
                        lie::CoefficientAlgebra::sphere_wedge({2, 3}, true)}) {
    auto ce = lie::ce_complex(lie::CurrentLie(lie::LieData::sl2(), a));
    p.expect(lie::ce_d_squared_zero(ce), "CE d^2");
  }
  opt.max_degree = 2;
  for (auto g : {GroupSchemeData::additive(2), GroupSchemeData::torus(2), GroupSchemeData::general_linear(2)}) {
    p.expect(gca::check_d_squared(groupschemes::koszul_complex(g).d, opt).ok, "Koszul d^2 " + g.name());
    // Genus 2 over GL2 has degree-16 differentials; the torus stands in for it.
    int genus = g.is_matrix_group() ? 1 : 2;
    p.expect(gca::check_d_squared(groupschemes::surface_model(g, genus, true).d, opt).ok, "surface d^2 " + g.name());
    p.expect(gca::check_d_squared(groupschemes::surface_model(g, 1, false).d, opt).ok, "RP^2 d^2 " + g.name());
    p.expect(gca::check_d_squared(groupschemes::twisted_hochschild_complex(g, {2, {1, 1, 1}}).d, opt).ok,
             "trefoil d^2 " + g.name());
  }

  // Leibniz, associativity and Koszul signs.
  auto alg = gca::GradedCommAlgebra::create({{"a", 1, {}}, {"b", 3, {}}, {"x", 2, {}}, {"y", 4, {}}});
  std::mt19937 rng(2024);
  gca::Derivation d(alg);
  d.set_image("b", random_element(alg, 2, rng));
  d.set_image("x", random_element(alg, 1, rng));
  d.set_image("y", random_element(alg, 3, rng));
  auto sign = [](int e) { return (e % 2) ? Rational(-1) : Rational(1); };
  for (int k = 0; k < 100; ++k) {
    int i = 1 + static_cast<int>(rng() % 5), j = 1 + static_cast<int>(rng() % 5), l = static_cast<int>(rng() % 4);
    auto u = random_element(alg, i, rng), v = random_element(alg, j, rng), w = random_element(alg, l, rng);
    p.expect(d.apply(u * v) == d.apply(u) * v + sign(i) * (u * d.apply(v)), "Leibniz");
    p.expect((u * v) * w == u * (v * w), "associativity");
    p.expect(u * v == sign(i * j) * (v * u), "Koszul sign");
  }

  // Braid relations.
  using groupschemes::artin_action;
  p.expect(artin_action({3, {1, 2, 1}}) == artin_action({3, {2, 1, 2}}), "B3 braid relation");
  p.expect(artin_action({4, {1, 2, 1}}) == artin_action({4, {2, 1, 2}}), "B4 braid relation 12");
  p.expect(artin_action({4, {2, 3, 2}}) == artin_action({4, {3, 2, 3}}), "B4 braid relation 23");
  p.expect(artin_action({4, {1, 3}}) == artin_action({4, {3, 1}}), "B4 far commutation");

  // Adjugate law.
  for (int n : {2, 3}) {
    groupschemes::CoordinateRing ring(GroupSchemeData::general_linear(n), {"1"});
    auto X = ring.generic(0);
    auto prod = ring.multiply(X, ring.adjugate(X));
    auto det = ring.det(X);
    const auto nn = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < nn; ++i)
      for (std::size_t j = 0; j < nn; ++j)
        p.expect(prod.entries[i * nn + j] == (i == j ? det : ring.algebra()->zero()), "adjugate law");
  }

  // Normalization forms.
  for (const auto& x : {FiniteSimplicialSet::sphere(1), FiniteSimplicialSet::sphere(2),
                        FiniteSimplicialSet::wedge(FiniteSimplicialSet::sphere(1), FiniteSimplicialSet::sphere(2))}) {
    auto loday = simplicial::loday_construction(x, 1, 3, 4);
    p.expect(simplicial::normalized_homology(loday, Normalization::KernelIntersection) ==
                 simplicial::normalized_homology(loday, Normalization::DegenerateQuotient),
             "N vs N-bar on a Loday construction");
    auto kan = simplicial::additive_rep_levelwise(simplicial::kan_loop_group(x, 4), 1, 3);
    p.expect(simplicial::normalized_homology(kan, Normalization::KernelIntersection) ==
                 simplicial::normalized_homology(kan, Normalization::DegenerateQuotient),
             "N vs N-bar on a loop group");
  }
}

void drinfeld_traces(Probe& p) {
  auto L = std::make_shared<lie::FreeGradedLie>(lie::cp_model(2, 7));
  repmodel::RepComplex rc(L, lie::LieData::sl2());
  repmodel::SymSquare sym(*L);
  auto v1 = L->generator(0), v2 = L->generator(1);
  auto v12 = L->bracket(v1, v2);
  for (const auto& [chain, degree] : {std::pair{sym.product(v1, v12), 5}, std::pair{sym.product(v2, v12), 7}}) {
    std::string tag = "degree " + std::to_string(degree);
    p.equal(sym.degree(chain).value_or(-1), degree, tag + " chain degree");
    p.expect(sym.closed_in_coinvariants(chain), tag + " chain closed in coinvariants");
    auto tr = repmodel::drinfeld_trace_quadratic(rc, chain);
    p.expect(tr.closed, tag + " trace closed");
    p.expect(tr.invariant, tag + " trace invariant");
    p.expect(!tr.value.is_zero() && !gca::is_boundary(rc.d(), tr.value), tag + " trace nonzero in homology");
  }
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<void(Probe&)> body;
};

}  // namespace

int main(int argc, char** argv) {
  // Optional arguments select criteria by number.
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::stoi(argv[i]));
  std::vector<Criterion> criteria = {
      {1, "sphere formula", 5, sphere_formula},
      {2, "wedge multiplicativity", 10, wedge_product},
      {3, "suspension formula", 5, suspension_formula},
      {4, "CP^2 invariants 1 + t^5 + t^7 + t^12", 60, cp2_invariants},
      {5, "Quillen vs Chevalley-Eilenberg", 120, comparison_theorem},
      {6, "connectivity window for S^3", 5, connectivity_window},
      {7, "simplicial definition", 120, simplicial_oracle},
      {8, "suspension / Hochschild bridge", 120, hochschild_bridge},
      {9, "link complement of the unknot", 10, link_complement},
      {10, "torus models", 60, torus_models},
      {11, "property suites", 30, property_suites},
      {12, "Drinfeld traces", 60, drinfeld_traces},
  };
  int failed = 0;
  std::size_t ran = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    ++ran;
    Probe probe;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(probe);
    } catch (const std::exception& e) {
      probe.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) probe.expect(false, "time budget exceeded");
    bool ok = probe.failures().empty();
    if (!ok) ++failed;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs / %.0fs", secs, c.budget_seconds);
    std::cout << (ok ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << "  (" << buf << ")" << std::endl;
    for (const auto& f : probe.failures()) std::cout << "      - " << f << "\n";
  }
  std::cout << (ran - static_cast<std::size_t>(failed)) << "/" << ran << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
