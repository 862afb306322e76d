#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <optional>
#include <vector>

#include "rephom/exactlin/chain.hpp"
#include "rephom/gca/derivation.hpp"
#include "rephom/groebner/buchberger.hpp"
#include "rephom/lie/free_lie.hpp"
#include "rephom/lie/lie_data.hpp"

namespace rephom::repmodel {

// An element of (algebra) (x) g, stored as one algebra coefficient per
// basis vector of g.
using GValued = std::vector<gca::AlgebraElement>;

// Coordinate ring a_g of Rep_g(a) for an ordinary Lie algebra a: variables
// "x.xi" (one per pair of basis vectors) modulo, for all x, y and k,
//   sum_{ij} c^k_ij X^x_i X^y_j - sum_c f^c_xy X^c_k,
// i.e. the condition that x |-> sum_i X^x_i xi_i is a Lie map.
groebner::PolyIdeal rep_algebra_presentation(const lie::LieData& a, const lie::LieData& g);

// Representation complex Sym(g^* (x) V) of a Quillen model (L(V), d): one
// generator "v.xi_i" of degree |v| per generator v of L and basis vector xi_i
// of g, with differential read off from the universal representation
// rho(v) = sum_i (v.xi_i) (x) xi_i.
class RepComplex {
 public:
  RepComplex(std::shared_ptr<const lie::FreeGradedLie> source, lie::LieData target);

  const lie::FreeGradedLie& source() const { return *source_; }
  const lie::LieData& target() const { return g_; }
  const gca::AlgebraPtr& algebra() const { return alg_; }
  const gca::Derivation& d() const { return d_; }
  std::size_t generator_index(std::size_t v, std::size_t i) const { return v * g_.dim() + i; }
  // Weighted by polynomial degree exactly when g is abelian, where the
  // differential vanishes and the weight grading is preserved.
  bool weighted() const { return alg_->weighted(); }

  GValued rho(const lie::LieElement& x) const;
  GValued bracket(const GValued& a, const GValued& b) const;
  GValued apply_d(const GValued& a) const;

 private:
  GValued rho_basis(std::size_t id) const;

  std::shared_ptr<const lie::FreeGradedLie> source_;
  lie::LieData g_;
  gca::AlgebraPtr alg_;
  gca::Derivation d_;
  struct RhoCache;
  std::shared_ptr<RhoCache> cache_;
};

RepComplex build_rep_complex(const lie::FreeGradedLie& L, const lie::LieData& g);

// dim HR_q for 0 <= q <= D (unweighted; weights are summed when present).
BettiTable homology_table(const RepComplex& rc, int max_degree);
// Per (degree, weight) table; only for weighted complexes.
BettiTable homology_table(const RepComplex& rc, int max_degree, int max_weight);

// rho(dx) = d rho(x) and rho([x, y]) = [rho x, rho y] on every pair of basis
// elements within the cutoff. Returns a description of the first failure.
std::optional<std::string> check_dg_lie_map(const RepComplex& rc);

}  // namespace rephom::repmodel
