#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rephom/exactlin/chain.hpp"
#include "rephom/gca/derivation.hpp"
#include "rephom/groebner/buchberger.hpp"
#include "rephom/groupschemes/group_scheme.hpp"
#include "rephom/groupschemes/words.hpp"

namespace rephom::groupschemes {

// Commutative DG model over a coordinate ring: O(G^k) in degree 0 plus
// odd generators in degree 1.
struct DGModel {
  std::shared_ptr<CoordinateRing> ring;
  gca::Derivation d;
  std::vector<std::string> notes;
  const gca::AlgebraPtr& algebra() const { return ring->algebra(); }
};

// K_*(G) = O(G) (x) Lambda(e_1..e_D) with d e_i = r_i.
DGModel koszul_complex(const GroupSchemeData& g);

// O(G^{2g}) (x)_{O(G)} K_*(G) for the orientable surface of genus g (relator
// [a_1,b_1]...[a_g,b_g]) or O(G^g) (x)_{O(G)} K_*(G) for the non-orientable
// surface N_g (relator a_1^2...a_g^2): d theta_i = r_i(relator).
DGModel surface_model(const GroupSchemeData& g, int genus, bool orientable);

// Koszul model of HH(O(G^n), O(G^n)_beta): odd e_v for each coordinate v of
// each copy, d e_v = v - beta_*(v).
DGModel twisted_hochschild_complex(const GroupSchemeData& g, const BraidWord& b);

// Coordinate action beta_*: images of the coordinates of every copy.
std::vector<gca::AlgebraElement> coordinate_action(const CoordinateRing& ring, const FreeGroupMap& phi);

// Ideal of Rep_G(<x_1..x_n | relators>) in the polynomial ring of the
// coordinates (plus the det-inverse variables d<s> for GL_n, and inverse
// variables w<name> for G_m). Relator entries are cleared by the minimal
// power of det (or of z) before being added. Copies are labelled 1..n
// unless `labels` is given.
groebner::PolyIdeal rep0_presentation(const GroupSchemeData& g, std::size_t generators,
                                      const std::vector<GroupWord>& relators,
                                      const std::vector<std::string>& labels = {});

// Degree-0 ideal of a model: images of the degree-1 generators together
// with the coordinate relations, over the same variables as
// rep0_presentation.
groebner::PolyIdeal model_degree0_ideal(const DGModel& m);

// Exact per-(degree, weight) homology. G_a^d: weight = polynomial degree.
// G_m^d: weight = total |exponent| of the Laurent monomials, available only
// when the differential vanishes. UnsupportedForExactHomology otherwise.
BettiTable model_homology(const DGModel& m, int max_degree, int max_weight);

}  // namespace rephom::groupschemes
