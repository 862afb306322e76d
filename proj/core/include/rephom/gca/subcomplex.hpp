#pragma once

#include <optional>
#include <vector>

#include "rephom/exactlin/chain.hpp"
#include "rephom/gca/derivation.hpp"

namespace rephom::gca {

// Homology of a DG algebra, or of the subcomplex cut out as the common
// kernel of a family of derivations (invariants under an infinitesimal
// action, basic cochains). Every constraint must map the subcomplex-defining
// kernel to itself under d; this is verified slice by slice and reported as
// ActionNotChainMap otherwise.
struct HomologyRequest {
  int min_degree = 0;
  int max_degree = 0;
  // When the algebra is weighted, weights 0..max_weight are computed; the
  // table is then weighted with this trusted weight.
  std::optional<int> max_weight;
  Cutoffs cutoffs;
};

// Basis (coordinates in degree_slice_basis order) of the common kernel of
// the constraints on one slice; the full slice when there are none.
std::vector<SparseVector> constrained_slice(const std::vector<Derivation>& constraints, int degree,
                                            std::optional<int> weight, const Cutoffs& cutoffs);

BettiTable homology_table(const Derivation& d, const HomologyRequest& request,
                          const std::vector<Derivation>& constraints = {});

// True when the homogeneous element e is d of something in the slice one
// degree up (zero counts as a boundary).
bool is_boundary(const Derivation& d, const AlgebraElement& e, const Cutoffs& cutoffs = {});

}  // namespace rephom::gca
