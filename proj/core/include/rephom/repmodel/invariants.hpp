#pragma once

#include <vector>

#include "rephom/exactlin/chain.hpp"
#include "rephom/gca/derivation.hpp"
#include "rephom/repmodel/rep_complex.hpp"

namespace rephom::repmodel {

// Infinitesimal coadjoint action of g on the representation complex: for
// each basis vector xi_a a degree-0 derivation with
//   D_a(v.xi_i) = -sum_j c^i_{aj} v.xi_j.
class AdjointAction {
 public:
  explicit AdjointAction(const RepComplex& rc);
  const std::vector<gca::Derivation>& derivations() const { return ds_; }
  // [D_a, d] = 0 on every generator.
  bool commutes_with_differential() const;
  // [D_a, D_b] = sum_k c^k_ab D_k on every generator.
  bool satisfies_bracket_relations() const;
  bool is_invariant(const gca::AlgebraElement& e) const;

 private:
  const RepComplex* rc_;
  std::vector<gca::Derivation> ds_;
};

// Homology of the subcomplex of ad-invariants in degrees 0..D.
// ActionNotChainMap when the action fails to commute with d; NotReductive
// when g carries no reductive metadata.
BettiTable invariant_homology_table(const RepComplex& rc, int max_degree);

}  // namespace rephom::repmodel
