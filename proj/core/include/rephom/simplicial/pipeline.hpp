#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rephom/exactlin/chain.hpp"
#include "rephom/exactlin/sparse_matrix.hpp"
#include "rephom/groupschemes/group_scheme.hpp"
#include "rephom/simplicial/loop_group.hpp"
#include "rephom/simplicial/simplicial_set.hpp"

namespace rephom::simplicial {

// Simplicial polynomial algebra Q[V_n] whose faces and degeneracies are
// ring maps that are linear on the variables. Every variable has weight 1,
// so the weight-w part of level n is Sym^w(V_n).
struct SimplicialVectorSpaceSlice {
  std::vector<std::vector<std::string>> variables;
  // faces[n][i] : V_n -> V_{n-1}, one column per variable of level n.
  std::vector<std::vector<SparseMatrix>> faces;
  // degeneracies[n][j] : V_n -> V_{n+1}.
  std::vector<std::vector<SparseMatrix>> degeneracies;
  int max_weight = 0;

  std::size_t top() const { return variables.empty() ? 0 : variables.size() - 1; }
  // Dimension of Sym^w(V_n).
  std::size_t slice_dimension(std::size_t n, int w) const;
  // Matrix of the induced map Sym^w(V_n) -> Sym^w(V_{n-1}) (or n+1).
  SparseMatrix face_slice(std::size_t n, std::size_t i, int w) const;
  SparseMatrix degeneracy_slice(std::size_t n, std::size_t j, int w) const;
};

enum class Normalization {
  // N_n = intersection of ker d_i for i >= 1, differential d_0.
  KernelIntersection,
  // Quotient by degenerate elements, differential sum (-1)^i d_i.
  DegenerateQuotient,
};

// Homology of the normalized complex in degrees 0..top-1 and weights
// 0..max_weight; the trusted range is (top-1, max_weight).
BettiTable normalized_homology(const SimplicialVectorSpaceSlice& a, Normalization form);

// O(G_a^d) applied levelwise to a semi-free simplicial group: one block of
// d coordinates per generator, a word acting through its exponent sums.
SimplicialVectorSpaceSlice additive_rep_levelwise(const SemiFreeSimplicialGroup& g, int d, int max_weight);

// Loday construction X (x) Q[t_1..t_d], levels 0..top.
SimplicialVectorSpaceSlice loday_construction(const FiniteSimplicialSet& x, int d, int max_weight,
                                              std::size_t top);
// Same, with coefficients given as a group-scheme coordinate ring; only
// G_a^d (a polynomial ring) is weight-graded.
SimplicialVectorSpaceSlice loday_construction(const FiniteSimplicialSet& x, const groupschemes::GroupSchemeData& a,
                                              int max_weight, std::size_t top);

// Representation homology of a reduced simplicial set via the Kan loop
// group, degrees <= max_degree and weights <= max_weight.
BettiTable simplicial_hr(const FiniteSimplicialSet& x, const groupschemes::GroupSchemeData& g, int max_degree,
                         int max_weight, Normalization form = Normalization::KernelIntersection);

// Higher Hochschild homology of Q[t_1..t_d] along X.
BettiTable loday_homology(const FiniteSimplicialSet& x, int d, int max_degree, int max_weight,
                          Normalization form = Normalization::KernelIntersection);

}  // namespace rephom::simplicial
