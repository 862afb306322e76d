#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rephom/groupschemes/words.hpp"
#include "rephom/simplicial/simplicial_set.hpp"

namespace rephom::simplicial {

// Simplicial group that is free in each level on a set of generators
// closed under degeneracies. Levels 0..top are materialized; faces of
// level 0 and degeneracies of the top level are absent.
struct SemiFreeSimplicialGroup {
  // Generators of each level, labelled by simplices of the source set.
  std::vector<std::vector<Simplex>> generators;
  std::vector<std::vector<std::string>> names;
  // faces[n][i] : F(gens_n) -> F(gens_{n-1}) for n >= 1, i = 0..n.
  std::vector<std::vector<groupschemes::FreeGroupMap>> faces;
  // degeneracies[n][j] : F(gens_n) -> F(gens_{n+1}) for n < top, j = 0..n.
  std::vector<std::vector<groupschemes::FreeGroupMap>> degeneracies;

  std::size_t top() const { return generators.empty() ? 0 : generators.size() - 1; }
  std::size_t rank(std::size_t n) const { return generators.at(n).size(); }
  std::optional<std::string> check_identities() const;
};

// Kan loop group of a reduced simplicial set, levels 0..top. Level n is
// free on X_{n+1} minus s_0 X_n with d_0 x = (d_1 x)(d_0 x)^-1,
// d_i x = d_{i+1} x for i > 0 and s_j x = s_{j+1} x.
SemiFreeSimplicialGroup kan_loop_group(const FiniteSimplicialSet& x, std::size_t top);

// Milnor's construction: level n is free on K_n with the basepoint set to 1.
SemiFreeSimplicialGroup milnor_fk(const FiniteSimplicialSet& k, std::size_t top);

// Compares FK(K) with the Kan loop group of the reduced suspension of K
// under x <-> (x,1), level by level. Returns the first mismatch.
std::optional<std::string> compare_milnor_with_kan(const FiniteSimplicialSet& k, std::size_t top);

}  // namespace rephom::simplicial
