#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rephom/exactlin/sparse_matrix.hpp"
#include "rephom/gca/derivation.hpp"
#include "rephom/lie/lie_data.hpp"

namespace rephom::lie {

// Finite-dimensional graded commutative algebra over Q, cohomologically
// graded, given by a basis and a multiplication table. The unit (when
// present) is an ordinary basis element flagged as such.
class CoefficientAlgebra {
 public:
  // products[{i, j}] = a_i a_j as a sparse vector; missing pairs are zero.
  static CoefficientAlgebra create(std::vector<std::string> names, std::vector<int> degrees,
                                   std::map<std::pair<std::size_t, std::size_t>, SparseVector> products,
                                   std::optional<std::size_t> unit = std::nullopt);
  // u, u^2, ..., u^r with |u| = n and u^{r+1} = 0; with_unit prepends 1.
  static CoefficientAlgebra truncated_polynomial(int n, int r, bool with_unit);
  // Reduced cohomology of a wedge of spheres: one class per sphere, all
  // products zero.
  static CoefficientAlgebra sphere_wedge(const std::vector<int>& dims, bool with_unit);
  // The one-dimensional algebra k in degree 0 (a^2 = a, a is the unit).
  static CoefficientAlgebra ground_field();

  std::size_t dim() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int degree(std::size_t i) const { return degrees_.at(i); }
  const std::optional<std::size_t>& unit() const { return unit_; }
  const SparseVector& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

 private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
  std::vector<SparseVector> table_;
  std::optional<std::size_t> unit_;
};

// g(A) = g (x) A with [x (x) a, y (x) b] = [x, y] (x) ab.
class CurrentLie {
 public:
  CurrentLie(LieData g, CoefficientAlgebra a);
  const LieData& lie() const { return g_; }
  const CoefficientAlgebra& coefficients() const { return a_; }
  std::size_t dim() const { return g_.dim() * a_.dim(); }
  // Basis index of x_i (x) a_alpha.
  std::size_t index(std::size_t i, std::size_t alpha) const { return i * a_.dim() + alpha; }

 private:
  LieData g_;
  CoefficientAlgebra a_;
};

// Chevalley-Eilenberg cochains of g(A) as a free graded commutative algebra
// on generators theta^{(i, alpha)} named "<x_i>.<a_alpha>", homologically
// regraded: theta^{(i, alpha)} sits in degree |a_alpha| - 1 and d lowers
// degree by one. See docs/SIGNS.md for the sign of d.
struct CEComplex {
  gca::AlgebraPtr algebra;
  gca::Derivation d;
  // Relative data (empty for the absolute complex): contractions along
  // g = g (x) 1 and the Lie derivatives [d, iota].
  std::vector<gca::Derivation> contractions;
  std::vector<gca::Derivation> lie_derivatives;
  std::vector<gca::Derivation> constraints() const;
};

CEComplex ce_complex(const CurrentLie& cl);
// g-basic cochains of g(A) for unital A. NotReductive when g lacks
// reductive metadata.
CEComplex ce_relative(const CurrentLie& cl);

// d(d(theta)) = 0 for every generator; the residue of the first failure is
// returned in `witness`.
bool ce_d_squared_zero(const CEComplex& ce, std::string* witness = nullptr);

}  // namespace rephom::lie
