#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rephom/exactlin/chain.hpp"
#include "rephom/gca/algebra.hpp"

namespace rephom::gca {

// Graded derivation of fixed degree shift s (the differential has s = -1):
// D(ab) = D(a) b + (-1)^{s|a|} a D(b).
class Derivation {
 public:
  Derivation() = default;
  Derivation(AlgebraPtr alg, int shift = -1);

  const AlgebraPtr& algebra() const { return alg_; }
  int shift() const { return shift_; }

  // Image must be homogeneous of degree |g| + shift and of weight w(g).
  void set_image(std::size_t generator, AlgebraElement image);
  void set_image(const std::string& generator, AlgebraElement image);
  const AlgebraElement& image(std::size_t generator) const { return images_.at(generator); }
  bool is_zero() const;

  AlgebraElement apply(const AlgebraElement& a) const;
  AlgebraElement apply(const Monomial& m) const;

 private:
  AlgebraPtr alg_;
  int shift_ = -1;
  std::vector<AlgebraElement> images_;
};

AlgebraElement apply_derivation(const Derivation& d, const AlgebraElement& a);

// Graded commutator [D, E] = DE - (-1)^{st} ED of two derivations.
Derivation commutator(const Derivation& d, const Derivation& e);

struct Cutoffs {
  // Bound on the total |exponent| of degree-0 even generators. Makes
  // Laurent and unweighted polynomial slices finite.
  std::optional<int> aux_poly_degree;
};

// Deterministically ordered monomial basis of the (degree, weight) slice.
// Throws InfiniteSlice when finiteness cannot be guaranteed.
std::vector<Monomial> degree_slice_basis(const GradedCommAlgebra& alg, int degree,
                                         std::optional<int> weight, const Cutoffs& cutoffs = {});

// Lowest degree a nonzero monomial can have (negative odd generators).
int minimal_degree(const GradedCommAlgebra& alg);

class SliceIndex {
 public:
  SliceIndex() = default;
  explicit SliceIndex(std::vector<Monomial> basis);
  std::size_t size() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::optional<std::size_t> find(const Monomial& m) const;
  // Coordinates of an element lying in the slice; CutoffExceeded if a term
  // falls outside it.
  SparseVector coordinates(const AlgebraElement& e) const;

 private:
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
};

ChainSlice slice_matrix(const Derivation& d, int degree, std::optional<int> weight,
                        const Cutoffs& cutoffs = {});

// Matrix of a derivation of arbitrary shift between explicit slice bases.
SparseMatrix derivation_matrix(const Derivation& d, const SliceIndex& domain, const SliceIndex& codomain);

struct DSquaredReport {
  bool ok = true;
  std::size_t checked = 0;
  std::optional<int> degree;
  std::string witness;
  std::string residue;
};

struct DSquaredOptions {
  int max_degree = 0;
  std::optional<int> max_weight;
  Cutoffs cutoffs;
};

DSquaredReport check_d_squared(const Derivation& d, const DSquaredOptions& options);

}  // namespace rephom::gca
