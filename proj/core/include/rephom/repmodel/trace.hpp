#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "rephom/gca/algebra.hpp"
#include "rephom/lie/free_lie.hpp"
#include "rephom/repmodel/rep_complex.hpp"

namespace rephom::repmodel {

// Element of Sym^2(L) on the bracket basis: coefficient of a.b for basis ids
// a <= b. Graded symmetry a.b = (-1)^{|a||b|} b.a is applied on entry, so
// squares of odd elements vanish.
struct SymChain {
  std::map<std::pair<std::size_t, std::size_t>, Rational> terms;
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const SymChain&, const SymChain&) = default;
};

// Sym^2 of a truncated free graded Lie algebra with its differential and
// adjoint action, enough to decide closedness in the coinvariants
// lambda^(2)(L) = Sym^2(L) / [L, Sym^2(L)].
class SymSquare {
 public:
  explicit SymSquare(const lie::FreeGradedLie& L) : L_(&L) {}

  SymChain product(const lie::LieElement& x, const lie::LieElement& y) const;
  SymChain d(const SymChain& c) const;
  // ad_z(x.y) = [z,x].y + (-1)^{|z||x|} x.[z,y].
  SymChain ad(const lie::LieElement& z, const SymChain& c) const;
  std::optional<int> degree(const SymChain& c) const;
  // Membership in [L, Sym^2 L] in the chain's degree. CutoffExceeded when
  // the span cannot be generated inside the cutoff.
  bool in_commutator_span(const SymChain& c) const;
  // d(c) lies in [L, Sym^2 L].
  bool closed_in_coinvariants(const SymChain& c) const;
  std::string format(const SymChain& c) const;

 private:
  void add(SymChain& c, std::size_t a, std::size_t b, const Rational& k) const;
  const lie::FreeGradedLie* L_;
};

struct TraceResult {
  gca::AlgebraElement value;
  bool invariant = false;
  bool closed = false;
};

// Tr(x.y) = sum_{ij} B(xi_i, xi_j) rho(x)_i rho(y)_j for the invariant form B
// of g, extended linearly. NoInvariantForm when g has no form.
TraceResult drinfeld_trace_quadratic(const RepComplex& rc, const SymChain& chain);

}  // namespace rephom::repmodel
