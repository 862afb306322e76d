#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rephom/groebner/polynomial.hpp"

namespace rephom::groebner {

inline constexpr std::size_t kDefaultEffortCap = 20000;

struct PolyIdeal {
  std::vector<std::string> variables;
  std::vector<Polynomial> generators;

  // Zero generators dropped; each remaining generator monic.
  static PolyIdeal make(std::vector<std::string> variables, std::vector<Polynomial> generators);
  std::string to_string() const;
};

struct GroebnerResult {
  bool exhausted = false;
  std::size_t pairs_processed = 0;
  // Reduced, monic, sorted by leading monomial. Empty on exhaustion.
  std::vector<Polynomial> basis;
};

GroebnerResult groebner_basis(const PolyIdeal& ideal, std::size_t effort_cap = kDefaultEffortCap);

// Full reduction; unique when `basis` is a Gröbner basis.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis);

struct IdealComparison {
  bool exhausted = false;
  bool equal = false;
};

IdealComparison ideals_equal(const PolyIdeal& a, const PolyIdeal& b, std::size_t effort_cap = kDefaultEffortCap);

// True when every S-polynomial of `basis` reduces to zero.
bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis);

}  // namespace rephom::groebner
