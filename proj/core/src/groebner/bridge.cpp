#include "rephom/groebner/bridge.hpp"

#include "rephom/error.hpp"

namespace rephom::groebner {

Polynomial to_polynomial(const gca::AlgebraElement& e) {
  const auto& alg = *e.algebra();
  std::vector<Term> terms;
  for (const auto& [m, c] : e.terms()) {
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (m.exps[i] < 0) fail(ErrorKind::InvalidInput, "negative exponent has no polynomial form");
      if (m.exps[i] != 0 && alg.generator(i).odd()) fail(ErrorKind::InvalidInput, "odd generator in polynomial");
    }
    terms.push_back({m.exps, c});
  }
  return Polynomial::from_terms(alg.size(), std::move(terms));
}

}  // namespace rephom::groebner
