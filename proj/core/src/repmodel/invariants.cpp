#include "rephom/repmodel/invariants.hpp"

#include "rephom/error.hpp"
#include "rephom/gca/subcomplex.hpp"

namespace rephom::repmodel {

AdjointAction::AdjointAction(const RepComplex& rc) : rc_(&rc) {
  const auto& g = rc.target();
  const auto& alg = rc.algebra();
  const std::size_t nv = rc.source().generators().size();
  for (std::size_t a = 0; a < g.dim(); ++a) {
    gca::Derivation D(alg, 0);
    for (std::size_t v = 0; v < nv; ++v) {
      for (std::size_t i = 0; i < g.dim(); ++i) {
        gca::AlgebraElement img = alg->zero();
        for (std::size_t j = 0; j < g.dim(); ++j) {
          const Rational& c = g.c(a, j, i);
          if (sgn(c) != 0) img -= alg->gen(rc.generator_index(v, j)) * c;
        }
        D.set_image(rc.generator_index(v, i), img);
      }
    }
    ds_.push_back(std::move(D));
  }
}

bool AdjointAction::commutes_with_differential() const {
  for (const auto& D : ds_) {
    if (!gca::commutator(D, rc_->d()).is_zero()) return false;
  }
  return true;
}

bool AdjointAction::satisfies_bracket_relations() const {
  const auto& g = rc_->target();
  const auto& alg = rc_->algebra();
  for (std::size_t a = 0; a < ds_.size(); ++a) {
    for (std::size_t b = 0; b < ds_.size(); ++b) {
      gca::Derivation lhs = gca::commutator(ds_[a], ds_[b]);
      for (std::size_t t = 0; t < alg->size(); ++t) {
        gca::AlgebraElement rhs = alg->zero();
        for (const auto& [k, c] : g.bracket_of(a, b)) rhs += ds_[k].image(t) * c;
        if (!(lhs.image(t) == rhs)) return false;
      }
    }
  }
  return true;
}

bool AdjointAction::is_invariant(const gca::AlgebraElement& e) const {
  for (const auto& D : ds_) {
    if (!D.apply(e).is_zero()) return false;
  }
  return true;
}

BettiTable invariant_homology_table(const RepComplex& rc, int max_degree) {
  if (!rc.target().reductive()) fail(ErrorKind::NotReductive, "invariant homology needs a reductive Lie algebra");
  AdjointAction act(rc);
  if (!act.commutes_with_differential()) {
    fail(ErrorKind::ActionNotChainMap, "coadjoint action does not commute with the differential");
  }
  gca::HomologyRequest req{0, max_degree, std::nullopt, {}};
  if (!rc.weighted()) return gca::homology_table(rc.d(), req, act.derivations());
  req.max_weight = max_degree;
  BettiTable full = gca::homology_table(rc.d(), req, act.derivations());
  BettiTable out(TrustedRange{max_degree, std::nullopt});
  for (int q = 0; q <= max_degree; ++q) {
    std::size_t s = 0;
    for (int w = 0; w <= max_degree; ++w) s += full.get(q, w);
    out.set(q, std::nullopt, s);
  }
  return out;
}

}  // namespace rephom::repmodel
