#include "rephom/repmodel/rep_complex.hpp"

#include <functional>
#include <mutex>

#include "rephom/error.hpp"
#include "rephom/gca/subcomplex.hpp"

namespace rephom::repmodel {

struct RepComplex::RhoCache {
  std::mutex mu;
  std::vector<GValued> values;
};

groebner::PolyIdeal rep_algebra_presentation(const lie::LieData& a, const lie::LieData& g) {
  const std::size_t na = a.dim(), ng = g.dim();
  const std::size_t nv = na * ng;
  std::vector<std::string> vars;
  for (std::size_t x = 0; x < na; ++x) {
    for (std::size_t i = 0; i < ng; ++i) vars.push_back(a.names()[x] + "." + g.names()[i]);
  }
  auto var = [&](std::size_t x, std::size_t i) { return x * ng + i; };
  std::vector<groebner::Polynomial> rels;
  for (std::size_t x = 0; x < na; ++x) {
    for (std::size_t y = x + 1; y < na; ++y) {
      for (std::size_t k = 0; k < ng; ++k) {
        std::vector<groebner::Term> terms;
        for (std::size_t i = 0; i < ng; ++i) {
          for (std::size_t j = 0; j < ng; ++j) {
            const Rational& c = g.c(i, j, k);
            if (sgn(c) == 0) continue;
            groebner::Exponents e(nv, 0);
            e[var(x, i)] += 1;
            e[var(y, j)] += 1;
            terms.push_back({e, c});
          }
        }
        for (const auto& [c, f] : a.bracket_of(x, y)) {
          groebner::Exponents e(nv, 0);
          e[var(c, k)] = 1;
          terms.push_back({e, -f});
        }
        rels.push_back(groebner::Polynomial::from_terms(nv, std::move(terms)));
      }
    }
  }
  return groebner::PolyIdeal::make(std::move(vars), std::move(rels));
}

RepComplex::RepComplex(std::shared_ptr<const lie::FreeGradedLie> source, lie::LieData target)
    : source_(std::move(source)), g_(std::move(target)) {
  const auto& gens = source_->generators();
  const bool weighted = g_.is_abelian();
  std::vector<gca::Generator> ag;
  for (const auto& v : gens) {
    for (std::size_t i = 0; i < g_.dim(); ++i) {
      ag.push_back({v.name + "." + g_.names()[i], v.degree, weighted ? std::optional<int>(1) : std::nullopt});
    }
  }
  alg_ = gca::GradedCommAlgebra::create(ag);
  cache_ = std::make_shared<RhoCache>();
  cache_->values.assign(source_->total_basis_size(), {});
  d_ = gca::Derivation(alg_, -1);
  for (std::size_t v = 0; v < gens.size(); ++v) {
    const auto& dv = source_->differential_of(v);
    if (dv.is_zero()) continue;
    GValued r = rho(dv);
    for (std::size_t k = 0; k < g_.dim(); ++k) d_.set_image(generator_index(v, k), r[k]);
  }
  for (std::size_t t = 0; t < alg_->size(); ++t) {
    auto dd = d_.apply(d_.image(t));
    if (!dd.is_zero()) {
      fail(ErrorKind::CompositionNonzero, "representation complex: d^2(" + alg_->generator(t).name + ") = " + dd.to_string());
    }
  }
}

GValued RepComplex::bracket(const GValued& a, const GValued& b) const {
  GValued out(g_.dim(), alg_->zero());
  for (std::size_t i = 0; i < g_.dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < g_.dim(); ++j) {
      if (b[j].is_zero()) continue;
      const auto& br = g_.bracket_of(i, j);
      if (br.empty()) continue;
      gca::AlgebraElement p = a[i] * b[j];
      for (const auto& [k, c] : br) out[k] += p * c;
    }
  }
  return out;
}

GValued RepComplex::apply_d(const GValued& a) const {
  GValued out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(d_.apply(x));
  return out;
}

GValued RepComplex::rho_basis(std::size_t id) const {
  // Filled lazily; the lock keeps concurrent readers safe.
  {
    std::lock_guard lock(cache_->mu);
    if (!cache_->values[id].empty()) return cache_->values[id];
  }
  const auto& el = source_->element(id);
  GValued r;
  std::function<GValued(const lie::BracketTree&)> eval = [&](const lie::BracketTree& t) -> GValued {
    if (t.generator >= 0) {
      GValued v(g_.dim(), alg_->zero());
      for (std::size_t i = 0; i < g_.dim(); ++i) v[i] = alg_->gen(generator_index(static_cast<std::size_t>(t.generator), i));
      return v;
    }
    return bracket(eval(*t.left), eval(*t.right));
  };
  r = eval(*el.tree);
  std::lock_guard lock(cache_->mu);
  cache_->values[id] = r;
  return r;
}

GValued RepComplex::rho(const lie::LieElement& x) const {
  GValued out(g_.dim(), alg_->zero());
  for (const auto& [id, c] : x.coeffs) {
    GValued r = rho_basis(id);
    for (std::size_t k = 0; k < g_.dim(); ++k) out[k] += r[k] * c;
  }
  return out;
}

RepComplex build_rep_complex(const lie::FreeGradedLie& L, const lie::LieData& g) {
  return RepComplex(std::make_shared<lie::FreeGradedLie>(L), g);
}

BettiTable homology_table(const RepComplex& rc, int max_degree) {
  if (!rc.weighted()) return gca::homology_table(rc.d(), {0, max_degree, std::nullopt, {}});
  // Every generator has degree >= 1 and weight 1, so weight <= degree.
  BettiTable full = gca::homology_table(rc.d(), {0, max_degree, max_degree, {}});
  BettiTable out(TrustedRange{max_degree, std::nullopt});
  for (int q = 0; q <= max_degree; ++q) {
    std::size_t s = 0;
    for (int w = 0; w <= max_degree; ++w) s += full.get(q, w);
    out.set(q, std::nullopt, s);
  }
  return out;
}

BettiTable homology_table(const RepComplex& rc, int max_degree, int max_weight) {
  if (!rc.weighted()) fail(ErrorKind::InvalidInput, "weight grading is only available for abelian g");
  return gca::homology_table(rc.d(), {0, max_degree, max_weight, {}});
}

std::optional<std::string> check_dg_lie_map(const RepComplex& rc) {
  const auto& L = rc.source();
  auto same = [](const GValued& a, const GValued& b) {
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (!(a[k] == b[k])) return false;
    }
    return true;
  };
  for (std::size_t id = 0; id < L.total_basis_size(); ++id) {
    auto x = L.basis(id);
    if (!same(rc.rho(L.d(x)), rc.apply_d(rc.rho(x)))) return "rho(dx) != d rho(x) for x = " + L.format(x);
  }
  for (std::size_t a = 0; a < L.total_basis_size(); ++a) {
    for (std::size_t b = 0; b < L.total_basis_size(); ++b) {
      if (L.element(a).degree + L.element(b).degree > L.cutoff()) continue;
      auto x = L.basis(a), y = L.basis(b);
      if (!same(rc.rho(L.bracket(x, y)), rc.bracket(rc.rho(x), rc.rho(y)))) {
        return "rho([x,y]) != [rho x, rho y] for x = " + L.format(x) + ", y = " + L.format(y);
      }
    }
  }
  return std::nullopt;
}

}  // namespace rephom::repmodel
