#include "rephom/groebner/buchberger.hpp"

#include <algorithm>
#include <set>

#include "rephom/error.hpp"

namespace rephom::groebner {

PolyIdeal PolyIdeal::make(std::vector<std::string> variables, std::vector<Polynomial> generators) {
  PolyIdeal i;
  i.variables = std::move(variables);
  for (auto& g : generators) {
    if (g.nvars() != i.variables.size() && !g.is_zero()) {
      fail(ErrorKind::DimensionMismatch, "generator arity differs from the variable list");
    }
    if (!g.is_zero()) i.generators.push_back(g.monic());
  }
  return i;
}

std::string PolyIdeal::to_string() const {
  std::string out = "<";
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (k) out += ", ";
    out += generators[k].to_string(variables);
  }
  return out + ">";
}

namespace {

Exponents difference(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

int degree_of(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && b[i]) return false;
  }
  return true;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Exponents l = lcm(f.leading().exps, g.leading().exps);
  Polynomial a = f.times_term(difference(l, f.leading().exps), 1 / f.leading().coeff);
  return a.sub_scaled(g, difference(l, g.leading().exps), 1 / g.leading().coeff);
}

}  // namespace

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis) {
  std::vector<Term> rest;
  Polynomial cur = p;
  const std::size_t n = p.nvars();
  while (!cur.is_zero()) {
    const Term& lt = cur.leading();
    const Polynomial* hit = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && divides(g.leading().exps, lt.exps)) {
        hit = &g;
        break;
      }
    }
    if (hit) {
      cur = cur.sub_scaled(*hit, difference(lt.exps, hit->leading().exps), lt.coeff / hit->leading().coeff);
    } else {
      rest.push_back(lt);
      cur = cur.without_leading();
    }
  }
  return Polynomial::from_terms(n, std::move(rest));
}

GroebnerResult groebner_basis(const PolyIdeal& ideal, std::size_t effort_cap) {
  GroebnerResult result;
  std::vector<Polynomial> g;
  for (const auto& f : ideal.generators) {
    if (!f.is_zero()) g.push_back(f.monic());
  }
  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});
  }
  auto pair_key = [&](const std::pair<std::size_t, std::size_t>& p) {
    return lcm(g[p.first].leading().exps, g[p.second].leading().exps);
  };

  while (!pending.empty()) {
    auto best = pending.begin();
    Exponents best_l = pair_key(*best);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Exponents l = pair_key(*it);
      if (degree_of(l) < degree_of(best_l) || (degree_of(l) == degree_of(best_l) && degrevlex_greater(best_l, l))) {
        best = it;
        best_l = std::move(l);
      }
    }
    auto [i, j] = *best;
    pending.erase(best);

    const auto& li = g[i].leading().exps;
    const auto& lj = g[j].leading().exps;
    if (coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (!divides(g[k].leading().exps, best_l)) continue;
      auto ik = std::minmax(i, k);
      auto jk = std::minmax(j, k);
      if (!pending.count({ik.first, ik.second}) && !pending.count({jk.first, jk.second})) chain = true;
    }
    if (chain) continue;

    if (result.pairs_processed >= effort_cap) {
      result.exhausted = true;
      return result;
    }
    ++result.pairs_processed;
    Polynomial r = normal_form(s_polynomial(g[i], g[j]), g);
    if (r.is_zero()) continue;
    g.push_back(r.monic());
    std::size_t n = g.size() - 1;
    for (std::size_t k = 0; k < n; ++k) pending.insert({k, n});
  }

  // Minimal basis, then inter-reduction.
  std::vector<Polynomial> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b) continue;
      const auto& la = g[a].leading().exps;
      const auto& lb = g[b].leading().exps;
      if (divides(lb, la) && (la != lb || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[a]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Polynomial> others;
    for (std::size_t b = 0; b < minimal.size(); ++b) {
      if (b != a) others.push_back(minimal[b]);
    }
    const Term& lt = minimal[a].leading();
    Polynomial tail = normal_form(minimal[a].without_leading(), others);
    reduced.push_back((tail + Polynomial::from_terms(lt.exps.size(), {lt})).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
    return degrevlex_greater(b.leading().exps, a.leading().exps);
  });
  result.basis = std::move(reduced);
  return result;
}

bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

IdealComparison ideals_equal(const PolyIdeal& a, const PolyIdeal& b, std::size_t effort_cap) {
  if (a.variables != b.variables) fail(ErrorKind::DimensionMismatch, "ideals over different variable lists");
  IdealComparison out;
  auto ga = groebner_basis(a, effort_cap);
  auto gb = groebner_basis(b, effort_cap);
  if (ga.exhausted || gb.exhausted) {
    out.exhausted = true;
    return out;
  }
  out.equal = true;
  for (const auto& f : a.generators) {
    if (!normal_form(f, gb.basis).is_zero()) out.equal = false;
  }
  for (const auto& f : b.generators) {
    if (!normal_form(f, ga.basis).is_zero()) out.equal = false;
  }
  return out;
}

}  // namespace rephom::groebner
