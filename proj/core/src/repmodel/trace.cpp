#include "rephom/repmodel/trace.hpp"

#include <vector>

#include "rephom/error.hpp"
#include "rephom/exactlin/elimination.hpp"
#include "rephom/repmodel/invariants.hpp"

namespace rephom::repmodel {

void SymSquare::add(SymChain& c, std::size_t a, std::size_t b, const Rational& k) const {
  if (sgn(k) == 0) return;
  Rational coeff = k;
  if (a > b) {
    const int da = L_->element(a).degree, db = L_->element(b).degree;
    if ((da * db) % 2 != 0) coeff = -coeff;
    std::swap(a, b);
  }
  if (a == b && L_->element(a).degree % 2 != 0) return;
  auto [it, inserted] = c.terms.try_emplace({a, b}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) c.terms.erase(it);
  }
}

SymChain SymSquare::product(const lie::LieElement& x, const lie::LieElement& y) const {
  SymChain out;
  for (const auto& [a, ca] : x.coeffs) {
    for (const auto& [b, cb] : y.coeffs) add(out, a, b, ca * cb);
  }
  return out;
}

SymChain SymSquare::d(const SymChain& c) const {
  SymChain out;
  for (const auto& [ab, k] : c.terms) {
    auto [a, b] = ab;
    lie::LieElement x = L_->basis(a), y = L_->basis(b);
    const int dx = L_->element(a).degree;
    for (const auto& [i, ci] : L_->d(x).coeffs) add(out, i, b, k * ci);
    Rational s = (dx % 2 != 0) ? -k : k;
    for (const auto& [j, cj] : L_->d(y).coeffs) add(out, a, j, s * cj);
  }
  return out;
}

SymChain SymSquare::ad(const lie::LieElement& z, const SymChain& c) const {
  SymChain out;
  for (const auto& [id, cz] : z.coeffs) {
    const int dz = L_->element(id).degree;
    lie::LieElement zb = L_->basis(id);
    for (const auto& [ab, k] : c.terms) {
      auto [a, b] = ab;
      const int dx = L_->element(a).degree;
      for (const auto& [i, ci] : L_->bracket(zb, L_->basis(a)).coeffs) add(out, i, b, cz * k * ci);
      Rational s = cz * k;
      if ((dz * dx) % 2 != 0) s = -s;
      for (const auto& [j, cj] : L_->bracket(zb, L_->basis(b)).coeffs) add(out, a, j, s * cj);
    }
  }
  return out;
}

std::optional<int> SymSquare::degree(const SymChain& c) const {
  if (c.is_zero()) return std::nullopt;
  auto deg = [&](const std::pair<std::size_t, std::size_t>& ab) {
    return L_->element(ab.first).degree + L_->element(ab.second).degree;
  };
  int d0 = deg(c.terms.begin()->first);
  for (const auto& [ab, k] : c.terms) {
    if (deg(ab) != d0) fail(ErrorKind::NonHomogeneous, "mixed-degree symmetric chain");
  }
  return d0;
}

bool SymSquare::in_commutator_span(const SymChain& c) const {
  if (c.is_zero()) return true;
  const int n = *degree(c);
  if (n - 1 > L_->cutoff()) {
    fail(ErrorKind::CutoffExceeded, "commutator span in degree " + std::to_string(n) + " needs cutoff >= " +
                                        std::to_string(n - 1));
  }
  // Coordinates over canonical pairs of total degree n.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  auto coords = [&](const SymChain& s) {
    SparseVector v;
    for (const auto& [ab, k] : s.terms) {
      auto [it, inserted] = index.try_emplace(ab, index.size());
      v.emplace_back(it->second, k);
    }
    canonicalize(v);
    return v;
  };
  std::vector<SparseVector> gens;
  for (int dz = 1; dz <= n - 2; ++dz) {
    for (std::size_t z : L_->basis_ids(dz)) {
      for (int da = 1; da <= n - dz - 1; ++da) {
        const int db = n - dz - da;
        if (db < da) continue;
        for (std::size_t a : L_->basis_ids(da)) {
          for (std::size_t b : L_->basis_ids(db)) {
            if (da == db && b < a) continue;
            SymChain s;
            add(s, a, b, 1);
            if (s.is_zero()) continue;
            SparseVector v = coords(ad(L_->basis(z), s));
            if (!v.empty()) gens.push_back(std::move(v));
          }
        }
      }
    }
  }
  SparseVector target = coords(c);
  EchelonBasis span(index.size());
  for (const auto& v : gens) span.insert(v);
  return span.contains(target);
}

bool SymSquare::closed_in_coinvariants(const SymChain& c) const { return in_commutator_span(d(c)); }

std::string SymSquare::format(const SymChain& c) const {
  if (c.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [ab, k] : c.terms) {
    Rational a = abs(k);
    if (first) {
      if (sgn(k) < 0) out += "-";
    } else {
      out += sgn(k) < 0 ? " - " : " + ";
    }
    first = false;
    if (a != 1) out += a.get_str() + "*";
    out += L_->element(ab.first).label + "." + L_->element(ab.second).label;
  }
  return out;
}

TraceResult drinfeld_trace_quadratic(const RepComplex& rc, const SymChain& chain) {
  const auto& g = rc.target();
  if (!g.has_form()) fail(ErrorKind::NoInvariantForm, "Lie algebra " + g.name() + " carries no invariant form");
  const auto& L = rc.source();
  TraceResult res;
  res.value = rc.algebra()->zero();
  for (const auto& [ab, k] : chain.terms) {
    GValued x = rc.rho(L.basis(ab.first));
    GValued y = rc.rho(L.basis(ab.second));
    for (std::size_t i = 0; i < g.dim(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < g.dim(); ++j) {
        const Rational& b = g.form(i, j);
        if (sgn(b) == 0 || y[j].is_zero()) continue;
        res.value += (x[i] * y[j]) * (b * k);
      }
    }
  }
  res.invariant = AdjointAction(rc).is_invariant(res.value);
  res.closed = rc.d().apply(res.value).is_zero();
  return res;
}

}  // namespace rephom::repmodel
