#include <algorithm>
#include <functional>

#include "rephom/error.hpp"
#include "rephom/gca/derivation.hpp"

namespace rephom::gca {

int minimal_degree(const GradedCommAlgebra& alg) {
  int d = 0;
  for (const auto& g : alg.generators()) {
    if (g.degree < 0) d += g.degree;
  }
  return d;
}

std::vector<Monomial> degree_slice_basis(const GradedCommAlgebra& alg, int degree, std::optional<int> weight,
                                         const Cutoffs& cutoffs) {
  const auto& gens = alg.generators();
  const std::size_t n = gens.size();
  if (weight && !alg.weighted()) fail(ErrorKind::InvalidInput, "weight requested on an unweighted algebra");

  // Weight pruning is sound only if no factor can carry negative weight.
  bool weight_monotone = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (alg.invertible(i) && alg.weighted() && *gens[i].weight != 0) weight_monotone = false;
  }

  // Order: non-positive odd generators, degree-0 even generators, then the
  // positive-degree ones by increasing degree.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) {
    if (gens[i].degree < 0 && !gens[i].odd()) {
      fail(ErrorKind::InfiniteSlice, "even generator of negative degree: " + gens[i].name);
    }
    if (gens[i].degree < 0) order.push_back(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (gens[i].degree == 0) {
      bool bounded = cutoffs.aux_poly_degree.has_value() ||
                     (weight && weight_monotone && *gens[i].weight > 0 && !alg.invertible(i));
      if (!bounded) {
        fail(ErrorKind::InfiniteSlice, "degree-0 generator " + gens[i].name + " needs a weight or aux cutoff");
      }
      order.push_back(i);
    }
  }
  std::vector<std::size_t> positive;
  for (std::size_t i = 0; i < n; ++i) {
    if (gens[i].degree > 0) positive.push_back(i);
  }
  std::stable_sort(positive.begin(), positive.end(),
                   [&](std::size_t a, std::size_t b) { return gens[a].degree < gens[b].degree; });
  const std::size_t first_positive = order.size();
  order.insert(order.end(), positive.begin(), positive.end());

  int negative_total = minimal_degree(alg);
  std::vector<Monomial> out;
  Monomial cur = alg.unit_monomial();

  std::function<void(std::size_t, int, int, int)> rec = [&](std::size_t k, int rem_deg, int rem_w, int aux) {
    if (weight && weight_monotone && rem_w < 0) return;
    if (k == order.size()) {
      if (rem_deg == 0 && (!weight || rem_w == 0)) out.push_back(cur);
      return;
    }
    std::size_t i = order[k];
    const auto& g = gens[i];
    int gw = alg.weighted() ? *g.weight : 0;
    if (k >= first_positive && rem_deg < 0) return;
    if (g.degree < 0) {
      rec(k + 1, rem_deg, rem_w, aux);
      cur.exps[i] = 1;
      rec(k + 1, rem_deg - g.degree, rem_w - gw, aux);
      cur.exps[i] = 0;
      return;
    }
    if (g.degree == 0) {
      int lo = 0, hi = 0;
      if (cutoffs.aux_poly_degree) {
        int budget = *cutoffs.aux_poly_degree - aux;
        hi = budget;
        lo = alg.invertible(i) ? -budget : 0;
        if (weight && weight_monotone && gw > 0) hi = std::min(hi, rem_w / gw);
      } else {
        hi = rem_w / gw;
      }
      for (int e = lo; e <= hi; ++e) {
        cur.exps[i] = e;
        rec(k + 1, rem_deg, rem_w - e * gw, aux + (e < 0 ? -e : e));
      }
      cur.exps[i] = 0;
      return;
    }
    int max_e = g.odd() ? std::min(1, rem_deg / g.degree) : rem_deg / g.degree;
    for (int e = 0; e <= max_e; ++e) {
      cur.exps[i] = e;
      rec(k + 1, rem_deg - e * g.degree, rem_w - e * gw, aux);
    }
    cur.exps[i] = 0;
  };
  (void)negative_total;
  rec(0, degree, weight.value_or(0), 0);
  std::sort(out.begin(), out.end());
  return out;
}

SliceIndex::SliceIndex(std::vector<Monomial> basis) : basis_(std::move(basis)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::optional<std::size_t> SliceIndex::find(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseVector SliceIndex::coordinates(const AlgebraElement& e) const {
  SparseVector v;
  for (const auto& [m, c] : e.terms()) {
    auto i = find(m);
    if (!i) {
      fail(ErrorKind::CutoffExceeded, "term " + e.algebra()->format(m) + " lies outside the truncated slice");
    }
    v.emplace_back(*i, c);
  }
  canonicalize(v);
  return v;
}

SparseMatrix derivation_matrix(const Derivation& d, const SliceIndex& domain, const SliceIndex& codomain) {
  std::vector<SparseVector> cols(domain.size());
  for (std::size_t j = 0; j < domain.size(); ++j) {
    cols[j] = codomain.coordinates(d.apply(domain.basis()[j]));
  }
  return SparseMatrix::from_columns(codomain.size(), cols);
}

ChainSlice slice_matrix(const Derivation& d, int degree, std::optional<int> weight, const Cutoffs& cutoffs) {
  const auto& alg = *d.algebra();
  SliceIndex dom(degree_slice_basis(alg, degree, weight, cutoffs));
  SliceIndex cod(degree_slice_basis(alg, degree + d.shift(), weight, cutoffs));
  return ChainSlice(degree, weight, derivation_matrix(d, dom, cod));
}

DSquaredReport check_d_squared(const Derivation& d, const DSquaredOptions& options) {
  DSquaredReport report;
  const auto& alg = *d.algebra();
  std::vector<std::optional<int>> weights;
  if (alg.weighted() && options.max_weight) {
    for (int w = 0; w <= *options.max_weight; ++w) weights.push_back(w);
  } else {
    weights.push_back(std::nullopt);
  }
  for (int deg = minimal_degree(alg); deg <= options.max_degree; ++deg) {
    for (const auto& w : weights) {
      for (const auto& m : degree_slice_basis(alg, deg, w, options.cutoffs)) {
        ++report.checked;
        AlgebraElement dd = d.apply(d.apply(m));
        if (!dd.is_zero()) {
          report.ok = false;
          report.degree = deg;
          report.witness = alg.format(m);
          report.residue = dd.to_string();
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace rephom::gca
