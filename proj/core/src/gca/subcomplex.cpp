#include "rephom/gca/subcomplex.hpp"

#include <map>

#include "rephom/error.hpp"
#include "rephom/exactlin/elimination.hpp"
#include "rephom/parallel.hpp"

namespace rephom::gca {

namespace {

std::vector<SparseVector> unit_vectors(std::size_t n) {
  std::vector<SparseVector> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].emplace_back(i, Rational(1));
  return out;
}


struct Level {
  std::size_t slice_dim = 0;
  std::vector<SparseVector> kernel;
  std::vector<SparseMatrix> constraint_mats;
};

Level build_level(const GradedCommAlgebra& alg, const std::vector<Derivation>& constraints, int degree,
                  std::optional<int> weight, const Cutoffs& cutoffs) {
  Level lv;
  SliceIndex dom(degree_slice_basis(alg, degree, weight, cutoffs));
  lv.slice_dim = dom.size();
  if (constraints.empty() || dom.size() == 0) {
    lv.kernel = unit_vectors(dom.size());
    return lv;
  }
  std::vector<MatrixEntry> stacked;
  std::size_t offset = 0;
  for (const auto& c : constraints) {
    SliceIndex cod(degree_slice_basis(alg, degree + c.shift(), weight, cutoffs));
    SparseMatrix m = derivation_matrix(c, dom, cod);
    for (const auto& e : m.entries()) stacked.push_back({e.row + offset, e.col, e.value});
    offset += cod.size();
    lv.constraint_mats.push_back(std::move(m));
  }
  lv.kernel = rank_and_kernel(SparseMatrix::from_entries(offset, dom.size(), stacked)).kernel;
  return lv;
}

}  // namespace

std::vector<SparseVector> constrained_slice(const std::vector<Derivation>& constraints, int degree,
                                            std::optional<int> weight, const Cutoffs& cutoffs) {
  if (constraints.empty()) fail(ErrorKind::InvalidInput, "constrained_slice needs at least one constraint");
  return build_level(*constraints.front().algebra(), constraints, degree, weight, cutoffs).kernel;
}

BettiTable homology_table(const Derivation& d, const HomologyRequest& req,
                          const std::vector<Derivation>& constraints) {
  const GradedCommAlgebra& alg = *d.algebra();
  if (req.max_degree < req.min_degree) fail(ErrorKind::InvalidInput, "empty degree range");
  for (const auto& c : constraints) {
    if (c.algebra() != d.algebra()) fail(ErrorKind::MixedAlgebras, "constraint on a different algebra");
  }
  std::vector<std::optional<int>> weights;
  if (alg.weighted()) {
    if (!req.max_weight) fail(ErrorKind::InfiniteSlice, "weighted algebra needs a weight bound");
    for (int w = 0; w <= *req.max_weight; ++w) weights.push_back(w);
  } else {
    weights.push_back(std::nullopt);
  }
  TrustedRange range{req.max_degree, alg.weighted() ? req.max_weight : std::nullopt};
  BettiTable table(range);
  const int lo = req.min_degree;
  const int hi = req.max_degree + 1;
  const int floor_degree = minimal_degree(alg);

  // One job per (weight, degree): build the constrained subspace and the rank
  // of d restricted to it.
  struct Job {
    std::optional<int> weight;
    int degree;
    std::size_t dim = 0;
    std::size_t rank_out = 0;
  };
  std::vector<Job> jobs;
  for (auto w : weights) {
    for (int q = lo; q <= hi; ++q) jobs.push_back({w, q});
  }
  parallel_for(jobs.size(), [&](std::size_t j) {
    Job& job = jobs[j];
    Level here = build_level(alg, constraints, job.degree, job.weight, req.cutoffs);
    job.dim = here.kernel.size();
    if (job.dim == 0 || job.degree - 1 < floor_degree) return;
    ChainSlice out = slice_matrix(d, job.degree, job.weight, req.cutoffs);
    std::vector<SparseVector> images;
    images.reserve(here.kernel.size());
    for (const auto& v : here.kernel) images.push_back(out.matrix.apply(v));
    if (!constraints.empty()) {
      Level below = build_level(alg, constraints, job.degree - 1, job.weight, req.cutoffs);
      for (const auto& img : images) {
        for (const auto& m : below.constraint_mats) {
          if (!m.apply(img).empty()) {
            fail(ErrorKind::ActionNotChainMap, "differential leaves the constrained subcomplex in degree " +
                                                   std::to_string(job.degree));
          }
        }
      }
    }
    job.rank_out = rank_of_vectors(images, out.codomain_dim);
  });

  std::map<std::pair<std::optional<int>, int>, const Job*> by_slot;
  for (const auto& job : jobs) by_slot[{job.weight, job.degree}] = &job;
  for (auto w : weights) {
    for (int q = lo; q <= req.max_degree; ++q) {
      const Job* here = by_slot.at({w, q});
      const Job* above = by_slot.at({w, q + 1});
      std::size_t h = here->dim - here->rank_out - above->rank_out;
      table.set(q, w, h);
    }
  }
  return table;
}

bool is_boundary(const Derivation& d, const AlgebraElement& e, const Cutoffs& cutoffs) {
  if (e.is_zero()) return true;
  const int q = *e.degree();
  const auto w = e.algebra()->weighted() ? e.weight() : std::nullopt;
  ChainSlice in = slice_matrix(d, q + 1, w, cutoffs);
  SliceIndex target(degree_slice_basis(*e.algebra(), q, w, cutoffs));
  EchelonBasis span(target.size());
  for (const auto& col : in.matrix.column_vectors()) span.insert(col);
  return span.contains(target.coordinates(e));
}

}  // namespace rephom::gca
