#include "rephom/simplicial/pipeline.hpp"

#include <algorithm>
#include <map>

#include "rephom/error.hpp"
#include "rephom/exactlin/elimination.hpp"
#include "rephom/parallel.hpp"

namespace rephom::simplicial {

namespace {

using Multiset = std::vector<std::size_t>;

void multisets_rec(std::size_t vars, std::size_t start, int left, Multiset& cur, std::vector<Multiset>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t a = start; a < vars; ++a) {
    cur.push_back(a);
    multisets_rec(vars, a, left - 1, cur, out);
    cur.pop_back();
  }
}

// Monomials of Sym^w(Q^vars) as sorted index tuples, lexicographic.
std::vector<Multiset> monomials(std::size_t vars, int w) {
  std::vector<Multiset> out;
  Multiset cur;
  multisets_rec(vars, 0, w, cur, out);
  return out;
}

SparseMatrix sym_power(const SparseMatrix& m, int w) {
  auto source = monomials(m.cols(), w);
  auto target = monomials(m.rows(), w);
  std::map<Multiset, std::size_t> index;
  for (std::size_t r = 0; r < target.size(); ++r) index.emplace(target[r], r);
  auto cols = m.column_vectors();
  std::vector<SparseVector> images;
  images.reserve(source.size());
  for (const auto& mono : source) {
    std::map<Multiset, Rational> poly{{Multiset{}, Rational(1)}};
    for (std::size_t a : mono) {
      std::map<Multiset, Rational> next;
      for (const auto& [p, c] : poly)
        for (const auto& [b, v] : cols[a]) {
          Multiset q = p;
          q.insert(std::upper_bound(q.begin(), q.end(), b), b);
          next[q] += c * v;
        }
      poly.clear();
      for (auto& [q, c] : next)
        if (c != 0) poly.emplace(q, c);
    }
    SparseVector col;
    for (const auto& [q, c] : poly) col.emplace_back(index.at(q), c);
    canonicalize(col);
    images.push_back(std::move(col));
  }
  return SparseMatrix::from_columns(target.size(), images);
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<SparseVector> columns_of(const std::vector<SparseMatrix>& ms) {
  std::vector<SparseVector> out;
  for (const auto& m : ms) {
    auto c = m.column_vectors();
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

}  // namespace

std::size_t SimplicialVectorSpaceSlice::slice_dimension(std::size_t n, int w) const {
  std::size_t v = variables.at(n).size();
  if (w == 0) return 1;
  return binomial(v + static_cast<std::size_t>(w) - 1, static_cast<std::size_t>(w));
}

SparseMatrix SimplicialVectorSpaceSlice::face_slice(std::size_t n, std::size_t i, int w) const {
  return sym_power(faces.at(n).at(i), w);
}

SparseMatrix SimplicialVectorSpaceSlice::degeneracy_slice(std::size_t n, std::size_t j, int w) const {
  return sym_power(degeneracies.at(n).at(j), w);
}

BettiTable normalized_homology(const SimplicialVectorSpaceSlice& a, Normalization form) {
  std::size_t t = a.top();
  if (t == 0) fail(ErrorKind::CutoffExceeded, "normalized homology needs at least two levels");
  BettiTable table(TrustedRange{static_cast<int>(t) - 1, a.max_weight});
  std::vector<std::vector<std::size_t>> dims(static_cast<std::size_t>(a.max_weight) + 1);

  parallel_for(dims.size(), [&](std::size_t wi) {
    int w = static_cast<int>(wi);
    // size[n] = dim of the normalized level, out[n] = rank of its differential.
    std::vector<std::size_t> size(t + 1, 0), out(t + 2, 0);
    if (form == Normalization::KernelIntersection) {
      for (std::size_t n = 0; n <= t; ++n) {
        std::size_t dim = a.slice_dimension(n, w);
        if (n == 0) {
          size[0] = dim;
          continue;
        }
        std::vector<SparseMatrix> blocks;
        for (std::size_t i = 1; i <= n; ++i) blocks.push_back(a.face_slice(n, i, w));
        auto kernel = rank_and_kernel(SparseMatrix::vstack(blocks)).kernel;
        size[n] = kernel.size();
        SparseMatrix d0 = a.face_slice(n, 0, w);
        std::vector<SparseVector> images;
        for (const auto& k : kernel) images.push_back(d0.apply(k));
        out[n] = rank_of_vectors(images, d0.rows());
      }
    } else {
      std::vector<std::vector<SparseVector>> degenerate(t + 1);
      std::vector<std::size_t> delta(t + 1, 0);
      for (std::size_t n = 1; n <= t; ++n) {
        std::vector<SparseMatrix> blocks;
        for (std::size_t j = 0; j < n; ++j) blocks.push_back(a.degeneracy_slice(n - 1, j, w));
        degenerate[n] = columns_of(blocks);
        delta[n] = rank_of_vectors(degenerate[n], a.slice_dimension(n, w));
      }
      for (std::size_t n = 0; n <= t; ++n) {
        size[n] = a.slice_dimension(n, w) - delta[n];
        if (n == 0) continue;
        SparseMatrix boundary = a.face_slice(n, 0, w);
        for (std::size_t i = 1; i <= n; ++i) {
          SparseMatrix f = a.face_slice(n, i, w);
          std::vector<MatrixEntry> e = boundary.entries();
          for (const auto& x : f.entries()) e.push_back({x.row, x.col, (i % 2 ? -1 : 1) * x.value});
          boundary = SparseMatrix::from_entries(boundary.rows(), boundary.cols(), std::move(e));
        }
        auto vecs = degenerate[n - 1];
        auto cols = boundary.column_vectors();
        vecs.insert(vecs.end(), cols.begin(), cols.end());
        out[n] = rank_of_vectors(vecs, boundary.rows()) - delta[n - 1];
      }
    }
    dims[wi].resize(t);
    for (std::size_t n = 0; n < t; ++n) dims[wi][n] = size[n] - out[n] - out[n + 1];
  });

  for (std::size_t w = 0; w < dims.size(); ++w)
    for (std::size_t n = 0; n < t; ++n) table.set(static_cast<int>(n), static_cast<int>(w), dims[w][n]);
  return table;
}

SimplicialVectorSpaceSlice additive_rep_levelwise(const SemiFreeSimplicialGroup& g, int d, int max_weight) {
  if (d < 1) fail(ErrorKind::InvalidInput, "G_a^d needs d >= 1");
  if (max_weight < 0) fail(ErrorKind::InvalidInput, "weight cutoff must be >= 0");
  auto ud = static_cast<std::size_t>(d);
  SimplicialVectorSpaceSlice a;
  a.max_weight = max_weight;
  std::size_t t = g.top();
  a.variables.resize(t + 1);
  for (std::size_t n = 0; n <= t; ++n)
    for (const auto& name : g.names[n])
      for (std::size_t k = 0; k < ud; ++k)
        a.variables[n].push_back(d == 1 ? "t[" + name + "]" : "t" + std::to_string(k + 1) + "[" + name + "]");
  // A word w acts on the coordinates of G_a^d by t_k[w] = sum_c e_c(w) t_k[c].
  auto matrix = [&](const groupschemes::FreeGroupMap& f, std::size_t from, std::size_t to) {
    std::vector<MatrixEntry> entries;
    for (std::size_t b = 0; b < g.rank(from); ++b) {
      auto sums = f.images[b].exponent_sums(g.rank(to));
      for (std::size_t c = 0; c < sums.size(); ++c)
        if (sums[c] != 0)
          for (std::size_t k = 0; k < ud; ++k) entries.push_back({c * ud + k, b * ud + k, Rational(sums[c])});
    }
    return SparseMatrix::from_entries(g.rank(to) * ud, g.rank(from) * ud, std::move(entries));
  };
  a.faces.resize(t + 1);
  a.degeneracies.resize(t + 1);
  for (std::size_t n = 0; n <= t; ++n) {
    if (n >= 1)
      for (const auto& f : g.faces[n]) a.faces[n].push_back(matrix(f, n, n - 1));
    if (n < t)
      for (const auto& s : g.degeneracies[n]) a.degeneracies[n].push_back(matrix(s, n, n + 1));
  }
  return a;
}

SimplicialVectorSpaceSlice loday_construction(const FiniteSimplicialSet& x, int d, int max_weight, std::size_t top) {
  if (d < 1) fail(ErrorKind::InvalidInput, "Q[t_1..t_d] needs d >= 1");
  if (max_weight < 0) fail(ErrorKind::InvalidInput, "weight cutoff must be >= 0");
  auto ud = static_cast<std::size_t>(d);
  SimplicialVectorSpaceSlice a;
  a.max_weight = max_weight;
  std::vector<std::vector<Simplex>> levels(top + 1);
  std::vector<std::map<Simplex, std::size_t>> index(top + 1);
  a.variables.resize(top + 1);
  for (std::size_t n = 0; n <= top; ++n) {
    levels[n] = x.level(n);
    for (std::size_t s = 0; s < levels[n].size(); ++s) {
      index[n][levels[n][s]] = s;
      for (std::size_t k = 0; k < ud; ++k)
        a.variables[n].push_back((d == 1 ? "t" : "t" + std::to_string(k + 1)) + "[" + x.format(levels[n][s]) + "]");
    }
  }
  // A set map f sends t_k[s] to t_k[f(s)].
  auto matrix = [&](std::size_t from, std::size_t to, auto&& f) {
    std::vector<MatrixEntry> entries;
    for (std::size_t s = 0; s < levels[from].size(); ++s) {
      std::size_t image = index[to].at(f(levels[from][s]));
      for (std::size_t k = 0; k < ud; ++k) entries.push_back({image * ud + k, s * ud + k, Rational(1)});
    }
    return SparseMatrix::from_entries(levels[to].size() * ud, levels[from].size() * ud, std::move(entries));
  };
  a.faces.resize(top + 1);
  a.degeneracies.resize(top + 1);
  for (std::size_t n = 0; n <= top; ++n) {
    for (std::size_t i = 0; n >= 1 && i <= n; ++i)
      a.faces[n].push_back(matrix(n, n - 1, [&](const Simplex& s) { return x.face(s, i); }));
    for (std::size_t j = 0; n < top && j <= n; ++j)
      a.degeneracies[n].push_back(matrix(n, n + 1, [&](const Simplex& s) { return x.degeneracy(s, j); }));
  }
  return a;
}

SimplicialVectorSpaceSlice loday_construction(const FiniteSimplicialSet& x, const groupschemes::GroupSchemeData& a,
                                              int max_weight, std::size_t top) {
  if (a.kind() != groupschemes::GroupKind::Additive)
    fail(ErrorKind::UnsupportedCoefficients,
         "coefficient ring O(" + a.name() + ") has no weight grading; only polynomial rings are supported");
  return loday_construction(x, a.n(), max_weight, top);
}

BettiTable simplicial_hr(const FiniteSimplicialSet& x, const groupschemes::GroupSchemeData& g, int max_degree,
                         int max_weight, Normalization form) {
  if (g.kind() != groupschemes::GroupKind::Additive)
    fail(ErrorKind::UnsupportedGroup, "the simplicial pipeline supports G_a^d only, not " + g.name());
  if (max_degree < 0) fail(ErrorKind::InvalidInput, "degree bound must be >= 0");
  auto loops = kan_loop_group(x, static_cast<std::size_t>(max_degree) + 1);
  return normalized_homology(additive_rep_levelwise(loops, g.n(), max_weight), form);
}

BettiTable loday_homology(const FiniteSimplicialSet& x, int d, int max_degree, int max_weight, Normalization form) {
  if (max_degree < 0) fail(ErrorKind::InvalidInput, "degree bound must be >= 0");
  return normalized_homology(loday_construction(x, d, max_weight, static_cast<std::size_t>(max_degree) + 1), form);
}

}  // namespace rephom::simplicial
