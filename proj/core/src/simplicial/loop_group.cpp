#include "rephom/simplicial/loop_group.hpp"

#include <map>

#include "rephom/error.hpp"

namespace rephom::simplicial {

using groupschemes::FreeGroupMap;
using groupschemes::GroupWord;

namespace {

using Index = std::map<Simplex, std::size_t>;

// Word of an element of the source set in the free group of a level:
// a generator, or 1 if it is not among the generators.
GroupWord word_of(const Index& idx, const Simplex& s) {
  auto it = idx.find(s);
  return it == idx.end() ? GroupWord{} : GroupWord::generator(it->second);
}

void fill_names(SemiFreeSimplicialGroup& g, const FiniteSimplicialSet& x) {
  g.names.resize(g.generators.size());
  for (std::size_t n = 0; n < g.generators.size(); ++n)
    for (const auto& s : g.generators[n]) g.names[n].push_back(x.format(s));
}

std::string map_mismatch(const char* what, std::size_t n, std::size_t i) {
  return std::string(what) + " at level " + std::to_string(n) + ", index " + std::to_string(i);
}

}  // namespace

std::optional<std::string> SemiFreeSimplicialGroup::check_identities() const {
  std::size_t t = top();
  for (std::size_t n = 2; n <= t; ++n)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (faces[n - 1][i].compose(faces[n][j]) != faces[n - 1][j - 1].compose(faces[n][i]))
          return map_mismatch("d_i d_j != d_{j-1} d_i", n, i);
  for (std::size_t n = 0; n < t; ++n)
    for (std::size_t j = 0; j <= n; ++j) {
      const auto& s = degeneracies[n][j];
      for (std::size_t i = 0; i <= n + 1; ++i) {
        FreeGroupMap lhs = faces[n + 1][i].compose(s);
        bool ok;
        if (i == j || i == j + 1) {
          ok = lhs == FreeGroupMap::identity(rank(n));
        } else if (i < j) {
          ok = lhs == degeneracies[n - 1][j - 1].compose(faces[n][i]);
        } else {
          ok = lhs == degeneracies[n - 1][j].compose(faces[n][i - 1]);
        }
        if (!ok) return map_mismatch("d_i s_j identity fails", n, j);
      }
      if (n + 1 < t)
        for (std::size_t i = 0; i <= j; ++i)
          if (degeneracies[n + 1][i].compose(s) != degeneracies[n + 1][j + 1].compose(degeneracies[n][i]))
            return map_mismatch("s_i s_j != s_{j+1} s_i", n, j);
    }
  return std::nullopt;
}

SemiFreeSimplicialGroup kan_loop_group(const FiniteSimplicialSet& x, std::size_t top) {
  if (!x.reduced()) fail(ErrorKind::NotReduced, "the Kan loop group needs a reduced simplicial set");
  SemiFreeSimplicialGroup g;
  std::vector<Index> idx(top + 1);
  g.generators.resize(top + 1);
  for (std::size_t n = 0; n <= top; ++n)
    for (auto& s : x.level(n + 1))
      if (s.surj[1] == 1) {
        idx[n][s] = g.generators[n].size();
        g.generators[n].push_back(std::move(s));
      }
  g.faces.resize(top + 1);
  g.degeneracies.resize(top + 1);
  for (std::size_t n = 0; n <= top; ++n) {
    if (n >= 1) {
      for (std::size_t i = 0; i <= n; ++i) {
        FreeGroupMap f;
        for (const auto& s : g.generators[n]) {
          if (i == 0) {
            f.images.push_back(word_of(idx[n - 1], x.face(s, 1)) * word_of(idx[n - 1], x.face(s, 0)).inverse());
          } else {
            f.images.push_back(word_of(idx[n - 1], x.face(s, i + 1)));
          }
        }
        g.faces[n].push_back(std::move(f));
      }
    }
    if (n < top)
      for (std::size_t j = 0; j <= n; ++j) {
        FreeGroupMap f;
        for (const auto& s : g.generators[n]) f.images.push_back(word_of(idx[n + 1], x.degeneracy(s, j + 1)));
        g.degeneracies[n].push_back(std::move(f));
      }
  }
  fill_names(g, x);
  return g;
}

SemiFreeSimplicialGroup milnor_fk(const FiniteSimplicialSet& k, std::size_t top) {
  SemiFreeSimplicialGroup g;
  std::vector<Index> idx(top + 1);
  g.generators.resize(top + 1);
  for (std::size_t n = 0; n <= top; ++n)
    for (auto& s : k.level(n))
      if (!k.is_basepoint(s)) {
        idx[n][s] = g.generators[n].size();
        g.generators[n].push_back(std::move(s));
      }
  g.faces.resize(top + 1);
  g.degeneracies.resize(top + 1);
  for (std::size_t n = 0; n <= top; ++n) {
    if (n >= 1)
      for (std::size_t i = 0; i <= n; ++i) {
        FreeGroupMap f;
        for (const auto& s : g.generators[n]) f.images.push_back(word_of(idx[n - 1], k.face(s, i)));
        g.faces[n].push_back(std::move(f));
      }
    if (n < top)
      for (std::size_t j = 0; j <= n; ++j) {
        FreeGroupMap f;
        for (const auto& s : g.generators[n]) f.images.push_back(word_of(idx[n + 1], k.degeneracy(s, j)));
        g.degeneracies[n].push_back(std::move(f));
      }
  }
  fill_names(g, k);
  return g;
}

std::optional<std::string> compare_milnor_with_kan(const FiniteSimplicialSet& k, std::size_t top) {
  auto fk = milnor_fk(k, top);
  auto sk = FiniteSimplicialSet::suspension(k);
  auto gk = kan_loop_group(sk, top);
  for (std::size_t n = 0; n <= top; ++n) {
    if (fk.rank(n) != gk.rank(n)) return "generator counts differ at level " + std::to_string(n);
    // perm[a] = index in GSigmaK of the image of FK generator a.
    std::map<Simplex, std::size_t> where;
    for (std::size_t b = 0; b < gk.rank(n); ++b) where[gk.generators[n][b]] = b;
    std::vector<std::size_t> perm;
    for (const auto& s : fk.generators[n]) {
      auto it = where.find(suspension_simplex(k, s));
      if (it == where.end()) return "generator " + k.format(s) + " has no counterpart";
      perm.push_back(it->second);
    }
    if (n == 0) continue;
    std::vector<std::size_t> prev(fk.rank(n - 1));
    {
      std::map<Simplex, std::size_t> w;
      for (std::size_t b = 0; b < gk.rank(n - 1); ++b) w[gk.generators[n - 1][b]] = b;
      for (std::size_t a = 0; a < fk.rank(n - 1); ++a) prev[a] = w.at(suspension_simplex(k, fk.generators[n - 1][a]));
    }
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t a = 0; a < fk.rank(n); ++a) {
        std::vector<groupschemes::Letter> letters;
        for (auto l : fk.faces[n][i].images[a].letters()) letters.push_back({prev[l.symbol], l.exponent});
        if (GroupWord(letters) != gk.faces[n][i].images[perm[a]])
          return "face d_" + std::to_string(i) + " differs on " + k.format(fk.generators[n][a]);
      }
  }
  return std::nullopt;
}

}  // namespace rephom::simplicial
