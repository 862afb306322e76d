#include "rephom/simplicial/simplicial_set.hpp"

#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rephom/error.hpp"

namespace rephom::simplicial {

namespace {

std::vector<int> identity_surj(std::size_t k) {
  std::vector<int> s(k + 1);
  for (std::size_t i = 0; i <= k; ++i) s[i] = static_cast<int>(i);
  return s;
}

std::vector<int> constant_surj(std::size_t m) { return std::vector<int>(m + 1, 0); }

void surjections_rec(std::size_t pos, std::size_t m, std::size_t k, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (pos > m) {
    if (static_cast<std::size_t>(cur.back()) == k) out.push_back(cur);
    return;
  }
  int prev = cur[pos - 1];
  std::size_t remaining = m - pos + 1;
  // Stay on the same value only if the remaining steps still reach k.
  if (k - static_cast<std::size_t>(prev) <= remaining - 1) {
    cur.push_back(prev);
    surjections_rec(pos + 1, m, k, cur, out);
    cur.pop_back();
  }
  if (static_cast<std::size_t>(prev) < k) {
    cur.push_back(prev + 1);
    surjections_rec(pos + 1, m, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> surjections(std::size_t m, std::size_t k) {
  std::vector<std::vector<int>> out;
  if (k > m) return out;
  std::vector<int> cur{0};
  if (m == 0) {
    out.push_back(cur);
    return out;
  }
  surjections_rec(1, m, k, cur, out);
  return out;
}

Simplex FiniteSimplicialSet::basepoint(std::size_t level) const {
  return Simplex{0, 0, constant_surj(level)};
}

Simplex FiniteSimplicialSet::cell_simplex(std::size_t dim, std::size_t i) const {
  if (i >= cell_count(dim)) fail(ErrorKind::InvalidInput, "no such cell");
  return Simplex{dim, i, identity_surj(dim)};
}

std::optional<std::size_t> FiniteSimplicialSet::find_cell(const std::string& name) const {
  for (std::size_t d = 0; d < cells_.size(); ++d)
    for (std::size_t i = 0; i < cells_[d].size(); ++i)
      if (cells_[d][i].name == name) return i;
  return std::nullopt;
}

Simplex FiniteSimplicialSet::face(const Simplex& s, std::size_t i) const {
  std::size_t m = s.dim();
  if (m == 0) fail(ErrorKind::InvalidInput, "vertices have no faces");
  if (i > m) fail(ErrorKind::InvalidInput, "face index out of range");
  int v = s.surj[i];
  bool shared = (i > 0 && s.surj[i - 1] == v) || (i < m && s.surj[i + 1] == v);
  std::vector<int> rest;
  rest.reserve(m);
  for (std::size_t p = 0; p <= m; ++p)
    if (p != i) rest.push_back(s.surj[p]);
  if (shared) return Simplex{s.cell_dim, s.cell, std::move(rest)};
  // sigma delta_i misses v: factor through delta_v and use the cell's face.
  for (int& e : rest)
    if (e > v) --e;
  const Simplex& f = cells_[s.cell_dim][s.cell].faces[static_cast<std::size_t>(v)];
  std::vector<int> composed(rest.size());
  for (std::size_t p = 0; p < rest.size(); ++p) composed[p] = f.surj[static_cast<std::size_t>(rest[p])];
  return Simplex{f.cell_dim, f.cell, std::move(composed)};
}

Simplex FiniteSimplicialSet::degeneracy(const Simplex& s, std::size_t j) const {
  if (j > s.dim()) fail(ErrorKind::InvalidInput, "degeneracy index out of range");
  Simplex out = s;
  out.surj.insert(out.surj.begin() + static_cast<std::ptrdiff_t>(j), s.surj[j]);
  return out;
}

std::size_t FiniteSimplicialSet::add_cell(std::size_t dim, std::string name, std::vector<Simplex> faces) {
  if (dim == 0 && !faces.empty()) fail(ErrorKind::InvalidInput, "vertex with faces");
  if (dim > 0 && faces.size() != dim + 1)
    fail(ErrorKind::InvalidInput, "cell '" + name + "' needs " + std::to_string(dim + 1) + " faces");
  for (const auto& f : faces) {
    if (f.dim() + 1 != dim) fail(ErrorKind::DimensionMismatch, "face of wrong dimension in '" + name + "'");
    if (f.cell_dim >= cells_.size() || f.cell >= cells_[f.cell_dim].size())
      fail(ErrorKind::InvalidInput, "face of '" + name + "' refers to an unknown cell");
    if (static_cast<std::size_t>(f.surj.back()) != f.cell_dim || f.surj.front() != 0)
      fail(ErrorKind::InvalidInput, "face of '" + name + "' has a non-surjective map");
    for (std::size_t p = 1; p < f.surj.size(); ++p)
      if (f.surj[p] - f.surj[p - 1] != 0 && f.surj[p] - f.surj[p - 1] != 1)
        fail(ErrorKind::InvalidInput, "face of '" + name + "' has a non-monotone map");
  }
  for (std::size_t j = 1; dim >= 2 && j <= dim; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (face(faces[j], i) != face(faces[i], j - 1))
        fail(ErrorKind::InvalidInput, "cell '" + name + "' violates d_i d_j = d_{j-1} d_i for i=" +
                                          std::to_string(i) + ", j=" + std::to_string(j));
  if (cells_.size() <= dim) cells_.resize(dim + 1);
  cells_[dim].push_back(Cell{std::move(name), std::move(faces)});
  return cells_[dim].size() - 1;
}

std::vector<Simplex> FiniteSimplicialSet::level(std::size_t m) const {
  if (complete_through_ && static_cast<int>(m) > *complete_through_)
    fail(ErrorKind::CutoffExceeded, "simplicial set '" + label_ + "' is only known through level " +
                                        std::to_string(*complete_through_));
  std::vector<Simplex> out;
  for (std::size_t k = 0; k <= m && k < cells_.size(); ++k) {
    if (cells_[k].empty()) continue;
    auto surjs = surjections(m, k);
    for (std::size_t c = 0; c < cells_[k].size(); ++c)
      for (const auto& s : surjs) out.push_back(Simplex{k, c, s});
  }
  return out;
}

std::string FiniteSimplicialSet::format(const Simplex& s) const {
  const std::string& name = cells_.at(s.cell_dim).at(s.cell).name;
  if (s.nondegenerate()) return name;
  std::ostringstream os;
  os << name << "{";
  for (std::size_t p = 0; p < s.surj.size(); ++p) os << (p ? "," : "") << s.surj[p];
  os << "}";
  return os.str();
}

std::optional<std::string> FiniteSimplicialSet::check_identities(std::size_t max_level) const {
  auto bad = [&](const Simplex& x, const std::string& what) {
    return std::optional<std::string>(what + " fails on " + format(x));
  };
  for (std::size_t m = 0; m <= max_level; ++m) {
    for (const auto& x : level(m)) {
      for (std::size_t j = 1; j <= m && m >= 2; ++j)
        for (std::size_t i = 0; i < j; ++i)
          if (face(face(x, j), i) != face(face(x, i), j - 1)) return bad(x, "d_i d_j = d_{j-1} d_i");
      for (std::size_t j = 0; j <= m; ++j) {
        Simplex sx = degeneracy(x, j);
        for (std::size_t i = 0; i <= m + 1; ++i) {
          Simplex lhs = face(sx, i);
          if (i == j || i == j + 1) {
            if (lhs != x) return bad(x, "d_i s_i = d_{i+1} s_i = id");
          } else if (i < j) {
            if (m == 0 || lhs != degeneracy(face(x, i), j - 1)) return bad(x, "d_i s_j = s_{j-1} d_i");
          } else if (lhs != degeneracy(face(x, i - 1), j)) {
            return bad(x, "d_i s_j = s_j d_{i-1}");
          }
        }
        for (std::size_t i = 0; i <= j; ++i)
          if (degeneracy(sx, i) != degeneracy(degeneracy(x, i), j + 1)) return bad(x, "s_i s_j = s_{j+1} s_i");
      }
    }
  }
  return std::nullopt;
}

FiniteSimplicialSet FiniteSimplicialSet::point() {
  FiniteSimplicialSet x;
  x.add_cell(0, "*", {});
  x.label_ = "pt";
  return x;
}

FiniteSimplicialSet FiniteSimplicialSet::sphere(int n) {
  if (n < 0) fail(ErrorKind::InvalidInput, "sphere dimension must be >= 0");
  FiniteSimplicialSet x = point();
  auto un = static_cast<std::size_t>(n);
  std::vector<Simplex> faces;
  if (n > 0) faces.assign(un + 1, x.basepoint(un - 1));
  x.add_cell(un, "S" + std::to_string(n), std::move(faces));
  x.label_ = "S^" + std::to_string(n);
  return x;
}

FiniteSimplicialSet FiniteSimplicialSet::plus_point(const FiniteSimplicialSet& x) {
  if (x.complete_through_) fail(ErrorKind::InvalidInput, "cannot adjoin a point to a truncated simplicial set");
  FiniteSimplicialSet y;
  y.add_cell(0, "+", {});
  auto shift = [](Simplex s) {
    if (s.cell_dim == 0) ++s.cell;
    return s;
  };
  for (std::size_t d = 0; d < x.cells_.size(); ++d)
    for (const auto& c : x.cells_[d]) {
      std::vector<Simplex> faces;
      for (const auto& f : c.faces) faces.push_back(shift(f));
      y.add_cell(d, c.name, std::move(faces));
    }
  y.label_ = x.label_ + "_+";
  return y;
}

Simplex suspension_simplex(const FiniteSimplicialSet& x, const Simplex& s) {
  std::vector<int> surj(s.surj.size() + 1);
  surj[0] = 0;
  for (std::size_t p = 0; p < s.surj.size(); ++p) surj[p + 1] = s.surj[p] + 1;
  if (x.is_basepoint(s)) return Simplex{0, 0, std::vector<int>(surj.size(), 0)};
  std::size_t index = s.cell_dim == 0 ? s.cell - 1 : s.cell;
  return Simplex{s.cell_dim + 1, index, std::move(surj)};
}

FiniteSimplicialSet FiniteSimplicialSet::suspension(const FiniteSimplicialSet& x) {
  if (x.complete_through_) fail(ErrorKind::InvalidInput, "cannot suspend a truncated simplicial set");
  FiniteSimplicialSet y = point();
  for (std::size_t d = 0; d < x.cells_.size(); ++d)
    for (std::size_t i = 0; i < x.cells_[d].size(); ++i) {
      if (d == 0 && i == 0) continue;
      std::vector<Simplex> faces{y.basepoint(d)};
      if (d == 0) {
        faces.push_back(y.basepoint(0));
      } else {
        for (const auto& f : x.cells_[d][i].faces) faces.push_back(suspension_simplex(x, f));
      }
      y.add_cell(d + 1, "S" + x.cells_[d][i].name, std::move(faces));
    }
  y.label_ = "S(" + x.label_ + ")";
  return y;
}

FiniteSimplicialSet FiniteSimplicialSet::wedge(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y) {
  if (x.complete_through_ || y.complete_through_)
    fail(ErrorKind::InvalidInput, "cannot wedge truncated simplicial sets");
  FiniteSimplicialSet w = x;
  auto remap = [&](Simplex s) {
    if (s.cell_dim == 0) {
      s.cell = s.cell == 0 ? 0 : x.cell_count(0) + s.cell - 1;
    } else {
      s.cell += x.cell_count(s.cell_dim);
    }
    return s;
  };
  for (std::size_t d = 0; d < y.cells_.size(); ++d)
    for (std::size_t i = 0; i < y.cells_[d].size(); ++i) {
      if (d == 0 && i == 0) continue;
      std::vector<Simplex> faces;
      for (const auto& f : y.cells_[d][i].faces) faces.push_back(remap(f));
      std::string name = y.cells_[d][i].name;
      if (w.find_cell(name)) name += "'";
      w.add_cell(d, std::move(name), std::move(faces));
    }
  w.label_ = x.label_ + " v " + y.label_;
  return w;
}

FiniteSimplicialSet FiniteSimplicialSet::classifying_cyclic(int p, int max_level) {
  if (p < 2) fail(ErrorKind::InvalidInput, "BZ/p needs p >= 2");
  if (max_level < 0) fail(ErrorKind::InvalidInput, "max_level must be >= 0");
  FiniteSimplicialSet x = point();
  std::vector<std::map<std::vector<int>, std::size_t>> index(static_cast<std::size_t>(max_level) + 1);
  index[0][{}] = 0;
  auto to_simplex = [&](const std::vector<int>& g) {
    std::vector<int> nz;
    std::vector<int> surj{0};
    for (int e : g) {
      if (e != 0) nz.push_back(e);
      surj.push_back(surj.back() + (e != 0 ? 1 : 0));
    }
    return Simplex{nz.size(), index[nz.size()].at(nz), std::move(surj)};
  };
  auto name_of = [](const std::vector<int>& g) {
    std::string s = "[";
    for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "|" : "") + std::to_string(g[i]);
    return s + "]";
  };
  std::vector<std::vector<int>> prev{{}};
  for (int n = 1; n <= max_level; ++n) {
    std::vector<std::vector<int>> cur;
    for (const auto& g : prev)
      for (int e = 1; e < p; ++e) {
        auto h = g;
        h.push_back(e);
        cur.push_back(std::move(h));
      }
    for (const auto& g : cur) {
      std::vector<Simplex> faces;
      auto un = static_cast<std::size_t>(n);
      for (std::size_t i = 0; i <= un; ++i) {
        std::vector<int> f;
        if (i == 0) {
          f.assign(g.begin() + 1, g.end());
        } else if (i == un) {
          f.assign(g.begin(), g.end() - 1);
        } else {
          f.assign(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(i) - 1);
          f.push_back((g[i - 1] + g[i]) % p);
          f.insert(f.end(), g.begin() + static_cast<std::ptrdiff_t>(i) + 1, g.end());
        }
        faces.push_back(to_simplex(f));
      }
      index[un][g] = x.add_cell(un, name_of(g), std::move(faces));
    }
    prev = std::move(cur);
  }
  x.complete_through_ = max_level;
  x.label_ = "BZ/" + std::to_string(p);
  return x;
}

FiniteSimplicialSet FiniteSimplicialSet::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("simplicial set JSON: ") + e.what());
  }
  if (!j.contains("cells") || !j["cells"].is_array() || j["cells"].empty())
    fail(ErrorKind::InvalidInput, "simplicial set JSON needs a non-empty 'cells' array");
  FiniteSimplicialSet x;
  std::map<std::string, std::pair<std::size_t, std::size_t>> where;
  bool first = true;
  for (const auto& c : j["cells"]) {
    auto name = c.at("name").get<std::string>();
    auto dim = c.at("dim").get<std::size_t>();
    if (first && dim != 0) fail(ErrorKind::InvalidInput, "the first cell must be the base vertex");
    first = false;
    if (where.count(name)) fail(ErrorKind::InvalidInput, "duplicate cell name '" + name + "'");
    std::vector<Simplex> faces;
    if (c.contains("faces"))
      for (const auto& f : c["faces"]) {
        Simplex s;
        std::string ref = f.is_string() ? f.get<std::string>() : f.at("cell").get<std::string>();
        auto it = where.find(ref);
        if (it == where.end()) fail(ErrorKind::InvalidInput, "face refers to undeclared cell '" + ref + "'");
        s.cell_dim = it->second.first;
        s.cell = it->second.second;
        if (f.is_object() && f.contains("surj")) {
          s.surj = f["surj"].get<std::vector<int>>();
        } else if (f.is_object() && f.contains("degeneracies")) {
          // s_{i_1} ... s_{i_k} applied to the cell, rightmost first.
          s.surj = identity_surj(s.cell_dim);
          auto word = f["degeneracies"].get<std::vector<std::size_t>>();
          for (auto it = word.rbegin(); it != word.rend(); ++it) {
            if (*it >= s.surj.size()) fail(ErrorKind::InvalidInput, "degeneracy index out of range");
            s = x.degeneracy(s, *it);
          }
        } else if (dim > 0 && s.cell_dim == 0) {
          s.surj = constant_surj(dim - 1);
        } else {
          s.surj = identity_surj(s.cell_dim);
        }
        faces.push_back(std::move(s));
      }
    std::size_t idx = x.add_cell(dim, name, std::move(faces));
    where[name] = {dim, idx};
  }
  x.label_ = j.value("name", std::string("custom"));
  return x;
}

std::string FiniteSimplicialSet::to_json() const {
  nlohmann::json cells = nlohmann::json::array();
  for (std::size_t d = 0; d < cells_.size(); ++d)
    for (const auto& c : cells_[d]) {
      nlohmann::json faces = nlohmann::json::array();
      for (const auto& f : c.faces)
        faces.push_back({{"cell", cells_[f.cell_dim][f.cell].name}, {"surj", f.surj}});
      cells.push_back({{"name", c.name}, {"dim", d}, {"faces", faces}});
    }
  return nlohmann::json{{"name", label_}, {"cells", cells}}.dump(2);
}

}  // namespace rephom::simplicial
