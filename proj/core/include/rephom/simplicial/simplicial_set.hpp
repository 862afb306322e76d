#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace rephom::simplicial {

// A simplex written as sigma^* z: a nondegenerate cell z of dimension k and
// an order-preserving surjection sigma : [m] -> [k], stored as the vector
// (sigma(0), ..., sigma(m)). The simplex is nondegenerate iff m = k.
struct Simplex {
  std::size_t cell_dim = 0;
  std::size_t cell = 0;
  std::vector<int> surj{0};

  std::size_t dim() const { return surj.size() - 1; }
  bool nondegenerate() const { return dim() == cell_dim; }
  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;
};

struct Cell {
  std::string name;
  // d_0 .. d_n of an n-cell (empty for vertices).
  std::vector<Simplex> faces;
};

// Simplicial set presented by its nondegenerate cells. Cell 0 of dimension
// 0 is the basepoint. Sets with infinitely many cells (the nerve of Z/p)
// are truncated: `complete_through` is the last level whose simplices are
// all present.
class FiniteSimplicialSet {
 public:
  FiniteSimplicialSet() = default;

  static FiniteSimplicialSet point();
  static FiniteSimplicialSet sphere(int n);
  // X with a disjoint basepoint adjoined.
  static FiniteSimplicialSet plus_point(const FiniteSimplicialSet& x);
  // Reduced suspension C(X)/X: one cell (x,1) of dimension |x|+1 per
  // non-basepoint cell x, with d_0 (x,1) = * and d_i (x,1) = (d_{i-1} x, 1).
  static FiniteSimplicialSet suspension(const FiniteSimplicialSet& x);
  static FiniteSimplicialSet wedge(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y);
  // Nerve of Z/p with cells up to dimension max_level.
  static FiniteSimplicialSet classifying_cyclic(int p, int max_level);
  // {"cells":[{"name":..,"dim":..,"faces":[{"cell":name,"surj":[..]}]}]}
  // with the basepoint listed first. A face is a cell name, or an object
  // naming the cell with either "surj" (sigma) or "degeneracies" (a word
  // s_{i_1}...s_{i_k}); a bare vertex name means the degenerate vertex.
  static FiniteSimplicialSet from_json(const std::string& text);
  std::string to_json() const;

  // Adds a cell after checking d_i d_j = d_{j-1} d_i on it; returns its index.
  std::size_t add_cell(std::size_t dim, std::string name, std::vector<Simplex> faces);

  std::size_t max_cell_dim() const { return cells_.empty() ? 0 : cells_.size() - 1; }
  std::size_t cell_count(std::size_t dim) const { return dim < cells_.size() ? cells_[dim].size() : 0; }
  const Cell& cell(std::size_t dim, std::size_t i) const { return cells_.at(dim).at(i); }
  std::optional<std::size_t> find_cell(const std::string& name) const;
  const std::optional<int>& complete_through() const { return complete_through_; }
  bool reduced() const { return cell_count(0) == 1; }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  Simplex basepoint(std::size_t level) const;
  bool is_basepoint(const Simplex& s) const { return s.cell_dim == 0 && s.cell == 0; }
  Simplex cell_simplex(std::size_t dim, std::size_t i) const;
  Simplex face(const Simplex& s, std::size_t i) const;
  Simplex degeneracy(const Simplex& s, std::size_t j) const;
  // All simplices of level m in a deterministic order. CutoffExceeded past
  // complete_through.
  std::vector<Simplex> level(std::size_t m) const;
  std::string format(const Simplex& s) const;

  // Simplicial identities on every simplex of levels <= max_level; returns
  // a description of the first failure.
  std::optional<std::string> check_identities(std::size_t max_level) const;

 private:
  std::vector<std::vector<Cell>> cells_;
  std::optional<int> complete_through_;
  std::string label_;
};

// Image of a simplex of X (level n) in the reduced suspension of X (level
// n+1): sigma^* x goes to (sigma')^* (x,1) with sigma' = 0, sigma+1.
Simplex suspension_simplex(const FiniteSimplicialSet& x, const Simplex& s);

// Order-preserving surjections [m] -> [k] in lexicographic order.
std::vector<std::vector<int>> surjections(std::size_t m, std::size_t k);

}  // namespace rephom::simplicial
