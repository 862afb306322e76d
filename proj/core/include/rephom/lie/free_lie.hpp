#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rephom/exactlin/rational.hpp"

namespace rephom::lie {

using Word = std::vector<std::uint16_t>;

// Element of the tensor algebra T(V); the free graded Lie algebra sits inside
// it as the span of graded commutators of generators.
struct TensorElement {
  std::map<Word, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const Word& w, const Rational& c);
  TensorElement& operator+=(const TensorElement& o);
  TensorElement scaled(const Rational& c) const;
};

struct LieGenerator {
  std::string name;
  int degree = 1;
};

// Bracket expression: a generator or [left, right].
struct BracketTree {
  int generator = -1;
  std::shared_ptr<const BracketTree> left, right;

  static std::shared_ptr<const BracketTree> leaf(int g);
  static std::shared_ptr<const BracketTree> node(std::shared_ptr<const BracketTree> l,
                                                 std::shared_ptr<const BracketTree> r);
};

struct LieBasisElement {
  int degree = 0;
  std::shared_ptr<const BracketTree> tree;
  TensorElement image;
  std::string label;
};

// Coordinates in the bracket basis (global ids across degrees).
struct LieElement {
  std::map<std::size_t, Rational> coeffs;
  bool is_zero() const { return coeffs.empty(); }
  void add(std::size_t id, const Rational& c);
  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& c, const LieElement& a);
  friend bool operator==(const LieElement&, const LieElement&) = default;
};

// Free graded Lie algebra on positive-degree generators, truncated at a
// fixed degree cutoff, with an optional differential of degree -1.
//
// Sign convention: [x,y] = xy - (-1)^{|x||y|} yx in T(V), so
// [x,y] = -(-1)^{|x||y|}[y,x] and the graded Jacobi identity holds.
// Each degree slice has a basis of standard bracketings of Lyndon words and
// squares [u,u] of odd Lyndon elements, completed (if ever needed) by
// left-normed brackets [generator, basis element].
class FreeGradedLie {
 public:
  FreeGradedLie(std::vector<LieGenerator> generators, int cutoff);

  const std::vector<LieGenerator>& generators() const { return gens_; }
  int cutoff() const { return cutoff_; }
  std::optional<std::size_t> generator_index(const std::string& name) const;

  const std::vector<std::size_t>& basis_ids(int degree) const;
  const LieBasisElement& element(std::size_t id) const { return basis_.at(id); }
  std::size_t total_basis_size() const { return basis_.size(); }

  LieElement generator(std::size_t i) const;
  LieElement basis(std::size_t id) const;
  // Degree of a homogeneous element; nullopt for zero.
  std::optional<int> degree(const LieElement& x) const;

  // Graded bracket, expanded in the basis. CutoffExceeded past the cutoff.
  LieElement bracket(const LieElement& x, const LieElement& y) const;
  TensorElement to_tensor(const LieElement& x) const;
  // Throws InvalidInput when t is not a Lie element of the given degree.
  LieElement from_tensor(const TensorElement& t, int degree) const;

  void set_differential(std::size_t generator, const LieElement& image);
  const LieElement& differential_of(std::size_t generator) const { return d_gen_.at(generator); }
  LieElement d(const LieElement& x) const;
  TensorElement d_tensor(const TensorElement& t) const;
  bool has_zero_differential() const;
  // d(d(v)) = 0 for every generator.
  bool d_squared_zero() const;

  std::string format(const LieElement& x) const;
  int word_degree(const Word& w) const;

 private:
  struct Solver {
    std::map<Word, std::size_t> word_index;
    std::vector<std::size_t> pivots;
    std::vector<std::map<std::size_t, Rational>> rows;
    std::vector<std::map<std::size_t, Rational>> transforms;  // over positions in basis_ids
  };

  void build_degree(int n);
  std::vector<Word> words_of_degree(int n) const;

  std::vector<LieGenerator> gens_;
  int cutoff_;
  std::vector<LieBasisElement> basis_;
  std::vector<std::vector<std::size_t>> ids_by_degree_;
  std::vector<Solver> solvers_;
  std::vector<LieElement> d_gen_;
};

TensorElement tensor_of_tree(const BracketTree& t, const std::vector<LieGenerator>& gens);
std::string format_tree(const BracketTree& t, const std::vector<LieGenerator>& gens);

// Expression grammar: sums of [coefficient '*'] atom, atom := name |
// '[' expr ',' expr ']' | '(' expr ')'.
LieElement parse_lie_expression(const FreeGradedLie& L, const std::string& text);

// Minimal model of CP^r: |v_i| = 2i-1, dv_i = 1/2 sum_{j+k=i} [v_j, v_k].
// The bracket basis is built up to `cutoff` (default 2r - 1, the top
// generator degree).
FreeGradedLie cp_model(int r, std::optional<int> cutoff = std::nullopt);

// Zero-differential model of a wedge of spheres S^{n_1} v ... (n_i >= 2).
FreeGradedLie sphere_wedge_model(const std::vector<int>& sphere_dims, int cutoff);

}  // namespace rephom::lie
