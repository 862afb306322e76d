#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "rephom/gca/algebra.hpp"
#include "rephom/groupschemes/words.hpp"
#include "rephom/lie/lie_data.hpp"

namespace rephom::groupschemes {

enum class GroupKind { Additive, Torus, GL, SL };

// Catalog of affine group schemes: G_a^d, G_m^d, GL_n, SL_n.
class GroupSchemeData {
 public:
  static GroupSchemeData additive(int d);
  static GroupSchemeData torus(int d);
  static GroupSchemeData general_linear(int n);
  static GroupSchemeData special_linear(int n);
  // "Ga", "Ga:2", "Gm", "Gm:2", "GL:2", "SL:2" (also "GL2", "SL2").
  static GroupSchemeData parse(const std::string& text);
  // {"kind":"GL","n":2} or {"group":{...}}.
  static GroupSchemeData from_json(const std::string& text);

  GroupKind kind() const { return kind_; }
  int n() const { return n_; }
  std::string name() const;
  // Dimension of G (length of the regular sequence when one exists).
  std::size_t dimension() const;
  bool is_matrix_group() const { return kind_ == GroupKind::GL || kind_ == GroupKind::SL; }
  bool is_abelian() const { return !is_matrix_group() || n_ == 1; }
  // Lie(G): abelian(d), gl(n), or sl2. UnsupportedGroup for sl_n, n > 2.
  lie::LieData lie_algebra() const;

 private:
  GroupKind kind_ = GroupKind::Additive;
  int n_ = 1;
};

// Generic point of G over O(G): a coordinate tuple for G_a^d and G_m^d
// (additive, resp. multiplicative, componentwise), an n x n matrix (row
// major) for GL_n and SL_n.
struct GroupValue {
  std::vector<gca::AlgebraElement> entries;
};

// O(G^copies) (x) (extra generators) as one graded commutative algebra.
//
// Coordinates of copy c (label s): G_a^d: t<s>, or t<s>_<k> for d > 1, of
// weight 1; G_m^d: invertible z<s>[_k]; GL_n: x<s>_<ij> and the inverse
// determinant d<s> with relation d<s> det - 1; SL_n: x<s>_<ij> with relation
// det - 1. Extra generators must carry weights exactly when G = G_a^d.
class CoordinateRing {
 public:
  CoordinateRing(GroupSchemeData g, std::vector<std::string> labels, std::vector<gca::Generator> extra = {});

  const GroupSchemeData& group() const { return g_; }
  const gca::AlgebraPtr& algebra() const { return alg_; }
  std::size_t copies() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  // Generator indices of the coordinates of copy c (excluding d<s>).
  const std::vector<std::size_t>& coordinates(std::size_t c) const { return coords_.at(c); }
  // Index of d<s> for GL_n.
  std::size_t det_inverse(std::size_t c) const { return det_inv_.at(c); }

  GroupValue identity() const;
  GroupValue generic(std::size_t c) const;
  // Inverse of the generic point: adj(X) d for GL_n, adj(X) for SL_n.
  GroupValue generic_inverse(std::size_t c) const;
  GroupValue multiply(const GroupValue& a, const GroupValue& b) const;
  // Word in the copies; inverse letters use generic_inverse.
  GroupValue evaluate(const GroupWord& w) const;
  // Regular sequence generating the augmentation ideal, evaluated at a
  // point: t_k, z_k - 1, or x_ij - delta_ij. NoRegularSequence for SL_n.
  std::vector<gca::AlgebraElement> regular_sequence(const GroupValue& v) const;
  // Relations defining the coordinate ring inside the free algebra.
  std::vector<gca::AlgebraElement> coordinate_relations() const;
  // Matrix helpers (n x n, row major).
  gca::AlgebraElement det(const GroupValue& m) const;
  GroupValue adjugate(const GroupValue& m) const;

 private:
  GroupSchemeData g_;
  std::vector<std::string> labels_;
  gca::AlgebraPtr alg_;
  std::vector<std::vector<std::size_t>> coords_;
  std::vector<std::size_t> det_inv_;
};

// Free group word evaluated at the generic points of `copies` copies of G,
// in a ring without extra generators.
GroupValue evaluate_word(const CoordinateRing& ring, const GroupWord& w);

}  // namespace rephom::groupschemes
