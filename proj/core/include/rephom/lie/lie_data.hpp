#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rephom/exactlin/rational.hpp"

namespace rephom::lie {

struct ReductiveInfo {
  int rank = 0;
  std::vector<int> exponents;
};

struct StructureConstant {
  std::size_t i, j, k;
  Rational value;  // [x_i, x_j] has coefficient `value` on x_k
};

// Finite-dimensional Lie algebra over Q given by structure constants.
// Antisymmetry is imposed on input; Jacobi and invariance of the form are
// verified on construction.
class LieData {
 public:
  static LieData create(std::vector<std::string> names, const std::vector<StructureConstant>& brackets,
                        std::optional<std::vector<std::vector<Rational>>> form = std::nullopt,
                        std::optional<ReductiveInfo> reductive = std::nullopt);

  static LieData abelian(std::size_t d);
  static LieData sl2();
  static LieData gl(std::size_t n);
  static LieData from_json(const std::string& text);
  // "sl2", "abelian:3", "gl:2".
  static LieData builtin(const std::string& name);
  std::string to_json() const;

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim() + j) * dim() + k]; }
  // Nonzero (k, c^k_ij) for fixed i, j.
  const std::vector<std::pair<std::size_t, Rational>>& bracket_of(std::size_t i, std::size_t j) const {
    return sparse_[i * dim() + j];
  }
  std::vector<Rational> bracket(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
  bool is_abelian() const;

  bool has_form() const { return form_.has_value(); }
  const Rational& form(std::size_t i, std::size_t j) const { return (*form_)[i][j]; }
  const std::optional<ReductiveInfo>& reductive() const { return reductive_; }

 private:
  std::string label_;
  std::vector<std::string> names_;
  std::vector<Rational> c_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> sparse_;
  std::optional<std::vector<std::vector<Rational>>> form_;
  std::optional<ReductiveInfo> reductive_;
};

}  // namespace rephom::lie
