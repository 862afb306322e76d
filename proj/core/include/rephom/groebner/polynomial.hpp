#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rephom/exactlin/rational.hpp"

namespace rephom::groebner {

using Exponents = std::vector<int>;

// Graded reverse lexicographic order: true when a > b.
bool degrevlex_greater(const Exponents& a, const Exponents& b);

struct Term {
  Exponents exps;
  Rational coeff;
};

// Terms sorted strictly decreasing in degrevlex, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  int total_degree() const;

  Polynomial monic() const;
  Polynomial without_leading() const;
  Polynomial times_term(const Exponents& m, const Rational& c) const;
  // this - c * x^m * other
  Polynomial sub_scaled(const Polynomial& other, const Exponents& m, const Rational& c) const;

  std::string to_string(const std::vector<std::string>& names) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

bool divides(const Exponents& a, const Exponents& b);
Exponents lcm(const Exponents& a, const Exponents& b);

}  // namespace rephom::groebner
