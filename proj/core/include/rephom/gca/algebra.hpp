#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rephom/exactlin/rational.hpp"

namespace rephom::gca {

struct Generator {
  std::string name;
  int degree = 0;
  std::optional<int> weight;

  bool odd() const { return (degree % 2) != 0; }
};

// Exponent vector over all generators in declaration order. Odd generators
// carry 0 or 1; only invertible generators may carry negative exponents. The
// represented product is g_0^e_0 g_1^e_1 ... in declaration order.
struct Monomial {
  std::vector<int> exps;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

class AlgebraElement;

class GradedCommAlgebra : public std::enable_shared_from_this<GradedCommAlgebra> {
 public:
  static std::shared_ptr<GradedCommAlgebra> create(std::vector<Generator> generators,
                                                   std::vector<std::string> invertible = {});

  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  const Generator& generator(std::size_t i) const { return generators_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::size_t require_index(const std::string& name) const;
  bool invertible(std::size_t i) const { return invertible_.at(i); }
  bool has_invertibles() const;
  // True when every generator declares a weight.
  bool weighted() const { return weighted_; }

  // Defining relations of a quotient presentation (for example det - 1).
  // They are not divided out at the chain level.
  void set_relations(const std::vector<AlgebraElement>& relations);
  std::vector<AlgebraElement> relations() const;

  Monomial unit_monomial() const;
  int degree(const Monomial& m) const;
  std::optional<int> weight(const Monomial& m) const;
  // Sum of |exponent| over degree-0 even generators.
  int aux_degree(const Monomial& m) const;
  std::string format(const Monomial& m) const;

  AlgebraElement one() const;
  AlgebraElement zero() const;
  AlgebraElement gen(std::size_t i) const;
  AlgebraElement gen(const std::string& name) const;
  AlgebraElement constant(const Rational& c) const;
  AlgebraElement monomial(const Monomial& m, const Rational& c = 1) const;

  // Product of two basis monomials: coefficient sign and result, or nullopt
  // when an odd generator repeats.
  std::optional<std::pair<int, Monomial>> multiply(const Monomial& a, const Monomial& b) const;

 private:
  GradedCommAlgebra() = default;
  std::vector<Generator> generators_;
  std::vector<bool> invertible_;
  std::map<std::string, std::size_t> by_name_;
  bool weighted_ = false;
  std::vector<std::map<Monomial, Rational>> relations_;
};

using AlgebraPtr = std::shared_ptr<const GradedCommAlgebra>;

class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(AlgebraPtr alg);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rational& c);

  // Defined only for homogeneous elements (NonHomogeneous otherwise); zero
  // has no degree and returns nullopt.
  std::optional<int> degree() const;
  std::optional<int> weight() const;
  bool homogeneous() const;

  // Coefficient of a single monomial.
  Rational coefficient(const Monomial& m) const;

  std::string to_string() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= Rational(-1); }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& c) { return a *= c; }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement a) { return a *= c; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  void check_same(const AlgebraElement& o) const;
  AlgebraPtr alg_;
  std::map<Monomial, Rational> terms_;
};

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement power(const AlgebraElement& a, int e);

// Ring map sending generator i to images[i] (all in one target algebra).
// Negative exponents require a monomial image built from invertible
// generators.
AlgebraElement substitute(const AlgebraElement& a, const std::vector<AlgebraElement>& images);

}  // namespace rephom::gca
