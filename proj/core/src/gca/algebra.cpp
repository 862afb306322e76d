#include "rephom/gca/algebra.hpp"

#include <sstream>

#include "rephom/error.hpp"

namespace rephom::gca {

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int e : m.exps) {
    h ^= static_cast<std::size_t>(e + 0x9e3779b9);
    h *= 1099511628211ull;
  }
  return h;
}

std::shared_ptr<GradedCommAlgebra> GradedCommAlgebra::create(std::vector<Generator> generators,
                                                             std::vector<std::string> invertible) {
  std::shared_ptr<GradedCommAlgebra> a(new GradedCommAlgebra());
  a->generators_ = std::move(generators);
  a->invertible_.assign(a->generators_.size(), false);
  bool all_weighted = !a->generators_.empty();
  bool any_weighted = false;
  for (std::size_t i = 0; i < a->generators_.size(); ++i) {
    const auto& g = a->generators_[i];
    if (g.name.empty()) fail(ErrorKind::InvalidInput, "empty generator name");
    if (!a->by_name_.emplace(g.name, i).second) {
      fail(ErrorKind::InvalidInput, "duplicate generator name " + g.name);
    }
    if (g.weight && *g.weight < 0) fail(ErrorKind::InvalidInput, "negative weight on " + g.name);
    all_weighted = all_weighted && g.weight.has_value();
    any_weighted = any_weighted || g.weight.has_value();
  }
  if (any_weighted && !all_weighted) {
    fail(ErrorKind::InvalidInput, "weights must be declared on all generators or none");
  }
  a->weighted_ = all_weighted;
  for (const auto& name : invertible) {
    std::size_t i = a->require_index(name);
    if (a->generators_[i].odd()) fail(ErrorKind::InvalidInput, "odd generator cannot be invertible: " + name);
    a->invertible_[i] = true;
  }
  return a;
}

std::optional<std::size_t> GradedCommAlgebra::index_of(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::size_t GradedCommAlgebra::require_index(const std::string& name) const {
  auto i = index_of(name);
  if (!i) fail(ErrorKind::InvalidInput, "unknown generator '" + name + "'");
  return *i;
}

bool GradedCommAlgebra::has_invertibles() const {
  for (bool b : invertible_) {
    if (b) return true;
  }
  return false;
}

void GradedCommAlgebra::set_relations(const std::vector<AlgebraElement>& relations) {
  relations_.clear();
  for (const auto& r : relations) {
    if (r.algebra().get() != this) fail(ErrorKind::MixedAlgebras, "relation from another algebra");
    if (weighted_ && !r.is_zero() && !r.homogeneous()) {
      fail(ErrorKind::NonHomogeneous, "relation not weight-homogeneous: " + r.to_string());
    }
    relations_.push_back(r.terms());
  }
}

std::vector<AlgebraElement> GradedCommAlgebra::relations() const {
  std::vector<AlgebraElement> out;
  for (const auto& t : relations_) {
    AlgebraElement e(shared_from_this());
    for (const auto& [m, c] : t) e.add_term(m, c);
    out.push_back(std::move(e));
  }
  return out;
}

Monomial GradedCommAlgebra::unit_monomial() const { return Monomial{std::vector<int>(generators_.size(), 0)}; }

int GradedCommAlgebra::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.exps.size(); ++i) d += m.exps[i] * generators_[i].degree;
  return d;
}

std::optional<int> GradedCommAlgebra::weight(const Monomial& m) const {
  if (!weighted_) return std::nullopt;
  int w = 0;
  for (std::size_t i = 0; i < m.exps.size(); ++i) w += m.exps[i] * *generators_[i].weight;
  return w;
}

int GradedCommAlgebra::aux_degree(const Monomial& m) const {
  int a = 0;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (generators_[i].degree == 0) a += m.exps[i] < 0 ? -m.exps[i] : m.exps[i];
  }
  return a;
}

std::string GradedCommAlgebra::format(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += generators_[i].name;
    if (m.exps[i] != 1) out += '^' + std::to_string(m.exps[i]);
  }
  return out.empty() ? "1" : out;
}

AlgebraElement GradedCommAlgebra::zero() const { return AlgebraElement(shared_from_this()); }

AlgebraElement GradedCommAlgebra::one() const { return constant(1); }

AlgebraElement GradedCommAlgebra::constant(const Rational& c) const {
  AlgebraElement e(shared_from_this());
  e.add_term(unit_monomial(), c);
  return e;
}

AlgebraElement GradedCommAlgebra::monomial(const Monomial& m, const Rational& c) const {
  if (m.exps.size() != generators_.size()) fail(ErrorKind::DimensionMismatch, "monomial length");
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] < 0 && !invertible_[i]) fail(ErrorKind::InvalidInput, "negative exponent on " + generators_[i].name);
    if (generators_[i].odd() && m.exps[i] > 1) return zero();
  }
  AlgebraElement e(shared_from_this());
  e.add_term(m, c);
  return e;
}

AlgebraElement GradedCommAlgebra::gen(std::size_t i) const {
  Monomial m = unit_monomial();
  m.exps.at(i) = 1;
  return monomial(m);
}

AlgebraElement GradedCommAlgebra::gen(const std::string& name) const { return gen(require_index(name)); }

std::optional<std::pair<int, Monomial>> GradedCommAlgebra::multiply(const Monomial& a, const Monomial& b) const {
  Monomial r;
  r.exps.resize(generators_.size());
  // Moving each odd factor of b leftwards past the odd factors of a that come
  // later in declaration order costs one sign per crossing.
  int crossings = 0;
  int odd_in_a_after = 0;
  for (std::size_t i = generators_.size(); i-- > 0;) {
    if (generators_[i].odd()) {
      if (a.exps[i] && b.exps[i]) return std::nullopt;
      if (b.exps[i]) crossings += odd_in_a_after;
      if (a.exps[i]) ++odd_in_a_after;
    }
    r.exps[i] = a.exps[i] + b.exps[i];
  }
  return std::pair{(crossings % 2) ? -1 : 1, std::move(r)};
}

AlgebraElement::AlgebraElement(AlgebraPtr alg) : alg_(std::move(alg)) {}

void AlgebraElement::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void AlgebraElement::check_same(const AlgebraElement& o) const {
  if (alg_ != o.alg_) {
    if (!alg_ || !o.alg_) return;
    fail(ErrorKind::MixedAlgebras, "elements belong to different algebras");
  }
}

bool AlgebraElement::homogeneous() const {
  if (terms_.empty()) return true;
  int d = alg_->degree(terms_.begin()->first);
  auto w = alg_->weight(terms_.begin()->first);
  for (const auto& [m, c] : terms_) {
    if (alg_->degree(m) != d || alg_->weight(m) != w) return false;
  }
  return true;
}

std::optional<int> AlgebraElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = alg_->degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_) {
    if (alg_->degree(m) != d) fail(ErrorKind::NonHomogeneous, "mixed degrees in " + to_string());
  }
  return d;
}

std::optional<int> AlgebraElement::weight() const {
  if (terms_.empty() || !alg_->weighted()) return std::nullopt;
  auto w = alg_->weight(terms_.begin()->first);
  for (const auto& [m, c] : terms_) {
    if (alg_->weight(m) != w) fail(ErrorKind::NonHomogeneous, "mixed weights in " + to_string());
  }
  return w;
}

Rational AlgebraElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono = alg_->format(m);
    if (mono == "1") {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << '*';
      os << mono;
    }
  }
  return os.str();
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_same(o);
  if (!alg_) alg_ = o.alg_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_same(o);
  if (!alg_) alg_ = o.alg_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  return a.alg_ == b.alg_ && a.terms_ == b.terms_;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.algebra() != b.algebra()) fail(ErrorKind::MixedAlgebras, "multiply across algebras");
  AlgebraElement out(a.algebra());
  if (!a.algebra()) return out;
  const auto& alg = *a.algebra();
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto p = alg.multiply(ma, mb);
      if (!p) continue;
      Rational c = ca * cb;
      if (p->first < 0) c = -c;
      out.add_term(p->second, c);
    }
  }
  return out;
}

AlgebraElement power(const AlgebraElement& a, int e) {
  if (e < 0) {
    if (a.term_count() != 1 || a.terms().begin()->second != 1) {
      fail(ErrorKind::InvalidInput, "negative power of a non-monomial: " + a.to_string());
    }
    Monomial m = a.terms().begin()->first;
    for (auto& x : m.exps) x *= e;
    return a.algebra()->monomial(m);
  }
  AlgebraElement result = a.algebra()->one();
  AlgebraElement base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

AlgebraElement substitute(const AlgebraElement& a, const std::vector<AlgebraElement>& images) {
  if (!a.algebra()) return a;
  if (images.size() != a.algebra()->size()) fail(ErrorKind::DimensionMismatch, "substitution arity");
  AlgebraPtr target;
  for (const auto& im : images) {
    if (im.algebra()) {
      target = im.algebra();
      break;
    }
  }
  if (!target) fail(ErrorKind::InvalidInput, "substitution without target algebra");
  AlgebraElement out = target->zero();
  for (const auto& [m, c] : a.terms()) {
    AlgebraElement t = target->constant(c);
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (m.exps[i] != 0) t = t * power(images[i], m.exps[i]);
    }
    out += t;
  }
  return out;
}

}  // namespace rephom::gca
