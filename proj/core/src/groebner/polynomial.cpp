#include "rephom/groebner/polynomial.hpp"

#include <algorithm>
#include <map>

#include "rephom/error.hpp"

namespace rephom::groebner {

bool degrevlex_greater(const Exponents& a, const Exponents& b) {
  int da = 0, db = 0;
  for (int x : a) da += x;
  for (int x : b) db += x;
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  Polynomial p(nvars);
  for (const auto& t : terms) {
    if (t.exps.size() != nvars) fail(ErrorKind::DimensionMismatch, "term arity");
    for (int e : t.exps) {
      if (e < 0) fail(ErrorKind::InvalidInput, "negative exponent in polynomial");
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return degrevlex_greater(a.exps, b.exps); });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exps == t.exps) {
      p.terms_.back().coeff += t.coeff;
      if (sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
    } else if (sgn(t.coeff) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  return from_terms(nvars, {Term{Exponents(nvars, 0), c}});
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  Exponents e(nvars, 0);
  e.at(i) = 1;
  return from_terms(nvars, {Term{e, Rational(1)}});
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (int x : t.exps) s += x;
    d = std::max(d, s);
  }
  return d;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Polynomial p = *this;
  Rational inv = 1 / terms_.front().coeff;
  for (auto& t : p.terms_) t.coeff *= inv;
  return p;
}

Polynomial Polynomial::without_leading() const {
  Polynomial p(nvars_);
  if (terms_.size() > 1) p.terms_.assign(terms_.begin() + 1, terms_.end());
  return p;
}

Polynomial Polynomial::times_term(const Exponents& m, const Rational& c) const {
  Polynomial p(nvars_);
  if (sgn(c) == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term n{t.exps, t.coeff * c};
    for (std::size_t i = 0; i < nvars_; ++i) n.exps[i] += m[i];
    p.terms_.push_back(std::move(n));
  }
  return p;
}

Polynomial Polynomial::sub_scaled(const Polynomial& other, const Exponents& m, const Rational& c) const {
  Polynomial out(nvars_);
  out.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  Exponents shifted(nvars_);
  auto shift = [&](const Exponents& e) {
    for (std::size_t k = 0; k < nvars_; ++k) shifted[k] = e[k] + m[k];
  };
  if (j < other.terms_.size()) shift(other.terms_[j].exps);
  while (i < terms_.size() || j < other.terms_.size()) {
    bool take_a;
    bool equal = false;
    if (j == other.terms_.size()) {
      take_a = true;
    } else if (i == terms_.size()) {
      take_a = false;
    } else if (terms_[i].exps == shifted) {
      equal = true;
      take_a = true;
    } else {
      take_a = degrevlex_greater(terms_[i].exps, shifted);
    }
    if (equal) {
      Rational s = terms_[i].coeff - c * other.terms_[j].coeff;
      if (sgn(s) != 0) out.terms_.push_back(Term{terms_[i].exps, std::move(s)});
      ++i;
      ++j;
      if (j < other.terms_.size()) shift(other.terms_[j].exps);
    } else if (take_a) {
      out.terms_.push_back(terms_[i]);
      ++i;
    } else {
      out.terms_.push_back(Term{shifted, -c * other.terms_[j].coeff});
      ++j;
      if (j < other.terms_.size()) shift(other.terms_[j].exps);
    }
  }
  return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational a = abs(t.coeff);
    if (first) {
      if (sgn(t.coeff) < 0) out += "-";
    } else {
      out += sgn(t.coeff) < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += i < names.size() ? names[i] : "v" + std::to_string(i);
      if (t.exps[i] != 1) mono += '^' + std::to_string(t.exps[i]);
    }
    if (mono.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  return a.sub_scaled(b, Exponents(a.nvars_, 0), Rational(-1));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a.sub_scaled(b, Exponents(a.nvars_, 0), Rational(1));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Term t{x.exps, x.coeff * y.coeff};
      for (std::size_t i = 0; i < t.exps.size(); ++i) t.exps[i] += y.exps[i];
      terms.push_back(std::move(t));
    }
  }
  return Polynomial::from_terms(a.nvars_, std::move(terms));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

}  // namespace rephom::groebner
