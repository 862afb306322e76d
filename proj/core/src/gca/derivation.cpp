#include "rephom/gca/derivation.hpp"

#include "rephom/error.hpp"

namespace rephom::gca {

Derivation::Derivation(AlgebraPtr alg, int shift) : alg_(std::move(alg)), shift_(shift) {
  images_.assign(alg_->size(), alg_->zero());
}

void Derivation::set_image(std::size_t generator, AlgebraElement image) {
  if (image.is_zero()) {
    images_.at(generator) = alg_->zero();
    return;
  }
  if (image.algebra() != alg_) fail(ErrorKind::MixedAlgebras, "derivation image from another algebra");
  const auto& g = alg_->generator(generator);
  auto deg = image.degree();
  if (*deg != g.degree + shift_) {
    fail(ErrorKind::NonHomogeneous, "image of " + g.name + " has degree " + std::to_string(*deg) +
                                        ", expected " + std::to_string(g.degree + shift_));
  }
  if (alg_->weighted() && image.weight() != g.weight) {
    fail(ErrorKind::NonHomogeneous, "image of " + g.name + " changes weight");
  }
  images_.at(generator) = std::move(image);
}

void Derivation::set_image(const std::string& generator, AlgebraElement image) {
  set_image(alg_->require_index(generator), std::move(image));
}

bool Derivation::is_zero() const {
  for (const auto& im : images_) {
    if (!im.is_zero()) return false;
  }
  return true;
}

AlgebraElement Derivation::apply(const Monomial& m) const {
  AlgebraElement out = alg_->zero();
  const std::size_t n = alg_->size();
  Monomial prefix = alg_->unit_monomial();
  int prefix_degree = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int e = m.exps[i];
    if (e == 0) continue;
    if (!images_[i].is_zero()) {
      Monomial suffix = alg_->unit_monomial();
      for (std::size_t j = i + 1; j < n; ++j) suffix.exps[j] = m.exps[j];
      Rational coeff = (shift_ % 2 != 0 && prefix_degree % 2 != 0) ? Rational(-1) : Rational(1);
      AlgebraElement factor = images_[i];
      if (!alg_->generator(i).odd()) {
        coeff *= e;
        Monomial rest = alg_->unit_monomial();
        rest.exps[i] = e - 1;
        factor = alg_->monomial(rest) * factor;
      }
      out += alg_->monomial(prefix, coeff) * factor * alg_->monomial(suffix);
    }
    prefix.exps[i] = e;
    prefix_degree += e * alg_->generator(i).degree;
  }
  return out;
}

AlgebraElement Derivation::apply(const AlgebraElement& a) const {
  if (a.is_zero()) return alg_->zero();
  if (a.algebra() != alg_) fail(ErrorKind::MixedAlgebras, "derivation applied across algebras");
  if (!a.homogeneous()) fail(ErrorKind::NonHomogeneous, "derivation applied to " + a.to_string());
  AlgebraElement out = alg_->zero();
  for (const auto& [m, c] : a.terms()) out += apply(m) * c;
  return out;
}

AlgebraElement apply_derivation(const Derivation& d, const AlgebraElement& a) { return d.apply(a); }

Derivation commutator(const Derivation& d, const Derivation& e) {
  if (d.algebra() != e.algebra()) fail(ErrorKind::MixedAlgebras, "commutator across algebras");
  Derivation out(d.algebra(), d.shift() + e.shift());
  bool minus = (d.shift() % 2 != 0) && (e.shift() % 2 != 0);
  for (std::size_t i = 0; i < d.algebra()->size(); ++i) {
    AlgebraElement g = d.algebra()->gen(i);
    AlgebraElement v = d.apply(e.apply(g));
    AlgebraElement w = e.apply(d.apply(g));
    out.set_image(i, minus ? v + w : v - w);
  }
  return out;
}

}  // namespace rephom::gca
