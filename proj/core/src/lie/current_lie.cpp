#include "rephom/lie/current_lie.hpp"

#include "rephom/error.hpp"

namespace rephom::lie {

CoefficientAlgebra CoefficientAlgebra::create(std::vector<std::string> names, std::vector<int> degrees,
                                              std::map<std::pair<std::size_t, std::size_t>, SparseVector> products,
                                              std::optional<std::size_t> unit) {
  if (names.size() != degrees.size()) fail(ErrorKind::DimensionMismatch, "names and degrees differ in length");
  CoefficientAlgebra a;
  a.names_ = std::move(names);
  a.degrees_ = std::move(degrees);
  a.unit_ = unit;
  const std::size_t n = a.names_.size();
  a.table_.assign(n * n, {});
  for (auto& [key, v] : products) {
    auto [i, j] = key;
    if (i >= n || j >= n) fail(ErrorKind::InvalidInput, "product index out of range");
    canonicalize(v);
    for (const auto& [k, c] : v) {
      if (k >= n) fail(ErrorKind::InvalidInput, "product index out of range");
      if (a.degrees_[k] != a.degrees_[i] + a.degrees_[j]) {
        fail(ErrorKind::NonHomogeneous, "product " + a.names_[i] + "*" + a.names_[j] + " is not homogeneous");
      }
    }
    a.table_[i * n + j] = v;
  }
  if (unit) {
    if (*unit >= n || a.degrees_[*unit] != 0) fail(ErrorKind::InvalidInput, "unit must be a degree-0 basis element");
    for (std::size_t i = 0; i < n; ++i) {
      SparseVector e{{i, Rational(1)}};
      if (a.product(*unit, i) != e || a.product(i, *unit) != e) {
        fail(ErrorKind::InvalidInput, "declared unit does not act as identity on " + a.names_[i]);
      }
    }
  }
  // Graded commutativity and associativity on the basis.
  auto mul = [&](const SparseVector& x, std::size_t j) {
    SparseVector out;
    for (const auto& [i, c] : x) add_scaled(out, a.product(i, j), c);
    return out;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      SparseVector ji = a.product(j, i);
      if ((a.degrees_[i] * a.degrees_[j]) % 2 != 0) {
        for (auto& [k, c] : ji) c = -c;
      }
      if (a.product(i, j) != ji) fail(ErrorKind::InvalidInput, "coefficient algebra is not graded commutative");
      for (std::size_t k = 0; k < n; ++k) {
        SparseVector left = mul(a.product(i, j), k);
        SparseVector right;
        for (const auto& [m, c] : a.product(j, k)) add_scaled(right, a.product(i, m), c);
        if (left != right) fail(ErrorKind::InvalidInput, "coefficient algebra is not associative");
      }
    }
  }
  return a;
}

CoefficientAlgebra CoefficientAlgebra::truncated_polynomial(int n, int r, bool with_unit) {
  if (r < 1) fail(ErrorKind::InvalidInput, "truncation order must be at least 1");
  if (n % 2 != 0 && r > 1) fail(ErrorKind::InvalidInput, "odd generator squares to zero; use r = 1");
  std::vector<std::string> names;
  std::vector<int> degrees;
  const std::size_t off = with_unit ? 1 : 0;
  if (with_unit) {
    names.push_back("1");
    degrees.push_back(0);
  }
  for (int k = 1; k <= r; ++k) {
    names.push_back(k == 1 ? "u" : "u" + std::to_string(k));
    degrees.push_back(n * k);
  }
  std::map<std::pair<std::size_t, std::size_t>, SparseVector> prod;
  const std::size_t total = names.size();
  if (with_unit) {
    for (std::size_t i = 0; i < total; ++i) {
      prod[{0, i}] = {{i, Rational(1)}};
      prod[{i, 0}] = {{i, Rational(1)}};
    }
  }
  for (int a = 1; a <= r; ++a) {
    for (int b = 1; a + b <= r; ++b) {
      prod[{off + static_cast<std::size_t>(a - 1), off + static_cast<std::size_t>(b - 1)}] = {
          {off + static_cast<std::size_t>(a + b - 1), Rational(1)}};
    }
  }
  return create(std::move(names), std::move(degrees), std::move(prod), with_unit ? std::optional<std::size_t>(0) : std::nullopt);
}

CoefficientAlgebra CoefficientAlgebra::sphere_wedge(const std::vector<int>& dims, bool with_unit) {
  std::vector<std::string> names;
  std::vector<int> degrees;
  std::map<std::pair<std::size_t, std::size_t>, SparseVector> prod;
  if (with_unit) {
    names.push_back("1");
    degrees.push_back(0);
  }
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 1) fail(ErrorKind::InvalidInput, "sphere dimension must be positive");
    names.push_back(dims.size() == 1 ? "u" : "u" + std::to_string(i + 1) + "_");
    degrees.push_back(dims[i]);
  }
  if (with_unit) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      prod[{0, i}] = {{i, Rational(1)}};
      prod[{i, 0}] = {{i, Rational(1)}};
    }
  }
  return create(std::move(names), std::move(degrees), std::move(prod), with_unit ? std::optional<std::size_t>(0) : std::nullopt);
}

CoefficientAlgebra CoefficientAlgebra::ground_field() {
  return create({"1"}, {0}, {{{0, 0}, SparseVector{{0, Rational(1)}}}}, 0);
}

CurrentLie::CurrentLie(LieData g, CoefficientAlgebra a) : g_(std::move(g)), a_(std::move(a)) {}

std::vector<gca::Derivation> CEComplex::constraints() const {
  std::vector<gca::Derivation> out = contractions;
  out.insert(out.end(), lie_derivatives.begin(), lie_derivatives.end());
  return out;
}

CEComplex ce_complex(const CurrentLie& cl) {
  const LieData& g = cl.lie();
  const CoefficientAlgebra& A = cl.coefficients();
  std::vector<gca::Generator> gens;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t a = 0; a < A.dim(); ++a) gens.push_back({g.names()[i] + "." + A.name(a), A.degree(a) - 1, std::nullopt});
  }
  auto alg = gca::GradedCommAlgebra::create(gens);
  CEComplex ce;
  ce.algebra = alg;
  ce.d = gca::Derivation(alg, -1);
  // d theta^gamma = -1/2 sum (-1)^{n_a (n_b + 1)} f^gamma_{ab} theta^a theta^b,
  // n = -|a| the homological degree of the Lie algebra element.
  std::vector<gca::AlgebraElement> images(gens.size(), alg->zero());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      const auto& br = g.bracket_of(i, j);
      if (br.empty()) continue;
      for (std::size_t a = 0; a < A.dim(); ++a) {
        for (std::size_t b = 0; b < A.dim(); ++b) {
          const auto& ab = A.product(a, b);
          if (ab.empty()) continue;
          int na = -A.degree(a), nb = -A.degree(b);
          Rational sign = ((na * (nb + 1)) % 2 != 0) ? Rational(1, 2) : Rational(-1, 2);
          gca::AlgebraElement quad = alg->gen(cl.index(i, a)) * alg->gen(cl.index(j, b));
          if (quad.is_zero()) continue;
          for (const auto& [k, ck] : br) {
            for (const auto& [c, mc] : ab) images[cl.index(k, c)] += quad * (sign * ck * mc);
          }
        }
      }
    }
  }
  for (std::size_t t = 0; t < gens.size(); ++t) ce.d.set_image(t, images[t]);
  std::string witness;
  if (!ce_d_squared_zero(ce, &witness)) fail(ErrorKind::CompositionNonzero, "CE differential: " + witness);
  return ce;
}

CEComplex ce_relative(const CurrentLie& cl) {
  const LieData& g = cl.lie();
  const CoefficientAlgebra& A = cl.coefficients();
  if (!g.reductive()) fail(ErrorKind::NotReductive, "relative complex needs a reductive Lie algebra");
  if (!A.unit()) fail(ErrorKind::InvalidInput, "relative complex needs a unital coefficient algebra");
  CEComplex ce = ce_complex(cl);
  const std::size_t unit = *A.unit();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    gca::Derivation iota(ce.algebra, +1);
    iota.set_image(cl.index(i, unit), ce.algebra->one());
    ce.lie_derivatives.push_back(gca::commutator(ce.d, iota));
    ce.contractions.push_back(std::move(iota));
  }
  return ce;
}

bool ce_d_squared_zero(const CEComplex& ce, std::string* witness) {
  for (std::size_t t = 0; t < ce.algebra->size(); ++t) {
    gca::AlgebraElement dd = ce.d.apply(ce.d.image(t));
    if (!dd.is_zero()) {
      if (witness) *witness = "d^2(" + ce.algebra->generator(t).name + ") = " + dd.to_string();
      return false;
    }
  }
  return true;
}

}  // namespace rephom::lie
