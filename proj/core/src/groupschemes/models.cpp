#include "rephom/groupschemes/models.hpp"

#include "rephom/error.hpp"
#include "rephom/gca/subcomplex.hpp"

namespace rephom::groupschemes {

namespace {

std::vector<std::string> numbered_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

// Names for the D odd generators attached to the regular sequence.
std::vector<std::string> sequence_names(const GroupSchemeData& g, const std::string& stem) {
  std::vector<std::string> out;
  const int n = g.n();
  if (g.is_matrix_group()) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) out.push_back(stem + "_" + std::to_string(i) + std::to_string(j));
    }
  } else if (n == 1) {
    out.push_back(stem);
  } else {
    for (int k = 1; k <= n; ++k) out.push_back(stem + "_" + std::to_string(k));
  }
  return out;
}

std::vector<gca::Generator> odd_generators(const GroupSchemeData& g, const std::vector<std::string>& names) {
  std::vector<gca::Generator> out;
  const bool weighted = g.kind() == GroupKind::Additive;
  for (const auto& nm : names) out.push_back({nm, 1, weighted ? std::optional<int>(1) : std::nullopt});
  return out;
}

// Polynomial variables: every even generator in order, then one inverse
// variable per invertible generator.
class PolyConverter {
 public:
  explicit PolyConverter(const gca::GradedCommAlgebra& alg) : alg_(alg) {
    var_of_.assign(alg.size(), -1);
    for (std::size_t i = 0; i < alg.size(); ++i) {
      if (alg.generator(i).odd()) continue;
      var_of_[i] = static_cast<int>(names_.size());
      names_.push_back(alg.generator(i).name);
    }
    inv_of_.assign(alg.size(), -1);
    for (std::size_t i = 0; i < alg.size(); ++i) {
      if (!alg.invertible(i)) continue;
      inv_of_[i] = static_cast<int>(names_.size());
      names_.push_back("w" + alg.generator(i).name);
    }
  }
  const std::vector<std::string>& names() const { return names_; }

  groebner::Polynomial convert(const gca::AlgebraElement& e) const {
    std::vector<groebner::Term> terms;
    for (const auto& [m, c] : e.terms()) {
      groebner::Exponents ex(names_.size(), 0);
      for (std::size_t i = 0; i < m.exps.size(); ++i) {
        const int k = m.exps[i];
        if (k == 0) continue;
        if (var_of_[i] < 0) fail(ErrorKind::InvalidInput, "odd generator in a degree-0 relation");
        if (k > 0) {
          ex[static_cast<std::size_t>(var_of_[i])] += k;
        } else {
          ex[static_cast<std::size_t>(inv_of_[i])] += -k;
        }
      }
      terms.push_back({std::move(ex), c});
    }
    return groebner::Polynomial::from_terms(names_.size(), std::move(terms));
  }

  // z w - 1 for every invertible generator.
  std::vector<groebner::Polynomial> inverse_relations() const {
    std::vector<groebner::Polynomial> out;
    for (std::size_t i = 0; i < inv_of_.size(); ++i) {
      if (inv_of_[i] < 0) continue;
      const std::size_t n = names_.size();
      out.push_back(groebner::Polynomial::variable(n, static_cast<std::size_t>(var_of_[i])) *
                        groebner::Polynomial::variable(n, static_cast<std::size_t>(inv_of_[i])) -
                    groebner::Polynomial::constant(n, 1));
    }
    return out;
  }

 private:
  const gca::GradedCommAlgebra& alg_;
  std::vector<std::string> names_;
  std::vector<int> var_of_, inv_of_;
};

// Multiply a Laurent element by the smallest monomial making every exponent
// non-negative.
gca::AlgebraElement clear_laurent(const gca::AlgebraElement& e) {
  const auto& alg = *e.algebra();
  gca::Monomial shift = alg.unit_monomial();
  for (const auto& [m, c] : e.terms()) {
    for (std::size_t i = 0; i < m.exps.size(); ++i) shift.exps[i] = std::max(shift.exps[i], -m.exps[i]);
  }
  return e * alg.monomial(shift);
}

}  // namespace

DGModel koszul_complex(const GroupSchemeData& g) {
  if (g.kind() == GroupKind::SL) {
    fail(ErrorKind::NoRegularSequence, "the augmentation ideal of " + g.name() + " has no catalogued regular sequence");
  }
  auto names = sequence_names(g, "e");
  DGModel m;
  m.ring = std::make_shared<CoordinateRing>(g, std::vector<std::string>{""}, odd_generators(g, names));
  m.d = gca::Derivation(m.ring->algebra(), -1);
  auto seq = m.ring->regular_sequence(m.ring->generic(0));
  for (std::size_t k = 0; k < names.size(); ++k) m.d.set_image(names[k], seq[k]);
  m.notes.push_back("Koszul complex of " + g.name() + " on the regular sequence generating the augmentation ideal");
  return m;
}

DGModel surface_model(const GroupSchemeData& g, int genus, bool orientable) {
  if (genus < 0 || (!orientable && genus < 1)) fail(ErrorKind::InvalidInput, "invalid surface genus");
  if (g.kind() == GroupKind::SL) {
    fail(ErrorKind::NoRegularSequence, "surface models need a regular sequence; none catalogued for " + g.name());
  }
  std::vector<std::string> labels;
  GroupWord relator;
  for (int i = 1; i <= genus; ++i) {
    const std::size_t base = labels.size();
    labels.push_back("a" + std::to_string(i));
    if (orientable) {
      labels.push_back("b" + std::to_string(i));
      relator = relator * commutator(GroupWord::generator(base), GroupWord::generator(base + 1));
    } else {
      relator = relator * GroupWord::generator(base, 2);
    }
  }
  auto names = sequence_names(g, "theta");
  DGModel m;
  m.ring = std::make_shared<CoordinateRing>(g, labels, odd_generators(g, names));
  m.d = gca::Derivation(m.ring->algebra(), -1);
  auto seq = m.ring->regular_sequence(m.ring->evaluate(relator));
  for (std::size_t k = 0; k < names.size(); ++k) m.d.set_image(names[k], seq[k]);
  m.notes.push_back(std::string(orientable ? "orientable" : "non-orientable") + " surface of genus " +
                    std::to_string(genus) + ", relator " + relator.to_string(labels));
  if (g.kind() == GroupKind::GL) m.notes.push_back("inverses as adj(X) d_X with d_X det(X) = 1");
  return m;
}

std::vector<gca::AlgebraElement> coordinate_action(const CoordinateRing& ring, const FreeGroupMap& phi) {
  std::vector<gca::AlgebraElement> out;
  for (std::size_t c = 0; c < ring.copies(); ++c) {
    GroupValue v = ring.evaluate(phi.images.at(c));
    for (auto& e : v.entries) out.push_back(std::move(e));
  }
  return out;
}

DGModel twisted_hochschild_complex(const GroupSchemeData& g, const BraidWord& b) {
  FreeGroupMap phi = artin_action(b);
  auto labels = numbered_labels(b.strands);
  // Probe ring for coordinate names.
  CoordinateRing probe(g, labels);
  std::vector<std::string> names;
  for (std::size_t c = 0; c < probe.copies(); ++c) {
    for (std::size_t i : probe.coordinates(c)) names.push_back("e" + probe.algebra()->generator(i).name);
  }
  DGModel m;
  m.ring = std::make_shared<CoordinateRing>(g, labels, odd_generators(g, names));
  m.d = gca::Derivation(m.ring->algebra(), -1);
  auto images = coordinate_action(*m.ring, phi);
  const auto& alg = m.ring->algebra();
  std::size_t k = 0;
  for (std::size_t c = 0; c < m.ring->copies(); ++c) {
    for (std::size_t i : m.ring->coordinates(c)) {
      m.d.set_image(names[k], alg->gen(i) - images[k]);
      ++k;
    }
  }
  std::string braid;
  for (int s : b.generators) braid += (braid.empty() ? "" : " ") + std::string(s < 0 ? "s" + std::to_string(-s) + "^-1" : "s" + std::to_string(s));
  m.notes.push_back("twisted Hochschild model for the closure of [" + braid + "] on " + std::to_string(b.strands) +
                    " strands; d e_v = v - beta_*(v)");
  return m;
}

groebner::PolyIdeal rep0_presentation(const GroupSchemeData& g, std::size_t generators,
                                      const std::vector<GroupWord>& relators,
                                      const std::vector<std::string>& labels) {
  if (!labels.empty() && labels.size() != generators) fail(ErrorKind::DimensionMismatch, "one label per generator");
  CoordinateRing ring(g, labels.empty() ? numbered_labels(generators) : labels);
  const auto& alg = ring.algebra();
  PolyConverter conv(*alg);
  std::vector<groebner::Polynomial> gens;
  for (const auto& r : relators) {
    if (r.symbol_bound() > generators) fail(ErrorKind::InvalidInput, "relator uses an undeclared generator");
    switch (g.kind()) {
      case GroupKind::Additive:
        for (const auto& e : ring.evaluate(r).entries) gens.push_back(conv.convert(e));
        break;
      case GroupKind::Torus:
        for (const auto& e : ring.evaluate(r).entries) gens.push_back(conv.convert(clear_laurent(e - alg->one())));
        break;
      case GroupKind::GL:
      case GroupKind::SL: {
        // Numerator with adj(X) for each inverse letter, and the matching
        // power of det on the identity.
        GroupValue num = ring.identity();
        gca::AlgebraElement den = alg->one();
        for (const auto& l : r.letters()) {
          GroupValue x = ring.generic(l.symbol);
          GroupValue base = l.exponent > 0 ? x : ring.adjugate(x);
          for (int k = 0; k < std::abs(l.exponent); ++k) {
            num = ring.multiply(num, base);
            if (l.exponent < 0 && g.kind() == GroupKind::GL) den = den * ring.det(x);
          }
        }
        const auto n = static_cast<std::size_t>(g.n());
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            gca::AlgebraElement e = num.entries[i * n + j];
            if (i == j) e -= den;
            gens.push_back(conv.convert(e));
          }
        }
        break;
      }
    }
  }
  for (const auto& rel : ring.coordinate_relations()) gens.push_back(conv.convert(rel));
  for (auto& p : conv.inverse_relations()) gens.push_back(std::move(p));
  return groebner::PolyIdeal::make(conv.names(), std::move(gens));
}

groebner::PolyIdeal model_degree0_ideal(const DGModel& m) {
  const auto& alg = m.algebra();
  // Polynomial variables must match rep0_presentation: rebuild the converter
  // on a ring without the odd generators.
  CoordinateRing bare(m.ring->group(), m.ring->labels());
  PolyConverter conv(*bare.algebra());
  std::vector<groebner::Polynomial> gens;
  std::vector<gca::AlgebraElement> bare_gens;
  for (std::size_t i = 0; i < bare.algebra()->size(); ++i) bare_gens.push_back(bare.algebra()->gen(i));
  std::vector<gca::AlgebraElement> images(alg->size(), bare.algebra()->zero());
  for (std::size_t i = 0; i < bare.algebra()->size(); ++i) images[i] = bare_gens[i];
  for (std::size_t t = 0; t < alg->size(); ++t) {
    if (alg->generator(t).degree != 1) continue;
    gca::AlgebraElement dt = gca::substitute(m.d.image(t), images);
    if (m.ring->group().kind() == GroupKind::Torus) dt = clear_laurent(dt);
    gens.push_back(conv.convert(dt));
  }
  for (const auto& rel : bare.coordinate_relations()) gens.push_back(conv.convert(rel));
  for (auto& p : conv.inverse_relations()) gens.push_back(std::move(p));
  return groebner::PolyIdeal::make(conv.names(), std::move(gens));
}

BettiTable model_homology(const DGModel& m, int max_degree, int max_weight) {
  const auto kind = m.ring->group().kind();
  if (kind == GroupKind::Additive) return gca::homology_table(m.d, {0, max_degree, max_weight, {}});
  if (kind == GroupKind::Torus && m.d.is_zero()) {
    // Zero differential: homology is the algebra itself, counted by exact
    // Laurent degree (difference of consecutive aux cutoffs).
    BettiTable out(TrustedRange{max_degree, max_weight});
    for (int q = 0; q <= max_degree; ++q) {
      std::size_t prev = 0;
      for (int w = 0; w <= max_weight; ++w) {
        std::size_t cur = gca::degree_slice_basis(*m.algebra(), q, std::nullopt, gca::Cutoffs{w}).size();
        out.set(q, w, cur - prev);
        prev = cur;
      }
    }
    return out;
  }
  fail(ErrorKind::UnsupportedForExactHomology,
       "exact homology slices need G_a^d, or G_m^d with vanishing differential; the presentation is still available");
}

}  // namespace rephom::groupschemes
