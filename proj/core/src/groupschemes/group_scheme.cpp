#include "rephom/groupschemes/group_scheme.hpp"

#include <nlohmann/json.hpp>

#include "rephom/error.hpp"

namespace rephom::groupschemes {

GroupSchemeData GroupSchemeData::additive(int d) {
  if (d < 1) fail(ErrorKind::InvalidInput, "G_a^d needs d >= 1");
  GroupSchemeData g;
  g.kind_ = GroupKind::Additive;
  g.n_ = d;
  return g;
}

GroupSchemeData GroupSchemeData::torus(int d) {
  if (d < 1) fail(ErrorKind::InvalidInput, "G_m^d needs d >= 1");
  GroupSchemeData g;
  g.kind_ = GroupKind::Torus;
  g.n_ = d;
  return g;
}

GroupSchemeData GroupSchemeData::general_linear(int n) {
  if (n < 1 || n > 3) fail(ErrorKind::UnsupportedGroup, "GL_n is supported for 1 <= n <= 3");
  GroupSchemeData g;
  g.kind_ = GroupKind::GL;
  g.n_ = n;
  return g;
}

GroupSchemeData GroupSchemeData::special_linear(int n) {
  if (n < 2 || n > 3) fail(ErrorKind::UnsupportedGroup, "SL_n is supported for n = 2, 3");
  GroupSchemeData g;
  g.kind_ = GroupKind::SL;
  g.n_ = n;
  return g;
}

GroupSchemeData GroupSchemeData::parse(const std::string& text) {
  std::string kind = text, arg;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    kind = text.substr(0, colon);
    arg = text.substr(colon + 1);
  } else if (text.size() > 2 && (text.rfind("GL", 0) == 0 || text.rfind("SL", 0) == 0)) {
    kind = text.substr(0, 2);
    arg = text.substr(2);
  }
  int n = 1;
  if (!arg.empty()) {
    try {
      n = std::stoi(arg);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidInput, "bad group parameter in '" + text + "'");
    }
  }
  if (kind == "Ga" || kind == "G_a") return additive(n);
  if (kind == "Gm" || kind == "G_m") return torus(n);
  if (kind == "GL") return general_linear(arg.empty() ? 2 : n);
  if (kind == "SL") return special_linear(arg.empty() ? 2 : n);
  fail(ErrorKind::UnsupportedGroup, "unknown group '" + text + "'");
}

GroupSchemeData GroupSchemeData::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("group JSON: ") + e.what());
  }
  if (j.contains("group")) j = j["group"];
  if (!j.contains("kind")) fail(ErrorKind::InvalidInput, "group JSON needs a kind");
  std::string kind = j["kind"].get<std::string>();
  int n = j.value("n", kind == "GL" || kind == "SL" ? 2 : 1);
  return parse(kind + ":" + std::to_string(n));
}

std::string GroupSchemeData::name() const {
  switch (kind_) {
    case GroupKind::Additive:
      return n_ == 1 ? "Ga" : "Ga:" + std::to_string(n_);
    case GroupKind::Torus:
      return n_ == 1 ? "Gm" : "Gm:" + std::to_string(n_);
    case GroupKind::GL:
      return "GL:" + std::to_string(n_);
    case GroupKind::SL:
      return "SL:" + std::to_string(n_);
  }
  return "?";
}

std::size_t GroupSchemeData::dimension() const {
  const auto n = static_cast<std::size_t>(n_);
  switch (kind_) {
    case GroupKind::Additive:
    case GroupKind::Torus:
      return n;
    case GroupKind::GL:
      return n * n;
    case GroupKind::SL:
      return n * n - 1;
  }
  return 0;
}

lie::LieData GroupSchemeData::lie_algebra() const {
  switch (kind_) {
    case GroupKind::Additive:
    case GroupKind::Torus:
      return lie::LieData::abelian(static_cast<std::size_t>(n_));
    case GroupKind::GL:
      return lie::LieData::gl(static_cast<std::size_t>(n_));
    case GroupKind::SL:
      if (n_ == 2) return lie::LieData::sl2();
      break;
  }
  fail(ErrorKind::UnsupportedGroup, "no built-in Lie algebra for " + name());
}

CoordinateRing::CoordinateRing(GroupSchemeData g, std::vector<std::string> labels, std::vector<gca::Generator> extra)
    : g_(g), labels_(std::move(labels)) {
  std::vector<gca::Generator> gens;
  std::vector<std::string> invertible;
  const int n = g_.n();
  const bool weighted = g_.kind() == GroupKind::Additive;
  for (const auto& s : labels_) {
    std::vector<std::size_t> idx;
    auto add = [&](const std::string& name) {
      idx.push_back(gens.size());
      gens.push_back({name, 0, weighted ? std::optional<int>(1) : std::nullopt});
    };
    switch (g_.kind()) {
      case GroupKind::Additive:
        for (int k = 1; k <= n; ++k) add(n == 1 ? "t" + s : "t" + s + "_" + std::to_string(k));
        break;
      case GroupKind::Torus:
        for (int k = 1; k <= n; ++k) {
          add(n == 1 ? "z" + s : "z" + s + "_" + std::to_string(k));
          invertible.push_back(gens.back().name);
        }
        break;
      case GroupKind::GL:
      case GroupKind::SL:
        for (int i = 1; i <= n; ++i) {
          for (int j = 1; j <= n; ++j) add("x" + s + "_" + std::to_string(i) + std::to_string(j));
        }
        break;
    }
    coords_.push_back(std::move(idx));
    if (g_.kind() == GroupKind::GL) {
      det_inv_.push_back(gens.size());
      gens.push_back({"d" + s, 0, std::nullopt});
    }
  }
  for (auto& e : extra) {
    if (weighted != e.weight.has_value()) {
      fail(ErrorKind::InvalidInput, "extra generator " + e.name + " must be weighted exactly for G_a^d");
    }
    gens.push_back(std::move(e));
  }
  auto alg = gca::GradedCommAlgebra::create(gens, invertible);
  alg_ = alg;
  alg->set_relations(coordinate_relations());
}

GroupValue CoordinateRing::identity() const {
  GroupValue v;
  const auto n = static_cast<std::size_t>(g_.n());
  switch (g_.kind()) {
    case GroupKind::Additive:
      v.entries.assign(n, alg_->zero());
      break;
    case GroupKind::Torus:
      v.entries.assign(n, alg_->one());
      break;
    default:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) v.entries.push_back(i == j ? alg_->one() : alg_->zero());
      }
  }
  return v;
}

GroupValue CoordinateRing::generic(std::size_t c) const {
  GroupValue v;
  for (std::size_t i : coords_.at(c)) v.entries.push_back(alg_->gen(i));
  return v;
}

GroupValue CoordinateRing::generic_inverse(std::size_t c) const {
  GroupValue x = generic(c);
  switch (g_.kind()) {
    case GroupKind::Additive:
      for (auto& e : x.entries) e = -e;
      return x;
    case GroupKind::Torus:
      for (auto& e : x.entries) e = gca::power(e, -1);
      return x;
    case GroupKind::GL: {
      GroupValue adj = adjugate(x);
      auto d = alg_->gen(det_inv_.at(c));
      for (auto& e : adj.entries) e = e * d;
      return adj;
    }
    case GroupKind::SL:
      return adjugate(x);
  }
  return x;
}

GroupValue CoordinateRing::multiply(const GroupValue& a, const GroupValue& b) const {
  GroupValue out;
  switch (g_.kind()) {
    case GroupKind::Additive:
      for (std::size_t k = 0; k < a.entries.size(); ++k) out.entries.push_back(a.entries[k] + b.entries[k]);
      return out;
    case GroupKind::Torus:
      for (std::size_t k = 0; k < a.entries.size(); ++k) out.entries.push_back(a.entries[k] * b.entries[k]);
      return out;
    default: {
      const auto n = static_cast<std::size_t>(g_.n());
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          gca::AlgebraElement s = alg_->zero();
          for (std::size_t k = 0; k < n; ++k) s += a.entries[i * n + k] * b.entries[k * n + j];
          out.entries.push_back(std::move(s));
        }
      }
      return out;
    }
  }
}

GroupValue CoordinateRing::evaluate(const GroupWord& w) const {
  if (w.symbol_bound() > copies()) fail(ErrorKind::InvalidInput, "word uses more generators than available copies");
  GroupValue out = identity();
  for (const auto& l : w.letters()) {
    GroupValue base = l.exponent > 0 ? generic(l.symbol) : generic_inverse(l.symbol);
    for (int k = 0; k < std::abs(l.exponent); ++k) out = multiply(out, base);
  }
  return out;
}

std::vector<gca::AlgebraElement> CoordinateRing::regular_sequence(const GroupValue& v) const {
  std::vector<gca::AlgebraElement> out;
  const auto n = static_cast<std::size_t>(g_.n());
  switch (g_.kind()) {
    case GroupKind::Additive:
      return v.entries;
    case GroupKind::Torus:
      for (const auto& e : v.entries) out.push_back(e - alg_->one());
      return out;
    case GroupKind::GL:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          out.push_back(i == j ? v.entries[i * n + j] - alg_->one() : v.entries[i * n + j]);
        }
      }
      return out;
    case GroupKind::SL:
      break;
  }
  fail(ErrorKind::NoRegularSequence, "no regular sequence for the augmentation ideal of " + g_.name());
}

std::vector<gca::AlgebraElement> CoordinateRing::coordinate_relations() const {
  std::vector<gca::AlgebraElement> out;
  for (std::size_t c = 0; c < copies(); ++c) {
    if (g_.kind() == GroupKind::GL) out.push_back(alg_->gen(det_inv_[c]) * det(generic(c)) - alg_->one());
    if (g_.kind() == GroupKind::SL) out.push_back(det(generic(c)) - alg_->one());
  }
  return out;
}

gca::AlgebraElement CoordinateRing::det(const GroupValue& m) const {
  std::size_t n = 0;
  while (n * n < m.entries.size()) ++n;
  if (n * n != m.entries.size()) fail(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  if (n == 1) return m.entries[0];
  // Laplace expansion along the first row.
  gca::AlgebraElement s = alg_->zero();
  for (std::size_t j = 0; j < n; ++j) {
    GroupValue minor;
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) minor.entries.push_back(m.entries[i * n + k]);
      }
    }
    gca::AlgebraElement term = m.entries[j] * det(minor);
    if (j % 2 == 0) {
      s += term;
    } else {
      s -= term;
    }
  }
  return s;
}

GroupValue CoordinateRing::adjugate(const GroupValue& m) const {
  std::size_t n = 0;
  while (n * n < m.entries.size()) ++n;
  GroupValue out;
  out.entries.assign(n * n, alg_->zero());
  if (n == 1) {
    out.entries[0] = alg_->one();
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      GroupValue minor;
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
          if (r != i && k != j) minor.entries.push_back(m.entries[r * n + k]);
        }
      }
      gca::AlgebraElement cof = det(minor);
      // adj(M)_{ji} = (-1)^{i+j} minor_{ij}.
      out.entries[j * n + i] = ((i + j) % 2 == 0) ? cof : -cof;
    }
  }
  return out;
}

GroupValue evaluate_word(const CoordinateRing& ring, const GroupWord& w) { return ring.evaluate(w); }

}  // namespace rephom::groupschemes
