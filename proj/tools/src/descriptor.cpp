#include "rephom/cli/descriptor.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rephom/error.hpp"

namespace rephom::cli {

using nlohmann::json;

namespace {

int require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    fail(ErrorKind::InvalidInput, std::string("space descriptor needs integer field '") + key + "'");
  return j[key].get<int>();
}

SpaceDescriptor parse(const json& j);

std::vector<SpaceDescriptor> parse_parts(const json& j) {
  if (!j.contains("of")) fail(ErrorKind::InvalidInput, "descriptor needs field 'of'");
  std::vector<SpaceDescriptor> out;
  if (j["of"].is_array()) {
    for (const auto& p : j["of"]) out.push_back(parse(p));
  } else {
    out.push_back(parse(j["of"]));
  }
  if (out.empty()) fail(ErrorKind::InvalidInput, "'of' must not be empty");
  return out;
}

SpaceDescriptor parse(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    fail(ErrorKind::InvalidInput, "space descriptor needs a string field 'kind'");
  auto kind = j["kind"].get<std::string>();
  SpaceDescriptor s;
  if (kind == "sphere") {
    s.kind = SpaceKind::Sphere;
    s.n = require_int(j, "n");
    if (s.n < 1) fail(ErrorKind::InvalidInput, "sphere needs n >= 1");
  } else if (kind == "wedge") {
    s.kind = SpaceKind::Wedge;
    s.parts = parse_parts(j);
  } else if (kind == "suspension") {
    s.kind = SpaceKind::Suspension;
    s.parts = parse_parts(j);
    if (s.parts.size() != 1) fail(ErrorKind::InvalidInput, "suspension takes one space");
  } else if (kind == "plus") {
    s.kind = SpaceKind::Plus;
    s.parts = parse_parts(j);
    if (s.parts.size() != 1) fail(ErrorKind::InvalidInput, "plus takes one space");
  } else if (kind == "cp") {
    s.kind = SpaceKind::CP;
    s.n = require_int(j, "r");
    if (s.n < 2) fail(ErrorKind::InvalidInput, "cp needs r >= 2");
  } else if (kind == "surface") {
    s.kind = SpaceKind::Surface;
    s.n = require_int(j, "genus");
    s.orientable = j.value("orientable", true);
    if (s.n < 0 || (!s.orientable && s.n < 1))
      fail(ErrorKind::InvalidInput, "surface genus must be >= 0 (>= 1 when non-orientable)");
  } else if (kind == "torus") {
    s.kind = SpaceKind::Torus;
    s.n = 1;
  } else if (kind == "link") {
    s.kind = SpaceKind::Link;
    s.braid.strands = static_cast<std::size_t>(require_int(j, "strands"));
    if (j.contains("braid")) s.braid.generators = j["braid"].get<std::vector<int>>();
    if (s.braid.strands < 1) fail(ErrorKind::InvalidInput, "a braid needs at least one strand");
    for (int g : s.braid.generators)
      if (g == 0 || static_cast<std::size_t>(std::abs(g)) >= s.braid.strands)
        fail(ErrorKind::InvalidInput, "braid generator " + std::to_string(g) + " out of range");
  } else if (kind == "kpi1") {
    s.kind = SpaceKind::KPi1;
    s.presentation.generators = j.at("generators").get<std::vector<std::string>>();
    if (s.presentation.generators.empty()) fail(ErrorKind::InvalidInput, "kpi1 needs generators");
    if (j.contains("relators"))
      for (const auto& r : j["relators"])
        s.presentation.relators.push_back(
            groupschemes::GroupWord::parse(r.get<std::string>(), s.presentation.generators));
  } else if (kind == "bzp") {
    s.kind = SpaceKind::BZp;
    s.n = require_int(j, "p");
    if (s.n < 2) fail(ErrorKind::InvalidInput, "bzp needs p >= 2");
  } else if (kind == "simplicial") {
    s.kind = SpaceKind::Simplicial;
    s.cells_json = j.dump();
    simplicial::FiniteSimplicialSet::from_json(s.cells_json);  // validate now
  } else {
    fail(ErrorKind::InvalidInput, "unknown space kind '" + kind + "'");
  }
  return s;
}

std::size_t braid_components(const groupschemes::BraidWord& b) {
  std::vector<std::size_t> perm(b.strands);
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  for (int g : b.generators) {
    auto i = static_cast<std::size_t>(std::abs(g)) - 1;
    std::swap(perm[i], perm[i + 1]);
  }
  std::vector<bool> seen(perm.size(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t k = i; !seen[k]; k = perm[k]) seen[k] = true;
  }
  return cycles;
}

}  // namespace

SpaceDescriptor SpaceDescriptor::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("space descriptor JSON: ") + e.what());
  }
  if (j.contains("space")) j = j["space"];
  return parse(j);
}

SpaceDescriptor SpaceDescriptor::load(const std::string& text_or_path) {
  auto first = text_or_path.find_first_not_of(" \t\n");
  if (first != std::string::npos && text_or_path[first] == '{') return from_json_text(text_or_path);
  std::ifstream in(text_or_path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot read space descriptor '" + text_or_path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

std::string SpaceDescriptor::kind_name() const {
  switch (kind) {
    case SpaceKind::Sphere: return "sphere";
    case SpaceKind::Wedge: return "wedge";
    case SpaceKind::Suspension: return "suspension";
    case SpaceKind::Plus: return "plus";
    case SpaceKind::CP: return "cp";
    case SpaceKind::Surface: return "surface";
    case SpaceKind::Torus: return "torus";
    case SpaceKind::Link: return "link";
    case SpaceKind::KPi1: return "kpi1";
    case SpaceKind::BZp: return "bzp";
    case SpaceKind::Simplicial: return "simplicial";
  }
  return "?";
}

std::string SpaceDescriptor::label() const {
  switch (kind) {
    case SpaceKind::Sphere: return "S^" + std::to_string(n);
    case SpaceKind::Wedge: {
      std::string s;
      for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " v " : "") + parts[i].label();
      return parts.size() > 1 ? "(" + s + ")" : s;
    }
    case SpaceKind::Suspension: return "Sigma " + parts[0].label();
    case SpaceKind::Plus: return parts[0].label() + "_+";
    case SpaceKind::CP: return "CP^" + std::to_string(n);
    case SpaceKind::Surface: return (orientable ? "Sigma_" : "N_") + std::to_string(n);
    case SpaceKind::Torus: return "T^2";
    case SpaceKind::Link: {
      std::string s = "link(B" + std::to_string(braid.strands) + ":";
      for (std::size_t i = 0; i < braid.generators.size(); ++i)
        s += (i ? " " : "") + std::to_string(braid.generators[i]);
      return s + ")";
    }
    case SpaceKind::KPi1: {
      std::string s = "K(<";
      for (std::size_t i = 0; i < presentation.generators.size(); ++i)
        s += (i ? "," : "") + presentation.generators[i];
      s += " | ";
      for (std::size_t i = 0; i < presentation.relators.size(); ++i)
        s += (i ? ", " : "") + presentation.relators[i].to_string(presentation.generators);
      return s + ">,1)";
    }
    case SpaceKind::BZp: return "BZ/" + std::to_string(n);
    case SpaceKind::Simplicial: return json::parse(cells_json).value("name", std::string("custom"));
  }
  return "?";
}

bool SpaceDescriptor::connected() const {
  switch (kind) {
    case SpaceKind::Plus: return false;
    case SpaceKind::Wedge:
      return std::all_of(parts.begin(), parts.end(), [](const auto& p) { return p.connected(); });
    case SpaceKind::Simplicial: return simplicial::FiniteSimplicialSet::from_json(cells_json).reduced();
    default: return true;
  }
}

bool SpaceDescriptor::simply_connected() const {
  switch (kind) {
    case SpaceKind::Sphere: return n >= 2;
    case SpaceKind::Wedge:
      return std::all_of(parts.begin(), parts.end(), [](const auto& p) { return p.simply_connected(); });
    case SpaceKind::Suspension: return parts[0].connected();
    case SpaceKind::CP: return true;
    case SpaceKind::Surface: return orientable && n == 0;
    default: return false;
  }
}

std::optional<std::map<int, int>> SpaceDescriptor::reduced_betti() const {
  std::map<int, int> b;
  switch (kind) {
    case SpaceKind::Sphere: b[n] = 1; break;
    case SpaceKind::Wedge:
      for (const auto& p : parts) {
        auto pb = p.reduced_betti();
        if (!pb) return std::nullopt;
        for (auto [k, v] : *pb) b[k] += v;
      }
      break;
    case SpaceKind::Suspension: {
      auto pb = parts[0].reduced_betti();
      if (!pb) return std::nullopt;
      for (auto [k, v] : *pb) b[k + 1] += v;
      break;
    }
    case SpaceKind::Plus: {
      auto pb = parts[0].reduced_betti();
      if (!pb) return std::nullopt;
      b = *pb;
      b[0] += 1;
      break;
    }
    case SpaceKind::CP:
      for (int i = 1; i <= n; ++i) b[2 * i] = 1;
      break;
    case SpaceKind::Surface:
      if (orientable) {
        if (n > 0) b[1] = 2 * n;
        b[2] = 1;
      } else if (n > 1) {
        b[1] = n - 1;
      }
      break;
    case SpaceKind::Torus: b[1] = 2; b[2] = 1; break;
    case SpaceKind::Link: {
      // Complement in R^3 of the closure: H_1 and H_2 both free of rank
      // equal to the number of components.
      int m = static_cast<int>(braid_components(braid));
      b[1] = m;
      b[2] = m;
      break;
    }
    case SpaceKind::BZp: break;
    case SpaceKind::KPi1:
    case SpaceKind::Simplicial: return std::nullopt;
  }
  std::erase_if(b, [](const auto& kv) { return kv.second == 0; });
  return b;
}

std::optional<std::vector<int>> SpaceDescriptor::sphere_dims() const {
  std::vector<int> dims;
  switch (kind) {
    case SpaceKind::Sphere: return std::vector<int>{n};
    case SpaceKind::Wedge:
      for (const auto& p : parts) {
        auto pd = p.sphere_dims();
        if (!pd) return std::nullopt;
        dims.insert(dims.end(), pd->begin(), pd->end());
      }
      return dims;
    case SpaceKind::Suspension: {
      auto pb = parts[0].reduced_betti();
      if (!pb) return std::nullopt;
      for (auto [k, v] : *pb)
        for (int i = 0; i < v; ++i) dims.push_back(k + 1);
      return dims;
    }
    default: return std::nullopt;
  }
}

lie::FreeGradedLie SpaceDescriptor::quillen_model(int cutoff) const {
  if (!simply_connected()) fail(ErrorKind::IncompatibleRoute, label() + " is not simply connected");
  if (kind == SpaceKind::CP) return lie::cp_model(n, std::max(cutoff, 2 * n - 1));
  auto dims = sphere_dims();
  if (!dims || dims->empty()) fail(ErrorKind::IncompatibleRoute, "no Quillen model known for " + label());
  int top = *std::max_element(dims->begin(), dims->end());
  return lie::sphere_wedge_model(*dims, std::max(cutoff, top - 1));
}

std::optional<lie::CoefficientAlgebra> SpaceDescriptor::sullivan_algebra(bool with_unit) const {
  if (!simply_connected()) return std::nullopt;
  if (kind == SpaceKind::CP) return lie::CoefficientAlgebra::truncated_polynomial(2, n, with_unit);
  auto dims = sphere_dims();
  if (!dims || dims->empty()) return std::nullopt;
  return lie::CoefficientAlgebra::sphere_wedge(*dims, with_unit);
}

std::optional<simplicial::FiniteSimplicialSet> SpaceDescriptor::simplicial_set(int levels) const {
  using simplicial::FiniteSimplicialSet;
  switch (kind) {
    case SpaceKind::Sphere: return FiniteSimplicialSet::sphere(n);
    case SpaceKind::Wedge: {
      std::optional<FiniteSimplicialSet> acc;
      for (const auto& p : parts) {
        auto ps = p.simplicial_set(levels);
        if (!ps) return std::nullopt;
        acc = acc ? FiniteSimplicialSet::wedge(*acc, *ps) : *ps;
      }
      return acc;
    }
    case SpaceKind::Suspension: {
      auto ps = parts[0].simplicial_set(levels);
      if (!ps) return std::nullopt;
      return FiniteSimplicialSet::suspension(*ps);
    }
    case SpaceKind::Plus: {
      auto ps = parts[0].simplicial_set(levels);
      if (!ps) return std::nullopt;
      return FiniteSimplicialSet::plus_point(*ps);
    }
    case SpaceKind::BZp: return FiniteSimplicialSet::classifying_cyclic(n, levels);
    case SpaceKind::Simplicial: return FiniteSimplicialSet::from_json(cells_json);
    default: return std::nullopt;
  }
}

GroupPresentation SpaceDescriptor::fundamental_group() const {
  using groupschemes::GroupWord;
  GroupPresentation p;
  auto gen = [](std::size_t i) { return GroupWord::generator(i); };
  switch (kind) {
    case SpaceKind::Sphere:
      if (n == 1) p.generators = {"x"};
      return p;
    case SpaceKind::Wedge:
      for (const auto& part : parts) {
        auto q = part.fundamental_group();
        std::size_t offset = p.generators.size();
        for (const auto& g : q.generators) p.generators.push_back(g + "_" + std::to_string(offset + 1));
        for (const auto& r : q.relators) {
          std::vector<groupschemes::Letter> letters;
          for (auto l : r.letters()) letters.push_back({l.symbol + offset, l.exponent});
          p.relators.emplace_back(std::move(letters));
        }
      }
      return p;
    case SpaceKind::Suspension:
      // pi_1 of a reduced suspension is free on the extra components.
      if (parts[0].kind == SpaceKind::Plus && parts[0].parts[0].connected()) p.generators = {"x"};
      else if (!parts[0].connected())
        fail(ErrorKind::InvalidInput, "fundamental group of " + label() + " is not in the catalog");
      return p;
    case SpaceKind::CP: return p;
    case SpaceKind::Surface:
    case SpaceKind::Torus: {
      int genus = kind == SpaceKind::Torus ? 1 : n;
      GroupWord rel;
      if (orientable || kind == SpaceKind::Torus) {
        for (int i = 0; i < genus; ++i) {
          p.generators.push_back("a" + std::to_string(i + 1));
          p.generators.push_back("b" + std::to_string(i + 1));
          rel = rel * groupschemes::commutator(gen(2 * i), gen(2 * i + 1));
        }
      } else {
        for (int i = 0; i < genus; ++i) {
          p.generators.push_back("a" + std::to_string(i + 1));
          rel = rel * gen(i).power(2);
        }
      }
      if (!rel.empty()) p.relators.push_back(rel);
      return p;
    }
    case SpaceKind::Link: {
      auto beta = groupschemes::artin_action(braid);
      for (std::size_t i = 0; i < braid.strands; ++i) {
        p.generators.push_back("x" + std::to_string(i + 1));
        auto r = beta.images[i] * gen(i).inverse();
        if (!r.empty()) p.relators.push_back(r);
      }
      return p;
    }
    case SpaceKind::KPi1: return presentation;
    case SpaceKind::BZp:
      p.generators = {"x"};
      p.relators = {gen(0).power(n)};
      return p;
    case SpaceKind::Plus:
    case SpaceKind::Simplicial: break;
  }
  fail(ErrorKind::InvalidInput, "no group presentation for " + label());
}

std::optional<groupschemes::DGModel> SpaceDescriptor::koszul_model(const groupschemes::GroupSchemeData& g) const {
  switch (kind) {
    case SpaceKind::Surface: return groupschemes::surface_model(g, n, orientable);
    case SpaceKind::Torus: return groupschemes::surface_model(g, 1, true);
    case SpaceKind::Link: return groupschemes::twisted_hochschild_complex(g, braid);
    default: return std::nullopt;
  }
}

}  // namespace rephom::cli
