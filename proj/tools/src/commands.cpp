#include "rephom/cli/commands.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rephom/error.hpp"
#include "rephom/groupschemes/models.hpp"
#include "rephom/simplicial/pipeline.hpp"

namespace rephom::cli {

std::string load_text(const std::string& text_or_path) {
  auto first = text_or_path.find_first_not_of(" \t\n");
  if (first != std::string::npos && (text_or_path[first] == '{' || text_or_path[first] == '['))
    return text_or_path;
  std::ifstream in(text_or_path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot read '" + text_or_path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("JSON: ") + e.what());
  }
}

}  // namespace

GroupPresentation load_presentation(const std::string& text_or_path) {
  std::string text = load_text(text_or_path);
  auto j = parse_json(text);
  if (j.contains("kind") || j.contains("space")) return SpaceDescriptor::from_json_text(text).fundamental_group();
  GroupPresentation p;
  if (!j.contains("generators")) fail(ErrorKind::InvalidInput, "presentation needs 'generators'");
  p.generators = j["generators"].get<std::vector<std::string>>();
  if (j.contains("relators"))
    for (const auto& r : j["relators"])
      p.relators.push_back(groupschemes::GroupWord::parse(r.get<std::string>(), p.generators));
  return p;
}

int Rep0Outcome::exit_code() const {
  if (exhausted) return 3;
  if (equal && !*equal) return 2;
  return 0;
}

std::string Rep0Outcome::to_text() const {
  std::ostringstream os;
  os << "variables:";
  for (const auto& v : block.variables) os << ' ' << v;
  os << '\n' << (block.exhausted ? "generators (Groebner basis exhausted):" : "reduced Groebner basis:") << '\n';
  if (block.basis.empty()) os << "  (zero ideal)\n";
  for (const auto& b : block.basis) os << "  " << b << '\n';
  if (equal) os << "comparison: " << (*equal ? "ideals are equal" : "ideals DIFFER") << '\n';
  if (exhausted && !equal) os << "comparison: undecided (effort budget exhausted)\n";
  return os.str();
}

std::string Rep0Outcome::to_json() const {
  nlohmann::ordered_json j;
  j["variables"] = block.variables;
  j["basis"] = block.basis;
  j["exhausted"] = exhausted;
  j["equal"] = equal ? nlohmann::ordered_json(*equal) : nlohmann::ordered_json(nullptr);
  j["exit_code"] = exit_code();
  return j.dump(2) + "\n";
}

Rep0Outcome rep0_command(const std::string& presentation, const GroupRef& group,
                         const std::optional<std::string>& other) {
  if (!group.scheme) fail(ErrorKind::UnsupportedGroup, "rep0 needs a group scheme, not a bare Lie algebra");
  const auto& G = *group.scheme;
  auto pi = load_presentation(presentation);
  std::vector<std::string> labels;
  std::optional<groebner::PolyIdeal> rhs;
  if (other) {
    std::string text = load_text(*other);
    auto j = parse_json(text);
    std::optional<groupschemes::DGModel> model;
    if (j.contains("kind") || j.contains("space")) model = SpaceDescriptor::from_json_text(text).koszul_model(G);
    if (model) {
      labels = model->ring->labels();
      if (labels.size() != pi.generators.size())
        fail(ErrorKind::DimensionMismatch, "the model has " + std::to_string(labels.size()) +
                                               " copies of G but the presentation has " +
                                               std::to_string(pi.generators.size()) + " generators");
      rhs = groupschemes::model_degree0_ideal(*model);
    } else {
      auto q = load_presentation(*other);
      if (q.generators.size() != pi.generators.size())
        fail(ErrorKind::DimensionMismatch, "presentations have different numbers of generators");
      rhs = groupschemes::rep0_presentation(G, q.generators.size(), q.relators);
    }
  }
  auto ideal = groupschemes::rep0_presentation(G, pi.generators.size(), pi.relators, labels);
  Rep0Outcome out;
  out.block.variables = ideal.variables;
  auto gb = groebner::groebner_basis(ideal);
  out.block.exhausted = gb.exhausted;
  for (const auto& p : gb.exhausted ? ideal.generators : gb.basis) out.block.basis.push_back(p.to_string(ideal.variables));
  out.exhausted = gb.exhausted;
  if (rhs) {
    auto cmp = groebner::ideals_equal(ideal, *rhs);
    if (cmp.exhausted) {
      out.exhausted = true;
    } else {
      out.equal = cmp.equal;
    }
  }
  return out;
}

BettiTable hh_command(const SpaceDescriptor& space, const std::string& algebra, int max_degree, int max_weight) {
  auto j = parse_json(load_text(algebra));
  int d = 0;
  if (j.contains("group")) {
    auto g = groupschemes::GroupSchemeData::parse(j["group"].get<std::string>());
    if (g.kind() != groupschemes::GroupKind::Additive)
      fail(ErrorKind::UnsupportedCoefficients, "O(" + g.name() + ") has no weight grading");
    d = g.n();
  } else {
    auto kind = j.value("kind", std::string("polynomial"));
    if (kind != "polynomial") fail(ErrorKind::UnsupportedCoefficients, "coefficient ring '" + kind + "' is not supported");
    d = j.value("variables", 1);
  }
  auto x = space.simplicial_set(max_degree + 1);
  if (!x) fail(ErrorKind::IncompatibleRoute, "no simplicial set for " + space.label());
  return simplicial::loday_homology(*x, d, max_degree, max_weight);
}

}  // namespace rephom::cli
