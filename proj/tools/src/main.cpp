#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rephom/cli/capabilities.hpp"
#include "rephom/cli/commands.hpp"
#include "rephom/cli/run.hpp"
#include "rephom/error.hpp"

namespace {

using namespace rephom;
using namespace rephom::cli;

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::CutoffExceeded:
      return 3;
    case ErrorKind::CompositionNonzero:
    case ErrorKind::ActionNotChainMap:
      return 1;
    default:
      return 4;
  }
}

enum class Format { Text, Json, Csv };

Format pick(bool json, bool csv) {
  if (json) return Format::Json;
  return csv ? Format::Csv : Format::Text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rephom: exact representation homology of spaces"};
  app.require_subcommand(1);

  std::string space, group, route = "auto", algebra, presentation, left, right;
  std::optional<std::string> other;
  int degree = 4, weight = 3;
  std::optional<int> weight_opt;
  bool invariants = false, trace = false, rep0 = false, json = false, csv = false;

  auto* hr = app.add_subcommand("hr", "representation homology HR_*(X, G)");
  hr->add_option("space", space, "space descriptor (JSON file or inline JSON)")->required();
  hr->add_option("--group,-g", group, "Ga[:d], Gm[:d], GL:n, SL2, sl2, abelian:d, gl:n or a Lie algebra JSON file")
      ->required();
  hr->add_option("--route,-r", route, "auto, quillen, ce, koszul or simplicial");
  hr->add_option("--degree,-D", degree, "top homological degree");
  hr->add_option("--weight,-W", weight_opt, "top weight for weight-graded tables");
  hr->add_flag("--invariants", invariants, "also compute the G-invariant part");
  hr->add_flag("--trace", trace, "Drinfeld traces of the standard lambda^(2) classes");
  hr->add_flag("--rep0", rep0, "report the degree-0 presentation");

  auto* hh = app.add_subcommand("hh", "higher Hochschild homology along a simplicial set");
  hh->add_option("space", space, "space descriptor")->required();
  hh->add_option("--algebra,-a", algebra, "coefficient algebra JSON")->required();
  hh->add_option("--degree,-D", degree, "top homological degree");
  hh->add_option("--weight,-W", weight, "top weight");

  auto* r0 = app.add_subcommand("rep0", "presentation of the representation scheme");
  r0->add_option("presentation", presentation, "group presentation or space descriptor")->required();
  r0->add_option("--group,-g", group, "group scheme")->required();
  r0->add_option("--check-equal", other, "second presentation, or a space whose model supplies the ideal");

  auto* cmp = app.add_subcommand("compare", "compare two Betti tables (JSON)");
  cmp->add_option("left", left, "table JSON")->required();
  cmp->add_option("right", right, "table JSON")->required();

  auto* caps = app.add_subcommand("capabilities", "print the route capability matrix");

  for (auto* sub : {hr, hh, r0, cmp, caps}) {
    auto* j = sub->add_flag("--json", json, "JSON output");
    auto* c = sub->add_flag("--csv", csv, "CSV output");
    j->excludes(c);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 4;
  }
  Format fmt = pick(json, csv);

  try {
    if (*caps) {
      const auto& c = Capabilities::builtin();
      std::cout << (fmt == Format::Json ? c.to_json() + "\n" : c.to_text());
      return 0;
    }
    if (*hr) {
      ComputationRequest req;
      req.space = SpaceDescriptor::load(space);
      req.group = GroupRef::parse(group);
      req.route = parse_route(route);
      req.max_degree = degree;
      req.max_weight = weight_opt;
      req.invariants = invariants;
      req.trace = trace;
      req.rep0 = rep0;
      auto p = plan(req);
      auto report = run(req, p);
      if (fmt == Format::Json) std::cout << report.to_json();
      else if (fmt == Format::Csv) std::cout << report.to_csv();
      else std::cout << report.to_text();
      return report.exit_code();
    }
    if (*hh) {
      auto table = hh_command(SpaceDescriptor::load(space), algebra, degree, weight);
      if (fmt == Format::Json) std::cout << table.to_json() << '\n';
      else if (fmt == Format::Csv) std::cout << table.to_csv();
      else std::cout << table.to_text();
      return 0;
    }
    if (*r0) {
      auto out = rep0_command(presentation, GroupRef::parse(group), other);
      std::cout << (fmt == Format::Json ? out.to_json() : out.to_text());
      return out.exit_code();
    }
    if (*cmp) {
      RouteTable a{left, "betti", BettiTable::from_json(load_text(left))};
      RouteTable b{right, "betti", BettiTable::from_json(load_text(right))};
      auto c = compare(a, b);
      if (fmt == Format::Json) {
        nlohmann::ordered_json j;
        j["slots"] = c.slots;
        j["agree"] = c.agree();
        j["mismatches"] = c.mismatches.size();
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << (c.agree() ? "agree" : "DISAGREE") << " on " << c.slots - c.mismatches.size() << '/' << c.slots
                  << " slots\n";
        for (const auto& m : c.mismatches) {
          std::cout << "  (" << m.degree;
          if (m.weight) std::cout << ',' << *m.weight;
          std::cout << "): " << m.left << " vs " << m.right << '\n';
        }
      }
      return c.agree() ? 0 : 2;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_for(e);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error [InvalidInput]: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
