#pragma once

#include <optional>
#include <string>
#include <vector>

namespace rephom::cli {

enum class Route { Auto, Quillen, CE, Koszul, Simplicial };

std::string to_string(Route r);
// "auto", "quillen", "ce", "koszul", "simplicial".
Route parse_route(const std::string& name);

struct RouteCapability {
  Route route = Route::Auto;
  std::string description;
  std::vector<std::string> spaces;
  std::vector<std::string> groups;
  std::vector<std::string> requires_;
  std::vector<std::string> outputs;
  // Koszul route: where exact homology (beyond degree 0) is available.
  std::vector<std::string> homology_groups;
  std::vector<std::string> homology_spaces;
};

struct AutoRule {
  std::string when;
  std::vector<Route> routes;
};

// Route capability matrix, shipped as data/capabilities.json and compiled
// into the tool.
struct Capabilities {
  std::vector<RouteCapability> routes;
  std::vector<AutoRule> auto_rules;

  static const Capabilities& builtin();
  static Capabilities parse(const std::string& json_text);
  const RouteCapability& of(Route r) const;
  std::string to_text() const;
  std::string to_json() const;
};

}  // namespace rephom::cli
