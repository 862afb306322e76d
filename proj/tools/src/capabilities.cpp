#include "rephom/cli/capabilities.hpp"

#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "capabilities_data.hpp"
#include "rephom/error.hpp"

namespace rephom::cli {

std::string to_string(Route r) {
  switch (r) {
    case Route::Auto: return "auto";
    case Route::Quillen: return "quillen";
    case Route::CE: return "ce";
    case Route::Koszul: return "koszul";
    case Route::Simplicial: return "simplicial";
  }
  return "?";
}

Route parse_route(const std::string& name) {
  for (Route r : {Route::Auto, Route::Quillen, Route::CE, Route::Koszul, Route::Simplicial})
    if (to_string(r) == name) return r;
  fail(ErrorKind::InvalidInput, "unknown route '" + name + "'");
}

Capabilities Capabilities::parse(const std::string& json_text) {
  auto j = nlohmann::json::parse(json_text);
  Capabilities c;
  for (const auto& r : j.at("routes")) {
    RouteCapability rc;
    rc.route = parse_route(r.at("route").get<std::string>());
    rc.description = r.value("description", std::string());
    rc.spaces = r.at("spaces").get<std::vector<std::string>>();
    rc.groups = r.at("groups").get<std::vector<std::string>>();
    rc.requires_ = r.value("requires", std::vector<std::string>{});
    rc.outputs = r.value("outputs", std::vector<std::string>{});
    rc.homology_groups = r.value("homology_groups", std::vector<std::string>{});
    rc.homology_spaces = r.value("homology_spaces", std::vector<std::string>{});
    c.routes.push_back(std::move(rc));
  }
  for (const auto& a : j.at("auto")) {
    AutoRule rule;
    rule.when = a.at("when").get<std::string>();
    for (const auto& r : a.at("routes")) rule.routes.push_back(parse_route(r.get<std::string>()));
    c.auto_rules.push_back(std::move(rule));
  }
  return c;
}

const Capabilities& Capabilities::builtin() {
  static const Capabilities caps = parse(kCapabilitiesJson);
  return caps;
}

const RouteCapability& Capabilities::of(Route r) const {
  for (const auto& rc : routes)
    if (rc.route == r) return rc;
  fail(ErrorKind::InvalidInput, "route '" + to_string(r) + "' missing from the capability matrix");
}

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s.empty() ? "-" : s;
}

}  // namespace

std::string Capabilities::to_text() const {
  std::ostringstream os;
  os << std::left;
  for (const auto& r : routes) {
    os << to_string(r.route) << ": " << r.description << '\n';
    os << "  " << std::setw(10) << "spaces" << join(r.spaces) << '\n';
    os << "  " << std::setw(10) << "groups" << join(r.groups) << '\n';
    os << "  " << std::setw(10) << "requires" << join(r.requires_) << '\n';
    os << "  " << std::setw(10) << "outputs" << join(r.outputs) << '\n';
    if (!r.homology_groups.empty())
      os << "  exact homology for groups " << join(r.homology_groups) << " on " << join(r.homology_spaces)
         << "; rep0 only otherwise\n";
  }
  os << "auto:\n";
  for (const auto& a : auto_rules) {
    std::vector<std::string> names;
    for (Route r : a.routes) names.push_back(to_string(r));
    os << "  " << std::setw(22) << a.when << join(names) << '\n';
  }
  return os.str();
}

std::string Capabilities::to_json() const { return nlohmann::json::parse(kCapabilitiesJson).dump(2); }

}  // namespace rephom::cli
