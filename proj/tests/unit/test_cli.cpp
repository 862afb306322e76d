#include <doctest.h>

#include <algorithm>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "rephom/cli/capabilities.hpp"
#include "rephom/cli/commands.hpp"
#include "rephom/cli/descriptor.hpp"
#include "rephom/cli/run.hpp"

using namespace rephom;
using namespace rephom::cli;

namespace {

ComputationRequest request(const std::string& space, const std::string& group, Route route = Route::Auto) {
  ComputationRequest req;
  req.space = SpaceDescriptor::from_json_text(space);
  req.group = GroupRef::parse(group);
  req.route = route;
  return req;
}

bool has(const std::vector<Route>& v, Route r) { return std::find(v.begin(), v.end(), r) != v.end(); }

RouteTable table(const std::string& route, TrustedRange range, std::vector<std::pair<int, std::size_t>> dims) {
  BettiTable t(range);
  for (auto [q, d] : dims) t.set(q, std::nullopt, d);
  return {route, "betti", t};
}

}  // namespace

TEST_CASE("space descriptors") {
  auto cp2 = SpaceDescriptor::from_json_text(R"({"kind":"cp","r":2})");
  CHECK(cp2.simply_connected());
  CHECK(cp2.sullivan_algebra(false).has_value());
  auto w = SpaceDescriptor::from_json_text(R"({"kind":"wedge","of":[{"kind":"sphere","n":2},{"kind":"sphere","n":3}]})");
  CHECK(w.sphere_dims() == std::vector<int>{2, 3});
  auto susp = SpaceDescriptor::from_json_text(
      R"({"kind":"suspension","of":{"kind":"wedge","of":[{"kind":"sphere","n":1},{"kind":"sphere","n":1}]}})");
  CHECK(susp.sphere_dims() == std::vector<int>{2, 2});
  auto torus = SpaceDescriptor::from_json_text(R"({"kind":"torus"})");
  CHECK_FALSE(torus.simply_connected());
  CHECK(torus.fundamental_group().relators.size() == 1);
  auto trefoil = SpaceDescriptor::from_json_text(R"({"kind":"link","strands":2,"braid":[1,1,1]})");
  CHECK(trefoil.reduced_betti() == std::map<int, int>{{1, 1}, {2, 1}});
  CHECK(oracle::error_kind([] { SpaceDescriptor::from_json_text(R"({"kind":"klein"})"); }) == ErrorKind::InvalidInput);
  CHECK(oracle::error_kind([] { SpaceDescriptor::from_json_text("{"); }).has_value());
}

TEST_CASE("group references") {
  CHECK(GroupRef::parse("sl2").group_class() == "SL");
  CHECK(GroupRef::parse("abelian:2").group_class() == "Ga");
  CHECK(GroupRef::parse("Gm").group_class() == "Gm");
  CHECK(GroupRef::parse("gl:2").group_class() == "GL");
  CHECK(GroupRef::parse("gl:2").lie->dim() == 4);
}

TEST_CASE("capability matrix") {
  const auto& caps = Capabilities::builtin();
  CHECK(caps.routes.size() == 4);
  CHECK_FALSE(caps.auto_rules.empty());
  auto again = Capabilities::parse(caps.to_json());
  CHECK(again.to_json() == caps.to_json());
  CHECK(parse_route("koszul") == Route::Koszul);
  CHECK(oracle::error_kind([] { parse_route("magic"); }) == ErrorKind::InvalidInput);
}

TEST_CASE("route planning") {
  auto cp2 = request(R"({"kind":"cp","r":2})", "sl2");
  auto p = plan(cp2);
  CHECK(has(p.routes, Route::Quillen));
  CHECK(has(p.routes, Route::CE));
  CHECK(p.compare);

  auto torus = request(R"({"kind":"torus"})", "GL:2");
  auto pt = plan(torus);
  CHECK(pt.routes == std::vector<Route>{Route::Koszul});
  CHECK(pt.rep0);

  auto bad = request(R"({"kind":"sphere","n":2})", "Gm", Route::Simplicial);
  CHECK(oracle::error_kind([&] { plan(bad); }) == ErrorKind::IncompatibleRoute);
  CHECK(route_rejection(bad, Route::Simplicial, Capabilities::builtin()).has_value());

  auto s2 = request(R"({"kind":"sphere","n":2})", "abelian:1");
  auto ps = plan(s2);
  CHECK(has(ps.routes, Route::Quillen));
  CHECK(has(ps.routes, Route::Simplicial));
}

TEST_CASE("table comparison") {
  auto a = table("quillen", {4, std::nullopt}, {{0, 1}, {3, 1}});
  auto b = table("ce", {6, std::nullopt}, {{0, 1}, {3, 1}, {5, 2}});
  auto c = table("ce", {4, std::nullopt}, {{0, 1}, {3, 2}});
  auto cmp = compare(a, b);
  CHECK(cmp.agree());
  CHECK(cmp.range.degree == 4);
  CHECK(cmp.slots == 5);
  auto bad = compare(a, c);
  REQUIRE(bad.mismatches.size() == 1);
  CHECK(bad.mismatches[0].degree == 3);
  BettiTable weighted(TrustedRange{2, 2});
  RouteTable w{"simplicial", "betti", weighted};
  CHECK(oracle::error_kind([&] { compare(a, w); }) == ErrorKind::NoOverlap);
}

TEST_CASE("reports are deterministic and carry exit codes") {
  auto req = request(R"({"kind":"sphere","n":2})", "sl2");
  req.max_degree = 3;
  auto p = plan(req);
  auto r1 = run(req, p), r2 = run(req, p);
  CHECK(r1.to_json() == r2.to_json());
  CHECK(r1.to_text() == r2.to_text());
  CHECK(r1.exit_code() == 0);
  auto j = nlohmann::json::parse(r1.to_json());
  CHECK(j["exit_code"] == 0);
  REQUIRE_FALSE(r1.tables.empty());
  CHECK(r1.tables[0].table.get(1) == 3);
  CHECK(r1.to_csv().find("quillen") != std::string::npos);
  Report broken = r1;
  broken.checks.push_back({"synthetic", false, ""});
  CHECK(broken.exit_code() == 2);
}

TEST_CASE("degree-0 representation schemes from the command layer") {
  auto out = rep0_command(R"({"generators":["a","b"],"relators":["[a,b]"]})", GroupRef::parse("GL:2"),
                          std::string(R"({"kind":"torus"})"));
  REQUIRE(out.equal.has_value());
  CHECK(*out.equal);
  CHECK(out.exit_code() == 0);
  auto diff = rep0_command(R"({"generators":["a","b"],"relators":["a b a b^-1"]})", GroupRef::parse("GL:2"),
                           std::string(R"({"kind":"torus"})"));
  REQUIRE(diff.equal.has_value());
  CHECK_FALSE(*diff.equal);
  CHECK(diff.exit_code() == 2);
}

TEST_CASE("higher Hochschild homology command") {
  auto s1 = SpaceDescriptor::from_json_text(R"({"kind":"sphere","n":1})");
  auto t = hh_command(s1, R"({"kind":"polynomial","variables":1})", 1, 3);
  for (int w = 0; w <= 3; ++w) {
    CHECK(t.get(0, w) == 1);
    CHECK(t.get(1, w) == (w >= 1 ? 1u : 0u));
  }
  CHECK(oracle::error_kind([&] { hh_command(s1, R"({"group":"Gm"})", 1, 1); }) == ErrorKind::UnsupportedCoefficients);
}
