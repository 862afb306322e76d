#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rephom/cli/capabilities.hpp"
#include "rephom/cli/descriptor.hpp"
#include "rephom/exactlin/chain.hpp"
#include "rephom/groupschemes/group_scheme.hpp"
#include "rephom/lie/lie_data.hpp"

namespace rephom::cli {

// Target group: a group scheme when one is named, always with its Lie
// algebra. "sl2", "abelian:d" and "gl:n" name the corresponding groups;
// a path to a Lie algebra JSON file gives a Lie algebra without a scheme.
struct GroupRef {
  std::optional<groupschemes::GroupSchemeData> scheme;
  std::optional<lie::LieData> lie;
  std::string label;
  // "Ga", "Gm", "GL", "SL" or "lie".
  std::string group_class() const;
  static GroupRef parse(const std::string& text);
};

struct ComputationRequest {
  SpaceDescriptor space;
  GroupRef group;
  Route route = Route::Auto;
  int max_degree = 4;
  std::optional<int> max_weight;
  bool invariants = false;
  bool trace = false;
  bool rep0 = false;
};

struct ExecutionPlan {
  std::vector<Route> routes;
  bool compare = false;
  bool rep0 = false;
  std::vector<std::string> notes;
};

// Resolves `auto` and validates explicit routes against the capability
// matrix; IncompatibleRoute (with the matrix in the message) otherwise.
ExecutionPlan plan(const ComputationRequest& req, const Capabilities& caps = Capabilities::builtin());
// Reason a route does not apply, or nullopt when it does.
std::optional<std::string> route_rejection(const ComputationRequest& req, Route r, const Capabilities& caps);

struct RouteTable {
  std::string route;
  // "betti" or "invariants".
  std::string quantity;
  BettiTable table;
};

struct SlotMismatch {
  int degree = 0;
  std::optional<int> weight;
  std::size_t left = 0;
  std::size_t right = 0;
};

struct Comparison {
  std::string left;
  std::string right;
  std::string quantity;
  TrustedRange range;
  std::size_t slots = 0;
  std::vector<SlotMismatch> mismatches;
  bool agree() const { return mismatches.empty(); }
};

// Slot-by-slot comparison on the common trusted range. NoOverlap when the
// tables are graded differently or have no common slot.
Comparison compare(const RouteTable& a, const RouteTable& b);

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Rep0Block {
  std::vector<std::string> variables;
  std::vector<std::string> basis;
  bool exhausted = false;
};

struct TraceLine {
  std::string chain;
  int degree = 0;
  bool closed_in_coinvariants = false;
  bool invariant = false;
  bool closed = false;
  bool nonzero_class = false;
  std::string value;
};

struct Report {
  std::string space;
  std::string group;
  std::vector<std::string> routes;
  std::vector<RouteTable> tables;
  std::vector<Comparison> comparisons;
  std::optional<Rep0Block> rep0;
  std::vector<TraceLine> traces;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  bool soft_failure = false;

  // 0 ok, 2 disagreement or failed check, 3 soft exhaustion.
  int exit_code() const;
  std::string to_text() const;
  std::string to_json() const;
  std::string to_csv() const;
};

Report run(const ComputationRequest& req, const ExecutionPlan& plan);

}  // namespace rephom::cli
