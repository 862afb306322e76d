#include "rephom/cli/run.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "rephom/error.hpp"
#include "rephom/gca/subcomplex.hpp"
#include "rephom/groebner/buchberger.hpp"
#include "rephom/groupschemes/models.hpp"
#include "rephom/lie/current_lie.hpp"
#include "rephom/repmodel/invariants.hpp"
#include "rephom/repmodel/rep_complex.hpp"
#include "rephom/repmodel/trace.hpp"
#include "rephom/simplicial/pipeline.hpp"

namespace rephom::cli {

using groupschemes::GroupKind;
using groupschemes::GroupSchemeData;

namespace {

constexpr int kDefaultWeight = 3;

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string GroupRef::group_class() const {
  if (!scheme) return "lie";
  switch (scheme->kind()) {
    case GroupKind::Additive: return "Ga";
    case GroupKind::Torus: return "Gm";
    case GroupKind::GL: return "GL";
    case GroupKind::SL: return "SL";
  }
  return "lie";
}

GroupRef GroupRef::parse(const std::string& text) {
  GroupRef g;
  std::string scheme_name = text;
  if (text == "sl2") scheme_name = "SL:2";
  if (text.rfind("abelian:", 0) == 0) scheme_name = "Ga:" + text.substr(8);
  if (text.rfind("gl:", 0) == 0) scheme_name = "GL:" + text.substr(3);
  if (std::filesystem::is_regular_file(text)) {
    g.lie = lie::LieData::from_json(read_file(text));
    g.label = g.lie->name().empty() ? text : g.lie->name();
    return g;
  }
  g.scheme = GroupSchemeData::parse(scheme_name);
  g.label = g.scheme->name();
  try {
    g.lie = g.scheme->lie_algebra();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnsupportedGroup) throw;
  }
  return g;
}

std::optional<std::string> route_rejection(const ComputationRequest& req, Route r, const Capabilities& caps) {
  const auto& cap = caps.of(r);
  const auto& space = req.space;
  std::string kind = space.kind_name();
  std::string cls = req.group.group_class();
  auto name = to_string(r);
  if (!contains(cap.spaces, kind)) return name + " does not handle spaces of kind '" + kind + "'";
  if (!contains(cap.groups, cls)) return name + " does not handle groups of class '" + cls + "'";
  for (const auto& cond : cap.requires_) {
    if (cond == "simply_connected" && !space.simply_connected())
      return name + " needs a simply connected space; " + space.label() + " is not";
    if (cond == "finite_sullivan" && !space.sullivan_algebra(false))
      return name + " needs a known finite cohomology algebra for " + space.label();
    if (cond == "reduced") {
      std::optional<simplicial::FiniteSimplicialSet> x;
      try {
        x = space.simplicial_set(1);
      } catch (const Error&) {
        x.reset();
      }
      if (!x) return name + " has no simplicial set for " + space.label();
      if (!x->reduced()) return name + " needs a reduced simplicial set; " + space.label() + " has several vertices";
    }
  }
  if ((r == Route::Quillen || r == Route::CE) && !req.group.lie)
    return name + " needs the Lie algebra of " + req.group.label;
  // Under auto a route that lacks an output still contributes the others.
  if (req.route != Route::Auto) {
    if (req.invariants && !contains(cap.outputs, "invariants")) return name + " cannot compute invariants";
    if (req.trace && !contains(cap.outputs, "trace")) return name + " cannot compute Drinfeld traces";
  }
  return std::nullopt;
}

ExecutionPlan plan(const ComputationRequest& req, const Capabilities& caps) {
  ExecutionPlan p;
  auto incompatible = [&](const std::string& why) {
    fail(ErrorKind::IncompatibleRoute, why + "\n\ncapability matrix:\n" + caps.to_text());
  };
  if (req.route != Route::Auto) {
    if (auto why = route_rejection(req, req.route, caps)) incompatible(*why);
    p.routes.push_back(req.route);
  } else {
    const auto& s = req.space;
    for (const auto& rule : caps.auto_rules) {
      bool applies = false;
      if (rule.when == "simply_connected") applies = s.simply_connected();
      else if (rule.when == "finite_sullivan_cp") applies = s.kind == SpaceKind::CP;
      else if (rule.when == "koszul_space") applies = contains(caps.of(Route::Koszul).spaces, s.kind_name());
      else if (rule.when == "simplicial_additive") applies = req.group.group_class() == "Ga";
      if (!applies) continue;
      for (Route r : rule.routes) {
        if (std::find(p.routes.begin(), p.routes.end(), r) != p.routes.end()) continue;
        if (auto why = route_rejection(req, r, caps)) {
          p.notes.push_back("auto: skipped " + *why);
        } else {
          p.routes.push_back(r);
        }
      }
    }
    if (p.routes.empty()) incompatible("no route applies to " + s.label() + " with " + req.group.label);
  }
  p.compare = p.routes.size() >= 2;
  if (std::find(p.routes.begin(), p.routes.end(), Route::Koszul) != p.routes.end()) {
    const auto& cap = caps.of(Route::Koszul);
    bool exact = contains(cap.homology_groups, req.group.group_class()) &&
                 contains(cap.homology_spaces, req.space.kind_name());
    p.rep0 = req.rep0 || !exact;
    if (!exact) p.notes.push_back("koszul: exact homology is not available here; reporting the degree-0 presentation");
  } else {
    p.rep0 = req.rep0;
  }
  return p;
}

Comparison compare(const RouteTable& a, const RouteTable& b) {
  if (a.table.weighted() != b.table.weighted())
    fail(ErrorKind::NoOverlap, "cannot compare a weighted table with an unweighted one");
  Comparison c;
  c.left = a.route;
  c.right = b.route;
  c.quantity = a.quantity;
  c.range.degree = std::min(a.table.trusted().degree, b.table.trusted().degree);
  if (a.table.weighted()) c.range.weight = std::min(*a.table.trusted().weight, *b.table.trusted().weight);
  int lowest = 0;
  for (const auto* t : {&a.table, &b.table})
    if (!t->entries().empty()) lowest = std::min(lowest, t->entries().begin()->first.degree);
  if (c.range.degree < lowest || (c.range.weight && *c.range.weight < 0))
    fail(ErrorKind::NoOverlap, "tables have no common trusted slot");
  std::vector<std::optional<int>> weights;
  if (c.range.weight) {
    for (int w = 0; w <= *c.range.weight; ++w) weights.push_back(w);
  } else {
    weights.push_back(std::nullopt);
  }
  for (int d = lowest; d <= c.range.degree; ++d)
    for (const auto& w : weights) {
      ++c.slots;
      std::size_t x = a.table.get(d, w), y = b.table.get(d, w);
      if (x != y) c.mismatches.push_back({d, w, x, y});
    }
  return c;
}

namespace {

void add_check(Report& r, std::string name, bool ok, std::string detail = {}) {
  r.checks.push_back({std::move(name), ok, std::move(detail)});
}

void run_quillen(const ComputationRequest& req, Report& rep) {
  const auto& g = *req.group.lie;
  auto L = std::make_shared<lie::FreeGradedLie>(req.space.quillen_model(0));
  add_check(rep, "quillen: d^2 = 0 on the Lie model", L->d_squared_zero());
  repmodel::RepComplex rc(L, g);
  auto dg = repmodel::check_dg_lie_map(rc);
  add_check(rep, "quillen: universal representation is a DG Lie map", !dg, dg.value_or(""));
  rep.tables.push_back({"quillen", "betti", repmodel::homology_table(rc, req.max_degree)});
  if (rc.weighted())
    rep.tables.push_back({"quillen", "betti",
                          repmodel::homology_table(rc, req.max_degree, req.max_weight.value_or(kDefaultWeight))});
  if (req.invariants) {
    repmodel::AdjointAction act(rc);
    add_check(rep, "quillen: adjoint action commutes with d", act.commutes_with_differential());
    rep.tables.push_back({"quillen", "invariants", repmodel::invariant_homology_table(rc, req.max_degree)});
  }
  if (!req.trace) return;
  if (req.space.kind != SpaceKind::CP) {
    rep.notes.push_back("trace: canonical lambda^(2) classes are provided for CP^r models only");
    return;
  }
  if (!g.has_form()) {
    rep.notes.push_back("trace: " + g.name() + " carries no invariant form");
    return;
  }
  int r = req.space.n;
  auto L2 = std::make_shared<lie::FreeGradedLie>(lie::cp_model(r, std::max(7, 2 * r - 1)));
  repmodel::RepComplex rc2(L2, g);
  repmodel::SymSquare sym(*L2);
  auto v1 = L2->generator(0), v2 = L2->generator(1);
  auto v12 = L2->bracket(v1, v2);
  for (const auto& chain : {sym.product(v1, v12), sym.product(v2, v12)}) {
    TraceLine line;
    line.chain = sym.format(chain);
    line.degree = sym.degree(chain).value_or(0);
    line.closed_in_coinvariants = sym.closed_in_coinvariants(chain);
    auto tr = repmodel::drinfeld_trace_quadratic(rc2, chain);
    line.invariant = tr.invariant;
    line.closed = tr.closed;
    line.nonzero_class = !tr.value.is_zero() && !gca::is_boundary(rc2.d(), tr.value);
    line.value = tr.value.to_string();
    rep.traces.push_back(std::move(line));
  }
}

void run_ce(const ComputationRequest& req, Report& rep) {
  const auto& g = *req.group.lie;
  gca::HomologyRequest hr;
  hr.min_degree = 0;
  hr.max_degree = req.max_degree;
  {
    lie::CurrentLie cl(g, *req.space.sullivan_algebra(false));
    auto ce = lie::ce_complex(cl);
    std::string witness;
    add_check(rep, "ce: d^2 = 0", lie::ce_d_squared_zero(ce, &witness), witness);
    if (ce.algebra->weighted()) hr.max_weight = req.max_weight.value_or(kDefaultWeight);
    rep.tables.push_back({"ce", "betti", gca::homology_table(ce.d, hr)});
  }
  if (req.invariants) {
    lie::CurrentLie cl(g, *req.space.sullivan_algebra(true));
    auto ce = lie::ce_relative(cl);
    rep.tables.push_back({"ce", "invariants", gca::homology_table(ce.d, hr, ce.constraints())});
  }
}

Rep0Block rep0_block(const groebner::PolyIdeal& ideal, Report& rep) {
  Rep0Block b;
  b.variables = ideal.variables;
  auto gb = groebner::groebner_basis(ideal);
  b.exhausted = gb.exhausted;
  if (gb.exhausted) {
    rep.soft_failure = true;
    rep.notes.push_back("rep0: Groebner basis computation exhausted its effort budget");
    for (const auto& p : ideal.generators) b.basis.push_back(p.to_string(ideal.variables));
  } else {
    for (const auto& p : gb.basis) b.basis.push_back(p.to_string(ideal.variables));
  }
  return b;
}

void run_koszul(const ComputationRequest& req, const ExecutionPlan& plan, Report& rep) {
  const auto& G = *req.group.scheme;
  auto model = req.space.koszul_model(G);
  if (!model) {
    auto pi = req.space.fundamental_group();
    rep.notes.push_back("koszul: no DG model for " + req.space.label() + "; degree 0 only");
    rep.rep0 = rep0_block(groupschemes::rep0_presentation(G, pi.generators.size(), pi.relators), rep);
    return;
  }
  for (const auto& n : model->notes) rep.notes.push_back("koszul: " + n);
  gca::DSquaredOptions opt;
  opt.max_degree = 2;
  opt.max_weight = 2;
  opt.cutoffs.aux_poly_degree = 2;
  auto dd = gca::check_d_squared(model->d, opt);
  add_check(rep, "koszul: d^2 = 0", dd.ok, dd.witness);
  const auto& cap = Capabilities::builtin().of(Route::Koszul);
  if (contains(cap.homology_groups, req.group.group_class()) && contains(cap.homology_spaces, req.space.kind_name())) {
    try {
      rep.tables.push_back(
          {"koszul", "betti",
           groupschemes::model_homology(*model, req.max_degree, req.max_weight.value_or(kDefaultWeight))});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnsupportedForExactHomology) throw;
      rep.notes.push_back(std::string("koszul: ") + e.what());
      if (!rep.rep0) rep.rep0 = rep0_block(groupschemes::model_degree0_ideal(*model), rep);
    }
  }
  if (plan.rep0) rep.rep0 = rep0_block(groupschemes::model_degree0_ideal(*model), rep);
}

void run_simplicial(const ComputationRequest& req, Report& rep) {
  int W = req.max_weight.value_or(kDefaultWeight);
  auto x = *req.space.simplicial_set(req.max_degree + 2);
  auto ids = x.check_identities(static_cast<std::size_t>(std::min(req.max_degree + 2, 4)));
  add_check(rep, "simplicial: simplicial identities", !ids, ids.value_or(""));
  auto loops = simplicial::kan_loop_group(x, static_cast<std::size_t>(req.max_degree) + 1);
  auto gids = loops.check_identities();
  add_check(rep, "simplicial: loop group identities", !gids, gids.value_or(""));
  auto levels = simplicial::additive_rep_levelwise(loops, req.group.scheme->n(), W);
  auto table = simplicial::normalized_homology(levels, simplicial::Normalization::KernelIntersection);
  auto quotient = simplicial::normalized_homology(levels, simplicial::Normalization::DegenerateQuotient);
  add_check(rep, "simplicial: N and N-bar give equal homology", table == quotient);
  rep.tables.push_back({"simplicial", "betti", std::move(table)});
}

}  // namespace

Report run(const ComputationRequest& req, const ExecutionPlan& plan) {
  Report rep;
  rep.space = req.space.label();
  rep.group = req.group.label;
  rep.notes = plan.notes;
  for (Route r : plan.routes) {
    rep.routes.push_back(to_string(r));
    try {
      switch (r) {
        case Route::Quillen: run_quillen(req, rep); break;
        case Route::CE: run_ce(req, rep); break;
        case Route::Koszul: run_koszul(req, plan, rep); break;
        case Route::Simplicial: run_simplicial(req, rep); break;
        case Route::Auto: break;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CutoffExceeded) throw;
      rep.soft_failure = true;
      rep.notes.push_back(to_string(r) + ": " + e.what());
    }
  }
  if (plan.rep0 && !rep.rep0) {
    auto pi = req.space.fundamental_group();
    if (req.group.scheme)
      rep.rep0 = rep0_block(groupschemes::rep0_presentation(*req.group.scheme, pi.generators.size(), pi.relators), rep);
  }
  if (plan.compare)
    for (std::size_t i = 0; i < rep.tables.size(); ++i)
      for (std::size_t j = i + 1; j < rep.tables.size(); ++j) {
        const auto& a = rep.tables[i];
        const auto& b = rep.tables[j];
        if (a.route == b.route || a.quantity != b.quantity || a.table.weighted() != b.table.weighted()) continue;
        rep.comparisons.push_back(compare(a, b));
      }
  return rep;
}

}  // namespace rephom::cli
