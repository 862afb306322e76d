#include <sstream>

#include <nlohmann/json.hpp>

#include "rephom/cli/run.hpp"

namespace rephom::cli {

namespace {

std::string slot(int degree, const std::optional<int>& weight) {
  std::string s = "(" + std::to_string(degree);
  if (weight) s += "," + std::to_string(*weight);
  return s + ")";
}

std::string range_text(const TrustedRange& r) {
  std::string s = "degree <= " + std::to_string(r.degree);
  if (r.weight) s += ", weight <= " + std::to_string(*r.weight);
  return s;
}

nlohmann::ordered_json range_json(const TrustedRange& r) {
  nlohmann::ordered_json j;
  j["degree"] = r.degree;
  j["weight"] = r.weight ? nlohmann::ordered_json(*r.weight) : nlohmann::ordered_json(nullptr);
  return j;
}

}  // namespace

int Report::exit_code() const {
  for (const auto& c : comparisons)
    if (!c.agree()) return 2;
  for (const auto& c : checks)
    if (!c.ok) return 2;
  for (const auto& t : traces)
    if (!t.closed_in_coinvariants || !t.invariant || !t.closed) return 2;
  return soft_failure ? 3 : 0;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "space:  " << space << '\n' << "group:  " << group << '\n' << "routes:";
  for (const auto& r : routes) os << ' ' << r;
  os << '\n';
  for (const auto& t : tables) {
    os << '\n' << '[' << t.route << "] " << t.quantity << " (" << range_text(t.table.trusted()) << ")\n";
    os << t.table.to_text();
    if (!t.table.weighted()) os << "series: " << poincare_series(t.table).to_string() << '\n';
  }
  for (const auto& c : comparisons) {
    os << "\ncompare " << c.left << " vs " << c.right << " (" << c.quantity << ", " << range_text(c.range)
       << "): " << (c.agree() ? "agree" : "DISAGREE") << " on " << c.slots - c.mismatches.size() << '/' << c.slots
       << " slots\n";
    for (const auto& m : c.mismatches)
      os << "  " << slot(m.degree, m.weight) << ": " << m.left << " vs " << m.right << '\n';
  }
  if (rep0) {
    os << "\nrep0 over Q[";
    for (std::size_t i = 0; i < rep0->variables.size(); ++i) os << (i ? ", " : "") << rep0->variables[i];
    os << "]" << (rep0->exhausted ? " (generators; Groebner basis exhausted)" : " (reduced Groebner basis)") << ":\n";
    if (rep0->basis.empty()) os << "  (zero ideal)\n";
    for (const auto& b : rep0->basis) os << "  " << b << '\n';
  }
  for (const auto& t : traces) {
    os << "\ntrace of " << t.chain << " (degree " << t.degree << "): closed in coinvariants "
       << (t.closed_in_coinvariants ? "yes" : "no") << ", invariant " << (t.invariant ? "yes" : "no") << ", closed "
       << (t.closed ? "yes" : "no") << ", nonzero class " << (t.nonzero_class ? "yes" : "no") << '\n';
    os << "  " << t.value << '\n';
  }
  if (!checks.empty()) {
    os << "\nchecks:\n";
    for (const auto& c : checks)
      os << "  " << (c.ok ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
  }
  if (!notes.empty()) {
    os << "\nnotes:\n";
    for (const auto& n : notes) os << "  " << n << '\n';
  }
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["space"] = space;
  j["group"] = group;
  j["routes"] = routes;
  j["tables"] = nlohmann::ordered_json::array();
  for (const auto& t : tables) {
    nlohmann::ordered_json e;
    e["route"] = t.route;
    e["quantity"] = t.quantity;
    e["table"] = nlohmann::ordered_json::parse(t.table.to_json());
    if (!t.table.weighted()) e["series"] = poincare_series(t.table).to_string();
    j["tables"].push_back(e);
  }
  j["comparisons"] = nlohmann::ordered_json::array();
  for (const auto& c : comparisons) {
    nlohmann::ordered_json e;
    e["left"] = c.left;
    e["right"] = c.right;
    e["quantity"] = c.quantity;
    e["range"] = range_json(c.range);
    e["slots"] = c.slots;
    e["agree"] = c.agree();
    e["mismatches"] = nlohmann::ordered_json::array();
    for (const auto& m : c.mismatches) {
      nlohmann::ordered_json x;
      x["degree"] = m.degree;
      x["weight"] = m.weight ? nlohmann::ordered_json(*m.weight) : nlohmann::ordered_json(nullptr);
      x["left"] = m.left;
      x["right"] = m.right;
      e["mismatches"].push_back(x);
    }
    j["comparisons"].push_back(e);
  }
  if (rep0) {
    j["rep0"]["variables"] = rep0->variables;
    j["rep0"]["basis"] = rep0->basis;
    j["rep0"]["exhausted"] = rep0->exhausted;
  }
  j["traces"] = nlohmann::ordered_json::array();
  for (const auto& t : traces) {
    nlohmann::ordered_json e;
    e["chain"] = t.chain;
    e["degree"] = t.degree;
    e["closed_in_coinvariants"] = t.closed_in_coinvariants;
    e["invariant"] = t.invariant;
    e["closed"] = t.closed;
    e["nonzero_class"] = t.nonzero_class;
    e["value"] = t.value;
    j["traces"].push_back(e);
  }
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  j["notes"] = notes;
  j["exit_code"] = exit_code();
  return j.dump(2) + "\n";
}

std::string Report::to_csv() const {
  std::ostringstream os;
  os << "route,quantity,degree,weight,dim\n";
  for (const auto& t : tables)
    for (const auto& [k, v] : t.table.entries()) {
      os << t.route << ',' << t.quantity << ',' << k.degree << ',';
      if (k.weight) os << *k.weight;
      os << ',' << v << '\n';
    }
  return os.str();
}

}  // namespace rephom::cli
