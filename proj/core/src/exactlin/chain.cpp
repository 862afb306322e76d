#include "rephom/exactlin/chain.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>
#include "rephom/error.hpp"
#include "rephom/exactlin/elimination.hpp"

namespace rephom {

ChainSlice::ChainSlice(int degree, std::optional<int> weight, SparseMatrix m)
    : degree(degree), weight(weight), domain_dim(m.cols()), codomain_dim(m.rows()), matrix(std::move(m)) {}

ChainSlice ChainSlice::zero(int degree, std::optional<int> weight, std::size_t domain, std::size_t codomain) {
  return ChainSlice(degree, weight, SparseMatrix(codomain, domain));
}

std::size_t homology_dimension(const ChainSlice& incoming, const ChainSlice& outgoing) {
  if (incoming.matrix.rows() != incoming.codomain_dim || incoming.matrix.cols() != incoming.domain_dim ||
      outgoing.matrix.rows() != outgoing.codomain_dim || outgoing.matrix.cols() != outgoing.domain_dim) {
    fail(ErrorKind::DimensionMismatch, "slice matrix shape disagrees with recorded dimensions");
  }
  if (incoming.codomain_dim != outgoing.domain_dim) {
    fail(ErrorKind::DimensionMismatch, "incoming codomain " + std::to_string(incoming.codomain_dim) +
                                           " vs outgoing domain " + std::to_string(outgoing.domain_dim));
  }
  if (!(outgoing.matrix * incoming.matrix).is_zero()) {
    fail(ErrorKind::CompositionNonzero, "d∘d ≠ 0 at degree " + std::to_string(incoming.degree));
  }
  std::size_t kernel = outgoing.domain_dim - rank(outgoing.matrix);
  return kernel - rank(incoming.matrix);
}

BettiTable::BettiTable(TrustedRange trusted) : trusted_(trusted) {}

bool BettiTable::in_range(int degree, std::optional<int> weight) const {
  if (degree > trusted_.degree) return false;
  if (trusted_.weight.has_value() != weight.has_value()) return false;
  if (weight && (*weight < 0 || *weight > *trusted_.weight)) return false;
  return true;
}

void BettiTable::set(int degree, std::optional<int> weight, std::size_t dim) {
  if (!in_range(degree, weight)) {
    fail(ErrorKind::InvalidInput, "slot (" + std::to_string(degree) + ") outside trusted range");
  }
  entries_[{degree, weight}] = dim;
}

std::size_t BettiTable::get(int degree, std::optional<int> weight) const {
  auto it = entries_.find({degree, weight});
  return it == entries_.end() ? 0 : it->second;
}

BettiTable BettiTable::restricted(TrustedRange range) const {
  BettiTable out(range);
  for (const auto& [k, v] : entries_) {
    if (out.in_range(k.degree, k.weight)) out.entries_[k] = v;
  }
  return out;
}

std::string BettiTable::to_json() const {
  nlohmann::ordered_json j;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& [k, v] : entries_) {
    nlohmann::ordered_json e;
    e["degree"] = k.degree;
    e["weight"] = k.weight ? nlohmann::ordered_json(*k.weight) : nlohmann::ordered_json(nullptr);
    e["dim"] = v;
    j["entries"].push_back(e);
  }
  j["trusted"]["degree"] = trusted_.degree;
  j["trusted"]["weight"] =
      trusted_.weight ? nlohmann::ordered_json(*trusted_.weight) : nlohmann::ordered_json(nullptr);
  return j.dump();
}

BettiTable BettiTable::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  TrustedRange t;
  t.degree = j.at("trusted").at("degree").get<int>();
  if (!j.at("trusted").at("weight").is_null()) t.weight = j.at("trusted").at("weight").get<int>();
  BettiTable out(t);
  for (const auto& e : j.at("entries")) {
    std::optional<int> w;
    if (!e.at("weight").is_null()) w = e.at("weight").get<int>();
    out.set(e.at("degree").get<int>(), w, e.at("dim").get<std::size_t>());
  }
  return out;
}

std::string BettiTable::to_csv() const {
  std::ostringstream os;
  os << "degree,weight,dim\n";
  for (const auto& [k, v] : entries_) {
    os << k.degree << ',';
    if (k.weight) os << *k.weight;
    os << ',' << v << '\n';
  }
  return os.str();
}

std::string BettiTable::to_text() const {
  std::ostringstream os;
  if (!weighted()) {
    os << std::setw(8) << "degree" << std::setw(10) << "dim" << '\n';
    for (int d = 0; d <= trusted_.degree; ++d) {
      os << std::setw(8) << d << std::setw(10) << get(d) << '\n';
    }
    return os.str();
  }
  int wmax = *trusted_.weight;
  os << std::setw(8) << "deg\\wt";
  for (int w = 0; w <= wmax; ++w) os << std::setw(6) << w;
  os << '\n';
  for (int d = 0; d <= trusted_.degree; ++d) {
    os << std::setw(8) << d;
    for (int w = 0; w <= wmax; ++w) os << std::setw(6) << get(d, w);
    os << '\n';
  }
  return os.str();
}

PoincareSeries series_from_coefficients(std::map<int, std::size_t> coefficients, int trusted_degree) {
  PoincareSeries s;
  for (auto& [d, c] : coefficients) {
    if (c != 0 && d <= trusted_degree) s.coefficients[d] = c;
  }
  s.trusted_degree = trusted_degree;
  return s;
}

PoincareSeries poincare_series(const BettiTable& table) {
  PoincareSeries s;
  s.trusted_degree = table.trusted().degree;
  for (const auto& [k, v] : table.entries()) {
    if (v == 0) continue;
    s.coefficients[k.degree] += v;
    if (k.weight) s.bigraded[{k.degree, *k.weight}] += v;
  }
  return s;
}

namespace {
std::string power(const char* var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}
}  // namespace

std::string PoincareSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](std::size_t c, const std::string& mono) {
    if (!first) os << " + ";
    first = false;
    if (mono.empty()) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << mono;
    }
  };
  if (!bigraded.empty()) {
    for (const auto& [k, c] : bigraded) {
      std::string mono = power("t", k.first);
      std::string ws = power("s", k.second);
      term(c, mono + (mono.empty() || ws.empty() ? "" : "*") + ws);
    }
  } else {
    for (const auto& [d, c] : coefficients) term(c, power("t", d));
  }
  if (first) os << "0";
  os << " + O(t^" << trusted_degree + 1 << ")";
  return os.str();
}

}  // namespace rephom
