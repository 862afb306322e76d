#include "rephom/gca/parse.hpp"

#include <cctype>

#include <nlohmann/json.hpp>
#include "rephom/error.hpp"

namespace rephom::gca {

namespace {

class Parser {
 public:
  Parser(const AlgebraPtr& alg, const std::string& text) : alg_(alg), s_(text) {}

  AlgebraElement parse() {
    AlgebraElement e = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::InvalidInput, msg + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected digits");
    return s_.substr(start, pos_ - start);
  }

  AlgebraElement expr() {
    AlgebraElement e = term();
    for (;;) {
      if (accept('+')) {
        e += term();
      } else if (accept('-')) {
        e -= term();
      } else {
        return e;
      }
    }
  }

  AlgebraElement term() {
    AlgebraElement e = factor();
    while (accept('*')) e = e * factor();
    return e;
  }

  AlgebraElement factor() {
    if (accept('-')) return -factor();
    AlgebraElement a = atom();
    if (accept('^')) {
      bool neg = accept('-');
      int e = std::stoi(digits());
      a = power(a, neg ? -e : e);
    }
    return a;
  }

  AlgebraElement atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      AlgebraElement e = expr();
      if (!accept(')')) error("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit = digits();
      if (accept('/')) lit += "/" + digits();
      return alg_->constant(parse_rational(lit));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                                  s_[pos_] == '.' || s_[pos_] == '\'')) {
        ++pos_;
      }
      std::string name = s_.substr(start, pos_ - start);
      auto i = alg_->index_of(name);
      if (!i) error("unknown generator '" + name + "'");
      return alg_->gen(*i);
    }
    error(std::string("unexpected character '") + c + "'");
  }

  const AlgebraPtr& alg_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraElement parse_expression(const AlgebraPtr& alg, const std::string& text) { return Parser(alg, text).parse(); }

DgaPresentation dga_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  try {
    std::vector<Generator> gens;
    for (const auto& g : j.at("generators")) {
      Generator gen;
      gen.name = g.at("name").get<std::string>();
      gen.degree = g.at("degree").get<int>();
      if (g.contains("weight") && !g.at("weight").is_null()) gen.weight = g.at("weight").get<int>();
      gens.push_back(std::move(gen));
    }
    std::vector<std::string> inv;
    if (j.contains("invertible")) inv = j.at("invertible").get<std::vector<std::string>>();
    auto alg = GradedCommAlgebra::create(std::move(gens), std::move(inv));
    AlgebraPtr cptr = alg;
    if (j.contains("relations")) {
      std::vector<AlgebraElement> rels;
      for (const auto& r : j.at("relations")) rels.push_back(parse_expression(cptr, r.get<std::string>()));
      alg->set_relations(rels);
    }
    Derivation d(cptr);
    if (j.contains("differential")) {
      for (const auto& [name, expr] : j.at("differential").items()) {
        d.set_image(name, parse_expression(cptr, expr.get<std::string>()));
      }
    }
    return {cptr, d};
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("bad algebra descriptor: ") + e.what());
  }
}

std::string dga_to_json(const Derivation& d) {
  const auto& alg = *d.algebra();
  nlohmann::ordered_json j;
  j["generators"] = nlohmann::ordered_json::array();
  std::vector<std::string> inv;
  for (std::size_t i = 0; i < alg.size(); ++i) {
    const auto& g = alg.generator(i);
    nlohmann::ordered_json gj;
    gj["name"] = g.name;
    gj["degree"] = g.degree;
    if (g.weight) gj["weight"] = *g.weight;
    j["generators"].push_back(gj);
    if (alg.invertible(i)) inv.push_back(g.name);
  }
  j["invertible"] = inv;
  auto rels = alg.relations();
  if (!rels.empty()) {
    j["relations"] = nlohmann::ordered_json::array();
    for (const auto& r : rels) j["relations"].push_back(r.to_string());
  }
  j["differential"] = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < alg.size(); ++i) {
    if (!d.image(i).is_zero()) j["differential"][alg.generator(i).name] = d.image(i).to_string();
  }
  return j.dump(2);
}

}  // namespace rephom::gca
