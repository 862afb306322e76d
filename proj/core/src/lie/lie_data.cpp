#include "rephom/lie/lie_data.hpp"

#include <nlohmann/json.hpp>
#include "rephom/error.hpp"

namespace rephom::lie {

LieData LieData::create(std::vector<std::string> names, const std::vector<StructureConstant>& brackets,
                        std::optional<std::vector<std::vector<Rational>>> form,
                        std::optional<ReductiveInfo> reductive) {
  LieData g;
  g.names_ = std::move(names);
  const std::size_t d = g.names_.size();
  g.c_.assign(d * d * d, Rational(0));
  std::vector<bool> seen(d * d * d, false);
  for (const auto& s : brackets) {
    if (s.i >= d || s.j >= d || s.k >= d) fail(ErrorKind::InvalidInput, "structure constant index out of range");
    if (s.i == s.j) {
      if (sgn(s.value) != 0) fail(ErrorKind::InvalidInput, "[x,x] must vanish");
      continue;
    }
    std::size_t a = (s.i * d + s.j) * d + s.k;
    std::size_t b = (s.j * d + s.i) * d + s.k;
    if ((seen[a] && g.c_[a] != s.value) || (seen[b] && g.c_[b] != -s.value)) {
      fail(ErrorKind::InvalidInput, "inconsistent structure constants");
    }
    g.c_[a] = s.value;
    g.c_[b] = -s.value;
    seen[a] = seen[b] = true;
  }
  g.sparse_.assign(d * d, {});
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        if (sgn(g.c(i, j, k)) != 0) g.sparse_[i * d + j].emplace_back(k, g.c(i, j, k));
      }
    }
  }
  // Jacobi: [x_i,[x_j,x_l]] + [x_j,[x_l,x_i]] + [x_l,[x_i,x_j]] = 0.
  auto nested = [&](std::size_t a, std::size_t b, std::size_t c, std::vector<Rational>& acc) {
    for (const auto& [m, x] : g.bracket_of(b, c)) {
      for (const auto& [k, y] : g.bracket_of(a, m)) acc[k] += x * y;
    }
  };
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (std::size_t l = j + 1; l < d; ++l) {
        std::vector<Rational> acc(d);
        nested(i, j, l, acc);
        nested(j, l, i, acc);
        nested(l, i, j, acc);
        for (const auto& x : acc) {
          if (sgn(x) != 0) {
            fail(ErrorKind::InvalidInput, "Jacobi identity fails on " + g.names_[i] + "," + g.names_[j] + "," +
                                              g.names_[l]);
          }
        }
      }
    }
  }
  if (form) {
    if (form->size() != d) fail(ErrorKind::InvalidInput, "form size");
    for (const auto& row : *form) {
      if (row.size() != d) fail(ErrorKind::InvalidInput, "form size");
    }
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if ((*form)[i][j] != (*form)[j][i]) fail(ErrorKind::InvalidInput, "form is not symmetric");
      }
    }
    // B([x_a, x_b], x_c) + B(x_b, [x_a, x_c]) = 0
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        for (std::size_t c = 0; c < d; ++c) {
          Rational s = 0;
          for (const auto& [k, x] : g.bracket_of(a, b)) s += x * (*form)[k][c];
          for (const auto& [k, x] : g.bracket_of(a, c)) s += x * (*form)[b][k];
          if (sgn(s) != 0) fail(ErrorKind::InvalidInput, "form is not ad-invariant");
        }
      }
    }
  }
  g.form_ = std::move(form);
  g.reductive_ = std::move(reductive);
  return g;
}

std::vector<Rational> LieData::bracket(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  const std::size_t d = dim();
  std::vector<Rational> out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(y[j]) == 0) continue;
      for (const auto& [k, c] : bracket_of(i, j)) out[k] += c * x[i] * y[j];
    }
  }
  return out;
}

bool LieData::is_abelian() const {
  for (const auto& s : sparse_) {
    if (!s.empty()) return false;
  }
  return true;
}

LieData LieData::abelian(std::size_t d) {
  std::vector<std::string> names;
  std::vector<std::vector<Rational>> form(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i) {
    names.push_back("a" + std::to_string(i + 1));
    form[i][i] = 1;
  }
  LieData g = create(names, {}, form, ReductiveInfo{static_cast<int>(d), std::vector<int>(d, 0)});
  g.label_ = "abelian:" + std::to_string(d);
  return g;
}

LieData LieData::sl2() {
  // Basis e, h, f; form is the trace form of the defining representation.
  std::vector<StructureConstant> br = {
      {1, 0, 0, Rational(2)},   // [h,e] = 2e
      {1, 2, 2, Rational(-2)},  // [h,f] = -2f
      {0, 2, 1, Rational(1)},   // [e,f] = h
  };
  std::vector<std::vector<Rational>> form = {{0, 0, 1}, {0, 2, 0}, {1, 0, 0}};
  LieData g = create({"e", "h", "f"}, br, form, ReductiveInfo{1, {1}});
  g.label_ = "sl2";
  return g;
}

LieData LieData::gl(std::size_t n) {
  if (n < 1 || n > 3) fail(ErrorKind::InvalidInput, "gl(n) built in for 1 <= n <= 3");
  auto idx = [n](std::size_t a, std::size_t b) { return a * n + b; };
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) names.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
  }
  std::vector<StructureConstant> br;
  // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          if (idx(a, b) >= idx(c, d)) continue;
          std::vector<Rational> v(n * n);
          if (b == c) v[idx(a, d)] += 1;
          if (d == a) v[idx(c, b)] -= 1;
          for (std::size_t k = 0; k < n * n; ++k) {
            if (sgn(v[k]) != 0) br.push_back({idx(a, b), idx(c, d), k, v[k]});
          }
        }
      }
    }
  }
  std::vector<std::vector<Rational>> form(n * n, std::vector<Rational>(n * n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) form[idx(a, b)][idx(b, a)] = 1;
  }
  std::vector<int> exps;
  for (std::size_t i = 0; i < n; ++i) exps.push_back(static_cast<int>(i));
  LieData g = create(names, br, form, ReductiveInfo{static_cast<int>(n), exps});
  g.label_ = "gl:" + std::to_string(n);
  return g;
}

LieData LieData::builtin(const std::string& name) {
  if (name == "sl2" || name == "sl:2") return sl2();
  auto colon = name.find(':');
  std::string head = name.substr(0, colon);
  std::size_t n = 1;
  if (colon != std::string::npos) {
    try {
      n = std::stoul(name.substr(colon + 1));
    } catch (...) {
      fail(ErrorKind::InvalidInput, "bad Lie algebra name " + name);
    }
  }
  if (head == "abelian") return abelian(n);
  if (head == "gl") return gl(n);
  fail(ErrorKind::InvalidInput, "unknown built-in Lie algebra '" + name + "'");
}

namespace {
Rational json_rational(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  fail(ErrorKind::InvalidInput, "rational must be an integer or a string like \"1/2\"");
}

std::size_t json_index(const nlohmann::json& v, const std::vector<std::string>& names) {
  if (v.is_number_unsigned() || v.is_number_integer()) return v.get<std::size_t>();
  std::string s = v.get<std::string>();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == s) return i;
  }
  fail(ErrorKind::InvalidInput, "unknown basis element " + s);
}
}  // namespace

LieData LieData::from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    if (j.contains("lie")) j = j.at("lie");
    if (j.contains("builtin")) return builtin(j.at("builtin").get<std::string>());
    auto names = j.at("names").get<std::vector<std::string>>();
    std::vector<StructureConstant> br;
    if (j.contains("brackets")) {
      for (const auto& t : j.at("brackets")) {
        br.push_back({json_index(t.at(0), names), json_index(t.at(1), names), json_index(t.at(2), names),
                      json_rational(t.at(3))});
      }
    }
    std::optional<std::vector<std::vector<Rational>>> form;
    if (j.contains("form")) {
      form.emplace();
      for (const auto& row : j.at("form")) {
        std::vector<Rational> r;
        for (const auto& x : row) r.push_back(json_rational(x));
        form->push_back(std::move(r));
      }
    }
    std::optional<ReductiveInfo> red;
    if (j.contains("reductive")) {
      red = ReductiveInfo{j.at("reductive").at("rank").get<int>(),
                          j.at("reductive").at("exponents").get<std::vector<int>>()};
    }
    LieData g = create(names, br, form, red);
    g.label_ = j.value("label", std::string("custom"));
    return g;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("bad Lie algebra descriptor: ") + e.what());
  }
}

std::string LieData::to_json() const {
  nlohmann::ordered_json j;
  j["label"] = label_;
  j["names"] = names_;
  j["brackets"] = nlohmann::ordered_json::array();
  for (std::size_t a = 0; a < dim(); ++a) {
    for (std::size_t b = a + 1; b < dim(); ++b) {
      for (const auto& [k, x] : bracket_of(a, b)) {
        j["brackets"].push_back({names_[a], names_[b], names_[k], x.get_str()});
      }
    }
  }
  if (form_) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : *form_) {
      auto row = nlohmann::ordered_json::array();
      for (const auto& x : r) row.push_back(x.get_str());
      rows.push_back(row);
    }
    j["form"] = rows;
  }
  if (reductive_) j["reductive"] = {{"rank", reductive_->rank}, {"exponents", reductive_->exponents}};
  return j.dump();
}

}  // namespace rephom::lie
