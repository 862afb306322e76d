#include "rephom/lie/free_lie.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "rephom/error.hpp"
#include "rephom/exactlin/elimination.hpp"

namespace rephom::lie {

void TensorElement::add(const Word& w, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [w, c] : o.terms) add(w, c);
  return *this;
}

TensorElement TensorElement::scaled(const Rational& c) const {
  TensorElement out;
  if (sgn(c) == 0) return out;
  out.terms = terms;
  for (auto& [w, x] : out.terms) x *= c;
  return out;
}

std::shared_ptr<const BracketTree> BracketTree::leaf(int g) {
  auto t = std::make_shared<BracketTree>();
  t->generator = g;
  return t;
}

std::shared_ptr<const BracketTree> BracketTree::node(std::shared_ptr<const BracketTree> l,
                                                     std::shared_ptr<const BracketTree> r) {
  auto t = std::make_shared<BracketTree>();
  t->left = std::move(l);
  t->right = std::move(r);
  return t;
}

void LieElement::add(std::size_t id, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = coeffs.try_emplace(id, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) coeffs.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& o) {
  for (const auto& [i, c] : o.coeffs) add(i, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  for (const auto& [i, c] : o.coeffs) add(i, -c);
  return *this;
}

LieElement operator*(const Rational& c, const LieElement& a) {
  LieElement out;
  for (const auto& [i, x] : a.coeffs) out.add(i, c * x);
  return out;
}

namespace {

int word_deg(const Word& w, const std::vector<LieGenerator>& gens) {
  int d = 0;
  for (auto g : w) d += gens[g].degree;
  return d;
}

TensorElement product(const TensorElement& a, const TensorElement& b) {
  TensorElement out;
  for (const auto& [wa, ca] : a.terms) {
    for (const auto& [wb, cb] : b.terms) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  }
  return out;
}

// xy - (-1)^{|x||y|} yx for homogeneous x, y.
TensorElement commutator(const TensorElement& x, int dx, const TensorElement& y, int dy) {
  TensorElement out = product(x, y);
  Rational s = ((dx * dy) % 2 != 0) ? Rational(1) : Rational(-1);
  out += product(y, x).scaled(s);
  return out;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t k = 1; k < w.size(); ++k) {
    Word suffix(w.begin() + static_cast<long>(k), w.end());
    if (!(w < suffix)) return false;
  }
  return true;
}

}  // namespace

TensorElement tensor_of_tree(const BracketTree& t, const std::vector<LieGenerator>& gens) {
  if (t.generator >= 0) {
    TensorElement e;
    e.add(Word{static_cast<std::uint16_t>(t.generator)}, 1);
    return e;
  }
  TensorElement l = tensor_of_tree(*t.left, gens);
  TensorElement r = tensor_of_tree(*t.right, gens);
  int dl = l.is_zero() ? 0 : word_deg(l.terms.begin()->first, gens);
  int dr = r.is_zero() ? 0 : word_deg(r.terms.begin()->first, gens);
  return commutator(l, dl, r, dr);
}

std::string format_tree(const BracketTree& t, const std::vector<LieGenerator>& gens) {
  if (t.generator >= 0) return gens[static_cast<std::size_t>(t.generator)].name;
  return "[" + format_tree(*t.left, gens) + "," + format_tree(*t.right, gens) + "]";
}

FreeGradedLie::FreeGradedLie(std::vector<LieGenerator> generators, int cutoff)
    : gens_(std::move(generators)), cutoff_(cutoff) {
  if (gens_.size() > 60000) fail(ErrorKind::InvalidInput, "too many generators");
  for (const auto& g : gens_) {
    if (g.degree < 1) fail(ErrorKind::InvalidInput, "generator " + g.name + " must have positive degree");
  }
  if (cutoff_ < 0) fail(ErrorKind::InvalidInput, "negative cutoff");
  ids_by_degree_.assign(static_cast<std::size_t>(cutoff_) + 1, {});
  solvers_.assign(static_cast<std::size_t>(cutoff_) + 1, {});
  for (int n = 1; n <= cutoff_; ++n) build_degree(n);
  d_gen_.assign(gens_.size(), LieElement{});
}

std::optional<std::size_t> FreeGradedLie::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name == name) return i;
  }
  return std::nullopt;
}

int FreeGradedLie::word_degree(const Word& w) const { return word_deg(w, gens_); }

std::vector<Word> FreeGradedLie::words_of_degree(int n) const {
  std::vector<Word> out;
  Word cur;
  std::function<void(int)> rec = [&](int rem) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      if (gens_[g].degree <= rem) {
        cur.push_back(static_cast<std::uint16_t>(g));
        rec(rem - gens_[g].degree);
        cur.pop_back();
      }
    }
  };
  rec(n);
  std::sort(out.begin(), out.end());
  return out;
}

void FreeGradedLie::build_degree(int n) {
  Solver& sol = solvers_[static_cast<std::size_t>(n)];
  auto words = words_of_degree(n);
  for (std::size_t i = 0; i < words.size(); ++i) sol.word_index.emplace(words[i], i);
  EchelonBasis eb(words.size());

  std::map<Word, std::shared_ptr<const BracketTree>> memo;
  std::function<std::shared_ptr<const BracketTree>(const Word&)> standard = [&](const Word& w) {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    std::shared_ptr<const BracketTree> t;
    if (w.size() == 1) {
      t = BracketTree::leaf(w[0]);
    } else {
      for (std::size_t k = 1; k < w.size(); ++k) {
        Word v(w.begin() + static_cast<long>(k), w.end());
        if (is_lyndon(v)) {
          Word u(w.begin(), w.begin() + static_cast<long>(k));
          t = BracketTree::node(standard(u), standard(v));
          break;
        }
      }
    }
    memo.emplace(w, t);
    return t;
  };

  auto try_add = [&](std::shared_ptr<const BracketTree> tree) {
    TensorElement img = tensor_of_tree(*tree, gens_);
    SparseVector v;
    for (const auto& [w, c] : img.terms) v.emplace_back(sol.word_index.at(w), c);
    canonicalize(v);
    if (v.empty() || !eb.insert(v)) return;
    LieBasisElement b;
    b.degree = n;
    b.label = format_tree(*tree, gens_);
    b.tree = std::move(tree);
    b.image = std::move(img);
    ids_by_degree_[static_cast<std::size_t>(n)].push_back(basis_.size());
    basis_.push_back(std::move(b));
  };

  for (const auto& w : words) {
    if (is_lyndon(w)) try_add(standard(w));
  }
  if (n % 2 == 0) {
    for (int m = 1; m < n; ++m) {
      if (2 * m != n || m % 2 == 0) continue;
      for (const auto& w : words_of_degree(m)) {
        if (is_lyndon(w)) try_add(BracketTree::node(standard(w), standard(w)));
      }
    }
  }
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    int rest = n - gens_[g].degree;
    if (rest < 1) continue;
    for (std::size_t id : ids_by_degree_[static_cast<std::size_t>(rest)]) {
      try_add(BracketTree::node(BracketTree::leaf(static_cast<int>(g)), basis_[id].tree));
    }
  }

  // Forward-substitution data for expressing tensors in this basis.
  const auto& ids = ids_by_degree_[static_cast<std::size_t>(n)];
  for (std::size_t pos = 0; pos < ids.size(); ++pos) {
    std::map<std::size_t, Rational> row;
    for (const auto& [w, c] : basis_[ids[pos]].image.terms) row[sol.word_index.at(w)] += c;
    std::map<std::size_t, Rational> trans{{pos, Rational(1)}};
    for (std::size_t r = 0; r < sol.rows.size(); ++r) {
      auto it = row.find(sol.pivots[r]);
      if (it == row.end()) continue;
      Rational a = it->second;
      for (const auto& [k, x] : sol.rows[r]) {
        Rational& y = row[k];
        y -= a * x;
        if (sgn(y) == 0) row.erase(k);
      }
      for (const auto& [k, x] : sol.transforms[r]) {
        Rational& y = trans[k];
        y -= a * x;
        if (sgn(y) == 0) trans.erase(k);
      }
    }
    if (row.empty()) fail(ErrorKind::InvalidInput, "internal: dependent bracket basis");
    auto pivot = row.begin()->first;
    Rational inv = 1 / row.begin()->second;
    for (auto& [k, x] : row) x *= inv;
    for (auto& [k, x] : trans) x *= inv;
    sol.pivots.push_back(pivot);
    sol.rows.push_back(std::move(row));
    sol.transforms.push_back(std::move(trans));
  }
}

const std::vector<std::size_t>& FreeGradedLie::basis_ids(int degree) const {
  if (degree < 0 || degree > cutoff_) {
    fail(ErrorKind::CutoffExceeded, "degree " + std::to_string(degree) + " beyond cutoff " + std::to_string(cutoff_));
  }
  return ids_by_degree_[static_cast<std::size_t>(degree)];
}

LieElement FreeGradedLie::generator(std::size_t i) const {
  int deg = gens_.at(i).degree;
  if (deg > cutoff_) fail(ErrorKind::CutoffExceeded, "generator above cutoff");
  TensorElement t;
  t.add(Word{static_cast<std::uint16_t>(i)}, 1);
  return from_tensor(t, deg);
}

LieElement FreeGradedLie::basis(std::size_t id) const {
  LieElement e;
  e.add(id, 1);
  return e;
}

std::optional<int> FreeGradedLie::degree(const LieElement& x) const {
  if (x.is_zero()) return std::nullopt;
  int d = basis_.at(x.coeffs.begin()->first).degree;
  for (const auto& [id, c] : x.coeffs) {
    if (basis_.at(id).degree != d) fail(ErrorKind::NonHomogeneous, "mixed-degree Lie element");
  }
  return d;
}

TensorElement FreeGradedLie::to_tensor(const LieElement& x) const {
  TensorElement t;
  for (const auto& [id, c] : x.coeffs) t += basis_.at(id).image.scaled(c);
  return t;
}

LieElement FreeGradedLie::from_tensor(const TensorElement& t, int degree) const {
  LieElement out;
  if (t.is_zero()) return out;
  if (degree > cutoff_) {
    fail(ErrorKind::CutoffExceeded, "degree " + std::to_string(degree) + " beyond cutoff " + std::to_string(cutoff_));
  }
  if (degree < 1) fail(ErrorKind::InvalidInput, "nonzero Lie element in degree < 1");
  const Solver& sol = solvers_[static_cast<std::size_t>(degree)];
  std::map<std::size_t, Rational> v;
  for (const auto& [w, c] : t.terms) {
    auto it = sol.word_index.find(w);
    if (it == sol.word_index.end()) fail(ErrorKind::InvalidInput, "tensor term of the wrong degree");
    v[it->second] += c;
  }
  std::map<std::size_t, Rational> coords;
  for (std::size_t r = 0; r < sol.rows.size(); ++r) {
    auto it = v.find(sol.pivots[r]);
    if (it == v.end() || sgn(it->second) == 0) continue;
    Rational a = it->second;
    for (const auto& [k, x] : sol.rows[r]) {
      Rational& y = v[k];
      y -= a * x;
    }
    for (const auto& [k, x] : sol.transforms[r]) coords[k] += a * x;
  }
  for (const auto& [k, x] : v) {
    if (sgn(x) != 0) fail(ErrorKind::InvalidInput, "tensor is not a Lie element");
  }
  const auto& ids = ids_by_degree_[static_cast<std::size_t>(degree)];
  for (const auto& [pos, c] : coords) out.add(ids[pos], c);
  return out;
}

LieElement FreeGradedLie::bracket(const LieElement& x, const LieElement& y) const {
  std::map<int, LieElement> xs, ys;
  for (const auto& [id, c] : x.coeffs) xs[basis_.at(id).degree].add(id, c);
  for (const auto& [id, c] : y.coeffs) ys[basis_.at(id).degree].add(id, c);
  LieElement out;
  for (const auto& [dx, xe] : xs) {
    for (const auto& [dy, ye] : ys) {
      if (dx + dy > cutoff_) {
        fail(ErrorKind::CutoffExceeded, "bracket of degree " + std::to_string(dx + dy) + " beyond cutoff " +
                                            std::to_string(cutoff_));
      }
      out += from_tensor(commutator(to_tensor(xe), dx, to_tensor(ye), dy), dx + dy);
    }
  }
  return out;
}

void FreeGradedLie::set_differential(std::size_t generator, const LieElement& image) {
  auto deg = degree(image);
  if (deg && *deg != gens_.at(generator).degree - 1) {
    fail(ErrorKind::NonHomogeneous, "differential of " + gens_[generator].name + " must have degree " +
                                        std::to_string(gens_[generator].degree - 1));
  }
  d_gen_.at(generator) = image;
}

TensorElement FreeGradedLie::d_tensor(const TensorElement& t) const {
  std::vector<TensorElement> dg(gens_.size());
  for (std::size_t g = 0; g < gens_.size(); ++g) dg[g] = to_tensor(d_gen_[g]);
  TensorElement out;
  for (const auto& [w, c] : t.terms) {
    int prefix_deg = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      const auto& img = dg[w[k]];
      if (!img.is_zero()) {
        Rational s = (prefix_deg % 2 != 0) ? -c : c;
        for (const auto& [mid, x] : img.terms) {
          Word nw(w.begin(), w.begin() + static_cast<long>(k));
          nw.insert(nw.end(), mid.begin(), mid.end());
          nw.insert(nw.end(), w.begin() + static_cast<long>(k) + 1, w.end());
          out.add(nw, s * x);
        }
      }
      prefix_deg += gens_[w[k]].degree;
    }
  }
  return out;
}

LieElement FreeGradedLie::d(const LieElement& x) const {
  std::map<int, LieElement> parts;
  for (const auto& [id, c] : x.coeffs) parts[basis_.at(id).degree].add(id, c);
  LieElement out;
  for (const auto& [deg, part] : parts) out += from_tensor(d_tensor(to_tensor(part)), deg - 1);
  return out;
}

bool FreeGradedLie::has_zero_differential() const {
  for (const auto& x : d_gen_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool FreeGradedLie::d_squared_zero() const {
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    if (d_gen_[g].is_zero()) continue;
    if (!d_tensor(to_tensor(d_gen_[g])).is_zero()) return false;
  }
  return true;
}

std::string FreeGradedLie::format(const LieElement& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [id, c] : x.coeffs) {
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (a != 1) out += a.get_str() + "*";
    out += basis_.at(id).label;
  }
  return out;
}

namespace {

class LieParser {
 public:
  LieParser(const FreeGradedLie& L, const std::string& s) : L_(L), s_(s) {}

  LieElement parse() {
    LieElement e = expr();
    skip();
    if (pos_ != s_.size()) error("trailing input");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& m) const {
    fail(ErrorKind::InvalidInput, m + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
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
  LieElement expr() {
    LieElement e;
    bool neg = accept('-');
    e = neg ? Rational(-1) * term() : term();
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
  LieElement term() {
    skip();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
      Rational c = parse_rational(s_.substr(start, pos_ - start));
      if (!accept('*')) error("expected '*' after coefficient");
      return c * atom();
    }
    return atom();
  }
  LieElement atom() {
    if (accept('[')) {
      LieElement a = expr();
      if (!accept(',')) error("expected ','");
      LieElement b = expr();
      if (!accept(']')) error("expected ']'");
      return L_.bracket(a, b);
    }
    if (accept('(')) {
      LieElement a = expr();
      if (!accept(')')) error("expected ')'");
      return a;
    }
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) error("expected generator name");
    auto g = L_.generator_index(s_.substr(start, pos_ - start));
    if (!g) error("unknown generator");
    return L_.generator(*g);
  }

  const FreeGradedLie& L_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

LieElement parse_lie_expression(const FreeGradedLie& L, const std::string& text) { return LieParser(L, text).parse(); }

FreeGradedLie cp_model(int r, std::optional<int> cutoff) {
  if (r < 2) fail(ErrorKind::InvalidInput, "cp_model needs r >= 2");
  if (cutoff && *cutoff < 2 * r - 1) fail(ErrorKind::InvalidInput, "cutoff below the top generator degree");
  std::vector<LieGenerator> gens;
  for (int i = 1; i <= r; ++i) gens.push_back({"v" + std::to_string(i), 2 * i - 1});
  FreeGradedLie L(gens, cutoff.value_or(2 * r - 1));
  for (int i = 2; i <= r; ++i) {
    LieElement dv;
    for (int j = 1; j < i; ++j) {
      dv += L.bracket(L.generator(static_cast<std::size_t>(j - 1)), L.generator(static_cast<std::size_t>(i - j - 1)));
    }
    L.set_differential(static_cast<std::size_t>(i - 1), Rational(1, 2) * dv);
  }
  if (!L.d_squared_zero()) fail(ErrorKind::CompositionNonzero, "cp_model differential does not square to zero");
  return L;
}

FreeGradedLie sphere_wedge_model(const std::vector<int>& sphere_dims, int cutoff) {
  std::vector<LieGenerator> gens;
  int count = 0;
  for (int n : sphere_dims) {
    if (n < 2) fail(ErrorKind::InvalidInput, "Quillen models need simply connected spheres (n >= 2)");
    gens.push_back({"w" + std::to_string(++count), n - 1});
  }
  return FreeGradedLie(gens, cutoff);
}

}  // namespace rephom::lie
