#include "rephom/groupschemes/words.hpp"

#include <cctype>

#include "rephom/error.hpp"

namespace rephom::groupschemes {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (l.exponent == 0) return;
  if (!out.empty() && out.back().symbol == l.symbol) {
    out.back().exponent += l.exponent;
    if (out.back().exponent == 0) out.pop_back();
    return;
  }
  out.push_back(l);
}

class WordParser {
 public:
  WordParser(const std::string& s, const std::vector<std::string>& symbols) : s_(s), symbols_(symbols) {}

  GroupWord parse() {
    GroupWord w = word();
    skip();
    if (pos_ != s_.size()) error("unexpected character");
    return w;
  }

 private:
  [[noreturn]] void error(const std::string& m) const {
    fail(ErrorKind::InvalidInput, m + " at position " + std::to_string(pos_) + " in word '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '*')) ++pos_;
  }
  bool peek_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '[' || c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  GroupWord word() {
    GroupWord w;
    while (peek_atom()) w = w * factor();
    return w;
  }
  GroupWord factor() {
    GroupWord a = atom();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("expected exponent");
      a = a.power(std::stoi(s_.substr(start, pos_ - start)));
    }
    return a;
  }
  GroupWord atom() {
    skip();
    char c = s_[pos_];
    if (c == '[') {
      ++pos_;
      GroupWord a = word();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ',') error("expected ','");
      ++pos_;
      GroupWord b = word();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ']') error("expected ']'");
      ++pos_;
      return commutator(a, b);
    }
    if (c == '(') {
      ++pos_;
      GroupWord a = word();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') error("expected ')'");
      ++pos_;
      return a;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (symbols_[i] == name) return GroupWord::generator(i);
    }
    error("unknown generator '" + name + "'");
  }

  const std::string& s_;
  const std::vector<std::string>& symbols_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupWord::GroupWord(std::vector<Letter> letters) {
  for (const auto& l : letters) push_reduced(letters_, l);
}

GroupWord GroupWord::generator(std::size_t symbol, int exponent) { return GroupWord({Letter{symbol, exponent}}); }

GroupWord GroupWord::parse(const std::string& text, const std::vector<std::string>& symbols) {
  return WordParser(text, symbols).parse();
}

GroupWord GroupWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return GroupWord(std::move(out));
}

GroupWord GroupWord::power(int k) const {
  GroupWord base = k < 0 ? inverse() : *this;
  GroupWord out;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
  return out;
}

std::size_t GroupWord::symbol_bound() const {
  std::size_t b = 0;
  for (const auto& l : letters_) b = std::max(b, l.symbol + 1);
  return b;
}

std::vector<int> GroupWord::exponent_sums(std::size_t symbols) const {
  std::vector<int> out(symbols, 0);
  for (const auto& l : letters_) out.at(l.symbol) += l.exponent;
  return out;
}

std::string GroupWord::to_string(const std::vector<std::string>& symbols) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += " ";
    out += l.symbol < symbols.size() ? symbols[l.symbol] : "g" + std::to_string(l.symbol);
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  GroupWord out = a;
  for (const auto& l : b.letters_) push_reduced(out.letters_, l);
  return out;
}

GroupWord commutator(const GroupWord& a, const GroupWord& b) { return a * b * a.inverse() * b.inverse(); }

FreeGroupMap FreeGroupMap::identity(std::size_t n) {
  FreeGroupMap m;
  for (std::size_t i = 0; i < n; ++i) m.images.push_back(GroupWord::generator(i));
  return m;
}

GroupWord FreeGroupMap::apply(const GroupWord& w) const {
  GroupWord out;
  for (const auto& l : w.letters()) {
    if (l.symbol >= images.size()) fail(ErrorKind::InvalidInput, "word uses a generator outside the map's domain");
    out = out * images[l.symbol].power(l.exponent);
  }
  return out;
}

FreeGroupMap FreeGroupMap::compose(const FreeGroupMap& other) const {
  FreeGroupMap out;
  for (const auto& w : other.images) out.images.push_back(apply(w));
  return out;
}

FreeGroupMap artin_action(const BraidWord& b) {
  const std::size_t n = b.strands;
  if (n < 1) fail(ErrorKind::InvalidInput, "a braid needs at least one strand");
  FreeGroupMap total = FreeGroupMap::identity(n);
  for (int g : b.generators) {
    const std::size_t i = static_cast<std::size_t>(g < 0 ? -g : g);
    if (g == 0 || i >= n) {
      fail(ErrorKind::InvalidInput, "braid generator " + std::to_string(g) + " invalid on " + std::to_string(n) + " strands");
    }
    // 0-based positions p = i-1 and q = i.
    const std::size_t p = i - 1, q = i;
    FreeGroupMap s = FreeGroupMap::identity(n);
    GroupWord xp = GroupWord::generator(p), xq = GroupWord::generator(q);
    if (g > 0) {
      s.images[p] = xp * xq * xp.inverse();
      s.images[q] = xp;
    } else {
      s.images[p] = xq;
      s.images[q] = xq.inverse() * xp * xq;
    }
    total = total.compose(s);
  }
  return total;
}

}  // namespace rephom::groupschemes
