#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rephom::groupschemes {

struct Letter {
  std::size_t symbol = 0;
  int exponent = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word in a free group: adjacent letters have different
// symbols and every exponent is nonzero.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters);
  static GroupWord generator(std::size_t symbol, int exponent = 1);
  // Grammar: word := factor*, factor := atom ['^' integer],
  // atom := name | '[' word ',' word ']' | '(' word ')'. Names are looked
  // up in `symbols`; '*' and whitespace separate factors.
  static GroupWord parse(const std::string& text, const std::vector<std::string>& symbols);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  GroupWord inverse() const;
  GroupWord power(int k) const;
  // Highest symbol index used plus one.
  std::size_t symbol_bound() const;
  // Exponent sum of each symbol (the abelianization).
  std::vector<int> exponent_sums(std::size_t symbols) const;
  std::string to_string(const std::vector<std::string>& symbols) const;

  friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  std::vector<Letter> letters_;
};

// a b a^-1 b^-1.
GroupWord commutator(const GroupWord& a, const GroupWord& b);

// Endomorphism of the free group F_n given by the images of generators.
struct FreeGroupMap {
  std::vector<GroupWord> images;
  static FreeGroupMap identity(std::size_t n);
  GroupWord apply(const GroupWord& w) const;
  // (this o other)(x) = this(other(x)).
  FreeGroupMap compose(const FreeGroupMap& other) const;
  friend bool operator==(const FreeGroupMap&, const FreeGroupMap&) = default;
};

// Braid on `strands` strands; generators are signed 1-based indices, +i for
// sigma_i and -i for its inverse.
struct BraidWord {
  std::size_t strands = 1;
  std::vector<int> generators;
};

// Artin action: sigma_i sends x_i to x_i x_{i+1} x_i^-1 and x_{i+1} to x_i.
// The word s_1 s_2 ... s_k acts as s_1 o s_2 o ... o s_k.
FreeGroupMap artin_action(const BraidWord& b);

}  // namespace rephom::groupschemes
