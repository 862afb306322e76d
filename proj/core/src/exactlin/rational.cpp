#include "rephom/exactlin/rational.hpp"

#include "rephom/error.hpp"

namespace rephom {

Rational make_rational(long num, long den) {
  if (den == 0) fail(ErrorKind::InvalidInput, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    fail(ErrorKind::InvalidInput, "not a rational literal: '" + text + "'");
  }
  if (q.get_den() == 0) fail(ErrorKind::InvalidInput, "zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace rephom
