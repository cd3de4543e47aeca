#include "npival/rational.hpp"

#include "npival/errors.hpp"

namespace npival {

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator: '" + std::string(text) + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace npival
