#include "gp/rational.hpp"

#include <stdexcept>

namespace gp {

std::string format_rational(const Rational& r) {
  return r.get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

}  // namespace gp
