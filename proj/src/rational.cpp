#include "lyk/rational.hpp"

#include <stdexcept>

namespace lyk {

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  mpq_t q;
  mpq_init(q);
  std::string buf(text);
  if (mpq_set_str(q, buf.c_str(), 10) != 0) {
    mpq_clear(q);
    throw std::invalid_argument("malformed rational literal: " + buf);
  }
  if (mpz_sgn(mpq_denref(q)) == 0) {
    mpq_clear(q);
    throw std::invalid_argument("zero denominator in rational literal: " + buf);
  }
  mpq_canonicalize(q);
  Rational out(q);
  mpq_clear(q);
  return out;
}

std::string to_string(const Rational& value) {
  return value.get_str();
}

}  // namespace lyk
