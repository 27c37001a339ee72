#include "fairdiv/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace fairdiv {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

long rational_floor(const Rational& q) {
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!f.fits_slong_p()) throw std::overflow_error("rational floor out of range");
  return f.get_si();
}

long rational_ceil(const Rational& q) {
  BigInt c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!c.fits_slong_p()) throw std::overflow_error("rational ceil out of range");
  return c.get_si();
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  // mpq_class accepts whitespace and hex-ish forms we do not want in
  // documents, so validate the shape first: [-]digits[/digits].
  auto bad = [&] { return std::invalid_argument("malformed rational: \"" + text + "\""); };
  if (text.empty()) throw bad();
  std::size_t i = text[0] == '-' ? 1 : 0;
  bool seen_digit = false;
  bool seen_slash = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
    } else if (c == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw bad();
    }
  }
  if (!seen_digit) throw bad();
  Rational q;
  if (q.set_str(text, 10) != 0) throw bad();
  if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator: \"" + text + "\"");
  q.canonicalize();
  return q;
}

std::string to_string(const std::vector<Rational>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(values[i]);
  }
  out += "]";
  return out;
}

}  // namespace fairdiv
