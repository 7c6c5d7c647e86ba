#include "vball/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace vball {

Rational rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
  }
  Rational q(n, d);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

std::string format_rational(const Rational& value) {
  return value.get_str();
}

Rational abs(const Rational& value) {
  return value < 0 ? Rational(-value) : value;
}

Rational ceil(const Rational& value) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return Rational(q);
}

std::uint32_t ceil_abs_to_nat(const Rational& value, std::uint32_t floor_at) {
  Rational c = ceil(abs(value));
  mpz_class z = c.get_num();
  if (!z.fits_uint_p()) throw std::overflow_error("rational magnitude out of range");
  std::uint32_t n = static_cast<std::uint32_t>(z.get_ui());
  return n < floor_at ? floor_at : n;
}

bool is_integer(const Rational& value) {
  return value.get_den() == 1;
}

}  // namespace vball
