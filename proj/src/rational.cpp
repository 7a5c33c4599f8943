#include "hhodge/rational.hpp"

#include "hhodge/errors.hpp"

#include <cctype>

namespace hhodge {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw InvalidInput("malformed rational: '" + std::string(text) + "'");
  }
  BigInt p(std::string(num[0] == '+' ? num.substr(1) : num));
  BigInt q{std::string(den)};
  if (q == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const BigInt& n) { return n.get_str(); }

Rational fraction(long p, long q) {
  if (q == 0) throw InvalidInput("zero denominator");
  Rational r{BigInt(p), BigInt(q)};
  r.canonicalize();
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw InvalidInput("factorial of a negative number");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rational power(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw InvalidInput("zero raised to a negative power");
    return power(Rational(1) / base, -exponent);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace hhodge
