#include "hhodge/series.hpp"

namespace hhodge {

LaurentPolynomial LaurentPolynomial::monomial(const Rational& c, int exponent) {
  LaurentPolynomial p;
  p.set(exponent, c);
  return p;
}

Rational LaurentPolynomial::coefficient(int l) const {
  auto it = terms_.find(l);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::set(int l, const Rational& c) {
  if (c == 0) {
    terms_.erase(l);
  } else {
    terms_[l] = c;
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [l, c] : o.terms_) set(l, coefficient(l) + c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [l, c] : o.terms_) set(l, coefficient(l) - c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [l, v] : terms_) v *= c;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [i, x] : a.terms_) {
    for (const auto& [j, y] : b.terms_) {
      Rational prod = x * y;
      out.set(i + j, out.coefficient(i + j) + prod);
    }
  }
  return out;
}

RationalSeries sinc_series(const Rational& k, int order) {
  // sum_n (-1)^n (k/2)^{2n} t^{2n} / (2n+1)!
  RationalSeries s(order);
  const Rational half_k = k / 2;
  const Rational sq = half_k * half_k;
  Rational term = 1;  // (-1)^n (k/2)^{2n} / (2n+1)!
  for (int n = 0; 2 * n <= order; ++n) {
    s[2 * n] = term;
    term *= -sq;
    term /= Rational(BigInt((2 * n + 2) * (2 * n + 3)));
  }
  return s;
}

BivariateSeries to_bivariate(const RationalSeries& s) {
  BivariateSeries out(s.order());
  for (int j = 0; j <= s.order(); ++j) out[j] = LaurentPolynomial(s[j]);
  return out;
}

std::string render_terms(const BivariateSeries& s) {
  std::string out;
  for (int j = 0; j <= s.order(); ++j) {
    for (const auto& [l, c] : s[j].terms()) {
      if (!out.empty()) out += " + ";
      out += to_string(c) + " * t^" + std::to_string(j) + " * z^" + std::to_string(l);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace hhodge
