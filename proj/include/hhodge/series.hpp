#pragma once

#include "hhodge/errors.hpp"
#include "hhodge/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace hhodge {

/// Finite sum of c_l z^l with l in Z; zero coefficients are never stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(const Rational& c) { set(0, c); }  // NOLINT: scalars embed
  static LaurentPolynomial monomial(const Rational& c, int exponent);

  Rational coefficient(int l) const;
  void set(int l, const Rational& c);
  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Only meaningful when nonzero.
  int min_degree() const { return terms_.begin()->first; }
  int max_degree() const { return terms_.rbegin()->first; }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const Rational& c);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  std::map<int, Rational> terms_;
};

/// Power series in t truncated after t^order, over a coefficient ring C
/// (Rational or LaurentPolynomial). The ring only needs +, -, * and scaling
/// by rationals.
template <typename C>
class PowerSeries {
 public:
  explicit PowerSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw InvalidInput("series order must be non-negative");
  }
  PowerSeries(int order, const C& constant) : PowerSeries(order) { coeffs_[0] = constant; }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const C& operator[](int j) const { return coeffs_[static_cast<std::size_t>(j)]; }
  C& operator[](int j) { return coeffs_[static_cast<std::size_t>(j)]; }

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) {
    for (int j = 0; j <= a.order(); ++j) a[j] += b[j];
    return a;
  }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) {
    for (int j = 0; j <= a.order(); ++j) a[j] -= b[j];
    return a;
  }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(a.order());
    for (int i = 0; i <= a.order(); ++i) {
      for (int j = 0; i + j <= a.order(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
  }
  /// Coefficient-wise multiplication by a ring element.
  friend PowerSeries operator*(PowerSeries a, const C& c) {
    for (int j = 0; j <= a.order(); ++j) a[j] = a[j] * c;
    return a;
  }

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<C> coeffs_;
};

using RationalSeries = PowerSeries<Rational>;
using BivariateSeries = PowerSeries<LaurentPolynomial>;

namespace detail {
inline bool is_zero(const Rational& c) { return c == 0; }
inline bool is_zero(const LaurentPolynomial& c) { return c.is_zero(); }
inline bool is_one(const Rational& c) { return c == 1; }
inline bool is_one(const LaurentPolynomial& c) { return c == LaurentPolynomial(Rational(1)); }
}  // namespace detail

/// exp(f) for f with zero constant term: g_n = (1/n) sum_k k f_k g_{n-k}.
template <typename C>
PowerSeries<C> exp_series(const PowerSeries<C>& f) {
  if (!detail::is_zero(f[0])) throw InvalidInput("exp_series needs a zero constant term");
  PowerSeries<C> g(f.order(), C(Rational(1)));
  for (int n = 1; n <= f.order(); ++n) {
    C acc;
    for (int k = 1; k <= n; ++k) acc += (f[k] * g[n - k]) * Rational(k);
    g[n] = acc * fraction(1, n);
  }
  return g;
}

/// log(f) for f with constant term 1: h_n = f_n - (1/n) sum_{k<n} k h_k f_{n-k}.
template <typename C>
PowerSeries<C> log_series(const PowerSeries<C>& f) {
  if (!detail::is_one(f[0])) throw InvalidInput("log_series needs constant term 1");
  PowerSeries<C> h(f.order());
  for (int n = 1; n <= f.order(); ++n) {
    C acc;
    for (int k = 1; k < n; ++k) acc += (h[k] * f[n - k]) * Rational(k);
    h[n] = f[n] - acc * fraction(1, n);
  }
  return h;
}

/// f^alpha = exp(alpha log f) for f with constant term 1 and any ring element alpha.
template <typename C>
PowerSeries<C> pow_series(const PowerSeries<C>& f, const C& alpha) {
  return exp_series(log_series(f) * alpha);
}

/// sin(k t / 2) / (k t / 2) truncated at t^order.
RationalSeries sinc_series(const Rational& k, int order);

/// Embeds a series with rational coefficients as a z-constant bivariate one.
BivariateSeries to_bivariate(const RationalSeries& s);

/// "c * t^j * z^l" terms joined by " + ", ordered by (j, l) ascending.
std::string render_terms(const BivariateSeries& s);

}  // namespace hhodge
