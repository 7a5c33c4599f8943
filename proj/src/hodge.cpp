#include "hhodge/hodge.hpp"

#include "hhodge/errors.hpp"
#include "hhodge/hurwitz.hpp"

#include <functional>

namespace hhodge {

namespace {

MonodromyVector checked_gamma(const IntegralQuery& q) {
  if (q.a < 1) throw InvalidInput("modulus a must be >= 1");
  if (q.gamma.empty()) return MonodromyVector(q.a, {});
  if (q.gamma.modulus() != q.a) {
    throw InvalidInput("gamma is taken mod " + std::to_string(q.gamma.modulus()) + " but a = " + std::to_string(q.a));
  }
  q.gamma.require_nontrivial();
  return q.gamma;
}

void check_query(const IntegralQuery& q) {
  if (q.mu.empty()) throw InvalidInput("the integral needs at least one part in mu");
  if (q.disconnected && !q.gamma.empty()) {
    throw InvalidInput("the disconnected integral is only defined for gamma empty");
  }
  if (!q.disconnected && q.g < 0) throw InvalidInput("connected integrals need genus >= 0");
}

/// r! a^e prod mu_j^{floor(mu_j/a)} / floor(mu_j/a)!, without the Aut factors.
Rational hurwitz_prefactor(int r, int g, int a, long gamma_sum, const Partition& mu) {
  long e_times_a = static_cast<long>(a) * (1 - g) - gamma_sum;
  Rational product = 1;
  for (int m : mu.parts()) {
    e_times_a += m % a;
    const int f = m / a;
    product *= power(Rational(m), f) / Rational(factorial(f));
  }
  if (e_times_a % a != 0) throw ParityViolation("the exponent of a is not an integer");
  return Rational(factorial(r)) * power(Rational(a), e_times_a / a) * product;
}

}  // namespace

const char* to_string(IntegralBranch b) {
  switch (b) {
    case IntegralBranch::EmptyModuli: return "empty-moduli";
    case IntegralBranch::Unstable: return "unstable";
    case IntegralBranch::Evaluated: return "evaluated";
    case IntegralBranch::Vanishing: return "vanishing";
  }
  return "unknown";
}

int rank_EU(int g, int a, const MonodromyVector& gamma, const Partition& mu, bool trivial_monodromy_component) {
  if (a < 1) throw InvalidInput("modulus a must be >= 1");
  if (trivial_monodromy_component) return g;
  long times_a = static_cast<long>(a) * (g - 1) + gamma.sum();
  for (int m : mu.parts()) {
    if (m % a != 0) times_a += a - m % a;
  }
  if (times_a % a != 0) {
    throw ParityViolation("rank formula gives the non-integer " + std::to_string(times_a) + "/" + std::to_string(a));
  }
  return static_cast<int>(times_a / a);
}

Rational unstable_integral(UnstableCase c, int a, const Rational& x, const Rational& y) {
  if (a < 1) throw InvalidInput("modulus a must be >= 1");
  const Rational denom = c == UnstableCase::OnePoint ? Rational(x * x) : Rational(x + y);
  if (denom == 0) throw InvalidInput("unstable integral with a zero denominator");
  Rational out = Rational(1) / (Rational(a) * denom);
  out.canonicalize();
  return out;
}

Rational theorem1_inversion(const IntegralQuery& q) {
  check_query(q);
  const MonodromyVector gamma = checked_gamma(q);
  const ConditionFlags f = condition_flags(gamma, q.mu);
  if (!f.parity) throw ConditionViolation("parity condition fails");
  if (!f.non_negative) throw ConditionViolation("non-negativity condition fails");

  const Partition nu = gamma_plus(gamma, q.mu.size());
  const int r = ramification_count(q.g, nu, q.mu);
  if (r < 0) return 0;
  const Rational h = q.disconnected ? disconnected_double_hurwitz(q.g, nu, q.mu) : connected_double_hurwitz(q.g, nu, q.mu);
  const Rational aut(automorphism_order(gamma.entries()) * partition_stats(q.mu).aut_order);
  Rational out = h * aut / hurwitz_prefactor(r, q.g, q.a, gamma.sum(), q.mu);
  out.canonicalize();
  return out;
}

IntegralResult combined_integral_Za(const IntegralQuery& q) {
  check_query(q);
  const MonodromyVector gamma = checked_gamma(q);
  const ConditionFlags f = condition_flags(gamma, q.mu);
  if (!f.parity) return {0, IntegralBranch::EmptyModuli};

  if (q.disconnected) {
    if (2 * q.g - 2 + q.mu.size() / q.a + q.mu.length() < 0) return {0, IntegralBranch::EmptyModuli};
    return {theorem1_inversion(q), IntegralBranch::Evaluated};
  }

  const int points = gamma.length() + q.mu.length();
  if (q.g == 0 && points < 3) {
    if (points == 1) return {unstable_integral(UnstableCase::OnePoint, q.a, q.mu[0]), IntegralBranch::Unstable};
    // a pure monodromy point carries weight 0
    const Rational y = q.mu.length() == 2 ? Rational(q.mu[1]) : Rational(0);
    return {unstable_integral(UnstableCase::TwoPoint, q.a, q.mu[0], y), IntegralBranch::Unstable};
  }
  if (f.non_negative && f.bounded) return {theorem1_inversion(q), IntegralBranch::Evaluated};
  if ((f.negative && f.bounded) || f.strongly_negative) return {0, IntegralBranch::Vanishing};
  throw NotComputable("negativity holds but neither boundedness nor strong negativity does for gamma = " +
                      gamma.to_string() + ", mu = " + q.mu.to_string());
}

BivariateSeries one_part_F_series(int a, const MonodromyVector& gamma_in, int t_order) {
  if (t_order < 0 || t_order % 2 != 0) throw InvalidInput("t_order must be even and non-negative");
  const MonodromyVector gamma = checked_gamma({0, a, gamma_in, Partition(), false});
  const ConditionFlags f = condition_flags(gamma, Partition());
  if (!f.bounded) throw ConditionViolation("one-part series needs bounded gamma");

  const Rational s = fraction(gamma.sum(), a);
  const int floor_s = static_cast<int>(gamma.sum() / a);

  // (-z - s)^{sinc(a)} times the integer powers of the other sinc factors
  LaurentPolynomial exponent = LaurentPolynomial::monomial(-1, 1) + LaurentPolynomial(Rational(-s));
  BivariateSeries out = pow_series(to_bivariate(sinc_series(Rational(a), t_order)), exponent);
  std::map<int, int> mult;
  mult[1] = 0;
  for (int k : gamma.entries()) ++mult[k];
  RationalSeries rest(t_order, Rational(1));
  for (auto [k, m] : mult) {
    const int e = m - (k == 1 ? 1 : 0);
    if (e != 0) rest = rest * pow_series(sinc_series(Rational(k), t_order), Rational(e));
  }
  out = out * to_bivariate(rest);

  // (1/a) prod_{j=1}^{floor s} (-z - s + j) (-z)^{-floor s}
  LaurentPolynomial front(fraction(1, a));
  for (int j = 1; j <= floor_s; ++j) {
    front = front * (LaurentPolynomial::monomial(-1, 1) + LaurentPolynomial(Rational(Rational(j) - s)));
  }
  front = front * LaurentPolynomial::monomial(floor_s % 2 ? -1 : 1, -floor_s);
  return out * front;
}

Rational hodge_integral_one_part(int g, int l, int a, const MonodromyVector& gamma) {
  if (g < 0) throw InvalidInput("genus must be >= 0");
  if (2 * g - 2 + gamma.length() + l < 0) throw InvalidInput("negative psi exponent");
  return one_part_F_series(a, gamma, 2 * g)[2 * g].coefficient(l);
}

namespace {

struct AbelianSetup {
  CharacterAnalysis analysis;
  const FiniteAbelianGroup* G;
};

/// The connected integral for one set of points.
Rational connected_abelian(int g, const AbelianSetup& s, const std::vector<AbelianPoint>& points) {
  const int a = s.analysis.a;
  GroupElement total = s.G->zero();
  std::vector<int> gamma, mu;
  for (const auto& p : points) {
    const GroupElement m = s.G->reduce(p.monodromy);
    total = s.G->add(total, m);
    const int image = s.analysis.phi(m);
    if (p.weight < 0) throw InvalidInput("psi weights must be non-negative");
    if (p.weight == 0) {
      if (image == 0) throw InvalidInput("a weight-0 point needs monodromy outside ker R");
      gamma.push_back(image);
    } else {
      if (image != (a - p.weight % a) % a) {
        throw InvalidInput("point with weight " + std::to_string(p.weight) + " has image " + std::to_string(image) +
                           " in Z_" + std::to_string(a) + ", expected -" + std::to_string(p.weight));
      }
      mu.push_back(p.weight);
    }
  }
  if (mu.empty()) throw InvalidInput("the integral needs at least one weighted point");
  if (total != s.G->zero()) return 0;
  IntegralQuery q{g, a, MonodromyVector(a, gamma), Partition(mu), false};
  return degree_rho(s.analysis.kernel.order(), g, true) * combined_integral_Za(q).value;
}

}  // namespace

Rational combined_integral_abelian(int g, const FiniteAbelianGroup& G, const AbelianCharacter& R,
                                   const std::vector<AbelianPoint>& points, bool disconnected) {
  const AbelianSetup setup{analyze_character(G, R), &G};
  if (!disconnected) {
    if (g < 0) throw InvalidInput("connected integrals need genus >= 0");
    return connected_abelian(g, setup, points);
  }
  for (const auto& p : points) {
    if (p.weight <= 0) throw InvalidInput("the disconnected integral takes weighted points only");
  }
  if (points.empty()) throw InvalidInput("the integral needs at least one weighted point");
  if (points.size() > 20) throw ResourceLimit("too many points to split into components");

  // Split off the component through the first remaining point; `euler` is
  // the remaining budget of 2g - 2 summed over components.
  const int n = static_cast<int>(points.size());
  std::function<Rational(unsigned, int)> split = [&](unsigned remaining, int euler) -> Rational {
    if (remaining == 0) return euler == 0 ? 1 : 0;
    const int anchor = __builtin_ctz(remaining);
    const unsigned others = remaining & ~(1u << anchor);
    Rational total = 0;
    for (unsigned sub = others;; sub = (sub - 1) & others) {
      const unsigned block = sub | (1u << anchor);
      const unsigned rest = remaining & ~block;
      std::vector<AbelianPoint> component;
      for (int i = 0; i < n; ++i) {
        if (block & (1u << i)) component.push_back(points[static_cast<std::size_t>(i)]);
      }
      // every later component contributes at least -2
      const int max_euler = euler + 2 * __builtin_popcount(rest);
      for (int gi = 0; 2 * gi - 2 <= max_euler; ++gi) {
        Rational inner = connected_abelian(gi, setup, component);
        if (inner == 0) continue;
        total += inner * split(rest, euler - (2 * gi - 2));
      }
      if (sub == 0) break;
    }
    return total;
  };
  return split((1u << n) - 1, 2 * g - 2);
}

RoundTrip theorem5_roundtrip(int g, const FiniteAbelianGroup& G, const AbelianCharacter& R,
                             const WeightedPartition& mu_in, bool disconnected) {
  const CharacterAnalysis analysis = analyze_character(G, R);
  const FiniteAbelianGroup& K = analysis.kernel;
  const WeightedPartition mu = K.normalize(mu_in);
  const int a = analysis.a, d = mu.size();
  if (d < 1 || d % a != 0) throw InvalidInput("the correspondence needs a | d");

  RoundTrip out;
  out.lhs = wreath_double_hurwitz(g, K, empty_plus(analysis.k, d, a, K), mu, !disconnected);
  const int r = 2 * g - 2 + d / a + mu.length();
  if (r < 0) {
    out.rhs = 0;
    return out;
  }
  std::vector<AbelianPoint> points;
  for (const auto& [part, kappa] : mu.entries()) {
    points.push_back({G.add(kappa, G.negate(G.scale(analysis.x, part))), part});
  }
  const Rational prefactor = hurwitz_prefactor(r, g, a, 0, mu.underlying()) / Rational(mu.aut_order());
  out.rhs = prefactor * combined_integral_abelian(g, G, R, points, disconnected);
  out.rhs.canonicalize();
  return out;
}

}  // namespace hhodge
