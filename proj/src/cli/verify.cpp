#include "hhodge/cli/verify.hpp"

#include "hhodge/characters.hpp"
#include "hhodge/cli/table_cache.hpp"
#include "hhodge/hodge.hpp"
#include "hhodge/hurwitz.hpp"
#include "hhodge/wreath.hpp"

#include <chrono>
#include <functional>

namespace hhodge::cli {

namespace {

struct Outcome {
  std::string expected;
  std::string got;
  bool equal;
};

/// Counts agreements over a sweep.
class Tally {
 public:
  void add(bool ok) {
    ++total_;
    if (ok) ++good_;
  }
  Outcome outcome() const {
    return {std::to_string(total_) + "/" + std::to_string(total_) + " equal",
            std::to_string(good_) + "/" + std::to_string(total_) + " equal", good_ == total_ && total_ > 0};
  }

 private:
  long total_ = 0, good_ = 0;
};

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

/// int over M_{0,n} of prod psi_i^{k_i} = (n-3)! / prod k_i!.
Rational genus0_psi(int n, const std::vector<int>& k) {
  Rational out(factorial(n - 3));
  for (int e : k) out /= Rational(factorial(e));
  return out;
}

Outcome worked_example() {
  const Rational h = connected_double_hurwitz(0, P({1, 1}), P({1, 1}));
  const Rational i = combined_integral_Za({0, 2, MonodromyVector(2, {1, 1}), P({1, 1}), false}).value;
  return {"1/2, 1/2", to_string(h) + ", " + to_string(i), h == fraction(1, 2) && i == fraction(1, 2)};
}

Outcome lambda_one() {
  // The combined integral is (1/2) int_{M_{0,4}} 1/((1-psi_1)(1-psi_2)) - 2 int lambda_1^U.
  const Rational combined = combined_integral_Za({0, 2, MonodromyVector(2, {1, 1}), P({1, 1}), false}).value;
  const Rational psi_part = fraction(1, 2) * (genus0_psi(4, {1, 0}) + genus0_psi(4, {0, 1}));
  const Rational solved = (psi_part - combined) / 2;
  // the same class pulled back from M_{1,1} by a degree 6 map
  const Rational pulled = 6 * hodge_integral_one_part(1, 0, 1, MonodromyVector(1, {}));
  return {"1/4 (both ways)", to_string(solved) + ", " + to_string(pulled), solved == fraction(1, 4) && pulled == solved};
}

Outcome odd_vanishing() {
  std::string got;
  bool ok = true;
  for (int n : {3, 5, 7}) {
    const Rational v =
        combined_integral_Za({0, 2, MonodromyVector(2, std::vector<int>(static_cast<std::size_t>(n), 1)), P({1}), false}).value;
    if (!got.empty()) got += ", ";
    got += to_string(v);
    ok = ok && v == 0;
  }
  return {"0, 0, 0", got, ok};
}

Outcome genus0_one_part() {
  Tally t;
  for (int d = 1; d <= 5; ++d) {
    for (const auto& gamma : partitions_of(d)) {
      const int n = gamma.length();
      const Rational expected =
          Rational(factorial(n - 1)) / Rational(partition_stats(gamma).aut_order) * power(Rational(d), n - 2);
      t.add(connected_double_hurwitz(0, gamma, P({d})) == expected);
      for (int a = d + 1; a <= d + 3; ++a) {
        std::vector<int> entries(gamma.parts().begin(), gamma.parts().end());
        const Rational integral = combined_integral_Za({0, a, MonodromyVector(a, entries), P({d}), false}).value;
        t.add(integral == power(Rational(d), n - 2) / a);
      }
    }
  }
  return t.outcome();
}

Outcome gjv_series() {
  Tally t;
  for (int d = 1; d <= 6; ++d) {
    for (const auto& nu : partitions_of(d)) {
      const auto series = gjv_one_part_check(nu, d, 3);
      for (int g = 0; g <= 3; ++g) t.add(series[static_cast<std::size_t>(g)] == connected_double_hurwitz(g, nu, P({d})));
    }
  }
  return t.outcome();
}

Outcome series_coefficients() {
  const auto one = one_part_F_series(1, MonodromyVector(1, {}), 2);
  const auto two = one_part_F_series(2, MonodromyVector(2, {}), 2);
  const Rational c[4] = {one[2].coefficient(0), one[2].coefficient(1), two[0].coefficient(0), two[2].coefficient(0)};
  std::string got;
  for (const auto& v : c) got += (got.empty() ? "" : ", ") + to_string(v);
  return {"1/24, 1/24, 1/2, 1/48", got,
          c[0] == fraction(1, 24) && c[1] == fraction(1, 24) && c[2] == fraction(1, 2) && c[3] == fraction(1, 48)};
}

Outcome hurwitz_oracle() {
  Tally t;
  for (int d = 1; d <= 5; ++d) {
    for (const auto& nu : partitions_of(d)) {
      for (const auto& mu : partitions_of(d)) {
        for (int g = -1; g <= 2; ++g) {
          if (g >= 0) t.add(connected_double_hurwitz(g, nu, mu) == brute_force_hurwitz({g, nu, mu, true}));
          t.add(disconnected_double_hurwitz(g, nu, mu) == brute_force_hurwitz({g, nu, mu, false}));
        }
      }
    }
  }
  return t.outcome();
}

Outcome wreath_oracle() {
  Tally t;
  const FiniteAbelianGroup K({2});
  const auto worked = wreath_double_hurwitz(0, K, WeightedPartition::parse("2:0", 1), WeightedPartition::parse("2:0", 1));
  t.add(worked == fraction(1, 4));
  for (int d = 1; d <= 3; ++d) {
    const auto classes = weighted_partitions(d, K);
    for (const auto& nu : classes) {
      for (const auto& mu : classes) {
        for (int g = 0; g <= 2; ++g) {
          for (bool connected : {true, false}) {
            t.add(wreath_double_hurwitz(g, K, nu, mu, connected) == wreath_hurwitz_bruteforce(g, K, nu, mu, connected));
          }
        }
      }
    }
  }
  return t.outcome();
}

Outcome degree_gates() {
  Tally t;
  for (long k = 1; k <= 4; ++k) {
    for (int g = 0; g <= 3; ++g) {
      t.add(degree_rho(k, g, true) == power(Rational(k), 2 * g - 1));
      t.add(degree_rho(k, g, false) == 0);
    }
  }
  for (const char* name : {"2x2", "4"}) {
    const auto G = FiniteAbelianGroup::parse(name);
    for (const auto& exponents : G.elements()) {
      const AbelianCharacter R{G, exponents};
      const auto analysis = analyze_character(G, R);
      for (int d = analysis.a; d <= 4; d += analysis.a) {
        for (const auto& mu : weighted_partitions(d, analysis.kernel)) {
          for (int g = 0; g <= 1; ++g) {
            const auto rt = theorem5_roundtrip(g, G, R, mu);
            t.add(rt.lhs == rt.rhs);
          }
        }
      }
    }
  }
  return t.outcome();
}

Outcome unstable_values() {
  const Rational one = unstable_integral(UnstableCase::OnePoint, 2, 2);
  const Rational two = unstable_integral(UnstableCase::TwoPoint, 2, 1, 0);
  const Rational inverted = theorem1_inversion({0, 2, MonodromyVector(2, {}), P({2}), false});
  return {"1/8, 1/2, 1/8", to_string(one) + ", " + to_string(two) + ", " + to_string(inverted),
          one == fraction(1, 8) && two == fraction(1, 2) && inverted == fraction(1, 8)};
}

struct Check {
  int id;
  const char* name;
  double limit;
  bool quick;
  std::function<Outcome()> run;
};

const std::vector<Check>& checks() {
  static const std::vector<Check> all = {
      {1, "genus-0 Z_2 worked example", 1, true, worked_example},
      {2, "lambda_1 over the Z_2 four-point space", 1, true, lambda_one},
      {3, "odd Weierstrass vanishing", 10, true, odd_vanishing},
      {4, "genus-0 one-part law", 5, true, genus0_one_part},
      {5, "one-part series vs class algebra", 30, false, gjv_series},
      {6, "one-point series coefficients", 10, true, series_coefficients},
      {7, "Hurwitz numbers vs brute force", 120, false, hurwitz_oracle},
      {8, "wreath reduction vs brute force", 120, false, wreath_oracle},
      {9, "degree gates and wreath/Hodge roundtrip", 120, false, degree_gates},
      {10, "unstable conventions", 1, true, unstable_values},
  };
  return all;
}

}  // namespace

bool VerifyReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed()) return false;
  }
  return !checks.empty();
}

std::vector<int> verify_ids(VerifyLevel level) {
  std::vector<int> ids;
  for (const auto& c : checks()) {
    if (level == VerifyLevel::Full || c.quick) ids.push_back(c.id);
  }
  return ids;
}

VerifyReport verify_suite(VerifyLevel level, const std::optional<std::filesystem::path>& cache_dir) {
  VerifyReport report;
  if (cache_dir) {
    const int max_d = level == VerifyLevel::Full ? 6 : 5;
    for (int d = 1; d <= max_d; ++d) {
      const auto outcome = prime_from_cache(*cache_dir, d);
      report.notes.push_back("character table d=" + std::to_string(d) + ": " +
                             (outcome == CacheOutcome::Loaded ? "loaded from cache" : "rebuilt and cached"));
    }
  }
  for (const auto& c : checks()) {
    if (level == VerifyLevel::Quick && !c.quick) continue;
    CheckResult r;
    r.id = c.id;
    r.name = c.name;
    r.limit_seconds = c.limit;
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = c.run();
      r.expected = std::move(o.expected);
      r.got = std::move(o.got);
      r.equal = o.equal;
    } catch (const std::exception& e) {
      r.got = std::string("error: ") + e.what();
      r.equal = false;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(r));
  }
  return report;
}

}  // namespace hhodge::cli
