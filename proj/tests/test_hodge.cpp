#include "doctest.h"

#include "hhodge/errors.hpp"
#include "hhodge/hodge.hpp"
#include "hhodge/hurwitz.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

using namespace hhodge;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
MonodromyVector M(int a, std::vector<int> e) { return MonodromyVector(a, std::move(e)); }

Rational integral(int g, int a, std::vector<int> gamma, std::vector<int> mu) {
  return combined_integral_Za({g, a, M(a, std::move(gamma)), P(std::move(mu)), false}).value;
}

/// Non-decreasing tuples of nontrivial residues mod a with sum <= bound.
std::vector<std::vector<int>> gamma_multisets(int a, int bound, int max_len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int lo, int sum) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int v = lo; v < a && sum + v <= bound; ++v) {
      cur.push_back(v);
      rec(v, sum + v);
      cur.pop_back();
    }
  };
  rec(1, 0);
  return out;
}

bool bounded(int a, const std::vector<int>& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g[i] + g[j] > a) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("rank of the Hodge bundle") {
  CHECK(rank_EU(0, 2, M(2, {1, 1, 1, 1}), Partition(), false) == 1);
  CHECK(rank_EU(1, 1, M(1, {}), P({1}), true) == 1);
  CHECK(rank_EU(0, 2, M(2, {1, 1, 1}), P({1}), false) == 1);
  CHECK_THROWS_AS(rank_EU(0, 2, M(2, {1}), Partition(), false), ParityViolation);
  CHECK_THROWS_AS(rank_EU(0, 3, M(3, {1, 1}), P({1}), false), ParityViolation);
}

TEST_CASE("unstable integrals") {
  CHECK(unstable_integral(UnstableCase::OnePoint, 2, 2) == fraction(1, 8));
  CHECK(unstable_integral(UnstableCase::TwoPoint, 2, 1, 0) == fraction(1, 2));
  CHECK(unstable_integral(UnstableCase::TwoPoint, 1, 1, 1) == fraction(1, 2));
  CHECK_THROWS_AS(unstable_integral(UnstableCase::OnePoint, 2, 0), InvalidInput);
  CHECK_THROWS_AS(unstable_integral(UnstableCase::TwoPoint, 2, 1, -1), InvalidInput);
}

TEST_CASE("combined integral examples") {
  CHECK(integral(0, 2, {1, 1}, {1, 1}) == fraction(1, 2));
  auto vanishing = combined_integral_Za({0, 2, M(2, {1, 1, 1}), P({1}), false});
  CHECK(vanishing.value == 0);
  CHECK(vanishing.branch == IntegralBranch::Vanishing);
  auto unstable = combined_integral_Za({0, 2, M(2, {}), P({2}), false});
  CHECK(unstable.value == fraction(1, 8));
  CHECK(unstable.branch == IntegralBranch::Unstable);
  CHECK(theorem1_inversion({0, 2, M(2, {}), P({2}), false}) == fraction(1, 8));

  auto empty = combined_integral_Za({0, 2, M(2, {1}), P({2}), false});
  CHECK(empty.value == 0);
  CHECK(empty.branch == IntegralBranch::EmptyModuli);

  // negative, unbounded and not strongly negative
  CHECK_THROWS_AS(combined_integral_Za({0, 3, M(3, {2, 2}), P({1}), false}), NotComputable);
  CHECK_THROWS_AS(combined_integral_Za({0, 2, M(2, {0, 1}), P({1}), false}), InvalidInput);
  CHECK_THROWS_AS(combined_integral_Za({0, 3, M(2, {1}), P({1}), false}), InvalidInput);
  CHECK_THROWS_AS(combined_integral_Za({0, 2, M(2, {1}), P({1}), true}), InvalidInput);
  CHECK_THROWS_AS(combined_integral_Za({-1, 2, M(2, {}), P({2}), false}), InvalidInput);
}

TEST_CASE("odd Weierstrass family vanishes") {
  for (int n : {3, 5, 7}) {
    auto r = combined_integral_Za({0, 2, M(2, std::vector<int>(static_cast<std::size_t>(n), 1)), P({1}), false});
    CHECK(r.value == 0);
  }
}

TEST_CASE("unstable values agree with the inversion") {
  for (int a = 1; a <= 4; ++a) {
    for (int d = 1; d <= 6; ++d) {
      // one point
      if (d % a == 0) CHECK(theorem1_inversion({0, a, M(a, {}), P({d}), false}) == integral(0, a, {}, {d}));
      // two weighted points
      for (int m = 1; m < d; ++m) {
        if (d % a == 0) CHECK(theorem1_inversion({0, a, M(a, {}), P({m, d - m}), false}) == integral(0, a, {}, {m, d - m}));
      }
      // a monodromy point and a weighted point
      for (int c = 1; c < a && c <= d; ++c) {
        if ((d - c) % a == 0) CHECK(theorem1_inversion({0, a, M(a, {c}), P({d}), false}) == integral(0, a, {c}, {d}));
      }
    }
  }
}

TEST_CASE("one-part series") {
  auto fp = one_part_F_series(1, M(1, {}), 4);
  CHECK(fp[0].coefficient(0) == 1);
  CHECK(fp[2].coefficient(1) == fraction(1, 24));
  CHECK(fp[2].coefficient(0) == fraction(1, 24));
  CHECK(fp[4].coefficient(2) == fraction(1, 1152));
  CHECK(fp[4].coefficient(1) == fraction(1, 480));
  CHECK(fp[4].coefficient(0) == fraction(7, 5760));

  auto two = one_part_F_series(2, M(2, {}), 2);
  CHECK(two[2].coefficient(0) == fraction(1, 48));
  for (int a = 1; a <= 5; ++a) CHECK(one_part_F_series(a, M(a, {}), 0)[0].coefficient(0) == fraction(1, a));

  CHECK(hodge_integral_one_part(1, 1, 1, M(1, {})) == fraction(1, 24));
  CHECK(hodge_integral_one_part(1, 0, 1, M(1, {})) == fraction(1, 24));
  CHECK(hodge_integral_one_part(1, 0, 2, M(2, {})) == fraction(1, 48));
  CHECK_THROWS_AS(hodge_integral_one_part(0, 0, 1, M(1, {})), InvalidInput);
  CHECK_THROWS_AS(one_part_F_series(2, M(2, {}), 3), InvalidInput);
  CHECK_THROWS_AS(one_part_F_series(3, M(3, {2, 2}), 2), ConditionViolation);

  // z = 0 keeps only lambda_g, which lives on the trivial-monodromy component
  for (int a = 1; a <= 3; ++a) {
    auto s = one_part_F_series(a, M(a, {}), 6);
    auto base = one_part_F_series(1, M(1, {}), 6);
    for (int j = 0; j <= 6; j += 2) CHECK(s[j].coefficient(0) == base[j].coefficient(0) / a);
  }
}

TEST_CASE("series coefficients vanish outside the geometric range") {
  const int g_max = 3;
  for (int a = 1; a <= 4; ++a) {
    for (const auto& gamma : gamma_multisets(a, 3 * a, 4)) {
      if (!bounded(a, gamma)) continue;
      const auto s = one_part_F_series(a, M(a, gamma), 2 * g_max);
      const int n = static_cast<int>(gamma.size());
      const int floor_s = std::accumulate(gamma.begin(), gamma.end(), 0) / a;
      for (int g = 0; g <= g_max; ++g) {
        const auto& c = s[2 * g];
        if (c.is_zero()) continue;
        CHECK(c.max_degree() <= g);
        CHECK(c.min_degree() >= -floor_s);
        // stable spaces only: the unstable genus-0 constants are 1/a
        if (2 * g - 2 + n + 1 > 0) CHECK(2 * g - 2 + n + c.min_degree() >= 0);
        if (!gamma.empty()) {
          // lambda_{g-l} dies above the rank on the nontrivial component
          const int d = a * (floor_s + 1) + (std::accumulate(gamma.begin(), gamma.end(), 0) % a);
          const int rank = rank_EU(g, a, M(a, gamma), P({d}), false);
          for (const auto& [l, v] : c.terms()) CHECK(g - l <= rank);
        }
      }
    }
  }
}

TEST_CASE("one-part integrals reproduce the Hurwitz inversion") {
  for (int a = 1; a <= 3; ++a) {
    for (int d = 1; d <= 6; ++d) {
      for (const auto& gamma : gamma_multisets(a, d, d)) {
        const int sum = std::accumulate(gamma.begin(), gamma.end(), 0);
        if ((d - sum) % a != 0 || !bounded(a, gamma)) continue;
        const int n = static_cast<int>(gamma.size());
        const auto series = one_part_F_series(a, M(a, gamma), 4);
        for (int g = 0; g <= 2; ++g) {
          Rational assembled = 0;
          for (const auto& [l, c] : series[2 * g].terms()) {
            assembled += power(Rational(-a), g - l) * power(Rational(d), 2 * g - 2 + n + l) * c;
          }
          CAPTURE(a);
          CAPTURE(d);
          CAPTURE(g);
          CAPTURE(M(a, gamma).to_string());
          CHECK(integral(g, a, gamma, {d}) == assembled);
        }
      }
    }
  }
}

TEST_CASE("a = 1 reproduces known intersection numbers") {
  for (int d = 1; d <= 7; ++d) {
    for (const auto& mu : partitions_of(d)) {
      std::vector<int> parts(mu.parts().begin(), mu.parts().end());
      // genus 0: (mu_1 + ... + mu_l)^{l-3}
      CHECK(integral(0, 1, {}, parts) == power(Rational(d), mu.length() - 3));
      if (mu.length() == 1) CHECK(integral(1, 1, {}, parts) == fraction(d - 1, 24));
      if (mu.length() == 2) {
        const int x = mu[0], y = mu[1];
        CHECK(integral(1, 1, {}, parts) == fraction(x * x + x * y + y * y - x - y, 24));
      }
      if (mu.length() == 1) {
        Rational expected = Rational(d * d * d * d) / 1152 - Rational(d * d * d) / 480 + Rational(7 * d * d) / 5760;
        CHECK(integral(2, 1, {}, parts) == expected);
      }
    }
  }
}

TEST_CASE("invariant under reordering gamma") {
  for (int a = 2; a <= 4; ++a) {
    for (const auto& gamma : gamma_multisets(a, 6, 4)) {
      if (gamma.size() < 2 || !bounded(a, gamma)) continue;
      const int sum = std::accumulate(gamma.begin(), gamma.end(), 0);
      for (int d = std::max(1, sum); d <= sum + 2 * a; ++d) {
        if ((d - sum) % a != 0) continue;
        for (const auto& mu : partitions_of(d)) {
          if (mu.length() > 3) continue;
          std::vector<int> parts(mu.parts().begin(), mu.parts().end());
          auto perm = gamma;
          std::reverse(perm.begin(), perm.end());
          std::reverse(parts.begin(), parts.end());
          CHECK(integral(1, a, gamma, std::vector<int>(mu.parts().begin(), mu.parts().end())) ==
                integral(1, a, perm, parts));
        }
      }
    }
  }
}

TEST_CASE("disconnected integrals factor over components") {
  // sum over set partitions of the points and over genus splits
  auto by_components = [](int g, int a, const std::vector<int>& mu) {
    const int n = static_cast<int>(mu.size());
    std::function<Rational(unsigned, int)> rec = [&](unsigned remaining, int euler) -> Rational {
      if (remaining == 0) return euler == 0 ? 1 : 0;
      const int anchor = __builtin_ctz(remaining);
      const unsigned others = remaining & ~(1u << anchor);
      Rational total = 0;
      for (unsigned sub = others;; sub = (sub - 1) & others) {
        const unsigned block = sub | (1u << anchor);
        std::vector<int> parts;
        int degree = 0;
        for (int i = 0; i < n; ++i) {
          if (block & (1u << i)) {
            parts.push_back(mu[static_cast<std::size_t>(i)]);
            degree += mu[static_cast<std::size_t>(i)];
          }
        }
        if (degree % a == 0) {
          const unsigned rest = remaining & ~block;
          for (int gi = 0; 2 * gi - 2 <= euler + 2 * __builtin_popcount(rest); ++gi) {
            Rational inner = integral(gi, a, {}, parts);
            if (inner != 0) total += inner * rec(rest, euler - (2 * gi - 2));
          }
        }
        if (sub == 0) break;
      }
      return total;
    };
    return rec((1u << n) - 1, 2 * g - 2);
  };
  for (int a = 1; a <= 3; ++a) {
    for (int d = a; d <= 5; d += a) {
      for (const auto& mu : partitions_of(d)) {
        std::vector<int> parts(mu.parts().begin(), mu.parts().end());
        for (int g = -2; g <= 2; ++g) {
          CAPTURE(a);
          CAPTURE(g);
          CAPTURE(mu.to_string());
          auto r = combined_integral_Za({g, a, M(a, {}), mu, true});
          CHECK(r.value == by_components(g, a, parts));
        }
      }
    }
  }
}

TEST_CASE("abelian integrals") {
  auto G = FiniteAbelianGroup::parse("2x2");
  AbelianCharacter proj{G, {1, 0}};
  CHECK(combined_integral_abelian(1, G, proj, {{{1, 0}, 1}, {{1, 0}, 1}}) == fraction(1, 6));
  CHECK(combined_integral_abelian(1, G, proj, {{{1, 0}, 1}}) == 0);
  CHECK(combined_integral_abelian(1, G, proj, {{{1, 1}, 1}, {{1, 0}, 1}}) == 0);
  CHECK_THROWS_AS(combined_integral_abelian(1, G, proj, {{{0, 1}, 1}, {{0, 1}, 1}}), InvalidInput);
  CHECK_THROWS_AS(combined_integral_abelian(1, G, proj, {{{0, 1}, 0}, {{1, 0}, 1}}), InvalidInput);

  // faithful characters of Z_a give the Z_a integral
  for (int a = 2; a <= 4; ++a) {
    FiniteAbelianGroup Z({a});
    AbelianCharacter U{Z, {1}};
    for (int d = 1; d <= 5; ++d) {
      for (const auto& mu : partitions_of(d)) {
        for (int c = 0; c < a; ++c) {
          std::vector<AbelianPoint> pts;
          std::vector<int> gamma;
          if (c) {
            pts.push_back({{c}, 0});
            gamma.push_back(c);
          }
          for (int m : mu.parts()) pts.push_back({{-m}, m});
          if ((d - c) % a != 0) continue;
          for (int g = 0; g <= 1; ++g) {
            std::vector<int> parts(mu.parts().begin(), mu.parts().end());
            IntegralQuery q{g, a, M(a, gamma), mu, false};
            auto flags = condition_flags(q.gamma, mu);
            if (!(flags.non_negative && flags.bounded)) continue;
            CHECK(combined_integral_abelian(g, Z, U, pts) == integral(g, a, gamma, parts));
          }
          if (c == 0) {
            for (int g = -1; g <= 1; ++g) {
              CHECK(combined_integral_abelian(g, Z, U, pts, true) ==
                    combined_integral_Za({g, a, M(a, {}), mu, true}).value);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("wreath and Hodge sides agree") {
  auto G = FiniteAbelianGroup::parse("2x2");
  AbelianCharacter proj{G, {1, 0}};
  auto rt = theorem5_roundtrip(0, G, proj, WeightedPartition::parse("2:0.0", 2));
  CHECK(rt.lhs == rt.rhs);
  CHECK(rt.lhs == wreath_hurwitz_bruteforce(0, analyze_character(G, proj).kernel, empty_plus({0, 0}, 2, 2, analyze_character(G, proj).kernel),
                                            WeightedPartition::parse("2:0.0", 2)));

  FiniteAbelianGroup Z4({4});
  auto z4 = theorem5_roundtrip(1, Z4, {Z4, {1}}, WeightedPartition::parse("2:0,2:0", 1));
  CHECK(z4.lhs == z4.rhs);
  CHECK(z4.lhs != 0);

  // K trivial: the plain Z_a inversion
  FiniteAbelianGroup Z2({2});
  auto plain = theorem5_roundtrip(1, Z2, {Z2, {1}}, WeightedPartition::parse("1:0,1:0", 1));
  CHECK(plain.lhs == connected_double_hurwitz(1, P({2}), P({1, 1})));
  CHECK(plain.lhs == plain.rhs);

  // parity failure: weights sum to a nonzero kernel element
  auto bad = theorem5_roundtrip(0, G, proj, WeightedPartition::parse("1:0.1,1:0.0", 2));
  CHECK(bad.lhs == 0);
  CHECK(bad.rhs == 0);
}

TEST_CASE("correspondence sweep over small groups and characters") {
  for (const char* name : {"2", "3", "4", "6", "2x2", "2x4"}) {
    auto G = FiniteAbelianGroup::parse(name);
    std::vector<std::vector<int>> characters;
    for (const auto& e : G.elements()) characters.push_back(e);
    for (const auto& exps : characters) {
      AbelianCharacter R{G, exps};
      auto an = analyze_character(G, R);
      for (int d = an.a; d <= 4; d += an.a) {
        for (const auto& mu : weighted_partitions(d, an.kernel)) {
          for (int g = 0; g <= 1; ++g) {
            auto rt = theorem5_roundtrip(g, G, R, mu);
            CAPTURE(name);
            CAPTURE(mu.to_string());
            CHECK(rt.lhs == rt.rhs);
          }
          for (int g = -1; g <= 1; ++g) {
            auto rt = theorem5_roundtrip(g, G, R, mu, true);
            CHECK(rt.lhs == rt.rhs);
          }
        }
      }
    }
  }
}
