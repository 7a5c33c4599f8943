#include "doctest.h"

#include "hhodge/errors.hpp"
#include "hhodge/hurwitz.hpp"
#include "hhodge/wreath.hpp"

#include <map>
#include <numeric>
#include <random>

using namespace hhodge;

namespace {

WeightedPartition W(std::string_view text, std::size_t factors = 1) { return WeightedPartition::parse(text, factors); }

WreathElement random_element(int d, const FiniteAbelianGroup& K, std::mt19937& rng) {
  const auto elems = K.elements();
  WreathElement w = WreathElement::identity(d, K);
  std::shuffle(w.permutation.begin(), w.permutation.end(), rng);
  for (auto& k : w.weights) k = elems[std::uniform_int_distribution<std::size_t>(0, elems.size() - 1)(rng)];
  return w;
}

}  // namespace

TEST_CASE("groups and characters") {
  auto G = FiniteAbelianGroup::parse("2x2");
  CHECK(G.order() == 4);
  CHECK(G.elements().size() == 4);
  CHECK(G.add({1, 1}, {1, 0}) == GroupElement{0, 1});
  CHECK_THROWS_AS(FiniteAbelianGroup::parse("2x"), InvalidInput);
  CHECK_THROWS_AS(FiniteAbelianGroup::parse("0"), InvalidInput);

  auto z4 = analyze_character(FiniteAbelianGroup({4}), {FiniteAbelianGroup({4}), {1}});
  CHECK(z4.a == 4);
  CHECK(z4.kernel.order() == 1);
  CHECK(z4.phi(z4.x) == 1);

  auto proj = analyze_character(G, {G, {1, 0}});
  CHECK(proj.a == 2);
  CHECK(proj.kernel.order() == 2);
  CHECK(proj.kernel.contains({0, 1}));
  CHECK_FALSE(proj.kernel.contains({1, 0}));
  CHECK(proj.phi(proj.x) == 1);
  CHECK(proj.kernel.contains(proj.k));

  auto trivial = analyze_character(FiniteAbelianGroup({1}), {FiniteAbelianGroup({1}), {0}});
  CHECK(trivial.a == 1);
  CHECK(trivial.kernel.order() == 1);

  // a non-faithful character of Z_6 with image Z_3
  auto z6 = analyze_character(FiniteAbelianGroup({6}), {FiniteAbelianGroup({6}), {2}});
  CHECK(z6.a == 3);
  CHECK(z6.kernel.order() == 2);
  CHECK(z6.kernel.order() * z6.a == 6);
}

TEST_CASE("cycle types") {
  FiniteAbelianGroup K({2});
  CHECK(cycle_type(WreathElement::identity(2, K), K) == W("1:0,1:0"));
  CHECK(cycle_type({{{1}, {0}}, {1, 0}}, K) == W("2:1"));
  CHECK(cycle_type({{{1}, {1}}, {1, 0}}, K) == W("2:0"));
}

TEST_CASE("composition is associative and inverses work") {
  std::mt19937 rng(7);
  for (int order : {1, 2, 3}) {
    FiniteAbelianGroup K({order});
    for (int d = 1; d <= 4; ++d) {
      for (int trial = 0; trial < 30; ++trial) {
        auto x = random_element(d, K, rng), y = random_element(d, K, rng), z = random_element(d, K, rng);
        CHECK(compose(compose(x, y, K), z, K) == compose(x, compose(y, z, K), K));
        CHECK(compose(x, inverse(x, K), K) == WreathElement::identity(d, K));
        CHECK(compose(inverse(x, K), x, K) == WreathElement::identity(d, K));
        // conjugation invariance of the cycle type
        CHECK(cycle_type(compose(compose(y, x, K), inverse(y, K), K), K) == cycle_type(x, K));
      }
    }
  }
}

TEST_CASE("class sizes add up to the group order") {
  for (int order : {1, 2, 3}) {
    FiniteAbelianGroup K({order});
    for (int d = 1; d <= 3; ++d) {
      // direct enumeration of K_d
      std::map<WeightedPartition, long> counted;
      const auto elems = K.elements();
      std::vector<int> perm(static_cast<std::size_t>(d));
      std::iota(perm.begin(), perm.end(), 0);
      do {
        long total = 1;
        for (int i = 0; i < d; ++i) total *= order;
        for (long code = 0; code < total; ++code) {
          WreathElement w{{}, perm};
          long rest = code;
          for (int i = 0; i < d; ++i, rest /= order) w.weights.push_back(elems[static_cast<std::size_t>(rest % order)]);
          ++counted[cycle_type(w, K)];
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      const auto classes = weighted_partitions(d, K);
      CHECK(classes.size() == counted.size());
      BigInt sum = 0;
      for (const auto& c : classes) {
        CHECK(wreath_class_size(c, K) == counted.at(c));
        sum += wreath_class_size(c, K);
      }
      BigInt expected = factorial(d);
      for (int i = 0; i < d; ++i) expected *= order;
      CHECK(sum == expected);
    }
  }
}

TEST_CASE("empty_plus and degree_rho") {
  CHECK(empty_plus({0}, 4, 2, FiniteAbelianGroup({2})) == W("2:0,2:0"));
  CHECK(empty_plus({1}, 4, 2, FiniteAbelianGroup({2})) == W("2:1,2:1"));
  CHECK(empty_plus({1}, 3, 3, FiniteAbelianGroup({3})) == W("3:2"));
  CHECK_THROWS_AS(empty_plus({0}, 3, 2, FiniteAbelianGroup({2})), InvalidInput);

  CHECK(degree_rho(2, 1, true) == 2);
  CHECK(degree_rho(2, 0, true) == fraction(1, 2));
  CHECK(degree_rho(3, 2, false) == 0);
  CHECK(degree_rho(2, 0, true, 2) == 1);
  CHECK(degree_rho(5, 1, true, 3) == 125);
}

TEST_CASE("wreath Hurwitz worked values") {
  FiniteAbelianGroup K({2});
  CHECK(wreath_double_hurwitz(0, K, W("2:0"), W("2:0")) == fraction(1, 4));
  CHECK(wreath_double_hurwitz(0, K, W("2:1"), W("2:0")) == 0);
  CHECK(wreath_double_hurwitz(0, K, W("2:1"), W("2:1")) == fraction(1, 4));
  CHECK(wreath_hurwitz_bruteforce(0, K, W("2:0"), W("2:0")) == fraction(1, 4));
  CHECK(wreath_hurwitz_bruteforce(0, K, W("2:1"), W("2:0")) == 0);
  CHECK_THROWS_AS(wreath_double_hurwitz(0, K, W("2:0"), W("1:0")), InvalidInput);
  CHECK_THROWS_AS(wreath_double_hurwitz(-1, K, W("2:0"), W("2:0")), InvalidInput);
  CHECK_THROWS_AS(wreath_hurwitz_bruteforce(0, K, W("8"), W("8")), ResourceLimit);
}

TEST_CASE("trivial K recovers the symmetric-group oracle") {
  FiniteAbelianGroup K({1});
  for (int d = 1; d <= 4; ++d) {
    for (const auto& nu : partitions_of(d)) {
      for (const auto& mu : partitions_of(d)) {
        for (int g = 0; g <= 1; ++g) {
          auto wn = WeightedPartition::parse(nu.to_string().substr(1, nu.to_string().size() - 2), 1);
          auto wm = WeightedPartition::parse(mu.to_string().substr(1, mu.to_string().size() - 2), 1);
          for (bool connected : {true, false}) {
            CHECK(wreath_hurwitz_bruteforce(g, K, wn, wm, connected) == brute_force_hurwitz({g, nu, mu, connected}));
          }
        }
      }
    }
  }
}

TEST_CASE("reduction agrees with the brute-force oracle") {
  for (const char* group : {"1", "2"}) {
    auto K = FiniteAbelianGroup::parse(group);
    for (int d = 1; d <= 3; ++d) {
      const auto classes = weighted_partitions(d, K);
      for (const auto& nu : classes) {
        for (const auto& mu : classes) {
          for (int g = 0; g <= 2; ++g) {
            for (bool connected : {true, false}) {
              CAPTURE(g);
              CAPTURE(connected);
              CAPTURE(nu.to_string());
              CAPTURE(mu.to_string());
              CHECK(wreath_double_hurwitz(g, K, nu, mu, connected) ==
                    wreath_hurwitz_bruteforce(g, K, nu, mu, connected));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("reduction agrees with the oracle on larger groups") {
  for (const char* group : {"3", "2x2"}) {
    auto K = FiniteAbelianGroup::parse(group);
    for (int d = 1; d <= 3; ++d) {
      const auto classes = weighted_partitions(d, K);
      for (const auto& nu : classes) {
        for (const auto& mu : classes) {
          for (int g = -1; g <= 1; ++g) {
            CHECK(wreath_double_hurwitz(g, K, nu, mu, false) == wreath_hurwitz_bruteforce(g, K, nu, mu, false));
            if (g >= 0) CHECK(wreath_double_hurwitz(g, K, nu, mu) == wreath_hurwitz_bruteforce(g, K, nu, mu));
          }
        }
      }
    }
  }
}

TEST_CASE("subgroup kernels behave like their isomorphism type") {
  auto G = FiniteAbelianGroup::parse("2x2");
  auto K = analyze_character(G, {G, {1, 0}}).kernel;  // {(0,0),(0,1)}
  auto nu = W("2:0.1", 2), mu = W("2:0.1", 2);
  CHECK(wreath_double_hurwitz(0, K, W("2:0.0", 2), W("2:0.0", 2), true) == fraction(1, 4));
  CHECK(wreath_double_hurwitz(0, K, nu, mu, true) == wreath_hurwitz_bruteforce(0, K, nu, mu, true));
  CHECK_THROWS_AS(wreath_double_hurwitz(0, K, W("2:1.0", 2), W("2:1.0", 2)), InvalidInput);
}
