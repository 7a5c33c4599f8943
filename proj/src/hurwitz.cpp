#include "hhodge/hurwitz.hpp"

#include "hhodge/characters.hpp"
#include "hhodge/detail/transfer.hpp"
#include "hhodge/errors.hpp"
#include "hhodge/series.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>
#include <unordered_map>

namespace hhodge {

namespace {

void require_same_degree(const Partition& nu, const Partition& mu) {
  if (nu.size() != mu.size()) {
    throw InvalidInput("degree mismatch: |nu| = " + std::to_string(nu.size()) + ", |mu| = " + std::to_string(mu.size()));
  }
  if (nu.empty()) throw InvalidInput("Hurwitz numbers need degree d >= 1");
}

Partition sub_partition(const Partition& p, unsigned mask) {
  std::vector<int> parts;
  for (int i = 0; i < p.length(); ++i) {
    if (mask & (1u << i)) parts.push_back(p[static_cast<std::size_t>(i)]);
  }
  return Partition(std::move(parts));
}

int masked_sum(const Partition& p, unsigned mask) {
  int s = 0;
  for (int i = 0; i < p.length(); ++i) {
    if (mask & (1u << i)) s += p[static_cast<std::size_t>(i)];
  }
  return s;
}

BigInt labelling_factor(const Partition& nu, const Partition& mu) {
  return partition_stats(nu).aut_order * partition_stats(mu).aut_order;
}

/// H^bullet with the preimages of 0 and infinity labelled.
Rational labelled_disconnected(const Partition& nu, const Partition& mu, int r) {
  if (nu.empty() && mu.empty()) return r == 0 ? Rational(1) : Rational(0);
  return Rational(labelling_factor(nu, mu)) * disconnected_hurwitz_by_branch_count(nu, mu, r);
}

using ConnectedKey = std::tuple<Partition, Partition, int>;

Rational labelled_connected(const Partition& nu, const Partition& mu, int r) {
  const int lengths = nu.length() + mu.length();
  if (r < 0 || r < lengths - 2 || (r + lengths) % 2 != 0) return 0;
  if (nu.length() > 30 || mu.length() > 30) throw ResourceLimit("too many parts for the connected extraction");

  thread_local std::map<ConnectedKey, Rational> memo;
  ConnectedKey key{nu, mu, r};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  Rational value = labelled_disconnected(nu, mu, r);
  // Every disconnected cover splits into the component through the anchor
  // (part 0 of nu, the largest) and the rest. Subtract all proper splits.
  const unsigned all_nu = (1u << nu.length()) - 1;
  const unsigned all_mu = (1u << mu.length()) - 1;
  for (unsigned b = 1; b < all_nu; b += 2) {  // odd masks contain the anchor
    const int degree = masked_sum(nu, b);
    const Partition nu_in = sub_partition(nu, b);
    const Partition nu_out = sub_partition(nu, all_nu & ~b);
    for (unsigned c = 1; c < all_mu; ++c) {
      if (masked_sum(mu, c) != degree) continue;
      const Partition mu_in = sub_partition(mu, c);
      const Partition mu_out = sub_partition(mu, all_mu & ~c);
      const int min_r = std::max(0, nu_in.length() + mu_in.length() - 2);
      for (int r1 = min_r; r1 <= r; ++r1) {
        Rational inner = labelled_connected(nu_in, mu_in, r1);
        if (inner == 0) continue;
        Rational outer = labelled_disconnected(nu_out, mu_out, r - r1);
        if (outer == 0) continue;
        value -= Rational(binomial(r, r1)) * inner * outer;
      }
    }
  }
  memo.emplace(std::move(key), value);
  return value;
}

std::vector<int> identity_permutation(int d) {
  std::vector<int> p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

Rational disconnected_hurwitz_by_branch_count(const Partition& nu, const Partition& mu, int r) {
  require_same_degree(nu, mu);
  if (r < 0) return 0;
  const int d = nu.size();
  const auto& lambdas = partitions_of(d);

  auto chi_nu = character_column(nu);
  auto chi_mu = character_column(mu);
  std::vector<BigInt> omega(lambdas.size(), 0);
  if (d >= 2) {
    // central character of the transposition class: |C_T| chi(tau) / f
    std::vector<int> tau_parts(static_cast<std::size_t>(d - 1), 1);
    tau_parts[0] = 2;
    auto chi_tau = character_column(Partition(tau_parts));
    auto chi_id = character_column(Partition(std::vector<int>(static_cast<std::size_t>(d), 1)));
    const BigInt class_size = BigInt(d) * (d - 1) / 2;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      BigInt num = class_size * BigInt(static_cast<long>((*chi_tau)[i]));
      omega[i] = num / BigInt(static_cast<long>((*chi_id)[i]));
    }
  }
  // For d = 1 the transposition sum T is zero, so omega = 0 and only r = 0 survives.

  BigInt total = 0;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    BigInt term = BigInt(static_cast<long>((*chi_nu)[i])) * BigInt(static_cast<long>((*chi_mu)[i]));
    if (term == 0) continue;
    BigInt om;
    mpz_pow_ui(om.get_mpz_t(), omega[i].get_mpz_t(), static_cast<unsigned long>(r));
    total += term * om;
  }
  Rational out(total, partition_stats(nu).z_order * partition_stats(mu).z_order);
  out.canonicalize();
  return out;
}

Rational connected_hurwitz_by_branch_count(const Partition& nu, const Partition& mu, int r) {
  require_same_degree(nu, mu);
  Rational out = labelled_connected(nu, mu, r) / Rational(labelling_factor(nu, mu));
  out.canonicalize();
  return out;
}

Rational disconnected_double_hurwitz(int genus, const Partition& nu, const Partition& mu) {
  return disconnected_hurwitz_by_branch_count(nu, mu, ramification_count(genus, nu, mu));
}

Rational connected_double_hurwitz(int genus, const Partition& nu, const Partition& mu) {
  if (genus < 0) throw InvalidInput("connected Hurwitz numbers need genus >= 0");
  return connected_hurwitz_by_branch_count(nu, mu, ramification_count(genus, nu, mu));
}

Rational double_hurwitz(const HurwitzQuery& q) {
  return q.connected ? connected_double_hurwitz(q.genus, q.nu, q.mu) : disconnected_double_hurwitz(q.genus, q.nu, q.mu);
}

Rational brute_force_hurwitz(const HurwitzQuery& q, int degree_ceiling) {
  require_same_degree(q.nu, q.mu);
  if (q.connected && q.genus < 0) throw InvalidInput("connected Hurwitz numbers need genus >= 0");
  const int d = q.nu.size();
  if (d > degree_ceiling || d > 8) {
    throw ResourceLimit("brute-force oracle limited to d <= " + std::to_string(std::min(degree_ceiling, 8)));
  }
  const int r = ramification_count(q.genus, q.nu, q.mu);
  if (r < 0) return 0;

  std::vector<std::vector<int>> perms;
  std::map<std::vector<int>, int> index;
  for (auto p = identity_permutation(d);;) {
    index.emplace(p, static_cast<int>(perms.size()));
    perms.push_back(p);
    if (!std::next_permutation(p.begin(), p.end())) break;
  }
  std::vector<std::pair<int, int>> transpositions;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) transpositions.emplace_back(i, j);
  }
  // times[p][t] = index of p composed with transposition t
  std::vector<std::vector<int>> times(perms.size());
  std::vector<Partition> type(perms.size());
  for (std::size_t p = 0; p < perms.size(); ++p) {
    type[p] = Partition(detail::cycle_lengths(perms[p]));
    for (auto [i, j] : transpositions) {
      auto next = perms[p];
      std::swap(next[static_cast<std::size_t>(i)], next[static_cast<std::size_t>(j)]);
      times[p].push_back(index.at(next));
    }
  }

  auto key = [](std::size_t perm, std::uint64_t blocks) { return (static_cast<std::uint64_t>(perm) << 32) | blocks; };
  std::unordered_map<std::uint64_t, detail::Count> state;
  for (std::size_t p = 0; p < perms.size(); ++p) {
    if (type[p] == q.nu) state[key(p, q.connected ? detail::cycle_blocks(perms[p]) : 0)] += 1;
  }
  for (int step = 0; step < r; ++step) {
    std::unordered_map<std::uint64_t, detail::Count> next;
    for (const auto& [k, count] : state) {
      const std::size_t p = static_cast<std::size_t>(k >> 32);
      const std::uint64_t blocks = k & 0xFFFFFFFFu;
      for (std::size_t t = 0; t < transpositions.size(); ++t) {
        std::uint64_t merged = blocks;
        if (q.connected) merged = detail::BlockCode::merge(blocks, d, transpositions[t].first, transpositions[t].second);
        next[key(static_cast<std::size_t>(times[p][t]), merged)] += count;
      }
    }
    state = std::move(next);
  }
  detail::Count hits = 0;
  for (const auto& [k, count] : state) {
    const std::size_t p = static_cast<std::size_t>(k >> 32);
    if (type[p] != q.mu) continue;  // rho = product^{-1} shares the cycle type
    if (q.connected && !detail::BlockCode::single_block(k & 0xFFFFFFFFu, d)) continue;
    hits += count;
  }
  Rational out(detail::to_bigint(hits), factorial(d));
  out.canonicalize();
  return out;
}

std::vector<Rational> gjv_one_part_check(const Partition& nu, int d, int g_max) {
  if (nu.size() != d) throw InvalidInput("gjv_one_part_check: |nu| != d");
  if (d < 1 || g_max < 0) throw InvalidInput("gjv_one_part_check: need d >= 1 and g_max >= 0");
  const int order = 2 * g_max;
  auto mult = nu.multiplicities();
  mult.try_emplace(1, 0);
  RationalSeries product(order, Rational(1));
  for (auto [k, m] : mult) {
    const int exponent = m - (k == 1 ? 1 : 0);
    if (exponent == 0) continue;
    product = product * pow_series(sinc_series(Rational(k), order), Rational(exponent));
  }
  const Rational aut(partition_stats(nu).aut_order);
  std::vector<Rational> out;
  for (int g = 0; g <= g_max; ++g) {
    const int r = 2 * g - 2 + nu.length() + 1;
    Rational prefactor = Rational(factorial(r)) * power(Rational(d), r - 1) / aut;
    if (g % 2) prefactor = -prefactor;
    Rational value = prefactor * product[2 * g];
    value.canonicalize();
    out.push_back(value);
  }
  return out;
}

}  // namespace hhodge
