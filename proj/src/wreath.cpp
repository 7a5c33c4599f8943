#include "hhodge/wreath.hpp"

#include "hhodge/detail/transfer.hpp"
#include "hhodge/errors.hpp"
#include "hhodge/hurwitz.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <tuple>
#include <unordered_map>

namespace hhodge {

namespace {

constexpr long kGroupCeiling = 1000000;

long mod(long x, long n) {
  long r = x % n;
  return r < 0 ? r + n : r;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> cyclic_orders) : orders_(std::move(cyclic_orders)) {
  if (orders_.empty()) throw InvalidInput("a group needs at least one cyclic factor (use 1 for the trivial group)");
  long total = 1;
  for (int n : orders_) {
    if (n < 1) throw InvalidInput("cyclic orders must be >= 1");
    total *= n;
    if (total > kGroupCeiling) throw ResourceLimit("group order exceeds " + std::to_string(kGroupCeiling));
  }
}

FiniteAbelianGroup FiniteAbelianGroup::parse(std::string_view text) {
  std::vector<int> orders;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find('x', start);
    auto piece = text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
    int n = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), n);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size()) {
      throw InvalidInput("malformed group '" + std::string(text) + "', expected e.g. 2x2");
    }
    orders.push_back(n);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return FiniteAbelianGroup(std::move(orders));
}

FiniteAbelianGroup FiniteAbelianGroup::subgroup(const FiniteAbelianGroup& ambient, std::vector<GroupElement> members) {
  FiniteAbelianGroup out(ambient.orders_);
  for (auto& m : members) m = ambient.reduce(std::move(m));
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!std::binary_search(members.begin(), members.end(), ambient.zero())) {
    throw InvalidInput("a subgroup must contain zero");
  }
  out.subgroup_ = true;
  out.members_ = std::move(members);
  return out;
}

long FiniteAbelianGroup::order() const {
  if (subgroup_) return static_cast<long>(members_.size());
  long total = 1;
  for (int n : orders_) total *= n;
  return total;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
  if (subgroup_) return members_;
  std::vector<GroupElement> out;
  GroupElement e = zero();
  while (true) {
    out.push_back(e);
    std::size_t i = orders_.size();
    while (i > 0) {
      --i;
      if (++e[i] < orders_[i]) break;
      e[i] = 0;
      if (i == 0) return out;
    }
  }
}

bool FiniteAbelianGroup::contains(const GroupElement& e) const {
  if (e.size() != orders_.size()) return false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] >= orders_[i]) return false;
  }
  return !subgroup_ || std::binary_search(members_.begin(), members_.end(), e);
}

GroupElement FiniteAbelianGroup::reduce(GroupElement e) const {
  if (e.size() != orders_.size()) {
    throw InvalidInput("group element has " + std::to_string(e.size()) + " components, expected " +
                       std::to_string(orders_.size()));
  }
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<int>(mod(e[i], orders_[i]));
  if (subgroup_ && !std::binary_search(members_.begin(), members_.end(), e)) {
    throw InvalidInput("element is not in the subgroup");
  }
  return e;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& x, const GroupElement& y) const {
  GroupElement out(orders_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(mod(long(x[i]) + y[i], orders_[i]));
  return out;
}

GroupElement FiniteAbelianGroup::negate(const GroupElement& x) const {
  GroupElement out(orders_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(mod(-long(x[i]), orders_[i]));
  return out;
}

GroupElement FiniteAbelianGroup::scale(const GroupElement& x, long n) const {
  GroupElement out(orders_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(mod(mod(n, orders_[i]) * x[i], orders_[i]));
  return out;
}

WeightedPartition FiniteAbelianGroup::normalize(const WeightedPartition& w) const {
  std::vector<WeightedPartition::Entry> entries;
  for (const auto& [part, weight] : w.entries()) entries.emplace_back(part, reduce(weight));
  return WeightedPartition(std::move(entries));
}

std::string FiniteAbelianGroup::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) out += "x";
    out += std::to_string(orders_[i]);
  }
  if (subgroup_) out += " (subgroup of order " + std::to_string(members_.size()) + ")";
  return out;
}

int CharacterAnalysis::phi(const GroupElement& e) const {
  if (e.size() != coefficients.size()) throw InvalidInput("phi: element has the wrong number of components");
  long v = 0;
  for (std::size_t i = 0; i < e.size(); ++i) v = mod(v + coefficients[i] * e[i], lcm);
  return static_cast<int>(v / (lcm / a));
}

CharacterAnalysis analyze_character(const FiniteAbelianGroup& G, const AbelianCharacter& R) {
  if (G.is_subgroup()) throw InvalidInput("analyze_character expects a full product of cyclic groups");
  const auto& orders = G.cyclic_orders();
  if (R.exponents.size() != orders.size()) throw InvalidInput("character needs one exponent per cyclic factor");

  CharacterAnalysis out;
  out.lcm = 1;
  for (int n : orders) out.lcm = std::lcm(out.lcm, static_cast<long>(n));
  // R(e) = exp(2 pi i v(e) / L) with v(e) = sum c_i (L / n_i) e_i; the image
  // is generated by the gcd of those coefficients.
  long g = out.lcm;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    out.coefficients.push_back(mod(static_cast<long>(R.exponents[i]) * (out.lcm / orders[i]), out.lcm));
    g = std::gcd(g, out.coefficients.back());
  }
  out.a = static_cast<int>(out.lcm / g);

  std::vector<GroupElement> kernel;
  bool found = false;
  for (const auto& e : G.elements()) {
    const int p = out.phi(e);
    if (p == 0) kernel.push_back(e);
    if (!found && p == 1 % out.a) {
      out.x = e;
      found = true;
    }
  }
  out.kernel = FiniteAbelianGroup::subgroup(G, std::move(kernel));
  out.k = G.scale(out.x, out.a);
  return out;
}

WreathElement WreathElement::identity(int d, const FiniteAbelianGroup& K) {
  WreathElement w;
  w.weights.assign(static_cast<std::size_t>(d), K.zero());
  w.permutation.resize(static_cast<std::size_t>(d));
  std::iota(w.permutation.begin(), w.permutation.end(), 0);
  return w;
}

WreathElement compose(const WreathElement& x, const WreathElement& y, const FiniteAbelianGroup& K) {
  const std::size_t d = x.permutation.size();
  if (y.permutation.size() != d) throw InvalidInput("compose: elements of different degree");
  WreathElement out;
  out.weights.resize(d);
  out.permutation.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    // s(k')_{s(i)} = k'_i
    const auto si = static_cast<std::size_t>(x.permutation[i]);
    out.weights[si] = K.add(x.weights[si], y.weights[i]);
    out.permutation[i] = x.permutation[static_cast<std::size_t>(y.permutation[i])];
  }
  return out;
}

WreathElement inverse(const WreathElement& x, const FiniteAbelianGroup& K) {
  const std::size_t d = x.permutation.size();
  WreathElement out;
  out.weights.resize(d);
  out.permutation.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto si = static_cast<std::size_t>(x.permutation[i]);
    out.permutation[si] = static_cast<int>(i);
    // (-s^-1(k))_i = -k_{s(i)}
    out.weights[i] = K.negate(x.weights[si]);
  }
  return out;
}

WeightedPartition cycle_type(const WreathElement& w, const FiniteAbelianGroup& K) {
  const std::size_t d = w.permutation.size();
  std::vector<bool> seen(d, false);
  std::vector<WeightedPartition::Entry> entries;
  for (std::size_t i = 0; i < d; ++i) {
    if (seen[i]) continue;
    int len = 0;
    GroupElement sum = K.zero();
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(w.permutation[j])) {
      seen[j] = true;
      ++len;
      sum = K.add(sum, w.weights[j]);
    }
    entries.emplace_back(len, std::move(sum));
  }
  return WeightedPartition(std::move(entries));
}

BigInt wreath_class_size(const WeightedPartition& type, const FiniteAbelianGroup& K) {
  const long k = K.order();
  BigInt centralizer = 1;
  for (const auto& [part, w] : type.entries()) centralizer *= BigInt(part) * BigInt(k);
  centralizer *= type.aut_order();
  BigInt total;
  mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(type.size()));
  return total * factorial(type.size()) / centralizer;
}

std::vector<WeightedPartition> weighted_partitions(int d, const FiniteAbelianGroup& K) {
  const auto elems = K.elements();
  std::vector<WeightedPartition> out;
  for (const auto& p : partitions_of(d)) {
    // weights are non-decreasing within each block of equal parts
    std::vector<WeightedPartition::Entry> entries;
    std::vector<std::size_t> choice;
    const auto parts = p.parts();
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == parts.size()) {
        out.emplace_back(entries);
        return;
      }
      std::size_t lo = (i > 0 && parts[i] == parts[i - 1]) ? choice.back() : 0;
      for (std::size_t c = lo; c < elems.size(); ++c) {
        entries.emplace_back(parts[i], elems[c]);
        choice.push_back(c);
        self(self, i + 1);
        choice.pop_back();
        entries.pop_back();
      }
    };
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

WeightedPartition empty_plus(const GroupElement& k, int d, int a, const FiniteAbelianGroup& K) {
  if (a < 1 || d < 1 || d % a != 0) throw InvalidInput("empty_plus needs a | d");
  const GroupElement w = K.negate(K.reduce(k));
  return WeightedPartition(std::vector<WeightedPartition::Entry>(static_cast<std::size_t>(d / a), {a, w}));
}

Rational degree_rho(long K_order, int g, bool monodromy_sum_zero, int components) {
  if (components < 1) throw InvalidInput("degree_rho needs at least one component");
  if (K_order < 1) throw InvalidInput("degree_rho needs |K| >= 1");
  if (!monodromy_sum_zero) return 0;
  return power(Rational(K_order), 2L * g - 2 + components);
}

namespace {

using Entries = std::vector<WeightedPartition::Entry>;

GroupElement weight_sum(const Entries& e, const FiniteAbelianGroup& K) {
  GroupElement s = K.zero();
  for (const auto& [part, w] : e) s = K.add(s, w);
  return s;
}

Partition underlying(const Entries& e) {
  std::vector<int> parts;
  for (const auto& [part, w] : e) parts.push_back(part);
  return Partition(std::move(parts));
}

/// Connected count with every part labelled, indexed by the branch count.
Rational labelled_connected(const Entries& nu, const Entries& mu, int r, const FiniteAbelianGroup& K) {
  const int twice_g = r + 2 - static_cast<int>(nu.size() + mu.size());
  if (twice_g < 0 || twice_g % 2 != 0) return 0;
  if (K.add(weight_sum(nu, K), weight_sum(mu, K)) != K.zero()) return 0;
  const Partition n = underlying(nu), m = underlying(mu);
  Rational labels(partition_stats(n).aut_order * partition_stats(m).aut_order);
  return degree_rho(K.order(), twice_g / 2, true) * labels * connected_hurwitz_by_branch_count(n, m, r);
}

Entries pick(const Entries& e, unsigned mask, bool inside) {
  Entries out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (static_cast<bool>(mask & (1u << i)) == inside) out.push_back(e[i]);
  }
  return out;
}

int degree_of(const Entries& e) {
  int s = 0;
  for (const auto& [part, w] : e) s += part;
  return s;
}

/// Disconnected labelled count: split off the component through nu[0].
Rational labelled_disconnected(const Entries& nu, const Entries& mu, int r, const FiniteAbelianGroup& K,
                               std::map<std::tuple<Entries, Entries, int>, Rational>& memo) {
  if (nu.empty() && mu.empty()) return r == 0 ? 1 : 0;
  if (nu.empty() || mu.empty() || r < 0) return 0;
  auto key = std::make_tuple(nu, mu, r);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Rational total = 0;
  const unsigned all_nu = (1u << nu.size()) - 1, all_mu = (1u << mu.size()) - 1;
  for (unsigned b = 1; b <= all_nu; b += 2) {
    const Entries nu_in = pick(nu, b, true), nu_out = pick(nu, b, false);
    const int degree = degree_of(nu_in);
    for (unsigned c = 1; c <= all_mu; ++c) {
      const Entries mu_in = pick(mu, c, true);
      if (degree_of(mu_in) != degree) continue;
      const Entries mu_out = pick(mu, c, false);
      for (int r1 = 0; r1 <= r; ++r1) {
        Rational inner = labelled_connected(nu_in, mu_in, r1, K);
        if (inner == 0) continue;
        Rational outer = labelled_disconnected(nu_out, mu_out, r - r1, K, memo);
        if (outer == 0) continue;
        total += Rational(binomial(r, r1)) * inner * outer;
      }
    }
  }
  memo.emplace(std::move(key), total);
  return total;
}

void check_degrees(const WeightedPartition& nu, const WeightedPartition& mu) {
  if (nu.size() != mu.size()) {
    throw InvalidInput("degree mismatch: |nu| = " + std::to_string(nu.size()) + ", |mu| = " + std::to_string(mu.size()));
  }
  if (nu.empty()) throw InvalidInput("wreath Hurwitz numbers need degree d >= 1");
}

}  // namespace

Rational wreath_double_hurwitz(int g, const FiniteAbelianGroup& K, const WeightedPartition& nu_in,
                               const WeightedPartition& mu_in, bool connected) {
  check_degrees(nu_in, mu_in);
  if (connected && g < 0) throw InvalidInput("connected wreath Hurwitz numbers need genus >= 0");
  const WeightedPartition nu = K.normalize(nu_in), mu = K.normalize(mu_in);
  const Partition n = nu.underlying(), m = mu.underlying();
  const int r = ramification_count(g, n, m);
  if (r < 0) return 0;

  if (connected) {
    const Entries a(nu.entries().begin(), nu.entries().end()), b(mu.entries().begin(), mu.entries().end());
    const bool gate = K.add(weight_sum(a, K), weight_sum(b, K)) == K.zero();
    Rational relabel(partition_stats(n).aut_order * partition_stats(m).aut_order);
    relabel /= Rational(nu.aut_order() * mu.aut_order());
    Rational out = degree_rho(K.order(), g, gate) * relabel * connected_double_hurwitz(g, n, m);
    out.canonicalize();
    return out;
  }
  if (nu.length() > 30 || mu.length() > 30) throw ResourceLimit("too many parts for the component splitting");
  std::map<std::tuple<Entries, Entries, int>, Rational> memo;
  const Entries a(nu.entries().begin(), nu.entries().end()), b(mu.entries().begin(), mu.entries().end());
  Rational out = labelled_disconnected(a, b, r, K, memo) / Rational(nu.aut_order() * mu.aut_order());
  out.canonicalize();
  return out;
}

Rational wreath_hurwitz_bruteforce(int g, const FiniteAbelianGroup& K, const WeightedPartition& nu_in,
                                   const WeightedPartition& mu_in, bool connected, long ceiling) {
  check_degrees(nu_in, mu_in);
  if (connected && g < 0) throw InvalidInput("connected wreath Hurwitz numbers need genus >= 0");
  const WeightedPartition nu = K.normalize(nu_in), mu = K.normalize(mu_in);
  const int d = nu.size();
  const long k = K.order();
  long group_order = 1;
  for (int i = 0; i < d; ++i) {
    group_order *= k * (i + 1);
    if (group_order > ceiling) {
      throw ResourceLimit("|K_d| exceeds the brute-force ceiling " + std::to_string(ceiling));
    }
  }
  if (d > detail::BlockCode::kMaxPoints) throw ResourceLimit("too many points for the connectivity tracker");
  const int r = ramification_count(g, nu.underlying(), mu.underlying());
  if (r < 0) return 0;

  // Elements are indexed by (permutation rank, weights in base |K|).
  const auto elems = K.elements();
  std::map<GroupElement, long> elem_index;
  for (std::size_t i = 0; i < elems.size(); ++i) elem_index.emplace(elems[i], static_cast<long>(i));
  std::vector<std::vector<int>> perms;
  std::map<std::vector<int>, long> perm_index;
  for (auto p = WreathElement::identity(d, K).permutation;;) {
    perm_index.emplace(p, static_cast<long>(perms.size()));
    perms.push_back(p);
    if (!std::next_permutation(p.begin(), p.end())) break;
  }
  long weight_count = 1;
  for (int i = 0; i < d; ++i) weight_count *= k;

  auto encode = [&](const WreathElement& w) {
    long code = 0;
    for (int i = d - 1; i >= 0; --i) code = code * k + elem_index.at(w.weights[static_cast<std::size_t>(i)]);
    return perm_index.at(w.permutation) * weight_count + code;
  };
  auto decode = [&](long code) {
    WreathElement w;
    w.permutation = perms[static_cast<std::size_t>(code / weight_count)];
    long rest = code % weight_count;
    for (int i = 0; i < d; ++i) {
      w.weights.push_back(elems[static_cast<std::size_t>(rest % k)]);
      rest /= k;
    }
    return w;
  };

  // the class T of weighted transpositions (k at i, -k at j)
  std::vector<WreathElement> transpositions;
  std::vector<std::pair<int, int>> swapped;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      for (const auto& e : elems) {
        WreathElement t = WreathElement::identity(d, K);
        std::swap(t.permutation[static_cast<std::size_t>(i)], t.permutation[static_cast<std::size_t>(j)]);
        t.weights[static_cast<std::size_t>(i)] = e;
        t.weights[static_cast<std::size_t>(j)] = K.negate(e);
        transpositions.push_back(std::move(t));
        swapped.emplace_back(i, j);
      }
    }
  }

  using State = std::pair<long, std::uint64_t>;
  std::map<State, detail::Count> state;
  for (long code = 0; code < group_order; ++code) {
    WreathElement w = decode(code);
    if (cycle_type(w, K) != nu) continue;
    state[{code, connected ? detail::cycle_blocks(w.permutation) : 0}] += 1;
  }
  for (int step = 0; step < r; ++step) {
    std::map<State, detail::Count> next;
    for (const auto& [s, count] : state) {
      const WreathElement w = decode(s.first);
      for (std::size_t t = 0; t < transpositions.size(); ++t) {
        std::uint64_t blocks = s.second;
        if (connected) blocks = detail::BlockCode::merge(blocks, d, swapped[t].first, swapped[t].second);
        next[{encode(compose(w, transpositions[t], K)), blocks}] += count;
      }
    }
    state = std::move(next);
  }
  detail::Count hits = 0;
  for (const auto& [s, count] : state) {
    if (connected && !detail::BlockCode::single_block(s.second, d)) continue;
    if (cycle_type(inverse(decode(s.first), K), K) != mu) continue;
    hits += count;
  }
  Rational out(detail::to_bigint(hits), BigInt(group_order));
  out.canonicalize();
  return out;
}

}  // namespace hhodge
