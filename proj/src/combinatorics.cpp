#include "hhodge/combinatorics.hpp"

#include "hhodge/errors.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>

namespace hhodge {

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int value = 0;
  auto trimmed = s;
  while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
  while (!trimmed.empty() && trimmed.back() == ' ') trimmed.remove_suffix(1);
  auto [ptr, ec] = std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), value);
  if (trimmed.empty() || ec != std::errc{} || ptr != trimmed.data() + trimmed.size()) {
    throw InvalidInput("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

struct PartitionList {
  std::vector<Partition> list;
  std::map<Partition, std::size_t> index;
};

std::mutex partitions_mutex;
std::map<int, std::unique_ptr<PartitionList>> partitions_memo;

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    prefix.push_back(k);
    generate(remaining - k, k, prefix, out);
    prefix.pop_back();
  }
}

const PartitionList& partition_list(int d) {
  if (d < 1) throw InvalidInput("partitions_of requires d >= 1, got " + std::to_string(d));
  std::lock_guard lock(partitions_mutex);
  auto& slot = partitions_memo[d];
  if (!slot) {
    auto entry = std::make_unique<PartitionList>();
    std::vector<int> prefix;
    generate(d, d, prefix, entry->list);
    for (std::size_t i = 0; i < entry->list.size(); ++i) entry->index.emplace(entry->list[i], i);
    slot = std::move(entry);
  }
  return *slot;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw InvalidInput("partition parts must be positive, got " + std::to_string(p));
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  for (auto piece : split(text, ',')) parts.push_back(parse_int(piece, "partition part"));
  return Partition(std::move(parts));
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int p : parts_) ++m[p];
  return m;
}

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

PartitionStats partition_stats(const Partition& p) {
  PartitionStats s{1, 1, p.multiplicities()};
  for (auto [k, m] : s.multiplicities) {
    BigInt mf = factorial(m);
    BigInt kp;
    mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
    s.aut_order *= mf;
    s.z_order *= kp * mf;
  }
  return s;
}

BigInt automorphism_order(std::span<const int> values) {
  std::map<int, int> counts;
  for (int v : values) ++counts[v];
  BigInt out = 1;
  for (auto [v, m] : counts) out *= factorial(m);
  return out;
}

const std::vector<Partition>& partitions_of(int d) { return partition_list(d).list; }

std::size_t partition_index(const Partition& p) {
  const auto& entry = partition_list(p.size());
  return entry.index.at(p);
}

MonodromyVector::MonodromyVector(int modulus, std::vector<int> entries)
    : modulus_(modulus), entries_(std::move(entries)) {
  if (modulus_ < 1) throw InvalidInput("modulus must be >= 1");
  for (int& e : entries_) e = ((e % modulus_) + modulus_) % modulus_;
}

MonodromyVector MonodromyVector::parse(std::string_view text) {
  if (!text.starts_with("a=")) throw InvalidInput("monodromy vector must start with 'a=': '" + std::string(text) + "'");
  auto rest = text.substr(2);
  auto semi = rest.find(';');
  int a = parse_int(rest.substr(0, semi), "modulus");
  std::vector<int> entries;
  if (semi != std::string_view::npos) {
    for (auto piece : split(rest.substr(semi + 1), ',')) entries.push_back(parse_int(piece, "monodromy entry"));
  }
  return MonodromyVector(a, std::move(entries));
}

long MonodromyVector::sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0L); }

bool MonodromyVector::all_nontrivial() const {
  return std::none_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

void MonodromyVector::require_nontrivial() const {
  if (!all_nontrivial()) throw InvalidInput("monodromy entries must be nontrivial: " + to_string());
}

std::string MonodromyVector::to_string() const {
  std::string out = "a=" + std::to_string(modulus_) + ";";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out;
}

ConditionFlags condition_flags(const MonodromyVector& gamma, const Partition& mu) {
  const long a = gamma.modulus();
  const long d = mu.size();
  const long n = gamma.length();
  const long excess = d - gamma.sum();
  ConditionFlags f;
  f.parity = excess % a == 0;
  f.non_negative = excess >= 0;
  f.negative = excess < 0;
  f.bounded = true;
  auto e = gamma.entries();
  for (std::size_t i = 0; i < e.size() && f.bounded; ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (e[i] + e[j] > a) {
        f.bounded = false;
        break;
      }
    }
  }
  // d - n - excess/a < 0, multiplied through by a > 0
  f.strongly_negative = a * (d - n) - excess < 0;
  return f;
}

Partition gamma_plus(const MonodromyVector& gamma, int d) {
  const long excess = d - gamma.sum();
  if (excess % gamma.modulus() != 0) throw ConditionViolation("gamma_plus: parity condition fails");
  if (excess < 0) throw ConditionViolation("gamma_plus: non-negativity condition fails");
  std::vector<int> parts(gamma.entries().begin(), gamma.entries().end());
  parts.insert(parts.end(), static_cast<std::size_t>(excess / gamma.modulus()), gamma.modulus());
  return Partition(std::move(parts));
}

int ramification_count(int genus, const Partition& nu, const Partition& mu) {
  if (nu.size() != mu.size()) {
    throw InvalidInput("degree mismatch: |nu| = " + std::to_string(nu.size()) + ", |mu| = " + std::to_string(mu.size()));
  }
  return 2 * genus - 2 + nu.length() + mu.length();
}

WeightedPartition::WeightedPartition(std::vector<Entry> entries) : entries_(std::move(entries)) {
  for (const auto& [part, w] : entries_) {
    if (part < 1) throw InvalidInput("weighted partition parts must be positive");
    size_ += part;
  }
  std::sort(entries_.begin(), entries_.end(), [](const Entry& x, const Entry& y) {
    if (x.first != y.first) return x.first > y.first;
    return x.second < y.second;
  });
}

WeightedPartition WeightedPartition::parse(std::string_view text, std::size_t factor_count) {
  std::vector<Entry> entries;
  for (auto piece : split(text, ',')) {
    auto colon = piece.find(':');
    int part = parse_int(piece.substr(0, colon), "weighted part");
    GroupElement w(factor_count, 0);
    if (colon != std::string_view::npos) {
      auto comps = split(piece.substr(colon + 1), '.');
      if (comps.size() != factor_count) {
        throw InvalidInput("weight '" + std::string(piece) + "' needs " + std::to_string(factor_count) + " components");
      }
      for (std::size_t i = 0; i < comps.size(); ++i) w[i] = parse_int(comps[i], "weight component");
    }
    entries.emplace_back(part, std::move(w));
  }
  return WeightedPartition(std::move(entries));
}

Partition WeightedPartition::underlying() const {
  std::vector<int> parts;
  parts.reserve(entries_.size());
  for (const auto& e : entries_) parts.push_back(e.first);
  return Partition(std::move(parts));
}

BigInt WeightedPartition::aut_order() const {
  BigInt out = 1;
  std::size_t i = 0;
  while (i < entries_.size()) {
    std::size_t j = i;
    while (j < entries_.size() && entries_[j] == entries_[i]) ++j;
    out *= factorial(static_cast<long>(j - i));
    i = j;
  }
  return out;
}

std::string WeightedPartition::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(entries_[i].first) + ",";
    const auto& w = entries_[i].second;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (j) out += ".";
      out += std::to_string(w[j]);
    }
    out += ")";
  }
  return out + "}";
}

}  // namespace hhodge
