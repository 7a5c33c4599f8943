#include "hhodge/characters.hpp"

#include "hhodge/errors.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

namespace hhodge {

namespace {

std::atomic<int> ceiling{30};

std::mutex memo_mutex;
std::map<int, std::shared_ptr<const CharacterTable>> table_memo;
std::map<Partition, std::shared_ptr<const std::vector<std::int64_t>>> column_memo;

/// First-column hook removal on beta-sets.
///
/// A partition with l parts maps to the beta-set {lambda_i + l - i}. Removing
/// a border strip of length k moves one bead b to the free slot b - k; the
/// strip's height minus one equals the number of beads strictly between the
/// two slots, which gives the sign.
template <typename F>
void for_each_border_strip(const std::vector<int>& lambda, int k, F&& emit) {
  const int l = static_cast<int>(lambda.size());
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = lambda[i] + (l - 1 - i);
  // beta is strictly decreasing
  for (int i = 0; i < l; ++i) {
    const int target = beta[i] - k;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int j = 0; j < l; ++j) {
      if (beta[j] < beta[i] && beta[j] > target) ++between;
    }
    std::vector<int> moved = beta;
    moved[i] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> shape;
    for (int j = 0; j < l; ++j) {
      int part = moved[j] - (l - 1 - j);
      if (part > 0) shape.push_back(part);
    }
    emit(shape, (between % 2) ? -1 : 1);
  }
}

/// One column of the table, by peeling the parts of mu from the largest down.
/// Level i holds chi_rho(mu_i, ..., mu_m) for all rho |- mu_i + ... + mu_m.
std::vector<std::int64_t> compute_column(const Partition& mu) {
  const int m = mu.length();
  std::vector<int> suffix(m + 1, 0);
  for (int i = m - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + mu[i];

  std::map<std::vector<int>, std::int64_t> next;
  next[{}] = 1;
  for (int i = m - 1; i >= 0; --i) {
    std::map<std::vector<int>, std::int64_t> level;
    for (const auto& rho : partitions_of(suffix[i])) {
      std::vector<int> shape(rho.parts().begin(), rho.parts().end());
      std::int64_t total = 0;
      for_each_border_strip(shape, mu[i], [&](const std::vector<int>& rest, int sign) {
        auto it = next.find(rest);
        if (it != next.end()) total += sign * it->second;
      });
      level.emplace(std::move(shape), total);
    }
    next = std::move(level);
  }
  std::vector<std::int64_t> out;
  const auto& lambdas = partitions_of(mu.size());
  out.reserve(lambdas.size());
  for (const auto& lambda : lambdas) {
    out.push_back(next.at(std::vector<int>(lambda.parts().begin(), lambda.parts().end())));
  }
  return out;
}

void check_ceiling(int d) {
  if (d > ceiling.load()) {
    throw ResourceLimit("degree " + std::to_string(d) + " exceeds the character table ceiling " +
                        std::to_string(ceiling.load()));
  }
}

}  // namespace

CharacterTable::CharacterTable(int degree, std::vector<std::int64_t> values)
    : degree_(degree), n_(partitions_of(degree).size()), values_(std::move(values)) {
  if (values_.size() != n_ * n_) throw InvalidInput("character table has the wrong number of entries");
}

std::int64_t CharacterTable::value(const Partition& lambda, const Partition& mu) const {
  if (lambda.size() != degree_ || mu.size() != degree_) throw InvalidInput("partition degree differs from the table degree");
  return at(partition_index(lambda), partition_index(mu));
}

std::vector<std::int64_t> CharacterTable::column(std::size_t mu) const {
  std::vector<std::int64_t> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = at(i, mu);
  return out;
}

std::int64_t character_value(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw InvalidInput("character_value: degree mismatch between " + lambda.to_string() + " and " + mu.to_string());
  }
  if (lambda.empty()) return 1;
  return (*character_column(mu))[partition_index(lambda)];
}

std::shared_ptr<const std::vector<std::int64_t>> character_column(const Partition& mu) {
  if (mu.empty()) throw InvalidInput("character_column: empty class");
  check_ceiling(mu.size());
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = column_memo.find(mu); it != column_memo.end()) return it->second;
    if (auto it = table_memo.find(mu.size()); it != table_memo.end()) {
      auto col = std::make_shared<const std::vector<std::int64_t>>(it->second->column(partition_index(mu)));
      column_memo.emplace(mu, col);
      return col;
    }
  }
  auto col = std::make_shared<const std::vector<std::int64_t>>(compute_column(mu));
  std::lock_guard lock(memo_mutex);
  return column_memo.emplace(mu, col).first->second;
}

CharacterTable compute_character_table(int d, unsigned threads) {
  check_ceiling(d);
  const auto& classes = partitions_of(d);
  const std::size_t n = classes.size();
  std::vector<std::int64_t> values(n * n);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < n; j = next++) {
      auto col = compute_column(classes[j]);
      for (std::size_t i = 0; i < n; ++i) values[i * n + j] = col[i];
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return CharacterTable(d, std::move(values));
}

std::shared_ptr<const CharacterTable> character_table(int d, unsigned threads) {
  if (d < 1) throw InvalidInput("character_table requires d >= 1");
  check_ceiling(d);
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = table_memo.find(d); it != table_memo.end()) return it->second;
  }
  auto table = std::make_shared<const CharacterTable>(compute_character_table(d, threads));
  std::lock_guard lock(memo_mutex);
  return table_memo.emplace(d, table).first->second;
}

void seed_character_table(std::shared_ptr<const CharacterTable> table) {
  std::lock_guard lock(memo_mutex);
  table_memo[table->degree()] = std::move(table);
}

void clear_character_memo() {
  std::lock_guard lock(memo_mutex);
  table_memo.clear();
  column_memo.clear();
}

int degree_ceiling() { return ceiling.load(); }
void set_degree_ceiling(int d) { ceiling.store(d); }

BigInt dimension(const Partition& lambda) {
  if (lambda.empty()) return 1;
  std::vector<int> ones(static_cast<std::size_t>(lambda.size()), 1);
  return BigInt(static_cast<long>(character_value(lambda, Partition(std::move(ones)))));
}

BigInt hook_length_dimension(const Partition& lambda) {
  const auto parts = lambda.parts();
  BigInt hooks = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int j = 0; j < parts[i]; ++j) {
      int arm = parts[i] - j - 1;
      int leg = 0;
      for (std::size_t k = i + 1; k < parts.size() && parts[k] > j; ++k) ++leg;
      hooks *= arm + leg + 1;
    }
  }
  return factorial(lambda.size()) / hooks;
}

}  // namespace hhodge
