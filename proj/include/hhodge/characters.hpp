#pragma once

#include "hhodge/combinatorics.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace hhodge {

/// Irreducible characters of S_d. Rows (lambda) and columns (cycle type mu)
/// both follow the order of partitions_of(d).
///
/// Values fit in int64 for every degree below the default ceiling: each
/// |chi| is bounded by the dimension, itself below sqrt(d!).
class CharacterTable {
 public:
  CharacterTable(int degree, std::vector<std::int64_t> values);

  int degree() const { return degree_; }
  std::size_t rank() const { return n_; }
  const std::vector<Partition>& partitions() const { return partitions_of(degree_); }

  std::int64_t at(std::size_t lambda, std::size_t mu) const { return values_[lambda * n_ + mu]; }
  std::int64_t value(const Partition& lambda, const Partition& mu) const;
  /// Row-major, n x n.
  const std::vector<std::int64_t>& values() const { return values_; }
  std::vector<std::int64_t> column(std::size_t mu) const;

  friend bool operator==(const CharacterTable&, const CharacterTable&) = default;

 private:
  int degree_;
  std::size_t n_;
  std::vector<std::int64_t> values_;
};

/// chi_lambda(mu) by the Murnaghan-Nakayama rule.
std::int64_t character_value(const Partition& lambda, const Partition& mu);

/// chi_lambda(mu) for every lambda |- |mu|, ordered as partitions_of. Memoized.
std::shared_ptr<const std::vector<std::int64_t>> character_column(const Partition& mu);

/// Full table for S_d, memoized per process. Columns are filled by `threads`
/// workers (0 picks the hardware concurrency); the result does not depend on it.
/// Throws ResourceLimit when d exceeds degree_ceiling().
std::shared_ptr<const CharacterTable> character_table(int d, unsigned threads = 0);

/// Builds a table without touching the memo.
CharacterTable compute_character_table(int d, unsigned threads = 0);

/// Installs a table (e.g. from a disk cache) into the process memo.
void seed_character_table(std::shared_ptr<const CharacterTable> table);

/// Drops all memoized tables and columns.
void clear_character_memo();

int degree_ceiling();
void set_degree_ceiling(int d);

/// f^lambda = chi_lambda(1^d).
BigInt dimension(const Partition& lambda);
/// f^lambda = d! / prod(hook lengths).
BigInt hook_length_dimension(const Partition& lambda);

}  // namespace hhodge
