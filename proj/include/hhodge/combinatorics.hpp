#pragma once

#include "hhodge/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hhodge {

/// An integer partition: parts are kept sorted non-increasing.
///
/// The empty partition (d = 0) is representable; it shows up when a
/// partition is split into blocks and one side runs out.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts; throws InvalidInput on a part < 1.
  explicit Partition(std::vector<int> parts);

  /// Parses "3,1,1". The empty string gives the empty partition.
  static Partition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int size() const { return size_; }  ///< d, the sum of the parts
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// k -> m_k for every part k that occurs.
  std::map<int, int> multiplicities() const;
  int multiplicity(int k) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct PartitionStats {
  BigInt aut_order;  ///< prod_k m_k!
  BigInt z_order;    ///< prod_k k^{m_k} m_k!, the centralizer order in S_d
  std::map<int, int> multiplicities;
};

PartitionStats partition_stats(const Partition& p);

/// |Aut| of an arbitrary multiset, e.g. gamma read as an unordered tuple.
BigInt automorphism_order(std::span<const int> values);

/// All partitions of d in reverse-lexicographic order: (d), (d-1,1), ..., (1^d).
/// The list is memoized per d. Throws InvalidInput when d < 1.
const std::vector<Partition>& partitions_of(int d);

/// Position of p inside partitions_of(p.size()).
std::size_t partition_index(const Partition& p);

/// A tuple of residues mod a. Entries are reduced on construction.
class MonodromyVector {
 public:
  MonodromyVector() = default;
  MonodromyVector(int modulus, std::vector<int> entries);

  /// Parses "a=5;1,2,2" (also "a=5" or "a=5;").
  static MonodromyVector parse(std::string_view text);

  int modulus() const { return modulus_; }
  std::span<const int> entries() const { return entries_; }
  int length() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  long sum() const;
  bool all_nontrivial() const;

  /// Throws InvalidInput unless every entry is nonzero (or the vector is empty).
  void require_nontrivial() const;

  std::string to_string() const;

  friend bool operator==(const MonodromyVector&, const MonodromyVector&) = default;

 private:
  int modulus_ = 1;
  std::vector<int> entries_;
};

struct ConditionFlags {
  bool parity = false;
  bool non_negative = false;
  bool bounded = false;
  bool negative = false;
  bool strongly_negative = false;
};

/// Evaluates every hypothesis used by the vanishing and evaluation formulas.
ConditionFlags condition_flags(const MonodromyVector& gamma, const Partition& mu);

/// gamma plus (d - sum gamma)/a parts equal to a.
/// Throws ConditionViolation when parity or non-negativity fails.
Partition gamma_plus(const MonodromyVector& gamma, int d);

/// 2g - 2 + l(nu) + l(mu); throws InvalidInput when |nu| != |mu|.
int ramification_count(int genus, const Partition& nu, const Partition& mu);

/// Residue tuple in a product of cyclic groups.
using GroupElement = std::vector<int>;

/// Multiset of (part, weight) pairs, kept sorted (part descending, then weight).
class WeightedPartition {
 public:
  using Entry = std::pair<int, GroupElement>;

  WeightedPartition() = default;
  explicit WeightedPartition(std::vector<Entry> entries);

  /// Parses "2:1,2:0" or, for several cyclic factors, "2:1.0,1:0.1".
  /// A part with no weight gets the zero element with `factor_count` entries.
  static WeightedPartition parse(std::string_view text, std::size_t factor_count);

  std::span<const Entry> entries() const { return entries_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

  Partition underlying() const;
  /// Permutations of the entries preserving (part, weight) pairs.
  BigInt aut_order() const;

  std::string to_string() const;

  friend bool operator==(const WeightedPartition&, const WeightedPartition&) = default;
  friend auto operator<=>(const WeightedPartition& a, const WeightedPartition& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<Entry> entries_;
  int size_ = 0;
};

}  // namespace hhodge
