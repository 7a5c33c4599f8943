#pragma once

// Shared pieces of the brute-force factorization counters.

#include "hhodge/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hhodge::detail {

using Count = unsigned __int128;

inline BigInt to_bigint(Count c) {
  BigInt hi{std::to_string(static_cast<std::uint64_t>(c >> 64))};
  BigInt lo{std::to_string(static_cast<std::uint64_t>(c))};
  return (hi << 64) + lo;
}

/// Set partition of {0..n-1} stored as a restricted growth string, 4 bits
/// per point (n <= 16).
class BlockCode {
 public:
  static constexpr int kMaxPoints = 16;

  static std::uint64_t from_labels(const std::vector<int>& labels) {
    // relabel in order of first appearance
    std::vector<int> renamed(labels.size(), -1);
    std::vector<int> map(labels.size(), -1);
    int next = 0;
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      int l = labels[i];
      if (map[static_cast<std::size_t>(l)] < 0) map[static_cast<std::size_t>(l)] = next++;
      code |= static_cast<std::uint64_t>(map[static_cast<std::size_t>(l)]) << (4 * i);
    }
    return code;
  }

  static std::vector<int> labels(std::uint64_t code, int n) {
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = static_cast<int>((code >> (4 * i)) & 0xF);
    return out;
  }

  /// Merges the blocks of points i and j.
  static std::uint64_t merge(std::uint64_t code, int n, int i, int j) {
    auto l = labels(code, n);
    int a = l[static_cast<std::size_t>(i)], b = l[static_cast<std::size_t>(j)];
    if (a == b) return code;
    for (int& x : l) {
      if (x == b) x = a;
    }
    return from_labels(l);
  }

  static bool single_block(std::uint64_t code, int n) {
    for (int i = 0; i < n; ++i) {
      if ((code >> (4 * i)) & 0xF) return false;
    }
    return true;
  }
};

/// Blocks of a permutation's cycles.
inline std::uint64_t cycle_blocks(const std::vector<int>& perm) {
  std::vector<int> labels(perm.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (labels[i] >= 0) continue;
    for (std::size_t j = i; labels[j] < 0; j = static_cast<std::size_t>(perm[j])) labels[j] = next;
    ++next;
  }
  return BlockCode::from_labels(labels);
}

/// Cycle lengths of a permutation, sorted non-increasing.
inline std::vector<int> cycle_lengths(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace hhodge::detail
