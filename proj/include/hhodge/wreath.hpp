#pragma once

#include "hhodge/combinatorics.hpp"
#include "hhodge/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hhodge {

/// Z_{n_1} x ... x Z_{n_k}, or a subgroup of it given by its element list.
///
/// Elements are always residue tuples of the ambient product, so a kernel
/// K inside G keeps G's coordinates and its weights can be fed back into G
/// without any change of basis.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<int>{1}) {}
  explicit FiniteAbelianGroup(std::vector<int> cyclic_orders);

  /// "4", "2x2", "2x3x3".
  static FiniteAbelianGroup parse(std::string_view text);
  /// `members` must be closed under addition; it is not checked beyond
  /// containing zero.
  static FiniteAbelianGroup subgroup(const FiniteAbelianGroup& ambient, std::vector<GroupElement> members);

  const std::vector<int>& cyclic_orders() const { return orders_; }
  std::size_t factor_count() const { return orders_.size(); }
  long order() const;
  bool is_subgroup() const { return subgroup_; }

  /// All elements, in lexicographic order of their residue tuples.
  std::vector<GroupElement> elements() const;
  bool contains(const GroupElement& e) const;

  GroupElement zero() const { return GroupElement(orders_.size(), 0); }
  /// Reduces mod the cyclic orders; throws InvalidInput on a wrong length
  /// or (for a subgroup) a non-member.
  GroupElement reduce(GroupElement e) const;
  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement negate(const GroupElement& x) const;
  GroupElement scale(const GroupElement& x, long n) const;

  /// Reduces every weight of w, checking membership.
  WeightedPartition normalize(const WeightedPartition& w) const;

  std::string to_string() const;

 private:
  std::vector<int> orders_;
  bool subgroup_ = false;
  std::vector<GroupElement> members_;  // sorted; only for subgroups
};

/// The character e -> exp(2 pi i sum_i c_i e_i / n_i).
struct AbelianCharacter {
  FiniteAbelianGroup group;
  std::vector<int> exponents;
};

/// The exact sequence 0 -> K -> G -> Z_a -> 0 cut out by a character.
struct CharacterAnalysis {
  int a = 1;
  FiniteAbelianGroup kernel;
  GroupElement x;  ///< phi(x) = 1
  GroupElement k;  ///< a * x, an element of the kernel

  /// phi^R(e) in Z_a.
  int phi(const GroupElement& e) const;

  // data for phi
  long lcm = 1;
  std::vector<long> coefficients;
};

/// Image order, kernel and a preimage of 1. G is enumerated, so its order is
/// capped at 10^6.
CharacterAnalysis analyze_character(const FiniteAbelianGroup& G, const AbelianCharacter& R);

/// An element (k, sigma) of K_d = K^d x| S_d; permutation[i] = sigma(i).
struct WreathElement {
  std::vector<GroupElement> weights;
  std::vector<int> permutation;

  static WreathElement identity(int d, const FiniteAbelianGroup& K);
  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

/// (k, s)(k', s') = (k + s(k'), s s') with s(k')_i = k'_{s^-1(i)}.
WreathElement compose(const WreathElement& x, const WreathElement& y, const FiniteAbelianGroup& K);
WreathElement inverse(const WreathElement& x, const FiniteAbelianGroup& K);

/// Cycle lengths of the permutation, each paired with the sum of the weights
/// along the cycle.
WeightedPartition cycle_type(const WreathElement& w, const FiniteAbelianGroup& K);

/// Size of the conjugacy class with the given cycle type:
/// |K|^d d! / prod over distinct (m, k) of (m |K|)^c c!.
BigInt wreath_class_size(const WeightedPartition& type, const FiniteAbelianGroup& K);

/// Every K-weighted partition of d.
std::vector<WeightedPartition> weighted_partitions(int d, const FiniteAbelianGroup& K);

/// d/a copies of (a, -k). Throws InvalidInput unless a divides d.
WeightedPartition empty_plus(const GroupElement& k, int d, int a, const FiniteAbelianGroup& K);

/// |K|^{2g-2+h}, or 0 when the monodromies do not sum to zero.
Rational degree_rho(long K_order, int g, bool monodromy_sum_zero, int components = 1);

/// H_{g,K}(nu, mu) by reduction to the symmetric-group numbers. Connected
/// means the d-fold cover is connected; the disconnected count sums over
/// splittings into components with 2g - 2 additive.
Rational wreath_double_hurwitz(int g, const FiniteAbelianGroup& K, const WeightedPartition& nu,
                               const WeightedPartition& mu, bool connected = true);

/// (1 / |K_d|) (C_nu T^r C_mu)_[Id] by a transfer over the elements of K_d.
/// Throws ResourceLimit when |K|^d d! exceeds `ceiling`.
Rational wreath_hurwitz_bruteforce(int g, const FiniteAbelianGroup& K, const WeightedPartition& nu,
                                   const WeightedPartition& mu, bool connected = true, long ceiling = 100000);

}  // namespace hhodge
