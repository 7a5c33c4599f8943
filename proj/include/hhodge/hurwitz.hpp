#pragma once

#include "hhodge/combinatorics.hpp"
#include "hhodge/rational.hpp"

#include <vector>

namespace hhodge {

struct HurwitzQuery {
  int genus = 0;
  Partition nu;
  Partition mu;
  bool connected = true;
};

/// H^bullet_g(nu, mu) from the character expansion of the class-algebra
/// product. The genus may be negative; r < 0 gives 0.
Rational disconnected_double_hurwitz(int genus, const Partition& nu, const Partition& mu);

/// H_g(nu, mu), extracted from disconnected counts by inclusion-exclusion
/// over the component carrying the first (largest) part of nu.
/// Throws InvalidInput when genus < 0 or the degrees differ.
Rational connected_double_hurwitz(int genus, const Partition& nu, const Partition& mu);

Rational double_hurwitz(const HurwitzQuery& q);

/// Same quantities indexed by the number r of simple branch points instead
/// of the genus (r = 2g - 2 + l(nu) + l(mu)). Values with odd
/// r + l(nu) + l(mu) are 0.
Rational disconnected_hurwitz_by_branch_count(const Partition& nu, const Partition& mu, int r);
Rational connected_hurwitz_by_branch_count(const Partition& nu, const Partition& mu, int r);

/// (1/d!) #{(sigma, tau_1..tau_r, rho)} with sigma of type nu, rho of type mu,
/// tau_i transpositions and sigma tau_1 ... tau_r rho = Id, counted by a
/// transfer over the elements of S_d. With q.connected the subgroup generated
/// must act transitively. Throws ResourceLimit when d > degree_ceiling.
Rational brute_force_hurwitz(const HurwitzQuery& q, int degree_ceiling = 6);

/// H_g(nu, (d)) for g = 0..g_max read off the closed one-part generating series.
std::vector<Rational> gjv_one_part_check(const Partition& nu, int d, int g_max);

}  // namespace hhodge
