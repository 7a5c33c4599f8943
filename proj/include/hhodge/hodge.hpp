#pragma once

#include "hhodge/combinatorics.hpp"
#include "hhodge/rational.hpp"
#include "hhodge/series.hpp"
#include "hhodge/wreath.hpp"

#include <utility>
#include <vector>

namespace hhodge {

/// The linear Hodge integral
///   int sum_i (-a)^i lambda_i^U / prod_j (1 - mu_j psibar_j)
/// over the Z_a admissible covers with monodromies gamma - mu.
struct IntegralQuery {
  int g = 0;
  int a = 1;
  MonodromyVector gamma;  ///< nontrivial entries; its modulus must equal a
  Partition mu;
  bool disconnected = false;  ///< requires gamma empty; g may then be negative
};

enum class IntegralBranch {
  EmptyModuli,  ///< parity fails: the moduli space is empty
  Unstable,     ///< genus 0 with fewer than three marked points
  Evaluated,    ///< read off from a Hurwitz number
  Vanishing,    ///< zero by the negativity results
};

struct IntegralResult {
  Rational value;
  IntegralBranch branch;
};

const char* to_string(IntegralBranch b);

/// Rank of the Hodge bundle E^U: g on a component with trivial monodromy,
/// otherwise g - 1 + sum gamma_i/a + sum over mu_j not divisible by a of
/// (1 - <mu_j/a>). Throws ParityViolation when that is not an integer.
int rank_EU(int g, int a, const MonodromyVector& gamma, const Partition& mu, bool trivial_monodromy_component);

enum class UnstableCase { OnePoint, TwoPoint };

/// (1/a)/x^2 for one point, (1/a)/(x+y) for two.
Rational unstable_integral(UnstableCase c, int a, const Rational& x, const Rational& y = 0);

/// H_g(gamma_+, mu) |Aut gamma| |Aut mu| / C with
/// C = r! a^{1-g-sum gamma/a+sum <mu_j/a>} prod mu_j^{floor(mu_j/a)}/floor(mu_j/a)!.
/// Needs parity and non-negativity (ConditionViolation otherwise); does not
/// look at boundedness or stability. With q.disconnected the disconnected
/// Hurwitz number is used and gamma must be empty.
Rational theorem1_inversion(const IntegralQuery& q);

/// Evaluates the integral, choosing the branch from the condition flags:
/// empty moduli, unstable, inversion (non-negative and bounded), vanishing
/// (negative and bounded, or strongly negative). Anything else throws
/// NotComputable.
IntegralResult combined_integral_Za(const IntegralQuery& q);

/// F_gamma(t, z) = sum t^{2g} z^l int psibar_0^{2g-2+l(gamma)+l} lambda^U_{g-l}
/// through t^t_order, from the closed form in sin(kt/2)/(kt/2).
/// Needs nontrivial, bounded gamma and an even t_order >= 0.
BivariateSeries one_part_F_series(int a, const MonodromyVector& gamma, int t_order);

/// The (t^{2g}, z^l) coefficient of F_gamma.
/// Throws InvalidInput when 2g - 2 + l(gamma) + l < 0.
Rational hodge_integral_one_part(int g, int l, int a, const MonodromyVector& gamma);

/// A marked point of an abelian cover: its monodromy in G and the weight
/// mu_j of its psi class (0 for a pure monodromy point).
struct AbelianPoint {
  GroupElement monodromy;
  int weight = 0;
};

/// The same integral with lambda^R for a character R of an abelian group G,
/// pulled back from Z_a = Im(R). Weighted points must have phi^R-image
/// -mu_j mod a; weight-0 points need a nontrivial image (InvalidInput
/// otherwise). The disconnected version allows weighted points only.
Rational combined_integral_abelian(int g, const FiniteAbelianGroup& G, const AbelianCharacter& R,
                                   const std::vector<AbelianPoint>& points, bool disconnected = false);

struct RoundTrip {
  Rational lhs;  ///< H_{g,K}(empty_+(k), mu)
  Rational rhs;  ///< prefactor times the abelian integral at the points (kappa_j - mu_j x, mu_j)
};

/// Both sides of the wreath/Hodge correspondence. Weights of mu are elements
/// of ker R written in G's coordinates. Throws InvalidInput unless a | d.
RoundTrip theorem5_roundtrip(int g, const FiniteAbelianGroup& G, const AbelianCharacter& R,
                             const WeightedPartition& mu, bool disconnected = false);

}  // namespace hhodge
