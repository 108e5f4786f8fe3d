#pragma once

#include "nilcarnot/graded.hpp"
#include "nilcarnot/group.hpp"

namespace nilcarnot {

/// Data for one translate-packing demonstration on a Carnot group:
/// a functional ℓ with ℓ(h) = 1, a base point x, scales eps > mu > 0, and a
/// finite sample set S whose ℓ-image clusters within mu/3 of ℓ(x).
struct PackingInstance {
  GradedLieAlgebra G;
  Functional ell;
  GroupElement h;
  GroupElement x;
  Rational eps;
  Rational mu;
  std::vector<GroupElement> samples;
};

/// ℓ evaluated on a group element (factors through the abelianization, so
/// this is exact and multiplicative-to-additive).
Rational functional_on_group(const Functional& ell, const GroupElement& g);

struct PackingReport {
  std::uint64_t count = 0;
  bool pairwise_disjoint = false;
  bool radius_bound_ok = false;
  Rational ell_of_conjugate;  // ℓ(h_eps), equals mu
  /// Per-translate open interval ((j-1/3)mu + ℓ(x), (j+1/3)mu + ℓ(x)) and the
  /// exact ℓ-values of the translate's samples.
  struct IntervalWitness {
    long j;
    Rational lo, hi;
    std::vector<Rational> ell_values;
  };
  std::vector<IntervalWitness> intervals;
};

/// Builds h_eps = x·δ_mu(h)·x^{-1} and the translates h_eps^j·S for
/// |j| <= floor(eps/mu); verifies the interval containment, pairwise interval
/// disjointness, the count 1 + 2·floor(eps/mu), and the gauge radius bound
/// |log(x^{-1}·y)| ≤ 2eps. Throws InstanceInvalidError naming the first
/// violated precondition.
PackingReport build_packing(const PackingInstance& p);

/// Dilation-homogeneous gauge box: true iff every layer-i coordinate of v has
/// |coordinate| <= r^i. Exact rational comparisons; requires r > 0.
bool gauge_radius_check(const GradedLieAlgebra& G, const Vector& v, const Rational& r);

}  // namespace nilcarnot
