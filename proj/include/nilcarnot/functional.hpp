#pragma once

#include "nilcarnot/matrix.hpp"

namespace nilcarnot {

/// Homomorphism to the real line, ℓ = covector / sqrt(norm_square). The
/// covector is rational and vanishes outside the first layer, so ℓ∘exp
/// factors through the abelianization. Storing the squared norm keeps the
/// unit-normalization exact: the normalized functional has unit Euclidean
/// norm iff norm_square equals covector·covector, a rational identity.
/// evaluate() returns the unnormalized (rational) value; every downstream
/// disjointness or annihilation statement is invariant under the positive
/// scaling by 1/sqrt(norm_square).
struct Functional {
  Vector covector;
  Rational norm_square{1};

  Rational evaluate(const Vector& coords) const { return dot(covector, coords); }
  bool annihilates(const Vector& coords) const { return evaluate(coords).is_zero(); }
};

}  // namespace nilcarnot
