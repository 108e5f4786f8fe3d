#pragma once

#include <cstdint>
#include <optional>

#include "nilcarnot/bch.hpp"
#include "nilcarnot/lie_algebra.hpp"

namespace nilcarnot {

/// Point of the simply connected group in exponential coordinates: the group
/// element is exp(sum coords_k e_k) over the algebra given at each operation.
/// Identity iff all coordinates are zero.
struct GroupElement {
  Vector coords;

  bool is_identity() const { return nilcarnot::is_zero(coords); }
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.coords == b.coords;
  }
};

GroupElement group_identity(const LieAlgebra& L);

/// log(exp(x) exp(y)) via the BCH series truncated at the step of L. Exact:
/// all brackets of depth beyond the step vanish, so the truncation is the
/// full series and the product is associative.
GroupElement bch_multiply(const LieAlgebra& L, const GroupElement& x, const GroupElement& y);

/// Same with the nilpotency step supplied by the caller, skipping the series
/// recomputation on hot paths (ball enumeration, packing).
GroupElement bch_multiply_with_step(const LieAlgebra& L, std::size_t step, const GroupElement& x,
                                    const GroupElement& y);

/// exp(v)^{-1} = exp(-v).
GroupElement inverse(const GroupElement& x);

/// Finite generating set; must not contain the identity. With
/// symmetric_closure the inverses are adjoined at construction.
class GeneratingSet {
public:
  GeneratingSet(const LieAlgebra& L, std::vector<GroupElement> generators,
                bool symmetric_closure = true);
  const std::vector<GroupElement>& elements() const { return gens_; }

private:
  std::vector<GroupElement> gens_;
};

/// Word-metric ball counts around the identity: counts[k] = #B(k) for
/// k = 0..radius. If the element budget was exhausted, radius is the largest
/// fully enumerated one.
struct BallRecord {
  std::size_t radius = 0;
  std::vector<std::uint64_t> counts;
  bool truncated_by_budget = false;
  std::optional<std::vector<GroupElement>> elements;  // at max radius, on request

  std::uint64_t count_at(std::size_t k) const { return counts.at(k); }
};

struct WordBallOptions {
  std::size_t max_elements = 5'000'000;
  bool keep_elements = false;
};

/// Breadth-first closure of S-words of length <= n from the identity,
/// deduplicated by exact coordinates.
BallRecord word_ball(const LieAlgebra& L, const GeneratingSet& S, std::size_t n,
                     const WordBallOptions& opts = {});

}  // namespace nilcarnot
