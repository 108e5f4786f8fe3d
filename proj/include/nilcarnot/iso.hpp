#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nilcarnot/morphisms.hpp"

namespace nilcarnot {

/// Deterministic integer profile of a graded algebra. Equal for isomorphic
/// algebras (every entry is functorial), so a difference is a sound
/// non-isomorphism certificate.
struct InvariantProfile {
  std::size_t dim = 0;
  std::size_t step = 0;
  std::vector<std::size_t> layer_dims;
  std::vector<std::size_t> lcs_dims;      // dims of the lower central series terms
  std::vector<std::size_t> derived_dims;  // dims of the derived series terms
  std::size_t center_dim = 0;
  std::vector<std::size_t> center_layer_dims;  // dim(center ∩ layer i)
  std::vector<std::size_t> bracket_rank_samples;  // sorted multiset, see below

  friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;

  /// Name and both values of the first differing field, or nullopt.
  static std::optional<std::string> first_difference(const InvariantProfile& a,
                                                     const InvariantProfile& b);
};

/// Profile of G. bracket_rank_samples is the multiset of ranks of the skew
/// forms B_ξ(x,y) = ξ([x,y]) as ξ ranges over the 0/±1 covectors on the top
/// layer, up to sign, in lexicographic order, capped at 256 covectors.
InvariantProfile invariant_profile(const GradedLieAlgebra& G);

struct IsoSearchOptions {
  std::uint64_t budget = 5000;  // candidate first-layer blocks to try
  std::uint64_t seed = 0;
};

/// Extends a first-layer block to a graded map G → H, layer i+1 induced from
/// layer i through brackets (forced: the first layer generates a Carnot
/// algebra). Requires G Carnot. Returns nullopt when some layer map is
/// overconstrained — the block admits no graded extension. The result is
/// block-structured by construction but not yet verified bracket-compatible
/// on all pairs; run validate_hom on it.
std::optional<Homomorphism> induce_graded_from_first_layer(const GradedLieAlgebra& G,
                                                           const GradedLieAlgebra& H,
                                                           const Matrix& first_layer_block);

/// Searches for a graded bracket-compatible bijection G → H. Only the
/// first-layer block is enumerated (identity, small-integer matrices, then
/// seeded random ones); higher layers are induced through brackets, which is
/// forced because the first layer generates, and candidates whose induction
/// is inconsistent are discarded. Absence within budget proves nothing.
std::optional<Homomorphism> find_graded_isomorphism(const GradedLieAlgebra& G,
                                                    const GradedLieAlgebra& H,
                                                    const IsoSearchOptions& opts = {});

struct IsoVerdict {
  enum class Kind { Isomorphic, NonIsomorphic, Unknown } kind;
  std::optional<Homomorphism> witness;     // Isomorphic: re-verified map
  std::optional<std::string> certificate;  // NonIsomorphic: first differing invariant
  std::optional<std::string> note;         // Unknown: budget note
};

/// NonIsomorphic when profiles differ (sound), Isomorphic when a witness is
/// found and re-verified (sound), Unknown otherwise.
IsoVerdict iso_verdict(const GradedLieAlgebra& G, const GradedLieAlgebra& H,
                       const IsoSearchOptions& opts = {});

}  // namespace nilcarnot
