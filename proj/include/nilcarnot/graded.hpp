#pragma once

#include <optional>

#include "nilcarnot/functional.hpp"
#include "nilcarnot/lie_algebra.hpp"

namespace nilcarnot {

/// Provenance of a graded algebra built from a source algebra: the source and
/// the adapted basis (rows are the chosen coset representatives, grouped by
/// layer, in source coordinates).
struct GradedProvenance {
  LieAlgebra source;
  Matrix adapted_basis;
};

/// Layered Lie algebra: basis grouped into layers v_1,...,v_c with
/// [v_i, v_j] ⊆ v_{i+j} (zero past the top layer). Coordinates of the total
/// space are blocked by layer in basis order.
class GradedLieAlgebra {
public:
  GradedLieAlgebra() = default;

  /// Wraps an algebra whose structure constants already respect the given
  /// layer dimensions. Throws ShapeError if the grading is violated.
  static GradedLieAlgebra from_layers(LieAlgebra algebra, std::vector<std::size_t> layer_dims,
                                      std::optional<GradedProvenance> provenance = std::nullopt);

  const LieAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return algebra_.dim(); }
  std::size_t step() const { return layer_dims_.size(); }
  const std::vector<std::size_t>& layer_dims() const { return layer_dims_; }

  /// Index of the first coordinate of layer i (1-based layer).
  std::size_t layer_offset(std::size_t i) const;
  std::size_t layer_dim(std::size_t i) const { return layer_dims_[i - 1]; }

  /// Layer i as a coordinate subspace of the total space (1-based).
  Subspace layer_subspace(std::size_t i) const;

  /// Layer of a coordinate index (1-based layer).
  std::size_t layer_of(std::size_t coord) const;

  const std::optional<GradedProvenance>& provenance() const { return provenance_; }

private:
  LieAlgebra algebra_;
  std::vector<std::size_t> layer_dims_;
  std::vector<std::size_t> offsets_;
  std::optional<GradedProvenance> provenance_;
};

/// The graded Lie algebra ⊕ g_i/g_{i+1} of a valid nilpotent algebra, with
/// the bracket induced from L on canonical coset complements. Layer i has the
/// i-th lower-central-series quotient as its space.
GradedLieAlgebra associated_graded(const LieAlgebra& L);

/// True iff iterated brackets of the first layer span every layer.
bool is_carnot(const GradedLieAlgebra& G);

/// Scales the layer-i block of v by t^i. Requires t > 0.
Vector dilate(const GradedLieAlgebra& G, const Rational& t, const Vector& v);

/// Verifies ℓ(δ_t v) = t·ℓ(v) exactly. Requires ell to vanish outside the
/// first layer (so it factors through the abelianization); throws ShapeError
/// otherwise.
bool functional_homogeneity_check(const GradedLieAlgebra& G, const Functional& ell,
                                  const Rational& t, const Vector& v);

}  // namespace nilcarnot
