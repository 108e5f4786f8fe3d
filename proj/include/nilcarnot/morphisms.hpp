#pragma once

#include "nilcarnot/graded.hpp"
#include "nilcarnot/group.hpp"

namespace nilcarnot {

/// Lie algebra homomorphism given by a target_dim × source_dim rational
/// matrix on coordinates. When both ends are graded and the graded flag is
/// set, the matrix maps layer i into layer i (block structure is enforced by
/// validate_hom). The corresponding group homomorphism of the simply
/// connected groups is the same matrix in exponential coordinates.
struct Homomorphism {
  LieAlgebra source;
  LieAlgebra target;
  std::vector<std::size_t> source_layers;  // empty when the end is ungraded
  std::vector<std::size_t> target_layers;
  Matrix matrix;
  bool graded = false;

  Vector apply(const Vector& v) const { return matrix.apply(v); }
  GroupElement apply(const GroupElement& g) const { return {matrix.apply(g.coords)}; }
};

Homomorphism make_hom(const LieAlgebra& source, const LieAlgebra& target, Matrix m);
Homomorphism make_graded_hom(const GradedLieAlgebra& source, const GradedLieAlgebra& target,
                             Matrix m);

GradedLieAlgebra graded_source(const Homomorphism& F);
GradedLieAlgebra graded_target(const Homomorphism& F);

/// True iff F[e_i,e_j] = [F e_i, F e_j] for every basis pair, exactly, and —
/// when the graded flag is set — the matrix is layer-block structured.
bool validate_hom(const Homomorphism& F);

/// Induced map between abelianizations in canonical quotient coordinates,
/// with the data needed to interpret it.
struct AbelianizedMap {
  Matrix matrix;             // target_ab_dim × source_ab_dim
  Subspace source_derived;   // [g, g]
  Subspace target_derived;   // [h, h]
  Matrix source_complement;  // canonical complement rows in source coords
  Matrix target_complement;
  bool surjective() const { return rank(matrix) == matrix.rows(); }
};

AbelianizedMap abelianization_map(const Homomorphism& F);

/// For graded F: whether each layer-i block has full row rank.
std::vector<bool> layer_surjectivity(const Homomorphism& F);

/// Both sides of the surjectivity criterion for a hom into a Carnot algebra.
/// agree is a theorem, so a false value is a defect, not a data condition.
struct SurjectivityCheck {
  bool surjective;
  bool ab_surjective;
  bool agree;
};

SurjectivityCheck surjective_iff_ab_surjective(const Homomorphism& F);

/// Rigidity of surjective graded homs between Carnot algebras with equal
/// homogeneous dimension: such a map must be bijective layer by layer.
struct RigidityVerdict {
  bool applicable = false;  // F surjective and d values equal
  bool layer_dims_equal = false;
  bool bijective = false;
  Rational det;
};

RigidityVerdict rigidity_check(const Homomorphism& F, std::uint64_t d_source,
                               std::uint64_t d_target);

/// A functional annihilating the image of a non-surjective graded hom:
/// ℓ∘F = 0 exactly, covector supported on the target's first layer, chosen as
/// the first canonical kernel vector orthogonal to Im(F_Ab), scaled primitive
/// and to exact unit norm whenever its norm is rational. Throws
/// NoFunctionalError when F_Ab is surjective.
Functional annihilating_functional(const Homomorphism& F);

/// δ_{1/s}(F(g)^{-1}·F(g·δ_s(x))): the difference quotient of the group map
/// at scale s. For graded F this equals F(x) for every s > 0 and g.
GroupElement pansu_quotient(const Homomorphism& F, const GroupElement& g, const GroupElement& x,
                            const Rational& s);

}  // namespace nilcarnot
