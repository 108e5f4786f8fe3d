#pragma once

#include "nilcarnot/matrix.hpp"

namespace nilcarnot {

/// Linear subspace of Q^n held as a canonical (reduced echelon, zero rows
/// dropped) basis matrix. Two equal subspaces have identical basis matrices,
/// so operator== is syntactic.
class Subspace {
public:
  Subspace() : ambient_(0) {}

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  /// Span of the rows of m (not required independent).
  static Subspace span(const Matrix& m);
  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }

  bool is_zero() const { return dim() == 0; }
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  std::size_t ambient_;
  Matrix basis_;
};

/// Rows extending sub's echelon basis to a basis of ambient, picked greedily
/// from ambient's echelon basis in fixed row order. Requires sub ⊆ ambient.
Matrix complement_basis(const Subspace& ambient, const Subspace& sub);

/// Coordinates of v + sub in the canonical complement of sub inside ambient.
/// v ∈ sub iff the result is zero. Throws MembershipError unless
/// sub ⊆ ambient and v ∈ ambient.
Vector quotient_coords(const Subspace& ambient, const Subspace& sub, const Vector& v);

}  // namespace nilcarnot
