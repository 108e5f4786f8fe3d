#include "nilcarnot/subspace.hpp"

#include "nilcarnot/errors.hpp"

namespace nilcarnot {

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = Matrix(0, ambient_dim);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = Matrix::identity(ambient_dim);
  return s;
}

Subspace Subspace::span(const Matrix& m) {
  Matrix r = rref(m);
  std::size_t nonzero = 0;
  while (nonzero < r.rows() && !nilcarnot::is_zero(r.row(nonzero))) ++nonzero;
  Matrix basis(nonzero, m.cols());
  for (std::size_t i = 0; i < nonzero; ++i) basis.set_row(i, r.row(i));
  Subspace s;
  s.ambient_ = m.cols();
  s.basis_ = std::move(basis);
  return s;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
  return span(Matrix::from_rows(vectors, ambient_dim));
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw ShapeError("Subspace::contains: ambient mismatch");
  // reduce v against the echelon basis
  Vector w = v;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t p = 0;
    while (p < ambient_ && basis_.at(r, p).is_zero()) ++p;
    if (p == ambient_) continue;
    if (!w[p].is_zero()) {
      Rational f = w[p];  // pivot entries are 1
      for (std::size_t c = p; c < ambient_; ++c) w[c] -= f * basis_.at(r, c);
    }
  }
  return nilcarnot::is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw ShapeError("Subspace::contains: ambient mismatch");
  for (std::size_t r = 0; r < other.basis_.rows(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw ShapeError("Subspace::sum: ambient mismatch");
  Matrix stacked(dim() + other.dim(), ambient_);
  for (std::size_t r = 0; r < dim(); ++r) stacked.set_row(r, basis_.row(r));
  for (std::size_t r = 0; r < other.dim(); ++r) stacked.set_row(dim() + r, other.basis_.row(r));
  return span(stacked);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw ShapeError("Subspace::intersect: ambient mismatch");
  if (is_zero() || other.is_zero()) return zero(ambient_);
  // x in U∩W  <=>  x = a^T A = b^T B: solve [A^T | -B^T] (a,b)^T = 0
  std::size_t du = dim(), dw = other.dim();
  Matrix m(ambient_, du + dw);
  for (std::size_t c = 0; c < du; ++c)
    for (std::size_t r = 0; r < ambient_; ++r) m.at(r, c) = basis_.at(c, r);
  for (std::size_t c = 0; c < dw; ++c)
    for (std::size_t r = 0; r < ambient_; ++r) m.at(r, du + c) = -other.basis_.at(c, r);
  Matrix ker = kernel_basis(m);
  std::vector<Vector> gens;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Vector x(ambient_);
    for (std::size_t i = 0; i < du; ++i) {
      const Rational& a = ker.at(r, i);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < ambient_; ++c) x[c] += a * basis_.at(i, c);
    }
    gens.push_back(std::move(x));
  }
  return span(gens, ambient_);
}

Matrix complement_basis(const Subspace& ambient, const Subspace& sub) {
  if (!ambient.contains(sub))
    throw MembershipError("complement_basis: sub is not contained in ambient");
  std::vector<Vector> chosen;
  Subspace current = sub;
  for (std::size_t r = 0; r < ambient.dim(); ++r) {
    Vector cand = ambient.basis_vector(r);
    if (!current.contains(cand)) {
      chosen.push_back(cand);
      std::vector<Vector> ext = {cand};
      current = current.sum(Subspace::span(ext, ambient.ambient_dim()));
    }
  }
  return Matrix::from_rows(chosen, ambient.ambient_dim());
}

Vector quotient_coords(const Subspace& ambient, const Subspace& sub, const Vector& v) {
  if (!ambient.contains(sub))
    throw MembershipError("quotient_coords: sub is not contained in ambient");
  if (!ambient.contains(v))
    throw MembershipError("quotient_coords: v is not in ambient");
  Matrix comp = complement_basis(ambient, sub);
  std::size_t k = sub.dim(), m = comp.rows();
  Matrix full(k + m, ambient.ambient_dim());
  for (std::size_t r = 0; r < k; ++r) full.set_row(r, sub.basis_vector(r));
  for (std::size_t r = 0; r < m; ++r) full.set_row(k + r, comp.row(r));
  Vector coeffs = coordinates_in_basis(full, v);
  return Vector(coeffs.begin() + static_cast<std::ptrdiff_t>(k), coeffs.end());
}

}  // namespace nilcarnot
