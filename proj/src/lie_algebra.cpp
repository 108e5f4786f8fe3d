#include "nilcarnot/lie_algebra.hpp"

#include <sstream>

#include "nilcarnot/errors.hpp"

namespace nilcarnot {

std::size_t LieAlgebra::pair_index(std::size_t i, std::size_t j) const {
  // (i,j) with i<j, row-major over the strict upper triangle
  return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

LieAlgebra LieAlgebra::from_brackets(std::size_t dim, const std::vector<BracketSpec>& brackets,
                                     std::vector<std::string> basis_names) {
  LieAlgebra L;
  L.dim_ = dim;
  if (basis_names.empty()) {
    for (std::size_t k = 0; k < dim; ++k) basis_names.push_back("e" + std::to_string(k + 1));
  }
  if (basis_names.size() != dim) throw ShapeError("basis name count != dim");
  L.names_ = std::move(basis_names);
  L.table_.assign(dim * (dim - 1) / 2, Vector(dim));
  for (const auto& b : brackets) {
    if (b.i >= b.j || b.j >= dim) throw ShapeError("bracket indices must satisfy i < j < dim");
    if (b.coeffs.size() != dim) throw ShapeError("bracket coefficient length != dim");
    L.table_[L.pair_index(b.i, b.j)] = b.coeffs;
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      const Vector& c = L.table_[L.pair_index(i, j)];
      for (std::size_t k = 0; k < dim; ++k)
        if (!c[k].is_zero()) L.nonzero_.push_back({i, j, k, c[k]});
    }
  return L;
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw ShapeError("bracket_basis: index out of range");
  if (i == j) return Vector(dim_);
  if (i < j) return table_[pair_index(i, j)];
  return negate(table_[pair_index(j, i)]);
}

Vector LieAlgebra::bracket(const Vector& u, const Vector& v) const {
  if (u.size() != dim_ || v.size() != dim_) throw ShapeError("bracket: dimension mismatch");
  Vector out(dim_);
  for (const auto& e : nonzero_) {
    Rational coef = u[e.i] * v[e.j] - u[e.j] * v[e.i];
    if (!coef.is_zero()) out[e.k] += coef * e.c;
  }
  return out;
}

bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
  return a.dim_ == b.dim_ && a.names_ == b.names_ && a.table_ == b.table_;
}

Subspace bracket_subspaces(const LieAlgebra& L, const Subspace& A, const Subspace& B) {
  if (A.ambient_dim() != L.dim() || B.ambient_dim() != L.dim())
    throw ShapeError("bracket_subspaces: ambient dimension mismatch");
  std::vector<Vector> gens;
  for (std::size_t a = 0; a < A.dim(); ++a)
    for (std::size_t b = 0; b < B.dim(); ++b)
      gens.push_back(L.bracket(A.basis_vector(a), B.basis_vector(b)));
  if (gens.empty()) return Subspace::zero(L.dim());
  return Subspace::span(gens, L.dim());
}

namespace {

// series driver; next(T) must satisfy next(T) ⊆ T for termination detection
template <typename Step>
SeriesReport run_series(const LieAlgebra& L, Step next, bool require_zero) {
  SeriesReport rep;
  rep.terms.push_back(Subspace::full(L.dim()));
  while (true) {
    const Subspace& cur = rep.terms.back();
    if (cur.is_zero()) break;
    Subspace nxt = next(cur);
    if (nxt == cur) {
      if (require_zero)
        throw NonNilpotentError("lower central series stabilized at dimension " +
                                std::to_string(cur.dim()));
      break;
    }
    rep.terms.push_back(std::move(nxt));
  }
  for (std::size_t i = 0; i + 1 < rep.terms.size(); ++i)
    rep.layer_ranks.push_back(rep.terms[i].dim() - rep.terms[i + 1].dim());
  rep.step = 0;
  for (const auto& t : rep.terms)
    if (!t.is_zero()) ++rep.step;
  return rep;
}

}  // namespace

SeriesReport lower_central_series(const LieAlgebra& L) {
  Subspace whole = Subspace::full(L.dim());
  return run_series(
      L, [&](const Subspace& cur) { return bracket_subspaces(L, whole, cur); }, true);
}

SeriesReport derived_series(const LieAlgebra& L) {
  return run_series(
      L, [&](const Subspace& cur) { return bracket_subspaces(L, cur, cur); }, false);
}

Subspace center(const LieAlgebra& L) {
  std::size_t n = L.dim();
  // stack the adjoint maps v -> [v, e_j]: rows indexed by (j,k)
  Matrix m(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      Vector br = L.bracket_basis(i, j);  // [e_i, e_j]
      for (std::size_t k = 0; k < n; ++k) m.at(j * n + k, i) = br[k];
    }
  return Subspace::span(kernel_basis(m));
}

ValidationReport validate(const LieAlgebra& L) {
  ValidationReport rep;
  std::size_t n = L.dim();
  for (std::size_t i = 0; i < n && rep.jacobi_ok; ++i)
    for (std::size_t j = i + 1; j < n && rep.jacobi_ok; ++j)
      for (std::size_t k = j + 1; k < n && rep.jacobi_ok; ++k) {
        Vector ei(n), ej(n), ek(n);
        ei[i] = Rational(1);
        ej[j] = Rational(1);
        ek[k] = Rational(1);
        Vector jac = L.bracket(ei, L.bracket_basis(j, k)) +
                     L.bracket(ej, L.bracket_basis(k, i)) +
                     L.bracket(ek, L.bracket_basis(i, j));
        if (!is_zero(jac)) {
          rep.jacobi_ok = false;
          rep.first_jacobi_violation = {i, j, k};
        }
      }
  if (rep.jacobi_ok) {
    try {
      SeriesReport lcs = lower_central_series(L);
      rep.step = lcs.step;
      rep.layer_ranks = lcs.layer_ranks;
    } catch (const NonNilpotentError&) {
      rep.nilpotent = false;
      // rerun without the zero requirement to report the stable dimension
      SeriesReport stable = run_series(
          L,
          [&](const Subspace& cur) {
            return bracket_subspaces(L, Subspace::full(L.dim()), cur);
          },
          false);
      rep.stabilized_dim = stable.terms.back().dim();
    }
  }
  return rep;
}

std::string ValidationReport::describe() const {
  std::ostringstream os;
  if (passed()) {
    os << "valid nilpotent Lie algebra, step " << step << ", layer ranks [";
    for (std::size_t i = 0; i < layer_ranks.size(); ++i) os << (i ? "," : "") << layer_ranks[i];
    os << "]";
  } else if (!jacobi_ok) {
    auto [i, j, k] = *first_jacobi_violation;
    os << "Jacobi identity fails on basis triple (" << i + 1 << "," << j + 1 << "," << k + 1
       << ")";
  } else {
    os << "not nilpotent: lower central series stabilizes at dimension " << stabilized_dim;
  }
  return os.str();
}

}  // namespace nilcarnot
