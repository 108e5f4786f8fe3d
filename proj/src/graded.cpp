#include "nilcarnot/graded.hpp"

#include "nilcarnot/errors.hpp"

namespace nilcarnot {

GradedLieAlgebra GradedLieAlgebra::from_layers(LieAlgebra algebra,
                                               std::vector<std::size_t> layer_dims,
                                               std::optional<GradedProvenance> provenance) {
  std::size_t total = 0;
  for (auto d : layer_dims) total += d;
  if (total != algebra.dim()) throw ShapeError("layer dims do not sum to algebra dimension");

  GradedLieAlgebra G;
  G.algebra_ = std::move(algebra);
  G.layer_dims_ = std::move(layer_dims);
  G.offsets_.assign(G.layer_dims_.size() + 1, 0);
  for (std::size_t i = 0; i < G.layer_dims_.size(); ++i)
    G.offsets_[i + 1] = G.offsets_[i] + G.layer_dims_[i];
  G.provenance_ = std::move(provenance);

  std::size_t c = G.step();
  for (const auto& e : G.algebra_.nonzero_entries()) {
    std::size_t li = G.layer_of(e.i), lj = G.layer_of(e.j), lk = G.layer_of(e.k);
    if (li + lj > c || lk != li + lj)
      throw ShapeError("structure constants violate the grading at [e" + std::to_string(e.i + 1) +
                       ",e" + std::to_string(e.j + 1) + "]");
  }
  return G;
}

std::size_t GradedLieAlgebra::layer_offset(std::size_t i) const {
  if (i == 0 || i > layer_dims_.size()) throw ShapeError("layer index out of range");
  return offsets_[i - 1];
}

Subspace GradedLieAlgebra::layer_subspace(std::size_t i) const {
  std::size_t off = layer_offset(i), d = layer_dim(i);
  Matrix rows(d, dim());
  for (std::size_t r = 0; r < d; ++r) rows.at(r, off + r) = Rational(1);
  return Subspace::span(rows);
}

std::size_t GradedLieAlgebra::layer_of(std::size_t coord) const {
  for (std::size_t i = 1; i <= layer_dims_.size(); ++i)
    if (coord < offsets_[i]) return i;
  throw ShapeError("coordinate index out of range");
}

GradedLieAlgebra associated_graded(const LieAlgebra& L) {
  SeriesReport lcs = lower_central_series(L);  // throws NonNilpotentError if not nilpotent
  std::size_t c = lcs.step, n = L.dim();

  // canonical coset complements, layer by layer
  std::vector<Matrix> complements;
  std::vector<Vector> adapted;  // new basis in source coordinates, layer order
  for (std::size_t i = 0; i < c; ++i) {
    Matrix comp = complement_basis(lcs.terms[i], lcs.terms[i + 1]);
    for (std::size_t r = 0; r < comp.rows(); ++r) adapted.push_back(comp.row(r));
    complements.push_back(std::move(comp));
  }
  Matrix adapted_basis = Matrix::from_rows(adapted, n);

  // induced bracket: compute in L, then read off coset coordinates layer-wise
  std::vector<std::size_t> layer_of(n);
  {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t r = 0; r < lcs.layer_ranks[i]; ++r) layer_of[idx++] = i + 1;
  }
  std::vector<std::size_t> offsets(c + 1, 0);
  for (std::size_t i = 0; i < c; ++i) offsets[i + 1] = offsets[i] + lcs.layer_ranks[i];

  std::vector<BracketSpec> brackets;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      std::size_t la = layer_of[a], lb = layer_of[b];
      Vector coeffs(n);
      if (la + lb <= c) {
        Vector br = L.bracket(adapted[a], adapted[b]);  // lies in g_{la+lb}
        Vector q = quotient_coords(lcs.terms[la + lb - 1], lcs.terms[la + lb], br);
        for (std::size_t k = 0; k < q.size(); ++k) coeffs[offsets[la + lb - 1] + k] = q[k];
      }
      if (!is_zero(coeffs)) brackets.push_back({a, b, coeffs});
    }

  std::vector<std::string> names;
  for (std::size_t i = 1; i <= c; ++i)
    for (std::size_t r = 1; r <= lcs.layer_ranks[i - 1]; ++r)
      names.push_back("v" + std::to_string(i) + "_" + std::to_string(r));

  LieAlgebra graded = LieAlgebra::from_brackets(n, brackets, names);
  return GradedLieAlgebra::from_layers(std::move(graded), lcs.layer_ranks,
                                       GradedProvenance{L, std::move(adapted_basis)});
}

bool is_carnot(const GradedLieAlgebra& G) {
  Subspace v1 = G.layer_subspace(1);
  Subspace current = v1;
  for (std::size_t i = 2; i <= G.step(); ++i) {
    current = bracket_subspaces(G.algebra(), v1, current);
    // current ⊆ layer i by the grading, so spanning is a dimension count
    if (current.dim() != G.layer_dim(i)) return false;
  }
  return true;
}

Vector dilate(const GradedLieAlgebra& G, const Rational& t, const Vector& v) {
  if (t.sign() <= 0) throw std::domain_error("dilate: t must be positive");
  if (v.size() != G.dim()) throw ShapeError("dilate: dimension mismatch");
  Vector out(v.size());
  for (std::size_t i = 1; i <= G.step(); ++i) {
    Rational ti = t.pow(static_cast<long>(i));
    std::size_t off = G.layer_offset(i);
    for (std::size_t r = 0; r < G.layer_dim(i); ++r) out[off + r] = ti * v[off + r];
  }
  return out;
}

bool functional_homogeneity_check(const GradedLieAlgebra& G, const Functional& ell,
                                  const Rational& t, const Vector& v) {
  if (ell.covector.size() != G.dim()) throw ShapeError("functional dimension mismatch");
  for (std::size_t k = G.layer_dims()[0]; k < G.dim(); ++k)
    if (!ell.covector[k].is_zero())
      throw ShapeError("functional does not factor through the abelianization");
  return ell.evaluate(dilate(G, t, v)) == t * ell.evaluate(v);
}

}  // namespace nilcarnot
