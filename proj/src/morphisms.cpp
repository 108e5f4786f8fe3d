#include "nilcarnot/morphisms.hpp"

#include "nilcarnot/errors.hpp"

namespace nilcarnot {

Homomorphism make_hom(const LieAlgebra& source, const LieAlgebra& target, Matrix m) {
  if (m.rows() != target.dim() || m.cols() != source.dim())
    throw ShapeError("make_hom: matrix must be target_dim x source_dim");
  return {source, target, {}, {}, std::move(m), false};
}

Homomorphism make_graded_hom(const GradedLieAlgebra& source, const GradedLieAlgebra& target,
                             Matrix m) {
  if (m.rows() != target.dim() || m.cols() != source.dim())
    throw ShapeError("make_graded_hom: matrix must be target_dim x source_dim");
  return {source.algebra(), target.algebra(), source.layer_dims(), target.layer_dims(),
          std::move(m),     true};
}

GradedLieAlgebra graded_source(const Homomorphism& F) {
  if (F.source_layers.empty()) throw ShapeError("homomorphism source is not graded");
  return GradedLieAlgebra::from_layers(F.source, F.source_layers);
}

GradedLieAlgebra graded_target(const Homomorphism& F) {
  if (F.target_layers.empty()) throw ShapeError("homomorphism target is not graded");
  return GradedLieAlgebra::from_layers(F.target, F.target_layers);
}

namespace {

// block structure: coordinates of source layer i may only reach target layer i
bool layer_block_structured(const Homomorphism& F) {
  GradedLieAlgebra src = graded_source(F), tgt = graded_target(F);
  for (std::size_t col = 0; col < F.matrix.cols(); ++col) {
    std::size_t src_layer = src.layer_of(col);
    for (std::size_t row = 0; row < F.matrix.rows(); ++row) {
      if (F.matrix.at(row, col).is_zero()) continue;
      if (tgt.layer_of(row) != src_layer) return false;
    }
  }
  return true;
}

}  // namespace

bool validate_hom(const Homomorphism& F) {
  if (F.matrix.rows() != F.target.dim() || F.matrix.cols() != F.source.dim())
    throw ShapeError("validate_hom: matrix shape mismatch");
  if (F.graded && !layer_block_structured(F)) return false;
  std::size_t n = F.source.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Vector fi = F.matrix.apply(unit(n, i));
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector lhs = F.matrix.apply(F.source.bracket_basis(i, j));
      Vector rhs = F.target.bracket(fi, F.matrix.apply(unit(n, j)));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

AbelianizedMap abelianization_map(const Homomorphism& F) {
  AbelianizedMap ab;
  Subspace src_full = Subspace::full(F.source.dim());
  Subspace tgt_full = Subspace::full(F.target.dim());
  ab.source_derived = bracket_subspaces(F.source, src_full, src_full);
  ab.target_derived = bracket_subspaces(F.target, tgt_full, tgt_full);
  ab.source_complement = complement_basis(src_full, ab.source_derived);
  ab.target_complement = complement_basis(tgt_full, ab.target_derived);

  std::size_t ms = ab.source_complement.rows(), mt = ab.target_complement.rows();
  ab.matrix = Matrix(mt, ms);
  for (std::size_t c = 0; c < ms; ++c) {
    Vector img = F.matrix.apply(ab.source_complement.row(c));
    Vector q = quotient_coords(tgt_full, ab.target_derived, img);
    for (std::size_t r = 0; r < mt; ++r) ab.matrix.at(r, c) = q[r];
  }
  return ab;
}

std::vector<bool> layer_surjectivity(const Homomorphism& F) {
  if (!F.graded) throw ShapeError("layer_surjectivity: homomorphism is not graded");
  GradedLieAlgebra src = graded_source(F), tgt = graded_target(F);
  if (src.step() != tgt.step())
    throw ShapeError("layer_surjectivity: source and target steps differ");
  std::vector<bool> out;
  for (std::size_t i = 1; i <= tgt.step(); ++i) {
    Matrix block(tgt.layer_dim(i), src.layer_dim(i));
    for (std::size_t r = 0; r < block.rows(); ++r)
      for (std::size_t c = 0; c < block.cols(); ++c)
        block.at(r, c) = F.matrix.at(tgt.layer_offset(i) + r, src.layer_offset(i) + c);
    out.push_back(rank(block) == block.rows());
  }
  return out;
}

SurjectivityCheck surjective_iff_ab_surjective(const Homomorphism& F) {
  if (F.target_layers.empty() || !is_carnot(graded_target(F)))
    throw ShapeError("surjective_iff_ab_surjective: target is not Carnot");
  bool lhs = rank(F.matrix) == F.target.dim();
  bool rhs = abelianization_map(F).surjective();
  return {lhs, rhs, lhs == rhs};
}

RigidityVerdict rigidity_check(const Homomorphism& F, std::uint64_t d_source,
                               std::uint64_t d_target) {
  RigidityVerdict v;
  bool surjective = rank(F.matrix) == F.target.dim();
  v.applicable = surjective && d_source == d_target;
  if (!v.applicable) return v;
  v.layer_dims_equal = F.graded && F.source_layers == F.target_layers;
  if (F.matrix.rows() == F.matrix.cols()) {
    v.det = determinant(F.matrix);
    v.bijective = !v.det.is_zero();
  }
  return v;
}

namespace {

// primitive integer form: clear denominators, divide by content, first
// nonzero entry positive
Vector primitive_covector(const Vector& w) {
  mpz_class lcm_den(1), gcd_num(0);
  for (const auto& x : w) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), x.den().get_mpz_t());
    lcm_den = l;
  }
  Vector scaled(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    scaled[i] = w[i] * Rational(mpq_class(lcm_den));
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), gcd_num.get_mpz_t(), scaled[i].num().get_mpz_t());
    gcd_num = g;
  }
  if (gcd_num == 0) return scaled;
  int lead_sign = 0;
  for (const auto& x : scaled)
    if (x.sign() != 0) {
      lead_sign = x.sign();
      break;
    }
  Rational divisor(mpq_class(lead_sign < 0 ? -gcd_num : gcd_num));
  for (auto& x : scaled) x /= divisor;
  return scaled;
}

}  // namespace

Functional annihilating_functional(const Homomorphism& F) {
  if (!F.graded) throw ShapeError("annihilating_functional: homomorphism is not graded");
  GradedLieAlgebra tgt = graded_target(F);
  if (!is_carnot(tgt)) throw ShapeError("annihilating_functional: target is not Carnot");

  AbelianizedMap ab = abelianization_map(F);
  if (ab.surjective())
    throw NoFunctionalError("abelianized map is surjective; no annihilating functional exists");

  // covectors vanishing on Im(F_Ab): kernel of the matrix whose rows span it
  Subspace image = Subspace::span(ab.matrix.transpose());
  Matrix perp = kernel_basis(image.basis());
  if (perp.rows() == 0) throw NoFunctionalError("no covector orthogonal to the image");
  Vector w = primitive_covector(perp.row(0));

  Rational ns = dot(w, w);
  Rational root;
  if (ns.is_perfect_square(&root) && !root.is_zero()) {
    for (auto& x : w) x /= root;
    ns = Rational(1);
  }

  // the target is Carnot, so its abelianization complement is the first layer
  Functional ell;
  ell.covector = Vector(tgt.dim());
  for (std::size_t k = 0; k < w.size(); ++k) ell.covector[k] = w[k];
  ell.norm_square = ns;

  // ℓ∘F = 0 is guaranteed; recheck exactly
  for (std::size_t c = 0; c < F.matrix.cols(); ++c) {
    Rational s;
    for (std::size_t r = 0; r < F.matrix.rows(); ++r) s += ell.covector[r] * F.matrix.at(r, c);
    if (!s.is_zero())
      throw std::logic_error("annihilating_functional: ℓ∘F is nonzero on a basis vector");
  }
  return ell;
}

GroupElement pansu_quotient(const Homomorphism& F, const GroupElement& g, const GroupElement& x,
                            const Rational& s) {
  if (s.sign() <= 0) throw std::domain_error("pansu_quotient: s must be positive");
  GradedLieAlgebra src = graded_source(F), tgt = graded_target(F);
  GroupElement scaled = {dilate(src, s, x.coords)};
  GroupElement moved = bch_multiply(F.source, g, scaled);
  GroupElement img = F.apply(moved);
  GroupElement base_inv = inverse(F.apply(g));
  GroupElement diff = bch_multiply(F.target, base_inv, img);
  return {dilate(tgt, Rational(1) / s, diff.coords)};
}

}  // namespace nilcarnot
