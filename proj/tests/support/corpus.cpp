#include "support/corpus.hpp"

#include <stdexcept>

#include "nilcarnot/morphisms.hpp"

namespace testsupport {

using namespace nilcarnot;

std::vector<std::pair<std::string, GradedLieAlgebra>> carnot_models() {
  std::vector<std::pair<std::string, GradedLieAlgebra>> out;
  for (const std::string name :
       {"h3", "h5", "h3_plus_ab2", "filiform4", "free32", "twostep_d7", "ab2", "ab4"})
    out.emplace_back(name, associated_graded(*catalog::preset(name)));
  return out;
}

LieAlgebra transport(const LieAlgebra& L, const Matrix& P) {
  std::size_t n = L.dim();
  if (rank(P) != n) throw std::invalid_argument("transport: P must be invertible");
  std::vector<BracketSpec> brackets;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vector w = L.bracket(P.apply(unit(n, a)), P.apply(unit(n, b)));
      Vector c = solve(P, w);
      if (!is_zero(c)) brackets.push_back({a, b, c});
    }
  return LieAlgebra::from_brackets(n, brackets);
}

GradedLieAlgebra transport_graded(const GradedLieAlgebra& G, const Matrix& P) {
  return GradedLieAlgebra::from_layers(transport(G.algebra(), P), G.layer_dims());
}

Matrix random_graded_basis_change(const GradedLieAlgebra& G, Rng& rng) {
  Matrix P(G.dim(), G.dim());
  for (std::size_t i = 1; i <= G.step(); ++i) {
    std::size_t off = G.layer_offset(i), d = G.layer_dim(i);
    while (true) {
      Matrix block = rng.matrix(d, d);
      if (rank(block) != d) continue;
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) P.at(off + r, off + c) = block.at(r, c);
      break;
    }
  }
  return P;
}

std::vector<Homomorphism> random_graded_endos(const GradedLieAlgebra& G, std::size_t attempts,
                                              Rng& rng, bool force_singular) {
  std::vector<Homomorphism> out;
  std::size_t d1 = G.layer_dim(1);
  for (std::size_t k = 0; k < attempts; ++k) {
    Matrix A = rng.matrix(d1, d1);
    if (force_singular && d1 > 0) {
      // zero a row to kill surjectivity
      std::size_t r = static_cast<std::size_t>(rng.integer(0, static_cast<long>(d1) - 1));
      for (std::size_t c = 0; c < d1; ++c) A.at(r, c) = Rational(0);
    }
    auto F = induce_graded_from_first_layer(G, G, A);
    if (!F) continue;
    if (!validate_hom(*F)) continue;
    out.push_back(std::move(*F));
  }
  return out;
}

namespace {

// conjugate F by inner automorphisms: Ad_target ∘ F ∘ Ad_source. Valid, same
// rank, generally not layer-block structured.
Homomorphism conjugate_by_inner(const Homomorphism& F, Rng& rng) {
  Vector zs = rng.vector(F.source.dim());
  Vector zt = rng.vector(F.target.dim());
  Matrix ad_s = exp_ad(F.source, zs), ad_t = exp_ad(F.target, zt);
  Homomorphism out = F;
  out.matrix = ad_t * F.matrix * ad_s;
  out.graded = false;
  return out;
}

Homomorphism quotient_hom(const GradedLieAlgebra& src, const GradedLieAlgebra& tgt,
                          std::initializer_list<std::initializer_list<long>> rows) {
  Matrix m(tgt.dim(), src.dim());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (long v : row) m.at(r, c++) = Rational(v);
    ++r;
  }
  Homomorphism F = make_graded_hom(src, tgt, m);
  if (!validate_hom(F)) throw std::logic_error("fixture hom is not valid");
  return F;
}

}  // namespace

std::vector<Homomorphism> homs_into_carnot_corpus(std::size_t min_count, std::uint64_t seed) {
  Rng rng(seed);
  auto models = carnot_models();
  std::vector<Homomorphism> corpus;

  auto free32 = associated_graded(*catalog::preset("free32"));
  auto h3 = associated_graded(*catalog::preset("h3"));
  auto filiform4 = associated_graded(*catalog::preset("filiform4"));
  auto h3ab2 = associated_graded(*catalog::preset("h3_plus_ab2"));

  // fixed structured maps: quotients of the free algebra, an inclusion
  corpus.push_back(quotient_hom(free32, h3,
                                {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}}));
  corpus.push_back(quotient_hom(
      free32, filiform4,
      {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}}));
  corpus.push_back(quotient_hom(h3, h3ab2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}, {0, 0, 0},
                                            {0, 0, 1}}));

  while (corpus.size() < min_count) {
    for (const auto& [name, G] : models) {
      // graded endomorphisms, invertible and singular first-layer blocks
      for (auto& F : random_graded_endos(G, 2, rng, false)) corpus.push_back(std::move(F));
      for (auto& F : random_graded_endos(G, 2, rng, true)) corpus.push_back(std::move(F));
      // zero map
      auto zero = induce_graded_from_first_layer(G, G, Matrix(G.layer_dim(1), G.layer_dim(1)));
      if (zero && validate_hom(*zero)) corpus.push_back(std::move(*zero));
      // maps from an abelian source into the top layer (central image)
      static const GradedLieAlgebra ab = associated_graded(*catalog::preset("ab2"));
      Matrix central(G.dim(), ab.dim());
      std::size_t top_off = G.layer_offset(G.step());
      for (std::size_t r = 0; r < G.layer_dim(G.step()); ++r)
        for (std::size_t c = 0; c < ab.dim(); ++c)
          central.at(top_off + r, c) = Rational(rng.integer(-2, 2));
      Homomorphism central_hom{ab.algebra(), G.algebra(), ab.layer_dims(), G.layer_dims(),
                               central, false};
      if (validate_hom(central_hom)) corpus.push_back(std::move(central_hom));
    }
    // non-graded conjugates of a sample of what we have so far
    std::size_t base = corpus.size();
    for (std::size_t k = 0; k + 1 < base && k < 8; ++k)
      corpus.push_back(conjugate_by_inner(corpus[base - 1 - k], rng));
  }

  for (const auto& F : corpus)
    if (!validate_hom(F)) throw std::logic_error("corpus produced an invalid homomorphism");
  return corpus;
}

std::vector<Homomorphism> nonsurjective_graded_corpus(std::size_t min_count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Homomorphism> corpus;
  auto h3 = associated_graded(*catalog::preset("h3"));
  auto free32 = associated_graded(*catalog::preset("free32"));
  auto filiform4 = associated_graded(*catalog::preset("filiform4"));
  auto h3ab2 = associated_graded(*catalog::preset("h3_plus_ab2"));
  auto h5 = associated_graded(*catalog::preset("h5"));

  corpus.push_back(quotient_hom(h3, h3ab2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}, {0, 0, 0},
                                            {0, 0, 1}}));

  std::vector<GradedLieAlgebra> selves = {h3, free32, filiform4, h5, h3ab2};
  while (corpus.size() < min_count) {
    for (const auto& G : selves)
      for (auto& F : random_graded_endos(G, 3, rng, true)) {
        if (abelianization_map(F).surjective()) continue;
        corpus.push_back(std::move(F));
      }
    // cross maps h3 -> free32 with singular first-layer block
    Matrix A = rng.matrix(2, 2);
    for (std::size_t c = 0; c < 2; ++c) A.at(1, c) = A.at(0, c);  // rank <= 1
    if (auto F = induce_graded_from_first_layer(h3, free32, A))
      if (validate_hom(*F)) corpus.push_back(std::move(*F));
  }
  return corpus;
}

}  // namespace testsupport
