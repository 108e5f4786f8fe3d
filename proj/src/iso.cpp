#include "nilcarnot/iso.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "nilcarnot/errors.hpp"

namespace nilcarnot {

namespace {

std::string dims_str(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

// 0/±1 covectors on a d-dimensional space, up to sign (first nonzero entry
// +1), lexicographic with -1 < 0 < 1, at most `cap` of them.
std::vector<Vector> covector_panel(std::size_t d, std::size_t cap) {
  std::vector<Vector> panel;
  std::vector<int> digits(d, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (panel.size() >= cap) return;
    if (pos == d) {
      int lead = 0;
      for (int x : digits)
        if (x != 0) {
          lead = x;
          break;
        }
      if (lead != 1) return;  // zero or sign-duplicate
      Vector v(d);
      for (std::size_t i = 0; i < d; ++i) v[i] = Rational(digits[i]);
      panel.push_back(std::move(v));
      return;
    }
    for (int x : {-1, 0, 1}) {
      digits[pos] = x;
      rec(pos + 1);
      if (panel.size() >= cap) return;
    }
  };
  rec(0);
  return panel;
}

std::vector<std::size_t> series_dims(const SeriesReport& s) {
  std::vector<std::size_t> dims;
  for (const auto& t : s.terms) dims.push_back(t.dim());
  return dims;
}

}  // namespace

InvariantProfile invariant_profile(const GradedLieAlgebra& G) {
  InvariantProfile p;
  const LieAlgebra& L = G.algebra();
  p.dim = G.dim();
  p.step = G.step();
  p.layer_dims = G.layer_dims();
  p.lcs_dims = series_dims(lower_central_series(L));
  p.derived_dims = series_dims(derived_series(L));
  Subspace z = center(L);
  p.center_dim = z.dim();
  for (std::size_t i = 1; i <= G.step(); ++i)
    p.center_layer_dims.push_back(z.intersect(G.layer_subspace(i)).dim());

  std::size_t top_off = G.layer_offset(G.step()), top_dim = G.layer_dim(G.step());
  for (const Vector& xi : covector_panel(top_dim, 256)) {
    Matrix form(p.dim, p.dim);
    for (std::size_t i = 0; i < p.dim; ++i)
      for (std::size_t j = i + 1; j < p.dim; ++j) {
        Vector br = L.bracket_basis(i, j);
        Rational val;
        for (std::size_t k = 0; k < top_dim; ++k) val += xi[k] * br[top_off + k];
        form.at(i, j) = val;
        form.at(j, i) = -val;
      }
    p.bracket_rank_samples.push_back(rank(form));
  }
  std::sort(p.bracket_rank_samples.begin(), p.bracket_rank_samples.end());
  return p;
}

std::optional<std::string> InvariantProfile::first_difference(const InvariantProfile& a,
                                                              const InvariantProfile& b) {
  auto fmt = [](const std::string& name, const std::string& va, const std::string& vb) {
    return name + ": " + va + " vs " + vb;
  };
  if (a.dim != b.dim) return fmt("dim", std::to_string(a.dim), std::to_string(b.dim));
  if (a.step != b.step) return fmt("step", std::to_string(a.step), std::to_string(b.step));
  if (a.layer_dims != b.layer_dims)
    return fmt("layer_dims", dims_str(a.layer_dims), dims_str(b.layer_dims));
  if (a.lcs_dims != b.lcs_dims) return fmt("lcs_dims", dims_str(a.lcs_dims), dims_str(b.lcs_dims));
  if (a.derived_dims != b.derived_dims)
    return fmt("derived_dims", dims_str(a.derived_dims), dims_str(b.derived_dims));
  if (a.center_dim != b.center_dim)
    return fmt("center_dim", std::to_string(a.center_dim), std::to_string(b.center_dim));
  if (a.center_layer_dims != b.center_layer_dims)
    return fmt("center_layer_dims", dims_str(a.center_layer_dims), dims_str(b.center_layer_dims));
  if (a.bracket_rank_samples != b.bracket_rank_samples)
    return fmt("bracket_rank_samples", dims_str(a.bracket_rank_samples),
               dims_str(b.bracket_rank_samples));
  return std::nullopt;
}

std::optional<Homomorphism> induce_graded_from_first_layer(const GradedLieAlgebra& G,
                                                           const GradedLieAlgebra& H,
                                                           const Matrix& A) {
  if (A.rows() != H.layer_dim(1) || A.cols() != G.layer_dim(1))
    throw ShapeError("induce: block must map first layer to first layer");
  std::size_t n = G.dim();
  auto h_layer_dim = [&](std::size_t i) { return i <= H.step() ? H.layer_dim(i) : 0; };
  std::vector<Matrix> blocks = {A};
  for (std::size_t i = 2; i <= G.step(); ++i) {
    std::size_t dg1 = G.layer_dim(1), dgp = G.layer_dim(i - 1), dgi = G.layer_dim(i);
    std::size_t dhi = h_layer_dim(i), dhp = h_layer_dim(i - 1);
    std::size_t cols = dg1 * dgp;
    if (dhi == 0) {
      // layers of G past the step of H can only map to zero
      blocks.push_back(Matrix(0, dgi));
      continue;
    }
    Matrix S(dgi, cols), T(dhi, cols);
    const Matrix& Mprev = blocks[i - 2];
    for (std::size_t a = 0; a < dg1; ++a) {
      // image of the a-th first-layer basis vector, as a full H-vector
      Vector Au(H.dim());
      for (std::size_t r = 0; r < H.layer_dim(1); ++r) Au[H.layer_offset(1) + r] = A.at(r, a);
      for (std::size_t b = 0; b < dgp; ++b) {
        Vector brG = G.algebra().bracket(unit(n, G.layer_offset(1) + a),
                                         unit(n, G.layer_offset(i - 1) + b));
        Vector Mw(H.dim());
        for (std::size_t r = 0; r < dhp; ++r) Mw[H.layer_offset(i - 1) + r] = Mprev.at(r, b);
        Vector brH = H.algebra().bracket(Au, Mw);
        std::size_t col = a * dgp + b;
        for (std::size_t r = 0; r < dgi; ++r) S.at(r, col) = brG[G.layer_offset(i) + r];
        for (std::size_t r = 0; r < dhi; ++r) T.at(r, col) = brH[H.layer_offset(i) + r];
      }
    }
    // M S = T  <=>  S^T M^T = T^T; S has full row rank since G is Carnot
    auto mt = try_solve_matrix(S.transpose(), T.transpose());
    if (!mt) return std::nullopt;
    blocks.push_back(mt->transpose());
  }
  Matrix full(H.dim(), n);
  for (std::size_t i = 1; i <= G.step(); ++i) {
    const Matrix& B = blocks[i - 1];
    for (std::size_t r = 0; r < B.rows(); ++r)
      for (std::size_t c = 0; c < B.cols(); ++c)
        full.at(H.layer_offset(i) + r, G.layer_offset(i) + c) = B.at(r, c);
  }
  return make_graded_hom(G, H, std::move(full));
}

namespace {

// deterministic candidate stream for first-layer blocks
class CandidateStream {
public:
  CandidateStream(std::size_t d, std::uint64_t seed) : d_(d), rng_(seed) {}

  Matrix next() {
    ++index_;
    if (index_ == 1) return Matrix::identity(d_);
    // lexicographic enumeration over entries {0, 1, -1}
    if (!enum_done_) {
      std::vector<int> digits(d_ * d_);
      std::uint64_t v = enum_counter_++;
      bool overflow = true;
      for (std::size_t k = 0; k < digits.size(); ++k) {
        digits[k] = static_cast<int>(v % 3);
        v /= 3;
        if (digits[k] == 2) digits[k] = -1;
      }
      overflow = v > 0;
      if (!overflow) {
        Matrix m(d_, d_);
        for (std::size_t r = 0; r < d_; ++r)
          for (std::size_t c = 0; c < d_; ++c) m.at(r, c) = Rational(digits[r * d_ + c]);
        return m;
      }
      enum_done_ = true;
    }
    std::uniform_int_distribution<int> dist(-3, 3);
    Matrix m(d_, d_);
    for (std::size_t r = 0; r < d_; ++r)
      for (std::size_t c = 0; c < d_; ++c) m.at(r, c) = Rational(dist(rng_));
    return m;
  }

private:
  std::size_t d_;
  std::uint64_t index_ = 0;
  std::uint64_t enum_counter_ = 0;
  bool enum_done_ = false;
  std::mt19937_64 rng_;
};

bool graded_bijective(const Homomorphism& F) {
  return F.matrix.rows() == F.matrix.cols() && !determinant(F.matrix).is_zero();
}

}  // namespace

std::optional<Homomorphism> find_graded_isomorphism(const GradedLieAlgebra& G,
                                                    const GradedLieAlgebra& H,
                                                    const IsoSearchOptions& opts) {
  if (G.layer_dims() != H.layer_dims()) return std::nullopt;
  CandidateStream stream(G.layer_dim(1), opts.seed);
  for (std::uint64_t tried = 0; tried < opts.budget; ++tried) {
    Matrix A = stream.next();
    if (rank(A) != A.rows()) continue;
    auto F = induce_graded_from_first_layer(G, H, A);
    if (!F) continue;
    if (!graded_bijective(*F)) continue;
    if (!validate_hom(*F)) continue;
    return F;
  }
  return std::nullopt;
}

IsoVerdict iso_verdict(const GradedLieAlgebra& G, const GradedLieAlgebra& H,
                       const IsoSearchOptions& opts) {
  InvariantProfile pg = invariant_profile(G), ph = invariant_profile(H);
  if (auto diff = InvariantProfile::first_difference(pg, ph))
    return {IsoVerdict::Kind::NonIsomorphic, std::nullopt, diff, std::nullopt};
  if (auto witness = find_graded_isomorphism(G, H, opts)) {
    // soundness: re-verify independently of the search path
    if (validate_hom(*witness) && graded_bijective(*witness))
      return {IsoVerdict::Kind::Isomorphic, witness, std::nullopt, std::nullopt};
  }
  return {IsoVerdict::Kind::Unknown, std::nullopt, std::nullopt,
          "no witness within budget of " + std::to_string(opts.budget) + " candidates"};
}

}  // namespace nilcarnot
