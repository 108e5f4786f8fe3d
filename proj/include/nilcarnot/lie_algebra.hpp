#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "nilcarnot/subspace.hpp"

namespace nilcarnot {

/// One declared bracket [e_i, e_j] = sum_k coeffs[k] e_k, 0-based, i < j.
struct BracketSpec {
  std::size_t i, j;
  Vector coeffs;
};

/// Finite-dimensional Lie algebra over Q given by structure constants on a
/// fixed basis. Brackets are stored for i < j only; i >= j follows by
/// antisymmetry. Immutable after construction.
class LieAlgebra {
public:
  LieAlgebra() : dim_(0) {}

  static LieAlgebra from_brackets(std::size_t dim, const std::vector<BracketSpec>& brackets,
                                  std::vector<std::string> basis_names = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  /// [e_i, e_j] for any i, j (antisymmetry applied).
  Vector bracket_basis(std::size_t i, std::size_t j) const;

  /// Bilinear bracket of coordinate vectors.
  Vector bracket(const Vector& u, const Vector& v) const;

  /// Nonzero structure entries (i, j, k, c) with i < j, for iteration.
  struct Entry {
    std::size_t i, j, k;
    Rational c;
  };
  const std::vector<Entry>& nonzero_entries() const { return nonzero_; }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b);

private:
  std::size_t dim_;
  std::vector<std::string> names_;
  std::vector<Vector> table_;  // index of (i,j), i<j
  std::vector<Entry> nonzero_;

  std::size_t pair_index(std::size_t i, std::size_t j) const;  // i<j
};

struct ValidationReport {
  bool jacobi_ok = true;
  std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> first_jacobi_violation;
  bool nilpotent = true;
  std::size_t stabilized_dim = 0;  // nonzero when not nilpotent
  std::size_t step = 0;
  std::vector<std::size_t> layer_ranks;
  bool passed() const { return jacobi_ok && nilpotent; }
  std::string describe() const;
};

/// Checks the Jacobi identity on all basis triples and that the lower central
/// series reaches zero. Passes iff the input is a nilpotent Lie algebra.
ValidationReport validate(const LieAlgebra& L);

/// Descending series with its step and successive-quotient dimensions.
/// terms.front() is the whole algebra, terms.back() is zero.
struct SeriesReport {
  std::vector<Subspace> terms;
  std::size_t step = 0;
  std::vector<std::size_t> layer_ranks;
};

/// Span of [a, b] over basis vectors a of A and b of B.
Subspace bracket_subspaces(const LieAlgebra& L, const Subspace& A, const Subspace& B);

/// g_1 = g, g_{i+1} = [g, g_i]. Throws NonNilpotentError if the series
/// stabilizes at a nonzero subspace.
SeriesReport lower_central_series(const LieAlgebra& L);

/// g^(0) = g, g^(i+1) = [g^(i), g^(i)], until stable.
SeriesReport derived_series(const LieAlgebra& L);

/// {v : [v, e_k] = 0 for all k}.
Subspace center(const LieAlgebra& L);

}  // namespace nilcarnot
