#pragma once

#include <optional>

#include "nilcarnot/group.hpp"

namespace nilcarnot {

/// d(Γ) = Σ k·dim(g_k/g_{k+1}) over the lower central series (the Bass sum);
/// the polynomial degree of word growth.
std::uint64_t homogeneous_dimension(const LieAlgebra& L);

/// rank = dim of the completion = Σ layer ranks.
std::uint64_t group_rank(const LieAlgebra& L);

struct GrowthReport {
  std::uint64_t d = 0;
  std::uint64_t rank = 0;
  std::vector<std::size_t> layer_ranks;
  /// (n, #B(n), log2(#B(2n)/#B(n))) diagnostics when ball counts are present.
  std::vector<std::tuple<std::size_t, std::uint64_t, double>> empirical;
};

GrowthReport growth_report(const LieAlgebra& L, const BallRecord* ball = nullptr);

/// Doubling exponent log2(#B(2n)/#B(n)) at the largest n with 2n covered.
/// The one inexact value in the toolkit; diagnostic only. Requires n >= 4.
double estimate_growth_exponent(const BallRecord& b);

/// Per-n verdicts of N·#B_Γ(n) > #B_Δ(2n), plus the least N for which the
/// inequality holds at every covered n in [from_n, to_n].
struct InequalityReport {
  struct Row {
    std::size_t n;
    std::uint64_t lhs;  // N·#B_Γ(n)
    std::uint64_t rhs;  // #B_Δ(2n)
    bool holds;
  };
  std::vector<Row> rows;
  bool holds_for_all = false;
  std::optional<std::uint64_t> least_N;  // over the same window
};

InequalityReport conclusion_inequality_check(const BallRecord& gamma, const BallRecord& delta,
                                             std::uint64_t N, std::size_t from_n,
                                             std::size_t to_n);

}  // namespace nilcarnot
