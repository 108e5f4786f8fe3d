#include "nilcarnot/growth.hpp"

#include <cmath>

#include "nilcarnot/errors.hpp"

namespace nilcarnot {

std::uint64_t homogeneous_dimension(const LieAlgebra& L) {
  SeriesReport lcs = lower_central_series(L);
  std::uint64_t d = 0;
  for (std::size_t k = 0; k < lcs.layer_ranks.size(); ++k)
    d += static_cast<std::uint64_t>(k + 1) * lcs.layer_ranks[k];
  return d;
}

std::uint64_t group_rank(const LieAlgebra& L) { return L.dim(); }

GrowthReport growth_report(const LieAlgebra& L, const BallRecord* ball) {
  GrowthReport rep;
  SeriesReport lcs = lower_central_series(L);
  rep.layer_ranks = lcs.layer_ranks;
  for (std::size_t k = 0; k < lcs.layer_ranks.size(); ++k)
    rep.d += static_cast<std::uint64_t>(k + 1) * lcs.layer_ranks[k];
  rep.rank = L.dim();
  if (ball) {
    for (std::size_t n = 1; 2 * n <= ball->radius; ++n) {
      double ratio = static_cast<double>(ball->count_at(2 * n)) /
                     static_cast<double>(ball->count_at(n));
      rep.empirical.emplace_back(n, ball->count_at(n), std::log2(ratio));
    }
  }
  return rep;
}

double estimate_growth_exponent(const BallRecord& b) {
  if (b.radius < 8)
    throw BudgetError("estimate_growth_exponent: need counts at n and 2n for some n >= 4");
  std::size_t n = b.radius / 2;
  double ratio = static_cast<double>(b.count_at(2 * n)) / static_cast<double>(b.count_at(n));
  return std::log2(ratio);
}

InequalityReport conclusion_inequality_check(const BallRecord& gamma, const BallRecord& delta,
                                             std::uint64_t N, std::size_t from_n,
                                             std::size_t to_n) {
  if (2 * to_n > delta.radius || to_n > gamma.radius)
    throw BudgetError("conclusion_inequality_check: records do not cover n and 2n up to " +
                      std::to_string(to_n));
  if (from_n == 0 || from_n > to_n)
    throw std::domain_error("conclusion_inequality_check: bad window");

  InequalityReport rep;
  rep.holds_for_all = true;
  std::uint64_t least = 1;
  for (std::size_t n = from_n; n <= to_n; ++n) {
    std::uint64_t bg = gamma.count_at(n), bd = delta.count_at(2 * n);
    bool holds = N * bg > bd;
    rep.rows.push_back({n, N * bg, bd, holds});
    rep.holds_for_all = rep.holds_for_all && holds;
    // least N with N·bg > bd is floor(bd/bg)+1
    std::uint64_t need = bd / bg + 1;
    least = std::max(least, need);
  }
  rep.least_N = least;
  return rep;
}

}  // namespace nilcarnot
