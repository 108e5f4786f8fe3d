#include "nilcarnot/group.hpp"

#include <algorithm>
#include <unordered_set>

#include "nilcarnot/errors.hpp"

namespace nilcarnot {

GroupElement group_identity(const LieAlgebra& L) { return {Vector(L.dim())}; }

GroupElement bch_multiply(const LieAlgebra& L, const GroupElement& x, const GroupElement& y) {
  if (x.coords.size() != L.dim() || y.coords.size() != L.dim())
    throw ShapeError("bch_multiply: coordinate dimension mismatch");
  std::size_t step = lower_central_series(L).step;
  return bch_multiply_with_step(L, step, x, y);
}

GroupElement bch_multiply_with_step(const LieAlgebra& L, std::size_t step, const GroupElement& x,
                                    const GroupElement& y) {
  Vector out(L.dim());
  for (const BchTerm& term : bch_terms(step)) {
    // right-nested bracket of the word, evaluated inner-out
    std::size_t d = term.word.size();
    Vector acc = term.word[d - 1] ? y.coords : x.coords;
    bool all_zero = is_zero(acc);
    for (std::size_t i = d - 1; i-- > 0 && !all_zero;) {
      acc = L.bracket(term.word[i] ? y.coords : x.coords, acc);
      all_zero = is_zero(acc);
    }
    if (all_zero) continue;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += term.coeff * acc[k];
  }
  return {out};
}

GroupElement inverse(const GroupElement& x) { return {negate(x.coords)}; }

GeneratingSet::GeneratingSet(const LieAlgebra& L, std::vector<GroupElement> generators,
                             bool symmetric_closure) {
  for (const auto& g : generators) {
    if (g.coords.size() != L.dim()) throw ShapeError("generator dimension mismatch");
    if (g.is_identity()) throw std::domain_error("generating set contains the identity");
  }
  gens_ = std::move(generators);
  if (symmetric_closure) {
    std::size_t n = gens_.size();
    for (std::size_t i = 0; i < n; ++i) {
      GroupElement inv = inverse(gens_[i]);
      bool present = false;
      for (const auto& g : gens_)
        if (g == inv) {
          present = true;
          break;
        }
      if (!present) gens_.push_back(std::move(inv));
    }
  }
}

namespace {

struct VectorKeyHash {
  std::size_t operator()(const Vector& v) const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& r : v) h = (h ^ r.hash()) * 1099511628211ull;
    return h;
  }
};

}  // namespace

BallRecord word_ball(const LieAlgebra& L, const GeneratingSet& S, std::size_t n,
                     const WordBallOptions& opts) {
  std::size_t step = lower_central_series(L).step;

  BallRecord rec;
  std::unordered_set<Vector, VectorKeyHash> seen;
  std::vector<GroupElement> frontier = {group_identity(L)};
  seen.insert(frontier.front().coords);
  rec.counts.push_back(1);
  rec.radius = 0;

  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<GroupElement> next;
    for (const auto& g : frontier) {
      for (const auto& s : S.elements()) {
        GroupElement h = bch_multiply_with_step(L, step, g, s);
        if (seen.size() >= opts.max_elements && !seen.count(h.coords)) {
          rec.truncated_by_budget = true;
          break;
        }
        if (seen.insert(h.coords).second) next.push_back(std::move(h));
      }
      if (rec.truncated_by_budget) break;
    }
    if (rec.truncated_by_budget) break;
    rec.counts.push_back(static_cast<std::uint64_t>(seen.size()));
    rec.radius = k;
    frontier = std::move(next);
  }

  if (opts.keep_elements) {
    std::vector<GroupElement> all;
    all.reserve(seen.size());
    for (const auto& v : seen) all.push_back({v});
    std::sort(all.begin(), all.end(), [](const GroupElement& a, const GroupElement& b) {
      return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                          b.coords.end());
    });
    rec.elements = std::move(all);
  }
  return rec;
}

}  // namespace nilcarnot
