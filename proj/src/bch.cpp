#include "nilcarnot/bch.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace nilcarnot {

namespace {

Rational factorial(std::size_t n) {
  Rational f(1);
  for (std::size_t k = 2; k <= n; ++k) f *= Rational(static_cast<long>(k));
  return f;
}

// Dynkin's series: log(e^x e^y) equals the sum over sequences
// (r_1,s_1),...,(r_m,s_m) with r_i + s_i > 0 of
//   (-1)^{m-1} / (m · d · prod r_i! s_i!)
// times the right-nested bracketing of the word x^{r_1} y^{s_1} ... y^{s_m},
// where d is the word length. Terms of length > depth vanish in a step-depth
// algebra and are not generated.
void extend(std::vector<bool>& word, std::size_t parts, const Rational& fact_prod,
            std::size_t depth, std::map<std::vector<bool>, Rational>& acc) {
  if (!word.empty()) {
    Rational sign((parts % 2) ? 1 : -1);
    Rational contrib =
        sign / (Rational(static_cast<long>(parts)) * Rational(static_cast<long>(word.size())) *
                fact_prod);
    acc[word] += contrib;
  }
  std::size_t room = depth - word.size();
  for (std::size_t r = 0; r <= room; ++r)
    for (std::size_t s = 0; r + s <= room; ++s) {
      if (r + s == 0) continue;
      for (std::size_t k = 0; k < r; ++k) word.push_back(false);
      for (std::size_t k = 0; k < s; ++k) word.push_back(true);
      extend(word, parts + 1, fact_prod * factorial(r) * factorial(s), depth, acc);
      word.resize(word.size() - r - s);
    }
}

std::vector<BchTerm> build_table(std::size_t depth) {
  std::map<std::vector<bool>, Rational> acc;
  std::vector<bool> word;
  extend(word, 0, Rational(1), depth, acc);

  std::vector<BchTerm> terms;
  for (auto& [w, c] : acc) {
    if (c.is_zero()) continue;
    // right-nested bracket vanishes when the two innermost letters coincide
    std::size_t d = w.size();
    if (d >= 2 && w[d - 1] == w[d - 2]) continue;
    terms.push_back({w, c});
  }
  std::sort(terms.begin(), terms.end(), [](const BchTerm& a, const BchTerm& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });
  return terms;
}

}  // namespace

const std::vector<BchTerm>& bch_terms(std::size_t depth) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<BchTerm>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(depth);
  if (it == cache.end()) it = cache.emplace(depth, build_table(depth)).first;
  return it->second;
}

}  // namespace nilcarnot
