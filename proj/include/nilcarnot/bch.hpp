#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nilcarnot/rational.hpp"

namespace nilcarnot {

/// One term of the truncated Baker-Campbell-Hausdorff series:
/// coeff times the right-nested bracket [w_0,[w_1,[...,w_{d-1}]]] of the
/// letter word w over {x, y} (false = x, true = y).
struct BchTerm {
  std::vector<bool> word;
  Rational coeff;
};

/// log(exp x · exp y) truncated at bracket depth `depth`, as a combination of
/// right-nested bracket words. Computed once per depth by expanding Dynkin's
/// series over compositions and cached; terms whose nested bracket vanishes
/// identically (repeated trailing letter) or whose coefficient cancels to
/// zero are dropped. Deterministic order: by word length, then
/// lexicographically with x < y.
const std::vector<BchTerm>& bch_terms(std::size_t depth);

}  // namespace nilcarnot
