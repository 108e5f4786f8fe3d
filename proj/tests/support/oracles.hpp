#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "nilcarnot/lie_algebra.hpp"
#include "nilcarnot/matrix.hpp"

namespace testsupport {

using nilcarnot::LieAlgebra;
using nilcarnot::Matrix;
using nilcarnot::Rational;
using nilcarnot::Vector;

// ---------------------------------------------------------------------------
// Truncated free associative algebra on two letters: polynomials over words
// of length <= N. Enough to define exp, log and nested commutators, which
// gives an independent check of the whole BCH table: the table expanded into
// associative words must equal log(exp x · exp y) computed here.
// ---------------------------------------------------------------------------

// word -> coefficient; words are strings over 'x','y'
using FreePoly = std::map<std::string, Rational>;

inline FreePoly free_letter(char c) { return {{std::string(1, c), Rational(1)}}; }

inline void free_add_scaled(FreePoly& a, const FreePoly& b, const Rational& s) {
  for (const auto& [w, c] : b) {
    auto it = a.emplace(w, Rational(0)).first;
    it->second += s * c;
    if (it->second.is_zero()) a.erase(it);
  }
}

inline FreePoly free_mul(const FreePoly& a, const FreePoly& b, std::size_t max_len) {
  FreePoly out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      if (wa.size() + wb.size() > max_len) continue;
      Rational c = ca * cb;
      if (c.is_zero()) continue;
      auto it = out.emplace(wa + wb, Rational(0)).first;
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  return out;
}

// exp(a) - 1 for a with no constant term (the 1 is handled explicitly by the
// caller so polynomials never need a constant word)
inline FreePoly free_exp_minus_one(const FreePoly& a, std::size_t max_len) {
  FreePoly sum;
  FreePoly term = a;  // a^k / k!
  for (std::size_t k = 1; k <= max_len && !term.empty(); ++k) {
    free_add_scaled(sum, term, Rational(1));
    term = free_mul(term, a, max_len);
    for (auto& [w, c] : term) c /= Rational(static_cast<long>(k) + 1);
  }
  return sum;
}

// log(1 + u) for u with no constant term
inline FreePoly free_log_one_plus(const FreePoly& u, std::size_t max_len) {
  FreePoly sum;
  FreePoly power = u;
  for (std::size_t k = 1; k <= max_len && !power.empty(); ++k) {
    Rational coeff = Rational((k % 2) ? 1 : -1) / Rational(static_cast<long>(k));
    free_add_scaled(sum, power, coeff);
    power = free_mul(power, u, max_len);
  }
  return sum;
}

// log(exp x · exp y) truncated at word length N, from first principles
FreePoly bch_oracle(std::size_t N);

// right-nested commutator [w0,[w1,[...]]] of a letter word, expanded into
// associative words
FreePoly nested_commutator_poly(const std::vector<bool>& word, std::size_t max_len);

// ---------------------------------------------------------------------------
// Randomness helpers (all deterministic under a fixed seed)
// ---------------------------------------------------------------------------

class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen_);
  }

  // small rational with numerator in [-9,9] and denominator in [1,4]
  Rational rational() { return Rational(integer(-9, 9), integer(1, 4)); }

  Rational nonzero_rational() {
    while (true) {
      Rational r = rational();
      if (!r.is_zero()) return r;
    }
  }

  Rational positive_rational() { return Rational(integer(1, 9), integer(1, 4)); }

  Vector vector(std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = rational();
    return v;
  }

  Matrix matrix(std::size_t rows, std::size_t cols, long lo = -2, long hi = 2) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Rational(integer(lo, hi));
    return m;
  }

  std::mt19937_64& gen() { return gen_; }

private:
  std::mt19937_64 gen_;
};

// ---------------------------------------------------------------------------
// Closed-form ball counts used as growth oracles
// ---------------------------------------------------------------------------

inline std::uint64_t z1_ball(std::uint64_t n) { return 2 * n + 1; }
inline std::uint64_t z2_ball(std::uint64_t n) { return 2 * n * n + 2 * n + 1; }
inline std::uint64_t z3_ball(std::uint64_t n) {
  return (2 * n + 1) * (2 * n * n + 2 * n + 3) / 3;
}

// exp(ad_z), an inner automorphism of a nilpotent algebra: the sum
// I + ad_z + ad_z^2/2! + ... terminates at the step.
Matrix exp_ad(const LieAlgebra& L, const Vector& z);

}  // namespace testsupport
