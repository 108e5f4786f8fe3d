#include "support/oracles.hpp"

namespace testsupport {

FreePoly bch_oracle(std::size_t N) {
  FreePoly x = free_letter('x'), y = free_letter('y');
  FreePoly ex = free_exp_minus_one(x, N), ey = free_exp_minus_one(y, N);
  // exp(x)exp(y) = (1+ex)(1+ey) = 1 + ex + ey + ex·ey
  FreePoly u = ex;
  free_add_scaled(u, ey, Rational(1));
  free_add_scaled(u, free_mul(ex, ey, N), Rational(1));
  return free_log_one_plus(u, N);
}

FreePoly nested_commutator_poly(const std::vector<bool>& word, std::size_t max_len) {
  FreePoly acc = free_letter(word.back() ? 'y' : 'x');
  for (std::size_t i = word.size() - 1; i-- > 0;) {
    FreePoly a = free_letter(word[i] ? 'y' : 'x');
    FreePoly left = free_mul(a, acc, max_len);
    FreePoly right = free_mul(acc, a, max_len);
    free_add_scaled(left, right, Rational(-1));
    acc = std::move(left);
  }
  return acc;
}

Matrix exp_ad(const LieAlgebra& L, const Vector& z) {
  std::size_t n = L.dim();
  // ad_z as a matrix: column j is [z, e_j]
  Matrix ad(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector col = L.bracket(z, nilcarnot::unit(n, j));
    for (std::size_t i = 0; i < n; ++i) ad.at(i, j) = col[i];
  }
  Matrix result = Matrix::identity(n);
  Matrix power = ad;
  Rational fact(1);
  for (std::size_t k = 1; k <= n; ++k) {
    fact *= Rational(static_cast<long>(k));
    bool zero = true;
    for (std::size_t r = 0; r < n && zero; ++r)
      for (std::size_t c = 0; c < n && zero; ++c)
        if (!power.at(r, c).is_zero()) zero = false;
    if (zero) break;
    Rational inv = Rational(1) / fact;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) result.at(r, c) += inv * power.at(r, c);
    power = power * ad;
  }
  return result;
}

}  // namespace testsupport
