#include "nilcarnot/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace nilcarnot {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw std::invalid_argument("Rational: bad character in '" + s + "'");
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

Rational Rational::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw std::invalid_argument("Rational: 0 to negative power");
    return (Rational(1) / *this).pow(-e);
  }
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(r);  // num/den coprime, so powers are too
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

bool Rational::is_perfect_square(Rational* root) const {
  if (sign() < 0) return false;
  if (!mpz_perfect_square_p(v_.get_num_mpz_t()) || !mpz_perfect_square_p(v_.get_den_mpz_t()))
    return false;
  if (root) {
    mpq_class r;
    mpz_sqrt(r.get_num_mpz_t(), v_.get_num_mpz_t());
    mpz_sqrt(r.get_den_mpz_t(), v_.get_den_mpz_t());
    *root = Rational(r);
  }
  return true;
}

std::string Rational::str() const { return v_.get_str(); }

std::size_t Rational::hash() const {
  // FNV over the limb data of num and den
  auto mix = [](std::size_t h, const mpz_class& z) {
    h = h * 1099511628211ull ^ static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
    std::size_t n = mpz_size(z.get_mpz_t());
    const mp_limb_t* limbs = mpz_limbs_read(z.get_mpz_t());
    for (std::size_t i = 0; i < n; ++i)
      h = (h ^ static_cast<std::size_t>(limbs[i])) * 1099511628211ull;
    return h;
  };
  std::size_t h = 14695981039346656037ull;
  h = mix(h, v_.get_num());
  h = mix(h, v_.get_den());
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace nilcarnot
