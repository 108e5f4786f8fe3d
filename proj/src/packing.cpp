#include "nilcarnot/packing.hpp"

#include "nilcarnot/errors.hpp"

namespace nilcarnot {

Rational functional_on_group(const Functional& ell, const GroupElement& g) {
  return ell.evaluate(g.coords);
}

bool gauge_radius_check(const GradedLieAlgebra& G, const Vector& v, const Rational& r) {
  if (r.sign() <= 0) throw std::domain_error("gauge_radius_check: r must be positive");
  if (v.size() != G.dim()) throw ShapeError("gauge_radius_check: dimension mismatch");
  for (std::size_t i = 1; i <= G.step(); ++i) {
    Rational bound = r.pow(static_cast<long>(i));
    std::size_t off = G.layer_offset(i);
    for (std::size_t k = 0; k < G.layer_dim(i); ++k)
      if (v[off + k].abs() > bound) return false;
  }
  return true;
}

PackingReport build_packing(const PackingInstance& p) {
  std::size_t n = p.G.dim();
  std::size_t first_layer = p.G.layer_dims()[0];
  if (p.ell.covector.size() != n)
    throw InstanceInvalidError("functional dimension does not match the algebra");
  for (std::size_t k = first_layer; k < n; ++k)
    if (!p.ell.covector[k].is_zero())
      throw InstanceInvalidError("functional does not factor through the abelianization");
  if (p.eps.sign() <= 0 || p.mu.sign() <= 0)
    throw InstanceInvalidError("eps and mu must be positive");
  if (!(p.mu < p.eps)) throw InstanceInvalidError("mu must be smaller than eps");
  if (functional_on_group(p.ell, p.h) != Rational(1))
    throw InstanceInvalidError("ℓ(h) must equal 1 exactly");

  Rational ell_x = functional_on_group(p.ell, p.x);
  Rational third_mu = p.mu / Rational(3);
  for (std::size_t s = 0; s < p.samples.size(); ++s) {
    Rational dev = (functional_on_group(p.ell, p.samples[s]) - ell_x).abs();
    if (!(dev < third_mu))
      throw InstanceInvalidError("sample " + std::to_string(s) + " has |ℓ(s)-ℓ(x)| = " +
                                 dev.str() + " which is not below mu/3 = " + third_mu.str());
  }

  const LieAlgebra& L = p.G.algebra();
  std::size_t step = p.G.step();
  auto mul = [&](const GroupElement& a, const GroupElement& b) {
    return bch_multiply_with_step(L, step, a, b);
  };

  // h_eps = x · δ_mu(h) · x^{-1}
  GroupElement scaled_h = {dilate(p.G, p.mu, p.h.coords)};
  GroupElement h_eps = mul(mul(p.x, scaled_h), inverse(p.x));

  PackingReport rep;
  rep.ell_of_conjugate = functional_on_group(p.ell, h_eps);
  if (rep.ell_of_conjugate != p.mu)
    throw std::logic_error("ℓ(h_eps) != mu; ℓ should be conjugation-invariant");

  long jmax = static_cast<long>((p.eps / p.mu).floor().get_si());
  rep.count = static_cast<std::uint64_t>(1 + 2 * jmax);

  rep.pairwise_disjoint = true;
  rep.radius_bound_ok = true;
  Rational two_eps = Rational(2) * p.eps;
  GroupElement power = group_identity(L);  // h_eps^j, built incrementally
  std::vector<GroupElement> powers = {power};
  for (long j = 1; j <= jmax; ++j) {
    power = mul(power, h_eps);
    powers.push_back(power);
  }

  for (long j = -jmax; j <= jmax; ++j) {
    GroupElement hj = j >= 0 ? powers[static_cast<std::size_t>(j)]
                             : inverse(powers[static_cast<std::size_t>(-j)]);
    PackingReport::IntervalWitness w;
    w.j = j;
    w.lo = (Rational(3 * j - 1) / Rational(3)) * p.mu + ell_x;
    w.hi = (Rational(3 * j + 1) / Rational(3)) * p.mu + ell_x;
    for (const auto& s : p.samples) {
      GroupElement y = mul(hj, s);
      Rational v = functional_on_group(p.ell, y);
      if (!(w.lo < v && v < w.hi))
        throw std::logic_error("translate ℓ-value escaped its interval");
      w.ell_values.push_back(v);
      // containment in the 2eps gauge ball around x
      GroupElement rel = mul(inverse(p.x), y);
      if (!gauge_radius_check(p.G, rel.coords, two_eps)) rep.radius_bound_ok = false;
    }
    rep.intervals.push_back(std::move(w));
  }

  for (std::size_t a = 0; a + 1 < rep.intervals.size(); ++a)
    if (!(rep.intervals[a].hi <= rep.intervals[a + 1].lo)) rep.pairwise_disjoint = false;

  return rep;
}

}  // namespace nilcarnot
