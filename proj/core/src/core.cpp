#include "psharm/core.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace psharm {

void validate(const UnitSystem& u) {
  if (!(u.hbar > 0.0) || !std::isfinite(u.hbar))
    throw std::domain_error("UnitSystem: hbar must be positive and finite");
  if (!(u.mass > 0.0) || !std::isfinite(u.mass))
    throw std::domain_error("UnitSystem: mass must be positive and finite");
}

void validate(const QuantumNumbers& q) {
  if (q.n < 0) throw std::domain_error("QuantumNumbers: n must be >= 0");
  if (q.ell < 0) throw std::domain_error("QuantumNumbers: ell must be >= 0");
  if (q.dim < 2) throw std::domain_error("QuantumNumbers: dim must be >= 2");
}

CoefficientSet from_molecular(const MolecularParams& m,
                              const UnitSystem& units) {
  validate(units);
  if (!(m.De > 0.0) || !std::isfinite(m.De))
    throw std::domain_error("MolecularParams: De must be positive");
  if (!(m.re > 0.0) || !std::isfinite(m.re))
    throw std::domain_error("MolecularParams: re must be positive");
  CoefficientSet c;
  c.a1 = m.De / (m.re * m.re);
  c.a2 = m.De * m.re * m.re;
  c.a3 = -2.0 * m.De;
  c.units = units;
  return c;
}

ReducedParams reduce(const CoefficientSet& c, const QuantumNumbers& q) {
  validate(c.units);
  validate(q);
  if (!(c.a1 > 0.0))
    throw std::domain_error("CoefficientSet: a1 must be > 0 (no bound spectrum)");
  if (c.a2 < 0.0)
    throw std::domain_error("CoefficientSet: a2 must be >= 0");

  const double hbar = c.units.hbar;
  const double mass = c.units.mass;
  // Dimensionless combinations; everything downstream depends on the
  // coefficients only through these two ratios.
  const double two_m_a1 = 2.0 * mass * c.a1 / (hbar * hbar);
  const double two_m_a2 = 2.0 * mass * c.a2 / (hbar * hbar);

  const double beta = static_cast<double>(q.ell) * (q.ell + q.dim - 2);
  const double nu_nu1 = beta + two_m_a2;

  ReducedParams rp;
  rp.nu = 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * nu_nu1));
  rp.mu = std::sqrt(two_m_a1);
  const double nm2 = static_cast<double>(q.dim) - 2.0;
  rp.k = 0.5 * (nm2 + std::sqrt(nm2 * nm2 + 4.0 * nu_nu1));
  rp.eta = rp.k - 0.5 * q.dim + 2.0;

  // k must solve the constraint quadratic that terminates the series.
  const double constraint =
      rp.k * (rp.k + 1.0) - rp.k * (q.dim - 1.0) - rp.nu * (rp.nu + 1.0);
  assert(std::abs(constraint) <= 1e-12 * std::max(1.0, rp.k * rp.k));
  (void)constraint;
  assert(rp.eta > 0.0);

  return rp;
}

double potential_value(const CoefficientSet& c, double r) {
  if (!(r > 0.0)) throw std::domain_error("potential_value: r must be > 0");
  return c.a1 * r * r + c.a2 / (r * r) + c.a3;
}

}  // namespace psharm
