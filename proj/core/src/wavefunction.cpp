#include "psharm/wavefunction.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "psharm/specfun.hpp"

namespace psharm::radial {

namespace {

double power_exponent(const RadialState& s) {
  return s.rp.eta - 0.5 * s.qn.dim;  // r exponent; >= 0 for valid states
}

}  // namespace

RadialState make_state(const CoefficientSet& c, const QuantumNumbers& q) {
  RadialState s;
  s.qn = q;
  s.coeffs = c;
  s.rp = reduce(c, q);

  const double eta = s.rp.eta;
  const double n = q.n;
  // Gamma ratios in log space so large quantum numbers cannot overflow.
  const double ln_ratio =
      specfun::ln_gamma(n + 1.0) - specfun::ln_gamma(eta + n);
  s.norm_const = std::exp(0.5 * std::numbers::ln2 +
                          0.5 * eta * std::log(s.rp.mu) + 0.5 * ln_ratio);
  s.zeta = std::exp(0.5 * std::numbers::ln2 +
                    0.25 * q.dim * std::log(s.rp.mu) + 0.5 * ln_ratio);

  // The 1F1-form constant carries an extra Gamma(eta+n)/(n! Gamma(eta))
  // relative to the Laguerre form; the Laguerre conversion factor is its
  // reciprocal. Their product must reproduce norm_const.
  const double ln_c30 = 0.5 * std::numbers::ln2 +
                        0.5 * eta * std::log(s.rp.mu) + 0.5 * ln_ratio +
                        specfun::ln_gamma(eta + n) -
                        specfun::ln_gamma(n + 1.0) - specfun::ln_gamma(eta);
  const double conversion =
      std::exp(specfun::ln_gamma(n + 1.0) + specfun::ln_gamma(eta) -
               specfun::ln_gamma(eta + n));
  const double reconciled = std::exp(ln_c30) * conversion;
  if (std::abs(reconciled / s.norm_const - 1.0) > 1e-12)
    throw std::logic_error(
        "make_state: 1F1-form and Laguerre-form constants disagree");
  return s;
}

double eval_r(const RadialState& s, double r) {
  if (r < 0.0) throw std::domain_error("eval_r: r must be >= 0");
  const double p = power_exponent(s);
  if (r == 0.0) {
    if (p > 0.0) return 0.0;
    // p == 0 corner (N=2, l=0, a2=0): r^0 = 1.
    return s.norm_const * specfun::laguerre(s.qn.n, s.rp.eta - 1.0, 0.0);
  }
  const double z = s.rp.mu * r * r;
  return s.norm_const * std::exp(-0.5 * z) * std::pow(r, p) *
         specfun::laguerre(s.qn.n, s.rp.eta - 1.0, z);
}

double eval_z(const RadialState& s, double z) {
  if (z < 0.0) throw std::domain_error("eval_z: z must be >= 0");
  const double q = 0.5 * s.rp.eta - 0.25 * s.qn.dim;
  if (z == 0.0) {
    if (q > 0.0) return 0.0;
    return s.zeta * specfun::laguerre(s.qn.n, s.rp.eta - 1.0, 0.0);
  }
  return s.zeta * std::exp(-0.5 * z) * std::pow(z, q) *
         specfun::laguerre(s.qn.n, s.rp.eta - 1.0, z);
}

double eval_z_derivative(const RadialState& s, double z) {
  if (!(z > 0.0)) throw std::domain_error("eval_z_derivative: z must be > 0");
  const double q = 0.5 * s.rp.eta - 0.25 * s.qn.dim;
  const double alpha = s.rp.eta - 1.0;
  const double value = eval_z(s, z);
  const double dpoly = specfun::laguerre_derivative(s.qn.n, alpha, z);
  return value * (q / z - 0.5) +
         s.zeta * std::exp(-0.5 * z) * std::pow(z, q) * dpoly;
}

RadialDerivs eval_r_derivs(const RadialState& s, double r) {
  if (!(r > 0.0)) throw std::domain_error("eval_r_derivs: r must be > 0");
  const double p = power_exponent(s);
  const double alpha = s.rp.eta - 1.0;
  const double z = s.rp.mu * r * r;
  const int n = s.qn.n;

  const double lag = specfun::laguerre(n, alpha, z);
  const double dlag = specfun::laguerre_derivative(n, alpha, z);
  const double ddlag = specfun::laguerre_second_derivative(n, alpha, z);

  const double front = s.norm_const * std::exp(-0.5 * z);
  // R   = front r^p L
  // R'  = front r^{p-1} A,  A = (p - z) L + 2 z L'
  // R'' = front r^{p-2} B,  B = (p - 1 - z) A + 2 z A'
  //       A' (w.r.t. z) = -L + (p - z + 2) L' + 2 z L''
  const double a_val = (p - z) * lag + 2.0 * z * dlag;
  const double a_prime = -lag + (p - z + 2.0) * dlag + 2.0 * z * ddlag;
  const double b_val = (p - 1.0 - z) * a_val + 2.0 * z * a_prime;

  RadialDerivs d;
  d.value = front * std::pow(r, p) * lag;
  d.d1 = front * std::pow(r, p - 1.0) * a_val;
  d.d2 = front * std::pow(r, p - 2.0) * b_val;
  return d;
}

double suggested_r_max(const RadialState& s) {
  // z past the outermost Laguerre zero (~4n + 2 eta) by a margin that puts
  // the Gaussian tail below 1e-12.
  return std::sqrt((4.0 * s.qn.n + 2.0 * s.rp.eta + 55.0) / s.rp.mu);
}

RadialGrid make_log_grid(const RadialState& s, int points) {
  if (points < 2) throw std::domain_error("make_log_grid: need >= 2 points");
  const double r_lo = 1e-3 / std::sqrt(s.rp.mu);
  const double r_hi = suggested_r_max(s);
  RadialGrid g;
  g.points.resize(points);
  const double step = std::log(r_hi / r_lo) / (points - 1);
  for (int i = 0; i < points; ++i)
    g.points[i] = r_lo * std::exp(i * step);
  g.weights.assign(points, 0.0);
  for (int i = 0; i + 1 < points; ++i) {
    const double half = 0.5 * (g.points[i + 1] - g.points[i]);
    g.weights[i] += half;
    g.weights[i + 1] += half;
  }
  return g;
}

double norm_integral(const RadialState& s, double tolerance) {
  const double nm1 = s.qn.dim - 1.0;
  const auto f = [&](double r) {
    const double v = eval_r(s, r);
    return v * v * std::pow(r, nm1);
  };
  specfun::QuadratureRule rule;
  rule.tolerance = tolerance;
  return specfun::integrate(f, 0.0, suggested_r_max(s), rule);
}

double overlap(const RadialState& s1, const RadialState& s2,
               double tolerance) {
  const bool same_family =
      s1.qn.ell == s2.qn.ell && s1.qn.dim == s2.qn.dim &&
      s1.coeffs.a1 == s2.coeffs.a1 && s1.coeffs.a2 == s2.coeffs.a2 &&
      s1.coeffs.a3 == s2.coeffs.a3 &&
      s1.coeffs.units.hbar == s2.coeffs.units.hbar &&
      s1.coeffs.units.mass == s2.coeffs.units.mass;
  if (!same_family)
    throw std::domain_error(
        "overlap: states must share (ell, N) and coefficients");
  const double nm1 = s1.qn.dim - 1.0;
  const auto f = [&](double r) {
    return eval_r(s1, r) * eval_r(s2, r) * std::pow(r, nm1);
  };
  specfun::QuadratureRule rule;
  rule.tolerance = tolerance;
  const double r_max =
      std::max(suggested_r_max(s1), suggested_r_max(s2));
  return specfun::integrate(f, 0.0, r_max, rule);
}

double residual(const RadialState& s, double energy, const RadialGrid& grid) {
  if (grid.points.empty())
    throw std::domain_error("residual: empty grid");
  double prev = 0.0;
  for (double r : grid.points) {
    if (!(r > 0.0) || !std::isfinite(r))
      throw std::domain_error("residual: grid must lie strictly inside (0, inf)");
    if (!(r > prev))
      throw std::domain_error("residual: grid must be strictly increasing");
    prev = r;
  }

  const double hbar = s.coeffs.units.hbar;
  const double mass = s.coeffs.units.mass;
  const double two_m_over_h2 = 2.0 * mass / (hbar * hbar);
  const double centrifugal =
      static_cast<double>(s.qn.ell) * (s.qn.ell + s.qn.dim - 2);

  double worst = 0.0;
  double amp = 0.0;
  for (double r : grid.points) {
    const RadialDerivs d = eval_r_derivs(s, r);
    const double v = potential_value(s.coeffs, r);
    const double res = d.d2 + (s.qn.dim - 1.0) / r * d.d1 -
                       centrifugal / (r * r) * d.value -
                       two_m_over_h2 * (v - energy) * d.value;
    worst = std::max(worst, std::abs(res));
    amp = std::max(amp, std::abs(d.value));
  }
  if (amp == 0.0) return std::numeric_limits<double>::infinity();
  return worst / amp;
}

}  // namespace psharm::radial
