#include "psharm/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace psharm::spectrum {

double level_spacing(const CoefficientSet& c) {
  validate(c.units);
  if (!(c.a1 > 0.0))
    throw std::domain_error("level_spacing: a1 must be > 0");
  return std::sqrt(8.0 * c.units.hbar * c.units.hbar * c.a1 / c.units.mass);
}

EnergyLevel energy(const CoefficientSet& c, const QuantumNumbers& q) {
  const ReducedParams rp = reduce(c, q);  // validates inputs
  const double hbar = c.units.hbar;
  const double mass = c.units.mass;

  const double inner = static_cast<double>(q.dim) + 2.0 * q.ell - 2.0;
  const double root =
      std::sqrt(inner * inner + 8.0 * mass * c.a2 / (hbar * hbar));
  const double e31 = c.a3 + level_spacing(c) * (q.n + 0.5 + 0.25 * root);

  EnergyLevel lv;
  lv.qn = q;
  lv.rp = rp;
  lv.epsilon_sq = 4.0 * rp.mu * (q.n + 0.5 * rp.eta);
  const double e20 = c.a3 + hbar * hbar * lv.epsilon_sq / (2.0 * mass);

  const double scale = std::max(std::abs(e31), level_spacing(c));
  if (std::abs(e31 - e20) > 1e-12 * scale)
    throw std::logic_error("energy: quantization-condition route disagrees "
                           "with the closed form");
  lv.energy = e31;
  return lv;
}

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::domain_error(msg);
}

double osc_a1(double omega, const UnitSystem& u) {
  return 0.5 * u.mass * omega * omega;
}

}  // namespace

double special_case_energy(SpecialCase c, const SpecialCaseInputs& in) {
  validate(in.units);
  validate(in.qn);
  const double hbar = in.units.hbar;
  const double mass = in.units.mass;
  const double n = in.qn.n;
  const double ell = in.qn.ell;

  switch (c) {
    case SpecialCase::osc3d:
      require(in.qn.dim == 3, "osc3d: requires N = 3");
      require(in.omega > 0.0, "osc3d: requires omega > 0");
      require(in.a1 == 0.0 && in.a2 == 0.0 && in.a3 == 0.0,
              "osc3d: coefficients must be unset (a1 = Mw^2/2 internally)");
      return hbar * in.omega * (2.0 * n + ell + 1.5);

    case SpecialCase::oscNd:
      require(in.omega > 0.0, "oscNd: requires omega > 0");
      require(in.a1 == 0.0 && in.a2 == 0.0 && in.a3 == 0.0,
              "oscNd: coefficients must be unset (a1 = Mw^2/2 internally)");
      return hbar * in.omega * (2.0 * n + ell + 0.5 * in.qn.dim);

    case SpecialCase::osc_inv2d: {
      require(in.qn.dim == 2, "osc_inv2d: requires N = 2");
      require(in.omega > 0.0, "osc_inv2d: requires omega > 0");
      require(in.a1 == 0.0 && in.a3 == 0.0,
              "osc_inv2d: only a2 may be set (a1 = Mw^2/2 internally)");
      require(in.a2 >= 0.0, "osc_inv2d: a2 must be >= 0");
      const double k2 =
          std::sqrt(ell * ell + 2.0 * mass * in.a2 / (hbar * hbar));
      return hbar * in.omega * (2.0 * n + k2 + 1.0);
    }

    case SpecialCase::osc_inv3d: {
      require(in.qn.dim == 3, "osc_inv3d: requires N = 3");
      require(in.omega > 0.0, "osc_inv3d: requires omega > 0");
      require(in.a1 == 0.0 && in.a3 == 0.0,
              "osc_inv3d: only a2 may be set (a1 = Mw^2/2 internally)");
      require(in.a2 >= 0.0, "osc_inv3d: a2 must be >= 0");
      const double root = std::sqrt((2.0 * ell + 1.0) * (2.0 * ell + 1.0) +
                                    8.0 * mass * in.a2 / (hbar * hbar));
      return 0.5 * hbar * in.omega * (4.0 * n + 2.0 + root);
    }

    case SpecialCase::pseudo3d: {
      require(in.qn.dim == 3, "pseudo3d: requires N = 3");
      require(in.omega == 0.0, "pseudo3d: omega must be unset");
      require(in.a1 > 0.0, "pseudo3d: requires a1 > 0");
      require(in.a2 >= 0.0, "pseudo3d: a2 must be >= 0");
      const double root = std::sqrt((2.0 * ell + 1.0) * (2.0 * ell + 1.0) +
                                    8.0 * mass * in.a2 / (hbar * hbar));
      return in.a3 + std::sqrt(8.0 * hbar * hbar * in.a1 / mass) *
                         (n + 0.5 + 0.25 * root);
    }
  }
  throw std::logic_error("special_case_energy: unknown case");
}

std::vector<EnergyLevel> level_table(const CoefficientSet& c, int n_max,
                                     int ell_max, std::span<const int> dims) {
  if (n_max < 0 || ell_max < 0)
    throw std::domain_error("level_table: bounds must be >= 0");
  if (dims.empty()) throw std::domain_error("level_table: dims must be non-empty");
  for (int d : dims)
    if (d < 2) throw std::domain_error("level_table: every dim must be >= 2");

  std::vector<EnergyLevel> out;
  out.reserve(static_cast<size_t>(n_max + 1) * (ell_max + 1) * dims.size());
  for (int d : dims)
    for (int ell = 0; ell <= ell_max; ++ell)
      for (int n = 0; n <= n_max; ++n)
        out.push_back(energy(c, QuantumNumbers{n, ell, d}));

  std::sort(out.begin(), out.end(), [](const EnergyLevel& a, const EnergyLevel& b) {
    return std::tuple(a.qn.dim, a.energy, a.qn.ell, a.qn.n) <
           std::tuple(b.qn.dim, b.energy, b.qn.ell, b.qn.n);
  });
  return out;
}

}  // namespace psharm::spectrum
