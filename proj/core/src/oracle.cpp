#include "psharm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "psharm/errors.hpp"

namespace psharm::oracle {

namespace {

// Eigenvalues of an eigenproblem index < x, by the EISPACK-style Sturm
// sequence count (robust to zero pivots through the |e|/eps substitution).
int count_below(const std::vector<double>& d, const std::vector<double>& e,
                double x) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  int cnt = 0;
  double u = d[0] - x;
  if (u < 0.0) ++cnt;
  for (size_t i = 1; i < d.size(); ++i) {
    const double v = (u != 0.0) ? e[i - 1] * e[i - 1] / u
                                : std::abs(e[i - 1]) / eps;
    u = d[i] - x - v;
    if (u < 0.0) ++cnt;
  }
  return cnt;
}

struct Tridiag {
  std::vector<double> diag;
  std::vector<double> off;
};

// Lowest `count` eigenvalues by bisection between Gershgorin bounds.
FDSpectrum bisect_lowest(const Tridiag& t, int count, double h, int points) {
  const size_t m = t.diag.size();
  double lo0 = std::numeric_limits<double>::infinity();
  double hi0 = -lo0;
  for (size_t i = 0; i < m; ++i) {
    const double left = i > 0 ? std::abs(t.off[i - 1]) : 0.0;
    const double right = i + 1 < m ? std::abs(t.off[i]) : 0.0;
    lo0 = std::min(lo0, t.diag[i] - left - right);
    hi0 = std::max(hi0, t.diag[i] + left + right);
  }

  FDSpectrum out;
  out.h = h;
  out.points = points;
  out.eigenvalues.reserve(count);
  out.convergence.reserve(count);
  double lo_start = lo0;
  for (int k = 0; k < count; ++k) {
    double lo = lo_start, hi = hi0;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (count_below(t.diag, t.off, mid) >= k + 1)
        hi = mid;
      else
        lo = mid;
      const double tol =
          1e-14 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
      if (hi - lo <= tol) break;
    }
    out.eigenvalues.push_back(0.5 * (lo + hi));
    out.convergence.push_back(hi - lo);
    lo_start = lo;  // eigenvalues are requested in increasing order
  }
  return out;
}

struct Geometry {
  double inner_face;  // 0 => regularity at origin, > 0 => Dirichlet wall
  double outer_face;
  double h;
};

Geometry geometry_of(const FDProblem& p) {
  if (p.points < 100)
    throw std::domain_error("oracle: points must be >= 100");
  if (!(p.r_min > 0.0) || !(p.r_max > p.r_min) || !std::isfinite(p.r_max))
    throw std::domain_error("oracle: need 0 < r_min < r_max finite");
  const double h = (p.r_max - p.r_min) / (p.points - 1);
  double inner = p.r_min - 0.5 * h;
  if (inner < -1e-9 * h)
    throw std::domain_error("oracle: r_min must be >= h/2");
  if (std::abs(inner) <= 1e-9 * h) inner = 0.0;
  return {inner, p.r_max + 0.5 * h, h};
}

void validate_problem(const FDProblem& p, int count) {
  if (!p.potential) throw std::domain_error("oracle: potential not set");
  if (p.ell < 0) throw std::domain_error("oracle: ell must be >= 0");
  if (p.dim < 2) throw std::domain_error("oracle: dim must be >= 2");
  validate(p.units);
  if (count < 1) throw std::domain_error("oracle: count must be >= 1");
  if (count > p.points / 10)
    throw std::domain_error(
        "oracle: count too large for grid (need count <= points/10)");
}

Tridiag assemble_flux_form(const FDProblem& p) {
  const Geometry g = geometry_of(p);
  const int m = p.points;
  const double c = p.units.hbar * p.units.hbar / (2.0 * p.units.mass);
  const double centrifugal =
      c * static_cast<double>(p.ell) * (p.ell + p.dim - 2);

  std::vector<double> flux(m + 1);  // c * face^{N-1} / h
  for (int j = 0; j <= m; ++j) {
    const double face = g.inner_face + j * g.h;
    flux[j] = c * std::pow(face, p.dim - 1.0) / g.h;
  }

  Tridiag t;
  t.diag.resize(m);
  t.off.resize(m - 1);
  std::vector<double> cellw(m);
  for (int i = 0; i < m; ++i) {
    const double r = p.r_min + i * g.h;
    cellw[i] = std::pow(r, p.dim - 1.0) * g.h;
    t.diag[i] = (flux[i] + flux[i + 1]) / cellw[i] + p.potential(r) +
                centrifugal / (r * r);
  }
  // Dirichlet walls sit half a spacing from the end cells.
  t.diag[m - 1] += flux[m] / cellw[m - 1];
  if (g.inner_face > 0.0) t.diag[0] += flux[0] / cellw[0];
  for (int i = 0; i + 1 < m; ++i)
    t.off[i] = -flux[i + 1] / std::sqrt(cellw[i] * cellw[i + 1]);
  return t;
}

}  // namespace

FDProblem make_problem(const CoefficientSet& c, int ell, int dim, int max_n,
                       int points) {
  validate(c.units);
  if (!(c.a1 > 0.0))
    throw std::domain_error("make_problem: a1 must be > 0");
  if (c.a2 < 0.0) throw std::domain_error("make_problem: a2 must be >= 0");
  if (max_n < 0) throw std::domain_error("make_problem: max_n must be >= 0");

  const double hbar = c.units.hbar;
  const double mass = c.units.mass;
  const double mu = std::sqrt(2.0 * mass * c.a1) / hbar;
  const double spacing_est = std::sqrt(8.0 * hbar * hbar * c.a1 / mass);

  const double v_min =
      c.a2 > 0.0 ? 2.0 * std::sqrt(c.a1 * c.a2) + c.a3 : c.a3;
  const double e_cap =
      v_min + spacing_est * (2.0 * max_n + ell + 0.5 * dim + 6.0);
  // Largest root of a1 r^2 + a2/r^2 + a3 = e_cap.
  const double excess = e_cap - c.a3;
  const double disc =
      std::sqrt(std::max(excess * excess - 4.0 * c.a1 * c.a2, 0.0));
  const double r_turn = std::sqrt((excess + disc) / (2.0 * c.a1));
  const double wall = r_turn + 8.0 / std::sqrt(mu);

  FDProblem p;
  p.potential = [c](double r) {
    return c.a1 * r * r + c.a2 / (r * r) + c.a3;
  };
  p.ell = ell;
  p.dim = dim;
  p.points = points;
  p.units = c.units;
  const double h = wall / points;
  p.r_min = 0.5 * h;
  p.r_max = wall - 0.5 * h;
  return p;
}

FDSpectrum solve(const FDProblem& p, int count) {
  validate_problem(p, count);
  const Tridiag t = assemble_flux_form(p);
  FDSpectrum s =
      bisect_lowest(t, count, (p.r_max - p.r_min) / (p.points - 1), p.points);
  for (size_t i = 1; i < s.eigenvalues.size(); ++i) {
    if (!(s.eigenvalues[i] > s.eigenvalues[i - 1]))
      throw accuracy_error("oracle: eigenvalues not strictly increasing",
                           s.eigenvalues[i], s.convergence[i]);
  }
  return s;
}

FDSpectrum richardson(const FDProblem& p, int count, int refinements) {
  validate_problem(p, count);
  if (refinements < 2)
    throw std::domain_error("richardson: refinements must be >= 2");

  const Geometry g = geometry_of(p);
  std::vector<std::vector<double>> raw;
  double finest_h = 0.0;
  int finest_points = 0;
  for (int j = 0; j < refinements; ++j) {
    FDProblem q = p;
    q.points = p.points << j;
    const double hj = (g.outer_face - g.inner_face) / q.points;
    q.r_min = g.inner_face + 0.5 * hj;
    q.r_max = g.outer_face - 0.5 * hj;
    raw.push_back(solve(q, count).eigenvalues);
    finest_h = hj;
    finest_points = q.points;
  }

  // Monotone h^2 convergence check on the raw sequence.
  for (int k = 0; k < count; ++k) {
    for (int j = 2; j < refinements; ++j) {
      const double d_prev = std::abs(raw[j - 1][k] - raw[j - 2][k]);
      const double d_cur = std::abs(raw[j][k] - raw[j - 1][k]);
      const double floor = 1e-10 * std::max(1.0, std::abs(raw[j][k]));
      if (d_cur > d_prev && d_cur > floor) {
        std::ostringstream msg;
        msg << "richardson: non-monotone convergence for eigenvalue " << k
            << " (corrections " << d_prev << " -> " << d_cur << ")";
        throw accuracy_error(msg.str(), raw[refinements - 1][k], d_cur);
      }
    }
  }

  // Standard extrapolation table; column k cancels the h^{2k} term.
  std::vector<std::vector<double>> table = raw;
  std::vector<double> correction(count, 0.0);
  for (int level = 1; level < refinements; ++level) {
    const double factor = std::pow(4.0, level);
    std::vector<std::vector<double>> next;
    for (size_t j = 1; j < table.size(); ++j) {
      std::vector<double> row(count);
      for (int k = 0; k < count; ++k)
        row[k] = (factor * table[j][k] - table[j - 1][k]) / (factor - 1.0);
      next.push_back(std::move(row));
    }
    for (int k = 0; k < count; ++k)
      correction[k] = std::abs(next.back()[k] - table.back()[k]);
    table = std::move(next);
  }

  FDSpectrum out;
  out.eigenvalues = table.back();
  out.convergence = correction;
  out.h = finest_h;
  out.points = finest_points;
  return out;
}

FDSpectrum solve_radial_direct(const FDProblem& p, int count) {
  validate_problem(p, count);
  const int m = p.points;
  const double h = (p.r_max - p.r_min) / (m - 1);
  const double c = p.units.hbar * p.units.hbar / (2.0 * p.units.mass);
  const double centrifugal =
      c * static_cast<double>(p.ell) * (p.ell + p.dim - 2);

  // Unknowns are the interior nodes; R = 0 at r_min and r_max.
  const int mi = m - 2;
  if (mi < 10)
    throw std::domain_error("solve_radial_direct: too few interior nodes");
  Tridiag t;
  t.diag.resize(mi);
  t.off.resize(mi - 1);
  std::vector<double> sup(mi), sub(mi);
  for (int i = 0; i < mi; ++i) {
    const double r = p.r_min + (i + 1) * h;
    t.diag[i] = 2.0 * c / (h * h) + p.potential(r) + centrifugal / (r * r);
    const double drift = c * (p.dim - 1.0) / (2.0 * r * h);
    sup[i] = -c / (h * h) - drift;
    sub[i] = -c / (h * h) + drift;
  }
  for (int i = 0; i + 1 < mi; ++i) {
    const double prod = sup[i] * sub[i + 1];
    if (!(prod > 0.0))
      throw std::domain_error(
          "solve_radial_direct: grid too coarse near origin "
          "(needs h < 2 r_min / (N-1))");
    t.off[i] = -std::sqrt(prod);
  }
  return bisect_lowest(t, count, h, m);
}

}  // namespace psharm::oracle
