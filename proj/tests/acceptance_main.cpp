// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exit code = number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "psharm/ladder.hpp"
#include "psharm/oracle.hpp"
#include "psharm/specfun.hpp"
#include "psharm/spectrum.hpp"
#include "psharm/wavefunction.hpp"

using namespace psharm;
namespace sf = psharm::specfun;
namespace rd = psharm::radial;

namespace {

int failures = 0;

void report(int index, const std::string& what, bool pass,
            const std::string& detail) {
  std::printf("[%d/8] %-58s %s (%s)\n", index, what.c_str(),
              pass ? "PASS" : "FAIL", detail.c_str());
  if (!pass) ++failures;
}

std::vector<std::pair<std::string, CoefficientSet>> acceptance_sets() {
  return {
      {"harmonic", {0.5, 0.0, 0.0, {}}},
      {"pseudoharmonic", from_molecular({1.0, 1.0})},
      {"osc+inv-quadratic", {0.5, 1.0, 0.0, {}}},  // 2Ma2/hbar^2 = 2
  };
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", v);
  return buf;
}

// ---------------------------------------------------------------- 1. oracle

void criterion_oracle() {
  const double tol = 1e-6;
  double worst = 0.0;
  int levels = 0;
  for (const auto& [name, c] : acceptance_sets()) {
    for (int dim : {2, 3, 5}) {
      for (int ell : {0, 1, 2}) {
        const auto problem = oracle::make_problem(c, ell, dim, 3, 1500);
        const auto fd = oracle::richardson(problem, 4, 3);
        for (int n = 0; n <= 3; ++n) {
          const double closed = spectrum::energy(c, {n, ell, dim}).energy;
          const double rel = std::abs(fd.eigenvalues[n] - closed) /
                             std::max(1.0, std::abs(closed));
          worst = std::max(worst, rel);
          ++levels;
        }
      }
    }
  }
  report(1, "closed form vs Richardson FD oracle, 108 levels", worst <= tol,
         "worst rel " + sci(worst) + ", tol " + sci(tol));
}

// -------------------------------------------------- 2. special-case formulas

void criterion_special_cases() {
  const double tol = 1e-12;
  double worst = 0.0;

  const UnitSystem u{};
  const CoefficientSet harm{0.5, 0.0, 0.0, u};       // omega = 1
  const CoefficientSet oscinv{0.5, 1.0, 0.0, u};     // a2 = 1
  const CoefficientSet pseudo = from_molecular({1.0, 1.0});

  const auto track = [&worst](double got, double want) {
    worst = std::max(worst,
                     std::abs(got - want) / std::max(1.0, std::abs(want)));
  };

  // literal anchor values of the lower-dimensional formulas
  track(spectrum::energy(harm, {0, 0, 3}).energy, 1.5);
  track(spectrum::energy(harm, {0, 0, 5}).energy, 2.5);

  for (int n = 0; n <= 3; ++n) {
    for (int ell = 0; ell <= 2; ++ell) {
      spectrum::SpecialCaseInputs osc;
      osc.qn = {n, ell, 3};
      osc.omega = 1.0;
      track(spectrum::special_case_energy(spectrum::SpecialCase::osc3d, osc),
            spectrum::energy(harm, osc.qn).energy);

      for (int dim : {2, 3, 5}) {
        spectrum::SpecialCaseInputs oscN;
        oscN.qn = {n, ell, dim};
        oscN.omega = 1.0;
        track(
            spectrum::special_case_energy(spectrum::SpecialCase::oscNd, oscN),
            spectrum::energy(harm, oscN.qn).energy);
      }

      spectrum::SpecialCaseInputs inv2;
      inv2.qn = {n, ell, 2};
      inv2.omega = 1.0;
      inv2.a2 = 1.0;
      track(spectrum::special_case_energy(spectrum::SpecialCase::osc_inv2d,
                                          inv2),
            spectrum::energy(oscinv, inv2.qn).energy);

      spectrum::SpecialCaseInputs inv3;
      inv3.qn = {n, ell, 3};
      inv3.omega = 1.0;
      inv3.a2 = 1.0;
      track(spectrum::special_case_energy(spectrum::SpecialCase::osc_inv3d,
                                          inv3),
            spectrum::energy(oscinv, inv3.qn).energy);

      spectrum::SpecialCaseInputs ph;
      ph.qn = {n, ell, 3};
      ph.a1 = pseudo.a1;
      ph.a2 = pseudo.a2;
      ph.a3 = pseudo.a3;
      track(
          spectrum::special_case_energy(spectrum::SpecialCase::pseudo3d, ph),
          spectrum::energy(pseudo, ph.qn).energy);
    }
  }
  report(2, "special-case formulas reproduced by the general path",
         worst <= tol, "worst rel " + sci(worst) + ", tol " + sci(tol));
}

// ------------------------------------- 3. normalization and orthogonality

void criterion_norm_ortho() {
  const double tol = 1e-8;
  double worst_norm = 0.0, worst_overlap = 0.0;
  const std::vector<std::pair<std::string, CoefficientSet>> sets = {
      {"harmonic", {0.5, 0.0, 0.0, {}}},
      {"pseudoharmonic", from_molecular({1.0, 1.0})}};
  for (const auto& [name, c] : sets) {
    for (int dim : {2, 3, 5, 10}) {
      for (int ell = 0; ell <= 3; ++ell) {
        std::vector<rd::RadialState> family;
        for (int n = 0; n <= 5; ++n)
          family.push_back(rd::make_state(c, {n, ell, dim}));
        for (const auto& s : family)
          worst_norm =
              std::max(worst_norm, std::abs(rd::norm_integral(s) - 1.0));
        for (size_t i = 0; i < family.size(); ++i)
          for (size_t j = i + 1; j < family.size(); ++j)
            worst_overlap = std::max(
                worst_overlap, std::abs(rd::overlap(family[i], family[j])));
      }
    }
  }
  const bool pass = worst_norm <= tol && worst_overlap <= tol;
  report(3, "normalization = 1 and pairwise orthogonality", pass,
         "worst |norm-1| " + sci(worst_norm) + ", worst overlap " +
             sci(worst_overlap) + ", tol " + sci(tol));
}

// ----------------------------------------------------- 4. radial residual

void criterion_residual() {
  const double tol_exact = 1e-9;
  const double floor_detuned = 1e-2;
  double worst_exact = 0.0;
  double min_detuned = std::numeric_limits<double>::infinity();
  const std::vector<CoefficientSet> sets = {{0.5, 0.0, 0.0, {}},
                                            from_molecular({1.0, 1.0})};
  for (const auto& c : sets) {
    const double spacing = spectrum::level_spacing(c);
    for (int dim : {2, 3, 5}) {
      for (int ell = 0; ell <= 3; ++ell) {
        for (int n = 0; n <= 5; ++n) {
          const auto s = rd::make_state(c, {n, ell, dim});
          const auto grid = rd::make_log_grid(s);
          const double e = spectrum::energy(c, {n, ell, dim}).energy;
          worst_exact = std::max(worst_exact, rd::residual(s, e, grid));
          min_detuned = std::min(
              min_detuned, rd::residual(s, e + 0.1 * spacing, grid));
        }
      }
    }
  }
  const bool pass = worst_exact <= tol_exact && min_detuned >= floor_detuned;
  report(4, "radial-equation residual: exact vs detuned eigenpairs", pass,
         "worst exact " + sci(worst_exact) + " <= " + sci(tol_exact) +
             ", min detuned " + sci(min_detuned) + " >= " +
             sci(floor_detuned));
}

// ------------------------------------------- 5. ladder pointwise agreement

void criterion_ladder_pointwise() {
  const double tol = 1e-10;
  double worst = 0.0;
  for (const auto& [name, c] : acceptance_sets()) {
    for (int dim : {2, 3, 5}) {
      for (int ell : {0, 1, 2}) {
        std::vector<rd::RadialState> states;
        for (int n = 0; n <= 6; ++n)
          states.push_back(rd::make_state(c, {n, ell, dim}));
        std::vector<double> z(200);
        const double z_max = states[5].rp.eta + 25.0;
        for (int i = 0; i < 200; ++i) z[i] = (i + 1) * z_max / 200.0;

        for (int n = 0; n <= 5; ++n) {
          const double eta = states[n].rp.eta;
          const auto raised =
              ladder::apply_differential(ladder::Direction::raise, states[n], z);
          const double lp = ladder::lambda_plus(n, eta);
          double scale = 0.0;
          std::vector<double> target(z.size());
          for (size_t i = 0; i < z.size(); ++i) {
            target[i] = lp * rd::eval_z(states[n + 1], z[i]);
            scale = std::max(scale, std::abs(target[i]));
          }
          for (size_t i = 0; i < z.size(); ++i)
            worst = std::max(worst,
                             std::abs(raised[i] - target[i]) / scale);

          const auto lowered =
              ladder::apply_differential(ladder::Direction::lower, states[n], z);
          if (n == 0) {
            double own = 0.0;
            for (double zi : z)
              own = std::max(own, std::abs(rd::eval_z(states[0], zi)));
            for (double v : lowered)
              worst = std::max(worst, std::abs(v) / own);
          } else {
            const double lm = ladder::lambda_minus(n, eta);
            double scale_low = 0.0;
            std::vector<double> tgt(z.size());
            for (size_t i = 0; i < z.size(); ++i) {
              tgt[i] = lm * rd::eval_z(states[n - 1], z[i]);
              scale_low = std::max(scale_low, std::abs(tgt[i]));
            }
            for (size_t i = 0; i < z.size(); ++i)
              worst = std::max(worst,
                               std::abs(lowered[i] - tgt[i]) / scale_low);
          }
        }
      }
    }
  }
  report(5, "L+- differential action = lambda+- times neighbor state",
         worst <= tol, "worst rel " + sci(worst) + ", tol " + sci(tol));
}

// ------------------------------------------------------- 6. algebra suite

void criterion_algebra() {
  // exact to <= 1e-13 relative to the operator scale entering each check
  const double tol = 1e-13;
  double worst = 0.0;
  using namespace ladder;
  for (const auto& [name, c] : acceptance_sets()) {
    for (int dim : {2, 3, 5}) {
      for (int ell : {0, 1, 2}) {
        const double eta = reduce(c, {0, ell, dim}).eta;
        const LadderCoeffs ctx{eta, dim};
        for (int n = 0; n <= 20; ++n) {
          const auto v = BasisVector::basis(ctx, n);
          for (auto pair : {CommutatorPair::mp, CommutatorPair::zp,
                            CommutatorPair::mz, CommutatorPair::za,
                            CommutatorPair::zs}) {
            const auto [lhs, rhs] = commutator_check(pair, v);
            worst = std::max(worst,
                             BasisVector::max_abs_diff(lhs, rhs) /
                                 std::max(1.0, rhs.max_abs()));
          }
          const auto cv = casimir(v);
          const double l0sq = (n + 0.5 * eta) * (n + 0.5 * eta);
          worst = std::max(
              worst, std::abs(cv.at(n) - casimir_eigenvalue(eta)) /
                         std::max(1.0, l0sq));
          for (int q = 1; q <= 5; ++q) {
            const auto up = apply_power(q, Direction::raise, v);
            double prod = 1.0;
            for (int i = 1; i <= q; ++i) prod *= (n + i) * (n + i + eta - 1.0);
            const double closed = std::sqrt(prod);
            worst = std::max(worst, std::abs(up.at(n + q) - closed) /
                                        std::max(1.0, closed));
            const auto round_trip = apply_power(q, Direction::lower, up);
            worst = std::max(worst, std::abs(round_trip.at(n) - prod) /
                                        std::max(1.0, prod));
          }
        }
      }
    }
  }
  report(6, "SU(1,1) commutators, power relations, Casimir (n <= 20)",
         worst <= tol, "worst rel " + sci(worst) + ", tol " + sci(tol));
}

// ------------------------------------------- 7. special-function identities

double hyp1f1_series_general(double a, double b, double x) {
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < 500; ++k) {
    term *= (a + k) * x / ((b + k) * (k + 1.0));
    sum += term;
    if (std::abs(term) < 1e-16 * std::abs(sum) && k > 4) break;
  }
  return sum;
}

double hyp1f1_series_poly(int n, double b, double x) {
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < n; ++k) {
    term *= (-n + k) * x / ((b + k) * (k + 1.0));
    sum += term;
  }
  return sum;
}

double convolution_integral(double a, double b, double mu, double y) {
  const auto low = [&](double t) {
    return std::pow(y - t, a - 1.0) * std::pow(t, b - 1.0) * std::exp(mu * t);
  };
  const auto high = [&](double s) {
    return std::pow(s, a - 1.0) * std::pow(y - s, b - 1.0) *
           std::exp(mu * (y - s));
  };
  return sf::integrate(low, 0.0, 0.5 * y) + sf::integrate(high, 0.0, 0.5 * y);
}

void criterion_specfun_identities() {
  const double tol24 = 1e-8;
  const double tol28 = 1e-10;
  const double tol29 = 1e-8;
  double worst24 = 0.0, worst28 = 0.0, worst29 = 0.0;

  std::mt19937 rng(271828);
  std::uniform_real_distribution<double> ab(0.35, 3.0);
  std::uniform_real_distribution<double> mu(0.5, 2.5);
  std::uniform_real_distribution<double> yd(0.5, 2.0);
  for (int i = 0; i < 40; ++i) {
    double a = ab(rng), b = ab(rng);
    if (std::abs(a - std::round(a)) < 1e-3) a += 0.01;
    if (std::abs(b - std::round(b)) < 1e-3) b += 0.01;
    const double m = mu(rng), y = yd(rng);
    const double lhs = convolution_integral(a, b, m, y);
    const double rhs = sf::beta(a, b) * std::pow(y, a + b - 1.0) *
                       hyp1f1_series_general(b, a + b, m * y);
    worst24 = std::max(worst24, std::abs(lhs - rhs) / std::abs(rhs));
  }
  // the half-integer reference instance
  {
    const double lhs = convolution_integral(0.5, 1.5, 2.0, 1.0);
    const double rhs =
        sf::beta(0.5, 1.5) * hyp1f1_series_general(1.5, 2.0, 2.0);
    worst24 = std::max(worst24, std::abs(lhs - rhs) / std::abs(rhs));
  }

  std::uniform_real_distribution<double> bd(0.2, 8.0);
  std::uniform_real_distribution<double> xd(0.0, 20.0);
  for (int i = 0; i < 300; ++i) {
    const int n = static_cast<int>(rng() % 11);
    const double b = bd(rng), x = xd(rng);
    const double got = sf::hyp1f1_poly(n, b, x);
    const double want = hyp1f1_series_poly(n, b, x);
    worst28 = std::max(worst28,
                       std::abs(got - want) / std::max(1.0, std::abs(want)));
  }

  for (double A : {0.5, 1.5, 2.5}) {
    for (int B : {0, 1, 2, 3}) {
      const auto f = [&](double x) {
        const double l = sf::laguerre(B, A, x);
        return std::pow(x, A) * std::exp(-x) * l * l;
      };
      const double got =
          sf::integrate(f, 0.0, std::numeric_limits<double>::infinity());
      const double want =
          std::exp(sf::ln_gamma(A + B + 1.0)) / sf::factorial(B);
      worst29 = std::max(worst29, std::abs(got - want) / want);
    }
  }

  const bool pass = worst24 <= tol24 && worst28 <= tol28 && worst29 <= tol29;
  report(7, "convolution, 1F1<->Laguerre and weighted-norm identities", pass,
         "conv " + sci(worst24) + "<=" + sci(tol24) + ", conversion " +
             sci(worst28) + "<=" + sci(tol28) + ", norm " + sci(worst29) +
             "<=" + sci(tol29));
}

// -------------------------------------------------- 8. structural invariants

void criterion_structural() {
  const double tol = 1e-12;
  std::mt19937 rng(314159);
  std::uniform_real_distribution<double> a1d(0.05, 4.0);
  std::uniform_real_distribution<double> a2d(0.0, 4.0);
  std::uniform_real_distribution<double> a3d(-3.0, 3.0);

  double worst_rel = 0.0;
  int node_mismatches = 0;
  int cases = 0;

  // interdimensional degeneracy + constant level spacing (randomized)
  for (int i = 0; i < 250; ++i) {
    const CoefficientSet c{a1d(rng), a2d(rng), a3d(rng), {}};
    const int n = static_cast<int>(rng() % 5);
    const int ell = static_cast<int>(rng() % 4);
    const int dim = 4 + static_cast<int>(rng() % 7);
    const double e = spectrum::energy(c, {n, ell, dim}).energy;
    const double shifted = spectrum::energy(c, {n, ell + 1, dim - 2}).energy;
    worst_rel = std::max(worst_rel,
                         std::abs(e - shifted) / std::max(1.0, std::abs(e)));
    const double spacing = spectrum::level_spacing(c);
    const double up = spectrum::energy(c, {n + 1, ell, dim}).energy;
    worst_rel = std::max(
        worst_rel, std::abs(up - e - spacing) / std::max(1.0, std::abs(e)));
    ++cases;
  }

  // node count = n (randomized states, dense sign-change scan)
  for (int i = 0; i < 250; ++i) {
    const CoefficientSet c{a1d(rng), a2d(rng), 0.0, {}};
    const int n = static_cast<int>(rng() % 6);
    const int ell = static_cast<int>(rng() % 4);
    const int dim = 2 + static_cast<int>(rng() % 9);
    const auto s = rd::make_state(c, {n, ell, dim});
    const double r_hi = rd::suggested_r_max(s);
    const double r_lo = 1e-4 / std::sqrt(s.rp.mu);
    int changes = 0;
    double prev = rd::eval_r(s, r_lo);
    for (int k = 1; k <= 6000; ++k) {
      const double r = r_lo + (r_hi - r_lo) * k / 6000.0;
      const double cur = rd::eval_r(s, r);
      if (prev != 0.0 && cur != 0.0 &&
          std::signbit(prev) != std::signbit(cur))
        ++changes;
      if (cur != 0.0) prev = cur;
    }
    if (changes != n) ++node_mismatches;
    ++cases;
  }

  const bool pass = worst_rel <= tol && node_mismatches == 0;
  report(8, "degeneracy, spacing, node-count invariants (500 cases)", pass,
         "worst rel " + sci(worst_rel) + " <= " + sci(tol) + ", node mismatches " +
             std::to_string(node_mismatches) + ", cases " +
             std::to_string(cases));
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criterion_oracle();
  criterion_special_cases();
  criterion_norm_ortho();
  criterion_residual();
  criterion_ladder_pointwise();
  criterion_algebra();
  criterion_specfun_identities();
  criterion_structural();
  const auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  std::printf("%d/8 criteria passed in %.1f s\n", 8 - failures, dt / 1000.0);
  return failures;
}
