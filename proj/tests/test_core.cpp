#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "psharm/core.hpp"

using namespace psharm;

TEST_CASE("from_molecular maps De, re to the coefficient form") {
  const auto c = from_molecular({1.0, 1.0});
  CHECK(c.a1 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(c.a2 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(c.a3 == doctest::Approx(-2.0).epsilon(1e-15));

  const auto c2 = from_molecular({2.0, 0.5});
  CHECK(c2.a1 == doctest::Approx(8.0).epsilon(1e-15));
  CHECK(c2.a2 == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(c2.a3 == doctest::Approx(-4.0).epsilon(1e-15));
}

TEST_CASE("from_molecular rejects degenerate input") {
  CHECK_THROWS_AS(from_molecular({1.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(from_molecular({0.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(from_molecular({-1.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(from_molecular({1.0, 1.0}, {0.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(from_molecular({1.0, 1.0}, {1.0, -1.0}), std::domain_error);
}

TEST_CASE("reduce: harmonic N=3, ell=1 gives nu=1, mu=1, k=2, eta=5/2") {
  const CoefficientSet c{0.5, 0.0, 0.0, {}};
  const auto rp = reduce(c, {0, 1, 3});
  CHECK(rp.nu == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rp.mu == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rp.k == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(rp.eta == doctest::Approx(2.5).epsilon(1e-14));
}

TEST_CASE("reduce: a2=0 gives k = ell+N-2 and eta = ell+N/2 in any dimension") {
  const CoefficientSet c{0.5, 0.0, 0.0, {}};
  for (int dim : {2, 3, 4, 5, 7, 10}) {
    for (int ell : {0, 1, 2, 5}) {
      const auto rp = reduce(c, {0, ell, dim});
      CHECK(rp.k == doctest::Approx(ell + dim - 2.0).epsilon(1e-12));
      CHECK(rp.eta == doctest::Approx(ell + 0.5 * dim).epsilon(1e-12));
    }
  }
}

namespace {

// Brute-force root scan of f(nu) = nu(nu+1) - target over [0, hi].
double scan_positive_root(double target) {
  double lo = 0.0, hi = 1.0;
  while (hi * (hi + 1.0) < target) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid * (mid + 1.0) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("reduce: nu is the positive root of its quadratic (scan oracle)") {
  // 2 M a2 / hbar^2 = 2 with N=3, ell=0: nu(nu+1) = 2.
  const CoefficientSet c{0.5, 1.0, 0.0, {}};
  const auto rp = reduce(c, {0, 0, 3});
  CHECK(rp.nu == doctest::Approx(scan_positive_root(2.0)).epsilon(1e-12));
  CHECK(rp.nu == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rp.k == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(rp.eta == doctest::Approx(2.5).epsilon(1e-12));

  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> a2d(0.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    const double a2 = a2d(rng);
    const CoefficientSet cc{0.5, a2, 0.0, {}};
    const QuantumNumbers q{0, static_cast<int>(rng() % 4),
                           2 + static_cast<int>(rng() % 6)};
    const auto r = reduce(cc, q);
    const double target = q.ell * (q.ell + q.dim - 2.0) + 2.0 * a2;
    CHECK(r.nu == doctest::Approx(scan_positive_root(target)).epsilon(1e-10));
  }
}

TEST_CASE("reduce: N=2 gives k = sqrt(ell^2 + 2Ma2/hbar^2)") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> a2d(0.0, 4.0);
  for (int ell : {0, 1, 2, 3}) {
    const double a2 = a2d(rng);
    const CoefficientSet c{0.5, a2, 0.0, {}};
    const auto rp = reduce(c, {0, ell, 2});
    CHECK(rp.k ==
          doctest::Approx(std::sqrt(ell * ell + 2.0 * a2)).epsilon(1e-12));
  }
}

TEST_CASE("reduce: root consistency and N=3 reduction properties") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> pos(0.05, 8.0);
  std::uniform_real_distribution<double> nn(0.0, 6.0);
  for (int i = 0; i < 500; ++i) {
    const CoefficientSet c{pos(rng), nn(rng), nn(rng) - 3.0,
                           {pos(rng), pos(rng)}};
    const QuantumNumbers q{static_cast<int>(rng() % 6),
                           static_cast<int>(rng() % 5),
                           2 + static_cast<int>(rng() % 9)};
    const auto rp = reduce(c, q);
    const double res =
        rp.k * (rp.k + 1.0) - rp.k * (q.dim - 1.0) - rp.nu * (rp.nu + 1.0);
    CHECK(std::abs(res) <= 1e-12 * std::max(1.0, rp.k * (rp.k + 1.0)));
    CHECK(rp.eta > 0.0);
    if (q.dim == 3) {
      CHECK(rp.k == doctest::Approx(rp.nu + 1.0).epsilon(1e-12));
      CHECK(rp.eta == doctest::Approx(rp.nu + 1.5).epsilon(1e-12));
    }
  }
}

TEST_CASE("reduce: eta strictly increasing in ell and in a2") {
  const UnitSystem u{1.0, 1.0};
  for (int ell = 0; ell < 6; ++ell) {
    const auto low = reduce({0.5, 0.7, 0.0, u}, {0, ell, 4});
    const auto high = reduce({0.5, 0.7, 0.0, u}, {0, ell + 1, 4});
    CHECK(high.eta > low.eta);
  }
  double prev = reduce({0.5, 0.0, 0.0, u}, {0, 1, 4}).eta;
  for (double a2 : {0.3, 0.9, 2.7, 8.1}) {
    const double cur = reduce({0.5, a2, 0.0, u}, {0, 1, 4}).eta;
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("reduce: exact power-of-two unit rescaling is bit-identical") {
  // M -> 4M and hbar -> 2 hbar leaves 2Ma/hbar^2 exactly unchanged.
  const CoefficientSet c1{0.37, 1.21, -0.5, {1.0, 1.0}};
  const CoefficientSet c2{0.37, 1.21, -0.5, {2.0, 4.0}};
  for (int ell : {0, 1, 3}) {
    for (int dim : {2, 3, 6}) {
      const auto r1 = reduce(c1, {0, ell, dim});
      const auto r2 = reduce(c2, {0, ell, dim});
      CHECK(r1.nu == r2.nu);
      CHECK(r1.mu == r2.mu);
      CHECK(r1.k == r2.k);
      CHECK(r1.eta == r2.eta);
    }
  }
}

TEST_CASE("reduce: degenerate corner N=2, ell=0, a2=0 is accepted") {
  const auto rp = reduce({0.5, 0.0, 0.0, {}}, {0, 0, 2});
  CHECK(rp.nu == doctest::Approx(0.0));
  CHECK(rp.k == doctest::Approx(0.0));
  CHECK(rp.eta == doctest::Approx(1.0));
}

TEST_CASE("reduce rejects invalid inputs") {
  CHECK_THROWS_AS(reduce({0.0, 0.0, 0.0, {}}, {0, 0, 3}), std::domain_error);
  CHECK_THROWS_AS(reduce({-1.0, 0.0, 0.0, {}}, {0, 0, 3}), std::domain_error);
  CHECK_THROWS_AS(reduce({1.0, -0.1, 0.0, {}}, {0, 0, 3}), std::domain_error);
  CHECK_THROWS_AS(reduce({1.0, 0.0, 0.0, {}}, {-1, 0, 3}), std::domain_error);
  CHECK_THROWS_AS(reduce({1.0, 0.0, 0.0, {}}, {0, -1, 3}), std::domain_error);
  CHECK_THROWS_AS(reduce({1.0, 0.0, 0.0, {}}, {0, 0, 1}), std::domain_error);
}
