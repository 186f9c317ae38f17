#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace psharm::specfun {

/// Natural log of the Gamma function for x > 0 (Lanczos approximation,
/// relative error below 1e-13 on [0.5, 170]).
double ln_gamma(double x);

/// n! as a double; exact up to n = 170, domain error beyond (overflow).
double factorial(int n);

/// Associated Laguerre polynomial L_n^alpha(x), alpha > -1, by the stable
/// forward three-term recurrence in n.
double laguerre(int n, double alpha, double x);

/// d/dx L_n^alpha(x), analytic. Uses the recurrence
///   x L' = n L_n - (n+alpha) L_{n-1}
/// away from x = 0 and the identity L' = -L_{n-1}^{alpha+1} at x = 0.
double laguerre_derivative(int n, double alpha, double x);

/// d^2/dx^2 L_n^alpha(x) = L_{n-2}^{alpha+2}(x).
double laguerre_second_derivative(int n, double alpha, double x);

/// Confluent hypergeometric 1F1(-n, b, x) for non-positive integer first
/// argument, through the Laguerre conversion
///   1F1(-n, b, x) = n! Gamma(b) / Gamma(b+n) * L_n^{b-1}(x).
double hyp1f1_poly(int n, double b, double x);

/// Beta function B(a, b) = Gamma(a)Gamma(b)/Gamma(a+b), a, b > 0.
double beta(double a, double b);

struct QuadratureRule {
  enum class Kind { gauss_legendre_mapped, adaptive_subdivision };
  Kind kind = Kind::adaptive_subdivision;
  int points = 64;           // fixed Gauss-Legendre rules
  double tolerance = 1e-10;  // adaptive subdivision
};

/// Gauss-Legendre nodes/weights on [-1, 1].
std::vector<std::pair<double, double>> gauss_legendre(int n);

/// Integrates f over (a, b); b may be +infinity, handled by the
/// x = t/(1-t) change of variable. Adaptive rules throw accuracy_error
/// (carrying the best estimate) when the refinement limit is hit.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureRule& rule = {});

}  // namespace psharm::specfun
