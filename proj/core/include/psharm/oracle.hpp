#pragma once

#include <functional>
#include <vector>

#include "psharm/core.hpp"

namespace psharm::oracle {

/// Radial eigenproblem on a uniform grid of `points` nodes
/// r_i = r_min + i h, h = (r_max - r_min)/(points - 1). The nodes are cell
/// centers of a flux-form discretization whose cell faces sit at r_i -+ h/2.
/// When the inner face lands on r = 0 the vanishing geometric factor
/// r^{N-1} enforces regularity there; an inner face > 0 is treated as a
/// Dirichlet wall, as is the outer face.
struct FDProblem {
  std::function<double(double)> potential;  // V(r), r > 0
  int ell = 0;
  int dim = 3;
  double r_min = 0.0;
  double r_max = 0.0;
  int points = 1500;
  UnitSystem units{};
};

struct FDSpectrum {
  std::vector<double> eigenvalues;   // strictly increasing
  std::vector<double> convergence;   // per-eigenvalue error estimate
  double h = 0.0;
  int points = 0;
};

/// Problem for a pseudoharmonic coefficient set: domain [0, wall] with the
/// wall past the outer turning point of the max_n-th level by 8 Gaussian
/// widths. The window uses only potential-shape heuristics, no closed-form
/// spectrum values.
FDProblem make_problem(const CoefficientSet& c, int ell, int dim, int max_n,
                       int points = 1500);

/// Lowest `count` eigenvalues of the substituted problem u = r^{(N-1)/2} R
/// (realized by the diagonal scaling of the flux-form matrix), extracted by
/// Sturm-sequence bisection on the symmetric tridiagonal matrix.
/// Requires count <= points/10.
FDSpectrum solve(const FDProblem& p, int count);

/// h^2 Richardson extrapolation over `refinements` grid doublings.
/// Convergence estimate per eigenvalue is the last correction magnitude;
/// non-monotone raw convergence raises accuracy_error with diagnostics.
FDSpectrum richardson(const FDProblem& p, int count, int refinements);

/// Cross-check route: direct non-symmetric 3-point discretization of the
/// radial equation in R itself, symmetrized by diagonal similarity. Needs
/// an inner Dirichlet wall at r_min > 0 and h < 2 r_min / (N-1).
FDSpectrum solve_radial_direct(const FDProblem& p, int count);

}  // namespace psharm::oracle
