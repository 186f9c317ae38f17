#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "psharm/wavefunction.hpp"

namespace psharm::ladder {

/// Context shared by a ladder family: the Laguerre order parameter eta and
/// the spatial dimension N (entering L+- through the N/4 shift).
struct LadderCoeffs {
  double eta = 0.0;
  int dim = 3;
};

/// Sparse real vector on the basis index n >= 0 (finitely many nonzero
/// amplitudes). Represents an element of span{R_n} for fixed (eta, N).
class BasisVector {
 public:
  explicit BasisVector(LadderCoeffs ctx) : ctx_(ctx) {}

  static BasisVector basis(LadderCoeffs ctx, int n, double amplitude = 1.0);

  const LadderCoeffs& context() const { return ctx_; }
  const std::map<int, double>& amplitudes() const { return amps_; }

  double at(int n) const;
  void set(int n, double amplitude);  // exact zeros are dropped
  void add(int n, double amplitude);

  BasisVector& operator+=(const BasisVector& o);
  BasisVector& operator-=(const BasisVector& o);
  BasisVector& operator*=(double scalar);

  friend BasisVector operator+(BasisVector a, const BasisVector& b) { return a += b; }
  friend BasisVector operator-(BasisVector a, const BasisVector& b) { return a -= b; }
  friend BasisVector operator*(double s, BasisVector v) { return v *= s; }

  /// max_n |a_n - b_n|
  static double max_abs_diff(const BasisVector& a, const BasisVector& b);
  double max_abs() const;

 private:
  LadderCoeffs ctx_;
  std::map<int, double> amps_;
};

/// lambda_- = sqrt(n (n + eta - 1)); asserts the intermediate form
/// (n + eta - 1) zeta_n / zeta_{n-1} for n >= 1.
double lambda_minus(int n, double eta);

/// lambda_+ = sqrt((n + 1)(n + eta)).
double lambda_plus(int n, double eta);

enum class Op { raise, lower, zero };

/// Spectral action: raise maps n -> n+1 with lambda_+(n); lower maps
/// n -> n-1 with lambda_-(n) (n = 0 annihilated); zero scales by n + eta/2.
BasisVector apply_spectral(Op op, const BasisVector& v);

enum class Direction { raise, lower };

/// Differential action of
///   L- = -z d/dz - z/2 + eta/2 - N/4 + n
///   L+ =  z d/dz - z/2 + n + eta/2 + N/4
/// on the state's z-form, sampled at the given z > 0 points. The explicit n
/// is read from the state acted on.
std::vector<double> apply_differential(Direction dir, const radial::RadialState& s,
                                       std::span<const double> z);

/// q-fold composition of the spectral ladder; asserted against the closed
/// product form.
BasisVector apply_power(int q, Direction dir, const BasisVector& v);

enum class CommutatorPair {
  mp,  // [L-, L+] vs 2 L0
  zp,  // [L0, L+] vs L+
  mz,  // [L-, L0] vs L-
  za,  // [L0, La] vs Ls,  La = L+ + L-
  zs,  // [L0, Ls] vs La,  Ls = L+ - L-
};

/// Both sides of the commutation relation, computed independently in the
/// spectral representation.
std::pair<BasisVector, BasisVector> commutator_check(CommutatorPair pair,
                                                     const BasisVector& v);

/// Casimir C = L0(L0 - 1) - L+L- = L0(L0 + 1) - L-L+; both factorizations
/// are evaluated and must agree. Every amplitude is scaled by J(J-1),
/// J = eta/2, independent of n.
BasisVector casimir(const BasisVector& v);

double casimir_eigenvalue(double eta);

}  // namespace psharm::ladder
