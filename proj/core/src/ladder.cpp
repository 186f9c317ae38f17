#include "psharm/ladder.hpp"

#include <cmath>
#include <stdexcept>

#include "psharm/specfun.hpp"

namespace psharm::ladder {

BasisVector BasisVector::basis(LadderCoeffs ctx, int n, double amplitude) {
  if (n < 0) throw std::domain_error("BasisVector: n must be >= 0");
  BasisVector v(ctx);
  v.set(n, amplitude);
  return v;
}

double BasisVector::at(int n) const {
  const auto it = amps_.find(n);
  return it == amps_.end() ? 0.0 : it->second;
}

void BasisVector::set(int n, double amplitude) {
  if (n < 0) throw std::domain_error("BasisVector: n must be >= 0");
  if (amplitude == 0.0)
    amps_.erase(n);
  else
    amps_[n] = amplitude;
}

void BasisVector::add(int n, double amplitude) { set(n, at(n) + amplitude); }

BasisVector& BasisVector::operator+=(const BasisVector& o) {
  for (const auto& [n, a] : o.amps_) add(n, a);
  return *this;
}

BasisVector& BasisVector::operator-=(const BasisVector& o) {
  for (const auto& [n, a] : o.amps_) add(n, -a);
  return *this;
}

BasisVector& BasisVector::operator*=(double scalar) {
  if (scalar == 0.0) {
    amps_.clear();
    return *this;
  }
  for (auto& [n, a] : amps_) a *= scalar;
  return *this;
}

double BasisVector::max_abs_diff(const BasisVector& a, const BasisVector& b) {
  double worst = 0.0;
  for (const auto& [n, amp] : a.amps_)
    worst = std::max(worst, std::abs(amp - b.at(n)));
  for (const auto& [n, amp] : b.amps_)
    worst = std::max(worst, std::abs(amp - a.at(n)));
  return worst;
}

double BasisVector::max_abs() const {
  double worst = 0.0;
  for (const auto& [n, amp] : amps_) worst = std::max(worst, std::abs(amp));
  return worst;
}

double lambda_minus(int n, double eta) {
  if (n < 0) throw std::domain_error("lambda_minus: n must be >= 0");
  if (n == 0) return 0.0;
  const double value = std::sqrt(n * (n + eta - 1.0));
  // Intermediate form (n + eta - 1) zeta_n / zeta_{n-1}, the zeta ratio
  // evaluated through the Gamma ratios it is defined by.
  const double zeta_ratio =
      std::exp(0.5 * (specfun::ln_gamma(n + 1.0) - specfun::ln_gamma(n) +
                      specfun::ln_gamma(eta + n - 1.0) -
                      specfun::ln_gamma(eta + n)));
  const double intermediate = (n + eta - 1.0) * zeta_ratio;
  if (std::abs(intermediate - value) > 1e-12 * std::max(1.0, value))
    throw std::logic_error(
        "lambda_minus: zeta-ratio intermediate form disagrees");
  return value;
}

double lambda_plus(int n, double eta) {
  if (n < 0) throw std::domain_error("lambda_plus: n must be >= 0");
  return std::sqrt((n + 1.0) * (n + eta));
}

BasisVector apply_spectral(Op op, const BasisVector& v) {
  const double eta = v.context().eta;
  BasisVector out(v.context());
  switch (op) {
    case Op::raise:
      for (const auto& [n, a] : v.amplitudes())
        out.add(n + 1, lambda_plus(n, eta) * a);
      return out;
    case Op::lower:
      for (const auto& [n, a] : v.amplitudes())
        if (n > 0) out.add(n - 1, lambda_minus(n, eta) * a);
      return out;
    case Op::zero:
      for (const auto& [n, a] : v.amplitudes())
        out.add(n, (n + 0.5 * eta) * a);
      return out;
  }
  throw std::logic_error("apply_spectral: unknown op");
}

std::vector<double> apply_differential(Direction dir,
                                       const radial::RadialState& s,
                                       std::span<const double> z) {
  const double eta = s.rp.eta;
  const double quarter_dim = 0.25 * s.qn.dim;
  const int n = s.qn.n;
  std::vector<double> out;
  out.reserve(z.size());
  for (double zi : z) {
    if (!(zi > 0.0))
      throw std::domain_error("apply_differential: z samples must be > 0");
    const double value = radial::eval_z(s, zi);
    const double deriv = radial::eval_z_derivative(s, zi);
    if (dir == Direction::lower) {
      out.push_back(-zi * deriv +
                    (0.5 * eta - quarter_dim + n - 0.5 * zi) * value);
    } else {
      out.push_back(zi * deriv +
                    (n + 0.5 * eta + quarter_dim - 0.5 * zi) * value);
    }
  }
  return out;
}

namespace {

double closed_power_coefficient(int q, Direction dir, int n, double eta) {
  // L+^q |n>   -> sqrt( (n+q)!/n! prod_{i=1..q} (n+i+eta-1) ) |n+q>
  // L-^q |n>   -> sqrt( n!/(n-q)! prod_{i=1..q} (n+eta-i) )   |n-q>, n >= q
  double prod = 1.0;
  if (dir == Direction::raise) {
    for (int i = 1; i <= q; ++i) prod *= (n + i) * (n + i + eta - 1.0);
  } else {
    for (int i = 1; i <= q; ++i) prod *= (n - i + 1) * (n + eta - i);
  }
  return std::sqrt(prod);
}

}  // namespace

BasisVector apply_power(int q, Direction dir, const BasisVector& v) {
  if (q < 1) throw std::domain_error("apply_power: q must be >= 1");
  const Op op = dir == Direction::raise ? Op::raise : Op::lower;
  BasisVector out = v;
  for (int i = 0; i < q; ++i) out = apply_spectral(op, out);

  // Cross-check the composition against the closed product form.
  const double eta = v.context().eta;
  for (const auto& [n, a] : v.amplitudes()) {
    if (dir == Direction::lower && n < q) continue;
    const int target = dir == Direction::raise ? n + q : n - q;
    const double closed = closed_power_coefficient(q, dir, n, eta) * a;
    const double got = out.at(target);
    if (std::abs(got - closed) > 1e-12 * std::max(1.0, std::abs(closed)))
      throw std::logic_error(
          "apply_power: composition disagrees with the closed product");
  }
  return out;
}

namespace {

BasisVector commutator(Op x, Op y, const BasisVector& v) {
  return apply_spectral(x, apply_spectral(y, v)) -
         apply_spectral(y, apply_spectral(x, v));
}

BasisVector apply_la(const BasisVector& v) {
  return apply_spectral(Op::raise, v) + apply_spectral(Op::lower, v);
}

BasisVector apply_ls(const BasisVector& v) {
  return apply_spectral(Op::raise, v) - apply_spectral(Op::lower, v);
}

}  // namespace

std::pair<BasisVector, BasisVector> commutator_check(CommutatorPair pair,
                                                     const BasisVector& v) {
  switch (pair) {
    case CommutatorPair::mp:
      return {commutator(Op::lower, Op::raise, v),
              2.0 * apply_spectral(Op::zero, v)};
    case CommutatorPair::zp:
      return {commutator(Op::zero, Op::raise, v),
              apply_spectral(Op::raise, v)};
    case CommutatorPair::mz:
      return {commutator(Op::lower, Op::zero, v),
              apply_spectral(Op::lower, v)};
    case CommutatorPair::za: {
      BasisVector lhs = apply_spectral(Op::zero, apply_la(v)) -
                        apply_la(apply_spectral(Op::zero, v));
      return {std::move(lhs), apply_ls(v)};
    }
    case CommutatorPair::zs: {
      BasisVector lhs = apply_spectral(Op::zero, apply_ls(v)) -
                        apply_ls(apply_spectral(Op::zero, v));
      return {std::move(lhs), apply_la(v)};
    }
  }
  throw std::logic_error("commutator_check: unknown pair");
}

BasisVector casimir(const BasisVector& v) {
  const BasisVector l0v = apply_spectral(Op::zero, v);
  const BasisVector l0l0v = apply_spectral(Op::zero, l0v);

  BasisVector first = l0l0v - l0v -
                      apply_spectral(Op::raise, apply_spectral(Op::lower, v));
  BasisVector second = l0l0v + l0v -
                       apply_spectral(Op::lower, apply_spectral(Op::raise, v));

  // agreement is limited by roundoff of the ~L0^2-sized intermediates
  const double scale = std::max(1.0, l0l0v.max_abs());
  if (BasisVector::max_abs_diff(first, second) > 1e-12 * scale)
    throw std::logic_error("casimir: factorizations disagree");
  return first;
}

double casimir_eigenvalue(double eta) {
  const double j = 0.5 * eta;
  return j * (j - 1.0);
}

}  // namespace psharm::ladder
