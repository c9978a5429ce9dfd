#pragma once

// Hyper-Lorentz and hyper-Poincare actions x -> lambda x lambda^dagger + beta,
// curves and the proper-time functional, geodesics, infinitesimal generators
// and the conserved quantities built from their Killing tensors.

#include "hyperchron/chronometry.hpp"
#include "hyperchron/sampling.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace hyperchron {

/// Element of SL(r, C).
class LorentzElement {
 public:
  /// Throws NotUnimodular when |det(lambda) - 1| > det_tol.
  explicit LorentzElement(const CMatrix& lambda, double det_tol = 1e-9);

  static LorentzElement identity(int r);

  int dim() const { return static_cast<int>(lambda_.rows()); }
  const CMatrix& matrix() const { return lambda_; }

 private:
  CMatrix lambda_;
};

struct PoincareElement {
  LorentzElement lambda;
  Event beta;

  static PoincareElement identity(int r);
  int dim() const { return lambda.dim(); }
};

/// (lambda1, beta1) o (lambda2, beta2) = (lambda1 lambda2,
/// lambda1 beta2 lambda1^dagger + beta1).
PoincareElement compose(const PoincareElement& g1, const PoincareElement& g2);

/// lambda x lambda^dagger + beta. Throws DimensionMismatch.
Event apply_poincare(const PoincareElement& g, const Event& x);

/// Lorentz part only: lambda v lambda^dagger.
Interval apply_lorentz(const LorentzElement& lambda, const Interval& v);

struct SlSample {
  LorentzElement lambda;
  double condition = 0.0;  // 2-norm condition number of the accepted draw
  int attempts = 0;
};

/// Ginibre draw rescaled by the principal root det^(-1/r). Draws with
/// condition number above max_condition are rejected; after a bounded number
/// of attempts SingularSample is thrown.
SlSample random_sl_sample(int r, Rng& rng, double max_condition = 1e6);
LorentzElement random_sl(int r, std::uint64_t seed);

/// Element of the Lie algebra of the hyper-Poincare group: the vector field
/// x -> m x + x m^dagger + b with tr(m) = 0.
class PoincareGenerator {
 public:
  /// Throws NonTracelessGenerator if |tr m| exceeds the tolerance.
  PoincareGenerator(const CMatrix& m, const Event& b, const Tolerance& tol = {});

  int dim() const { return b_.dim(); }
  const CMatrix& m() const { return m_; }
  const Event& b() const { return b_; }

 private:
  CMatrix m_;
  Event b_;
};

Interval generator_field(const PoincareGenerator& gen, const Event& x);

/// Exactly 3r^2 - 2 generators in a fixed order: the r^2 - 1 Hermitian
/// traceless (generalized Gell-Mann) m's, then i times each of them, then
/// the r^2 translations of hermitian_basis(r). Requires r >= 2.
std::vector<PoincareGenerator> poincare_generator_basis(int r);

/// Numerical rank of the generator fields as real-linear maps, evaluated
/// jointly at the given sample points.
int generator_field_rank(const std::vector<PoincareGenerator>& gens,
                         const std::vector<Event>& points,
                         double rel_threshold = 1e-9);

/// Parametrized curve lambda -> x(lambda) on [a, b].
struct Curve {
  std::function<Event(double)> eval;
  double a = 0.0;
  double b = 1.0;

  Event operator()(double lambda) const { return eval(lambda); }
  double default_step() const { return 1e-5 * (b - a); }
};

/// Central difference with step h; second-order one-sided near the ends of
/// [a, b]. h <= 0 selects default_step().
Interval curve_tangent(const Curve& c, double lambda, double h = 0.0);

/// Second derivative by central differences of step h.
Interval curve_acceleration(const Curve& c, double lambda, double h);

/// Affinely parametrized geodesic from z (s = 0) to y (s = tau), with
/// tau = Delta(y - z)^(1/r). Throws NotTimelike unless y - z is
/// FutureTimelike.
Curve geodesic_between(const Event& y, const Event& z, const Tolerance& tol = {});

/// Composite Simpson rule for the integral of Delta(v)^(1/r) over the curve.
/// Throws NotTimelikeTangent, carrying the parameter, if a sampled tangent is
/// not FutureTimelike.
double proper_time_functional(const Curve& c, int steps = 1000,
                              const Tolerance& tol = {});

/// Max-norm of the covector g(., dv/dlambda, v, ..., v) at lambda0.
double geodesic_residual(const Curve& c, double lambda0, double h);

/// g(xi(x(lambda)), v, ..., v): the Killing-tensor contraction K(v, ..., v)
/// with K = g . xi.
double killing_conserved_quantity(const PoincareGenerator& gen, const Curve& c,
                                  double lambda, double h = 0.0);

/// r! |xi|_F |v|_F^(r-1): the natural magnitude of the conserved quantity,
/// used to turn absolute drifts into relative ones.
double killing_scale(const PoincareGenerator& gen, const Curve& c,
                     double lambda, double h = 0.0);

}  // namespace hyperchron
