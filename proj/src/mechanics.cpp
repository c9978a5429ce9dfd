#include "hyperchron/mechanics.hpp"

#include <cmath>
#include <sstream>

namespace hyperchron {

AngularMomentum::AngularMomentum(const CMatrix& l, const Tolerance& tol) {
  if (l.rows() != l.cols() || l.rows() == 0)
    throw Error(ErrorCode::DimensionMismatch, "angular momentum must be square");
  if (!(std::abs(l.trace()) <= tol.threshold(max_norm(l)))) {
    std::ostringstream os;
    os.precision(17);
    os << "angular momentum must be trace-free, tr(l) = " << l.trace();
    throw Error(ErrorCode::NonTracelessGenerator, os.str());
  }
  l_ = l;
}

AngularMomentum AngularMomentum::unchecked(const CMatrix& l) {
  AngularMomentum a;
  a.l_ = l;
  return a;
}

double mass(const Momentum& p, const Tolerance& tol) {
  const double delta = chronometric_form(p.event());
  const int r = p.dim();
  // Tolerance on Delta scales like |P|^r.
  const double slack =
      factorial(r) * tol.threshold(std::pow(max_norm(p.matrix()), r));
  if (delta < -slack) {
    std::ostringstream os;
    os.precision(17);
    os << "momentum has negative chronometric form " << delta;
    throw Error(ErrorCode::TachyonicMomentum, os.str());
  }
  return delta <= 0.0 ? 0.0 : std::pow(delta, 1.0 / r);
}

ElementarySystem shift_origin(const ElementarySystem& sys, const Event& beta) {
  if (beta.dim() != sys.p.dim() || sys.l.dim() != sys.p.dim())
    throw Error(ErrorCode::DimensionMismatch, "shift_origin: dimensions differ");
  const CMatrix shifted = sys.l.matrix() + beta.matrix() * sys.p.matrix().conjugate();
  return {sys.p, AngularMomentum::unchecked(shifted)};
}

Interval spin_covector(const ElementarySystem& sys, const Tolerance& tol) {
  if (sys.l.dim() != sys.p.dim())
    throw Error(ErrorCode::DimensionMismatch, "spin_covector: dimensions differ");
  const double m = mass(sys.p, tol);
  if (!(m > 0.0)) throw Error(ErrorCode::MasslessSystem, "spin needs m > 0");
  const CMatrix& p = sys.p.matrix();
  const CMatrix& l = sys.l.matrix();
  const Complex i_over_m(0.0, 1.0 / m);
  const CMatrix s = i_over_m * (l.transpose() * p - p * l.conjugate());
  return Event(s, tol);
}

double spin_magnitude(const ElementarySystem& sys, const Tolerance& tol) {
  const Interval s = spin_covector(sys, tol);
  return std::pow(std::abs(chronometric_form(s)), 1.0 / s.dim());
}

ElementarySystem transform_system(const LorentzElement& lambda,
                                  const ElementarySystem& sys) {
  if (lambda.dim() != sys.p.dim())
    throw Error(ErrorCode::DimensionMismatch, "transform_system: dimensions differ");
  const CMatrix inv = lambda.matrix().inverse();
  const CMatrix mu = inv.transpose();
  const Event p(hermitian_part(mu * sys.p.matrix() * mu.adjoint()));
  const CMatrix l = lambda.matrix() * sys.l.matrix() * inv;
  return {Momentum(p), AngularMomentum::unchecked(l)};
}

SystemTotals system_totals(std::span<const ElementarySystem> systems) {
  if (systems.empty())
    throw Error(ErrorCode::InvalidArgument, "no systems to total");
  const int r = systems.front().p.dim();
  CMatrix p = CMatrix::Zero(r, r);
  CMatrix l = CMatrix::Zero(r, r);
  for (const auto& s : systems) {
    if (s.p.dim() != r || s.l.dim() != r)
      throw Error(ErrorCode::DimensionMismatch, "systems have different r");
    p += s.p.matrix();
    l += s.l.matrix();
  }
  return {Momentum(Event(p)), AngularMomentum::unchecked(l)};
}

}  // namespace hyperchron
