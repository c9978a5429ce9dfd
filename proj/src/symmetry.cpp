#include "hyperchron/symmetry.hpp"

#include <cmath>
#include <sstream>

namespace hyperchron {

namespace {

constexpr int kMaxSlAttempts = 64;

void require_same_dim(int a, int b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": dimension " << a << " vs " << b;
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
}

// Hermitian traceless basis of sl(r): off-diagonal pairs, then the
// generalized Gell-Mann diagonal elements.
std::vector<CMatrix> hermitian_traceless_basis(int r) {
  std::vector<CMatrix> out;
  const Complex i(0.0, 1.0);
  for (int j = 0; j < r; ++j) {
    for (int k = j + 1; k < r; ++k) {
      CMatrix s = CMatrix::Zero(r, r);
      s(j, k) = 1.0;
      s(k, j) = 1.0;
      out.push_back(s);
      CMatrix a = CMatrix::Zero(r, r);
      a(j, k) = -i;
      a(k, j) = i;
      out.push_back(a);
    }
  }
  for (int l = 1; l < r; ++l) {
    CMatrix d = CMatrix::Zero(r, r);
    const double norm = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int k = 0; k < l; ++k) d(k, k) = norm;
    d(l, l) = -l * norm;
    out.push_back(d);
  }
  return out;
}

}  // namespace

LorentzElement::LorentzElement(const CMatrix& lambda, double det_tol) {
  if (lambda.rows() != lambda.cols() || lambda.rows() == 0)
    throw Error(ErrorCode::NotUnimodular, "lambda must be square");
  const Complex det = determinant(lambda);
  if (!(std::abs(det - 1.0) <= det_tol)) {
    std::ostringstream os;
    os.precision(17);
    os << "det(lambda) = " << det << " is not 1";
    throw Error(ErrorCode::NotUnimodular, os.str());
  }
  lambda_ = lambda;
}

LorentzElement LorentzElement::identity(int r) {
  return LorentzElement(CMatrix::Identity(r, r));
}

PoincareElement PoincareElement::identity(int r) {
  return {LorentzElement::identity(r), Event::zero(r)};
}

PoincareElement compose(const PoincareElement& g1, const PoincareElement& g2) {
  require_same_dim(g1.dim(), g2.dim(), "compose");
  const CMatrix& l1 = g1.lambda.matrix();
  // Rounding in long products drifts det away from 1.
  LorentzElement lambda(l1 * g2.lambda.matrix(), 1e-6);
  Event beta(hermitian_part(l1 * g2.beta.matrix() * l1.adjoint()) +
             g1.beta.matrix());
  return {lambda, beta};
}

Interval apply_lorentz(const LorentzElement& lambda, const Interval& v) {
  require_same_dim(lambda.dim(), v.dim(), "apply_lorentz");
  const CMatrix& l = lambda.matrix();
  return Event(hermitian_part(l * v.matrix() * l.adjoint()));
}

Event apply_poincare(const PoincareElement& g, const Event& x) {
  require_same_dim(g.dim(), x.dim(), "apply_poincare");
  require_same_dim(g.beta.dim(), x.dim(), "apply_poincare");
  return apply_lorentz(g.lambda, x) + g.beta;
}

SlSample random_sl_sample(int r, Rng& rng, double max_condition) {
  if (r < 2) throw Error(ErrorCode::InvalidArgument, "random_sl needs r >= 2");
  for (int attempt = 1; attempt <= kMaxSlAttempts; ++attempt) {
    const CMatrix g = ginibre(r, r, rng);
    const Eigen::JacobiSVD<CMatrix> svd(g);
    const auto& sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    if (!(smin > 0.0)) continue;
    const double cond = sv(0) / smin;
    if (cond > max_condition) continue;
    const Complex det = determinant(g);
    const CMatrix lambda = g * std::pow(det, -1.0 / r);
    if (std::abs(determinant(lambda) - 1.0) > 1e-10) continue;
    return {LorentzElement(lambda, 1e-10), cond, attempt};
  }
  throw Error(ErrorCode::SingularSample,
              "no well-conditioned SL(r,C) sample within the attempt budget");
}

LorentzElement random_sl(int r, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return random_sl_sample(r, rng).lambda;
}

PoincareGenerator::PoincareGenerator(const CMatrix& m, const Event& b,
                                     const Tolerance& tol) {
  if (m.rows() != m.cols() || m.rows() != b.dim())
    throw Error(ErrorCode::DimensionMismatch,
                "generator matrix and translation dimensions differ");
  if (!(std::abs(m.trace()) <= tol.threshold(max_norm(m)))) {
    std::ostringstream os;
    os.precision(17);
    os << "generator must be trace-free, tr(m) = " << m.trace();
    throw Error(ErrorCode::NonTracelessGenerator, os.str());
  }
  m_ = m;
  b_ = b;
}

Interval generator_field(const PoincareGenerator& gen, const Event& x) {
  require_same_dim(gen.dim(), x.dim(), "generator_field");
  const CMatrix& m = gen.m();
  return Event(hermitian_part(m * x.matrix() + x.matrix() * m.adjoint())) +
         gen.b();
}

std::vector<PoincareGenerator> poincare_generator_basis(int r) {
  if (r < 2)
    throw Error(ErrorCode::InvalidArgument, "generator basis needs r >= 2");
  const Complex i(0.0, 1.0);
  const auto boosts = hermitian_traceless_basis(r);
  const Event none = Event::zero(r);
  std::vector<PoincareGenerator> out;
  out.reserve(static_cast<size_t>(3 * r * r - 2));
  for (const auto& h : boosts) out.emplace_back(h, none);
  for (const auto& h : boosts) out.emplace_back(i * h, none);
  for (const auto& e : hermitian_basis(r))
    out.emplace_back(CMatrix::Zero(r, r), Event(e));
  return out;
}

int generator_field_rank(const std::vector<PoincareGenerator>& gens,
                         const std::vector<Event>& points,
                         double rel_threshold) {
  if (gens.empty() || points.empty()) return 0;
  const int r = gens.front().dim();
  const Eigen::Index block = static_cast<Eigen::Index>(r) * r;
  RMatrix stacked(block * static_cast<Eigen::Index>(points.size()),
                  static_cast<Eigen::Index>(gens.size()));
  for (size_t g = 0; g < gens.size(); ++g)
    for (size_t p = 0; p < points.size(); ++p)
      stacked.block(block * static_cast<Eigen::Index>(p),
                    static_cast<Eigen::Index>(g), block, 1) =
          hermitian_coordinates(generator_field(gens[g], points[p]).matrix());
  const Eigen::JacobiSVD<RMatrix> svd(stacked);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > rel_threshold * sv(0)) ++rank;
  return rank;
}

Interval curve_tangent(const Curve& c, double lambda, double h) {
  if (h <= 0.0) h = c.default_step();
  const CMatrix x0 = c(lambda).matrix();
  if (lambda - h < c.a) {
    const CMatrix d = -3.0 * x0 + 4.0 * c(lambda + h).matrix() -
                      c(lambda + 2.0 * h).matrix();
    return Event(hermitian_part(d / (2.0 * h)));
  }
  if (lambda + h > c.b) {
    const CMatrix d = 3.0 * x0 - 4.0 * c(lambda - h).matrix() +
                      c(lambda - 2.0 * h).matrix();
    return Event(hermitian_part(d / (2.0 * h)));
  }
  const CMatrix d = c(lambda + h).matrix() - c(lambda - h).matrix();
  return Event(hermitian_part(d / (2.0 * h)));
}

Interval curve_acceleration(const Curve& c, double lambda, double h) {
  const CMatrix d = c(lambda + h).matrix() - 2.0 * c(lambda).matrix() +
                    c(lambda - h).matrix();
  return Event(hermitian_part(d / (h * h)));
}

Curve geodesic_between(const Event& y, const Event& z, const Tolerance& tol) {
  require_same_dim(y.dim(), z.dim(), "geodesic_between");
  const Interval sep = y - z;
  const CausalClass cls = causal_classify(sep, tol);
  if (cls.label != CausalLabel::FutureTimelike) {
    std::ostringstream os;
    os << "geodesic endpoints must be future-timelike separated, got "
       << to_string(cls.label);
    throw Error(ErrorCode::NotTimelike, os.str());
  }
  const double tau = std::pow(chronometric_form(sep), 1.0 / y.dim());
  const CMatrix origin = z.matrix();
  const CMatrix velocity = sep.matrix() / tau;
  Curve c;
  c.eval = [origin, velocity](double s) {
    return Event(hermitian_part(origin + velocity * s));
  };
  c.a = 0.0;
  c.b = tau;
  return c;
}

double proper_time_functional(const Curve& c, int steps, const Tolerance& tol) {
  if (steps < 2) steps = 2;
  if (steps % 2 != 0) ++steps;
  const double width = (c.b - c.a) / steps;
  const double h = c.default_step();
  auto integrand = [&](double lambda) {
    const Interval v = curve_tangent(c, lambda, h);
    if (causal_classify(v, tol).label != CausalLabel::FutureTimelike) {
      std::ostringstream os;
      os.precision(17);
      os << "tangent is not future-timelike at lambda = " << lambda;
      throw Error(ErrorCode::NotTimelikeTangent, os.str(), lambda);
    }
    return std::pow(chronometric_form(v), 1.0 / v.dim());
  };
  double sum = integrand(c.a) + integrand(c.b);
  for (int k = 1; k < steps; ++k)
    sum += (k % 2 == 1 ? 4.0 : 2.0) * integrand(c.a + k * width);
  return sum * width / 3.0;
}

double geodesic_residual(const Curve& c, double lambda0, double h) {
  const Interval v = curve_tangent(c, lambda0, h);
  const Interval accel = curve_acceleration(c, lambda0, h);
  const int r = v.dim();
  std::vector<Interval> slots;
  slots.reserve(static_cast<size_t>(r - 1));
  slots.push_back(accel);
  for (int k = 1; k < r - 1; ++k) slots.push_back(v);
  return max_norm(polarized_covector(slots));
}

double killing_conserved_quantity(const PoincareGenerator& gen, const Curve& c,
                                  double lambda, double h) {
  const Event x = c(lambda);
  const Interval v = curve_tangent(c, lambda, h);
  std::vector<Interval> slots(static_cast<size_t>(x.dim()), v);
  slots.front() = generator_field(gen, x);
  return mixed_chronometric(slots);
}

double killing_scale(const PoincareGenerator& gen, const Curve& c,
                     double lambda, double h) {
  const Event x = c(lambda);
  const Interval v = curve_tangent(c, lambda, h);
  const int r = x.dim();
  return factorial(r) * generator_field(gen, x).matrix().norm() *
         std::pow(v.matrix().norm(), r - 1);
}

}  // namespace hyperchron
