#include "hyperchron/projection.hpp"

#include "hyperchron/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hyperchron {

namespace {

void validate_hermitian_unit_trace(const CMatrix& rho, const Tolerance& tol,
                                   ErrorCode code) {
  if (rho.rows() != rho.cols() || rho.rows() == 0)
    throw Error(code, "density matrix must be square and non-empty");
  if (!is_weakly_hermitian(rho, tol))
    throw Error(code, "density matrix must be Hermitian");
  const Complex tr = rho.trace();
  if (!(std::abs(tr - 1.0) <= tol.threshold(1.0) * rho.rows())) {
    std::ostringstream os;
    os.precision(17);
    os << "density matrix must have unit trace, got " << tr;
    throw Error(code, os.str());
  }
}

double smallest_eigenvalue(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

Event project_matrix(const CMatrix& rho, const BrokenEvent& x) {
  if (rho.rows() != x.internal_dim()) {
    std::ostringstream os;
    os << "rho is " << rho.rows() << "x" << rho.rows()
       << " but the event has internal dimension " << x.internal_dim();
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
  CMatrix y(2, 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) y(a, b) = (rho * x.block(a, b)).trace();
  return Event(hermitian_part(y));
}

}  // namespace

CandidateMap::CandidateMap(const CMatrix& rho, const Tolerance& tol) {
  validate_hermitian_unit_trace(rho, tol, ErrorCode::InvalidCandidate);
  rho_ = hermitian_part(rho);
}

double CandidateMap::min_eigenvalue() const { return smallest_eigenvalue(rho_); }

DensityMatrix::DensityMatrix(const CMatrix& rho, const Tolerance& tol) {
  validate_hermitian_unit_trace(rho, tol, ErrorCode::InvalidDensityMatrix);
  rho_ = hermitian_part(rho);
  const double lmin = smallest_eigenvalue(rho_);
  if (lmin < -tol.abs_eps) {
    std::ostringstream os;
    os.precision(17);
    os << "density matrix is not positive semi-definite: eigenvalue " << lmin;
    throw Error(ErrorCode::InvalidDensityMatrix, os.str());
  }
}

Event project(const CandidateMap& rho, const BrokenEvent& x) {
  return project_matrix(rho.matrix(), x);
}

Event project(const DensityMatrix& rho, const BrokenEvent& x) {
  return project_matrix(rho.matrix(), x);
}

double equivariance_error(const CandidateMap& rho, const PoincareElement& g2,
                          const BrokenEvent& x) {
  const PoincareElement lifted = lift_poincare(g2, x.internal_dim());
  const BrokenEvent moved(apply_poincare(lifted, x.event()), x.internal_dim());
  const Event lhs = project(rho, moved);
  const Event rhs = apply_poincare(g2, project(rho, x));
  return max_norm(lhs.matrix() - rhs.matrix());
}

bool check_equivariance(const CandidateMap& rho, const PoincareElement& g2,
                        const BrokenEvent& x, double tol) {
  const Event rhs = apply_poincare(g2, project(rho, x));
  return equivariance_error(rho, g2, x) <=
         tol * std::max(1.0, max_norm(rhs.matrix()));
}

CausalityReport check_causality_preservation(const DensityMatrix& rho,
                                             long trials, std::uint64_t seed,
                                             double tol) {
  const int n = rho.dim();
  CausalityReport rep;
  rep.n = n;
  rep.trials = trials;
  rep.seed = seed;
  rep.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (long k = 0; k < trials; ++k) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(k));
    CMatrix cone_element;
    if (k % 2 == 0) {
      CVector alpha = gaussian_vector(2 * n, rng);
      alpha.normalize();
      cone_element = alpha * alpha.adjoint();
    } else {
      cone_element = random_density(2 * n, rng);
    }
    const BrokenEvent x(Event(hermitian_part(cone_element)), n);
    const Event image = project(rho, x);
    const double lmin = hermitian_eigenvalues(image)(0);
    rep.min_eigenvalue = std::min(rep.min_eigenvalue, lmin);
    if (lmin < -tol) ++rep.failures;
  }
  if (trials <= 0) rep.min_eigenvalue = 0.0;
  rep.max_violation = std::max(0.0, -rep.min_eigenvalue);
  rep.pass = rep.failures == 0;
  return rep;
}

std::optional<Counterexample> falsify_non_psd(const CandidateMap& candidate,
                                              double tol) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(candidate.matrix());
  const double lmin = es.eigenvalues()(0);
  if (lmin >= -tol) return std::nullopt;

  const int n = candidate.dim();
  const CVector v = es.eigenvectors().col(0);
  CVector alpha = CVector::Zero(2);
  alpha(0) = 1.0;
  const CMatrix spinor = alpha * alpha.adjoint();
  const CMatrix internal = v * v.adjoint();
  CMatrix x = CMatrix::Zero(2 * n, 2 * n);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      x.block(a * n, b * n, n, n) = spinor(a, b) * internal;

  const BrokenEvent broken(Event(hermitian_part(x)), n);
  const Event image = project(candidate, broken);
  return Counterexample{broken, image, causal_classify(broken.event()),
                        causal_classify(image),
                        (v.adjoint() * candidate.matrix() * v)(0).real()};
}

}  // namespace hyperchron
