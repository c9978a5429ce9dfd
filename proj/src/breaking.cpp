#include "hyperchron/breaking.hpp"

#include <cmath>
#include <sstream>

namespace hyperchron {

namespace {

CMatrix kron_identity(const CMatrix& m, int n) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  CMatrix out = CMatrix::Zero(rows * n, cols * n);
  for (Eigen::Index a = 0; a < rows; ++a)
    for (Eigen::Index b = 0; b < cols; ++b)
      out.block(a * n, b * n, n, n).diagonal().setConstant(m(a, b));
  return out;
}

void require_minkowski(const Event& x) {
  if (x.dim() != 2) {
    std::ostringstream os;
    os << "expected a 2x2 Minkowski event, got " << x.dim() << "x" << x.dim();
    throw Error(ErrorCode::WrongDimension, os.str());
  }
}

}  // namespace

BrokenEvent::BrokenEvent(const Event& e, int n) : e_(e), n_(n) {
  if (n < 1 || e.dim() != 2 * n) {
    std::ostringstream os;
    os << "broken event with n = " << n << " must be " << 2 * n << "x" << 2 * n
       << ", got " << e.dim() << "x" << e.dim();
    throw Error(ErrorCode::WrongDimension, os.str());
  }
}

CMatrix BrokenEvent::block(int a, int a_prime) const {
  return e_.matrix().block(a * n_, a_prime * n_, n_, n_);
}

BrokenEvent embed_minkowski(const Event& x, int n) {
  require_minkowski(x);
  if (n < 1) throw Error(ErrorCode::WrongDimension, "internal dimension n < 1");
  return BrokenEvent(Event(kron_identity(x.matrix(), n)), n);
}

std::optional<Event> is_embedded(const BrokenEvent& x, double tol) {
  const int n = x.internal_dim();
  CMatrix m(2, 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) m(a, b) = x.block(a, b).trace() / double(n);
  const CMatrix residual = x.matrix() - kron_identity(m, n);
  if (max_norm(residual) > tol) return std::nullopt;
  return Event(hermitian_part(m));
}

PoincareElement lift_poincare(const CMatrix& lambda2, const Event& beta2,
                              int n) {
  require_minkowski(beta2);
  if (lambda2.rows() != 2 || lambda2.cols() != 2)
    throw Error(ErrorCode::WrongDimension, "lambda must be 2x2");
  const LorentzElement spin(lambda2);
  return {LorentzElement(kron_identity(spin.matrix(), n), 1e-8),
          Event(kron_identity(beta2.matrix(), n))};
}

PoincareElement lift_poincare(const PoincareElement& g2, int n) {
  return lift_poincare(g2.lambda.matrix(), g2.beta, n);
}

HermitianCorrelation::HermitianCorrelation(const Event& t) : t_(t) {
  const Eigen::JacobiSVD<CMatrix> svd(t.matrix());
  const auto& sv = svd.singularValues();
  if (!(sv(sv.size() - 1) > 1e-12 * sv(0)))
    throw Error(ErrorCode::SingularCorrelation,
                "Hermitian correlation t is singular");
  inv_ = t.matrix().inverse();
}

CMatrix strong_hermitian_conjugate(const CMatrix& mu,
                                   const HermitianCorrelation& t) {
  if (mu.rows() != t.matrix().rows() || mu.cols() != mu.rows())
    throw Error(ErrorCode::DimensionMismatch,
                "mu and the correlation have different dimensions");
  return t.inverse() * mu.adjoint() * t.matrix();
}

bool is_strong_hermitian(const CMatrix& mu, const HermitianCorrelation& t,
                         const Tolerance& tol) {
  return max_norm(mu - strong_hermitian_conjugate(mu, t)) <=
         tol.threshold(max_norm(mu));
}

double twistor_pseudo_norm(const Hypertwistor& z) {
  if (z.omega.size() != z.pi.size())
    throw Error(ErrorCode::DimensionMismatch, "omega and pi differ in size");
  // pi.adjoint() * omega = sum conj(pi_k) omega_k
  return 2.0 * z.pi.dot(z.omega).real();
}

CMatrix twistor_form(int r) {
  CMatrix h = CMatrix::Zero(2 * r, 2 * r);
  h.topRightCorner(r, r).setIdentity();
  h.bottomLeftCorner(r, r).setIdentity();
  return h;
}

CMatrix twistor_u_generator(const CMatrix& anti_hermitian) {
  const Eigen::Index dim = anti_hermitian.rows();
  if (dim % 2 != 0 || anti_hermitian.cols() != dim)
    throw Error(ErrorCode::WrongDimension, "generator must be 2r x 2r");
  return twistor_form(static_cast<int>(dim / 2)) * anti_hermitian;
}

std::optional<SegreFactors> segre_factor(const CMatrix& z, double tol) {
  if (z.size() == 0 || max_norm(z) == 0.0)
    throw Error(ErrorCode::ZeroInput, "Segre factorization of zero");
  const Eigen::JacobiSVD<CMatrix> svd(z, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv.size() > 1 && sv(1) > tol * sv(0)) return std::nullopt;

  CVector a = svd.matrixU().col(0);
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    if (std::abs(a(k)) > tol) {
      a *= std::conj(a(k)) / std::abs(a(k));
      a(k) = std::abs(a(k));
      break;
    }
  }
  SegreFactors f;
  f.twistor = a;
  f.internal = (a.adjoint() * z).transpose();
  return f;
}

Complex FieldExpansion::first_order(const BrokenEvent& displacement) const {
  Complex sum = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      sum += (phi1[a][b] * displacement.block(a, b)).trace();
  return sum;
}

FieldExpansion field_expand(const ScalarField& phi, const Event& x, int n,
                            double h) {
  const BrokenEvent base = embed_minkowski(x, n);
  if (h <= 0.0) h = 1e-5 * (1.0 + max_norm(x.matrix()));
  const int dim = 2 * n;
  const auto basis = hermitian_basis(dim);

  std::vector<Complex> d;
  d.reserve(basis.size());
  for (const auto& e : basis) {
    const BrokenEvent up(Event(base.matrix() + h * e), n);
    const BrokenEvent down(Event(base.matrix() - h * e), n);
    d.push_back((phi(up) - phi(down)) / (2.0 * h));
  }

  // Gradient G with first-order change sum_ab G(a,b) dX(a,b).
  const Complex i(0.0, 1.0);
  CMatrix g = CMatrix::Zero(dim, dim);
  size_t idx = 0;
  for (int k = 0; k < dim; ++k) g(k, k) = d[idx++];
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      const Complex s = d[idx++];
      const Complex a = d[idx++];
      g(j, k) = (s - i * a) * 0.5;
      g(k, j) = (s + i * a) * 0.5;
    }
  }

  FieldExpansion out;
  out.phi0 = phi(base);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      out.phi1[a][b] = g.block(a * n, b * n, n, n).transpose();
  return out;
}

}  // namespace hyperchron
