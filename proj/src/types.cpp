#include "hyperchron/types.hpp"

#include <cmath>
#include <sstream>

namespace hyperchron {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonHermitianInput: return "NonHermitianInput";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotTimelike: return "NotTimelike";
    case ErrorCode::NotTimelikeTangent: return "NotTimelikeTangent";
    case ErrorCode::SingularSample: return "SingularSample";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NonTracelessGenerator: return "NonTracelessGenerator";
    case ErrorCode::TachyonicMomentum: return "TachyonicMomentum";
    case ErrorCode::MasslessSystem: return "MasslessSystem";
    case ErrorCode::SingularCorrelation: return "SingularCorrelation";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::InvalidDensityMatrix: return "InvalidDensityMatrix";
    case ErrorCode::InvalidCandidate: return "InvalidCandidate";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

double max_norm(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

CMatrix hermitian_part(const CMatrix& m) {
  return (m + m.adjoint()) * 0.5;
}

Event::Event(const CMatrix& m, const Tolerance& tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream os;
    os << "event matrix must be square and non-empty, got " << m.rows() << "x"
       << m.cols();
    throw Error(ErrorCode::NonHermitianInput, os.str());
  }
  const double asym = max_norm(m - m.adjoint());
  if (!(asym <= tol.threshold(max_norm(m)))) {
    std::ostringstream os;
    os.precision(17);
    os << "matrix is not weakly Hermitian: max |M - M^dagger| = " << asym;
    throw Error(ErrorCode::NonHermitianInput, os.str());
  }
  m_ = hermitian_part(m);
}

Event Event::zero(int r) { return Event(CMatrix::Zero(r, r), Unchecked{}); }

Event Event::identity(int r) {
  return Event(CMatrix::Identity(r, r), Unchecked{});
}

Event Event::diagonal(const RVector& d) {
  return Event(d.cast<Complex>().asDiagonal().toDenseMatrix(), Unchecked{});
}

Event Event::operator+(const Event& o) const {
  if (dim() != o.dim())
    throw Error(ErrorCode::DimensionMismatch, "event dimensions differ");
  return Event(m_ + o.m_, Unchecked{});
}

Event Event::operator-(const Event& o) const {
  if (dim() != o.dim())
    throw Error(ErrorCode::DimensionMismatch, "event dimensions differ");
  return Event(m_ - o.m_, Unchecked{});
}

Event Event::operator-() const { return Event(-m_, Unchecked{}); }

Event Event::operator*(double s) const { return Event(m_ * s, Unchecked{}); }

std::vector<CMatrix> hermitian_basis(int r) {
  std::vector<CMatrix> basis;
  basis.reserve(static_cast<size_t>(r) * r);
  for (int k = 0; k < r; ++k) {
    CMatrix e = CMatrix::Zero(r, r);
    e(k, k) = 1.0;
    basis.push_back(e);
  }
  const Complex i(0.0, 1.0);
  for (int j = 0; j < r; ++j) {
    for (int k = j + 1; k < r; ++k) {
      CMatrix s = CMatrix::Zero(r, r);
      s(j, k) = 1.0;
      s(k, j) = 1.0;
      basis.push_back(s);
      CMatrix a = CMatrix::Zero(r, r);
      a(j, k) = i;
      a(k, j) = -i;
      basis.push_back(a);
    }
  }
  return basis;
}

RVector hermitian_coordinates(const CMatrix& h) {
  const int r = static_cast<int>(h.rows());
  RVector c(static_cast<Eigen::Index>(r) * r);
  int idx = 0;
  for (int k = 0; k < r; ++k) c(idx++) = h(k, k).real();
  for (int j = 0; j < r; ++j) {
    for (int k = j + 1; k < r; ++k) {
      c(idx++) = h(j, k).real();
      c(idx++) = h(j, k).imag();
    }
  }
  return c;
}

}  // namespace hyperchron
