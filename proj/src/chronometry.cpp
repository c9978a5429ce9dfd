#include "hyperchron/chronometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace hyperchron {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

template <typename M>
void require_arity(std::span<const M> vs, size_t expected) {
  if (vs.size() != expected) {
    std::ostringstream os;
    os << "expected " << expected << " slots, got " << vs.size();
    throw Error(ErrorCode::WrongArity, os.str());
  }
}

int common_dim(std::span<const Interval> vs) {
  const int r = vs.front().dim();
  for (const auto& v : vs)
    if (v.dim() != r)
      throw Error(ErrorCode::DimensionMismatch, "slot dimensions differ");
  return r;
}

// Inclusion-exclusion over nonempty subsets of the slots.
Complex polarize(std::span<const CMatrix> vs) {
  const int r = static_cast<int>(vs.size());
  const int dim = static_cast<int>(vs.front().rows());
  Complex total = 0.0;
  CMatrix sum(dim, dim);
  for (unsigned mask = 1; mask < (1u << r); ++mask) {
    sum.setZero();
    int count = 0;
    for (int i = 0; i < r; ++i) {
      if (mask & (1u << i)) {
        sum += vs[static_cast<size_t>(i)];
        ++count;
      }
    }
    const double sign = ((r - count) % 2 == 0) ? 1.0 : -1.0;
    total += sign * determinant(sum);
  }
  return total;
}

// Rotate so the largest-magnitude component (lowest index among ties) is real
// and positive.
void fix_phase(CVector& u) {
  Eigen::Index best = 0;
  double best_abs = -1.0;
  for (Eigen::Index k = 0; k < u.size(); ++k) {
    const double a = std::abs(u(k));
    if (a > best_abs * (1.0 + 1e-12)) {
      best_abs = a;
      best = k;
    }
  }
  if (best_abs > 0.0) u *= std::conj(u(best)) / best_abs;
}

}  // namespace

std::string_view to_string(CausalLabel label) {
  switch (label) {
    case CausalLabel::Zero: return "Zero";
    case CausalLabel::FutureNull: return "FutureNull";
    case CausalLabel::PastNull: return "PastNull";
    case CausalLabel::DegenerateFutureTimelike: return "DegenerateFutureTimelike";
    case CausalLabel::DegeneratePastTimelike: return "DegeneratePastTimelike";
    case CausalLabel::DegenerateSpacelike: return "DegenerateSpacelike";
    case CausalLabel::DegenerateFutureSemiSpacelike:
      return "DegenerateFutureSemiSpacelike";
    case CausalLabel::DegeneratePastSemiSpacelike:
      return "DegeneratePastSemiSpacelike";
    case CausalLabel::FutureTimelike: return "FutureTimelike";
    case CausalLabel::PastTimelike: return "PastTimelike";
    case CausalLabel::Spacelike: return "Spacelike";
    case CausalLabel::FutureSemiSpacelike: return "FutureSemiSpacelike";
    case CausalLabel::PastSemiSpacelike: return "PastSemiSpacelike";
  }
  return "Unknown";
}

const std::array<CausalLabel, kCausalLabelCount>& all_causal_labels() {
  static const std::array<CausalLabel, kCausalLabelCount> labels = {
      CausalLabel::Zero,
      CausalLabel::FutureNull,
      CausalLabel::PastNull,
      CausalLabel::DegenerateFutureTimelike,
      CausalLabel::DegeneratePastTimelike,
      CausalLabel::DegenerateSpacelike,
      CausalLabel::DegenerateFutureSemiSpacelike,
      CausalLabel::DegeneratePastSemiSpacelike,
      CausalLabel::FutureTimelike,
      CausalLabel::PastTimelike,
      CausalLabel::Spacelike,
      CausalLabel::FutureSemiSpacelike,
      CausalLabel::PastSemiSpacelike,
  };
  return labels;
}

CausalLabel label_for_signature(int r, int p, int q) {
  const int rank = p + q;
  if (rank == 0) return CausalLabel::Zero;
  if (rank == r) {
    if (q == 0) return CausalLabel::FutureTimelike;
    if (p == 0) return CausalLabel::PastTimelike;
    if (p == q) return CausalLabel::Spacelike;
    return p > q ? CausalLabel::FutureSemiSpacelike
                 : CausalLabel::PastSemiSpacelike;
  }
  if (rank == 1) return p == 1 ? CausalLabel::FutureNull : CausalLabel::PastNull;
  if (q == 0) return CausalLabel::DegenerateFutureTimelike;
  if (p == 0) return CausalLabel::DegeneratePastTimelike;
  if (p == q) return CausalLabel::DegenerateSpacelike;
  return p > q ? CausalLabel::DegenerateFutureSemiSpacelike
               : CausalLabel::DegeneratePastSemiSpacelike;
}

CMatrix CanonicalDecomposition::reconstruct(int r) const {
  CMatrix m = CMatrix::Zero(r, r);
  for (const auto& t : terms)
    m += static_cast<double>(t.sign) * t.alpha * t.alpha.adjoint();
  return m;
}

bool is_weakly_hermitian(const CMatrix& m, const Tolerance& tol) {
  if (m.rows() != m.cols()) return false;
  return max_norm(m - m.adjoint()) <= tol.threshold(max_norm(m));
}

Complex determinant(const CMatrix& m) {
  if (m.rows() == 0) return 1.0;
  return m.partialPivLu().determinant();
}

double chronometric_form(const Interval& v) {
  return factorial(v.dim()) * determinant(v.matrix()).real();
}

Complex mixed_chronometric_complex(std::span<const CMatrix> vs) {
  if (vs.empty()) throw Error(ErrorCode::WrongArity, "no slots supplied");
  const auto r = static_cast<size_t>(vs.front().rows());
  require_arity(vs, r);
  for (const auto& v : vs)
    if (v.rows() != static_cast<Eigen::Index>(r) || v.cols() != v.rows())
      throw Error(ErrorCode::DimensionMismatch, "slot dimensions differ");
  return polarize(vs);
}

double mixed_chronometric(std::span<const Interval> vs) {
  if (vs.empty()) throw Error(ErrorCode::WrongArity, "no slots supplied");
  const int r = common_dim(vs);
  require_arity(vs, static_cast<size_t>(r));
  std::vector<CMatrix> ms;
  ms.reserve(vs.size());
  for (const auto& v : vs) ms.push_back(v.matrix());
  return polarize(ms).real();
}

CMatrix polarized_covector_complex(std::span<const CMatrix> vs) {
  if (vs.empty()) throw Error(ErrorCode::WrongArity, "no slots supplied");
  const int r = static_cast<int>(vs.front().rows()) ;
  require_arity(vs, static_cast<size_t>(r - 1));
  std::vector<CMatrix> slots(vs.begin(), vs.end());
  slots.insert(slots.begin(), CMatrix::Zero(r, r));
  CMatrix n(r, r);
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      slots.front().setZero();
      slots.front()(a, b) = 1.0;
      n(a, b) = polarize(slots);
    }
  }
  return n;
}

CMatrix polarized_covector(std::span<const Interval> vs) {
  if (vs.empty()) throw Error(ErrorCode::WrongArity, "no slots supplied");
  const int r = common_dim(vs);
  require_arity(vs, static_cast<size_t>(r - 1));
  std::vector<CMatrix> slots;
  slots.reserve(static_cast<size_t>(r));
  slots.push_back(CMatrix::Zero(r, r));
  for (const auto& v : vs) slots.push_back(v.matrix());

  // Evaluate on the Hermitian basis (real values), then undo the basis change:
  // E_jk = (S_jk - i A_jk) / 2 with S, A the symmetric/antisymmetric elements.
  const auto basis = hermitian_basis(r);
  std::vector<double> values;
  values.reserve(basis.size());
  for (const auto& e : basis) {
    slots.front() = e;
    values.push_back(polarize(slots).real());
  }
  const Complex i(0.0, 1.0);
  CMatrix n = CMatrix::Zero(r, r);
  size_t idx = 0;
  for (int k = 0; k < r; ++k) n(k, k) = values[idx++];
  for (int j = 0; j < r; ++j) {
    for (int k = j + 1; k < r; ++k) {
      const double s = values[idx++];
      const double a = values[idx++];
      n(j, k) = (s - i * a) * 0.5;
      n(k, j) = (s + i * a) * 0.5;
    }
  }
  return n;
}

RVector hermitian_eigenvalues(const Interval& v) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(v.matrix(), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

CausalClass causal_classify(const Interval& v, const Tolerance& tol) {
  const RVector ev = hermitian_eigenvalues(v);
  const double theta = tol.threshold(ev.cwiseAbs().maxCoeff());
  CausalClass c;
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    if (ev(k) > theta) ++c.plus;
    if (ev(k) < -theta) ++c.minus;
  }
  c.rank = c.plus + c.minus;
  c.label = label_for_signature(v.dim(), c.plus, c.minus);
  return c;
}

CanonicalDecomposition canonical_decompose(const Interval& v,
                                           const Tolerance& tol) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(v.matrix());
  const RVector& ev = es.eigenvalues();
  const double theta = tol.threshold(ev.cwiseAbs().maxCoeff());
  CanonicalDecomposition d;
  for (Eigen::Index k = ev.size() - 1; k >= 0; --k) {
    if (std::abs(ev(k)) <= theta) continue;
    CVector u = es.eigenvectors().col(k);
    fix_phase(u);
    d.terms.push_back({ev(k) > 0 ? 1 : -1, std::sqrt(std::abs(ev(k))) * u});
  }
  return d;
}

double proper_time(const Interval& v, const Tolerance& tol) {
  const CausalClass c = causal_classify(v, tol);
  if (c.label != CausalLabel::FutureTimelike &&
      c.label != CausalLabel::PastTimelike) {
    std::ostringstream os;
    os << "proper time needs a timelike separation, got " << to_string(c.label)
       << " (p=" << c.plus << ", q=" << c.minus << ")";
    throw Error(ErrorCode::NotTimelike, os.str());
  }
  return std::pow(std::abs(chronometric_form(v)), 1.0 / v.dim());
}

double proper_time(const Event& x, const Event& y, const Tolerance& tol) {
  return proper_time(x - y, tol);
}

Event minkowski_to_event(const MinkowskiVector& v) {
  CMatrix m(2, 2);
  m(0, 0) = v.t + v.z;
  m(0, 1) = Complex(v.x, v.y);
  m(1, 0) = Complex(v.x, -v.y);
  m(1, 1) = v.t - v.z;
  return Event(m * kInvSqrt2);
}

MinkowskiVector event_to_minkowski(const Event& e) {
  if (e.dim() != 2)
    throw Error(ErrorCode::WrongDimension,
                "Minkowski correspondence needs a 2x2 event");
  const CMatrix& m = e.matrix();
  const double s = kInvSqrt2;
  MinkowskiVector v;
  v.t = (m(0, 0).real() + m(1, 1).real()) * s;
  v.z = (m(0, 0).real() - m(1, 1).real()) * s;
  v.x = m(0, 1).real() / s;
  v.y = m(0, 1).imag() / s;
  return v;
}

bool is_future_causal(const Interval& v, const Tolerance& tol,
                      bool include_origin) {
  const CausalClass c = causal_classify(v, tol);
  if (c.rank == 0) return include_origin;
  return c.minus == 0;
}

}  // namespace hyperchron
