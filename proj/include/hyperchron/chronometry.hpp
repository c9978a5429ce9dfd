#pragma once

// Chronometric structure of the hyperspin quantum space-time: the
// chronometric form and its polarization, causal classification by
// signature, canonical decomposition, and proper time.

#include "hyperchron/types.hpp"

#include <array>
#include <span>
#include <string_view>
#include <vector>

namespace hyperchron {

enum class CausalLabel {
  Zero,
  FutureNull,
  PastNull,
  DegenerateFutureTimelike,
  DegeneratePastTimelike,
  DegenerateSpacelike,
  DegenerateFutureSemiSpacelike,
  DegeneratePastSemiSpacelike,
  FutureTimelike,
  PastTimelike,
  Spacelike,
  FutureSemiSpacelike,
  PastSemiSpacelike,
};

inline constexpr int kCausalLabelCount = 13;

std::string_view to_string(CausalLabel label);

/// All labels in declaration order.
const std::array<CausalLabel, kCausalLabelCount>& all_causal_labels();

struct CausalClass {
  int rank = 0;
  int plus = 0;
  int minus = 0;
  CausalLabel label = CausalLabel::Zero;

  friend bool operator==(const CausalClass&, const CausalClass&) = default;
};

/// Label for an r x r interval with p positive and q negative eigenvalues.
///   rank 0                 -> Zero
///   rank r                 -> (r,0) FutureTimelike, (0,r) PastTimelike,
///                             p = q Spacelike, else Future/PastSemiSpacelike
///   rank 1 (< r)           -> FutureNull / PastNull
///   1 < rank < r           -> the Degenerate* counterparts of the above
/// For r = 1 a nonzero interval is full rank and therefore timelike.
CausalLabel label_for_signature(int r, int p, int q);

struct SignedHyperspinor {
  int sign = 1;
  CVector alpha;
};

/// Sum of sign * alpha alpha^dagger over terms; one term per nonzero
/// eigenvalue, ordered by decreasing eigenvalue.
struct CanonicalDecomposition {
  std::vector<SignedHyperspinor> terms;

  CMatrix reconstruct(int r) const;
};

/// max |M - M^dagger| <= abs_eps + rel_eps * max|M|.
bool is_weakly_hermitian(const CMatrix& m, const Tolerance& tol = {});

/// Determinant of a square complex matrix (partial-pivot LU).
Complex determinant(const CMatrix& m);

/// Delta(v) = g(v, ..., v) = r! det(v). Real for Hermitian input.
double chronometric_form(const Interval& v);

/// g(v1, ..., vr) by the polarization sum
///   sum over nonempty S of (-1)^(r-|S|) det(sum_{i in S} v_i),
/// which equals r! times the mixed discriminant. Throws WrongArity unless
/// exactly r slots are supplied.
double mixed_chronometric(std::span<const Interval> vs);

/// Complex-multilinear polarization on arbitrary square matrices; no
/// Hermiticity requirement. Used by the covector and field-expansion code.
Complex mixed_chronometric_complex(std::span<const CMatrix> vs);

/// The covector N with sum_{A,A'} N[A][A'] u[A][A'] = g(u, vs...) for every
/// Hermitian u. Requires exactly r - 1 slots.
CMatrix polarized_covector(std::span<const Interval> vs);

/// Same contraction for complex slots (the result is then not Hermitian in
/// general).
CMatrix polarized_covector_complex(std::span<const CMatrix> vs);

/// Real spectrum (ascending) of a weakly Hermitian matrix.
RVector hermitian_eigenvalues(const Interval& v);

CausalClass causal_classify(const Interval& v, const Tolerance& tol = {});

CanonicalDecomposition canonical_decompose(const Interval& v,
                                           const Tolerance& tol = {});

/// |Delta(x - y)|^(1/r). Throws NotTimelike unless x - y has signature
/// (r,0) or (0,r).
double proper_time(const Event& x, const Event& y, const Tolerance& tol = {});

/// Proper time of a single interval (as seen from the origin).
double proper_time(const Interval& v, const Tolerance& tol = {});

struct MinkowskiVector {
  double t = 0, x = 0, y = 0, z = 0;
};

/// (t,x,y,z) -> (1/sqrt2) [[t+z, x+iy], [x-iy, t-z]].
Event minkowski_to_event(const MinkowskiVector& v);

/// Inverse of minkowski_to_event; throws WrongDimension unless r = 2.
MinkowskiVector event_to_minkowski(const Event& e);

/// Closed future cone minus the origin: positive semi-definite and nonzero.
/// With include_origin the zero interval is accepted as well.
bool is_future_causal(const Interval& v, const Tolerance& tol = {},
                      bool include_origin = false);

}  // namespace hyperchron
