#pragma once

// Symmetry breaking for r = 2n: the hyperspin index splits into a
// two-component spinor index and an internal index, A = (A, i).
//
// Layout is spinor-major: row a = A*n + i, column a' = A'*n + j, so the n x n
// block at block position (A, A') holds x^{AA' i}_j and an embedded
// Minkowski point is the Kronecker product x (x) I_n.

#include "hyperchron/symmetry.hpp"

#include <array>
#include <functional>
#include <optional>

namespace hyperchron {

class BrokenEvent {
 public:
  BrokenEvent() = default;
  /// Throws WrongDimension unless the event is 2n x 2n.
  BrokenEvent(const Event& e, int n);

  int internal_dim() const { return n_; }
  const Event& event() const { return e_; }
  const CMatrix& matrix() const { return e_.matrix(); }

  /// Internal n x n block B^{AA'} for spinor indices A, A' in {0, 1}.
  CMatrix block(int a, int a_prime) const;

 private:
  Event e_;
  int n_ = 0;
};

/// x (x) I_n.
BrokenEvent embed_minkowski(const Event& x, int n);

/// Returns x with x[A][A'] = tr(B^{AA'}) / n when |X - x (x) I_n|_max <= tol.
std::optional<Event> is_embedded(const BrokenEvent& x, double tol);

/// (lambda (x) I_n, beta (x) I_n). Throws NotUnimodular when det(lambda2) != 1.
PoincareElement lift_poincare(const CMatrix& lambda2, const Event& beta2, int n);
PoincareElement lift_poincare(const PoincareElement& g2, int n);

/// Preferred element t_{AA'}: invertible and weakly Hermitian.
class HermitianCorrelation {
 public:
  /// Throws SingularCorrelation when t is (numerically) singular.
  explicit HermitianCorrelation(const Event& t);

  const CMatrix& matrix() const { return t_.matrix(); }
  const CMatrix& inverse() const { return inv_; }

 private:
  Event t_;
  CMatrix inv_;
};

/// t^{-1} mu^dagger t; ordinary conjugate transpose for t = I.
CMatrix strong_hermitian_conjugate(const CMatrix& mu,
                                   const HermitianCorrelation& t);

bool is_strong_hermitian(const CMatrix& mu, const HermitianCorrelation& t,
                         const Tolerance& tol = {});

struct Hypertwistor {
  CVector omega;
  CVector pi;
};

/// omega . conj(pi) + pi . conj(omega) = 2 Re <pi, omega>.
double twistor_pseudo_norm(const Hypertwistor& z);

/// Hermitian form H on C^{2r} with Z^dagger H Z = twistor_pseudo_norm(Z) for
/// Z = (omega, pi): H = [[0, I], [I, 0]]. Its signature is (r, r).
CMatrix twistor_form(int r);

/// Infinitesimal U(r, r) generator H A for anti-Hermitian A (2r x 2r); these
/// satisfy X^dagger H + H X = 0.
CMatrix twistor_u_generator(const CMatrix& anti_hermitian);

struct SegreFactors {
  CVector twistor;   // unit norm, first nonzero component real positive
  CVector internal;  // Z = twistor * internal^T
};

/// Rank-one factorization Z^{alpha i} = Z^alpha psi^i when sigma_2 <= tol *
/// sigma_1, otherwise empty. Throws ZeroInput for Z = 0.
std::optional<SegreFactors> segre_factor(const CMatrix& z, double tol = 1e-6);

using ScalarField = std::function<Complex(const BrokenEvent&)>;

/// Zeroth and first-order terms of a scalar field around embed(x):
///   phi(X) ~ phi0 + sum_{AA'} tr(phi1[A][A'] (B^{AA'} - x^{AA'} I_n)).
struct FieldExpansion {
  Complex phi0;
  // phi1[A][A'] is n x n; entry (i, j) pairs with B^{AA'}(j, i).
  std::array<std::array<CMatrix, 2>, 2> phi1;

  /// Evaluate the first-order term on a displacement of the broken event.
  Complex first_order(const BrokenEvent& displacement) const;
};

/// Central differences of step h along the Hermitian basis of the 4n^2
/// real directions. h <= 0 selects 1e-5 (1 + |x|_max).
FieldExpansion field_expand(const ScalarField& phi, const Event& x, int n,
                            double h = 0.0);

}  // namespace hyperchron
