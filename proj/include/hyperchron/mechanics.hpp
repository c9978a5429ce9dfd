#pragma once

// Elementary systems of hyper-relativistic mechanics: momentum covector P,
// trace-free angular momentum l, mass, origin shifts and the spin covector.
//
// Index realization:
//   P[A][A'] = P_{AA'}                l[B][A] = l^B_A (row = upper index)
//   origin shift   l -> l + beta conj(P)
//   spin covector  S = (i/m) (l^T P - P conj(l))
//   hyper-Lorentz  P -> lambda^{-T} P conj(lambda^{-1}),  l -> lambda l lambda^{-1}

#include "hyperchron/symmetry.hpp"

#include <span>

namespace hyperchron {

/// Momentum covector. Weakly Hermitian.
class Momentum {
 public:
  Momentum() = default;
  explicit Momentum(const Event& p) : p_(p) {}

  int dim() const { return p_.dim(); }
  const Event& event() const { return p_; }
  const CMatrix& matrix() const { return p_.matrix(); }

  /// Positive energy: P in the closed future cone, P != 0.
  bool positive_energy(const Tolerance& tol = {}) const {
    return is_future_causal(p_, tol);
  }

 private:
  Event p_;
};

class AngularMomentum {
 public:
  AngularMomentum() = default;
  /// Throws NonTracelessGenerator when tr(l) is not zero within tolerance.
  explicit AngularMomentum(const CMatrix& l, const Tolerance& tol = {});

  /// Accepts any square l; used after origin shifts, which do not preserve
  /// the trace.
  static AngularMomentum unchecked(const CMatrix& l);

  int dim() const { return static_cast<int>(l_.rows()); }
  const CMatrix& matrix() const { return l_; }

 private:
  CMatrix l_;
};

struct ElementarySystem {
  Momentum p;
  AngularMomentum l;
};

/// (r! det P)^(1/r). Throws TachyonicMomentum when the chronometric form of P
/// is negative beyond tolerance.
double mass(const Momentum& p, const Tolerance& tol = {});

ElementarySystem shift_origin(const ElementarySystem& sys, const Event& beta);

/// Throws MasslessSystem when mass(P) vanishes.
Interval spin_covector(const ElementarySystem& sys, const Tolerance& tol = {});

/// |r! det S|^(1/r).
double spin_magnitude(const ElementarySystem& sys, const Tolerance& tol = {});

/// Simultaneous hyper-Lorentz action on momentum and angular momentum.
ElementarySystem transform_system(const LorentzElement& lambda,
                                  const ElementarySystem& sys);

struct SystemTotals {
  Momentum p;
  AngularMomentum l;
};

/// Entrywise sums; all systems must share r and the origin.
SystemTotals system_totals(std::span<const ElementarySystem> systems);

}  // namespace hyperchron
