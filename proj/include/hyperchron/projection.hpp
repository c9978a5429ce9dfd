#pragma once

// Density-matrix projection from the broken quantum space-time (r = 2n) to
// Minkowski space, x^{AA'} = tr(rho B^{AA'}), with checks for the three
// properties that characterize it: linearity, Poincare equivariance and
// preservation of the future cone. Hermitian unit-trace candidates that are
// not positive are refuted by an explicit causality violation.

#include "hyperchron/breaking.hpp"

#include <cstdint>
#include <optional>

namespace hyperchron {

/// Hermitian, unit-trace n x n matrix; positivity not required.
class CandidateMap {
 public:
  /// Throws InvalidCandidate unless Hermitian with unit trace.
  explicit CandidateMap(const CMatrix& rho, const Tolerance& tol = {});

  int dim() const { return static_cast<int>(rho_.rows()); }
  const CMatrix& matrix() const { return rho_; }
  double min_eigenvalue() const;

 private:
  CMatrix rho_;
};

/// Positive semi-definite, Hermitian, unit-trace n x n matrix.
class DensityMatrix {
 public:
  /// Throws InvalidDensityMatrix unless Hermitian, unit trace and with every
  /// eigenvalue >= -tol.
  explicit DensityMatrix(const CMatrix& rho, const Tolerance& tol = {});

  int dim() const { return static_cast<int>(rho_.rows()); }
  const CMatrix& matrix() const { return rho_; }
  CandidateMap candidate() const { return CandidateMap(rho_); }

 private:
  CMatrix rho_;
};

/// Y[A][A'] = tr(rho B^{AA'}). Throws DimensionMismatch.
Event project(const CandidateMap& rho, const BrokenEvent& x);
Event project(const DensityMatrix& rho, const BrokenEvent& x);

/// |project(rho, lift(g2) X) - g2 project(rho, X)|_max.
double equivariance_error(const CandidateMap& rho, const PoincareElement& g2,
                          const BrokenEvent& x);

/// equivariance_error <= tol * max(1, |g2 project(rho, X)|_max).
bool check_equivariance(const CandidateMap& rho, const PoincareElement& g2,
                        const BrokenEvent& x, double tol = 1e-9);

struct CausalityReport {
  int n = 0;
  long trials = 0;
  std::uint64_t seed = 0;
  double min_eigenvalue = 0.0;   // smallest image eigenvalue observed
  double max_violation = 0.0;    // max(0, -min_eigenvalue)
  long failures = 0;             // images with an eigenvalue below -tol
  bool pass = false;
};

/// Projects `trials` future-causal elements of the 4n^2-dimensional cone
/// (alternating unit rank-one alpha alpha^dagger and unit-trace G G^dagger
/// mixtures) and checks that every image is positive semi-definite.
CausalityReport check_causality_preservation(const DensityMatrix& rho,
                                             long trials, std::uint64_t seed,
                                             double tol = 1e-12);

struct Counterexample {
  BrokenEvent x;          // (alpha alpha^dagger) (x) (v v^dagger)
  Event image;            // (v^dagger rho v) alpha alpha^dagger
  CausalClass input_class;
  CausalClass image_class;
  double eigenvalue = 0.0;  // v^dagger rho v < 0
};

/// Empty when the candidate has no eigenvalue below -tol. Otherwise a
/// future-null input whose image is past-pointing.
std::optional<Counterexample> falsify_non_psd(const CandidateMap& candidate,
                                              double tol = 1e-12);

}  // namespace hyperchron
