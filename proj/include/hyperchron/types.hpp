#pragma once

// Core value types shared by every hyperchron module: complex matrices,
// numerical tolerances, the error type, and the weakly Hermitian Event.

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperchron {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

enum class ErrorCode {
  NonHermitianInput,
  WrongArity,
  WrongDimension,
  DimensionMismatch,
  NotTimelike,
  NotTimelikeTangent,
  SingularSample,
  NotUnimodular,
  NonTracelessGenerator,
  TachyonicMomentum,
  MasslessSystem,
  SingularCorrelation,
  ZeroInput,
  InvalidDensityMatrix,
  InvalidCandidate,
  InvalidArgument,
  Parse,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Error(ErrorCode code, const std::string& what, double parameter)
      : std::runtime_error(what), code_(code), parameter_(parameter) {}

  ErrorCode code() const { return code_; }

  // The curve parameter at which a NotTimelikeTangent error was detected.
  std::optional<double> parameter() const { return parameter_; }

 private:
  ErrorCode code_;
  std::optional<double> parameter_;
};

/// Floating-point slack used wherever an exact identity is tested numerically.
/// Thresholds have the form abs_eps + rel_eps * scale, where scale is the
/// largest absolute entry (or eigenvalue) of the matrix under test.
struct Tolerance {
  double abs_eps = 1e-12;
  double rel_eps = 1e-9;

  double threshold(double scale) const { return abs_eps + rel_eps * scale; }
};

/// Largest absolute entry.
double max_norm(const CMatrix& m);

double factorial(int k);

/// Point (or separation) of the quantum space-time: an r x r complex matrix
/// equal to its conjugate transpose. Stored as the exact Hermitian part of the
/// validated input, so downstream spectral routines see a Hermitian matrix.
class Event {
 public:
  Event() = default;

  /// Throws NonHermitianInput when `m` is not square or not weakly Hermitian.
  explicit Event(const CMatrix& m, const Tolerance& tol = {});

  static Event zero(int r);
  static Event identity(int r);
  static Event diagonal(const RVector& d);

  int dim() const { return static_cast<int>(m_.rows()); }
  const CMatrix& matrix() const { return m_; }
  Complex operator()(int a, int a_prime) const { return m_(a, a_prime); }

  Event operator+(const Event& o) const;
  Event operator-(const Event& o) const;
  Event operator-() const;
  Event operator*(double s) const;

 private:
  struct Unchecked {};
  Event(const CMatrix& m, Unchecked) : m_(m) {}
  CMatrix m_;
};

inline Event operator*(double s, const Event& e) { return e * s; }

/// A separation between two events; origin independent.
using Interval = Event;

/// Hermitian part (M + M^dagger) / 2.
CMatrix hermitian_part(const CMatrix& m);

/// Real basis of the r x r Hermitian matrices, in the fixed order
/// E_kk (k = 0..r-1), then for each j < k: E_jk + E_kj, i (E_jk - E_kj).
std::vector<CMatrix> hermitian_basis(int r);

/// Real coordinates of a Hermitian matrix in hermitian_basis(r).
RVector hermitian_coordinates(const CMatrix& h);

}  // namespace hyperchron
