#pragma once

#include "hyperchron/chronometry.hpp"
#include "hyperchron/sampling.hpp"

#include <cmath>
#include <vector>

namespace testing {

using namespace hyperchron;

inline CMatrix outer(const CVector& a) { return a * a.adjoint(); }

// sum_k signs[k] * a_k a_k^dagger with independent Gaussian hyperspinors.
inline Event signed_sum(int r, const std::vector<int>& signs, Rng& rng) {
  CMatrix m = CMatrix::Zero(r, r);
  for (int s : signs) m += static_cast<double>(s) * outer(gaussian_vector(r, rng));
  return Event(hermitian_part(m));
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

inline double rel_err(Complex got, Complex want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

inline CMatrix rotation_conjugate(const CMatrix& m, const CMatrix& u) {
  return u * m * u.adjoint();
}

}  // namespace testing
