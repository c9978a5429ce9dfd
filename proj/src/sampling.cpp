#include "hyperchron/sampling.hpp"

#include <cmath>

namespace hyperchron {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

CMatrix ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  CMatrix g(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

CVector gaussian_vector(int n, Rng& rng) { return ginibre(n, 1, rng).col(0); }

Event random_hermitian(int r, Rng& rng) {
  const CMatrix g = ginibre(r, r, rng);
  return Event(hermitian_part(g));
}

Event random_positive_definite(int r, Rng& rng) {
  const CMatrix g = ginibre(r, r, rng);
  return Event(hermitian_part(g * g.adjoint() / static_cast<double>(r)));
}

CMatrix random_traceless(int r, Rng& rng) {
  CMatrix g = ginibre(r, r, rng);
  const Complex tr = g.trace() / static_cast<double>(r);
  g.diagonal().array() -= tr;
  return g;
}

CMatrix random_density(int n, Rng& rng, int k) {
  const CMatrix g = ginibre(n, k > 0 ? k : n, rng);
  CMatrix rho = hermitian_part(g * g.adjoint());
  return rho / rho.trace().real();
}

CMatrix random_non_psd_candidate(int n, Rng& rng, double margin) {
  // Random spectrum with a forced negative entry, rotated by a random unitary.
  if (n < 2)
    throw Error(ErrorCode::InvalidArgument,
                "a unit-trace 1x1 matrix is always positive");
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (;;) {
    RVector eigs(n);
    for (int k = 0; k < n; ++k) eigs(k) = uni(rng);
    eigs(0) = -(margin + uni(rng));
    const double rest = eigs.tail(n - 1).sum();
    // Rescale the nonnegative part so the trace is one.
    if (rest < 1e-6) continue;
    eigs.tail(n - 1) *= (1.0 - eigs(0)) / rest;
    const CMatrix q = ginibre(n, n, rng).householderQr().householderQ();
    CMatrix c = q * eigs.cast<Complex>().asDiagonal() * q.adjoint();
    c = hermitian_part(c);
    c /= c.trace().real();
    return c;
  }
}

}  // namespace hyperchron
