#pragma once

// Seeded random generators for matrices on the quantum space-time and its
// cones. Every Monte Carlo trial draws from its own stream, derived from
// (seed, trial index), so results do not depend on how trials are scheduled.

#include "hyperchron/types.hpp"

#include <cstdint>
#include <random>

namespace hyperchron {

using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Entries are independent standard complex Gaussians, E|z|^2 = 1.
CMatrix ginibre(int rows, int cols, Rng& rng);
CVector gaussian_vector(int n, Rng& rng);

/// (G + G^dagger) / 2 for a Ginibre G.
Event random_hermitian(int r, Rng& rng);

/// G G^dagger / r for a square Ginibre G (positive definite almost surely).
Event random_positive_definite(int r, Rng& rng);

/// Ginibre matrix with its trace removed.
CMatrix random_traceless(int r, Rng& rng);

/// G G^dagger normalized to unit trace, G of size n x k (k defaults to n).
CMatrix random_density(int n, Rng& rng, int k = 0);

/// Hermitian unit-trace matrix with at least one eigenvalue <= -margin.
CMatrix random_non_psd_candidate(int n, Rng& rng, double margin = 1e-3);

}  // namespace hyperchron
