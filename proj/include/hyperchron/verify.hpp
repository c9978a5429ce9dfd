#pragma once

// Seeded Monte Carlo verification suites. Each trial draws from its own
// stream make_rng(seed, trial), so a report depends only on its parameters,
// never on the worker count.
//
//   suite       tolerance  per-trial violation
//   invariance  1e-8       |Delta(gx - gy) - Delta(x - y)| / |Delta(x - y)|,
//                          or 1 if the causal label changed
//   killing     1e-7       (max - min) / scale of every basis generator's
//                          conserved quantity at 11 points of a geodesic
//   cone        0          1 if a sum of two FutureTimelike intervals is not
//                          FutureTimelike
//   projection  1e-9       max of |project(embed x) - x|, negative image
//                          eigenvalues, and relative equivariance error
//   mechanics   1e-9       relative change of the spin covector under an
//                          origin shift and of the mass under hyper-Lorentz
//   dimension   0          |#generators - (3r^2 - 2)| + |rank - #generators|

#include "hyperchron/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <string>
#include <utility>
#include <vector>

namespace hyperchron {

struct SuiteOptions {
  std::string suite;
  int r = 2;
  int n = 2;
  long trials = 1000;
  std::uint64_t seed = 0;
  int threads = 1;
  // Candidate density matrix for the projection suite; random when empty.
  std::optional<CandidateMap> rho;
};

struct SuiteReport {
  std::string suite;
  int r = 0;  // 0 when the suite is parametrized by n
  int n = 0;
  long trials = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  double max_violation = 0.0;
  bool pass = false;
  double wall_time = 0.0;
  std::vector<std::pair<std::string, double>> metrics;
  std::optional<Counterexample> counterexample;
};

double suite_tolerance(const std::string& suite);
const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown suite or out-of-range parameters.
SuiteReport run_suite(const SuiteOptions& opts);

SuiteReport run_invariance_suite(int r, long trials, std::uint64_t seed,
                                 int threads = 1);
SuiteReport run_killing_suite(int r, long trials, std::uint64_t seed,
                              int threads = 1);
SuiteReport run_cone_suite(int r, long trials, std::uint64_t seed,
                           int threads = 1);
SuiteReport run_projection_suite(int n, long trials, std::uint64_t seed,
                                 const std::optional<CandidateMap>& rho,
                                 int threads = 1);
SuiteReport run_mechanics_suite(int r, long trials, std::uint64_t seed,
                                int threads = 1);
SuiteReport run_dimension_suite(int r, std::uint64_t seed);

/// Report JSON in fixed key order; wall_time only when include_timing.
json::Json report_to_json(const SuiteReport& rep, bool include_timing = false);

/// Evaluate fn(trial) for trial in [0, trials) on up to `threads` workers;
/// results are indexed by trial. The first exception thrown by any worker is
/// rethrown after all workers have joined.
template <typename Fn>
auto run_trials(long trials, int threads, Fn&& fn)
    -> std::vector<decltype(fn(0L))> {
  using T = decltype(fn(0L));
  std::vector<T> out(static_cast<size_t>(std::max(trials, 0L)));
  const long workers = std::clamp<long>(threads, 1, std::max(trials, 1L));
  std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
  auto work = [&](long w) {
    try {
      for (long k = w; k < trials; k += workers) out[static_cast<size_t>(k)] = fn(k);
    } catch (...) {
      errors[static_cast<size_t>(w)] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (long w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace hyperchron
