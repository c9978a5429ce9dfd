#include "hyperchron/verify.hpp"

#include "hyperchron/sampling.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

namespace hyperchron {

namespace {

constexpr int kKillingSamples = 11;
constexpr int kRankPoints = 4;

struct TrialOutcome {
  double violation = 0.0;
  int flagged = 0;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void require_positive(const char* what, long value) {
  if (value < 1) {
    std::ostringstream os;
    os << what << " must be >= 1, got " << value;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

void require_r(int r, int min_r) {
  if (r < min_r || r > 8) {
    std::ostringstream os;
    os << "r must lie in [" << min_r << ", 8], got " << r;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

SuiteReport start_report(const std::string& suite, int r, int n, long trials,
                         std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = suite;
  rep.r = r;
  rep.n = n;
  rep.trials = trials;
  rep.seed = seed;
  rep.tolerance = suite_tolerance(suite);
  return rep;
}

void finish(SuiteReport& rep, const std::vector<TrialOutcome>& outcomes,
            const char* flag_metric, const Stopwatch& clock) {
  double worst = 0.0;
  int flagged = 0;
  for (const auto& o : outcomes) {
    worst = std::max(worst, o.violation);
    flagged += o.flagged;
  }
  rep.max_violation = worst;
  if (flag_metric != nullptr)
    rep.metrics.emplace_back(flag_metric, static_cast<double>(flagged));
  rep.pass = rep.max_violation <= rep.tolerance;
  rep.wall_time = clock.seconds();
}

// Future-timelike (positive definite) draw, re-drawn in the measure-zero case
// of a numerically degenerate sample.
Event future_timelike(int r, Rng& rng) {
  for (;;) {
    Event v = random_positive_definite(r, rng);
    if (causal_classify(v).label == CausalLabel::FutureTimelike) return v;
  }
}

}  // namespace

double suite_tolerance(const std::string& suite) {
  if (suite == "invariance") return 1e-8;
  if (suite == "killing") return 1e-7;
  if (suite == "projection") return 1e-9;
  if (suite == "mechanics") return 1e-9;
  if (suite == "cone" || suite == "dimension") return 0.0;
  throw Error(ErrorCode::InvalidArgument, "unknown suite \"" + suite + "\"");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "invariance", "killing", "cone", "projection", "mechanics", "dimension"};
  return names;
}

SuiteReport run_invariance_suite(int r, long trials, std::uint64_t seed,
                                 int threads) {
  require_r(r, 2);
  require_positive("trials", trials);
  const Stopwatch clock;
  SuiteReport rep = start_report("invariance", r, 0, trials, seed);
  const auto outcomes = run_trials(trials, threads, [r, seed](long k) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(k));
    const Event x = random_hermitian(r, rng);
    const Event y = random_hermitian(r, rng);
    const PoincareElement g{random_sl_sample(r, rng).lambda,
                            random_hermitian(r, rng)};
    const Interval before = x - y;
    const Interval after = apply_poincare(g, x) - apply_poincare(g, y);
    const double d0 = chronometric_form(before);
    const double d1 = chronometric_form(after);
    TrialOutcome o;
    o.violation = std::abs(d1 - d0) / std::abs(d0);
    if (causal_classify(before).label != causal_classify(after).label) {
      o.flagged = 1;
      o.violation = std::max(o.violation, 1.0);
    }
    return o;
  });
  finish(rep, outcomes, "label_changes", clock);
  return rep;
}

SuiteReport run_killing_suite(int r, long trials, std::uint64_t seed,
                              int threads) {
  require_r(r, 2);
  require_positive("trials", trials);
  const Stopwatch clock;
  SuiteReport rep = start_report("killing", r, 0, trials, seed);
  const auto basis = poincare_generator_basis(r);
  const auto outcomes = run_trials(trials, threads, [&](long k) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(k));
    const Event z = random_hermitian(r, rng);
    const Event y = z + future_timelike(r, rng);
    const Curve geo = geodesic_between(y, z);
    TrialOutcome o;
    for (const auto& gen : basis) {
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      double scale = 0.0;
      for (int s = 0; s < kKillingSamples; ++s) {
        const double lambda = geo.b * s / (kKillingSamples - 1);
        const double q = killing_conserved_quantity(gen, geo, lambda);
        lo = std::min(lo, q);
        hi = std::max(hi, q);
        scale = std::max(scale, killing_scale(gen, geo, lambda));
      }
      o.violation = std::max(o.violation, (hi - lo) / scale);
    }
    return o;
  });
  finish(rep, outcomes, nullptr, clock);
  rep.metrics.emplace_back("generators", static_cast<double>(basis.size()));
  return rep;
}

SuiteReport run_cone_suite(int r, long trials, std::uint64_t seed, int threads) {
  require_r(r, 1);
  require_positive("trials", trials);
  const Stopwatch clock;
  SuiteReport rep = start_report("cone", r, 0, trials, seed);
  const auto outcomes = run_trials(trials, threads, [r, seed](long k) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(k));
    const Event a = future_timelike(r, rng);
    const Event b = future_timelike(r, rng);
    TrialOutcome o;
    if (causal_classify(a + b).label != CausalLabel::FutureTimelike) {
      o.violation = 1.0;
      o.flagged = 1;
    }
    return o;
  });
  finish(rep, outcomes, "failures", clock);
  return rep;
}

SuiteReport run_projection_suite(int n, long trials, std::uint64_t seed,
                                 const std::optional<CandidateMap>& rho,
                                 int threads) {
  if (n < 1 || n > 4)
    throw Error(ErrorCode::InvalidArgument, "n must lie in [1, 4]");
  require_positive("trials", trials);
  if (rho && rho->dim() != n) {
    std::ostringstream os;
    os << "rho is " << rho->dim() << "x" << rho->dim() << " but n = " << n;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  const Stopwatch clock;
  SuiteReport rep = start_report("projection", 0, n, trials, seed);

  CMatrix rho_matrix;
  if (rho) {
    const double lmin = rho->min_eigenvalue();
    rep.metrics.emplace_back("rho_min_eigenvalue", lmin);
    if (auto cx = falsify_non_psd(*rho)) {
      rep.max_violation = -cx->eigenvalue;
      rep.pass = false;
      rep.counterexample = std::move(cx);
      rep.wall_time = clock.seconds();
      return rep;
    }
    rho_matrix = rho->matrix();
  } else {
    // Stream index -1 is reserved for the state itself.
    Rng rng = make_rng(seed, ~std::uint64_t{0});
    rho_matrix = random_density(n, rng);
  }
  const DensityMatrix density(rho_matrix);
  const CandidateMap candidate = density.candidate();

  const auto outcomes = run_trials(trials, threads, [&](long k) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(k));
    const Event x = random_hermitian(2, rng);
    const double round_trip =
        max_norm(project(candidate, embed_minkowski(x, n)).matrix() - x.matrix());
    const PoincareElement g{random_sl_sample(2, rng).lambda,
                            random_hermitian(2, rng)};
    const BrokenEvent big(random_hermitian(2 * n, rng), n);
    const double scale =
        std::max(1.0, max_norm(apply_poincare(g, project(candidate, big)).matrix()));
    const double equivariance = equivariance_error(candidate, g, big) / scale;
    TrialOutcome o;
    o.violation = std::max(round_trip, equivariance);
    return o;
  });
  const CausalityReport causal =
      check_causality_preservation(density, trials, seed, rep.tolerance);
  finish(rep, outcomes, nullptr, clock);
  rep.max_violation = std::max(rep.max_violation, causal.max_violation);
  rep.pass = rep.max_violation <= rep.tolerance && causal.pass;
  rep.metrics.emplace_back("min_image_eigenvalue", causal.min_eigenvalue);
  return rep;
}

SuiteReport run_mechanics_suite(int r, long trials, std::uint64_t seed,
                                int threads) {
  require_r(r, 2);
  require_positive("trials", trials);
  const Stopwatch clock;
  SuiteReport rep = start_report("mechanics", r, 0, trials, seed);
  const auto outcomes = run_trials(trials, threads, [r, seed](long k) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(k));
    const ElementarySystem sys{Momentum(future_timelike(r, rng)),
                               AngularMomentum(random_traceless(r, rng))};
    const Event beta = random_hermitian(r, rng);
    const LorentzElement lambda = random_sl_sample(r, rng).lambda;

    const Interval s0 = spin_covector(sys);
    const Interval s1 = spin_covector(shift_origin(sys, beta));
    const double shift_err =
        max_norm(s1.matrix() - s0.matrix()) / max_norm(s0.matrix());
    const double m0 = mass(sys.p);
    const double m1 = mass(transform_system(lambda, sys).p);
    TrialOutcome o;
    o.violation = std::max(shift_err, std::abs(m1 - m0) / m0);
    return o;
  });
  finish(rep, outcomes, nullptr, clock);
  return rep;
}

SuiteReport run_dimension_suite(int r, std::uint64_t seed) {
  require_r(r, 2);
  const Stopwatch clock;
  SuiteReport rep = start_report("dimension", r, 0, 1, seed);
  const auto basis = poincare_generator_basis(r);
  Rng rng = make_rng(seed);
  std::vector<Event> points;
  for (int k = 0; k < kRankPoints; ++k) points.push_back(random_hermitian(r, rng));
  const int rank = generator_field_rank(basis, points);
  const int expected = 3 * r * r - 2;
  const int count = static_cast<int>(basis.size());
  rep.max_violation = std::abs(count - expected) + std::abs(rank - count);
  rep.pass = rep.max_violation <= rep.tolerance;
  rep.metrics.emplace_back("expected", expected);
  rep.metrics.emplace_back("generators", count);
  rep.metrics.emplace_back("rank", rank);
  rep.wall_time = clock.seconds();
  return rep;
}

SuiteReport run_suite(const SuiteOptions& opts) {
  const std::string& s = opts.suite;
  if (s == "invariance")
    return run_invariance_suite(opts.r, opts.trials, opts.seed, opts.threads);
  if (s == "killing")
    return run_killing_suite(opts.r, opts.trials, opts.seed, opts.threads);
  if (s == "cone") return run_cone_suite(opts.r, opts.trials, opts.seed, opts.threads);
  if (s == "projection")
    return run_projection_suite(opts.n, opts.trials, opts.seed, opts.rho,
                                opts.threads);
  if (s == "mechanics")
    return run_mechanics_suite(opts.r, opts.trials, opts.seed, opts.threads);
  if (s == "dimension") return run_dimension_suite(opts.r, opts.seed);
  throw Error(ErrorCode::InvalidArgument, "unknown suite \"" + s + "\"");
}

json::Json report_to_json(const SuiteReport& rep, bool include_timing) {
  json::Json j = json::Json::object();
  j["suite"] = rep.suite;
  if (rep.r > 0) j["r"] = rep.r;
  if (rep.n > 0) j["n"] = rep.n;
  j["trials"] = rep.trials;
  j["seed"] = rep.seed;
  j["tolerance"] = rep.tolerance;
  j["max_violation"] = rep.max_violation;
  j["pass"] = rep.pass;
  json::Json metrics = json::Json::object();
  for (const auto& [name, value] : rep.metrics) {
    if (value == std::floor(value) && std::abs(value) < 1e15)
      metrics[name] = static_cast<long long>(value);
    else
      metrics[name] = value;
  }
  j["metrics"] = metrics;
  if (rep.counterexample) j["counterexample"] = json::counterexample_to(*rep.counterexample);
  if (include_timing) j["wall_time"] = rep.wall_time;
  return j;
}

}  // namespace hyperchron
