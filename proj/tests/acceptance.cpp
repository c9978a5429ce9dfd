// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Expected values come from the oracles in oracles.hpp or
// from closed-form identities, never from the code under test.

#include "oracles.hpp"
#include "support.hpp"

#include "hyperchron/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace hyperchron;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double det_oracle(const CMatrix& m) { return oracle::cofactor_det(m).real(); }

double tau_oracle(const CMatrix& sep) {
  const int r = static_cast<int>(sep.rows());
  return std::pow(std::abs(oracle::factorial(r) * det_oracle(sep)), 1.0 / r);
}

// 1. (t, x, y, z) -> event -> (t, x, y, z), and 2 det = t^2 - x^2 - y^2 - z^2.
Outcome minkowski_round_trip() {
  Rng rng = make_rng(1001);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  double round = 0.0;
  double interval = 0.0;
  double layout = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const std::array<double, 4> v{u(rng), u(rng), u(rng), u(rng)};
    const Event e = minkowski_to_event({v[0], v[1], v[2], v[3]});
    layout = std::max(layout, max_norm(e.matrix() - oracle::minkowski_matrix(v)));
    const MinkowskiVector b = event_to_minkowski(e);
    round = std::max({round, std::abs(b.t - v[0]), std::abs(b.x - v[1]),
                      std::abs(b.y - v[2]), std::abs(b.z - v[3])});
    const double want = v[0] * v[0] - v[1] * v[1] - v[2] * v[2] - v[3] * v[3];
    interval = std::max(interval, std::abs(2.0 * det_oracle(e.matrix()) - want));
    interval = std::max(interval, std::abs(chronometric_form(e) - want));
  }
  return {round <= 1e-12 && interval <= 1e-10 && layout <= 1e-14,
          fmt("round-trip err %.3g, interval err %.3g, matrix err %.3g", round, interval,
              layout)};
}

// 2. r! det against the polarization formula on equal slots.
Outcome chronometric_oracle() {
  double worst = 0.0;
  for (int r = 2; r <= 4; ++r) {
    Rng rng = make_rng(1002, static_cast<std::uint64_t>(r));
    for (int k = 0; k < 300; ++k) {
      const Event v = random_hermitian(r, rng);
      const std::vector<Interval> slots(static_cast<size_t>(r), v);
      const double want = oracle::factorial(r) * det_oracle(v.matrix());
      worst = std::max(worst, std::abs(mixed_chronometric(slots) - want) / std::abs(want));
    }
  }
  return {worst <= 1e-9, fmt("max relative err %.3g over 900 matrices", worst)};
}

// 3. Canonical forms from the two-spinor and r = 3 case lists.
Outcome taxonomy() {
  struct Case {
    int r;
    std::vector<int> signs;
    const char* label;
  };
  const std::vector<Case> cases{
      {2, {}, "Zero"},
      {2, {1}, "FutureNull"},
      {2, {-1}, "PastNull"},
      {2, {1, 1}, "FutureTimelike"},
      {2, {1, -1}, "Spacelike"},
      {2, {-1, -1}, "PastTimelike"},
      {3, {}, "Zero"},
      {3, {1}, "FutureNull"},
      {3, {-1}, "PastNull"},
      {3, {1, 1}, "DegenerateFutureTimelike"},
      {3, {1, -1}, "DegenerateSpacelike"},
      {3, {-1, -1}, "DegeneratePastTimelike"},
      {3, {1, 1, 1}, "FutureTimelike"},
      {3, {1, 1, -1}, "FutureSemiSpacelike"},
      {3, {1, -1, -1}, "PastSemiSpacelike"},
      {3, {-1, -1, -1}, "PastTimelike"},
  };
  Rng rng = make_rng(1003);
  int good = 0;
  std::string first_bad;
  for (const auto& c : cases) {
    bool ok = true;
    for (int k = 0; k < 20; ++k) {
      const Event v = testing::signed_sum(c.r, c.signs, rng);
      if (to_string(causal_classify(v).label) != c.label) ok = false;
    }
    if (ok)
      ++good;
    else if (first_bad.empty())
      first_bad = c.label;
  }
  std::string detail = fmt("%.0f/%.0f canonical cases", good, static_cast<double>(cases.size()));
  if (!first_bad.empty()) detail += ", first mismatch " + first_bad;
  return {good == static_cast<int>(cases.size()), detail};
}

// 4. Delta and label under x -> lambda x lambda^dagger + beta.
Outcome poincare_invariance() {
  double worst = 0.0;
  int label_changes = 0;
  for (int r = 2; r <= 4; ++r) {
    Rng rng = make_rng(1004, static_cast<std::uint64_t>(r));
    for (int k = 0; k < 1000; ++k) {
      const PoincareElement g{random_sl_sample(r, rng).lambda, random_hermitian(r, rng)};
      const Event x = random_hermitian(r, rng);
      const Event y = random_hermitian(r, rng);
      const Interval before = x - y;
      const Interval after = apply_poincare(g, x) - apply_poincare(g, y);
      const double d0 = det_oracle(before.matrix());
      const double d1 = chronometric_form(after) / oracle::factorial(r);
      worst = std::max(worst, std::abs(d1 - d0) / std::abs(d0));
      if (causal_classify(before).label != causal_classify(after).label) ++label_changes;
    }
  }
  return {worst <= 1e-8 && label_changes == 0,
          fmt("max relative Delta drift %.3g, label changes %.0f", worst, label_changes)};
}

// 5. Endpoint, quadrature and reparametrization of geodesics.
Outcome geodesics() {
  double endpoint = 0.0;
  double quad = 0.0;
  double reparam = 0.0;
  for (int r = 2; r <= 4; ++r) {
    Rng rng = make_rng(1005, static_cast<std::uint64_t>(r));
    for (int k = 0; k < 10; ++k) {
      const Event z = random_hermitian(r, rng);
      const Event y = z + random_positive_definite(r, rng);
      const double tau = tau_oracle((y - z).matrix());
      const Curve geo = geodesic_between(y, z);
      endpoint = std::max(endpoint, max_norm(geo(tau).matrix() - y.matrix()));
      endpoint = std::max(endpoint, std::abs(geo.b - tau));
      const double length = proper_time_functional(geo, 1000);
      quad = std::max(quad, std::abs(length - tau) / tau);
      // u -> geo(u^3 - 1) on [1, (1 + tau)^(1/3)] traces the same path.
      Curve cubic;
      cubic.a = 1.0;
      cubic.b = std::cbrt(1.0 + geo.b);
      cubic.eval = [geo](double u) { return geo(u * u * u - 1.0); };
      reparam = std::max(reparam, std::abs(proper_time_functional(cubic, 1000) - length) / length);
    }
  }
  return {endpoint <= 1e-9 && quad <= 1e-6 && reparam <= 1e-5,
          fmt("endpoint err %.3g, quadrature err %.3g, reparametrization err %.3g",
              endpoint, quad, reparam)};
}

// 6. Conserved quantities of every basis generator and the generator rank.
Outcome killing() {
  double worst = 0.0;
  bool ranks_ok = true;
  std::string ranks;
  for (int r = 2; r <= 3; ++r) {
    const SuiteReport rep = run_killing_suite(r, 50, 1006);
    worst = std::max(worst, rep.max_violation);
    const auto basis = poincare_generator_basis(r);
    Rng rng = make_rng(1016, static_cast<std::uint64_t>(r));
    std::vector<Event> pts;
    for (int k = 0; k < 4; ++k) pts.push_back(random_hermitian(r, rng));
    const int rank = generator_field_rank(basis, pts);
    // Independent count: real rank of the stacked field coordinates.
    RMatrix a(static_cast<Eigen::Index>(pts.size()) * 2 * r * r,
              static_cast<Eigen::Index>(basis.size()));
    for (size_t g = 0; g < basis.size(); ++g) {
      Eigen::Index row = 0;
      for (const auto& x : pts) {
        const CMatrix f = basis[g].m() * x.matrix() + x.matrix() * basis[g].m().adjoint() +
                          basis[g].b().matrix();
        for (Eigen::Index i = 0; i < r; ++i)
          for (Eigen::Index j = 0; j < r; ++j) {
            a(row++, static_cast<Eigen::Index>(g)) = f(i, j).real();
            a(row++, static_cast<Eigen::Index>(g)) = f(i, j).imag();
          }
      }
    }
    Eigen::FullPivLU<RMatrix> lu(a);
    lu.setThreshold(1e-10);
    const int want = r == 2 ? 10 : 25;
    ranks_ok = ranks_ok && rank == want && lu.rank() == want &&
               static_cast<int>(basis.size()) == want;
    ranks += (r == 2 ? "" : ", ") + std::string("r=") + std::to_string(r) + " rank " +
             std::to_string(rank);
  }
  return {worst <= 1e-7 && ranks_ok, fmt("max relative drift %.3g; ", worst) + ranks};
}

// 7. Sums of future-timelike intervals.
Outcome cone_convexity() {
  int failures = 0;
  int rejected = 0;
  for (int k = 0; k < 1000; ++k) {
    Rng rng = make_rng(1007, static_cast<std::uint64_t>(k));
    const int r = 2 + k % 3;
    const CMatrix ga = ginibre(r, r, rng);
    const CMatrix gb = ginibre(r, r, rng);
    const Event a(hermitian_part(ga * ga.adjoint()));
    const Event b(hermitian_part(gb * gb.adjoint()));
    if (causal_classify(a).label != CausalLabel::FutureTimelike ||
        causal_classify(b).label != CausalLabel::FutureTimelike) {
      ++rejected;
      continue;
    }
    if (causal_classify(a + b).label != CausalLabel::FutureTimelike) ++failures;
  }
  return {failures == 0 && rejected == 0,
          fmt("%.0f failures in 1000 pairs (%.0f draws not timelike)", failures, rejected)};
}

// 8. Spin under origin shifts; r = 2 mass and spin against Minkowski components.
Outcome mechanics() {
  double shift = 0.0;
  for (int r = 2; r <= 3; ++r) {
    Rng rng = make_rng(1008, static_cast<std::uint64_t>(r));
    for (int k = 0; k < 1000; ++k) {
      const ElementarySystem sys{Momentum(random_positive_definite(r, rng)),
                                 AngularMomentum(random_traceless(r, rng))};
      const Event beta = random_hermitian(r, rng);
      const CMatrix s0 = spin_covector(sys).matrix();
      const CMatrix s1 = spin_covector(shift_origin(sys, beta)).matrix();
      const CMatrix s_oracle = oracle::spin_index_sum(
          sys.p.matrix(), sys.l.matrix(), tau_oracle(sys.p.matrix()));
      shift = std::max(shift, max_norm(s1 - s0) / max_norm(s0));
      shift = std::max(shift, max_norm(s0 - s_oracle) / max_norm(s_oracle));
    }
  }
  double mass_err = 0.0;
  double spin_err = 0.0;
  Rng rng = make_rng(1018);
  for (int k = 0; k < 1000; ++k) {
    const ElementarySystem sys{Momentum(random_positive_definite(2, rng)),
                               AngularMomentum(random_traceless(2, rng))};
    const auto mink = oracle::minkowski_mechanics(sys.p.matrix(), sys.l.matrix());
    mass_err = std::max(mass_err, std::abs(mass(sys.p) - mink.mass) / mink.mass);
    spin_err = std::max(spin_err, std::abs(spin_magnitude(sys) - mink.spin) /
                                      std::max(1.0, mink.spin));
  }
  return {shift <= 1e-9 && mass_err <= 1e-9 && spin_err <= 1e-9,
          fmt("shift err %.3g, mass err %.3g, spin err %.3g", shift, mass_err, spin_err)};
}

// 9. Projection: left inverse of the embedding, causality, equivariance.
Outcome projection() {
  double identity = 0.0;
  double min_image = std::numeric_limits<double>::infinity();
  double equivariance = 0.0;
  for (int n = 1; n <= 3; ++n) {
    Rng rng = make_rng(1009, static_cast<std::uint64_t>(n));
    for (int k = 0; k < 100; ++k) {
      CMatrix h = random_hermitian(n, rng).matrix();
      h += CMatrix::Identity(n, n) * ((1.0 - h.trace().real()) / n);
      const CandidateMap rho(h);
      const Event x = random_hermitian(2, rng);
      const BrokenEvent big = embed_minkowski(x, n);
      identity = std::max(identity, max_norm(project(rho, big).matrix() - x.matrix()));
      identity = std::max(
          identity, max_norm(oracle::contract_internal(h, oracle::kron(x.matrix(),
                                                                     CMatrix::Identity(n, n))) -
                             x.matrix()));
    }
    const DensityMatrix rho(random_density(n, rng));
    for (int k = 0; k < 1000; ++k) {
      CMatrix cone;
      if (k % 2 == 0) {
        const CVector alpha = gaussian_vector(2 * n, rng);
        cone = alpha * alpha.adjoint();
      } else {
        const CMatrix g = ginibre(2 * n, 2 * n, rng);
        cone = g * g.adjoint();
      }
      const Event image = project(rho, BrokenEvent(Event(hermitian_part(cone)), n));
      const CMatrix want = oracle::contract_internal(rho.matrix(), cone);
      if (max_norm(image.matrix() - want) > 1e-12 * std::max(1.0, max_norm(want)))
        min_image = -1.0;
      Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(want), Eigen::EigenvaluesOnly);
      min_image = std::min(min_image, es.eigenvalues()(0) / std::max(1.0, max_norm(want)));
    }
    const CandidateMap cand = rho.candidate();
    for (int k = 0; k < 100; ++k) {
      const PoincareElement g{random_sl_sample(2, rng).lambda, random_hermitian(2, rng)};
      const BrokenEvent x(random_hermitian(2 * n, rng), n);
      const CMatrix lifted = oracle::kron(g.lambda.matrix(), CMatrix::Identity(n, n));
      const CMatrix moved = lifted * x.matrix() * lifted.adjoint() +
                            oracle::kron(g.beta.matrix(), CMatrix::Identity(n, n));
      const CMatrix lhs = oracle::contract_internal(rho.matrix(), moved);
      const CMatrix rhs = apply_poincare(g, project(cand, x)).matrix();
      equivariance = std::max(equivariance, max_norm(lhs - rhs) / std::max(1.0, max_norm(rhs)));
      equivariance = std::max(equivariance,
                              equivariance_error(cand, g, x) / std::max(1.0, max_norm(rhs)));
    }
  }
  return {identity <= 1e-12 && min_image >= -1e-12 && equivariance <= 1e-9,
          fmt("identity err %.3g, min image eigenvalue %.3g, equivariance err %.3g", identity,
              min_image, equivariance)};
}

// 10. Counterexamples for non-positive candidates, checked independently.
Outcome falsification() {
  int verified = 0;
  for (int k = 0; k < 100; ++k) {
    Rng rng = make_rng(1010, static_cast<std::uint64_t>(k));
    const int n = 2 + k % 3;
    const CandidateMap cand(random_non_psd_candidate(n, rng));
    const auto cx = falsify_non_psd(cand);
    if (!cx) continue;
    const CMatrix x = cx->x.matrix();
    Eigen::SelfAdjointEigenSolver<CMatrix> in(x, Eigen::EigenvaluesOnly);
    const RVector ev = in.eigenvalues();
    const bool input_null = ev(ev.size() - 1) > 0.5 && std::abs(ev(0)) < 1e-12 &&
                            (ev.size() < 2 || std::abs(ev(ev.size() - 2)) < 1e-12);
    const CMatrix image = oracle::contract_internal(cand.matrix(), x);
    Eigen::SelfAdjointEigenSolver<CMatrix> out(hermitian_part(image), Eigen::EigenvaluesOnly);
    const bool image_past = out.eigenvalues()(0) < -1e-9 && out.eigenvalues()(1) <= 1e-12;
    const CausalLabel in_label = causal_classify(Event(hermitian_part(x))).label;
    const CausalLabel out_label = causal_classify(Event(hermitian_part(image))).label;
    const bool labels = in_label == CausalLabel::FutureNull &&
                        (out_label == CausalLabel::PastNull ||
                         out_label == CausalLabel::PastTimelike);
    if (input_null && image_past && labels) ++verified;
  }
  return {verified == 100, fmt("%.0f/100 counterexamples verified", verified)};
}

// 11. proper_time(embed x) / proper_time(x) = ((2n)! / 2^n)^(1/2n).
Outcome embedding_constant() {
  double worst = 0.0;
  Rng rng = make_rng(1011);
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k < 25; ++k) {
      const Event x = random_positive_definite(2, rng) * (k % 2 == 0 ? 1.0 : -1.0);
      const double ratio = proper_time(embed_minkowski(x, n).event()) / proper_time(x);
      const double want =
          std::pow(oracle::factorial(2 * n) / std::pow(2.0, n), 1.0 / (2 * n));
      worst = std::max(worst, std::abs(ratio - want) / want);
    }
  return {worst <= 1e-9, fmt("max relative err %.3g for n = 1..4", worst)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"Minkowski correspondence round trip", minkowski_round_trip},
      {"chronometric form vs polarization", chronometric_oracle},
      {"causal taxonomy of canonical forms", taxonomy},
      {"hyper-Poincare invariance", poincare_invariance},
      {"geodesics and proper time", geodesics},
      {"Killing conservation and generator rank", killing},
      {"future cone convexity", cone_convexity},
      {"spin and mass", mechanics},
      {"density-matrix projection", projection},
      {"falsification of non-positive candidates", falsification},
      {"embedding proper-time constant", embedding_constant},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", index, name,
                o.detail.c_str(), secs);
    if (!o.pass) ++failed;
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
