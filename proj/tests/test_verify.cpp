#include "doctest.h"

#include "support.hpp"

#include "hyperchron/verify.hpp"

#include <atomic>

using namespace hyperchron;

TEST_CASE("JSON event round trip and formatting") {
  Rng rng = make_rng(71);
  const Event e = random_hermitian(3, rng);
  const std::string text = json::dump(json::event_to(e));
  const Event back = json::event_from(json::parse(text));
  CHECK(max_norm(back.matrix() - e.matrix()) == 0.0);
  CHECK(json::dump(json::event_to(back)) == text);

  const json::Json j = json::parse(R"({"r": 2, "re": [[1, 0], [0, 0.5]]})");
  const std::string out = json::dump(json::event_to(json::event_from(j)));
  CHECK(out ==
        "{\n  \"r\": 2,\n  \"re\": [\n    [1, 0],\n    [0, 0.5]\n  ],\n"
        "  \"im\": [\n    [0, 0],\n    [0, 0]\n  ]\n}\n");
  CHECK(json::format_double(0.1) == "0.10000000000000001");
  CHECK(json::format_double(std::nan("")) == "null");
}

TEST_CASE("JSON input errors") {
  auto code_of = [](const std::string& text) {
    try {
      json::event_from(json::parse(text));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code_of("{\"r\": 2, \"re\": [[1, 0], [0, 1]") == ErrorCode::Parse);
  CHECK(code_of("{\"re\": [[1]]}") == ErrorCode::Parse);
  CHECK(code_of("{\"r\": 2, \"re\": [[1, 0], [0]]}") == ErrorCode::Parse);
  CHECK(code_of("{\"r\": 3, \"re\": [[1, 0], [0, 1]]}") == ErrorCode::Parse);
  CHECK(code_of("{\"r\": 2, \"re\": [[1, \"a\"], [0, 1]]}") == ErrorCode::Parse);
  CHECK(code_of("{\"r\": 2, \"re\": [[1, 2], [0, 1]]}") == ErrorCode::NonHermitianInput);
  CHECK(code_of("{\"r\": 2, \"re\": [[1, 0], [0, 1]], \"im\": [[1, 0], [0, 0]]}") ==
        ErrorCode::NonHermitianInput);
}

TEST_CASE("JSON systems, Poincare elements and broken events") {
  Rng rng = make_rng(72);
  const ElementarySystem sys{Momentum(random_positive_definite(2, rng)),
                             AngularMomentum(random_traceless(2, rng))};
  const ElementarySystem back = json::system_from(json::parse(json::dump(json::system_to(sys))));
  CHECK(max_norm(back.p.matrix() - sys.p.matrix()) == 0.0);
  CHECK(max_norm(back.l.matrix() - sys.l.matrix()) == 0.0);

  const PoincareElement g{random_sl_sample(2, rng).lambda, random_hermitian(2, rng)};
  const PoincareElement gb = json::poincare_from(json::parse(json::dump(json::poincare_to(g))));
  CHECK(max_norm(gb.lambda.matrix() - g.lambda.matrix()) == 0.0);

  const BrokenEvent x(random_hermitian(4, rng), 2);
  const BrokenEvent xb =
      json::broken_event_from(json::parse(json::dump(json::broken_event_to(x))));
  CHECK(xb.internal_dim() == 2);
  CHECK_THROWS(json::broken_event_from(json::parse(R"({"r": 3, "re": [[1,0,0],[0,1,0],[0,0,1]]})")));
}

TEST_CASE("run_trials keeps trial order and propagates exceptions") {
  const auto out = run_trials(100, 7, [](long k) { return k * k; });
  for (long k = 0; k < 100; ++k) CHECK(out[static_cast<size_t>(k)] == k * k);
  CHECK_THROWS_AS(run_trials(10, 3,
                             [](long k) -> int {
                               if (k == 5) throw Error(ErrorCode::InvalidArgument, "boom");
                               return 0;
                             }),
                  Error);
  std::atomic<long> calls{0};
  run_trials(0, 4, [&](long) { return ++calls; });
  CHECK(calls == 0);
}

TEST_CASE("suite reports are independent of the worker count") {
  for (const std::string suite : {"invariance", "cone", "mechanics", "killing", "projection"}) {
    SuiteOptions o;
    o.suite = suite;
    o.trials = 40;
    o.seed = 3;
    o.threads = 1;
    const std::string one = json::dump(report_to_json(run_suite(o)));
    o.threads = 4;
    const std::string four = json::dump(report_to_json(run_suite(o)));
    CHECK(one == four);
    CHECK(one.find("wall_time") == std::string::npos);
  }
}

TEST_CASE("all suites pass and report their tolerance") {
  for (const auto& name : suite_names()) {
    SuiteOptions o;
    o.suite = name;
    o.r = 3;
    o.n = 2;
    o.trials = 50;
    o.seed = 8;
    const SuiteReport rep = run_suite(o);
    CHECK_MESSAGE(rep.pass, name);
    CHECK(rep.tolerance == suite_tolerance(name));
    CHECK(rep.max_violation <= rep.tolerance);
  }
  SuiteOptions bad;
  bad.suite = "nonsense";
  CHECK_THROWS(run_suite(bad));
  bad.suite = "cone";
  bad.trials = 0;
  CHECK_THROWS(run_suite(bad));
}

TEST_CASE("dimension suite counts 3r^2 - 2 generators") {
  for (int r = 2; r <= 4; ++r) {
    const SuiteReport rep = run_dimension_suite(r, 1);
    CHECK(rep.pass);
    const auto& m = rep.metrics;
    auto value = [&](const std::string& key) {
      for (const auto& [k, v] : m)
        if (k == key) return v;
      return -1.0;
    };
    CHECK(value("generators") == 3 * r * r - 2);
    CHECK(value("rank") == 3 * r * r - 2);
  }
}

TEST_CASE("projection suite fails with a counterexample for non-positive rho") {
  Rng rng = make_rng(73);
  const CandidateMap cand(random_non_psd_candidate(3, rng));
  const SuiteReport rep = run_projection_suite(3, 10, 1, cand);
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.counterexample.has_value());
  CHECK(rep.counterexample->input_class.label == CausalLabel::FutureNull);
  CHECK(rep.max_violation > 0.0);
  const std::string text = json::dump(report_to_json(rep));
  CHECK(text.find("\"counterexample_X\"") != std::string::npos);
  CHECK_THROWS(run_projection_suite(2, 10, 1, cand));
}
