// hyperchron: command-line front end over the C interface.
//
// Exit codes: 0 success / suite passed, 1 suite failed, 2 usage or malformed
// input, 3 data validation (non-Hermitian input, non-timelike separation, ...).

#include "hyperchron/hyperchron.h"

#include "CLI11.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitSuiteFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FreeString {
  void operator()(char* s) const { hc_string_free(s); }
};
using OwnedString = std::unique_ptr<char, FreeString>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

int exit_code_for(hc_status s) {
  switch (s) {
    case HC_OK: return kExitPass;
    case HC_ERR_PARSE:
    case HC_ERR_INVALID_ARGUMENT:
    case HC_ERR_NULL_POINTER:
      return kExitUsage;
    default:
      return kExitData;
  }
}

int report(hc_status s) {
  if (s != HC_OK)
    std::cerr << "error [" << hc_status_name(s) << "]: " << hc_last_error() << "\n";
  return exit_code_for(s);
}

template <typename T>
std::optional<T> env_value(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  std::istringstream in(raw);
  T value{};
  in >> value;
  if (in.fail() || !in.eof())
    throw UsageError(std::string("cannot parse ") + name + "=\"" + raw + "\"");
  return value;
}

struct Settings {
  double tol = -1.0;  // negative: not given on the command line
  double rel_tol = -1.0;
  std::optional<std::uint64_t> seed;

  hc_tolerance tolerance() const {
    hc_tolerance t = hc_default_tolerance();
    if (tol >= 0.0) {
      t.abs_eps = tol;
    } else if (auto env = env_value<double>("HYPERCHRON_TOL")) {
      if (*env < 0.0) throw UsageError("HYPERCHRON_TOL must be non-negative");
      t.abs_eps = *env;
    }
    if (rel_tol >= 0.0) t.rel_eps = rel_tol;
    return t;
  }

  std::uint64_t resolved_seed() const {
    if (seed) return *seed;
    if (auto env = env_value<std::uint64_t>("HYPERCHRON_SEED")) return *env;
    return 0;
  }
};

void add_tolerance_flags(CLI::App* cmd, Settings& s) {
  cmd->add_option("--tol", s.tol, "absolute eigenvalue tolerance")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--rel-tol", s.rel_tol, "relative eigenvalue tolerance")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Causal structure and symmetry checks for hyperspin space-time"};
  app.set_version_flag("--version", hc_version());
  app.require_subcommand(1);

  Settings settings;

  std::string in_path;
  auto* classify = app.add_subcommand("classify", "classify an event or interval");
  classify->add_option("--in", in_path, "event JSON")->required();
  add_tolerance_flags(classify, settings);

  std::string suite;
  int r = 2;
  int n = 2;
  long trials = 1000;
  int threads = 1;
  std::string rho_path;
  std::string counterexample_path;
  bool timing = false;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "run a seeded verification suite");
  verify->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(
          {"invariance", "killing", "cone", "projection", "mechanics", "dimension"}));
  verify->add_option("--r", r, "hyperspin dimension");
  verify->add_option("--n", n, "internal dimension (projection)");
  verify->add_option("--trials", trials, "number of trials");
  auto* verify_seed = verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--rho", rho_path, "candidate density matrix JSON (projection)");
  verify->add_option("--counterexample", counterexample_path,
                     "write a falsifier counterexample here");
  verify->add_flag("--timing", timing, "include wall_time in the report");

  std::string from_path;
  std::string to_path;
  int samples = 11;
  std::string out_path;
  auto* geodesic = app.add_subcommand("geodesic", "sample the geodesic between events");
  geodesic->add_option("--from", from_path, "start event JSON")->required();
  geodesic->add_option("--to", to_path, "end event JSON")->required();
  geodesic->add_option("--samples", samples, "number of rows")->check(CLI::Range(2, 1000000));
  geodesic->add_option("--out", out_path, "CSV output file (default stdout)");
  add_tolerance_flags(geodesic, settings);

  std::string x_path;
  std::string y_path;
  auto* propertime = app.add_subcommand("propertime", "proper time between two events");
  propertime->add_option("--x", x_path, "event JSON")->required();
  propertime->add_option("--y", y_path, "event JSON")->required();
  add_tolerance_flags(propertime, settings);

  std::string event_path;
  auto* proj = app.add_subcommand("project", "project a 2n x 2n event to Minkowski space");
  proj->add_option("--rho", rho_path, "density matrix JSON")->required();
  proj->add_option("--event", event_path, "event JSON")->required();
  add_tolerance_flags(proj, settings);

  int cone_r = 2;
  long cone_trials = 1000;
  std::uint64_t cone_seed = 0;
  std::string summary_path;
  auto* cone = app.add_subcommand("sample-cone", "classify random Hermitian intervals");
  cone->add_option("--r", cone_r, "hyperspin dimension");
  cone->add_option("--trials", cone_trials, "number of samples");
  auto* cone_seed_opt = cone->add_option("--seed", cone_seed, "RNG seed");
  cone->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  cone->add_option("--out", out_path, "per-sample CSV file")->required();
  cone->add_option("--summary", summary_path, "stratum counts JSON (default stdout)");
  add_tolerance_flags(cone, settings);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*classify) {
      const hc_tolerance tol = settings.tolerance();
      char* out = nullptr;
      const hc_status s = hc_cmd_classify(read_file(in_path).c_str(), &tol, &out);
      OwnedString guard(out);
      if (s != HC_OK) return report(s);
      std::cout << out;
      return kExitPass;
    }

    if (*verify) {
      if (*verify_seed) settings.seed = seed;
      const std::string rho_text = rho_path.empty() ? "" : read_file(rho_path);
      hc_verify_options opts{};
      opts.suite = suite.c_str();
      opts.r = r;
      opts.n = n;
      opts.trials = trials;
      opts.seed = settings.resolved_seed();
      opts.threads = threads;
      opts.rho_json = rho_path.empty() ? nullptr : rho_text.c_str();
      opts.timing = timing ? 1 : 0;
      int pass = 0;
      char* out = nullptr;
      char* cx = nullptr;
      const hc_status s = hc_cmd_verify(&opts, &pass, &out, &cx);
      OwnedString guard(out);
      OwnedString cx_guard(cx);
      if (s != HC_OK) return report(s);
      std::cout << out;
      if (cx != nullptr && !counterexample_path.empty()) {
        write_output(counterexample_path, cx);
        std::cerr << "counterexample written to " << counterexample_path << "\n";
      }
      return pass != 0 ? kExitPass : kExitSuiteFail;
    }

    if (*geodesic) {
      const hc_tolerance tol = settings.tolerance();
      char* out = nullptr;
      const hc_status s = hc_cmd_geodesic(read_file(from_path).c_str(),
                                          read_file(to_path).c_str(), samples,
                                          &tol, &out);
      OwnedString guard(out);
      if (s != HC_OK) return report(s);
      write_output(out_path, out);
      return kExitPass;
    }

    if (*propertime) {
      const hc_tolerance tol = settings.tolerance();
      char* out = nullptr;
      const hc_status s = hc_cmd_propertime(read_file(x_path).c_str(),
                                            read_file(y_path).c_str(), &tol, &out);
      OwnedString guard(out);
      if (s != HC_OK) return report(s);
      std::cout << out;
      return kExitPass;
    }

    if (*proj) {
      const hc_tolerance tol = settings.tolerance();
      char* out = nullptr;
      const hc_status s = hc_cmd_project(read_file(rho_path).c_str(),
                                         read_file(event_path).c_str(), &tol, &out);
      OwnedString guard(out);
      if (s != HC_OK) return report(s);
      std::cout << out;
      return kExitPass;
    }

    if (*cone) {
      if (*cone_seed_opt) settings.seed = cone_seed;
      const hc_tolerance tol = settings.tolerance();
      char* csv = nullptr;
      char* summary = nullptr;
      const hc_status s = hc_cmd_sample_cone(cone_r, cone_trials,
                                             settings.resolved_seed(), threads,
                                             &tol, &csv, &summary);
      OwnedString guard(csv);
      OwnedString summary_guard(summary);
      if (s != HC_OK) return report(s);
      write_output(out_path, csv);
      write_output(summary_path, summary);
      return kExitPass;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
