#include "hyperchron/hyperchron.h"

#include "hyperchron/json_io.hpp"
#include "hyperchron/sampling.hpp"
#include "hyperchron/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

struct hc_event {
  hyperchron::Event value;
};

struct hc_density {
  hyperchron::CandidateMap value;
};

namespace {

using namespace hyperchron;

thread_local std::string g_last_error;

hc_status status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonHermitianInput: return HC_ERR_NON_HERMITIAN;
    case ErrorCode::WrongArity: return HC_ERR_WRONG_ARITY;
    case ErrorCode::WrongDimension: return HC_ERR_WRONG_DIMENSION;
    case ErrorCode::DimensionMismatch: return HC_ERR_DIMENSION_MISMATCH;
    case ErrorCode::NotTimelike: return HC_ERR_NOT_TIMELIKE;
    case ErrorCode::NotTimelikeTangent: return HC_ERR_NOT_TIMELIKE_TANGENT;
    case ErrorCode::SingularSample: return HC_ERR_SINGULAR_SAMPLE;
    case ErrorCode::NotUnimodular: return HC_ERR_NOT_UNIMODULAR;
    case ErrorCode::NonTracelessGenerator: return HC_ERR_NON_TRACELESS_GENERATOR;
    case ErrorCode::TachyonicMomentum: return HC_ERR_TACHYONIC_MOMENTUM;
    case ErrorCode::MasslessSystem: return HC_ERR_MASSLESS_SYSTEM;
    case ErrorCode::SingularCorrelation: return HC_ERR_SINGULAR_CORRELATION;
    case ErrorCode::ZeroInput: return HC_ERR_ZERO_INPUT;
    case ErrorCode::InvalidDensityMatrix: return HC_ERR_INVALID_DENSITY_MATRIX;
    case ErrorCode::InvalidCandidate: return HC_ERR_INVALID_CANDIDATE;
    case ErrorCode::InvalidArgument: return HC_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return HC_ERR_PARSE;
  }
  return HC_ERR_INTERNAL;
}

hc_status fail(hc_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Runs fn, translating exceptions into a status and a thread-local message.
template <typename Fn>
hc_status guarded(Fn&& fn) {
  try {
    fn();
    return HC_OK;
  } catch (const Error& e) {
    return fail(status_for(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(HC_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HC_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(HC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HC_ERR_INTERNAL, "unknown exception");
  }
}

#define HC_REQUIRE(ptr)                                                   \
  do {                                                                    \
    if ((ptr) == nullptr) return fail(HC_ERR_NULL_POINTER, #ptr " is null"); \
  } while (0)

Tolerance tolerance_of(const hc_tolerance* tol) {
  if (tol == nullptr) return {};
  if (!(tol->abs_eps >= 0.0) || !(tol->rel_eps >= 0.0))
    throw Error(ErrorCode::InvalidArgument, "tolerances must be non-negative");
  return {tol->abs_eps, tol->rel_eps};
}

CMatrix matrix_from_arrays(int r, const double* re, const double* im) {
  if (r < 1) throw Error(ErrorCode::WrongDimension, "dimension must be >= 1");
  CMatrix m(r, r);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      const size_t at = static_cast<size_t>(i) * r + k;
      m(i, k) = Complex(re[at], im != nullptr ? im[at] : 0.0);
    }
  return m;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hc_event* new_event(Event e) { return new hc_event{std::move(e)}; }

json::Json parse_doc(const char* text, const char* what) {
  if (text == nullptr)
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
  return json::parse(text);
}

}  // namespace

extern "C" {

const char* hc_version(void) { return "0.1.0"; }

const char* hc_status_name(hc_status status) {
  switch (status) {
    case HC_OK: return "Ok";
    case HC_ERR_NULL_POINTER: return "NullPointer";
    case HC_ERR_OUT_OF_MEMORY: return "OutOfMemory";
    case HC_ERR_INTERNAL: return "Internal";
    default: break;
  }
  if (status > HC_OK && status < HC_ERR_NULL_POINTER)
    return to_string(static_cast<ErrorCode>(status - 1));
  return "Unknown";
}

const char* hc_last_error(void) { return g_last_error.c_str(); }

hc_tolerance hc_default_tolerance(void) {
  const Tolerance t;
  return {t.abs_eps, t.rel_eps};
}

void hc_string_free(char* s) { std::free(s); }

hc_status hc_event_create(int r, const double* re, const double* im,
                          const hc_tolerance* tol, hc_event** out) {
  HC_REQUIRE(re);
  HC_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new_event(Event(matrix_from_arrays(r, re, im), tolerance_of(tol)));
  });
}

hc_status hc_event_from_minkowski(double t, double x, double y, double z,
                                  hc_event** out) {
  HC_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new_event(minkowski_to_event({t, x, y, z})); });
}

void hc_event_free(hc_event* e) { delete e; }

int hc_event_dim(const hc_event* e) { return e == nullptr ? 0 : e->value.dim(); }

hc_status hc_event_entries(const hc_event* e, double* re, double* im) {
  HC_REQUIRE(e);
  const CMatrix& m = e->value.matrix();
  const int r = e->value.dim();
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      const size_t at = static_cast<size_t>(i) * r + k;
      if (re != nullptr) re[at] = m(i, k).real();
      if (im != nullptr) im[at] = m(i, k).imag();
    }
  return HC_OK;
}

hc_status hc_event_to_minkowski(const hc_event* e, double out[4]) {
  HC_REQUIRE(e);
  HC_REQUIRE(out);
  return guarded([&] {
    const MinkowskiVector v = event_to_minkowski(e->value);
    out[0] = v.t;
    out[1] = v.x;
    out[2] = v.y;
    out[3] = v.z;
  });
}

hc_status hc_chronometric_form(const hc_event* v, double* out) {
  HC_REQUIRE(v);
  HC_REQUIRE(out);
  return guarded([&] { *out = chronometric_form(v->value); });
}

hc_status hc_classify(const hc_event* v, const hc_tolerance* tol,
                      hc_causal_class* out) {
  HC_REQUIRE(v);
  HC_REQUIRE(out);
  return guarded([&] {
    const CausalClass c = causal_classify(v->value, tolerance_of(tol));
    out->rank = c.rank;
    out->p = c.plus;
    out->q = c.minus;
    out->label = to_string(c.label).data();
  });
}

hc_status hc_proper_time(const hc_event* x, const hc_event* y,
                         const hc_tolerance* tol, double* out) {
  HC_REQUIRE(x);
  HC_REQUIRE(out);
  return guarded([&] {
    const Tolerance t = tolerance_of(tol);
    *out = y == nullptr ? proper_time(x->value, t)
                        : proper_time(x->value, y->value, t);
  });
}

hc_status hc_mass(const hc_event* p, double* out) {
  HC_REQUIRE(p);
  HC_REQUIRE(out);
  return guarded([&] { *out = mass(Momentum(p->value)); });
}

hc_status hc_spin(const hc_event* p, const double* l_re, const double* l_im,
                  double* out) {
  HC_REQUIRE(p);
  HC_REQUIRE(l_re);
  HC_REQUIRE(out);
  return guarded([&] {
    const CMatrix l = matrix_from_arrays(p->value.dim(), l_re, l_im);
    *out = spin_magnitude({Momentum(p->value), AngularMomentum(l)});
  });
}

hc_status hc_embed(const hc_event* x, int n, hc_event** out) {
  HC_REQUIRE(x);
  HC_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new_event(embed_minkowski(x->value, n).event()); });
}

hc_status hc_density_create(int n, const double* re, const double* im,
                            hc_density** out) {
  HC_REQUIRE(re);
  HC_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new hc_density{CandidateMap(matrix_from_arrays(n, re, im))};
  });
}

void hc_density_free(hc_density* rho) { delete rho; }

int hc_density_dim(const hc_density* rho) {
  return rho == nullptr ? 0 : rho->value.dim();
}

hc_status hc_density_min_eigenvalue(const hc_density* rho, double* out) {
  HC_REQUIRE(rho);
  HC_REQUIRE(out);
  return guarded([&] { *out = rho->value.min_eigenvalue(); });
}

hc_status hc_project(const hc_density* rho, const hc_event* x,
                     int allow_non_psd, hc_event** out) {
  HC_REQUIRE(rho);
  HC_REQUIRE(x);
  HC_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const int n = rho->value.dim();
    if (x->value.dim() != 2 * n) {
      std::ostringstream os;
      os << "event is " << x->value.dim() << "x" << x->value.dim()
         << " but rho needs " << 2 * n << "x" << 2 * n;
      throw Error(ErrorCode::DimensionMismatch, os.str());
    }
    const BrokenEvent big(x->value, n);
    if (allow_non_psd != 0) {
      *out = new_event(project(rho->value, big));
    } else {
      *out = new_event(project(DensityMatrix(rho->value.matrix()), big));
    }
  });
}

hc_status hc_cmd_classify(const char* event_json, const hc_tolerance* tol,
                          char** out_json) {
  HC_REQUIRE(out_json);
  *out_json = nullptr;
  return guarded([&] {
    const Tolerance t = tolerance_of(tol);
    const Event e = json::event_from(parse_doc(event_json, "event"), t);
    json::Json j = json::causal_class_to(causal_classify(e, t));
    j["delta"] = chronometric_form(e);
    *out_json = copy_string(json::dump(j));
  });
}

hc_status hc_cmd_propertime(const char* x_json, const char* y_json,
                            const hc_tolerance* tol, char** out_json) {
  HC_REQUIRE(out_json);
  *out_json = nullptr;
  return guarded([&] {
    const Tolerance t = tolerance_of(tol);
    const Event x = json::event_from(parse_doc(x_json, "x"), t);
    const Event y = json::event_from(parse_doc(y_json, "y"), t);
    if (x.dim() != y.dim())
      throw Error(ErrorCode::DimensionMismatch, "x and y have different r");
    const Interval sep = x - y;
    json::Json j = json::Json::object();
    j["r"] = x.dim();
    j["delta"] = chronometric_form(sep);
    j["label"] = std::string(to_string(causal_classify(sep, t).label));
    j["proper_time"] = proper_time(sep, t);
    *out_json = copy_string(json::dump(j));
  });
}

hc_status hc_cmd_geodesic(const char* from_json, const char* to_json,
                          int samples, const hc_tolerance* tol, char** out_csv) {
  HC_REQUIRE(out_csv);
  *out_csv = nullptr;
  return guarded([&] {
    if (samples < 2)
      throw Error(ErrorCode::InvalidArgument, "samples must be >= 2");
    const Tolerance t = tolerance_of(tol);
    const Event z = json::event_from(parse_doc(from_json, "from"), t);
    const Event y = json::event_from(parse_doc(to_json, "to"), t);
    const Curve geo = geodesic_between(y, z, t);
    const int r = z.dim();
    std::string csv = "s";
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k)
        csv += ",re_" + std::to_string(i) + "_" + std::to_string(k) + ",im_" +
               std::to_string(i) + "_" + std::to_string(k);
    csv += "\n";
    for (int row = 0; row < samples; ++row) {
      const double s =
          row == samples - 1 ? geo.b : geo.b * row / (samples - 1);
      const CMatrix m = row == samples - 1 ? y.matrix() : geo(s).matrix();
      csv += json::format_double(s);
      for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) {
          csv += "," + json::format_double(m(i, k).real());
          csv += "," + json::format_double(m(i, k).imag());
        }
      csv += "\n";
    }
    *out_csv = copy_string(csv);
  });
}

hc_status hc_cmd_project(const char* rho_json, const char* event_json,
                         const hc_tolerance* tol, char** out_json) {
  HC_REQUIRE(out_json);
  *out_json = nullptr;
  return guarded([&] {
    const Tolerance t = tolerance_of(tol);
    const CandidateMap cand = json::candidate_from(parse_doc(rho_json, "rho"), t);
    const DensityMatrix rho(cand.matrix(), t);
    const json::Json doc = parse_doc(event_json, "event");
    const Event e = json::event_from(doc, t);
    if (e.dim() != 2 * rho.dim()) {
      std::ostringstream os;
      os << "event has r = " << e.dim() << " but rho has n = " << rho.dim()
         << " (need r = 2n)";
      throw Error(ErrorCode::DimensionMismatch, os.str());
    }
    const Event image = project(rho, BrokenEvent(e, rho.dim()));
    *out_json = copy_string(json::dump(json::event_to(image)));
  });
}

hc_status hc_cmd_sample_cone(int r, long trials, uint64_t seed, int threads,
                             const hc_tolerance* tol, char** out_csv,
                             char** out_summary_json) {
  HC_REQUIRE(out_csv);
  *out_csv = nullptr;
  if (out_summary_json != nullptr) *out_summary_json = nullptr;
  return guarded([&] {
    if (r < 1 || r > 8)
      throw Error(ErrorCode::InvalidArgument, "r must lie in [1, 8]");
    if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
    const Tolerance t = tolerance_of(tol);
    struct Sample {
      CausalClass cls;
      double delta = 0.0;
    };
    const auto samples = run_trials(trials, threads, [&](long k) {
      Rng rng = make_rng(seed, static_cast<std::uint64_t>(k));
      const Event v = random_hermitian(r, rng);
      return Sample{causal_classify(v, t), chronometric_form(v)};
    });
    std::array<long, kCausalLabelCount> counts{};
    std::string csv = "trial,rank,p,q,label,delta\n";
    for (long k = 0; k < trials; ++k) {
      const Sample& s = samples[static_cast<size_t>(k)];
      ++counts[static_cast<size_t>(s.cls.label)];
      csv += std::to_string(k) + "," + std::to_string(s.cls.rank) + "," +
             std::to_string(s.cls.plus) + "," + std::to_string(s.cls.minus) +
             "," + std::string(to_string(s.cls.label)) + "," +
             json::format_double(s.delta) + "\n";
    }
    if (out_summary_json != nullptr) {
      json::Json j = json::Json::object();
      j["r"] = r;
      j["trials"] = trials;
      j["seed"] = seed;
      json::Json c = json::Json::object();
      for (CausalLabel label : all_causal_labels())
        c[std::string(to_string(label))] = counts[static_cast<size_t>(label)];
      j["counts"] = c;
      *out_summary_json = copy_string(json::dump(j));
    }
    *out_csv = copy_string(csv);
  });
}

hc_status hc_cmd_verify(const hc_verify_options* opts, int* pass,
                        char** out_json, char** out_counterexample_json) {
  HC_REQUIRE(opts);
  HC_REQUIRE(opts->suite);
  HC_REQUIRE(pass);
  HC_REQUIRE(out_json);
  *out_json = nullptr;
  *pass = 0;
  if (out_counterexample_json != nullptr) *out_counterexample_json = nullptr;
  return guarded([&] {
    SuiteOptions o;
    o.suite = opts->suite;
    o.r = opts->r;
    o.n = opts->n;
    o.trials = opts->trials;
    o.seed = opts->seed;
    o.threads = opts->threads;
    if (opts->rho_json != nullptr)
      o.rho = json::candidate_from(json::parse(opts->rho_json));
    const SuiteReport rep = run_suite(o);
    *pass = rep.pass ? 1 : 0;
    if (out_counterexample_json != nullptr && rep.counterexample)
      *out_counterexample_json =
          copy_string(json::dump(json::counterexample_to(*rep.counterexample)));
    *out_json = copy_string(json::dump(report_to_json(rep, opts->timing != 0)));
  });
}

}  // extern "C"
