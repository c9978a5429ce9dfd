#include "hyperchron/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace hyperchron::json {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw Error(ErrorCode::Parse, what);
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) fail("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key \"") + key + "\"");
  return *it;
}

int int_member(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number_integer()) fail(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

RMatrix real_matrix(const Json& j, const char* name) {
  if (!j.is_array() || j.empty())
    fail(std::string("\"") + name + "\" must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.front().is_array() ? j.front().size() : 0);
  if (cols == 0) fail(std::string("\"") + name + "\" rows must be non-empty arrays");
  RMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      fail(std::string("\"") + name + "\" is not rectangular");
    for (Eigen::Index k = 0; k < cols; ++k) {
      const Json& x = row[static_cast<size_t>(k)];
      if (!x.is_number()) fail(std::string("\"") + name + "\" has a non-numeric entry");
      m(i, k) = x.get<double>();
    }
  }
  return m;
}

Json real_rows(const RMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

void dump_into(const Json& j, std::string& out, int indent) {
  const std::string pad(static_cast<size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += inner;
        out += Json(key).dump();
        out += ": ";
        dump_into(value, out, indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line (matrix rows).
      const bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) {
        return e.is_array() || e.is_object();
      });
      out += "[";
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) out += "\n" + inner;
        dump_into(e, out, indent + 1);
      }
      if (!flat) out += "\n" + pad;
      out += "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

CMatrix matrix_from(const Json& j) {
  const RMatrix re = real_matrix(member(j, "re"), "re");
  RMatrix im = RMatrix::Zero(re.rows(), re.cols());
  if (j.contains("im")) {
    im = real_matrix(j.at("im"), "im");
    if (im.rows() != re.rows() || im.cols() != re.cols())
      fail("\"re\" and \"im\" have different shapes");
  }
  CMatrix m(re.rows(), re.cols());
  m.real() = re;
  m.imag() = im;
  return m;
}

Json matrix_to(const CMatrix& m) {
  Json j = Json::object();
  j["re"] = real_rows(m.real());
  j["im"] = real_rows(m.imag());
  return j;
}

Event event_from(const Json& j, const Tolerance& tol) {
  const int r = int_member(j, "r");
  const CMatrix m = matrix_from(j);
  if (m.rows() != r || m.cols() != r) {
    std::ostringstream os;
    os << "\"r\" is " << r << " but the matrix is " << m.rows() << "x" << m.cols();
    fail(os.str());
  }
  return Event(m, tol);
}

Json event_to(const Event& e) {
  Json j = Json::object();
  j["r"] = e.dim();
  const Json m = matrix_to(e.matrix());
  j["re"] = m["re"];
  j["im"] = m["im"];
  return j;
}

BrokenEvent broken_event_from(const Json& j, const Tolerance& tol) {
  const Event e = event_from(j, tol);
  int n = e.dim() / 2;
  if (j.contains("n")) n = int_member(j, "n");
  if (e.dim() != 2 * n) {
    std::ostringstream os;
    os << "broken event needs r = 2n, got r = " << e.dim() << ", n = " << n;
    fail(os.str());
  }
  return BrokenEvent(e, n);
}

Json broken_event_to(const BrokenEvent& e) {
  Json j = Json::object();
  j["r"] = e.event().dim();
  j["n"] = e.internal_dim();
  const Json m = matrix_to(e.matrix());
  j["re"] = m["re"];
  j["im"] = m["im"];
  return j;
}

CandidateMap candidate_from(const Json& j, const Tolerance& tol) {
  const int n = int_member(j, "n");
  const CMatrix m = matrix_from(j);
  if (m.rows() != n || m.cols() != n) {
    std::ostringstream os;
    os << "\"n\" is " << n << " but the matrix is " << m.rows() << "x" << m.cols();
    fail(os.str());
  }
  return CandidateMap(m, tol);
}

Json density_to(const CMatrix& rho) {
  Json j = Json::object();
  j["n"] = rho.rows();
  const Json m = matrix_to(rho);
  j["re"] = m["re"];
  j["im"] = m["im"];
  return j;
}

PoincareElement poincare_from(const Json& j, const Tolerance& tol) {
  const CMatrix lambda = matrix_from(member(j, "lambda"));
  const Event beta = event_from(member(j, "beta"), tol);
  if (lambda.rows() != beta.dim() || lambda.cols() != beta.dim())
    fail("\"lambda\" and \"beta\" have different dimensions");
  return {LorentzElement(lambda), beta};
}

Json poincare_to(const PoincareElement& g) {
  Json j = Json::object();
  j["lambda"] = matrix_to(g.lambda.matrix());
  j["beta"] = event_to(g.beta);
  return j;
}

ElementarySystem system_from(const Json& j, const Tolerance& tol) {
  const Event p = event_from(member(j, "P"), tol);
  const CMatrix l = matrix_from(member(j, "l"));
  if (l.rows() != p.dim() || l.cols() != p.dim())
    fail("\"P\" and \"l\" have different dimensions");
  return {Momentum(p), AngularMomentum(l, tol)};
}

Json system_to(const ElementarySystem& s) {
  Json j = Json::object();
  j["P"] = event_to(s.p.event());
  j["l"] = matrix_to(s.l.matrix());
  return j;
}

Json causal_class_to(const CausalClass& c) {
  Json j = Json::object();
  j["rank"] = c.rank;
  j["p"] = c.plus;
  j["q"] = c.minus;
  j["label"] = std::string(to_string(c.label));
  return j;
}

Json counterexample_to(const Counterexample& c) {
  Json j = Json::object();
  j["counterexample_X"] = broken_event_to(c.x);
  j["image"] = event_to(c.image);
  j["input_class"] = causal_class_to(c.input_class);
  j["image_class"] = causal_class_to(c.image_class);
  j["eigenvalue"] = c.eigenvalue;
  return j;
}

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string dump(const Json& j) {
  std::string out;
  dump_into(j, out, 0);
  out += "\n";
  return out;
}

}  // namespace hyperchron::json
