#include "bcbvp/problem.hpp"

#include <vector>

namespace bcbvp {

using nlohmann::json;

SpecError::SpecError(std::string pointer, const std::string& message)
    : std::invalid_argument((pointer.empty() ? std::string("<document>") : pointer) + ": " + message),
      pointer_(std::move(pointer)) {}

namespace {

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

double number(const json& j, const std::string& ptr) {
  if (!j.is_number()) throw SpecError(ptr, "expected a number");
  return j.get<double>();
}

int integer(const json& j, const std::string& ptr) {
  if (!j.is_number_integer()) throw SpecError(ptr, "expected an integer");
  return j.get<int>();
}

cplx complex_pair(const json& j, const std::string& ptr) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw SpecError(ptr, "expected [re, im]");
  return {number(j[0], child(ptr, 0)), number(j[1], child(ptr, 1))};
}

DataKind parse_kind(const json& obj, const std::string& ptr) {
  if (!obj.contains("kind")) return DataKind::function;
  const auto& k = obj["kind"];
  if (k == "function") return DataKind::function;
  if (k == "distribution") return DataKind::distribution;
  throw SpecError(child(ptr, "kind"), "expected \"function\" or \"distribution\"");
}

BoundaryFourierData parse_data(const json& j, const std::string& ptr) {
  if (!j.is_object()) throw SpecError(ptr, "expected a boundary data object");
  if (j.contains("dirac")) {
    const auto& d = j["dirac"];
    const std::string dptr = child(ptr, "dirac");
    if (!d.is_object()) throw SpecError(dptr, "expected {\"t0\", \"bandwidth\"}");
    const double t0 = d.contains("t0") ? number(d["t0"], child(dptr, "t0")) : 0.0;
    const int bw = d.contains("bandwidth") ? integer(d["bandwidth"], child(dptr, "bandwidth")) : 64;
    if (bw < 0) throw SpecError(child(dptr, "bandwidth"), "must be nonnegative");
    return BoundaryFourierData::dirac(t0, bw);
  }
  const DataKind kind = parse_kind(j, ptr);
  const bool has_coeffs = j.contains("coeffs");
  const bool has_samples = j.contains("samples");
  if (has_coeffs == has_samples) throw SpecError(ptr, "exactly one of \"coeffs\", \"samples\" or \"dirac\" is required");
  if (has_coeffs) {
    const std::string cptr = child(ptr, "coeffs");
    const auto& arr = j["coeffs"];
    if (!arr.is_array()) throw SpecError(cptr, "expected an array of [k, re, im]");
    BoundaryFourierData::Coeffs coeffs;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto& e = arr[i];
      const std::string eptr = child(cptr, i);
      if (!e.is_array() || e.size() != 3) throw SpecError(eptr, "expected [k, re, im]");
      coeffs[integer(e[0], child(eptr, 0))] += cplx(number(e[1], child(eptr, 1)), number(e[2], child(eptr, 2)));
    }
    BoundaryFourierData raw(coeffs, kind, false);
    return BoundaryFourierData(std::move(coeffs), kind, raw.is_conjugate_symmetric());
  }
  const std::string sptr = child(ptr, "samples");
  const auto& arr = j["samples"];
  if (!arr.is_array() || arr.empty()) throw SpecError(sptr, "expected a nonempty array of samples");
  std::vector<cplx> samples;
  for (std::size_t i = 0; i < arr.size(); ++i) samples.push_back(complex_pair(arr[i], child(sptr, i)));
  try {
    return fourier_from_samples(samples).with_kind(kind);
  } catch (const std::invalid_argument& e) {
    throw SpecError(sptr, e.what());
  }
}

std::vector<BoundaryFourierData> parse_data_list(const json& j, const std::string& ptr, int n) {
  std::vector<BoundaryFourierData> out;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_data(j[i], child(ptr, i)));
  } else {
    out.push_back(parse_data(j, ptr));
  }
  if (static_cast<int>(out.size()) != n) {
    throw SpecError(ptr, "expected " + std::to_string(n) + " boundary data entries, got " + std::to_string(out.size()));
  }
  return out;
}

std::vector<double> parse_constants(const json& j, const std::string& ptr, int n) {
  std::vector<double> out;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], child(ptr, i)));
  } else {
    out.push_back(number(j, ptr));
  }
  if (static_cast<int>(out.size()) != n) {
    throw SpecError(ptr, "expected " + std::to_string(n) + " constants, got " + std::to_string(out.size()));
  }
  return out;
}

PolynomialSource parse_source(const json& j, const std::string& ptr) {
  if (!j.is_object() || !j.contains("terms")) throw SpecError(ptr, "expected {\"terms\": [...]}");
  const std::string tptr = child(ptr, "terms");
  const auto& terms = j["terms"];
  if (!terms.is_array()) throw SpecError(tptr, "expected an array");
  PolynomialSource::Terms out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    const std::string eptr = child(tptr, i);
    if (!t.is_array() || t.size() != 6) throw SpecError(eptr, "expected [a, b, re_z1, im_z1, re_z2, im_z2]");
    const int a = integer(t[0], child(eptr, 0));
    const int b = integer(t[1], child(eptr, 1));
    if (a < 0 || b < 0) throw SpecError(eptr, "monomial degrees must be nonnegative");
    double v[4];
    for (std::size_t k = 0; k < 4; ++k) v[k] = number(t[k + 2], child(eptr, k + 2));
    out[{a, b}] += Bicomplex(cplx(v[0], v[1]), cplx(v[2], v[3]));
  }
  return PolynomialSource(std::move(out));
}

const json& require(const json& obj, const char* key, const std::string& ptr) {
  if (!obj.contains(key)) throw SpecError(child(ptr, key), "missing required key");
  return obj[key];
}

}  // namespace

ProblemSpec parse_problem(const json& doc) {
  if (!doc.is_object()) throw SpecError("", "expected a JSON object");
  ProblemSpec spec;

  const auto& problem = require(doc, "problem", "");
  if (problem == "schwarz") {
    spec.kind = ProblemKind::schwarz;
  } else if (problem == "dirichlet") {
    spec.kind = ProblemKind::dirichlet;
  } else {
    throw SpecError("/problem", "expected \"schwarz\" or \"dirichlet\"");
  }

  if (doc.contains("path")) {
    const auto& p = doc["path"];
    if (p == "spectral") {
      spec.path = EvalPath::spectral;
    } else if (p == "quadrature") {
      spec.path = EvalPath::quadrature;
    } else {
      throw SpecError("/path", "expected \"spectral\" or \"quadrature\"");
    }
  }

  const auto& boundary = require(doc, "boundary", "");
  if (!boundary.is_object()) throw SpecError("/boundary", "expected {\"plus\": ..., \"minus\": ...}");

  if (spec.kind == ProblemKind::dirichlet) {
    auto plus = parse_data(require(boundary, "plus", "/boundary"), "/boundary/plus");
    auto minus = parse_data(require(boundary, "minus", "/boundary"), "/boundary/minus");
    if (plus.kind() != minus.kind()) throw SpecError("/boundary", "components must share the same kind");
    spec.dirichlet = DirichletSpec{BicomplexBoundaryData(std::move(plus), std::move(minus))};
  } else {
    SchwarzSpec s;
    s.order = doc.contains("n") ? integer(doc["n"], "/n") : 1;
    if (s.order < 1 || s.order > kMaxSchwarzOrder) {
      throw SpecError("/n", "order must lie in [1, " + std::to_string(kMaxSchwarzOrder) + "]");
    }
    s.boundary_plus = parse_data_list(require(boundary, "plus", "/boundary"), "/boundary/plus", s.order);
    s.boundary_minus = parse_data_list(require(boundary, "minus", "/boundary"), "/boundary/minus", s.order);
    s.c_plus.assign(static_cast<std::size_t>(s.order), 0.0);
    s.c_minus.assign(static_cast<std::size_t>(s.order), 0.0);
    if (doc.contains("constants")) {
      const auto& c = doc["constants"];
      if (!c.is_object()) throw SpecError("/constants", "expected {\"plus\": ..., \"minus\": ...}");
      if (c.contains("plus")) s.c_plus = parse_constants(c["plus"], "/constants/plus", s.order);
      if (c.contains("minus")) s.c_minus = parse_constants(c["minus"], "/constants/minus", s.order);
    }
    if (doc.contains("source")) s.source = parse_source(doc["source"], "/source");

    for (std::size_t k = 0; k < s.boundary_plus.size(); ++k) {
      if (!s.boundary_plus[k].is_conjugate_symmetric()) {
        throw SpecError("/boundary/plus/" + std::to_string(k), "Schwarz data must be real-valued");
      }
      if (!s.boundary_minus[k].is_conjugate_symmetric()) {
        throw SpecError("/boundary/minus/" + std::to_string(k), "Schwarz data must be real-valued");
      }
    }
    spec.schwarz = std::move(s);
  }

  if (doc.contains("perturbation")) {
    const auto& p = doc["perturbation"];
    if (!p.is_object()) throw SpecError("/perturbation", "expected an object");
    if (p.contains("plus_conj_z")) spec.perturbation.plus_conj_z = complex_pair(p["plus_conj_z"], "/perturbation/plus_conj_z");
    if (p.contains("minus_conj_z")) {
      spec.perturbation.minus_conj_z = complex_pair(p["minus_conj_z"], "/perturbation/minus_conj_z");
    }
  }
  return spec;
}

ProblemSpec parse_problem_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError("", std::string("malformed JSON: ") + e.what());
  }
  return parse_problem(doc);
}

json boundary_to_json(const BoundaryFourierData& d) {
  json coeffs = json::array();
  for (const auto& [k, c] : d.coeffs()) coeffs.push_back({k, c.real(), c.imag()});
  return {{"kind", d.kind() == DataKind::function ? "function" : "distribution"}, {"coeffs", coeffs}};
}

SolutionField solve(const ProblemSpec& spec, const QuadratureConfig& quadrature) {
  const SolveOptions opts{spec.path, quadrature};
  SolutionField field = spec.kind == ProblemKind::dirichlet ? solve_dirichlet(*spec.dirichlet, opts)
                                                            : solve_schwarz(*spec.schwarz, opts);
  if (spec.perturbation.active()) {
    const Perturbation p = spec.perturbation;
    field = field.perturbed([p](cplx z) {
      const cplx zb = std::conj(z);
      return from_idempotent(p.plus_conj_z * zb, p.minus_conj_z * zb);
    });
  }
  return field;
}

}  // namespace bcbvp
