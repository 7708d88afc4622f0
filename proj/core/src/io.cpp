#include "linrel/io.hpp"

#include "json_detail.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace linrel {

namespace detail {

json complex_to_json(const Complex& z) {
  return json::array({z.real(), z.imag()});
}

Complex complex_from_json(const json& j, Field field) {
  Complex z;
  if (j.is_number()) {
    z = Complex(j.get<double>(), 0.0);
  } else if (j.is_array() && j.size() == 2 && j[0].is_number() &&
             j[1].is_number()) {
    z = Complex(j[0].get<double>(), j[1].get<double>());
  } else {
    throw DimensionError("expected a number or an [re, im] pair");
  }
  if (field == Field::real && z.imag() != 0.0) {
    throw DimensionError("real mode rejects entries with nonzero imaginary parts");
  }
  return z;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Vector vector_from_json(const json& j, Field field) {
  if (!j.is_array()) throw DimensionError("expected a vector as a JSON array");
  Vector v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i) {
    v(i) = complex_from_json(j[static_cast<size_t>(i)], field);
  }
  return v;
}

json relation_to_json(const LinearRelation& t) {
  json out;
  out["field"] = to_string(t.field());
  out["n"] = t.n();
  out["m"] = t.m();
  out["tol"] = t.tol();
  json gens = json::array();
  const Matrix xb = t.x_block();
  const Matrix yb = t.y_block();
  for (Index j = 0; j < t.graph_dim(); ++j) {
    json gen;
    gen["x"] = vector_to_json(xb.col(j));
    gen["y"] = vector_to_json(yb.col(j));
    gens.push_back(std::move(gen));
  }
  out["generators"] = std::move(gens);
  return out;
}

LinearRelation relation_from_json(const json& j) {
  if (!j.is_object()) throw DimensionError("relation file must be a JSON object");
  for (const char* key : {"field", "n", "m", "generators"}) {
    if (!j.contains(key)) {
      throw DimensionError(std::string("relation file is missing \"") + key + "\"");
    }
  }
  if (!j["field"].is_string()) throw DimensionError("\"field\" must be a string");
  const Field field = field_from_string(j["field"].get<std::string>());
  if (!j["n"].is_number_integer() || !j["m"].is_number_integer()) {
    throw DimensionError("\"n\" and \"m\" must be integers");
  }
  const Index n = j["n"].get<Index>();
  const Index m = j["m"].get<Index>();
  if (n < 1 || m < 1) throw DimensionError("\"n\" and \"m\" must be positive");
  double tol = -1.0;
  if (j.contains("tol")) {
    if (!j["tol"].is_number()) throw DimensionError("\"tol\" must be a number");
    tol = j["tol"].get<double>();
    if (tol < 0.0) throw DimensionError("\"tol\" must be nonnegative");
  }
  if (!j["generators"].is_array()) {
    throw DimensionError("\"generators\" must be an array");
  }
  std::vector<std::pair<Vector, Vector>> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_object() || !g.contains("x") || !g.contains("y")) {
      throw DimensionError("each generator must be an object with \"x\" and \"y\"");
    }
    Vector x = vector_from_json(g["x"], field);
    Vector y = vector_from_json(g["y"], field);
    if (x.size() != n || y.size() != m) {
      throw DimensionError("generator lengths do not match n and m");
    }
    gens.emplace_back(std::move(x), std::move(y));
  }
  return LinearRelation::make(gens, n, m, field, tol);
}

json config_to_json(const TrialConfig& config) {
  json out;
  out["seed"] = config.seed;
  out["trials"] = config.trials;
  json dims = json::array();
  for (const auto& [n, m] : config.dims) dims.push_back(json::array({n, m}));
  out["dims"] = std::move(dims);
  out["field"] = to_string(config.field);
  out["tol"] = config.tol;
  out["suites"] = config.suites.empty()
                      ? json::array({"all"})
                      : json(config.suites);
  return out;
}

json suite_result_to_json(const SuiteResult& result) {
  json out;
  out["suite"] = result.suite;
  out["trials"] = result.trials;
  out["passes"] = result.passes;
  out["failures"] = result.failures;
  out["worst_residual"] = result.worst_residual;
  if (!result.counterexample.empty()) {
    out["counterexample"] = json::parse(result.counterexample);
  }
  return out;
}

json report_to_json(const VerificationReport& report) {
  json out;
  out["schema_version"] = 1;
  out["config"] = config_to_json(report.config);
  json suites = json::array();
  for (const auto& s : report.suites) suites.push_back(suite_result_to_json(s));
  out["suites"] = std::move(suites);
  out["timing"] = json{{"total_seconds", report.total_seconds}};
  return out;
}

}  // namespace detail

std::string relation_to_json(const LinearRelation& t, int indent) {
  return detail::relation_to_json(t).dump(indent);
}

LinearRelation relation_from_json(const std::string& text) {
  detail::json j;
  try {
    j = detail::json::parse(text);
  } catch (const detail::json::parse_error& e) {
    throw DimensionError(std::string("invalid JSON: ") + e.what());
  }
  return detail::relation_from_json(j);
}

void write_relation_file(const std::string& path, const LinearRelation& t) {
  std::ofstream out(path);
  if (!out) throw DimensionError("cannot open file for writing: " + path);
  out << relation_to_json(t) << "\n";
}

LinearRelation read_relation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DimensionError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return relation_from_json(buf.str());
}

std::string vector_to_json(const Vector& v) {
  return detail::vector_to_json(v).dump();
}

Vector vector_from_json(const std::string& text) {
  detail::json j;
  try {
    j = detail::json::parse(text);
  } catch (const detail::json::parse_error& e) {
    throw DimensionError(std::string("invalid JSON: ") + e.what());
  }
  return detail::vector_from_json(j, Field::complex);
}

std::string report_to_json(const VerificationReport& report, int indent) {
  return detail::report_to_json(report).dump(indent);
}

std::string verify_to_json(const TrialConfig& config, int indent) {
  return report_to_json(run_suites(config), indent);
}

std::string format_sig(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

Field field_from_string(const std::string& name) {
  if (name == "real") return Field::real;
  if (name == "complex") return Field::complex;
  throw DimensionError("field must be \"real\" or \"complex\"");
}

std::vector<std::pair<int, int>> parse_dims(const std::string& text) {
  std::vector<std::pair<int, int>> dims;
  std::istringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto x = item.find('x');
    if (x == std::string::npos) {
      throw DimensionError("dims entries must look like 4x4");
    }
    int n = 0;
    int m = 0;
    try {
      n = std::stoi(item.substr(0, x));
      m = std::stoi(item.substr(x + 1));
    } catch (const std::exception&) {
      throw DimensionError("dims entries must look like 4x4");
    }
    if (n < 1 || m < 1) throw DimensionError("dims entries must be positive");
    dims.emplace_back(n, m);
  }
  if (dims.empty()) throw DimensionError("dims list is empty");
  return dims;
}

}  // namespace linrel
