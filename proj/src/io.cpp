#include "corrcoh/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace corrcoh {

using nlohmann::json;

namespace {

Complex parse_complex(const json& e) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
    throw ParseError("complex entries must be [re, im] number pairs");
  return {e[0].get<double>(), e[1].get<double>()};
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

Dims parse_dims(const json& j) {
  if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].empty())
    throw ParseError("state file needs a nonempty 'dims' array");
  Dims dims;
  for (const auto& d : j["dims"]) {
    if (!d.is_number_integer() || d.get<long long>() < 1) throw ParseError("dims must be positive integers");
    dims.push_back(d.get<std::size_t>());
  }
  return dims;
}

}  // namespace

StateSpec parse_state(const json& j) {
  if (!j.is_object()) throw ParseError("state file must hold a JSON object");
  const Dims dims = parse_dims(j);
  const bool has_matrix = j.contains("matrix");
  const bool has_vector = j.contains("vector");
  if (has_matrix == has_vector) throw ParseError("state file needs exactly one of 'matrix' or 'vector'");

  std::size_t side = 0;
  try {
    side = checked_side(dims);
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  }

  if (has_vector) {
    const json& v = j["vector"];
    if (!v.is_array() || v.size() != side)
      throw ParseError("vector length does not match product of dims (" + std::to_string(side) + ")");
    Vector amps(static_cast<Eigen::Index>(side));
    for (std::size_t k = 0; k < side; ++k) amps(static_cast<Eigen::Index>(k)) = parse_complex(v[k]);
    return PureStateVector(dims, std::move(amps), 1e-8);
  }

  const json& m = j["matrix"];
  if (!m.is_array()) throw ParseError("'matrix' must be an array of rows");
  const std::size_t rows = m.size();
  for (const auto& row : m)
    if (!row.is_array() || row.size() != rows) throw ParseError("matrix is not square");
  if (rows != side)
    throw ParseError("matrix side " + std::to_string(rows) + " does not match product of dims " +
                     std::to_string(side));
  Matrix entries(static_cast<Eigen::Index>(side), static_cast<Eigen::Index>(side));
  for (std::size_t r = 0; r < side; ++r)
    for (std::size_t c = 0; c < side; ++c)
      entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = parse_complex(m[r][c]);
  return MultipartiteOperator(dims, std::move(entries));
}

StateSpec parse_state_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_state(j);
}

StateSpec read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_text(buf.str());
}

DensityMatrix to_density(const StateSpec& spec, double tol) {
  if (const auto* psi = std::get_if<PureStateVector>(&spec)) return pure_to_density(*psi);
  return validate_density(std::get<MultipartiteOperator>(spec), tol);
}

json state_to_json(const MultipartiteOperator& op) {
  json rows = json::array();
  const Matrix& m = op.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"dims", op.dims()}, {"matrix", std::move(rows)}};
}

json state_to_json(const PureStateVector& psi) {
  json v = json::array();
  for (Eigen::Index k = 0; k < psi.amplitudes().size(); ++k) v.push_back(complex_to_json(psi.amplitudes()(k)));
  return {{"dims", psi.dims()}, {"vector", std::move(v)}};
}

json to_json(const GapReport& r) {
  return {{"relation_name", r.relation_name}, {"lhs", r.lhs},
          {"rhs", r.rhs},                     {"gap", r.gap},
          {"tolerance", r.tolerance},         {"passed", r.passed},
          {"state_descriptor", r.state_descriptor}};
}

json to_json(const SearchSummary& s) {
  return {{"samples", s.samples},         {"min_gap", s.min_gap},   {"argmin_seed", s.argmin_seed},
          {"violations", s.violations},   {"dims", s.dims}};
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string gap_report_csv_header() { return "relation_name,lhs,rhs,gap,tolerance,passed,state_descriptor"; }

std::string to_csv_row(const GapReport& r) {
  return csv_field(r.relation_name) + ',' + format_number(r.lhs) + ',' + format_number(r.rhs) + ',' +
         format_number(r.gap) + ',' + format_number(r.tolerance) + ',' + (r.passed ? "true" : "false") + ',' +
         csv_field(r.state_descriptor);
}

}  // namespace corrcoh
