#pragma once

// State files and report serialization.
//
// State file: {"dims": [2, 2], "matrix": [[[re, im], ...], ...]} for a
// density operator, or {"dims": [...], "vector": [[re, im], ...]} for a pure
// state. Numbers are written with 17 significant digits.

#include <iosfwd>
#include <string>
#include <variant>

#include "json.hpp"

#include "corrcoh/monogamy.hpp"

namespace corrcoh {

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Parsed but not yet validated content of a state file.
using StateSpec = std::variant<MultipartiteOperator, PureStateVector>;

StateSpec parse_state(const nlohmann::json& j);
StateSpec parse_state_text(const std::string& text);
StateSpec read_state_file(const std::string& path);

/// Validates a parsed state and returns it as a density matrix.
DensityMatrix to_density(const StateSpec& spec, double tol = kDensityTolerance);

nlohmann::json state_to_json(const MultipartiteOperator& op);
nlohmann::json state_to_json(const PureStateVector& psi);

nlohmann::json to_json(const GapReport& r);
nlohmann::json to_json(const SearchSummary& s);

/// "%.17g"
std::string format_number(double v);

/// relation_name,lhs,rhs,gap,tolerance,passed,state_descriptor
std::string gap_report_csv_header();
std::string to_csv_row(const GapReport& r);

}  // namespace corrcoh
