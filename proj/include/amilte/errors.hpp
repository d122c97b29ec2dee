#pragma once

#include <stdexcept>
#include <string>

namespace amilte {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid static configuration (bad bandwidth value, zero-denominator TDD share, ...).
struct ConfigError : Error {
  using Error::Error;
};

// TBS table lookup outside the covered (i_tbs, n_prb) range.
struct LookupError : Error {
  using Error::Error;
};

// No RB count up to the cell capacity satisfies the rate demand.
struct InfeasibleError : Error {
  using Error::Error;
};

// Ratio whose denominator is identically zero (e.g. BRR with no meters).
struct UndefinedRatioError : Error {
  using Error::Error;
};

// Scenario text could not be read; carries the 1-based line number.
struct ParseError : Error {
  ParseError(int line_number, const std::string& what)
      : Error("line " + std::to_string(line_number) + ": " + what), line(line_number) {}
  int line;
};

// Scenario parsed but a field value or combination is invalid; names the field.
struct SemanticError : Error {
  SemanticError(std::string field_name, const std::string& what)
      : Error(field_name + ": " + what), field(std::move(field_name)) {}
  std::string field;
};

// RB allocation requested on a non-uplink TTI.
struct SchedulingError : Error {
  using Error::Error;
};

// Simulation cannot proceed; names the offending transmitter.
struct SimulationAbort : Error {
  SimulationAbort(int node, const std::string& what)
      : Error("node " + std::to_string(node) + ": " + what), node_id(node) {}
  int node_id;
};

}  // namespace amilte
