#pragma once

#include <stdexcept>
#include <string>

namespace qcvote {

// Thrown when matrix shapes or subsystem dimensions do not line up.
struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown on invalid call arguments (x == y pairs, out-of-range voters,
// delta outside (0, 1/m^2), oversized enumerations, ...).
struct argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when a computed quantity leaves its admissible range by more than
// the working tolerance (pair weights outside [0,1], degenerate projections).
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class density_defect {
  not_finite,
  not_hermitian,
  trace_not_one,
  not_psd,
};

std::string to_string(density_defect d);

struct density_error : std::runtime_error {
  density_error(density_defect defect, const std::string& what)
      : std::runtime_error(what), defect(defect) {}
  density_defect defect;
};

// Scenario-file syntax or constraint violations; line is 1-based, 0 if n/a.
struct parse_error : std::runtime_error {
  parse_error(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line(line) {}
  int line;
};

}  // namespace qcvote
