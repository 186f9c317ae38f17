#pragma once

#include <stdexcept>
#include <string>

namespace psharm {

/// Thrown when an iterative numerical routine cannot reach its requested
/// accuracy. Carries the best estimate obtained so far.
class accuracy_error : public std::runtime_error {
 public:
  accuracy_error(const std::string& what, double best_estimate,
                 double error_estimate)
      : std::runtime_error(what),
        best_estimate_(best_estimate),
        error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

/// Thrown by file readers; carries the 1-based line number of the offending
/// input line (0 when the error is not tied to a specific line).
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, long line)
      : std::runtime_error(what), line_(line) {}

  long line() const noexcept { return line_; }

 private:
  long line_;
};

}  // namespace psharm
