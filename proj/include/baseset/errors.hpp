#pragma once

#include <stdexcept>
#include <string>

namespace baseset {

/// Raised when an exact enumeration would exceed its configured budget.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the text-format readers; carries a 1-based line number.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, int line)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_ = 0;
};

/// Raised when a graph construction fails its computational verification.
class construction_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace baseset
