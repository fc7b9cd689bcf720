#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace abducta {

using ActivityId = std::string;

// Time values are naturals; stored signed so arithmetic on differences is safe.
using TimePoint = long long;

/// A time term is either a variable (index into some store) or a constant.
struct TimeTerm {
  int var = -1;
  TimePoint value = 0;

  static TimeTerm variable(int v) { return TimeTerm{v, 0}; }
  static TimeTerm constant(TimePoint c) { return TimeTerm{-1, c}; }
  bool is_var() const { return var >= 0; }

  friend bool operator==(const TimeTerm& a, const TimeTerm& b) {
    return a.var == b.var && (a.is_var() || a.value == b.value);
  }
};

/// Raised when an enumeration or search exceeds its configured cap.
/// Signals a combinatorial blow-up, not invalid input.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what), line(line), column(column) {}
  int line = 0;
  int column = 0;
};

class NegativeTimestamp : public ParseError {
 public:
  NegativeTimestamp(const std::string& what, int line, int column)
      : ParseError(what, line, column) {}
};

class IncompleteTraceInLog : public std::runtime_error {
 public:
  explicit IncompleteTraceInLog(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace abducta
