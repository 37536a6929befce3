#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cesc {

// Stable diagnostic codes. These appear verbatim in CLI error output and in
// validate() results; see docs/DSL.md for the full list.
enum class Code {
  E_PARSE,
  E_UNDECLARED_SYMBOL,
  E_DUPLICATE_NAME,
  E_TICK_RANGE,
  E_ARROW_SCOPE,
  E_UNKNOWN_REF,
  E_AMBIGUOUS_REF,
  E_CLOCK_MISMATCH,
  E_PAR_LENGTH,
  E_ASYNC_SAME_CLOCK,
  E_SHAPE,
  E_VACUOUS,
  E_UNIVERSE_TOO_LARGE,
  E_TRACE_FORMAT,
  E_NONMONOTONIC_INDEX,
  E_UNKNOWN_CLOCK,
  E_NOT_EVENT,
  E_ENUMERATION_TOO_LARGE,
  E_UNSATISFIABLE_GEN,
  E_NO_TRANSITION,
  E_IO,
};

const char* code_name(Code c);

// Library-wide error type. `line`/`column` are 1-based; 0 means "not tied to
// a source location".
class Error : public std::runtime_error {
 public:
  Error(Code code, std::string message, int line = 0, int column = 0)
      : std::runtime_error(format(code, message, line, column)),
        code_(code),
        line_(line),
        column_(column) {}

  Code code() const { return code_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(Code code, const std::string& message, int line,
                            int column);

  Code code_;
  int line_;
  int column_;
};

// One validation finding. validate() returns these instead of throwing so a
// caller can report every problem in one pass.
struct Diagnostic {
  Code code;
  std::string message;
  int line = 0;

  std::string str() const;
};

using Diagnostics = std::vector<Diagnostic>;

}  // namespace cesc
