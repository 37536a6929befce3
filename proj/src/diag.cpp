#include "cesc/diag.hpp"

namespace cesc {

const char* code_name(Code c) {
  switch (c) {
    case Code::E_PARSE: return "E_PARSE";
    case Code::E_UNDECLARED_SYMBOL: return "E_UNDECLARED_SYMBOL";
    case Code::E_DUPLICATE_NAME: return "E_DUPLICATE_NAME";
    case Code::E_TICK_RANGE: return "E_TICK_RANGE";
    case Code::E_ARROW_SCOPE: return "E_ARROW_SCOPE";
    case Code::E_UNKNOWN_REF: return "E_UNKNOWN_REF";
    case Code::E_AMBIGUOUS_REF: return "E_AMBIGUOUS_REF";
    case Code::E_CLOCK_MISMATCH: return "E_CLOCK_MISMATCH";
    case Code::E_PAR_LENGTH: return "E_PAR_LENGTH";
    case Code::E_ASYNC_SAME_CLOCK: return "E_ASYNC_SAME_CLOCK";
    case Code::E_SHAPE: return "E_SHAPE";
    case Code::E_VACUOUS: return "E_VACUOUS";
    case Code::E_UNIVERSE_TOO_LARGE: return "E_UNIVERSE_TOO_LARGE";
    case Code::E_TRACE_FORMAT: return "E_TRACE_FORMAT";
    case Code::E_NONMONOTONIC_INDEX: return "E_NONMONOTONIC_INDEX";
    case Code::E_UNKNOWN_CLOCK: return "E_UNKNOWN_CLOCK";
    case Code::E_NOT_EVENT: return "E_NOT_EVENT";
    case Code::E_ENUMERATION_TOO_LARGE: return "E_ENUMERATION_TOO_LARGE";
    case Code::E_UNSATISFIABLE_GEN: return "E_UNSATISFIABLE_GEN";
    case Code::E_NO_TRANSITION: return "E_NO_TRANSITION";
    case Code::E_IO: return "E_IO";
  }
  return "E_UNKNOWN";
}

std::string Error::format(Code code, const std::string& message, int line,
                          int column) {
  std::string out = code_name(code);
  if (line > 0) {
    out += ":" + std::to_string(line);
    if (column > 0) out += ":" + std::to_string(column);
  }
  out += ": " + message;
  return out;
}

std::string Diagnostic::str() const {
  std::string out = code_name(code);
  if (line > 0) out += ":" + std::to_string(line);
  out += ": " + message;
  return out;
}

}  // namespace cesc
