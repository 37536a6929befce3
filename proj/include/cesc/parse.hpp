#pragma once

#include <string>

#include "cesc/chart.hpp"

namespace cesc {

// Parses .cesc text. Lexical and name-resolution problems throw (with
// line/column); structural invariants are left to validate().
SpecFile parse_spec(const std::string& text);

// parse_spec + validate; throws on the first diagnostic. This is what the
// CLI and most callers want.
SpecFile load_spec(const std::string& text);
SpecFile load_spec_file(const std::string& path);

// Canonical .cesc emission; parse_spec(print_spec(x)) is structurally equal
// to x.
std::string print_spec(const SpecFile& spec);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace cesc
