#include "cesc/symbols.hpp"

#include <algorithm>

namespace cesc {

SymbolId SymbolTable::declare_symbol(const std::string& name, SymbolKind kind,
                                     int line) {
  if (find_symbol(name))
    throw Error(Code::E_DUPLICATE_NAME, "symbol '" + name + "' already declared",
                line);
  if (symbols_.size() >= kMaxSymbols)
    throw Error(Code::E_PARSE, "too many symbols (max 64)", line);
  symbols_.push_back({name, kind});
  return static_cast<SymbolId>(symbols_.size() - 1);
}

ClockId SymbolTable::declare_clock(const std::string& name, int line) {
  if (find_clock(name))
    throw Error(Code::E_DUPLICATE_NAME, "clock '" + name + "' already declared",
                line);
  if (clocks_.size() >= kMaxClocks)
    throw Error(Code::E_PARSE, "too many clocks (max 64)", line);
  clocks_.push_back(name);
  return static_cast<ClockId>(clocks_.size() - 1);
}

void SymbolTable::register_instance(const std::string& name) {
  if (!has_instance(name)) instances_.push_back(name);
}

std::optional<SymbolId> SymbolTable::find_symbol(const std::string& name) const {
  for (size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return static_cast<SymbolId>(i);
  return std::nullopt;
}

std::optional<ClockId> SymbolTable::find_clock(const std::string& name) const {
  for (size_t i = 0; i < clocks_.size(); ++i)
    if (clocks_[i] == name) return static_cast<ClockId>(i);
  return std::nullopt;
}

bool SymbolTable::has_instance(const std::string& name) const {
  return std::find(instances_.begin(), instances_.end(), name) !=
         instances_.end();
}

SymbolMask SymbolTable::all_symbols_mask() const {
  if (symbols_.empty()) return 0;
  if (symbols_.size() == 64) return ~SymbolMask{0};
  return (SymbolMask{1} << symbols_.size()) - 1;
}

ClockMask SymbolTable::all_clocks_mask() const {
  if (clocks_.empty()) return 0;
  if (clocks_.size() == 64) return ~ClockMask{0};
  return (ClockMask{1} << clocks_.size()) - 1;
}

SymbolMask SymbolTable::events_mask() const {
  SymbolMask m = 0;
  for (size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].kind == SymbolKind::EVENT) m |= SymbolMask{1} << i;
  return m;
}

SymbolMask SymbolTable::props_mask() const {
  SymbolMask m = 0;
  for (size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].kind == SymbolKind::PROP) m |= SymbolMask{1} << i;
  return m;
}

}  // namespace cesc
