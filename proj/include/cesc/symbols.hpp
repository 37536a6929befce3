#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cesc/diag.hpp"

namespace cesc {

enum class SymbolKind { EVENT, PROP };

using SymbolId = uint32_t;
using ClockId = uint32_t;

// Bitmask over symbol ids (bit i = symbol i). The table is capped at 64
// symbols, which is far beyond what the satisfiability enumeration cap allows
// anyway.
using SymbolMask = uint64_t;
using ClockMask = uint64_t;

struct Symbol {
  std::string name;
  SymbolKind kind;
};

// Declaration-ordered tables for events/props (one shared namespace, since
// both appear in expressions), clocks, and instance names.
class SymbolTable {
 public:
  static constexpr size_t kMaxSymbols = 64;
  static constexpr size_t kMaxClocks = 64;

  SymbolId declare_symbol(const std::string& name, SymbolKind kind, int line = 0);
  ClockId declare_clock(const std::string& name, int line = 0);
  // Instances are registered on first use; re-registering is a no-op.
  void register_instance(const std::string& name);

  std::optional<SymbolId> find_symbol(const std::string& name) const;
  std::optional<ClockId> find_clock(const std::string& name) const;
  bool has_instance(const std::string& name) const;

  const Symbol& symbol(SymbolId id) const { return symbols_.at(id); }
  const std::string& clock_name(ClockId id) const { return clocks_.at(id); }

  size_t symbol_count() const { return symbols_.size(); }
  size_t clock_count() const { return clocks_.size(); }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  const std::vector<std::string>& clocks() const { return clocks_; }
  const std::vector<std::string>& instances() const { return instances_; }

  SymbolMask all_symbols_mask() const;
  ClockMask all_clocks_mask() const;
  SymbolMask events_mask() const;
  SymbolMask props_mask() const;

  bool operator==(const SymbolTable&) const = default;

 private:
  std::vector<Symbol> symbols_;
  std::vector<std::string> clocks_;
  std::vector<std::string> instances_;
};

// Total assignment of truth values to a subset of the symbol table. `domain`
// marks which symbols are assigned; looking up a symbol outside it is an
// error. The PROP part is the paper's f1, the EVENTS part its f2.
struct Valuation {
  SymbolMask bits = 0;
  SymbolMask domain = 0;

  bool value(SymbolId id) const {
    SymbolMask bit = SymbolMask{1} << id;
    if (!(domain & bit))
      throw Error(Code::E_UNDECLARED_SYMBOL,
                  "symbol id " + std::to_string(id) + " outside valuation domain");
    return (bits & bit) != 0;
  }

  void set(SymbolId id, bool v) {
    SymbolMask bit = SymbolMask{1} << id;
    domain |= bit;
    if (v)
      bits |= bit;
    else
      bits &= ~bit;
  }

  bool operator==(const Valuation&) const = default;
};

}  // namespace cesc
