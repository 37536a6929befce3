#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cesc/expr.hpp"
#include "cesc/symbols.hpp"

namespace cesc {

enum class Polarity { PRESENT, ABSENT };

// One event occurrence on a chart grid line. `instance` is the owning agent
// (the distinguished name "env" marks environment events); `tick` is 0-based
// within the chart.
struct EventOccurrence {
  SymbolId event = 0;
  std::optional<Expr> guard;
  Polarity polarity = Polarity::PRESENT;
  std::string instance;
  uint32_t tick = 0;

  bool operator==(const EventOccurrence& o) const {
    if (guard.has_value() != o.guard.has_value()) return false;
    if (guard && !guard->equals(*o.guard)) return false;
    return event == o.event && polarity == o.polarity &&
           instance == o.instance && tick == o.tick;
  }
};

// Causality edge between two occurrences of the same chart, by index into
// Scesc::occurrences.
struct CausalityArrow {
  uint32_t source = 0;
  uint32_t target = 0;

  bool operator==(const CausalityArrow&) const = default;
};

// Single-clock chart: a finite event-sequence scenario over `tick_count`
// grid lines.
struct Scesc {
  std::string name;
  ClockId clock = 0;
  uint32_t tick_count = 1;
  std::vector<EventOccurrence> occurrences;
  std::vector<CausalityArrow> arrows;
  std::vector<std::string> instances;

  bool operator==(const Scesc&) const = default;
};

enum class ChartOp { LEAF, SEQ, PAR, ALT, LOOP, IMPL, ASYNC };

struct ChartNode;
using ChartPtr = std::shared_ptr<const ChartNode>;

// Cross-domain arrow attached to an ASYNC node. Children are referenced by
// position; occurrences by event name with an optional tick qualifier,
// resolved against the flattened child during synthesis.
struct CrossArrow {
  uint32_t source_child = 0;
  SymbolId source_event = 0;
  std::optional<uint32_t> source_tick;
  uint32_t target_child = 0;
  SymbolId target_event = 0;
  std::optional<uint32_t> target_tick;
  int line = 0;

  bool operator==(const CrossArrow& o) const {
    return source_child == o.source_child && source_event == o.source_event &&
           source_tick == o.source_tick && target_child == o.target_child &&
           target_event == o.target_event && target_tick == o.target_tick;
  }
};

struct ChartNode {
  ChartOp op = ChartOp::LEAF;
  std::string name;  // set for named charts; empty for anonymous subtrees
  Scesc leaf;        // LEAF only
  std::vector<ChartPtr> children;
  uint64_t loop_count = 0;  // LOOP: 0 means unbounded (*)
  bool par_pad = false;     // PAR: right-pad the shorter child
  std::vector<CrossArrow> cross_arrows;  // ASYNC only
  int line = 0;
};

bool chart_equal(const ChartPtr& a, const ChartPtr& b);

enum class Mode { DETECT, ASSERT };

// Parsed .cesc file: symbol table, named charts in definition order, one
// designated top-level chart, and the checking mode.
struct SpecFile {
  SymbolTable symtab;
  std::vector<std::pair<std::string, ChartPtr>> charts;
  std::string top;
  Mode mode = Mode::DETECT;

  ChartPtr find_chart(const std::string& name) const;
  ChartPtr top_chart() const { return find_chart(top); }

  bool operator==(const SpecFile& o) const;
};

// --- operations -----------------------------------------------------------

// Structural validation; empty result means the spec is synthesizable up to
// non-structural errors (vacuous elements, enumeration caps).
Diagnostics validate(const SpecFile& spec);

// Merges SEQ nodes whose children are single-clock leaves into one leaf
// (tick counts sum, the second child's ticks shift). Recurses through every
// construct; non-SEQ nodes are left in place.
ChartPtr flatten_seq(const ChartPtr& c);

// Full normalization used by synthesis: flattens SEQ, PAR (occurrence union,
// padding per the node's flag) and bounded LOOP into single leaves. ALT,
// IMPL, ASYNC and unbounded LOOP survive as structure.
ChartPtr normalize_to_leaves(const ChartPtr& c);

// Effective tick length of a leaf-flattenable subtree.
uint32_t effective_length(const ChartPtr& c);

bool leaf_flattenable(const ChartPtr& c);

// Clock domain of a single-clock subtree.
ClockId chart_clock(const ChartPtr& c);

}  // namespace cesc
