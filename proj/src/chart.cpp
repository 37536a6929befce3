#include "cesc/chart.hpp"

#include <algorithm>

namespace cesc {

bool chart_equal(const ChartPtr& a, const ChartPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->op != b->op || a->name != b->name) return false;
  switch (a->op) {
    case ChartOp::LEAF:
      return a->leaf == b->leaf;
    case ChartOp::LOOP:
      if (a->loop_count != b->loop_count) break;
      return chart_equal(a->children[0], b->children[0]);
    case ChartOp::PAR:
      if (a->par_pad != b->par_pad) break;
      [[fallthrough]];
    case ChartOp::SEQ:
    case ChartOp::ALT:
    case ChartOp::IMPL:
    case ChartOp::ASYNC: {
      if (a->children.size() != b->children.size()) return false;
      for (size_t i = 0; i < a->children.size(); ++i)
        if (!chart_equal(a->children[i], b->children[i])) return false;
      if (a->cross_arrows.size() != b->cross_arrows.size()) return false;
      for (size_t i = 0; i < a->cross_arrows.size(); ++i)
        if (!(a->cross_arrows[i] == b->cross_arrows[i])) return false;
      return true;
    }
  }
  return false;
}

ChartPtr SpecFile::find_chart(const std::string& name) const {
  for (const auto& [n, c] : charts)
    if (n == name) return c;
  return nullptr;
}

bool SpecFile::operator==(const SpecFile& o) const {
  if (!(symtab == o.symtab) || top != o.top || mode != o.mode) return false;
  if (charts.size() != o.charts.size()) return false;
  for (size_t i = 0; i < charts.size(); ++i) {
    if (charts[i].first != o.charts[i].first) return false;
    if (!chart_equal(charts[i].second, o.charts[i].second)) return false;
  }
  return true;
}

bool leaf_flattenable(const ChartPtr& c) {
  switch (c->op) {
    case ChartOp::LEAF: return true;
    case ChartOp::SEQ:
    case ChartOp::PAR:
      return leaf_flattenable(c->children[0]) && leaf_flattenable(c->children[1]);
    case ChartOp::LOOP:
      return c->loop_count > 0 && leaf_flattenable(c->children[0]);
    default: return false;
  }
}

ClockId chart_clock(const ChartPtr& c) {
  if (c->op == ChartOp::LEAF) return c->leaf.clock;
  return chart_clock(c->children[0]);
}

uint32_t effective_length(const ChartPtr& c) {
  switch (c->op) {
    case ChartOp::LEAF: return c->leaf.tick_count;
    case ChartOp::SEQ:
      return effective_length(c->children[0]) + effective_length(c->children[1]);
    case ChartOp::PAR:
      return std::max(effective_length(c->children[0]),
                      effective_length(c->children[1]));
    case ChartOp::LOOP:
      return static_cast<uint32_t>(c->loop_count) * effective_length(c->children[0]);
    default:
      throw Error(Code::E_SHAPE, "no effective length for this construct");
  }
}

namespace {

void merge_instances(std::vector<std::string>& into,
                     const std::vector<std::string>& from) {
  for (const auto& i : from)
    if (std::find(into.begin(), into.end(), i) == into.end()) into.push_back(i);
}

// Appends `b` after `a` in time: b's ticks shift by a's tick_count, arrow
// occurrence indices by a's occurrence count.
Scesc concat_leaves(const Scesc& a, const Scesc& b, const std::string& name) {
  if (a.clock != b.clock)
    throw Error(Code::E_CLOCK_MISMATCH,
                "sequential composition of charts on different clocks ('" +
                    a.name + "', '" + b.name + "')");
  Scesc out;
  out.name = name;
  out.clock = a.clock;
  out.tick_count = a.tick_count + b.tick_count;
  out.occurrences = a.occurrences;
  for (EventOccurrence occ : b.occurrences) {
    occ.tick += a.tick_count;
    out.occurrences.push_back(std::move(occ));
  }
  out.arrows = a.arrows;
  uint32_t shift = static_cast<uint32_t>(a.occurrences.size());
  for (CausalityArrow ar : b.arrows)
    out.arrows.push_back({ar.source + shift, ar.target + shift});
  out.instances = a.instances;
  merge_instances(out.instances, b.instances);
  return out;
}

// Overlays `b` on the same ticks as `a` (parallel composition). Lengths must
// match unless `pad` allows the shorter chart to end early.
Scesc overlay_leaves(const Scesc& a, const Scesc& b, bool pad,
                     const std::string& name) {
  if (a.clock != b.clock)
    throw Error(Code::E_CLOCK_MISMATCH,
                "parallel composition of charts on different clocks ('" +
                    a.name + "', '" + b.name + "')");
  if (a.tick_count != b.tick_count && !pad)
    throw Error(Code::E_PAR_LENGTH,
                "parallel charts have different lengths (" +
                    std::to_string(a.tick_count) + " vs " +
                    std::to_string(b.tick_count) + ") and padding is off");
  Scesc out;
  out.name = name;
  out.clock = a.clock;
  out.tick_count = std::max(a.tick_count, b.tick_count);
  out.occurrences = a.occurrences;
  out.occurrences.insert(out.occurrences.end(), b.occurrences.begin(),
                         b.occurrences.end());
  out.arrows = a.arrows;
  uint32_t shift = static_cast<uint32_t>(a.occurrences.size());
  for (CausalityArrow ar : b.arrows)
    out.arrows.push_back({ar.source + shift, ar.target + shift});
  out.instances = a.instances;
  merge_instances(out.instances, b.instances);
  return out;
}

ChartPtr make_leaf(Scesc s, const std::string& name, int line) {
  auto n = std::make_shared<ChartNode>();
  n->op = ChartOp::LEAF;
  n->name = name;
  n->leaf = std::move(s);
  n->leaf.name = name;
  n->line = line;
  return n;
}

std::string derived_name(const ChartPtr& a, const ChartPtr& b, const char* sep) {
  std::string n0 = a->name.empty() ? std::string("sub") : a->name;
  std::string n1 = b->name.empty() ? std::string("sub") : b->name;
  return n0 + sep + n1;
}

ChartPtr rebuild(const ChartPtr& c, std::vector<ChartPtr> children) {
  bool same = true;
  for (size_t i = 0; i < children.size(); ++i)
    if (children[i] != c->children[i]) same = false;
  if (same) return c;
  auto n = std::make_shared<ChartNode>(*c);
  n->children = std::move(children);
  return n;
}

template <typename Rec>
ChartPtr flatten_with(const ChartPtr& c, Rec&& rec, bool merge_par_loop) {
  switch (c->op) {
    case ChartOp::LEAF:
      return c;
    case ChartOp::SEQ: {
      ChartPtr a = rec(c->children[0]);
      ChartPtr b = rec(c->children[1]);
      if (a->op == ChartOp::LEAF && b->op == ChartOp::LEAF) {
        std::string name = c->name.empty() ? derived_name(a, b, "_") : c->name;
        return make_leaf(concat_leaves(a->leaf, b->leaf, name), name, c->line);
      }
      return rebuild(c, {a, b});
    }
    case ChartOp::PAR: {
      ChartPtr a = rec(c->children[0]);
      ChartPtr b = rec(c->children[1]);
      if (merge_par_loop && a->op == ChartOp::LEAF && b->op == ChartOp::LEAF) {
        std::string name = c->name.empty() ? derived_name(a, b, "_par_") : c->name;
        return make_leaf(overlay_leaves(a->leaf, b->leaf, c->par_pad, name),
                         name, c->line);
      }
      return rebuild(c, {a, b});
    }
    case ChartOp::LOOP: {
      ChartPtr body = rec(c->children[0]);
      if (merge_par_loop && c->loop_count > 0 && body->op == ChartOp::LEAF) {
        std::string name = c->name;
        if (name.empty())
          name = (body->name.empty() ? "sub" : body->name) + "_x" +
                 std::to_string(c->loop_count);
        Scesc acc = body->leaf;
        for (uint64_t i = 1; i < c->loop_count; ++i)
          acc = concat_leaves(acc, body->leaf, name);
        acc.name = name;
        return make_leaf(std::move(acc), name, c->line);
      }
      return rebuild(c, {body});
    }
    case ChartOp::ALT:
    case ChartOp::IMPL: {
      ChartPtr a = rec(c->children[0]);
      ChartPtr b = rec(c->children[1]);
      return rebuild(c, {a, b});
    }
    case ChartOp::ASYNC: {
      std::vector<ChartPtr> kids;
      kids.reserve(c->children.size());
      for (const auto& k : c->children) kids.push_back(rec(k));
      return rebuild(c, std::move(kids));
    }
  }
  return c;
}

}  // namespace

ChartPtr flatten_seq(const ChartPtr& c) {
  return flatten_with(c, [](const ChartPtr& k) { return flatten_seq(k); }, false);
}

ChartPtr normalize_to_leaves(const ChartPtr& c) {
  return flatten_with(
      c, [](const ChartPtr& k) { return normalize_to_leaves(k); }, true);
}

}  // namespace cesc
