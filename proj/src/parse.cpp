#include "cesc/parse.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace cesc {

namespace {

const std::set<std::string> kKeywords = {
    "event", "prop",    "clock", "instance", "chart", "on",
    "ticks", "arrow",   "absent", "seq",     "par",   "alt",
    "loop",  "implies", "async", "pad",      "top",   "mode",
    "detect", "assert", "true",  "false"};

enum class Tok { IDENT, INT, PUNCT, END };

struct Token {
  Tok kind = Tok::END;
  std::string text;
  uint64_t value = 0;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

  // Raw scan to the next ']' (guard bodies are handed to parse_expr whole).
  std::string raw_until_bracket() {
    // Restart from the position of the current token.
    pos_ = tok_pos_;
    line_ = tok_.line;
    col_ = tok_.col;
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != ']') {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      out += text_[pos_++];
    }
    if (pos_ >= text_.size())
      throw Error(Code::E_PARSE, "unterminated guard, expected ']'", line_, col_);
    advance();  // re-tokenize from the ']'
    return out;
  }

 private:
  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++pos_;
        ++line_;
        col_ = 1;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
        ++col_;
      } else {
        break;
      }
    }
  }

  void advance() {
    skip_trivia();
    tok_pos_ = pos_;
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_.kind = Tok::END;
      tok_.text.clear();
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
        ++col_;
      }
      tok_.kind = Tok::IDENT;
      tok_.text = text_.substr(start, pos_ - start);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++col_;
      }
      tok_.kind = Tok::INT;
      tok_.text = text_.substr(start, pos_ - start);
      tok_.value = std::stoull(tok_.text);
      return;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      tok_.kind = Tok::PUNCT;
      tok_.text = "->";
      pos_ += 2;
      col_ += 2;
      return;
    }
    tok_.kind = Tok::PUNCT;
    tok_.text = std::string(1, c);
    ++pos_;
    ++col_;
  }

  const std::string& text_;
  size_t pos_ = 0;
  size_t tok_pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

// Within-chart arrow endpoint as written; resolved once the body is closed.
struct PendingArrow {
  std::string source_event;
  std::optional<uint32_t> source_tick;
  std::string target_event;
  std::optional<uint32_t> target_tick;
  int line = 0;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  SpecFile parse() {
    while (lex_.peek().kind != Tok::END) statement();
    finish_top();
    return std::move(spec_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    const Token& t = lex_.peek();
    throw Error(Code::E_PARSE, msg, t.line, t.col);
  }

  bool at_punct(const std::string& p) {
    return lex_.peek().kind == Tok::PUNCT && lex_.peek().text == p;
  }

  bool at_ident(const std::string& word) {
    return lex_.peek().kind == Tok::IDENT && lex_.peek().text == word;
  }

  void expect_punct(const std::string& p) {
    if (!at_punct(p)) fail("expected '" + p + "'");
    lex_.next();
  }

  Token expect_ident() {
    if (lex_.peek().kind != Tok::IDENT) fail("expected identifier");
    return lex_.next();
  }

  Token expect_name() {
    Token t = expect_ident();
    if (kKeywords.count(t.text))
      throw Error(Code::E_PARSE, "'" + t.text + "' is a reserved word", t.line,
                  t.col);
    return t;
  }

  uint64_t expect_int() {
    if (lex_.peek().kind != Tok::INT) fail("expected integer");
    return lex_.next().value;
  }

  void statement() {
    Token t = expect_ident();
    if (t.text == "event" || t.text == "prop") {
      SymbolKind kind = t.text == "event" ? SymbolKind::EVENT : SymbolKind::PROP;
      do {
        Token n = expect_name();
        spec_.symtab.declare_symbol(n.text, kind, n.line);
      } while (at_punct(",") && (lex_.next(), true));
      expect_punct(";");
    } else if (t.text == "clock") {
      do {
        Token n = expect_name();
        spec_.symtab.declare_clock(n.text, n.line);
      } while (at_punct(",") && (lex_.next(), true));
      expect_punct(";");
    } else if (t.text == "instance") {
      do {
        Token n = expect_ident();
        if (kKeywords.count(n.text) && n.text != "env")
          throw Error(Code::E_PARSE, "'" + n.text + "' is a reserved word",
                      n.line, n.col);
        spec_.symtab.register_instance(n.text);
      } while (at_punct(",") && (lex_.next(), true));
      expect_punct(";");
    } else if (t.text == "chart") {
      chart_def();
    } else if (t.text == "top") {
      Token n = expect_name();
      if (!top_.empty())
        throw Error(Code::E_PARSE, "duplicate 'top' directive", n.line, n.col);
      if (!find_chart(n.text))
        throw Error(Code::E_UNKNOWN_REF, "unknown chart '" + n.text + "'",
                    n.line, n.col);
      top_ = n.text;
      expect_punct(";");
    } else if (t.text == "mode") {
      Token m = expect_ident();
      if (m.text == "detect")
        spec_.mode = Mode::DETECT;
      else if (m.text == "assert")
        spec_.mode = Mode::ASSERT;
      else
        throw Error(Code::E_PARSE, "mode must be 'detect' or 'assert'", m.line,
                    m.col);
      expect_punct(";");
    } else {
      throw Error(Code::E_PARSE, "unexpected '" + t.text + "'", t.line, t.col);
    }
  }

  ChartPtr find_chart(const std::string& name) const {
    for (const auto& [n, c] : spec_.charts)
      if (n == name) return c;
    return nullptr;
  }

  void chart_def() {
    Token name = expect_name();
    if (find_chart(name.text))
      throw Error(Code::E_DUPLICATE_NAME, "chart '" + name.text +
                      "' already defined", name.line, name.col);
    ChartPtr node;
    if (at_ident("on")) {
      node = leaf_chart(name.text);
    } else if (at_punct("=")) {
      lex_.next();
      node = chart_expr(name.text);
      expect_punct(";");
    } else {
      fail("expected 'on' or '=' after chart name");
    }
    spec_.charts.emplace_back(name.text, node);
  }

  ChartPtr leaf_chart(const std::string& name) {
    lex_.next();  // on
    Token clk = expect_name();
    auto clock = spec_.symtab.find_clock(clk.text);
    if (!clock)
      throw Error(Code::E_UNDECLARED_SYMBOL, "undeclared clock '" + clk.text + "'",
                  clk.line, clk.col);
    if (!at_ident("ticks")) fail("expected 'ticks'");
    lex_.next();
    Token n_tok = lex_.peek();
    uint64_t n = expect_int();
    if (n < 1)
      throw Error(Code::E_PARSE, "tick count must be at least 1", n_tok.line,
                  n_tok.col);

    auto node = std::make_shared<ChartNode>();
    node->op = ChartOp::LEAF;
    node->name = name;
    node->line = n_tok.line;
    Scesc& chart = node->leaf;
    chart.name = name;
    chart.clock = *clock;
    chart.tick_count = static_cast<uint32_t>(n);

    std::vector<PendingArrow> arrows;
    expect_punct("{");
    while (!at_punct("}")) {
      if (at_punct("@")) {
        lex_.next();
        uint32_t tick = static_cast<uint32_t>(expect_int());
        do {
          chart.occurrences.push_back(occurrence(tick, chart));
        } while (at_punct(",") && (lex_.next(), true));
        expect_punct(";");
      } else if (at_ident("arrow")) {
        lex_.next();
        PendingArrow pa;
        pa.line = lex_.peek().line;
        std::tie(pa.source_event, pa.source_tick) = event_ref();
        expect_punct("->");
        std::tie(pa.target_event, pa.target_tick) = event_ref();
        expect_punct(";");
        arrows.push_back(std::move(pa));
      } else {
        fail("expected '@<tick>', 'arrow' or '}'");
      }
    }
    lex_.next();  // }

    for (const auto& pa : arrows) {
      uint32_t src = resolve_occurrence(chart, pa.source_event, pa.source_tick,
                                        pa.line);
      uint32_t dst = resolve_occurrence(chart, pa.target_event, pa.target_tick,
                                        pa.line);
      chart.arrows.push_back({src, dst});
    }
    return node;
  }

  EventOccurrence occurrence(uint32_t tick, const Scesc& chart) {
    EventOccurrence occ;
    occ.tick = tick;
    if (at_punct("[")) {
      Token open = lex_.next();
      std::string body = lex_.raw_until_bracket();
      try {
        occ.guard = parse_expr(body, spec_.symtab);
      } catch (const Error& e) {
        throw Error(e.code(), e.what(), open.line, open.col);
      }
      expect_punct(":");
    }
    if (at_ident("absent")) {
      lex_.next();
      occ.polarity = Polarity::ABSENT;
    }
    Token inst = expect_ident();
    if (kKeywords.count(inst.text))
      throw Error(Code::E_PARSE, "'" + inst.text + "' is a reserved word",
                  inst.line, inst.col);
    expect_punct("!");
    Token ev = expect_name();
    auto id = spec_.symtab.find_symbol(ev.text);
    if (!id || spec_.symtab.symbol(*id).kind != SymbolKind::EVENT)
      throw Error(Code::E_UNDECLARED_SYMBOL,
                  "'" + ev.text + "' is not a declared event", ev.line, ev.col);
    occ.event = *id;
    occ.instance = inst.text;
    spec_.symtab.register_instance(inst.text);
    (void)chart;
    return occ;
  }

  std::pair<std::string, std::optional<uint32_t>> event_ref() {
    Token ev = expect_name();
    std::optional<uint32_t> tick;
    if (at_punct("@")) {
      lex_.next();
      tick = static_cast<uint32_t>(expect_int());
    }
    return {ev.text, tick};
  }

  uint32_t resolve_occurrence(const Scesc& chart, const std::string& event,
                              std::optional<uint32_t> tick, int line) {
    auto id = spec_.symtab.find_symbol(event);
    if (!id)
      throw Error(Code::E_UNKNOWN_REF, "unknown event '" + event + "' in arrow",
                  line);
    std::vector<uint32_t> hits;
    for (uint32_t i = 0; i < chart.occurrences.size(); ++i) {
      const auto& occ = chart.occurrences[i];
      if (occ.event == *id && occ.polarity == Polarity::PRESENT &&
          (!tick || occ.tick == *tick))
        hits.push_back(i);
    }
    if (hits.empty())
      throw Error(Code::E_UNKNOWN_REF,
                  "arrow endpoint '" + event + "' has no matching present occurrence",
                  line);
    if (hits.size() > 1)
      throw Error(Code::E_AMBIGUOUS_REF,
                  "arrow endpoint '" + event +
                      "' is ambiguous; qualify it as '" + event + "@<tick>'",
                  line);
    return hits[0];
  }

  ChartPtr chart_expr(const std::string& name) {
    Token t = expect_ident();
    auto node = std::make_shared<ChartNode>();
    node->name = name;
    node->line = t.line;
    if (t.text == "seq" || t.text == "par" || t.text == "alt" ||
        t.text == "implies") {
      node->op = t.text == "seq"   ? ChartOp::SEQ
                 : t.text == "par" ? ChartOp::PAR
                 : t.text == "alt" ? ChartOp::ALT
                                   : ChartOp::IMPL;
      expect_punct("(");
      node->children.push_back(chart_arg());
      expect_punct(",");
      node->children.push_back(chart_arg());
      expect_punct(")");
      if (node->op == ChartOp::PAR && at_ident("pad")) {
        lex_.next();
        node->par_pad = true;
      }
    } else if (t.text == "loop") {
      node->op = ChartOp::LOOP;
      expect_punct("(");
      if (at_punct("*")) {
        lex_.next();
        node->loop_count = 0;
      } else {
        Token c = lex_.peek();
        node->loop_count = expect_int();
        if (node->loop_count < 1)
          throw Error(Code::E_PARSE, "loop count must be at least 1 (or '*')",
                      c.line, c.col);
      }
      expect_punct(",");
      node->children.push_back(chart_arg());
      expect_punct(")");
    } else if (t.text == "async") {
      node->op = ChartOp::ASYNC;
      expect_punct("(");
      node->children.push_back(chart_arg());
      do {
        expect_punct(",");
        node->children.push_back(chart_arg());
      } while (at_punct(","));
      expect_punct(")");
      if (at_punct("{")) {
        lex_.next();
        while (!at_punct("}")) {
          if (!at_ident("arrow")) fail("expected 'arrow' or '}'");
          lex_.next();
          node->cross_arrows.push_back(cross_arrow(*node));
        }
        lex_.next();
      }
    } else {
      fail("expected chart expression ('" + t.text + "' is not a combinator)");
    }
    return node;
  }

  ChartPtr chart_arg() {
    if (lex_.peek().kind != Tok::IDENT) fail("expected chart name or expression");
    const std::string& word = lex_.peek().text;
    if (word == "seq" || word == "par" || word == "alt" || word == "loop" ||
        word == "implies" || word == "async")
      return chart_expr("");
    Token n = expect_name();
    ChartPtr c = find_chart(n.text);
    if (!c)
      throw Error(Code::E_UNKNOWN_REF, "unknown chart '" + n.text + "'", n.line,
                  n.col);
    return c;
  }

  CrossArrow cross_arrow(const ChartNode& async_node) {
    CrossArrow ca;
    Token src_chart = expect_name();
    ca.line = src_chart.line;
    ca.source_child = child_index(async_node, src_chart);
    expect_punct(".");
    auto [sev, stick] = event_ref();
    ca.source_event = symbol_or_fail(sev, src_chart.line);
    ca.source_tick = stick;
    expect_punct("->");
    Token dst_chart = expect_name();
    ca.target_child = child_index(async_node, dst_chart);
    expect_punct(".");
    auto [tev, ttick] = event_ref();
    ca.target_event = symbol_or_fail(tev, dst_chart.line);
    ca.target_tick = ttick;
    expect_punct(";");
    return ca;
  }

  uint32_t child_index(const ChartNode& async_node, const Token& name) {
    for (uint32_t i = 0; i < async_node.children.size(); ++i)
      if (async_node.children[i]->name == name.text) return i;
    throw Error(Code::E_UNKNOWN_REF,
                "'" + name.text + "' does not name a child of this async block",
                name.line, name.col);
  }

  SymbolId symbol_or_fail(const std::string& name, int line) {
    auto id = spec_.symtab.find_symbol(name);
    if (!id)
      throw Error(Code::E_UNKNOWN_REF, "unknown event '" + name + "'", line);
    return *id;
  }

  void finish_top() {
    if (spec_.charts.empty())
      throw Error(Code::E_PARSE, "no charts defined");
    if (top_.empty()) {
      if (spec_.charts.size() > 1)
        throw Error(Code::E_PARSE,
                    "multiple charts defined; add a 'top <name>;' directive");
      top_ = spec_.charts.front().first;
    }
    spec_.top = top_;
  }

  Lexer lex_;
  SpecFile spec_;
  std::string top_;
};

}  // namespace

SpecFile parse_spec(const std::string& text) { return Parser(text).parse(); }

SpecFile load_spec(const std::string& text) {
  SpecFile spec = parse_spec(text);
  Diagnostics diags = validate(spec);
  if (!diags.empty())
    throw Error(diags[0].code, diags[0].message, diags[0].line);
  return spec;
}

SpecFile load_spec_file(const std::string& path) {
  return load_spec(read_file(path));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Code::E_IO, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Code::E_IO, "cannot write '" + path + "'");
  out << content;
}

// --- printing --------------------------------------------------------------

namespace {

void print_chart_ref(const SpecFile& spec, const ChartPtr& node,
                     std::string& out);

void print_chart_expr(const SpecFile& spec, const ChartPtr& node,
                      std::string& out) {
  switch (node->op) {
    case ChartOp::LEAF:
      // Leaves inside expressions are always references to named charts.
      out += node->name;
      return;
    case ChartOp::SEQ:
    case ChartOp::PAR:
    case ChartOp::ALT:
    case ChartOp::IMPL: {
      const char* kw = node->op == ChartOp::SEQ   ? "seq"
                       : node->op == ChartOp::PAR ? "par"
                       : node->op == ChartOp::ALT ? "alt"
                                                  : "implies";
      out += kw;
      out += '(';
      print_chart_ref(spec, node->children[0], out);
      out += ", ";
      print_chart_ref(spec, node->children[1], out);
      out += ')';
      if (node->op == ChartOp::PAR && node->par_pad) out += " pad";
      return;
    }
    case ChartOp::LOOP:
      out += "loop(";
      out += node->loop_count == 0 ? "*" : std::to_string(node->loop_count);
      out += ", ";
      print_chart_ref(spec, node->children[0], out);
      out += ')';
      return;
    case ChartOp::ASYNC: {
      out += "async(";
      for (size_t i = 0; i < node->children.size(); ++i) {
        if (i) out += ", ";
        print_chart_ref(spec, node->children[i], out);
      }
      out += ')';
      if (!node->cross_arrows.empty()) {
        out += " {\n";
        for (const auto& ca : node->cross_arrows) {
          out += "  arrow " + node->children[ca.source_child]->name + "." +
                 spec.symtab.symbol(ca.source_event).name;
          if (ca.source_tick) out += "@" + std::to_string(*ca.source_tick);
          out += " -> " + node->children[ca.target_child]->name + "." +
                 spec.symtab.symbol(ca.target_event).name;
          if (ca.target_tick) out += "@" + std::to_string(*ca.target_tick);
          out += ";\n";
        }
        out += '}';
      }
      return;
    }
  }
}

void print_chart_ref(const SpecFile& spec, const ChartPtr& node,
                     std::string& out) {
  if (!node->name.empty() && spec.find_chart(node->name) == node) {
    out += node->name;
    return;
  }
  print_chart_expr(spec, node, out);
}

void print_leaf(const SpecFile& spec, const std::string& name,
                const Scesc& chart, std::string& out) {
  out += "chart " + name + " on " + spec.symtab.clock_name(chart.clock) +
         " ticks " + std::to_string(chart.tick_count) + " {\n";
  for (const auto& occ : chart.occurrences) {
    out += "  @" + std::to_string(occ.tick) + " ";
    if (occ.guard) out += "[" + occ.guard->str(&spec.symtab) + "]: ";
    if (occ.polarity == Polarity::ABSENT) out += "absent ";
    out += occ.instance + "!" + spec.symtab.symbol(occ.event).name + ";\n";
  }
  for (const auto& ar : chart.arrows) {
    const auto& s = chart.occurrences[ar.source];
    const auto& t = chart.occurrences[ar.target];
    out += "  arrow " + spec.symtab.symbol(s.event).name + "@" +
           std::to_string(s.tick) + " -> " + spec.symtab.symbol(t.event).name +
           "@" + std::to_string(t.tick) + ";\n";
  }
  out += "}\n";
}

}  // namespace

std::string print_spec(const SpecFile& spec) {
  std::string out;
  // Symbol declarations grouped by consecutive runs of the same kind, so the
  // declaration order (and thus the ids) round-trips.
  const auto& syms = spec.symtab.symbols();
  for (size_t i = 0; i < syms.size();) {
    size_t j = i;
    while (j < syms.size() && syms[j].kind == syms[i].kind) ++j;
    out += syms[i].kind == SymbolKind::EVENT ? "event " : "prop ";
    for (size_t k = i; k < j; ++k) {
      if (k > i) out += ", ";
      out += syms[k].name;
    }
    out += ";\n";
    i = j;
  }
  if (spec.symtab.clock_count() > 0) {
    out += "clock ";
    for (size_t i = 0; i < spec.symtab.clock_count(); ++i) {
      if (i) out += ", ";
      out += spec.symtab.clocks()[i];
    }
    out += ";\n";
  }
  if (!spec.symtab.instances().empty()) {
    out += "instance ";
    for (size_t i = 0; i < spec.symtab.instances().size(); ++i) {
      if (i) out += ", ";
      out += spec.symtab.instances()[i];
    }
    out += ";\n";
  }
  for (const auto& [name, node] : spec.charts) {
    out += "\n";
    if (node->op == ChartOp::LEAF) {
      print_leaf(spec, name, node->leaf, out);
    } else {
      out += "chart " + name + " = ";
      print_chart_expr(spec, node, out);
      out += ";\n";
    }
  }
  out += "\nmode ";
  out += spec.mode == Mode::DETECT ? "detect" : "assert";
  out += ";\ntop " + spec.top + ";\n";
  return out;
}

}  // namespace cesc
