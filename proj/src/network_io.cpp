#include "bsnet/network_io.hpp"

#include <unordered_map>
#include <vector>

#include "bsnet/error.hpp"

namespace bsnet {

namespace {

bool is_name_start(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
bool is_name_char(char c) { return is_name_start(c) || (c >= '0' && c <= '9') || c == '\''; }

struct Line {
  std::string_view text;
  std::size_t number;
};

class ExprParser {
 public:
  ExprParser(Line line, std::size_t offset, const std::unordered_map<std::string_view, std::size_t>& names)
      : line_(line), pos_(offset), names_(names) {}

  Expr parse_all() {
    Expr e = parse_or();
    skip_ws();
    if (pos_ < line_.text.size()) throw error("unexpected '" + std::string(1, line_.text[pos_]) + "'");
    return e;
  }

 private:
  ParseError error(const std::string& msg) const { return ParseError(msg, line_.number, pos_ + 1); }

  void skip_ws() {
    while (pos_ < line_.text.size() && (line_.text[pos_] == ' ' || line_.text[pos_] == '\t')) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < line_.text.size() && line_.text[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  template <typename Next>
  Expr parse_chain(char op, Next next, Expr (*build)(std::vector<Expr>)) {
    std::vector<Expr> items{next()};
    while (accept(op)) items.push_back(next());
    return items.size() == 1 ? items.front() : build(std::move(items));
  }

  Expr parse_or() {
    return parse_chain('|', [this] { return parse_xor(); }, &Expr::disjunction);
  }
  Expr parse_xor() {
    return parse_chain('^', [this] { return parse_and(); }, &Expr::exclusive_or);
  }
  Expr parse_and() {
    return parse_chain('&', [this] { return parse_unary(); }, &Expr::conjunction);
  }

  Expr parse_unary() {
    skip_ws();
    if (pos_ >= line_.text.size()) throw error("expression expected");
    const char c = line_.text[pos_];
    if (c == '!') {
      ++pos_;
      return Expr::negation(parse_unary());
    }
    if (c == '(') {
      ++pos_;
      Expr inner = parse_or();
      if (!accept(')')) throw error("expected ')'");
      return inner;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      if (pos_ < line_.text.size() && is_name_char(line_.text[pos_])) throw error("malformed literal");
      return Expr::constant(c == '1');
    }
    if (is_name_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < line_.text.size() && is_name_char(line_.text[pos_])) ++pos_;
      const std::string_view name = line_.text.substr(start, pos_ - start);
      auto it = names_.find(name);
      if (it == names_.end()) {
        pos_ = start;
        throw error("undefined component '" + std::string(name) + "'");
      }
      return Expr::variable(it->second);
    }
    throw error("unexpected '" + std::string(1, c) + "'");
  }

  Line line_;
  std::size_t pos_;
  const std::unordered_map<std::string_view, std::size_t>& names_;
};

}  // namespace

BooleanNetwork parse_bn(std::string_view text) {
  struct Definition {
    Line line;
    std::string_view name;
    std::size_t body;
  };
  std::vector<Definition> defs;
  std::unordered_map<std::string_view, std::size_t> names;

  std::size_t number = 0;
  for (std::size_t start = 0; start <= text.size();) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::size_t p = raw.find_first_not_of(" \t");
    if (p == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    Line line{raw, number};
    if (!is_name_start(raw[p])) throw ParseError("component name expected", number, p + 1);
    const std::size_t name_start = p;
    while (p < raw.size() && is_name_char(raw[p])) ++p;
    std::string_view name = raw.substr(name_start, p - name_start);
    p = raw.find_first_not_of(" \t", p);
    if (p == std::string_view::npos || raw.substr(p, 2) != ":=") {
      throw ParseError("expected ':='", number, p == std::string_view::npos ? raw.size() + 1 : p + 1);
    }
    if (!names.emplace(name, defs.size()).second) {
      throw ParseError("duplicate definition of '" + std::string(name) + "'", number, name_start + 1);
    }
    defs.push_back({line, name, p + 2});
    if (end == text.size()) break;
  }

  std::vector<std::string> component_names;
  std::vector<Expr> locals;
  for (const auto& def : defs) {
    component_names.emplace_back(def.name);
    locals.push_back(ExprParser(def.line, def.body, names).parse_all());
  }
  return BooleanNetwork(std::move(component_names), std::move(locals));
}

namespace {

int precedence(Expr::Op op) {
  switch (op) {
    case Expr::Op::disjunction:
      return 1;
    case Expr::Op::exclusive_or:
      return 2;
    case Expr::Op::conjunction:
      return 3;
    default:
      return 4;
  }
}

void write_expr(const Expr& e, const BooleanNetwork& f, std::string& out) {
  switch (e.op()) {
    case Expr::Op::constant:
      out += e.value() ? '1' : '0';
      return;
    case Expr::Op::variable:
      out += f.name(e.index());
      return;
    case Expr::Op::negation: {
      out += '!';
      const Expr& child = e.operands()[0];
      const bool wrap = precedence(child.op()) < 4;
      if (wrap) out += '(';
      write_expr(child, f, out);
      if (wrap) out += ')';
      return;
    }
    default: {
      const char* sep = e.op() == Expr::Op::conjunction ? " & " : e.op() == Expr::Op::disjunction ? " | " : " ^ ";
      bool first = true;
      for (const Expr& child : e.operands()) {
        if (!first) out += sep;
        first = false;
        // equal precedence is wrapped too so nesting survives a round trip
        const bool wrap = precedence(child.op()) <= precedence(e.op());
        if (wrap) out += '(';
        write_expr(child, f, out);
        if (wrap) out += ')';
      }
    }
  }
}

}  // namespace

std::string format_expr(const Expr& e, const BooleanNetwork& f) {
  std::string out;
  write_expr(e, f, out);
  return out;
}

std::string serialize_bn(const BooleanNetwork& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    out += f.name(i);
    out += " := ";
    write_expr(f.local(i), f, out);
    out += '\n';
  }
  return out;
}

}  // namespace bsnet
