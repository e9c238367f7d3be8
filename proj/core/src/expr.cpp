#include "hhquad/expr.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <system_error>

#include "hhquad/errors.hpp"

namespace hhquad {

namespace {
constexpr int kMaxNestingDepth = 256;
}

std::string_view node_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::kConstant: return "number";
    case NodeKind::kVariable: return "x";
    case NodeKind::kNeg: return "neg";
    case NodeKind::kExp: return "exp";
    case NodeKind::kLog: return "log";
    case NodeKind::kSin: return "sin";
    case NodeKind::kCos: return "cos";
    case NodeKind::kSqrt: return "sqrt";
    case NodeKind::kAdd: return "+";
    case NodeKind::kSub: return "-";
    case NodeKind::kMul: return "*";
    case NodeKind::kDiv: return "/";
    case NodeKind::kPow: return "^";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr run() {
    skip_ws();
    if (pos_ >= text_.size()) {
      throw ParseError("empty expression", pos_);
    }
    const std::int32_t root = parse_expr(0);
    skip_ws();
    if (pos_ < text_.size()) {
      throw ParseError("unexpected trailing input", pos_);
    }
    return Expr(std::move(nodes_), root);
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::int32_t add_node(ExprNode node) {
    nodes_.push_back(node);
    return static_cast<std::int32_t>(nodes_.size()) - 1;
  }

  std::int32_t parse_expr(int depth) {
    std::int32_t lhs = parse_term(depth);
    skip_ws();
    while (!eof() && (peek() == '+' || peek() == '-')) {
      const NodeKind kind = peek() == '+' ? NodeKind::kAdd : NodeKind::kSub;
      const auto op_off = static_cast<std::uint32_t>(pos_++);
      const std::int32_t rhs = parse_term(depth);
      lhs = add_node({.kind = kind, .a = lhs, .b = rhs, .offset = op_off});
      skip_ws();
    }
    return lhs;
  }

  std::int32_t parse_term(int depth) {
    std::int32_t lhs = parse_factor(depth);
    skip_ws();
    while (!eof() && (peek() == '*' || peek() == '/')) {
      const NodeKind kind = peek() == '*' ? NodeKind::kMul : NodeKind::kDiv;
      const auto op_off = static_cast<std::uint32_t>(pos_++);
      const std::int32_t rhs = parse_factor(depth);
      lhs = add_node({.kind = kind, .a = lhs, .b = rhs, .offset = op_off});
      skip_ws();
    }
    return lhs;
  }

  std::int32_t parse_factor(int depth) {
    const std::int32_t base = parse_atom(depth);
    skip_ws();
    if (!eof() && peek() == '^') {
      const auto op_off = static_cast<std::uint32_t>(pos_++);
      const int exponent = parse_exponent();
      return add_node({.kind = NodeKind::kPow, .a = base, .exponent = exponent,
                       .offset = op_off});
    }
    return base;
  }

  std::int32_t parse_atom(int depth) {
    if (depth > kMaxNestingDepth) {
      throw ParseError("expression too deeply nested", pos_);
    }
    skip_ws();
    if (eof()) {
      throw ParseError("unexpected end of input", pos_);
    }
    const char c = peek();
    if (c == '(') {
      ++pos_;
      const std::int32_t inner = parse_expr(depth + 1);
      expect(')');
      return inner;
    }
    if (c == '-') {
      const auto off = static_cast<std::uint32_t>(pos_++);
      const std::int32_t child = parse_atom(depth + 1);
      return add_node({.kind = NodeKind::kNeg, .a = child, .offset = off});
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return parse_number();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      return parse_identifier(depth);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  void expect(char c) {
    skip_ws();
    if (eof() || peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  std::int32_t parse_number() {
    const std::size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!eof() && peek() == '.') {
      ++pos_;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if (!eof() && (peek() == 'e' || peek() == 'E')) {
      // Only consume the exponent part when it is well formed; otherwise the
      // 'e' is left for the identifier lexer to reject.
      std::size_t mark = pos_;
      ++pos_;
      if (!eof() && (peek() == '+' || peek() == '-')) ++pos_;
      if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        pos_ = mark;
      } else {
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
    }
    double value = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    const auto res = std::from_chars(first, last, value);
    if (res.ec == std::errc::result_out_of_range) {
      throw ParseError("number literal out of range", start);
    }
    if (res.ec != std::errc() || res.ptr != last) {
      throw ParseError("malformed number", start);
    }
    return add_node({.kind = NodeKind::kConstant, .value = value,
                     .offset = static_cast<std::uint32_t>(start)});
  }

  int parse_exponent() {
    skip_ws();
    const std::size_t start = pos_;
    if (!eof() && (peek() == '+' || peek() == '-')) ++pos_;
    const std::size_t digits_start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits_start) {
      throw ParseError("expected integer exponent", start);
    }
    // A fractional or scaled literal here is a grammar violation, not a
    // longer token: '^' takes a plain integer.
    if (!eof() && (peek() == '.' || peek() == 'e' || peek() == 'E')) {
      throw ParseError("non-integer exponent", start);
    }
    int value = 0;
    const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (res.ec != std::errc()) {
      throw ParseError("exponent out of range", start);
    }
    return value;
  }

  std::int32_t parse_identifier(int depth) {
    const std::size_t start = pos_;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    const auto off = static_cast<std::uint32_t>(start);
    if (name == "x") {
      return add_node({.kind = NodeKind::kVariable, .offset = off});
    }
    NodeKind kind;
    if (name == "exp") {
      kind = NodeKind::kExp;
    } else if (name == "log") {
      kind = NodeKind::kLog;
    } else if (name == "sin") {
      kind = NodeKind::kSin;
    } else if (name == "cos") {
      kind = NodeKind::kCos;
    } else if (name == "sqrt") {
      kind = NodeKind::kSqrt;
    } else {
      throw ParseError("unknown identifier '" + std::string(name) + "'", start);
    }
    skip_ws();
    if (eof() || peek() != '(') {
      throw ParseError("expected '(' after function name", pos_);
    }
    ++pos_;
    const std::int32_t arg = parse_expr(depth + 1);
    expect(')');
    return add_node({.kind = kind, .a = arg, .offset = off});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<ExprNode> nodes_;
};

Expr Expr::parse(std::string_view text) { return Parser(text).run(); }

namespace {

bool is_atom_form(NodeKind k) {
  switch (k) {
    case NodeKind::kConstant:
    case NodeKind::kVariable:
    case NodeKind::kNeg:
    case NodeKind::kExp:
    case NodeKind::kLog:
    case NodeKind::kSin:
    case NodeKind::kCos:
    case NodeKind::kSqrt:
      return true;
    default:
      return false;
  }
}

bool is_add_sub(NodeKind k) { return k == NodeKind::kAdd || k == NodeKind::kSub; }
bool is_mul_div(NodeKind k) { return k == NodeKind::kMul || k == NodeKind::kDiv; }

void append_double(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

void print_node(const Expr& e, int idx, std::string& out);

void print_child(const Expr& e, int idx, bool parens, std::string& out) {
  if (parens) out.push_back('(');
  print_node(e, idx, out);
  if (parens) out.push_back(')');
}

void print_node(const Expr& e, int idx, std::string& out) {
  const ExprNode& n = e.node(idx);
  switch (n.kind) {
    case NodeKind::kConstant:
      append_double(out, n.value);
      return;
    case NodeKind::kVariable:
      out.push_back('x');
      return;
    case NodeKind::kNeg:
      out.push_back('-');
      print_child(e, n.a, !is_atom_form(e.node(n.a).kind), out);
      return;
    case NodeKind::kExp:
    case NodeKind::kLog:
    case NodeKind::kSin:
    case NodeKind::kCos:
    case NodeKind::kSqrt:
      out.append(node_name(n.kind));
      out.push_back('(');
      print_node(e, n.a, out);
      out.push_back(')');
      return;
    case NodeKind::kAdd:
    case NodeKind::kSub: {
      print_node(e, n.a, out);
      out.append(n.kind == NodeKind::kAdd ? " + " : " - ");
      print_child(e, n.b, is_add_sub(e.node(n.b).kind), out);
      return;
    }
    case NodeKind::kMul:
    case NodeKind::kDiv: {
      print_child(e, n.a, is_add_sub(e.node(n.a).kind), out);
      out.push_back(n.kind == NodeKind::kMul ? '*' : '/');
      const NodeKind rk = e.node(n.b).kind;
      print_child(e, n.b, is_add_sub(rk) || is_mul_div(rk), out);
      return;
    }
    case NodeKind::kPow: {
      const NodeKind bk = e.node(n.a).kind;
      const bool parens = !(is_atom_form(bk) && bk != NodeKind::kNeg);
      print_child(e, n.a, parens, out);
      out.push_back('^');
      out.append(std::to_string(n.exponent));
      return;
    }
  }
}

}  // namespace

std::string Expr::to_string() const {
  std::string out;
  out.reserve(nodes_.size() * 4);
  print_node(*this, root_, out);
  return out;
}

namespace {

bool identical_nodes(const Expr& x, int ix, const Expr& y, int iy) {
  const ExprNode& a = x.node(ix);
  const ExprNode& b = y.node(iy);
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case NodeKind::kConstant:
      return a.value == b.value;
    case NodeKind::kVariable:
      return true;
    case NodeKind::kPow:
      return a.exponent == b.exponent && identical_nodes(x, a.a, y, b.a);
    case NodeKind::kNeg:
    case NodeKind::kExp:
    case NodeKind::kLog:
    case NodeKind::kSin:
    case NodeKind::kCos:
    case NodeKind::kSqrt:
      return identical_nodes(x, a.a, y, b.a);
    default:
      return identical_nodes(x, a.a, y, b.a) && identical_nodes(x, a.b, y, b.b);
  }
}

}  // namespace

bool Expr::identical(const Expr& other) const {
  return identical_nodes(*this, root_, other, other.root_);
}

}  // namespace hhquad
