#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hhquad/interval.hpp"
#include "hhquad/jet.hpp"

namespace hhquad {

enum class NodeKind : std::uint8_t {
  kConstant,
  kVariable,
  kNeg,
  kExp,
  kLog,
  kSin,
  kCos,
  kSqrt,
  kAdd,
  kSub,
  kMul,
  kDiv,
  kPow,
};

std::string_view node_name(NodeKind kind);

struct ExprNode {
  NodeKind kind;
  std::int32_t a = -1;        // first child (unary operand / binary lhs / pow base)
  std::int32_t b = -1;        // second child (binary rhs)
  double value = 0.0;         // kConstant
  int exponent = 0;           // kPow
  std::uint32_t offset = 0;   // position of the node's token in the source text
};

/// Parsed univariate expression over the single variable `x`.
///
/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' integer)?
///   atom   := number | 'x' | func '(' expr ')' | '(' expr ')' | '-' atom
///   func   := exp | log | sin | cos | sqrt
///
/// Numbers are decimal literals with an optional exponent part; pow
/// exponents must be (optionally signed) integer literals. Whitespace is
/// insignificant between tokens.
///
/// Nodes are stored in a flat arena in evaluation order: every child index
/// is smaller than its parent's, and the root is the last node.
class Expr {
 public:
  /// Throws ParseError (with the byte offset of the failure) on bad input.
  static Expr parse(std::string_view text);

  /// Canonical text form. Reparsing it yields a structurally identical
  /// tree, so printing is a fixed point of print-of-parse.
  std::string to_string() const;

  int size() const { return static_cast<int>(nodes_.size()); }
  int root() const { return root_; }
  const ExprNode& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }

  bool identical(const Expr& other) const;

 private:
  friend class Parser;
  Expr(std::vector<ExprNode> nodes, std::int32_t root)
      : nodes_(std::move(nodes)), root_(root) {}

  std::vector<ExprNode> nodes_;
  std::int32_t root_ = -1;
};

/// Point evaluation. Throws DomainError (naming the offending node) for
/// log/sqrt/division domain violations.
double eval_real(const Expr& f, double x);

/// Range enclosure: for every x in X, eval_real(f, x) lies in the result.
/// Tightness is not promised (dependency widening is allowed).
Interval eval_interval(const Expr& f, const Interval& X);

/// Taylor jet of f at x0: coeffs[k] = f^(k)(x0)/k! for k <= order.
Jet<double> eval_jet(const Expr& f, double x0, int order);

/// Interval jet: coefficient k encloses f^(k)(xi)/k! for every xi in x0.
Jet<Interval> eval_jet(const Expr& f, const Interval& x0, int order);

}  // namespace hhquad
