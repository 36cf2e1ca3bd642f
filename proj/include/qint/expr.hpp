#pragma once

#include "qint/quantum.hpp"
#include "qint/setops.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>

namespace qint {

/// Syntax error. `offset` is the byte position in the source text.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(std::size_t off, const std::string& msg)
      : std::runtime_error("parse error at byte " + std::to_string(off) + ": " + msg),
        offset(off) {}
};

/// Static type error. `path` addresses the offending node from the root
/// `$` through child labels, e.g. "$.rhs.arg1".
struct TypeError : std::runtime_error {
  std::string path;
  TypeError(std::string p, const std::string& msg)
      : std::runtime_error("type error at " + p + ": " + msg), path(std::move(p)) {}
};

/// Domain error raised while evaluating the node at `path`.
struct EvalError : std::runtime_error {
  std::string path;
  EvalError(std::string p, const std::string& msg)
      : std::runtime_error("error at " + p + ": " + msg), path(std::move(p)) {}
};

/// Result of evaluating an expression.
using Value = std::variant<Int, Rational, FracPoly, IntSet, QuantumNumber>;

/// A parsed and statically typed expression.
///
/// Grammar, loosest binding first ((+) and (*) are single tokens):
///   expr      := qmul   { "(+)" qmul }        quantum addition / direct sum
///   qmul      := union  { "(*)" union }       quantum multiplication
///   union     := sum    { "u" sum }           set union
///   sum       := shift  { ("+"|"-") shift }   sumset / polynomial sum
///   shift     := scale  [ "t+" shift ]        translation (right assoc)
///   scale     := unary  { "*" unary }         dilation / polynomial product
///   unary     := "-" unary | power
///   power     := primary { "^" primary }
///   primary   := integer | integer "/" integer | "q" | "{" ints "}"
///              | "[" expr "]" | "(" expr ")"
///              | ("qint"|"qrat"|"genfun"|"subst") "(" expr {"," expr} ")"
///
/// Operators resolve on the operand types: "(+)" is quantum addition on
/// quantum numbers and direct sum on sets; "*" is dilation when the left
/// side is an integer and the right a set, polynomial multiplication
/// otherwise; "+" is sumset on sets, polynomial addition otherwise.
class Expr {
 public:
  Expr(Expr&&) noexcept;
  Expr& operator=(Expr&&) noexcept;
  ~Expr();

  /// True when the root node is a quantum-number operator application;
  /// such results display as "[x]_q = <canonical>".
  bool top_is_quantum_op() const;

  struct Node;
  explicit Expr(std::unique_ptr<Node> root);
  const Node& root() const { return *root_; }

 private:
  std::unique_ptr<Node> root_;
};

/// Parses and type-checks. Throws ParseError (with byte offset) or
/// TypeError (with node path).
Expr parse_expr(const std::string& src);

/// Bottom-up evaluation. Quantum operators run their built-in identity
/// verification. Throws EvalError with the node path on domain errors.
Value eval_expr(const Expr& e);

/// Canonical rendering of a value (no "[x]_q =" prefix).
std::string render_value(const Value& v);

/// Full display line: quantum results of operator applications render as
/// "[x]_q = <canonical>", everything else as render_value.
std::string render_display(const Expr& e, const Value& v);

/// Parses flag text that must denote a polynomial (integers and rationals
/// are admitted as constants). Throws ParseError/TypeError/EvalError.
FracPoly parse_poly_text(const std::string& src);

/// Parses flag text that must denote a set.
IntSet parse_set_text(const std::string& src);

}  // namespace qint
