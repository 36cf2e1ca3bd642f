#include "qint/expr.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

namespace qint {

namespace {

// Every set flowing through the evaluator keeps |element| <= kSetBound, so
// one sumset never overflows long long. Dilations and translations are
// range-checked in 128-bit arithmetic before they run.
constexpr long long kSetBound = 1LL << 61;
constexpr long long kIntervalBound = 1'000'000;
constexpr long long kExpandBound = 1'000'000;   // largest [n]_q expansion
constexpr std::size_t kSumsetPairBound = 25'000'000;

enum class Tok {
  Integer,
  Ident,
  QAddTok,
  QMulTok,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  TranslateTok,
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Comma,
  End
};

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = src.size();
  while (i < n) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < n && std::isdigit(static_cast<unsigned char>(src[j]))) {
        ++j;
      }
      out.push_back({Tok::Integer, start, src.substr(i, j - i)});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < n && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
        ++j;
      }
      std::string word = src.substr(i, j - i);
      if (word == "t" && j < n && src[j] == '+') {
        out.push_back({Tok::TranslateTok, start, "t+"});
        i = j + 1;
      } else {
        out.push_back({Tok::Ident, start, std::move(word)});
        i = j;
      }
      continue;
    }
    switch (c) {
      case '(':
        if (i + 2 < n && src[i + 1] == '+' && src[i + 2] == ')') {
          out.push_back({Tok::QAddTok, start, "(+)"});
          i += 3;
        } else if (i + 2 < n && src[i + 1] == '*' && src[i + 2] == ')') {
          out.push_back({Tok::QMulTok, start, "(*)"});
          i += 3;
        } else {
          out.push_back({Tok::LParen, start, "("});
          ++i;
        }
        break;
      case ')':
        out.push_back({Tok::RParen, start, ")"});
        ++i;
        break;
      case '[':
        out.push_back({Tok::LBracket, start, "["});
        ++i;
        break;
      case ']':
        out.push_back({Tok::RBracket, start, "]"});
        ++i;
        break;
      case '{':
        out.push_back({Tok::LBrace, start, "{"});
        ++i;
        break;
      case '}':
        out.push_back({Tok::RBrace, start, "}"});
        ++i;
        break;
      case ',':
        out.push_back({Tok::Comma, start, ","});
        ++i;
        break;
      case '+':
        out.push_back({Tok::Plus, start, "+"});
        ++i;
        break;
      case '-':
        out.push_back({Tok::Minus, start, "-"});
        ++i;
        break;
      case '*':
        out.push_back({Tok::Star, start, "*"});
        ++i;
        break;
      case '/':
        out.push_back({Tok::Slash, start, "/"});
        ++i;
        break;
      case '^':
        out.push_back({Tok::Caret, start, "^"});
        ++i;
        break;
      default:
        throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, n, ""});
  return out;
}

enum class Ty { IntScalar, RatScalar, Poly, Set, Quantum };

bool is_scalar(Ty t) { return t == Ty::IntScalar || t == Ty::RatScalar; }

const char* type_name(Ty t) {
  switch (t) {
    case Ty::IntScalar:
      return "an integer";
    case Ty::RatScalar:
      return "a rational";
    case Ty::Poly:
      return "a polynomial";
    case Ty::Set:
      return "a set";
    case Ty::Quantum:
      return "a quantum number";
  }
  return "a value";
}

enum class OpKind {
  LitInt,
  LitRat,
  LitQ,
  LitSet,
  IntervalOp,
  CallQint,
  CallQrat,
  CallGenfun,
  CallSubst,
  QuantumAdd,
  DirectSumOp,
  QuantumMul,
  UnionOp,
  SumsetOp,
  ScalarAdd,
  PolyAdd,
  ScalarSub,
  PolySub,
  DilateOp,
  ScalarMul,
  PolyMul,
  TranslateOp,
  NegScalar,
  NegPoly,
  PowOp
};

}  // namespace

struct Expr::Node {
  enum class Form { Int, Rat, Q, Set, Interval, Call, Unary, Binary };
  enum class BinOp { QAdd, QMul, Union, Add, Sub, Mul, Translate, Pow };

  Form form = Form::Int;
  BinOp bin = BinOp::Add;
  std::size_t offset = 0;
  Int int_val;
  Rational rat_val;
  std::vector<long long> set_elems;
  std::string callee;
  std::vector<std::unique_ptr<Node>> kids;

  Ty ty = Ty::Poly;
  OpKind op = OpKind::LitInt;
};

namespace {

using Node = Expr::Node;
using NodePtr = std::unique_ptr<Node>;

NodePtr make_binary(Node::BinOp bin, std::size_t off, NodePtr lhs, NodePtr rhs) {
  auto n = std::make_unique<Node>();
  n->form = Node::Form::Binary;
  n->bin = bin;
  n->offset = off;
  n->kids.push_back(std::move(lhs));
  n->kids.push_back(std::move(rhs));
  return n;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  NodePtr parse() {
    NodePtr e = parse_qadd();
    if (!at(Tok::End)) {
      throw ParseError(cur().offset, "expected end of input, operator, or ','");
    }
    return e;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& cur() const { return toks_[pos_]; }
  bool at(Tok k) const { return cur().kind == k; }
  Token eat() { return toks_[pos_++]; }
  void expect(Tok k, const char* what) {
    if (!at(k)) {
      throw ParseError(cur().offset, std::string("expected ") + what);
    }
    ++pos_;
  }

  NodePtr parse_qadd() {
    NodePtr lhs = parse_qmul();
    while (at(Tok::QAddTok)) {
      std::size_t off = eat().offset;
      lhs = make_binary(Node::BinOp::QAdd, off, std::move(lhs), parse_qmul());
    }
    return lhs;
  }

  NodePtr parse_qmul() {
    NodePtr lhs = parse_union();
    while (at(Tok::QMulTok)) {
      std::size_t off = eat().offset;
      lhs = make_binary(Node::BinOp::QMul, off, std::move(lhs), parse_union());
    }
    return lhs;
  }

  NodePtr parse_union() {
    NodePtr lhs = parse_sum();
    while (at(Tok::Ident) && cur().text == "u") {
      std::size_t off = eat().offset;
      lhs = make_binary(Node::BinOp::Union, off, std::move(lhs), parse_sum());
    }
    return lhs;
  }

  NodePtr parse_sum() {
    NodePtr lhs = parse_shift();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      Token t = eat();
      Node::BinOp op = (t.kind == Tok::Plus) ? Node::BinOp::Add : Node::BinOp::Sub;
      lhs = make_binary(op, t.offset, std::move(lhs), parse_shift());
    }
    return lhs;
  }

  // Right associative: "1 t+ 2 t+ [3]" shifts [3] by 2, then by 1.
  NodePtr parse_shift() {
    NodePtr lhs = parse_scale();
    if (at(Tok::TranslateTok)) {
      std::size_t off = eat().offset;
      return make_binary(Node::BinOp::Translate, off, std::move(lhs), parse_shift());
    }
    return lhs;
  }

  NodePtr parse_scale() {
    NodePtr lhs = parse_unary();
    while (at(Tok::Star)) {
      std::size_t off = eat().offset;
      lhs = make_binary(Node::BinOp::Mul, off, std::move(lhs), parse_unary());
    }
    return lhs;
  }

  NodePtr parse_unary() {
    if (at(Tok::Minus)) {
      std::size_t off = eat().offset;
      auto n = std::make_unique<Node>();
      n->form = Node::Form::Unary;
      n->offset = off;
      n->kids.push_back(parse_unary());
      return n;
    }
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr lhs = parse_primary();
    while (at(Tok::Caret)) {
      std::size_t off = eat().offset;
      lhs = make_binary(Node::BinOp::Pow, off, std::move(lhs), parse_primary());
    }
    return lhs;
  }

  NodePtr parse_primary() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::Integer:
        return parse_number();
      case Tok::Ident:
        return parse_name();
      case Tok::LBrace:
        return parse_set_literal();
      case Tok::LBracket: {
        std::size_t off = eat().offset;
        auto n = std::make_unique<Node>();
        n->form = Node::Form::Interval;
        n->offset = off;
        n->kids.push_back(parse_qadd());
        expect(Tok::RBracket, "']'");
        return n;
      }
      case Tok::LParen: {
        eat();
        NodePtr inner = parse_qadd();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        throw ParseError(t.offset,
                         "expected a number, 'q', '{', '[', '(', or a function name");
    }
  }

  NodePtr parse_number() {
    Token t = eat();
    auto n = std::make_unique<Node>();
    n->offset = t.offset;
    Int num(t.text);
    if (at(Tok::Slash)) {
      eat();
      if (!at(Tok::Integer)) {
        throw ParseError(cur().offset, "expected an integer after '/'");
      }
      Token den_tok = eat();
      Int den(den_tok.text);
      if (den == 0) {
        throw ParseError(den_tok.offset, "zero denominator");
      }
      n->form = Node::Form::Rat;
      n->rat_val = make_rational(num, den);
    } else {
      n->form = Node::Form::Int;
      n->int_val = std::move(num);
    }
    return n;
  }

  NodePtr parse_name() {
    Token t = eat();
    if (t.text == "q") {
      auto n = std::make_unique<Node>();
      n->form = Node::Form::Q;
      n->offset = t.offset;
      return n;
    }
    std::size_t arity = 0;
    if (t.text == "qint" || t.text == "genfun") {
      arity = 1;
    } else if (t.text == "qrat" || t.text == "subst") {
      arity = 2;
    } else if (t.text == "u") {
      throw ParseError(t.offset, "'u' is an operator and needs a set on each side");
    } else {
      throw ParseError(t.offset, "unknown name '" + t.text + "'");
    }
    auto n = std::make_unique<Node>();
    n->form = Node::Form::Call;
    n->callee = t.text;
    n->offset = t.offset;
    expect(Tok::LParen, "'(' after function name");
    n->kids.push_back(parse_qadd());
    while (at(Tok::Comma)) {
      eat();
      n->kids.push_back(parse_qadd());
    }
    expect(Tok::RParen, "')'");
    if (n->kids.size() != arity) {
      throw ParseError(t.offset, "'" + t.text + "' takes " + std::to_string(arity) +
                                     (arity == 1 ? " argument" : " arguments"));
    }
    return n;
  }

  NodePtr parse_set_literal() {
    std::size_t off = eat().offset;  // '{'
    auto n = std::make_unique<Node>();
    n->form = Node::Form::Set;
    n->offset = off;
    if (!at(Tok::RBrace)) {
      n->set_elems.push_back(parse_set_element());
      while (at(Tok::Comma)) {
        eat();
        n->set_elems.push_back(parse_set_element());
      }
    }
    expect(Tok::RBrace, "'}' or ','");
    return n;
  }

  long long parse_set_element() {
    bool negative = false;
    if (at(Tok::Minus)) {
      eat();
      negative = true;
    }
    if (!at(Tok::Integer)) {
      throw ParseError(cur().offset, "expected an integer set element");
    }
    Token t = eat();
    Int v(t.text);
    if (negative) {
      v = -v;
    }
    if (v > kSetBound || v < -kSetBound) {
      throw ParseError(t.offset, "set element out of range");
    }
    return v.convert_to<long long>();
  }
};

// ---------- Static typing ----------

Ty annotate(Node& n, const std::string& path);

Ty annotate_binary(Node& n, const std::string& path) {
  Ty lt = annotate(*n.kids[0], path + ".lhs");
  Ty rt = annotate(*n.kids[1], path + ".rhs");
  switch (n.bin) {
    case Node::BinOp::QAdd:
      if (lt == Ty::Quantum && rt == Ty::Quantum) {
        n.op = OpKind::QuantumAdd;
        n.ty = Ty::Quantum;
      } else if (lt == Ty::Set && rt == Ty::Set) {
        n.op = OpKind::DirectSumOp;
        n.ty = Ty::Set;
      } else {
        throw TypeError(path, std::string("'(+)' applies to two quantum numbers or "
                                          "two sets, found ") +
                                  type_name(lt) + " and " + type_name(rt));
      }
      break;
    case Node::BinOp::QMul:
      if (lt == Ty::Quantum && rt == Ty::Quantum) {
        n.op = OpKind::QuantumMul;
        n.ty = Ty::Quantum;
      } else {
        throw TypeError(path, std::string("'(*)' applies to two quantum numbers, "
                                          "found ") +
                                  type_name(lt) + " and " + type_name(rt));
      }
      break;
    case Node::BinOp::Union:
      if (lt == Ty::Set && rt == Ty::Set) {
        n.op = OpKind::UnionOp;
        n.ty = Ty::Set;
      } else {
        throw TypeError(path, std::string("'u' applies to two sets, found ") +
                                  type_name(lt) + " and " + type_name(rt));
      }
      break;
    case Node::BinOp::Add:
      if (lt == Ty::Set && rt == Ty::Set) {
        n.op = OpKind::SumsetOp;
        n.ty = Ty::Set;
      } else if (is_scalar(lt) && is_scalar(rt)) {
        n.op = OpKind::ScalarAdd;
        n.ty = (lt == Ty::IntScalar && rt == Ty::IntScalar) ? Ty::IntScalar
                                                            : Ty::RatScalar;
      } else if ((is_scalar(lt) || lt == Ty::Poly) &&
                 (is_scalar(rt) || rt == Ty::Poly)) {
        n.op = OpKind::PolyAdd;
        n.ty = Ty::Poly;
      } else {
        throw TypeError(path, std::string("'+' applies to two sets or two "
                                          "polynomials, found ") +
                                  type_name(lt) + " and " + type_name(rt));
      }
      break;
    case Node::BinOp::Sub:
      if (is_scalar(lt) && is_scalar(rt)) {
        n.op = OpKind::ScalarSub;
        n.ty = (lt == Ty::IntScalar && rt == Ty::IntScalar) ? Ty::IntScalar
                                                            : Ty::RatScalar;
      } else if ((is_scalar(lt) || lt == Ty::Poly) &&
                 (is_scalar(rt) || rt == Ty::Poly)) {
        n.op = OpKind::PolySub;
        n.ty = Ty::Poly;
      } else {
        throw TypeError(path, std::string("'-' applies to two polynomials, found ") +
                                  type_name(lt) + " and " + type_name(rt));
      }
      break;
    case Node::BinOp::Mul:
      if (lt == Ty::IntScalar && rt == Ty::Set) {
        n.op = OpKind::DilateOp;
        n.ty = Ty::Set;
      } else if (lt == Ty::RatScalar && rt == Ty::Set) {
        throw TypeError(path, "dilation count must be an integer");
      } else if (is_scalar(lt) && is_scalar(rt)) {
        n.op = OpKind::ScalarMul;
        n.ty = (lt == Ty::IntScalar && rt == Ty::IntScalar) ? Ty::IntScalar
                                                            : Ty::RatScalar;
      } else if ((is_scalar(lt) || lt == Ty::Poly) &&
                 (is_scalar(rt) || rt == Ty::Poly)) {
        n.op = OpKind::PolyMul;
        n.ty = Ty::Poly;
      } else {
        throw TypeError(path, std::string("'*' applies as integer * set or to two "
                                          "polynomials, found ") +
                                  type_name(lt) + " and " + type_name(rt));
      }
      break;
    case Node::BinOp::Translate:
      if (lt == Ty::IntScalar && rt == Ty::Set) {
        n.op = OpKind::TranslateOp;
        n.ty = Ty::Set;
      } else {
        throw TypeError(path, std::string("'t+' applies as integer t+ set, found ") +
                                  type_name(lt) + " and " + type_name(rt));
      }
      break;
    case Node::BinOp::Pow:
      if (!(is_scalar(lt) || lt == Ty::Poly)) {
        throw TypeError(path + ".lhs", std::string("'^' base must be a polynomial, "
                                                   "found ") +
                                           type_name(lt));
      }
      if (!is_scalar(rt)) {
        throw TypeError(path + ".rhs", std::string("exponent must be a number, "
                                                   "found ") +
                                           type_name(rt));
      }
      n.op = OpKind::PowOp;
      n.ty = Ty::Poly;
      break;
  }
  return n.ty;
}

Ty annotate(Node& n, const std::string& path) {
  switch (n.form) {
    case Node::Form::Int:
      n.ty = Ty::IntScalar;
      n.op = OpKind::LitInt;
      break;
    case Node::Form::Rat:
      n.ty = is_integer(n.rat_val) ? Ty::IntScalar : Ty::RatScalar;
      n.op = OpKind::LitRat;
      break;
    case Node::Form::Q:
      n.ty = Ty::Poly;
      n.op = OpKind::LitQ;
      break;
    case Node::Form::Set:
      n.ty = Ty::Set;
      n.op = OpKind::LitSet;
      break;
    case Node::Form::Interval:
      if (annotate(*n.kids[0], path + ".size") != Ty::IntScalar) {
        throw TypeError(path + ".size", "interval size must be an integer");
      }
      n.ty = Ty::Set;
      n.op = OpKind::IntervalOp;
      break;
    case Node::Form::Call: {
      if (n.callee == "qint") {
        if (annotate(*n.kids[0], path + ".arg1") != Ty::IntScalar) {
          throw TypeError(path + ".arg1", "qint takes an integer");
        }
        n.ty = Ty::Quantum;
        n.op = OpKind::CallQint;
      } else if (n.callee == "qrat") {
        if (annotate(*n.kids[0], path + ".arg1") != Ty::IntScalar) {
          throw TypeError(path + ".arg1", "qrat takes two integers");
        }
        if (annotate(*n.kids[1], path + ".arg2") != Ty::IntScalar) {
          throw TypeError(path + ".arg2", "qrat takes two integers");
        }
        n.ty = Ty::Quantum;
        n.op = OpKind::CallQrat;
      } else if (n.callee == "genfun") {
        if (annotate(*n.kids[0], path + ".arg1") != Ty::Set) {
          throw TypeError(path + ".arg1", "genfun takes a set");
        }
        n.ty = Ty::Poly;
        n.op = OpKind::CallGenfun;
      } else {  // subst
        Ty at = annotate(*n.kids[0], path + ".arg1");
        if (!(is_scalar(at) || at == Ty::Poly)) {
          throw TypeError(path + ".arg1", "subst takes a polynomial");
        }
        if (!is_scalar(annotate(*n.kids[1], path + ".arg2"))) {
          throw TypeError(path + ".arg2", "substitution exponent must be a number");
        }
        n.ty = Ty::Poly;
        n.op = OpKind::CallSubst;
      }
      break;
    }
    case Node::Form::Unary: {
      Ty ct = annotate(*n.kids[0], path + ".operand");
      if (is_scalar(ct)) {
        n.op = OpKind::NegScalar;
        n.ty = ct;
      } else if (ct == Ty::Poly) {
        n.op = OpKind::NegPoly;
        n.ty = Ty::Poly;
      } else {
        throw TypeError(path + ".operand",
                        std::string("negation applies to numbers and polynomials, "
                                    "found ") +
                            type_name(ct));
      }
      break;
    }
    case Node::Form::Binary:
      return annotate_binary(n, path);
  }
  return n.ty;
}

// ---------- Evaluation ----------

Rational as_rat(const Value& v) {
  if (const Int* i = std::get_if<Int>(&v)) {
    return Rational(*i);
  }
  return std::get<Rational>(v);
}

FracPoly as_poly(const Value& v) {
  if (const FracPoly* p = std::get_if<FracPoly>(&v)) {
    return *p;
  }
  return FracPoly::constant(as_rat(v));
}

long long checked_ll(const Int& v, const std::string& path, const char* what) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    throw EvalError(path, std::string(what) + " out of range");
  }
  return v.convert_to<long long>();
}

void check_expandable(const Rational& x, const std::string& path) {
  if (is_integer(x) && (numerator(x) > kExpandBound || numerator(x) < -kExpandBound)) {
    throw EvalError(path, "quantum integer too large to expand");
  }
}

std::string render_rep(const Representation& r) {
  std::ostringstream os;
  os << r.a << "+" << r.b;
  return os.str();
}

Value eval(const Node& n, const std::string& path);

Value eval_binary(const Node& n, const std::string& path) {
  const Node& l = *n.kids[0];
  const Node& r = *n.kids[1];
  const std::string lp = path + ".lhs";
  const std::string rp = path + ".rhs";
  switch (n.op) {
    case OpKind::QuantumAdd: {
      QuantumNumber a = std::get<QuantumNumber>(eval(l, lp));
      QuantumNumber b = std::get<QuantumNumber>(eval(r, rp));
      check_expandable(a.value() + b.value(), path);
      return q_add(a, b);
    }
    case OpKind::QuantumMul: {
      QuantumNumber a = std::get<QuantumNumber>(eval(l, lp));
      QuantumNumber b = std::get<QuantumNumber>(eval(r, rp));
      check_expandable(a.value() * b.value(), path);
      return q_mul(a, b);
    }
    case OpKind::DirectSumOp: {
      IntSet a = std::get<IntSet>(eval(l, lp));
      IntSet b = std::get<IntSet>(eval(r, rp));
      if (a.size() * b.size() > kSumsetPairBound) {
        throw EvalError(path, "sumset too large");
      }
      DirectSumResult ds = direct_sum_check(a, b);
      if (!ds.direct) {
        throw EvalError(path, "sumset is not direct: " + std::to_string(*ds.element) +
                                  " = " + render_rep(ds.representations[0]) + " = " +
                                  render_rep(ds.representations[1]));
      }
      return ds.sum;
    }
    case OpKind::UnionOp:
      return set_union(std::get<IntSet>(eval(l, lp)), std::get<IntSet>(eval(r, rp)));
    case OpKind::SumsetOp: {
      IntSet a = std::get<IntSet>(eval(l, lp));
      IntSet b = std::get<IntSet>(eval(r, rp));
      if (a.size() * b.size() > kSumsetPairBound) {
        throw EvalError(path, "sumset too large");
      }
      IntSet out = sumset(a, b);
      if (!out.empty() && (out.elements().front() < -kSetBound ||
                           out.elements().back() > kSetBound)) {
        throw EvalError(path, "sumset out of range");
      }
      return out;
    }
    case OpKind::ScalarAdd:
    case OpKind::ScalarSub:
    case OpKind::ScalarMul: {
      Value a = eval(l, lp);
      Value b = eval(r, rp);
      if (n.ty == Ty::IntScalar) {
        const Int& x = std::get<Int>(a);
        const Int& y = std::get<Int>(b);
        if (n.op == OpKind::ScalarAdd) return Int(x + y);
        if (n.op == OpKind::ScalarSub) return Int(x - y);
        return Int(x * y);
      }
      Rational x = as_rat(a);
      Rational y = as_rat(b);
      if (n.op == OpKind::ScalarAdd) return Rational(x + y);
      if (n.op == OpKind::ScalarSub) return Rational(x - y);
      return Rational(x * y);
    }
    case OpKind::PolyAdd:
      return as_poly(eval(l, lp)) + as_poly(eval(r, rp));
    case OpKind::PolySub:
      return as_poly(eval(l, lp)) - as_poly(eval(r, rp));
    case OpKind::PolyMul:
      return as_poly(eval(l, lp)) * as_poly(eval(r, rp));
    case OpKind::DilateOp: {
      long long m = checked_ll(std::get<Int>(eval(l, lp)), lp, "dilation count");
      IntSet a = std::get<IntSet>(eval(r, rp));
      for (long long x : a.elements()) {
        __int128 prod = static_cast<__int128>(m) * x;
        if (prod > kSetBound || prod < -kSetBound) {
          throw EvalError(path, "dilation out of range");
        }
      }
      return dilate(m, a);
    }
    case OpKind::TranslateOp: {
      long long m = checked_ll(std::get<Int>(eval(l, lp)), lp, "translation shift");
      IntSet a = std::get<IntSet>(eval(r, rp));
      for (long long x : a.elements()) {
        __int128 sum = static_cast<__int128>(m) + x;
        if (sum > kSetBound || sum < -kSetBound) {
          throw EvalError(path, "translation out of range");
        }
      }
      return translate(m, a);
    }
    case OpKind::PowOp: {
      FracPoly base = as_poly(eval(l, lp));
      Rational e = as_rat(eval(r, rp));
      if (is_integer(e) && e >= 0) {
        Int k = numerator(e);
        if (k > 512) {
          throw EvalError(path, "exponent too large");
        }
        FracPoly acc = FracPoly::constant(Rational(1));
        FracPoly b = base;
        unsigned long uk = k.convert_to<unsigned long>();
        while (uk > 0) {
          if (uk & 1) {
            acc = acc * b;
          }
          uk >>= 1;
          if (uk > 0) {
            b = b * b;
          }
        }
        return acc;
      }
      const auto& ts = base.terms();
      if (ts.size() == 1 && ts[0].coefficient == 1) {
        return FracPoly::monomial(ts[0].exponent * e, Rational(1));
      }
      throw EvalError(path, "fractional or negative exponent requires a power of q");
    }
    default:
      throw std::logic_error("unexpected binary op");
  }
}

Value eval(const Node& n, const std::string& path) {
  try {
    switch (n.op) {
      case OpKind::LitInt:
        return n.int_val;
      case OpKind::LitRat:
        if (n.ty == Ty::IntScalar) {
          return Int(numerator(n.rat_val));
        }
        return n.rat_val;
      case OpKind::LitQ:
        return FracPoly::monomial(Rational(1), Rational(1));
      case OpKind::LitSet:
        return IntSet::from_elements(n.set_elems);
      case OpKind::IntervalOp: {
        Int v = std::get<Int>(eval(*n.kids[0], path + ".size"));
        if (v > kIntervalBound) {
          throw EvalError(path, "interval too large");
        }
        return interval(checked_ll(v, path, "interval size"));
      }
      case OpKind::CallQint: {
        Int m = std::get<Int>(eval(*n.kids[0], path + ".arg1"));
        check_expandable(Rational(m), path);
        return q_int(m);
      }
      case OpKind::CallQrat: {
        Int m = std::get<Int>(eval(*n.kids[0], path + ".arg1"));
        Int d = std::get<Int>(eval(*n.kids[1], path + ".arg2"));
        if (d != 0) {
          check_expandable(make_rational(m, d), path);
        }
        return q_rational(m, d);
      }
      case OpKind::CallGenfun:
        return genfun(std::get<IntSet>(eval(*n.kids[0], path + ".arg1")));
      case OpKind::CallSubst: {
        FracPoly p = as_poly(eval(*n.kids[0], path + ".arg1"));
        Rational r = as_rat(eval(*n.kids[1], path + ".arg2"));
        return substitute(p, r);
      }
      case OpKind::NegScalar: {
        Value v = eval(*n.kids[0], path + ".operand");
        if (const Int* i = std::get_if<Int>(&v)) {
          return Int(-*i);
        }
        return Rational(-std::get<Rational>(v));
      }
      case OpKind::NegPoly:
        return -as_poly(eval(*n.kids[0], path + ".operand"));
      default:
        return eval_binary(n, path);
    }
  } catch (const std::domain_error& e) {
    throw EvalError(path, e.what());
  }
}

}  // namespace

Expr::Expr(std::unique_ptr<Node> root) : root_(std::move(root)) {}
Expr::Expr(Expr&&) noexcept = default;
Expr& Expr::operator=(Expr&&) noexcept = default;
Expr::~Expr() = default;

bool Expr::top_is_quantum_op() const {
  return root_->form == Node::Form::Binary && root_->ty == Ty::Quantum &&
         (root_->bin == Node::BinOp::QAdd || root_->bin == Node::BinOp::QMul);
}

Expr parse_expr(const std::string& src) {
  Parser parser(lex(src));
  NodePtr root = parser.parse();
  annotate(*root, "$");
  return Expr(std::move(root));
}

Value eval_expr(const Expr& e) { return eval(e.root(), "$"); }

std::string render_value(const Value& v) {
  if (const Int* i = std::get_if<Int>(&v)) {
    return i->str();
  }
  if (const Rational* r = std::get_if<Rational>(&v)) {
    return to_string(*r);
  }
  if (const FracPoly* p = std::get_if<FracPoly>(&v)) {
    return to_string(*p);
  }
  if (const IntSet* s = std::get_if<IntSet>(&v)) {
    return to_string(*s);
  }
  return to_string(std::get<QuantumNumber>(v).canonical());
}

std::string render_display(const Expr& e, const Value& v) {
  if (e.top_is_quantum_op()) {
    if (const QuantumNumber* qn = std::get_if<QuantumNumber>(&v)) {
      return "[" + to_string(qn->value()) + "]_q = " + to_string(qn->canonical());
    }
  }
  return render_value(v);
}

FracPoly parse_poly_text(const std::string& src) {
  Expr e = parse_expr(src);
  Value v = eval_expr(e);
  if (std::holds_alternative<IntSet>(v) || std::holds_alternative<QuantumNumber>(v)) {
    throw TypeError("$", "expected a polynomial");
  }
  return as_poly(v);
}

IntSet parse_set_text(const std::string& src) {
  Expr e = parse_expr(src);
  Value v = eval_expr(e);
  if (const IntSet* s = std::get_if<IntSet>(&v)) {
    return *s;
  }
  throw TypeError("$", "expected a set");
}

}  // namespace qint
