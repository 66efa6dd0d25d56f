#include "lemni/expr.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <limits>
#include <unordered_map>

namespace lemni {

namespace detail {

enum class Kind { Const, Var, Add, Sub, Mul, Div, Neg, Pow, Func };

struct Node {
  Kind kind = Kind::Const;
  cplx value{};
  int exponent = 0;
  UnaryFunc fn = UnaryFunc::Exp;
  std::shared_ptr<const Node> a, b;
};

}  // namespace detail

using detail::Kind;
using detail::Node;

// ---------------------------------------------------------------------------
// Scalar kernels shared by constant folding and the evaluator, so that folded
// and unfolded forms agree bit for bit.

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const cplx kComplexInf{kInf, kInf};

inline cplx cmul(cplx x, cplx y) {
  return {x.real() * y.real() - x.imag() * y.imag(), x.real() * y.imag() + x.imag() * y.real()};
}

// Smith's algorithm; exact zero divisor gives complex infinity.
inline cplx cdiv(cplx x, cplx y) {
  const double c = y.real(), d = y.imag();
  if (c == 0.0 && d == 0.0) return kComplexInf;
  if (std::abs(c) >= std::abs(d)) {
    const double r = d / c, den = c + d * r;
    return {(x.real() + x.imag() * r) / den, (x.imag() - x.real() * r) / den};
  }
  const double r = c / d, den = c * r + d;
  return {(x.real() * r + x.imag()) / den, (x.imag() * r - x.real()) / den};
}

inline cplx cpow(cplx x, int n) {
  if (n == 0) return {1.0, 0.0};
  unsigned long long m = n < 0 ? static_cast<unsigned long long>(-static_cast<long long>(n))
                               : static_cast<unsigned long long>(n);
  cplx result{1.0, 0.0};
  cplx base = x;
  bool first = true;
  while (m) {
    if (m & 1ULL) {
      result = first ? base : cmul(result, base);
      first = false;
    }
    m >>= 1ULL;
    if (m) base = cmul(base, base);
  }
  return n < 0 ? cdiv({1.0, 0.0}, result) : result;
}

inline cplx capply(UnaryFunc fn, cplx x) {
  switch (fn) {
    case UnaryFunc::Exp:
      return std::exp(x);
    case UnaryFunc::Log:
      if (x.real() == 0.0 && x.imag() == 0.0) throw Error(ErrorKind::DomainError, "log(0)");
      return std::log(x);
    case UnaryFunc::Sin:
      return std::sin(x);
    case UnaryFunc::Cos:
      return std::cos(x);
  }
  return {};
}

const char* func_name(UnaryFunc fn) {
  switch (fn) {
    case UnaryFunc::Exp:
      return "exp";
    case UnaryFunc::Log:
      return "log";
    case UnaryFunc::Sin:
      return "sin";
    case UnaryFunc::Cos:
      return "cos";
  }
  return "?";
}

bool is_const(const Node& n, cplx c) { return n.kind == Kind::Const && n.value == c; }

cplx canonical(cplx c) {
  // -0.0 + 0.0 == +0.0: keeps printed constants round-trippable.
  return {c.real() + 0.0, c.imag() + 0.0};
}

}  // namespace

Expr make_node(std::shared_ptr<const Node> n) { return Expr(std::move(n)); }

Expr::Expr() : Expr(Expr::constant({0.0, 0.0})) {}

Expr Expr::constant(cplx c) {
  if (std::isnan(c.real()) || std::isnan(c.imag()))
    throw Error(ErrorKind::DomainError, "NaN constant");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->value = canonical(c);
  return Expr(n);
}

Expr Expr::variable() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  return Expr(n);
}

namespace {

std::shared_ptr<Node> binary(Kind k, std::shared_ptr<const Node> a, std::shared_ptr<const Node> b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

}  // namespace

Expr operator+(const Expr& a, const Expr& b) {
  const Node& x = *a.node_;
  const Node& y = *b.node_;
  if (x.kind == Kind::Const && y.kind == Kind::Const) return Expr::constant(x.value + y.value);
  if (is_const(x, 0.0)) return b;
  if (is_const(y, 0.0)) return a;
  return Expr(binary(Kind::Add, a.node_, b.node_));
}

Expr operator-(const Expr& a, const Expr& b) {
  const Node& x = *a.node_;
  const Node& y = *b.node_;
  if (x.kind == Kind::Const && y.kind == Kind::Const) return Expr::constant(x.value - y.value);
  if (is_const(y, 0.0)) return a;
  if (is_const(x, 0.0)) return -b;
  return Expr(binary(Kind::Sub, a.node_, b.node_));
}

Expr operator*(const Expr& a, const Expr& b) {
  const Node& x = *a.node_;
  const Node& y = *b.node_;
  if (x.kind == Kind::Const && y.kind == Kind::Const) return Expr::constant(cmul(x.value, y.value));
  if (is_const(x, 0.0) || is_const(y, 0.0)) return Expr::constant(0.0);
  if (is_const(x, 1.0)) return b;
  if (is_const(y, 1.0)) return a;
  return Expr(binary(Kind::Mul, a.node_, b.node_));
}

Expr operator/(const Expr& a, const Expr& b) {
  const Node& x = *a.node_;
  const Node& y = *b.node_;
  if (x.kind == Kind::Const && y.kind == Kind::Const && y.value != 0.0)
    return Expr::constant(cdiv(x.value, y.value));
  if (is_const(x, 0.0) && !is_const(y, 0.0)) return Expr::constant(0.0);
  if (is_const(y, 1.0)) return a;
  return Expr(binary(Kind::Div, a.node_, b.node_));
}

Expr operator-(const Expr& a) {
  const Node& x = *a.node_;
  if (x.kind == Kind::Const) return Expr::constant(-x.value);
  if (x.kind == Kind::Neg) return Expr(x.a);
  return Expr(binary(Kind::Neg, a.node_, nullptr));
}

Expr pow(const Expr& base, int exponent) {
  const Node& x = *base.node_;
  if (exponent == 0) return Expr::constant(1.0);
  if (exponent == 1) return base;
  if (x.kind == Kind::Const && (x.value != 0.0 || exponent > 0))
    return Expr::constant(cpow(x.value, exponent));
  auto n = binary(Kind::Pow, base.node_, nullptr);
  n->exponent = exponent;
  return Expr(n);
}

Expr apply(UnaryFunc fn, const Expr& arg) {
  const Node& x = *arg.node_;
  if (x.kind == Kind::Const && !(fn == UnaryFunc::Log && x.value == 0.0))
    return Expr::constant(capply(fn, x.value));
  auto n = binary(Kind::Func, arg.node_, nullptr);
  n->fn = fn;
  return Expr(n);
}

bool Expr::is_constant() const { return node_->kind == Kind::Const; }

std::size_t Expr::size() const {
  std::unordered_map<const Node*, bool> seen;
  std::vector<const Node*> stack{node_.get()};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (!n || seen.count(n)) continue;
    seen[n] = true;
    stack.push_back(n->a.get());
    stack.push_back(n->b.get());
  }
  return seen.size();
}

// ---------------------------------------------------------------------------
// Differentiation, memoized on node identity so shared subtrees stay shared.

namespace {

struct Differentiator {
  std::unordered_map<const Node*, Expr> memo;

  Expr d(const std::shared_ptr<const Node>& np) {
    auto it = memo.find(np.get());
    if (it != memo.end()) return it->second;
    Expr r = compute(np);
    memo.emplace(np.get(), r);
    return r;
  }

  Expr compute(const std::shared_ptr<const Node>& np) {
    const Node& n = *np;
    const Expr self = make_node(np);
    switch (n.kind) {
      case Kind::Const:
        return Expr::constant(0.0);
      case Kind::Var:
        return Expr::constant(1.0);
      case Kind::Add:
        return d(n.a) + d(n.b);
      case Kind::Sub:
        return d(n.a) - d(n.b);
      case Kind::Mul: {
        const Expr a = make_node(n.a), b = make_node(n.b);
        return d(n.a) * b + a * d(n.b);
      }
      case Kind::Div: {
        const Expr a = make_node(n.a), b = make_node(n.b);
        const Expr db = d(n.b);
        if (db.is_constant() && db.node()->value == 0.0) return d(n.a) / b;
        return d(n.a) / b - a * db / pow(b, 2);
      }
      case Kind::Neg:
        return -d(n.a);
      case Kind::Pow: {
        const Expr a = make_node(n.a);
        return Expr::constant(static_cast<double>(n.exponent)) * pow(a, n.exponent - 1) * d(n.a);
      }
      case Kind::Func: {
        const Expr a = make_node(n.a);
        const Expr da = d(n.a);
        switch (n.fn) {
          case UnaryFunc::Exp:
            return self * da;
          case UnaryFunc::Log:
            return da / a;
          case UnaryFunc::Sin:
            return cos(a) * da;
          case UnaryFunc::Cos:
            return -(sin(a) * da);
        }
      }
    }
    return Expr::constant(0.0);
  }
};

}  // namespace

Expr Expr::derivative() const {
  Differentiator diff;
  return diff.d(node_);
}

// ---------------------------------------------------------------------------
// Printing

std::string format_constant(cplx c) {
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  const double re = c.real(), im = c.imag();
  if (im == 0.0) return re < 0.0 ? "(" + num(re) + ")" : num(re);
  std::string s = "(";
  if (re != 0.0) {
    s += num(re);
    s += im < 0.0 ? "-" : "+";
    s += num(std::abs(im));
  } else {
    s += num(im);
  }
  s += "*i)";
  return s;
}

namespace {

int level(const Node& n) {
  switch (n.kind) {
    case Kind::Add:
    case Kind::Sub:
      return 1;
    case Kind::Mul:
    case Kind::Div:
      return 2;
    case Kind::Neg:
      return 3;
    case Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

void print(const Node& n, std::string& out);

void print_wrapped(const Node& n, bool wrap, std::string& out) {
  if (wrap) out += '(';
  print(n, out);
  if (wrap) out += ')';
}

void print(const Node& n, std::string& out) {
  switch (n.kind) {
    case Kind::Const:
      out += format_constant(n.value);
      return;
    case Kind::Var:
      out += 'z';
      return;
    case Kind::Add:
    case Kind::Sub:
      print_wrapped(*n.a, level(*n.a) < 1, out);
      out += n.kind == Kind::Add ? " + " : " - ";
      print_wrapped(*n.b, level(*n.b) <= 1, out);
      return;
    case Kind::Mul:
    case Kind::Div:
      print_wrapped(*n.a, level(*n.a) < 2, out);
      out += n.kind == Kind::Mul ? "*" : "/";
      print_wrapped(*n.b, level(*n.b) <= 2, out);
      return;
    case Kind::Neg:
      out += '-';
      print_wrapped(*n.a, level(*n.a) < 4, out);
      return;
    case Kind::Pow:
      print_wrapped(*n.a, level(*n.a) < 5, out);
      out += '^';
      if (n.exponent < 0)
        out += "(" + std::to_string(n.exponent) + ")";
      else
        out += std::to_string(n.exponent);
      return;
    case Kind::Func:
      out += func_name(n.fn);
      out += '(';
      print(*n.a, out);
      out += ')';
      return;
  }
}

}  // namespace

std::string Expr::to_string() const {
  std::string s;
  print(*node_, s);
  return s;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expr run() {
    skip_ws();
    if (pos_ >= s_.size()) fail("empty expression");
    Expr e = expr();
    skip_ws();
    if (pos_ < s_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw Error(ErrorKind::SyntaxError, what + " at position " + std::to_string(at),
                static_cast<long>(at));
  }
  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      if (accept('+'))
        lhs = lhs + term();
      else if (accept('-'))
        lhs = lhs - term();
      else
        return lhs;
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      if (accept('*'))
        lhs = lhs * unary();
      else if (accept('/'))
        lhs = lhs / unary();
      else
        return lhs;
    }
  }

  Expr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (!accept('^')) return base;
    const int n = integer_exponent();
    if (peek('^'))
      throw Error(ErrorKind::UnsupportedOperation,
                  "chained exponent at position " + std::to_string(pos_) + "; use parentheses",
                  static_cast<long>(pos_));
    return pow(base, n);
  }

  int integer_exponent() {
    skip_ws();
    const std::size_t start = pos_;
    bool paren = accept('(');
    bool neg = accept('-');
    skip_ws();
    const std::size_t digits_at = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const bool has_digits = pos_ > digits_at;
    const bool fractional =
        pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E');
    if (!has_digits || fractional) {
      if (pos_ >= s_.size() && !has_digits) fail("missing exponent");
      throw Error(ErrorKind::UnsupportedOperation,
                  "only integer exponents are supported (position " + std::to_string(start) + ")",
                  static_cast<long>(start));
    }
    long long v = 0;
    const auto res = std::from_chars(s_.data() + digits_at, s_.data() + pos_, v);
    if (res.ec != std::errc() || v > 1000000)
      throw Error(ErrorKind::UnsupportedOperation, "exponent too large", static_cast<long>(start));
    if (paren && !accept(')')) {
      skip_ws();
      if (pos_ >= s_.size()) fail("expected ')'");
      throw Error(ErrorKind::UnsupportedOperation,
                  "only integer exponents are supported (position " + std::to_string(start) + ")",
                  static_cast<long>(start));
    }
    return static_cast<int>(neg ? -v : v);
  }

  Expr primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail(std::string("unexpected '") + c + "'");
  }

  Expr number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
      ++pos_;
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < s_.size() && (s_[p] == '+' || s_[p] == '-')) ++p;
      if (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) {
        pos_ = p;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
    }
    double v = 0.0;
    const auto res = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (res.ec != std::errc() || res.ptr != s_.data() + pos_) fail("malformed number", start);
    // A trailing 'i' directly after the digits makes an imaginary literal.
    if (pos_ < s_.size() && s_[pos_] == 'i' &&
        !(pos_ + 1 < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
      ++pos_;
      return Expr::constant({0.0, v});
    }
    return Expr::constant(v);
  }

  Expr identifier() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string_view name = s_.substr(start, pos_ - start);
    if (name == "z") return Expr::variable();
    if (name == "i") return Expr::constant({0.0, 1.0});
    if (name == "pi") return Expr::constant(3.14159265358979323846);
    if (name == "e") return Expr::constant(2.71828182845904523536);
    UnaryFunc fn;
    if (name == "exp")
      fn = UnaryFunc::Exp;
    else if (name == "log")
      fn = UnaryFunc::Log;
    else if (name == "sin")
      fn = UnaryFunc::Sin;
    else if (name == "cos")
      fn = UnaryFunc::Cos;
    else
      fail("unknown identifier '" + std::string(name) + "'", start);
    if (!accept('(')) fail("expected '(' after " + std::string(name));
    Expr arg = expr();
    if (!accept(')')) fail("expected ')'");
    return apply(fn, arg);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

Expr parse_expr(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Program

Program::Program(const Expr& e) {
  std::unordered_map<const Node*, std::int32_t> slot;
  // Iterative post-order over the DAG.
  std::vector<std::pair<const Node*, bool>> stack{{e.node(), false}};
  while (!stack.empty()) {
    auto [n, expanded] = stack.back();
    stack.pop_back();
    if (slot.count(n)) continue;
    if (!expanded) {
      stack.push_back({n, true});
      if (n->b) stack.push_back({n->b.get(), false});
      if (n->a) stack.push_back({n->a.get(), false});
      continue;
    }
    Instr in;
    switch (n->kind) {
      case Kind::Const:
        in.op = Op::Const;
        in.c = n->value;
        break;
      case Kind::Var:
        in.op = Op::Var;
        break;
      case Kind::Add:
        in.op = Op::Add;
        break;
      case Kind::Sub:
        in.op = Op::Sub;
        break;
      case Kind::Mul:
        in.op = Op::Mul;
        break;
      case Kind::Div:
        in.op = Op::Div;
        break;
      case Kind::Neg:
        in.op = Op::Neg;
        break;
      case Kind::Pow:
        in.op = Op::Pow;
        in.n = n->exponent;
        break;
      case Kind::Func:
        in.op = n->fn == UnaryFunc::Exp   ? Op::Exp
                : n->fn == UnaryFunc::Log ? Op::Log
                : n->fn == UnaryFunc::Sin ? Op::Sin
                                          : Op::Cos;
        break;
    }
    if (n->a) in.a = slot.at(n->a.get());
    if (n->b) in.b = slot.at(n->b.get());
    slot[n] = static_cast<std::int32_t>(code_.size());
    code_.push_back(in);
  }
}

cplx Program::run(cplx z) const {
  thread_local std::vector<cplx> reg;
  if (reg.size() < code_.size()) reg.resize(code_.size());
  for (std::size_t k = 0; k < code_.size(); ++k) {
    const Instr& in = code_[k];
    cplx& r = reg[k];
    switch (in.op) {
      case Op::Const:
        r = in.c;
        break;
      case Op::Var:
        r = z;
        break;
      case Op::Add:
        r = reg[in.a] + reg[in.b];
        break;
      case Op::Sub:
        r = reg[in.a] - reg[in.b];
        break;
      case Op::Mul:
        r = cmul(reg[in.a], reg[in.b]);
        break;
      case Op::Div:
        r = cdiv(reg[in.a], reg[in.b]);
        break;
      case Op::Neg:
        r = -reg[in.a];
        break;
      case Op::Pow:
        r = cpow(reg[in.a], in.n);
        break;
      case Op::Exp:
        r = capply(UnaryFunc::Exp, reg[in.a]);
        break;
      case Op::Log:
        r = capply(UnaryFunc::Log, reg[in.a]);
        break;
      case Op::Sin:
        r = capply(UnaryFunc::Sin, reg[in.a]);
        break;
      case Op::Cos:
        r = capply(UnaryFunc::Cos, reg[in.a]);
        break;
    }
  }
  return code_.empty() ? cplx{} : reg[code_.size() - 1];
}

// ---------------------------------------------------------------------------
// FunctionDef

FunctionDef::FunctionDef(Expr body, double magnitude_cap)
    : body_(std::move(body)), d1_(body_.derivative()), d2_(d1_.derivative()), cap_(magnitude_cap) {
  if (!(cap_ > 0.0)) throw Error(ErrorKind::ConfigError, "magnitude cap must be positive");
  p0_ = Program(body_);
  p1_ = Program(d1_);
  p2_ = Program(d2_);
}

cplx FunctionDef::capped(cplx v, double cap) {
  const double re = v.real(), im = v.imag();
  if (!std::isfinite(re) || !std::isfinite(im)) return kComplexInf;
  if (std::abs(re) > cap || std::abs(im) > cap || std::hypot(re, im) > cap) return kComplexInf;
  return v;
}

ComplexValue FunctionDef::eval(const ComplexValue& z) const {
  const cplx v = value(z.value());
  if (!is_finite(v)) return ComplexValue::infinity();
  return v;
}

ComplexValue FunctionDef::eval_derivative(const ComplexValue& z) const {
  const cplx v = capped(p1_.run(z.value()), cap_);
  if (!is_finite(v)) return ComplexValue::infinity();
  return v;
}

FunctionDef parse(std::string_view text) {
  bool blank = true;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
  if (blank) throw Error(ErrorKind::SyntaxError, "empty expression at position 0", 0);
  return FunctionDef(parse_expr(text));
}

// ---------------------------------------------------------------------------

ComplexValue::ComplexValue(cplx z) : z_(z) {
  if (std::isnan(z.real()) || std::isnan(z.imag()))
    throw Error(ErrorKind::DomainError, "NaN is not a point of the Riemann sphere");
  if (!lemni::is_finite(z)) infinite_ = true, z_ = {};
}

cplx ComplexValue::value() const {
  if (infinite_) throw Error(ErrorKind::DomainError, "point at infinity has no coordinates");
  return z_;
}

double chordal_distance(const ComplexValue& a, const ComplexValue& b) {
  if (a.is_infinite() && b.is_infinite()) return 0.0;
  if (a.is_infinite()) return 2.0 / std::sqrt(1.0 + std::norm(b.value()));
  if (b.is_infinite()) return 2.0 / std::sqrt(1.0 + std::norm(a.value()));
  const cplx x = a.value(), y = b.value();
  return 2.0 * std::abs(x - y) / std::sqrt((1.0 + std::norm(x)) * (1.0 + std::norm(y)));
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
      return "SyntaxError";
    case ErrorKind::UnsupportedOperation:
      return "UnsupportedOperation";
    case ErrorKind::DomainError:
      return "DomainError";
    case ErrorKind::ConfigError:
      return "ConfigError";
    case ErrorKind::GeometryError:
      return "GeometryError";
    case ErrorKind::TooCloseToCurve:
      return "TooCloseToCurve";
    case ErrorKind::TooCloseToImage:
      return "TooCloseToImage";
    case ErrorKind::PoleOnCurve:
      return "PoleOnCurve";
    case ErrorKind::InternalInconsistency:
      return "InternalInconsistency";
    case ErrorKind::UnresolvedCluster:
      return "UnresolvedCluster";
    case ErrorKind::BoundaryHit:
      return "BoundaryHit";
    case ErrorKind::StepCollapse:
      return "StepCollapse";
    case ErrorKind::InvalidZero:
      return "InvalidZero";
    case ErrorKind::InvalidConstant:
      return "InvalidConstant";
    case ErrorKind::NotBoundaryUnimodular:
      return "NotBoundaryUnimodular";
  }
  return "Error";
}

}  // namespace lemni
