#pragma once

// Complex expressions in one variable `z` with symbolic differentiation.
//
// Grammar (standard precedence, all operators left-associative except `^`):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   integer := ['-'] digits | '(' ['-'] digits ')'
//   primary := number | number 'i' | 'z' | 'i' | 'pi' | 'e'
//            | ('exp' | 'log' | 'sin' | 'cos') '(' expr ')' | '(' expr ')'
//
// `log` is the principal branch. Exponents must be integer literals; anything
// else raises UnsupportedOperation.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lemni/complex_value.hpp"
#include "lemni/error.hpp"

namespace lemni {

namespace detail {
struct Node;
}

enum class UnaryFunc { Exp, Log, Sin, Cos };

/// Immutable expression DAG. Subexpressions are shared, never copied.
class Expr {
 public:
  Expr();  // the constant 0

  static Expr constant(cplx c);
  static Expr variable();

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);

  friend Expr pow(const Expr& base, int exponent);
  friend Expr apply(UnaryFunc fn, const Expr& arg);

  Expr derivative() const;

  bool is_constant() const;
  /// Number of distinct nodes in the DAG.
  std::size_t size() const;
  /// Fully parenthesized where needed so that parsing the output rebuilds the
  /// same tree shape (and so the same floating-point evaluation order).
  std::string to_string() const;

  const detail::Node* node() const { return node_.get(); }

 private:
  explicit Expr(std::shared_ptr<const detail::Node> n) : node_(std::move(n)) {}
  friend struct detail::Node;
  friend class Parser;
  friend Expr make_node(std::shared_ptr<const detail::Node>);
  std::shared_ptr<const detail::Node> node_;
};

inline Expr exp(const Expr& a) { return apply(UnaryFunc::Exp, a); }
inline Expr log(const Expr& a) { return apply(UnaryFunc::Log, a); }
inline Expr sin(const Expr& a) { return apply(UnaryFunc::Sin, a); }
inline Expr cos(const Expr& a) { return apply(UnaryFunc::Cos, a); }

/// Parses `text`. Throws Error(SyntaxError) with the 0-based offset of the
/// offending character, or Error(UnsupportedOperation).
Expr parse_expr(std::string_view text);

/// Flattened register program for one expression DAG.
class Program {
 public:
  Program() = default;
  explicit Program(const Expr& e);

  /// Raw evaluation. Poles come back as non-finite values; log(0) throws.
  cplx run(cplx z) const;

 private:
  enum class Op : std::uint8_t { Const, Var, Add, Sub, Mul, Div, Neg, Pow, Exp, Log, Sin, Cos };
  struct Instr {
    Op op;
    std::int32_t a = -1;
    std::int32_t b = -1;
    std::int32_t n = 0;
    cplx c{};
  };
  std::vector<Instr> code_;
};

/// A meromorphic function f together with its formal derivatives f' and f''.
/// Immutable; safe to share across threads.
class FunctionDef {
 public:
  static constexpr double kDefaultCap = 1e15;

  explicit FunctionDef(Expr body, double magnitude_cap = kDefaultCap);

  const Expr& body() const { return body_; }
  const Expr& derivative_body() const { return d1_; }
  double magnitude_cap() const { return cap_; }

  /// f(z); PointAtInfinity at poles or when |f| exceeds the magnitude cap.
  ComplexValue eval(const ComplexValue& z) const;
  ComplexValue eval_derivative(const ComplexValue& z) const;

  // Raw kernels for the numerical modules. `value` applies the magnitude cap
  // (complex infinity past it); `raw`, `d1` and `d2` only map non-finite
  // results to complex infinity.
  cplx value(cplx z) const { return capped(p0_.run(z), cap_); }
  cplx raw(cplx z) const { return capped(p0_.run(z), kNoCap); }
  cplx d1(cplx z) const { return capped(p1_.run(z), kNoCap); }
  cplx d2(cplx z) const { return capped(p2_.run(z), kNoCap); }

  /// The function f' as its own FunctionDef.
  FunctionDef derivative() const { return FunctionDef(d1_, cap_); }
  /// z ↦ f(z) - w.
  FunctionDef shifted(cplx w) const { return FunctionDef(body_ - Expr::constant(w), cap_); }

  std::string to_string() const { return body_.to_string(); }

 private:
  static constexpr double kNoCap = 1e300;
  static cplx capped(cplx v, double cap);

  Expr body_, d1_, d2_;
  Program p0_, p1_, p2_;
  double cap_;
};

FunctionDef parse(std::string_view text);
inline ComplexValue eval(const FunctionDef& f, const ComplexValue& z) { return f.eval(z); }
inline ComplexValue eval_derivative(const FunctionDef& f, const ComplexValue& z) {
  return f.eval_derivative(z);
}

/// Prints a complex constant so that parsing yields the identical value.
std::string format_constant(cplx c);

}  // namespace lemni
