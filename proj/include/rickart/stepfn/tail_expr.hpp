#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "rickart/core/errors.hpp"

namespace rickart::stepfn {

using Complex = std::complex<double>;

/// Symbolic value of a step function at the reserved points p_n = 1/(n+2),
/// as an expression tree over the index n.
///
/// Node set: constant, index n, +, x, conjugate, sqrt-of-nonneg and
/// reciprocal-where-nonzero. sqrt(v) evaluates sqrt(max(Re v, 0)); recip(v)
/// is 0 at v == 0 and 1/v elsewhere. Trees are immutable and shared.
class TailExpr {
 public:
  enum class Kind { Const, Index, Add, Mul, Conj, Sqrt, Recip, Supp };

  static TailExpr constant(Complex c) { return TailExpr(std::make_shared<Node>(Node{Kind::Const, c, {}, {}})); }
  static TailExpr index() { return TailExpr(std::make_shared<Node>(Node{Kind::Index, {}, {}, {}})); }

  friend TailExpr operator+(const TailExpr& a, const TailExpr& b) {
    if (a.is_const() && b.is_const()) return constant(a.node_->value + b.node_->value);
    if (a.is_const(0.0)) return b;
    if (b.is_const(0.0)) return a;
    return binary(Kind::Add, a, b);
  }
  friend TailExpr operator*(const TailExpr& a, const TailExpr& b) {
    if (a.is_const() && b.is_const()) return constant(a.node_->value * b.node_->value);
    if (a.is_const(0.0) || b.is_const(0.0)) return constant(0.0);
    if (a.is_const(1.0)) return b;
    if (b.is_const(1.0)) return a;
    return binary(Kind::Mul, a, b);
  }
  friend TailExpr operator-(const TailExpr& a) { return constant(-1.0) * a; }
  friend TailExpr operator-(const TailExpr& a, const TailExpr& b) { return a + (-b); }

  TailExpr conj() const {
    if (is_const()) return constant(std::conj(node_->value));
    return unary(Kind::Conj, *this);
  }
  TailExpr sqrt_nonneg() const {
    if (is_const()) return constant(sqrt_nonneg(node_->value));
    return unary(Kind::Sqrt, *this);
  }
  TailExpr recip() const {
    if (is_const()) return constant(recip(node_->value));
    return unary(Kind::Recip, *this);
  }
  /// Indicator of v != 0, exact.
  TailExpr supp() const {
    if (is_const()) return constant(supp(node_->value));
    return unary(Kind::Supp, *this);
  }

  Kind kind() const { return node_->kind; }
  bool is_const() const { return node_->kind == Kind::Const; }
  bool is_const(Complex c) const { return is_const() && node_->value == c; }
  Complex const_value() const { return node_->value; }

  Complex eval(std::uint64_t n) const { return eval(*node_, static_cast<double>(n)); }

  /// Parseable text form; parse(to_string()) evaluates identically.
  std::string to_string() const {
    std::string out;
    print(*node_, out);
    return out;
  }

  /// Grammar:
  ///   expr  := term (('+' | '-') term)*
  ///   term  := unary (('*' | '/') unary)*        a/b means a * recip(b)
  ///   unary := '-' unary | primary
  ///   primary := number | 'n' | 'i' | '(' expr ')' | ('conj' | 'sqrt' | 'recip') '(' expr ')'
  static TailExpr parse(std::string_view text) {
    Parser p{text, 0};
    TailExpr e = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("unexpected trailing input");
    return e;
  }

  static Complex sqrt_nonneg(Complex v) { return {std::sqrt(std::max(v.real(), 0.0)), 0.0}; }
  static Complex recip(Complex v) { return v == Complex(0.0, 0.0) ? Complex(0.0, 0.0) : Complex(1.0, 0.0) / v; }
  static Complex supp(Complex v) { return v == Complex(0.0, 0.0) ? Complex(0.0, 0.0) : Complex(1.0, 0.0); }

 private:
  struct Node {
    Kind kind;
    Complex value;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit TailExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static TailExpr binary(Kind k, const TailExpr& a, const TailExpr& b) {
    return TailExpr(std::make_shared<Node>(Node{k, {}, a.node_, b.node_}));
  }
  static TailExpr unary(Kind k, const TailExpr& a) { return TailExpr(std::make_shared<Node>(Node{k, {}, a.node_, {}})); }

  static Complex eval(const Node& node, double n) {
    switch (node.kind) {
      case Kind::Const: return node.value;
      case Kind::Index: return {n, 0.0};
      case Kind::Add: return eval(*node.lhs, n) + eval(*node.rhs, n);
      case Kind::Mul: return eval(*node.lhs, n) * eval(*node.rhs, n);
      case Kind::Conj: return std::conj(eval(*node.lhs, n));
      case Kind::Sqrt: return sqrt_nonneg(eval(*node.lhs, n));
      case Kind::Recip: return recip(eval(*node.lhs, n));
      case Kind::Supp: return supp(eval(*node.lhs, n));
    }
    return {};
  }

  static void print_real(double v, std::string& out) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    out.append(buf, ptr);
  }

  static void print(const Node& node, std::string& out) {
    switch (node.kind) {
      case Kind::Const: {
        const double re = node.value.real(), im = node.value.imag();
        if (im == 0.0 && re >= 0.0 && !std::signbit(re)) {
          print_real(re, out);
        } else {
          out += "(";
          print_real(re, out);
          if (im != 0.0) {
            out += " + ";
            print_real(im, out);
            out += "*i";
          }
          out += ")";
        }
        return;
      }
      case Kind::Index: out += "n"; return;
      case Kind::Add:
      case Kind::Mul:
        out += "(";
        print(*node.lhs, out);
        out += node.kind == Kind::Add ? " + " : " * ";
        print(*node.rhs, out);
        out += ")";
        return;
      case Kind::Conj: out += "conj("; break;
      case Kind::Sqrt: out += "sqrt("; break;
      case Kind::Recip: out += "recip("; break;
      case Kind::Supp: out += "supp("; break;
    }
    print(*node.lhs, out);
    out += ")";
  }

  struct Parser {
    std::string_view s;
    std::size_t pos;

    [[noreturn]] void fail(const std::string& why) const {
      throw Error(ErrorKind::InvalidArgument, "tail expression: " + why + " at offset " + std::to_string(pos));
    }
    void skip() {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
      skip();
      if (pos < s.size() && s[pos] == c) {
        ++pos;
        return true;
      }
      return false;
    }
    bool eat_word(std::string_view w) {
      skip();
      if (s.substr(pos, w.size()) == w) {
        const std::size_t end = pos + w.size();
        if (end < s.size() && (std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_')) return false;
        pos = end;
        return true;
      }
      return false;
    }
    TailExpr expr() {
      TailExpr acc = term();
      for (;;) {
        if (eat('+')) acc = acc + term();
        else if (eat('-')) acc = acc - term();
        else return acc;
      }
    }
    TailExpr term() {
      TailExpr acc = unary_expr();
      for (;;) {
        if (eat('*')) acc = acc * unary_expr();
        else if (eat('/')) acc = acc * unary_expr().recip();
        else return acc;
      }
    }
    TailExpr unary_expr() {
      if (eat('-')) return -unary_expr();
      return primary();
    }
    TailExpr call_arg() {
      if (!eat('(')) fail("expected '('");
      TailExpr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    TailExpr primary() {
      skip();
      if (pos >= s.size()) fail("unexpected end of input");
      if (eat('(')) {
        TailExpr e = expr();
        if (!eat(')')) fail("expected ')'");
        return e;
      }
      if (eat_word("conj")) return call_arg().conj();
      if (eat_word("sqrt")) return call_arg().sqrt_nonneg();
      if (eat_word("recip")) return call_arg().recip();
      if (eat_word("supp")) return call_arg().supp();
      if (eat_word("n")) return TailExpr::index();
      if (eat_word("i")) return TailExpr::constant({0.0, 1.0});
      const char c = s[pos];
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        double v = 0;
        auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
        if (ec != std::errc{}) fail("malformed number");
        pos = static_cast<std::size_t>(ptr - s.data());
        return TailExpr::constant(v);
      }
      fail(std::string("unexpected character '") + c + "'");
    }
  };

  std::shared_ptr<const Node> node_;
};

}  // namespace rickart::stepfn
