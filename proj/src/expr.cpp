#include "uncomp/expr.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <charconv>
#include <cmath>
#include <numeric>
#include <vector>

#include "uncomp/error.hpp"

namespace uncomp {

struct Expr::Node {
  Kind kind;
  Rational value;
  int var = 0;
  Expr a;
  Expr b;
};

Rational Rational::make(long long p, long long q) {
  if (q == 0) throw DomainError("zero denominator");
  if (q < 0) {
    if (p == LLONG_MIN || q == LLONG_MIN) throw DomainError("rational out of range");
    p = -p;
    q = -q;
  }
  const long long g = std::gcd(p, q);
  return {p / g, q / g};
}

Expr Expr::rational(long long p, long long q) {
  return Expr(std::make_shared<const Node>(Node{Kind::Rational, Rational::make(p, q), 0, {}, {}}));
}
Expr Expr::pi() { return Expr(std::make_shared<const Node>(Node{Kind::Pi, {}, 0, {}, {}})); }
Expr Expr::var(int index) {
  if (index < 1) throw DomainError("variable indices start at 1");
  return Expr(std::make_shared<const Node>(Node{Kind::Var, {}, index, {}, {}}));
}
Expr Expr::add(Expr a, Expr b) {
  return Expr(std::make_shared<const Node>(Node{Kind::Add, {}, 0, std::move(a), std::move(b)}));
}
Expr Expr::mul(Expr a, Expr b) {
  return Expr(std::make_shared<const Node>(Node{Kind::Mul, {}, 0, std::move(a), std::move(b)}));
}
Expr Expr::sin(Expr a) {
  return Expr(std::make_shared<const Node>(Node{Kind::Sin, {}, 0, std::move(a), {}}));
}
Expr Expr::exp(Expr a) {
  return Expr(std::make_shared<const Node>(Node{Kind::Exp, {}, 0, std::move(a), {}}));
}

Expr::Kind Expr::kind() const { return node_->kind; }
const Rational& Expr::rational_value() const { return node_->value; }
int Expr::var_index() const { return node_->var; }

const Expr& Expr::lhs() const { return node_->a; }
const Expr& Expr::rhs() const { return node_->b; }
const Expr& Expr::arg() const { return node_->a; }

bool operator==(const Expr& x, const Expr& y) {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case Expr::Kind::Rational:
      return x.rational_value() == y.rational_value();
    case Expr::Kind::Pi:
      return true;
    case Expr::Kind::Var:
      return x.var_index() == y.var_index();
    case Expr::Kind::Add:
    case Expr::Kind::Mul:
      return x.lhs() == y.lhs() && x.rhs() == y.rhs();
    case Expr::Kind::Sin:
    case Expr::Kind::Exp:
      return x.arg() == y.arg();
  }
  return false;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int arity) : s_(text), arity_(arity) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) trailing();
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("syntax error at offset " + std::to_string(pos_) + ": " + msg, pos_);
  }

  void trailing() {
    const char c = s_[pos_];
    if (c == '-') fail("subtraction is not an operation of the expression class");
    if (c == '/') fail("division is not an operation of the expression class");
    if (c == ')') fail("unbalanced ')'");
    fail(std::string("unexpected '") + c + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expr() {
    Expr e = term();
    while (eat('+')) e = Expr::add(e, term());
    return e;
  }

  Expr term() {
    Expr e = factor();
    while (eat('*')) e = Expr::mul(e, factor());
    return e;
  }

  long long digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    long long v = 0;
    auto [p, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc()) {
      pos_ = start;
      fail("integer literal out of range");
    }
    return v;
  }

  Expr factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      bool neg = false;
      if (c == '-') {
        neg = true;
        ++pos_;
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          fail("'-' may only prefix a rational literal");
        }
      }
      long long p = digits();
      long long q = 1;
      if (eat('/')) q = digits();
      if (q == 0) fail("zero denominator");
      return Expr::rational(neg ? -p : p, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string_view word = s_.substr(start, pos_ - start);
      if (word == "pi") return Expr::pi();
      if (word == "sin" || word == "exp") {
        if (!eat('(')) fail("expected '(' after " + std::string(word));
        Expr a = expr();
        if (!eat(')')) fail("expected ')'");
        return word == "sin" ? Expr::sin(a) : Expr::exp(a);
      }
      if (word.size() >= 2 && word[0] == 'x' &&
          std::all_of(word.begin() + 1, word.end(),
                      [](char d) { return std::isdigit(static_cast<unsigned char>(d)); })) {
        int idx = 0;
        std::from_chars(word.data() + 1, word.data() + word.size(), idx);
        if (idx < 1 || idx > arity_) {
          pos_ = start;
          fail("variable " + std::string(word) + " outside arity " + std::to_string(arity_));
        }
        return Expr::var(idx);
      }
      pos_ = start;
      fail("unknown identifier '" + std::string(word) +
           "' (operations are +, *, sin, exp; constants are rationals and pi)");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  int arity_;
  std::size_t pos_ = 0;
};

void print(const Expr& e, int prec, std::string& out) {
  switch (e.kind()) {
    case Expr::Kind::Rational: {
      const auto& r = e.rational_value();
      out += std::to_string(r.num);
      if (r.den != 1) out += "/" + std::to_string(r.den);
      return;
    }
    case Expr::Kind::Pi:
      out += "pi";
      return;
    case Expr::Kind::Var:
      out += "x" + std::to_string(e.var_index());
      return;
    case Expr::Kind::Add:
      if (prec > 1) out += '(';
      print(e.lhs(), 1, out);
      out += " + ";
      print(e.rhs(), 2, out);
      if (prec > 1) out += ')';
      return;
    case Expr::Kind::Mul:
      if (prec > 2) out += '(';
      print(e.lhs(), 2, out);
      out += " * ";
      print(e.rhs(), 3, out);
      if (prec > 2) out += ')';
      return;
    case Expr::Kind::Sin:
    case Expr::Kind::Exp:
      out += e.kind() == Expr::Kind::Sin ? "sin(" : "exp(";
      print(e.arg(), 0, out);
      out += ')';
      return;
  }
}

}  // namespace

Expr parse_expr(std::string_view text, int arity) { return Parser(text, arity).parse(); }

std::string to_string(const Expr& e) {
  std::string out;
  print(e, 0, out);
  return out;
}

int max_var(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Rational:
    case Expr::Kind::Pi:
      return 0;
    case Expr::Kind::Var:
      return e.var_index();
    case Expr::Kind::Add:
    case Expr::Kind::Mul:
      return std::max(max_var(e.lhs()), max_var(e.rhs()));
    default:
      return max_var(e.arg());
  }
}

std::size_t node_count(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Add:
    case Expr::Kind::Mul:
      return 1 + node_count(e.lhs()) + node_count(e.rhs());
    case Expr::Kind::Sin:
    case Expr::Kind::Exp:
      return 1 + node_count(e.arg());
    default:
      return 1;
  }
}

namespace {

Expr substitute_unchecked(const Expr& e, int var, const Expr& g) {
  switch (e.kind()) {
    case Expr::Kind::Var:
      return e.var_index() == var ? g : e;
    case Expr::Kind::Add:
      return Expr::add(substitute_unchecked(e.lhs(), var, g), substitute_unchecked(e.rhs(), var, g));
    case Expr::Kind::Mul:
      return Expr::mul(substitute_unchecked(e.lhs(), var, g), substitute_unchecked(e.rhs(), var, g));
    case Expr::Kind::Sin:
      return Expr::sin(substitute_unchecked(e.arg(), var, g));
    case Expr::Kind::Exp:
      return Expr::exp(substitute_unchecked(e.arg(), var, g));
    default:
      return e;
  }
}

}  // namespace

Expr substitute(const Expr& e, int var, const Expr& g, int arity) {
  if (var < 1 || var > arity) throw DomainError("substituted variable outside arity");
  if (max_var(e) > arity || max_var(g) > arity) {
    throw DomainError("expression uses a variable outside arity " + std::to_string(arity));
  }
  return substitute_unchecked(e, var, g);
}

Interval eval_interval(const Expr& e, std::span<const Interval> box) {
  switch (e.kind()) {
    case Expr::Kind::Rational:
      return rational_interval(e.rational_value().num, e.rational_value().den);
    case Expr::Kind::Pi:
      return pi_interval();
    case Expr::Kind::Var:
      if (static_cast<std::size_t>(e.var_index()) > box.size()) {
        throw DomainError("box has no interval for x" + std::to_string(e.var_index()));
      }
      return box[e.var_index() - 1];
    case Expr::Kind::Add:
      return eval_interval(e.lhs(), box) + eval_interval(e.rhs(), box);
    case Expr::Kind::Mul:
      return eval_interval(e.lhs(), box) * eval_interval(e.rhs(), box);
    case Expr::Kind::Sin:
      return sin(eval_interval(e.arg(), box));
    case Expr::Kind::Exp:
      return exp(eval_interval(e.arg(), box));
  }
  throw std::logic_error("unreachable");
}

Interval eval_interval(const Expr& e, const Interval& x1) {
  return eval_interval(e, std::span<const Interval>(&x1, 1));
}

double eval_point(const Expr& e, std::span<const double> point) {
  switch (e.kind()) {
    case Expr::Kind::Rational:
      return static_cast<double>(e.rational_value().num) /
             static_cast<double>(e.rational_value().den);
    case Expr::Kind::Pi:
      return 3.141592653589793;
    case Expr::Kind::Var:
      if (static_cast<std::size_t>(e.var_index()) > point.size()) {
        throw DomainError("point has no value for x" + std::to_string(e.var_index()));
      }
      return point[e.var_index() - 1];
    case Expr::Kind::Add:
      return eval_point(e.lhs(), point) + eval_point(e.rhs(), point);
    case Expr::Kind::Mul:
      return eval_point(e.lhs(), point) * eval_point(e.rhs(), point);
    case Expr::Kind::Sin:
      return std::sin(eval_point(e.arg(), point));
    case Expr::Kind::Exp:
      return std::exp(eval_point(e.arg(), point));
  }
  throw std::logic_error("unreachable");
}

double eval_point(const Expr& e, double x1) {
  return eval_point(e, std::span<const double>(&x1, 1));
}

IntervalJet eval_jet(const Expr& e, const Interval& x1) {
  const Interval zero = Interval::point(0.0);
  switch (e.kind()) {
    case Expr::Kind::Rational:
    case Expr::Kind::Pi:
      return {eval_interval(e, x1), zero};
    case Expr::Kind::Var:
      if (e.var_index() != 1) throw DomainError("derivative requires a univariate expression");
      return {x1, Interval::point(1.0)};
    case Expr::Kind::Add: {
      auto a = eval_jet(e.lhs(), x1);
      auto b = eval_jet(e.rhs(), x1);
      return {a.value + b.value, a.derivative + b.derivative};
    }
    case Expr::Kind::Mul: {
      auto a = eval_jet(e.lhs(), x1);
      auto b = eval_jet(e.rhs(), x1);
      return {a.value * b.value, a.derivative * b.value + a.value * b.derivative};
    }
    case Expr::Kind::Sin: {
      auto a = eval_jet(e.arg(), x1);
      return {sin(a.value), cos(a.value) * a.derivative};
    }
    case Expr::Kind::Exp: {
      auto a = eval_jet(e.arg(), x1);
      Interval v = exp(a.value);
      return {v, v * a.derivative};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace uncomp
