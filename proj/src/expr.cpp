#include "secm/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "secm/errors.hpp"

namespace secm {

struct Expr::Node {
  Kind kind;
  double value = 0.0;
  std::string function;
  std::vector<Expr> operands;
};

const std::vector<std::string>& known_functions() {
  static const std::vector<std::string> names{"sqrt", "ln", "exp", "sin", "cos", "atan", "abs"};
  return names;
}

Expr Expr::number(double value) {
  return Expr(std::make_shared<const Node>(Node{Kind::number, value, {}, {}}));
}

Expr Expr::variable() { return Expr(std::make_shared<const Node>(Node{Kind::variable, 0.0, {}, {}})); }

Expr Expr::negate(Expr operand) {
  return Expr(std::make_shared<const Node>(Node{Kind::negate, 0.0, {}, {std::move(operand)}}));
}

Expr Expr::binary(Kind kind, Expr lhs, Expr rhs) {
  if (kind == Kind::number || kind == Kind::variable || kind == Kind::negate || kind == Kind::call) {
    throw InputError("not a binary operator");
  }
  return Expr(
      std::make_shared<const Node>(Node{kind, 0.0, {}, {std::move(lhs), std::move(rhs)}}));
}

Expr Expr::call(std::string_view function, Expr argument) {
  const auto& names = known_functions();
  if (std::find(names.begin(), names.end(), function) == names.end()) {
    throw UnknownFunction(0, std::string(function));
  }
  return Expr(std::make_shared<const Node>(
      Node{Kind::call, 0.0, std::string(function), {std::move(argument)}}));
}

Expr::Kind Expr::kind() const { return node_->kind; }
double Expr::value() const { return node_->value; }
const std::string& Expr::function() const { return node_->function; }
const std::vector<Expr>& Expr::operands() const { return node_->operands; }

namespace {

[[noreturn]] void fail(const std::string& what, double x) {
  std::ostringstream msg;
  msg << what << " at x = " << x;
  throw EvaluationFailure(msg.str());
}

double apply_function(const std::string& name, double v, double x) {
  if (name == "sqrt") {
    if (v < 0.0) fail("sqrt of a negative number", x);
    return std::sqrt(v);
  }
  if (name == "ln") {
    if (!(v > 0.0)) fail("ln of a non-positive number", x);
    return std::log(v);
  }
  if (name == "exp") return std::exp(v);
  if (name == "sin") return std::sin(v);
  if (name == "cos") return std::cos(v);
  if (name == "atan") return std::atan(v);
  return std::abs(v);
}

}  // namespace

double Expr::evaluate(double x) const {
  const Node& n = *node_;
  double r = 0.0;
  switch (n.kind) {
    case Kind::number:
      return n.value;
    case Kind::variable:
      return x;
    case Kind::negate:
      return -n.operands[0].evaluate(x);
    case Kind::call:
      r = apply_function(n.function, n.operands[0].evaluate(x), x);
      break;
    default: {
      const double a = n.operands[0].evaluate(x);
      const double b = n.operands[1].evaluate(x);
      switch (n.kind) {
        case Kind::add:
          r = a + b;
          break;
        case Kind::subtract:
          r = a - b;
          break;
        case Kind::multiply:
          r = a * b;
          break;
        case Kind::divide:
          if (b == 0.0) fail("division by zero", x);
          r = a / b;
          break;
        default:
          r = std::pow(a, b);
          break;
      }
    }
  }
  if (!std::isfinite(r)) fail("non-finite value", x);
  return r;
}

RealFunction Expr::function_object() const {
  return [e = *this](double x) { return e.evaluate(x); };
}

std::string Expr::print() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::number: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", n.value);
      return buf;
    }
    case Kind::variable:
      return "x";
    case Kind::negate:
      return "(-" + n.operands[0].print() + ")";
    case Kind::call:
      return n.function + "(" + n.operands[0].print() + ")";
    default:
      break;
  }
  char op = '^';
  if (n.kind == Kind::add) op = '+';
  if (n.kind == Kind::subtract) op = '-';
  if (n.kind == Kind::multiply) op = '*';
  if (n.kind == Kind::divide) op = '/';
  return "(" + n.operands[0].print() + op + n.operands[1].print() + ")";
}

bool operator==(const Expr& lhs, const Expr& rhs) {
  const Expr::Node& a = *lhs.node_;
  const Expr::Node& b = *rhs.node_;
  return a.kind == b.kind && a.value == b.value && a.function == b.function &&
         a.operands == b.operands;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse() {
    skip_space();
    if (pos_ == src_.size()) expected({"expression"});
    Expr e = expr();
    skip_space();
    if (pos_ != src_.size()) expected({"operator", "end of input"});
    return e;
  }

 private:
  Expr expr() {
    Expr lhs = term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        lhs = Expr::binary(Expr::Kind::add, lhs, term());
      } else if (accept('-')) {
        lhs = Expr::binary(Expr::Kind::subtract, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = factor();
    for (;;) {
      skip_space();
      if (accept('*')) {
        lhs = Expr::binary(Expr::Kind::multiply, lhs, factor());
      } else if (accept('/')) {
        lhs = Expr::binary(Expr::Kind::divide, lhs, factor());
      } else {
        return lhs;
      }
    }
  }

  Expr factor() {
    Expr base = unary();
    skip_space();
    if (accept('^')) return Expr::binary(Expr::Kind::power, base, factor());
    return base;
  }

  Expr unary() {
    skip_space();
    if (accept('-')) return Expr::negate(unary());
    return primary();
  }

  Expr primary() {
    skip_space();
    if (pos_ == src_.size()) expected({"number", "x", "function", "("});
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      skip_space();
      if (!accept(')')) expected({")"});
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                    src_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(src_.substr(start, pos_ - start));
      if (name == "x") return Expr::variable();
      const auto& names = known_functions();
      if (std::find(names.begin(), names.end(), name) == names.end()) {
        throw UnknownFunction(start, name);
      }
      skip_space();
      if (!accept('(')) expected({"("});
      Expr argument = expr();
      skip_space();
      if (!accept(')')) expected({")"});
      return Expr::call(name, argument);
    }
    expected({"number", "x", "function", "("});
  }

  Expr number() {
    const std::size_t start = pos_;
    const auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (accept('.')) mantissa += digits();
    if (mantissa == 0) {
      pos_ = start;
      expected({"digit"});
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (digits() == 0) expected({"exponent digits"});
    }
    double value = 0.0;
    const auto [end, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (ec != std::errc() || end != src_.data() + pos_ || !std::isfinite(value)) {
      throw SyntaxError(start, {"finite number"},
                        "number out of range at offset " + std::to_string(start));
    }
    return Expr::number(value);
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void expected(std::vector<std::string> tokens) {
    std::ostringstream msg;
    msg << "syntax error at offset " << pos_ << ": expected ";
    for (std::size_t k = 0; k < tokens.size(); ++k) msg << (k ? ", " : "") << tokens[k];
    if (pos_ < src_.size()) {
      msg << ", found '" << src_[pos_] << "'";
    } else {
      msg << ", found end of input";
    }
    throw SyntaxError(pos_, std::move(tokens), msg.str());
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view src) { return Parser(src).parse(); }

}  // namespace secm
