#include "fracvoigt/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <vector>

#include "fracvoigt/errors.hpp"

namespace fracvoigt::expr {

enum class Func { Exp, Log, Sqrt, Sin, Cos, Abs, Pow };

struct FuncInfo {
  std::string_view name;
  Func func;
  int arity;
};

constexpr std::array<FuncInfo, 7> kFunctions{{
    {"exp", Func::Exp, 1},
    {"log", Func::Log, 1},
    {"sqrt", Func::Sqrt, 1},
    {"sin", Func::Sin, 1},
    {"cos", Func::Cos, 1},
    {"abs", Func::Abs, 1},
    {"pow", Func::Pow, 2},
}};

struct Node {
  enum class Kind { Number, Variable, Negate, Add, Sub, Mul, Div, Pow, Call };

  Kind kind;
  double number = 0.0;
  Func func = Func::Exp;
  std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Kind kind, std::vector<NodePtr> args) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->args = std::move(args);
  return n;
}

std::string_view func_name(Func f) {
  for (const auto& info : kFunctions) {
    if (info.func == f) {
      return info.name;
    }
  }
  return "?";
}

void print(const Node& n, const std::string& var, std::string& out) {
  switch (n.kind) {
    case Node::Kind::Number: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", n.number);
      out += buf;
      return;
    }
    case Node::Kind::Variable:
      out += var;
      return;
    case Node::Kind::Negate:
      out += "(-";
      print(*n.args[0], var, out);
      out += ')';
      return;
    case Node::Kind::Call:
      out += func_name(n.func);
      out += '(';
      for (std::size_t i = 0; i < n.args.size(); ++i) {
        if (i > 0) {
          out += ", ";
        }
        print(*n.args[i], var, out);
      }
      out += ')';
      return;
    default:
      break;
  }
  static constexpr std::array<char, 9> kOps{'?', '?', '?', '+', '-', '*', '/', '^', '?'};
  out += '(';
  print(*n.args[0], var, out);
  out += ' ';
  out += kOps[static_cast<std::size_t>(n.kind)];
  out += ' ';
  print(*n.args[1], var, out);
  out += ')';
}

std::string text(const Node& n, const std::string& var) {
  std::string s;
  print(n, var, s);
  return s;
}

double eval(const Node& n, const std::string& var, double x) {
  auto fail = [&](const char* what) -> double {
    throw EvaluationError(std::string(what) + " in " + text(n, var) + " at " + var + " = " +
                          std::to_string(x));
  };
  auto arg = [&](std::size_t i) { return eval(*n.args[i], var, x); };

  double v = 0.0;
  switch (n.kind) {
    case Node::Kind::Number:
      return n.number;
    case Node::Kind::Variable:
      v = x;
      break;
    case Node::Kind::Negate:
      v = -arg(0);
      break;
    case Node::Kind::Add:
      v = arg(0) + arg(1);
      break;
    case Node::Kind::Sub:
      v = arg(0) - arg(1);
      break;
    case Node::Kind::Mul:
      v = arg(0) * arg(1);
      break;
    case Node::Kind::Div: {
      const double num = arg(0);
      const double den = arg(1);
      if (den == 0.0) {
        return fail("division by zero");
      }
      v = num / den;
      break;
    }
    case Node::Kind::Pow:
      v = std::pow(arg(0), arg(1));
      break;
    case Node::Kind::Call: {
      const double a = arg(0);
      switch (n.func) {
        case Func::Exp:
          v = std::exp(a);
          break;
        case Func::Log:
          if (!(a > 0.0)) {
            return fail("log of a nonpositive value");
          }
          v = std::log(a);
          break;
        case Func::Sqrt:
          if (a < 0.0) {
            return fail("sqrt of a negative value");
          }
          v = std::sqrt(a);
          break;
        case Func::Sin:
          v = std::sin(a);
          break;
        case Func::Cos:
          v = std::cos(a);
          break;
        case Func::Abs:
          v = std::abs(a);
          break;
        case Func::Pow:
          v = std::pow(a, arg(1));
          break;
      }
      break;
    }
  }
  if (!std::isfinite(v)) {
    return fail("non-finite result");
  }
  return v;
}

class Parser {
 public:
  Parser(std::string_view src, std::string_view var) : src_(src), var_(var) {}

  NodePtr parse_all() {
    skip_space();
    if (pos_ == src_.size()) {
      throw ParseError(pos_, "empty expression");
    }
    NodePtr root = sum();
    skip_space();
    if (pos_ != src_.size()) {
      if (is_ident_start(src_[pos_]) || src_[pos_] == '(' || std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        throw ParseError(pos_, "expected an operator (implicit multiplication is not supported)");
      }
      throw ParseError(pos_, std::string("unexpected '") + src_[pos_] + "'");
    }
    return root;
  }

 private:
  static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      throw ParseError(pos_, std::string("expected '") + c + "'");
    }
  }

  NodePtr sum() {
    NodePtr lhs = product();
    for (;;) {
      if (accept('+')) {
        lhs = make(Node::Kind::Add, {lhs, product()});
      } else if (accept('-')) {
        lhs = make(Node::Kind::Sub, {lhs, product()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr product() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = make(Node::Kind::Mul, {lhs, unary()});
      } else if (accept('/')) {
        lhs = make(Node::Kind::Div, {lhs, unary()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) {
      return make(Node::Kind::Negate, {unary()});
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) {
      return make(Node::Kind::Pow, {base, unary()});
    }
    return base;
  }

  NodePtr primary() {
    skip_space();
    if (pos_ == src_.size()) {
      throw ParseError(pos_, "expected an operand, found end of input");
    }
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = sum();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return number();
    }
    if (is_ident_start(c)) {
      return identifier();
    }
    throw ParseError(pos_, std::string("expected an operand, found '") + c + "'");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t k = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        ++k;
      }
      return k;
    };
    std::size_t mantissa = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) {
      throw ParseError(start, "malformed number");
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      // Only an exponent if digits follow; otherwise "2eps" reports the
      // missing operator rather than a bad number.
      std::size_t k = pos_ + 1;
      if (k < src_.size() && (src_[k] == '+' || src_[k] == '-')) {
        ++k;
      }
      if (k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]))) {
        pos_ = k;
        digits();
      }
    }
    double value = 0.0;
    const auto [end, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (ec != std::errc() || end != src_.data() + pos_ || !std::isfinite(value)) {
      throw ParseError(start, "number out of range");
    }
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Number;
    n->number = value;
    return n;
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && is_ident_char(src_[pos_])) {
      ++pos_;
    }
    const std::string_view name = src_.substr(start, pos_ - start);
    skip_space();
    const bool call = pos_ < src_.size() && src_[pos_] == '(';
    if (call) {
      for (const auto& info : kFunctions) {
        if (info.name == name) {
          return call_args(info, start);
        }
      }
      throw ParseError(start, "unknown function '" + std::string(name) + "'");
    }
    if (name == var_) {
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Variable;
      return n;
    }
    for (const auto& info : kFunctions) {
      if (info.name == name) {
        throw ParseError(pos_, "expected '(' after function '" + std::string(name) + "'");
      }
    }
    throw ParseError(start, "unknown identifier '" + std::string(name) + "' (the variable is '" +
                                std::string(var_) + "')");
  }

  NodePtr call_args(const FuncInfo& info, std::size_t start) {
    expect('(');
    std::vector<NodePtr> args{sum()};
    while (accept(',')) {
      args.push_back(sum());
    }
    expect(')');
    if (static_cast<int>(args.size()) != info.arity) {
      throw ParseError(start, std::string(info.name) + " takes " + std::to_string(info.arity) +
                                  " argument(s), got " + std::to_string(args.size()));
    }
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Call;
    n->func = info.func;
    n->args = std::move(args);
    return n;
  }

  std::string_view src_;
  std::string_view var_;
  std::size_t pos_ = 0;
};

bool valid_variable(std::string_view v) {
  if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_')) {
    return false;
  }
  for (char c : v) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
      return false;
    }
  }
  return true;
}

}  // namespace

double Expr::operator()(double x) const { return eval(*root_, variable_, x); }

std::string Expr::to_string() const { return text(*root_, variable_); }

Expr parse(std::string_view source, std::string_view variable) {
  if (!valid_variable(variable)) {
    throw DomainError("invalid variable name '" + std::string(variable) + "'");
  }
  Parser parser(source, variable);
  return Expr(parser.parse_all(), std::string(variable));
}

}  // namespace fracvoigt::expr
