#include "hd/expr.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>
#include <vector>

namespace hd {

using Complex = ComplexExpr::Complex;

struct ComplexExpr::Node {
  enum class Kind { kNumber, kImag, kPi, kVar, kUnary, kBinary, kPow, kCall };
  Kind kind;
  double number = 0.0;
  char op = 0;          // + - * / for kBinary, - for kUnary
  int exponent = 1;     // kPow
  std::string func;     // kCall
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = ComplexExpr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

class Parser {
 public:
  explicit Parser(const std::string& s) : src_(s) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw schema_error("expression error at position " + std::to_string(pos_) +
                       ": " + why);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  NodePtr expr() {
    NodePtr lhs = term();
    while (true) {
      if (eat('+'))
        lhs = make({Node::Kind::kBinary, 0, '+', 1, {}, lhs, term()});
      else if (eat('-'))
        lhs = make({Node::Kind::kBinary, 0, '-', 1, {}, lhs, term()});
      else
        return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = factor();
    while (true) {
      if (eat('*'))
        lhs = make({Node::Kind::kBinary, 0, '*', 1, {}, lhs, factor()});
      else if (eat('/'))
        lhs = make({Node::Kind::kBinary, 0, '/', 1, {}, lhs, factor()});
      else
        return lhs;
    }
  }

  NodePtr factor() {
    if (eat('+')) return factor();
    if (eat('-')) return make({Node::Kind::kUnary, 0, '-', 1, {}, factor(), {}});
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (eat('^')) {
      skip_ws();
      bool neg = false;
      if (eat('-')) neg = true;
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (pos_ == start) fail("expected integer exponent after '^'");
      int e = std::stoi(src_.substr(start, pos_ - start));
      return make({Node::Kind::kPow, 0, 0, neg ? -e : e, {}, base, {}});
    }
    return base;
  }

  NodePtr primary() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return name();
    if (eat('(')) {
      NodePtr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  NodePtr number() {
    std::size_t end = pos_;
    auto digits = [&] {
      while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
    };
    digits();
    if (end < src_.size() && src_[end] == '.') {
      ++end;
      digits();
    }
    if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
      std::size_t mark = end;
      ++end;
      if (end < src_.size() && (src_[end] == '+' || src_[end] == '-')) ++end;
      std::size_t ds = end;
      digits();
      if (end == ds) end = mark;  // not an exponent after all
    }
    double v = 0.0;
    try {
      v = std::stod(src_.substr(pos_, end - pos_));
    } catch (const std::exception&) {
      fail("invalid number literal");
    }
    pos_ = end;
    return make({Node::Kind::kNumber, v, 0, 1, {}, {}, {}});
  }

  NodePtr name() {
    std::size_t end = pos_;
    while (end < src_.size() && std::isalpha(static_cast<unsigned char>(src_[end]))) ++end;
    const std::string id = src_.substr(pos_, end - pos_);
    pos_ = end;
    if (id == "i") return make({Node::Kind::kImag, 0, 0, 1, {}, {}, {}});
    if (id == "pi") return make({Node::Kind::kPi, 0, 0, 1, {}, {}, {}});
    if (id == "w" || id == "z") return make({Node::Kind::kVar, 0, 0, 1, {}, {}, {}});
    static const char* kFuncs[] = {"exp", "log", "sqrt", "re", "im", "conj", "abs", "cos", "sin"};
    for (const char* f : kFuncs) {
      if (id == f) {
        if (!eat('(')) fail("expected '(' after function name");
        NodePtr arg = expr();
        if (!eat(')')) fail("expected ')'");
        Node n{Node::Kind::kCall, 0, 0, 1, id, arg, {}};
        return make(std::move(n));
      }
    }
    fail("unknown identifier '" + id + "'");
  }

  const std::string& src_;
  std::size_t pos_ = 0;
};

Complex eval_node(const Node& n, Complex w) {
  using K = Node::Kind;
  switch (n.kind) {
    case K::kNumber: return Complex(n.number, 0.0);
    case K::kImag: return Complex(0.0, 1.0);
    case K::kPi: return Complex(std::numbers::pi, 0.0);
    case K::kVar: return w;
    case K::kUnary: return -eval_node(*n.lhs, w);
    case K::kBinary: {
      const Complex a = eval_node(*n.lhs, w), b = eval_node(*n.rhs, w);
      switch (n.op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        default: return a / b;
      }
    }
    case K::kPow: {
      const Complex base = eval_node(*n.lhs, w);
      Complex r(1.0, 0.0);
      const int e = n.exponent >= 0 ? n.exponent : -n.exponent;
      for (int j = 0; j < e; ++j) r *= base;
      return n.exponent >= 0 ? r : Complex(1.0, 0.0) / r;
    }
    case K::kCall: {
      const Complex a = eval_node(*n.lhs, w);
      if (n.func == "exp") return std::exp(a);
      if (n.func == "log") return std::log(a);
      if (n.func == "sqrt") return std::sqrt(a);
      if (n.func == "re") return Complex(a.real(), 0.0);
      if (n.func == "im") return Complex(a.imag(), 0.0);
      if (n.func == "conj") return std::conj(a);
      if (n.func == "abs") return Complex(std::abs(a), 0.0);
      if (n.func == "cos") return std::cos(a);
      return std::sin(a);
    }
  }
  return {};
}

void print_node(const Node& n, std::ostringstream& out) {
  using K = Node::Kind;
  switch (n.kind) {
    case K::kNumber: out << n.number; break;
    case K::kImag: out << "i"; break;
    case K::kPi: out << "pi"; break;
    case K::kVar: out << "w"; break;
    case K::kUnary:
      out << "(-";
      print_node(*n.lhs, out);
      out << ")";
      break;
    case K::kBinary:
      out << "(";
      print_node(*n.lhs, out);
      out << n.op;
      print_node(*n.rhs, out);
      out << ")";
      break;
    case K::kPow:
      out << "(";
      print_node(*n.lhs, out);
      out << "^" << n.exponent;
      out << ")";
      break;
    case K::kCall:
      out << n.func << "(";
      print_node(*n.lhs, out);
      out << ")";
      break;
  }
}

}  // namespace

ComplexExpr ComplexExpr::parse(const std::string& source) {
  ComplexExpr e;
  e.root_ = Parser(source).parse();
  return e;
}

Complex ComplexExpr::eval(Complex w) const {
  if (!root_) throw schema_error("evaluating an empty expression");
  return eval_node(*root_, w);
}

std::string ComplexExpr::to_string() const {
  std::ostringstream out;
  out.precision(17);
  if (root_) print_node(*root_, out);
  return out.str();
}

}  // namespace hd
