#include "latsum/closed_form.hpp"

#include <cctype>

#include "latsum/errors.hpp"
#include "latsum/special.hpp"

namespace latsum {

namespace {

using Node = ClosedForm::Node;
using NodePtr = ClosedForm::NodePtr;
using Kind = Node::Kind;

NodePtr make(Kind k, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

NodePtr make_num(const mpq_class& q) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Num;
  n->num = q;
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodePtr parse_all() {
    NodePtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw PreconditionError("closed form parse error at " + std::to_string(pos_) + ": " + what +
                            " in '" + s_ + "'");
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

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (eat('+'))
        lhs = make(Kind::Add, lhs, term());
      else if (eat('-'))
        lhs = make(Kind::Sub, lhs, term());
      else
        return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (eat('*'))
        lhs = make(Kind::Mul, lhs, unary());
      else if (eat('/'))
        lhs = make(Kind::Div, lhs, unary());
      else
        return lhs;
    }
  }

  NodePtr unary() {
    if (eat('-')) return make(Kind::Neg, unary());
    if (eat('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (eat('^')) return make(Kind::Pow, base, unary());
    return base;
  }

  NodePtr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (eat('(')) {
      NodePtr e = expr();
      if (!eat(')')) fail("expected )");
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (name == "pi") return make(Kind::Pi);
      Kind k;
      if (name == "sqrt")
        k = Kind::Sqrt;
      else if (name == "cbrt")
        k = Kind::Cbrt;
      else if (name == "G" || name == "Gamma")
        k = Kind::Gamma;
      else
        fail("unknown name " + name);
      if (!eat('(')) fail("expected (");
      NodePtr arg = expr();
      if (!eat(')')) fail("expected )");
      return make(k, arg);
    }
    fail(std::string("unexpected character ") + c);
  }

  NodePtr number() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string whole = s_.substr(start, pos_ - start);
    std::string frac;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      size_t fs = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      frac = s_.substr(fs, pos_ - fs);
    }
    if (whole.empty() && frac.empty()) fail("bad number");
    mpz_class numer(whole + frac, 10);
    mpz_class denom = 1;
    for (size_t i = 0; i < frac.size(); ++i) denom *= 10;
    mpq_class q(numer, denom);
    q.canonicalize();
    return make_num(q);
  }

  const std::string& s_;
  size_t pos_ = 0;
};

Real eval_node(const Node& n);

bool exact_integer(const Node& n, long& out) {
  mpq_class q;
  if (n.kind == Kind::Num) {
    q = n.num;
  } else if (n.kind == Kind::Neg && n.a->kind == Kind::Num) {
    q = -n.a->num;
  } else {
    return false;
  }
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return false;
  out = q.get_num().get_si();
  return true;
}

Real eval_node(const Node& n) {
  switch (n.kind) {
    case Kind::Num:
      return Real(n.num);
    case Kind::Pi:
      return Real::pi();
    case Kind::Add:
      return eval_node(*n.a) + eval_node(*n.b);
    case Kind::Sub:
      return eval_node(*n.a) - eval_node(*n.b);
    case Kind::Mul:
      return eval_node(*n.a) * eval_node(*n.b);
    case Kind::Div: {
      Real d = eval_node(*n.b);
      if (d.is_zero()) throw DomainError("closed form: division by zero");
      return eval_node(*n.a) / d;
    }
    case Kind::Pow: {
      long e;
      if (exact_integer(*n.b, e)) return pow(eval_node(*n.a), e);
      return pow(eval_node(*n.a), eval_node(*n.b));
    }
    case Kind::Neg:
      return -eval_node(*n.a);
    case Kind::Sqrt:
      return sqrt(eval_node(*n.a));
    case Kind::Cbrt:
      return cbrt(eval_node(*n.a));
    case Kind::Gamma:
      return gamma(eval_node(*n.a));
  }
  throw InternalConsistencyError("closed form: bad node");
}

bool node_has_gamma(const Node& n) {
  if (n.kind == Kind::Gamma) return true;
  return (n.a && node_has_gamma(*n.a)) || (n.b && node_has_gamma(*n.b));
}

bool node_rational(const Node& n, mpq_class& out) {
  mpq_class x, y;
  switch (n.kind) {
    case Kind::Num:
      out = n.num;
      return true;
    case Kind::Neg:
      if (!node_rational(*n.a, x)) return false;
      out = -x;
      return true;
    case Kind::Add:
    case Kind::Sub:
    case Kind::Mul:
    case Kind::Div:
      if (!node_rational(*n.a, x) || !node_rational(*n.b, y)) return false;
      if (n.kind == Kind::Add) out = x + y;
      if (n.kind == Kind::Sub) out = x - y;
      if (n.kind == Kind::Mul) out = x * y;
      if (n.kind == Kind::Div) {
        if (y == 0) return false;
        out = x / y;
      }
      return true;
    case Kind::Pow: {
      long e;
      if (!node_rational(*n.a, x) || !exact_integer(*n.b, e)) return false;
      mpq_class r = 1;
      mpq_class base = e < 0 ? mpq_class(1) / x : x;
      for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
      out = r;
      return true;
    }
    default:
      return false;
  }
}

std::string render(const Node& n) {
  switch (n.kind) {
    case Kind::Num:
      return n.num.get_str();
    case Kind::Pi:
      return "pi";
    case Kind::Add:
      return "(" + render(*n.a) + " + " + render(*n.b) + ")";
    case Kind::Sub:
      return "(" + render(*n.a) + " - " + render(*n.b) + ")";
    case Kind::Mul:
      return render(*n.a) + "*" + render(*n.b);
    case Kind::Div:
      return render(*n.a) + "/(" + render(*n.b) + ")";
    case Kind::Pow:
      return "(" + render(*n.a) + ")^(" + render(*n.b) + ")";
    case Kind::Neg:
      return "-(" + render(*n.a) + ")";
    case Kind::Sqrt:
      return "sqrt(" + render(*n.a) + ")";
    case Kind::Cbrt:
      return "cbrt(" + render(*n.a) + ")";
    case Kind::Gamma:
      return "G(" + render(*n.a) + ")";
  }
  return "?";
}

void collect_terms(const NodePtr& n, bool negate, std::vector<NodePtr>& out) {
  if (n->kind == Kind::Add) {
    collect_terms(n->a, negate, out);
    collect_terms(n->b, negate, out);
  } else if (n->kind == Kind::Sub) {
    collect_terms(n->a, negate, out);
    collect_terms(n->b, !negate, out);
  } else {
    out.push_back(negate ? make(Kind::Neg, n) : n);
  }
}

}  // namespace

ClosedForm ClosedForm::parse(const std::string& text) {
  Parser p(text);
  return ClosedForm(p.parse_all(), text);
}

Real ClosedForm::eval() const { return eval_node(*root_); }

std::vector<ClosedForm> ClosedForm::terms() const {
  std::vector<NodePtr> parts;
  collect_terms(root_, false, parts);
  std::vector<ClosedForm> out;
  for (auto& p : parts) out.push_back(ClosedForm(p, render(*p)));
  return out;
}

bool ClosedForm::has_gamma() const { return node_has_gamma(*root_); }

bool ClosedForm::rational_value(mpq_class& out) const { return node_rational(*root_, out); }

}  // namespace latsum
