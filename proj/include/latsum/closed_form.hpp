#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "latsum/numeric.hpp"

namespace latsum {

// Small expression language for closed forms:
//   numbers, pi, sqrt(e), cbrt(e), G(e) for the gamma function,
//   + - * / ^ and parentheses.
class ClosedForm {
 public:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  static ClosedForm parse(const std::string& text);

  Real eval() const;
  const std::string& text() const { return text_; }
  // top level summands, signs folded into each term
  std::vector<ClosedForm> terms() const;
  bool has_gamma() const;
  // exact rational value if the expression has no pi, roots or gamma
  bool rational_value(mpq_class& out) const;

 private:
  ClosedForm(NodePtr root, std::string text) : root_(std::move(root)), text_(std::move(text)) {}
  NodePtr root_;
  std::string text_;
};

struct ClosedForm::Node {
  enum class Kind { Num, Pi, Add, Sub, Mul, Div, Pow, Neg, Sqrt, Cbrt, Gamma };
  Kind kind;
  mpq_class num;
  NodePtr a;
  NodePtr b;
};

}  // namespace latsum
