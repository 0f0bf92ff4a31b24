#pragma once

// A small parser for complex-valued map expressions in one variable `w`
// (alias `z`), used by the CLI to load user-supplied conformal maps.
//
// Grammar (whitespace insignificant):
//
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := ('+' | '-') factor | power
//   power   := primary ('^' signed-integer)?
//   primary := number | 'i' | 'pi' | 'w' | 'z'
//            | func '(' expr ')' | '(' expr ')'
//   func    := exp | log | sqrt | re | im | conj | abs | cos | sin
//
// Numbers are decimal literals (1, 0.5, 2e-3).  '^' binds tighter than
// unary minus: -w^2 is -(w^2).  log and sqrt use principal branches.

#include <complex>
#include <memory>
#include <string>

#include "hd/errors.hpp"

namespace hd {

class ComplexExpr {
 public:
  using Complex = std::complex<double>;

  // Throws schema_error with a character position on malformed input.
  static ComplexExpr parse(const std::string& source);

  Complex eval(Complex w) const;
  std::string to_string() const;  // canonical form; reparses to the same map

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
};

}  // namespace hd
