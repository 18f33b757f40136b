#pragma once

// Operator expressions:
//   E ::= S[m] | St[m] | H[m] | R{k:{d,...}} | Hcol[k] | hat(E) | omegaConj(E)
//       | perp(sym) | mul(sym) | E . E | E + E | E - E | -E | qpoly * E | (E)
// "." (composition, the left factor acts last) binds tighter than "+".

#include "ribbonfn/operators.hpp"
#include "ribbonfn/qpoly.hpp"
#include "ribbonfn/ribbon.hpp"
#include "ribbonfn/symfunc.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ribbonfn {

struct OpExpr;
using ExprPtr = std::shared_ptr<const OpExpr>;

struct OpExpr {
  enum class Kind { row, col, jing, ribbon, hcol, hat, omega_conj, perp, mul, compose, sum, scale };

  Kind kind = Kind::row;
  int index = 0;                // row, col, jing, hcol
  std::optional<Ribbon> ribbon;
  SymFunc sym;                  // perp, mul
  QPoly scalar;                 // scale
  std::vector<ExprPtr> args;    // hat, omega_conj, scale: 1; compose, sum: 2

  bool operator==(const OpExpr& o) const;
};

/// Throws ParseError (with byte offset) on syntax errors and InvalidInput on
/// well-formed but invalid arguments, e.g. a ribbon descent out of range.
ExprPtr parse_expr(std::string_view text);
/// Canonical text; parse_expr(print_expr(e)) == e.
std::string print_expr(const OpExpr& e);
LinearOp build_op(const OpExpr& e);

}  // namespace ribbonfn
