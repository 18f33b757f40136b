#pragma once

// Text, LaTeX and JSON forms of SymFunc and QPoly, and the literal parser.

#include "ribbonfn/qpoly.hpp"
#include "ribbonfn/symfunc.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ribbonfn {

/// Syntax error at a byte offset of the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// "s[1,1,1] + (q + q^2)*s[2,1] + q^3*s[3]"; the zero function is "0".
std::string to_text(const SymFunc& f);
std::string to_latex(const SymFunc& f);
/// {"basis":"schur","terms":[{"index":[3,2,1],"coeff":[[0,"1"],[2,"-3"]]}]}
std::string to_json(const SymFunc& f);

/// Accepts sums and products of integers, q^k, s[parts] and parenthesised
/// subexpressions; products of Schur functions are expanded.
SymFunc parse_symfunc(std::string_view text);
/// The JSON form above. Throws ParseError on malformed input.
SymFunc parse_symfunc_json(std::string_view text);
QPoly parse_qpoly(std::string_view text);

namespace detail {

/// Recursive-descent parser shared with the operator grammar. Parses one
/// additive expression starting at pos and advances pos past it.
SymFunc parse_symfunc_at(std::string_view text, std::size_t& pos);
/// A single factor (integer, q^k, s[...] or parenthesised expression).
SymFunc parse_factor_at(std::string_view text, std::size_t& pos);
void skip_space(std::string_view text, std::size_t& pos);

}  // namespace detail

}  // namespace ribbonfn
