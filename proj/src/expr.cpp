#include "ribbonfn/expr.hpp"

#include "ribbonfn/format.hpp"

#include <cctype>
#include <utility>

namespace ribbonfn {

namespace {

ExprPtr node(OpExpr e) { return std::make_shared<const OpExpr>(std::move(e)); }

ExprPtr unary_node(OpExpr::Kind k, ExprPtr arg) {
  OpExpr e;
  e.kind = k;
  e.args.push_back(std::move(arg));
  return node(std::move(e));
}

ExprPtr binary_node(OpExpr::Kind k, ExprPtr a, ExprPtr b) {
  OpExpr e;
  e.kind = k;
  e.args = {std::move(a), std::move(b)};
  return node(std::move(e));
}

ExprPtr scale_node(QPoly c, ExprPtr arg) {
  OpExpr e;
  e.kind = OpExpr::Kind::scale;
  e.scalar = std::move(c);
  e.args.push_back(std::move(arg));
  return node(std::move(e));
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    space();
    if (pos_ != text_.size()) fail("unexpected input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void space() { detail::skip_space(text_, pos_); }

  bool peek(char c) {
    space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool keyword(std::string_view word) {
    space();
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t end = pos_ + word.size();
    // Identifier boundary, so that "St" is not read as "S".
    if (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) return false;
    pos_ = end;
    return true;
  }

  int integer() {
    space();
    const std::size_t start = pos_;
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    long long v = 0;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) throw ParseError("integer too large", start);
      ++pos_;
    }
    if (pos_ == digits) {
      pos_ = start;
      fail("expected integer");
    }
    return static_cast<int>(neg ? -v : v);
  }

  ExprPtr sum() {
    ExprPtr acc = composition();
    for (;;) {
      if (accept('+')) {
        acc = binary_node(OpExpr::Kind::sum, acc, composition());
      } else if (peek('-')) {
        ++pos_;
        acc = binary_node(OpExpr::Kind::sum, acc, scale_node(QPoly(-1), composition()));
      } else {
        return acc;
      }
    }
  }

  ExprPtr composition() {
    ExprPtr acc = unary();
    while (accept('.')) acc = binary_node(OpExpr::Kind::compose, acc, unary());
    return acc;
  }

  // A q-polynomial factor followed by '*', or nothing (position restored).
  std::optional<QPoly> scalar_prefix() {
    space();
    if (pos_ >= text_.size()) return std::nullopt;
    const char c = text_[pos_];
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == '(')) return std::nullopt;
    const std::size_t start = pos_;
    try {
      std::size_t p = pos_;
      const SymFunc f = detail::parse_factor_at(text_, p);
      QPoly value;
      for (const auto& [lambda, coeff] : f.terms()) {
        if (!lambda.empty()) throw ParseError("not a scalar", start);
        value = coeff;
      }
      pos_ = p;
      if (!accept('*')) {
        if (c == '(') {
          pos_ = start;
          return std::nullopt;
        }
        fail("expected '*' after scalar");
      }
      return value;
    } catch (const ParseError&) {
      if (c != '(') throw;
      pos_ = start;
      return std::nullopt;
    } catch (const InvalidInput&) {
      if (c != '(') throw;
      pos_ = start;
      return std::nullopt;
    }
  }

  ExprPtr unary() {
    if (peek('-')) {
      ++pos_;
      return scale_node(QPoly(-1), unary());
    }
    if (auto c = scalar_prefix()) return scale_node(std::move(*c), unary());
    return primary();
  }

  ExprPtr indexed(OpExpr::Kind k) {
    expect('[');
    OpExpr e;
    e.kind = k;
    e.index = integer();
    expect(']');
    return node(std::move(e));
  }

  ExprPtr ribbon() {
    expect('{');
    const std::size_t at = pos_;
    const int size = integer();
    expect(':');
    expect('{');
    std::vector<int> d;
    if (!peek('}')) {
      do d.push_back(integer());
      while (accept(','));
    }
    expect('}');
    expect('}');
    OpExpr e;
    e.kind = OpExpr::Kind::ribbon;
    try {
      e.ribbon = Ribbon(size, d);
    } catch (const InvalidInput& ex) {
      throw InvalidInput(std::string(ex.what()) + " (ribbon at offset " + std::to_string(at) + ")");
    }
    return node(std::move(e));
  }

  ExprPtr sym_arg(OpExpr::Kind k) {
    expect('(');
    OpExpr e;
    e.kind = k;
    e.sym = detail::parse_symfunc_at(text_, pos_);
    expect(')');
    return node(std::move(e));
  }

  ExprPtr wrapped(OpExpr::Kind k) {
    expect('(');
    ExprPtr inner = sum();
    expect(')');
    return unary_node(k, std::move(inner));
  }

  ExprPtr primary() {
    space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (keyword("Hcol")) return indexed(OpExpr::Kind::hcol);
    if (keyword("St")) return indexed(OpExpr::Kind::col);
    if (keyword("S")) return indexed(OpExpr::Kind::row);
    if (keyword("H")) return indexed(OpExpr::Kind::jing);
    if (keyword("R")) return ribbon();
    if (keyword("hat")) return wrapped(OpExpr::Kind::hat);
    if (keyword("omegaConj")) return wrapped(OpExpr::Kind::omega_conj);
    if (keyword("perp")) return sym_arg(OpExpr::Kind::perp);
    if (keyword("mul")) return sym_arg(OpExpr::Kind::mul);
    if (accept('(')) {
      ExprPtr inner = sum();
      expect(')');
      return inner;
    }
    fail("expected an operator");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Precedence levels: sum 0, compose 1, scale/atoms 2.
int level(const OpExpr& e) {
  switch (e.kind) {
    case OpExpr::Kind::sum: return 0;
    case OpExpr::Kind::compose: return 1;
    default: return 2;
  }
}

std::string print_at(const OpExpr& e, int min_level) {
  std::string s;
  switch (e.kind) {
    case OpExpr::Kind::row: s = "S[" + std::to_string(e.index) + "]"; break;
    case OpExpr::Kind::col: s = "St[" + std::to_string(e.index) + "]"; break;
    case OpExpr::Kind::jing: s = "H[" + std::to_string(e.index) + "]"; break;
    case OpExpr::Kind::hcol: s = "Hcol[" + std::to_string(e.index) + "]"; break;
    case OpExpr::Kind::ribbon: s = "R{" + to_string(*e.ribbon) + "}"; break;
    case OpExpr::Kind::hat: s = "hat(" + print_at(*e.args[0], 0) + ")"; break;
    case OpExpr::Kind::omega_conj: s = "omegaConj(" + print_at(*e.args[0], 0) + ")"; break;
    case OpExpr::Kind::perp: s = "perp(" + to_text(e.sym) + ")"; break;
    case OpExpr::Kind::mul: s = "mul(" + to_text(e.sym) + ")"; break;
    case OpExpr::Kind::compose:
      // Composition is parsed left-associatively.
      s = print_at(*e.args[0], 1) + " . " + print_at(*e.args[1], 2);
      break;
    case OpExpr::Kind::sum: s = print_at(*e.args[0], 0) + " + " + print_at(*e.args[1], 1); break;
    case OpExpr::Kind::scale: {
      const auto& t = e.scalar.terms();
      const bool bare = t.size() == 1 && t[0].second > 0 && (t[0].second == 1 || t[0].first == 0);
      s = (bare ? to_text(e.scalar) : "(" + to_text(e.scalar) + ")") + " * " + print_at(*e.args[0], 2);
      break;
    }
  }
  return level(e) < min_level ? "(" + s + ")" : s;
}

}  // namespace

bool OpExpr::operator==(const OpExpr& o) const {
  if (kind != o.kind || index != o.index || ribbon != o.ribbon || sym != o.sym || scalar != o.scalar ||
      args.size() != o.args.size())
    return false;
  for (std::size_t i = 0; i < args.size(); ++i)
    if (!(*args[i] == *o.args[i])) return false;
  return true;
}

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const OpExpr& e) { return print_at(e, 0); }

LinearOp build_op(const OpExpr& e) {
  switch (e.kind) {
    case OpExpr::Kind::row: return bernstein_row(e.index);
    case OpExpr::Kind::col: return bernstein_col(e.index);
    case OpExpr::Kind::jing: return jing_row(e.index);
    case OpExpr::Kind::hcol: return hcol(e.index);
    case OpExpr::Kind::ribbon: return ribbon_op(*e.ribbon);
    case OpExpr::Kind::hat: return hat(build_op(*e.args[0]));
    case OpExpr::Kind::omega_conj: return omega_conj(build_op(*e.args[0]));
    case OpExpr::Kind::perp: return perp_op(e.sym);
    case OpExpr::Kind::mul: return mul_op(e.sym);
    case OpExpr::Kind::compose: return compose(build_op(*e.args[0]), build_op(*e.args[1]));
    case OpExpr::Kind::sum: return add(build_op(*e.args[0]), build_op(*e.args[1]));
    case OpExpr::Kind::scale: return scale(e.scalar, build_op(*e.args[0]));
  }
  throw InvalidInput("unknown operator node");
}

}  // namespace ribbonfn
