#include "ribbonfn/format.hpp"

#include "ribbonfn/schur.hpp"

#include "json.hpp"

#include <cctype>
#include <sstream>

namespace ribbonfn {

namespace {

template <class C>
std::string coeff_text(const C& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

// |c|·q^e without sign; "1" for the unit monomial.
template <class C>
std::string monomial_text(const C& abs_c, int e, bool latex) {
  std::string q;
  if (e == 1)
    q = "q";
  else if (e > 1)
    q = latex ? "q^{" + std::to_string(e) + "}" : "q^" + std::to_string(e);
  const std::string num = coeff_text(abs_c);
  if (q.empty()) return num;
  if (num == "1") return q;
  return latex ? num + q : num + "*" + q;
}

template <class C>
std::string poly_text(const Poly<C>& p, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool neg = c < 0;
    const C mag = neg ? C(-c) : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += monomial_text(mag, e, latex);
    first = false;
  }
  return out;
}

std::string schur_text(const Partition& p, bool latex) {
  if (latex) {
    if (p.empty()) return "s_{\\varnothing}";
    return "s_{" + to_string(p) + "}";
  }
  return "s[" + to_string(p) + "]";
}

std::string symfunc_text(const SymFunc& f, bool latex) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  const std::string times = latex ? " " : "*";
  for (const auto& [lambda, c] : f.terms()) {
    bool neg = false;
    std::string coeff;
    if (c.size() == 1) {
      const auto& [e, k] = c.terms().front();
      neg = k < 0;
      const BigInt mag = neg ? BigInt(-k) : k;
      coeff = (e == 0 && mag == 1) ? "" : monomial_text(mag, e, latex) + times;
    } else {
      coeff = "(" + poly_text(c, latex) + ")" + times;
    }
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += coeff + schur_text(lambda, latex);
    first = false;
  }
  return out;
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

int parse_small_int(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  long long v = 0;
  while (pos < text.size() && is_digit(text[pos])) {
    v = v * 10 + (text[pos] - '0');
    if (v > 1'000'000) throw ParseError("integer too large", start);
    ++pos;
  }
  if (pos == start) throw ParseError("expected integer", start);
  return static_cast<int>(v);
}

void expect(std::string_view text, std::size_t& pos, char c) {
  detail::skip_space(text, pos);
  if (pos >= text.size() || text[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
  ++pos;
}

SymFunc parse_term(std::string_view text, std::size_t& pos);

SymFunc parse_unary(std::string_view text, std::size_t& pos) {
  detail::skip_space(text, pos);
  if (pos < text.size() && text[pos] == '-') {
    ++pos;
    return -parse_unary(text, pos);
  }
  if (pos < text.size() && text[pos] == '+') {
    ++pos;
    return parse_unary(text, pos);
  }
  return detail::parse_factor_at(text, pos);
}

SymFunc parse_term(std::string_view text, std::size_t& pos) {
  SymFunc acc = parse_unary(text, pos);
  for (;;) {
    detail::skip_space(text, pos);
    if (pos >= text.size() || text[pos] != '*') return acc;
    ++pos;
    acc = mult(acc, parse_unary(text, pos));
  }
}

QPoly only_constant(const SymFunc& f, std::size_t offset) {
  QPoly out;
  for (const auto& [lambda, c] : f.terms()) {
    if (!lambda.empty()) throw ParseError("expected a q-polynomial", offset);
    out = c;
  }
  return out;
}

}  // namespace

std::string to_text(const QPoly& p) { return poly_text(p, false); }
std::string to_latex(const QPoly& p) { return poly_text(p, true); }
std::string to_text(const RatQPoly& p) { return poly_text(p, false); }

std::string to_text(const SymFunc& f) { return symfunc_text(f, false); }
std::string to_latex(const SymFunc& f) { return symfunc_text(f, true); }

std::string to_json(const SymFunc& f) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [lambda, c] : f.terms()) {
    nlohmann::ordered_json coeff = nlohmann::ordered_json::array();
    for (const auto& [e, k] : c.terms()) coeff.push_back({e, k.str()});
    nlohmann::ordered_json t;
    t["index"] = lambda.parts();
    t["coeff"] = std::move(coeff);
    terms.push_back(std::move(t));
  }
  nlohmann::ordered_json j;
  j["basis"] = "schur";
  j["terms"] = std::move(terms);
  return j.dump();
}

namespace detail {

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

SymFunc parse_factor_at(std::string_view text, std::size_t& pos) {
  skip_space(text, pos);
  if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
  const char c = text[pos];
  if (is_digit(c)) {
    const std::size_t start = pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos;
    return SymFunc::constant(QPoly::constant(BigInt(std::string(text.substr(start, pos - start)))));
  }
  if (c == 'q') {
    ++pos;
    int e = 1;
    skip_space(text, pos);
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_space(text, pos);
      e = parse_small_int(text, pos);
    }
    return SymFunc::constant(q_power(e));
  }
  if (c == 's') {
    ++pos;
    expect(text, pos, '[');
    std::vector<int> parts;
    skip_space(text, pos);
    if (pos < text.size() && text[pos] != ']') {
      for (;;) {
        skip_space(text, pos);
        parts.push_back(parse_small_int(text, pos));
        skip_space(text, pos);
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        break;
      }
    }
    expect(text, pos, ']');
    return SymFunc::schur(Partition(std::move(parts)));
  }
  if (c == '(') {
    ++pos;
    SymFunc inner = parse_symfunc_at(text, pos);
    expect(text, pos, ')');
    return inner;
  }
  throw ParseError(std::string("unexpected character '") + c + "'", pos);
}

SymFunc parse_symfunc_at(std::string_view text, std::size_t& pos) {
  SymFunc acc = parse_term(text, pos);
  for (;;) {
    skip_space(text, pos);
    if (pos >= text.size()) return acc;
    if (text[pos] == '+') {
      ++pos;
      acc += parse_term(text, pos);
    } else if (text[pos] == '-') {
      ++pos;
      acc -= parse_term(text, pos);
    } else {
      return acc;
    }
  }
}

}  // namespace detail

SymFunc parse_symfunc(std::string_view text) {
  std::size_t pos = 0;
  SymFunc f = detail::parse_symfunc_at(text, pos);
  detail::skip_space(text, pos);
  if (pos != text.size()) throw ParseError("trailing input", pos);
  return f;
}

QPoly parse_qpoly(std::string_view text) { return only_constant(parse_symfunc(text), 0); }

SymFunc parse_symfunc_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  try {
    if (j.at("basis").get<std::string>() != "schur") throw InvalidInput("only the schur basis is accepted");
    SymFunc out;
    for (const auto& t : j.at("terms")) {
      const Partition lambda(t.at("index").get<std::vector<int>>());
      std::vector<QPoly::Term> coeffs;
      for (const auto& pair : t.at("coeff"))
        coeffs.emplace_back(pair.at(0).get<int>(), BigInt(pair.at(1).get<std::string>()));
      out.add_term(lambda, QPoly::from_terms(std::move(coeffs)));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed SymFunc JSON: ") + e.what(), 0);
  }
}

}  // namespace ribbonfn
