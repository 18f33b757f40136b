#pragma once

// Sparse univariate polynomials with exact coefficients.
//
// Poly<C> stores (exponent, coefficient) pairs sorted by exponent with no
// zero coefficients. Exponents are plain ints, so the same template serves
// q-polynomials (exponents >= 0 in practice) and Laurent polynomials in the
// auxiliary series variable z (Poly<QPoly>).

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ribbonfn {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

template <class C>
class Poly {
 public:
  using Term = std::pair<int, C>;

  Poly() = default;
  Poly(long long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace_back(0, C(c));
  }
  static Poly constant(C c) { return monomial(std::move(c), 0); }
  static Poly monomial(C c, int exponent) {
    Poly p;
    if (!is_zero_coeff(c)) p.terms_.emplace_back(exponent, std::move(c));
    return p;
  }
  /// Builds from arbitrary (exponent, coefficient) pairs; duplicates are summed.
  static Poly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    Poly p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first)
        p.terms_.back().second += t.second;
      else
        p.terms_.push_back(std::move(t));
    }
    p.drop_zeros();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int min_exponent() const { return terms_.front().first; }
  int max_exponent() const { return terms_.back().first; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

  C coefficient(int exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) return it->second;
    return C(0);
  }

  Poly operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
  }

  Poly& operator+=(const Poly& o) {
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        out.push_back(std::move(*a++));
      } else if (a == terms_.end() || b->first < a->first) {
        out.push_back(*b++);
      } else {
        C s = a->second + b->second;
        if (!is_zero_coeff(s)) out.emplace_back(a->first, std::move(s));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
    return *this;
  }
  Poly& operator-=(const Poly& o) { return *this += -o; }

  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) out.emplace_back(x.first + y.first, x.second * y.second);
    return from_terms(std::move(out));
  }

  /// Multiplies every coefficient by a scalar of the coefficient ring.
  Poly scaled(const C& c) const {
    if (is_zero_coeff(c)) return {};
    Poly p = *this;
    for (auto& t : p.terms_) t.second *= c;
    p.drop_zeros();
    return p;
  }
  /// Multiplies by x^e.
  Poly shifted(int e) const {
    Poly p = *this;
    for (auto& t : p.terms_) t.first += e;
    return p;
  }

  /// Evaluates at an integer point (exponents must be >= 0).
  C evaluate(long long x) const {
    C acc(0);
    for (const auto& t : terms_) {
      C v = t.second;
      for (int i = 0; i < t.first; ++i) v *= C(x);
      acc += v;
    }
    return acc;
  }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

 private:
  static bool is_zero_coeff(const C& c) {
    if constexpr (requires { c.is_zero(); })
      return c.is_zero();
    else
      return c == 0;
  }
  void drop_zeros() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const Term& t) { return is_zero_coeff(t.second); }),
                 terms_.end());
  }

  std::vector<Term> terms_;
};

using QPoly = Poly<BigInt>;
using RatQPoly = Poly<BigRational>;

inline QPoly q_power(int e) { return QPoly::monomial(BigInt(1), e); }

inline RatQPoly to_rational(const QPoly& p) {
  std::vector<RatQPoly::Term> t;
  for (const auto& [e, c] : p.terms()) t.emplace_back(e, BigRational(c));
  return RatQPoly::from_terms(std::move(t));
}

/// Returns the integer polynomial if every coefficient has denominator 1.
inline std::optional<QPoly> to_integral(const RatQPoly& p) {
  std::vector<QPoly::Term> t;
  for (const auto& [e, c] : p.terms()) {
    if (boost::multiprecision::denominator(c) != 1) return std::nullopt;
    t.emplace_back(e, boost::multiprecision::numerator(c));
  }
  return QPoly::from_terms(std::move(t));
}

/// Text form: ascending exponents, e.g. "1 + q", "q + q^2", "-2*q^3".
std::string to_text(const QPoly& p);
std::string to_latex(const QPoly& p);
std::string to_text(const RatQPoly& p);

}  // namespace ribbonfn
