#include "doctest.h"

#include "reference.hpp"
#include "ribbonfn/basis.hpp"
#include "ribbonfn/format.hpp"
#include "ribbonfn/schur.hpp"
#include "ribbonfn/series.hpp"

using namespace ribbonfn;

namespace {

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

ref::MPoly basis_poly(Basis b, const Partition& lambda, int n) {
  if (b == Basis::m) return ref::monomial_poly(lambda.parts(), n);
  ref::MPoly r = ref::one(n);
  for (int k : lambda.parts()) {
    switch (b) {
      case Basis::h: r = ref::multiply(r, ref::complete_poly(k, n)); break;
      case Basis::e: r = ref::multiply(r, ref::elementary_poly(k, n)); break;
      case Basis::p: r = ref::multiply(r, ref::power_sum_poly(k, n)); break;
      default: break;
    }
  }
  return r;
}

// n! times the polynomial represented by an expansion of a degree-n function.
ref::MPoly scaled_expansion_poly(const Expansion& x, int n) {
  ref::MPoly r;
  for (const auto& [lambda, coeff] : x.terms) {
    BigRational c = coeff.coefficient(0) * BigRational(factorial(n));
    REQUIRE(denominator(c) == 1);
    r = ref::add(r, ref::scale(basis_poly(x.basis, lambda, n), numerator(c)));
  }
  return r;
}

}  // namespace

TEST_CASE("basis changes agree with explicit polynomials") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const SymFunc s = SymFunc::schur(lambda);
      const ref::MPoly target = ref::scale(ref::schur_poly(lambda.parts(), n), factorial(n));
      for (Basis b : {Basis::h, Basis::e, Basis::p, Basis::m}) {
        CAPTURE(basis_name(b));
        const Expansion x = basis_convert(s, b);
        CHECK(scaled_expansion_poly(x, n) == target);
        CHECK(from_basis(x) == s);
        if (b != Basis::p) CHECK(x.integral());
      }
    }
  CHECK_FALSE(basis_convert(SymFunc::schur(Partition{2}), Basis::p).integral());
}

TEST_CASE("kostka numbers and characters") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& l : partitions_of(n))
      for (const auto& m : partitions_of(n)) CHECK(kostka_number(l, m) == ref::kostka_count(l.parts(), m.parts()));
  CHECK(z_lambda(Partition{2, 1, 1}) == 4);
  CHECK(character(Partition{2, 1}, Partition{3}) == -1);
  CHECK(character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(parse_basis("p") == Basis::p);
  CHECK_THROWS_AS(parse_basis("x"), InvalidInput);
}

TEST_CASE("scalar alphabets") {
  // s_{1,1}[-1/z] = s_2[1/z] = z^{-2}
  const LaurentQ v = scalar_schur(Partition{1, 1}, Alphabet::minus_inverse_z());
  CHECK(v == LaurentQ::monomial(QPoly(1), -2));
  CHECK(scalar_schur(Partition{2}, Alphabet::minus_inverse_z()).is_zero());
  CHECK(scalar_schur(Partition{2}, Alphabet::plus_inverse_z()) == LaurentQ::monomial(QPoly(1), -2));
  CHECK(scalar_schur(Partition{}, Alphabet::zero()) == LaurentQ(1));
  CHECK(scalar_schur(Partition{1}, Alphabet::zero()).is_zero());
}

TEST_CASE("translation of s11 by -1/z") {
  const ZSeries s = plethystic_translate(SymFunc::schur(Partition{1, 1}), Alphabet::minus_inverse_z(), Window{-4, 4});
  CHECK(s.coefficient(-2) == SymFunc::one());
  CHECK(s.coefficient(-1) == SymFunc::schur(Partition{1}, QPoly(-1)));
  CHECK(s.coefficient(0) == SymFunc::schur(Partition{1, 1}));
  CHECK(s.coefficient(1).is_zero());
}

TEST_CASE("coproduct and power-sum translations agree") {
  const Alphabet alphabets[] = {Alphabet::minus_inverse_z(), Alphabet::plus_inverse_z(), Alphabet::hall_littlewood()};
  for (const auto& a : alphabets)
    for (const auto& l : partitions_up_to(4)) {
      const Window w = Window::for_degree(l.size(), 0);
      const ZSeries x = plethystic_translate(SymFunc::schur(l), a, w);
      const ZSeries y = plethystic_translate_pbasis(SymFunc::schur(l), a, w);
      for (int e = w.lo; e <= w.hi; ++e) CHECK(x.coefficient(e) == y.coefficient(e));
    }
}

TEST_CASE("omega series") {
  const ZSeries plus = omega_series(1, Window{0, 4});
  const ZSeries minus = omega_series(-1, Window{0, 4});
  for (int n = 0; n <= 4; ++n) {
    CHECK(plus.coefficient(n) == h(n));
    CHECK(minus.coefficient(n) == e(n).scaled(QPoly(n % 2 ? -1 : 1)));
  }
  CHECK_THROWS_AS(plus.coefficient(5), WindowError);
  // Omega[zX] Omega[-zX] = 1
  const ZSeries prod = plus * minus;
  CHECK(prod.coefficient(0) == SymFunc::one());
  for (int n = 1; n <= 4; ++n) CHECK(prod.coefficient(n).is_zero());
}
