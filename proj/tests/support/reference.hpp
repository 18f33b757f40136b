#pragma once

// Test-only references that share no code with the library: symmetric
// functions as explicit polynomials in n variables, tableaux enumerated by
// brute force, and Kostka-Foulkes polynomials from the charge statistic.

#include "ribbonfn/partition.hpp"
#include "ribbonfn/qpoly.hpp"
#include "ribbonfn/symfunc.hpp"

#include <map>
#include <vector>

namespace ref {

using Exponent = std::vector<int>;
using MPoly = std::map<Exponent, ribbonfn::BigInt>;

using Tableau = std::vector<std::vector<int>>;

/// All SSYT of the given shape with entries in 1..n (content unrestricted).
std::vector<Tableau> ssyt(const std::vector<int>& shape, int n);

/// s_λ(x_1..x_n).
MPoly schur_poly(const std::vector<int>& shape, int n);
MPoly power_sum_poly(int k, int n);
MPoly complete_poly(int k, int n);
MPoly elementary_poly(int k, int n);
MPoly monomial_poly(const std::vector<int>& lambda, int n);

MPoly add(const MPoly& a, const MPoly& b);
MPoly scale(const MPoly& a, const ribbonfn::BigInt& c);
MPoly multiply(const MPoly& a, const MPoly& b);
MPoly one(int n);

/// Integer Schur expansion in n variables; q must have been evaluated away.
MPoly to_poly(const ribbonfn::SymFunc& f, int n);

/// det(h_{a_i - i + j}) in n variables, straight from the permutation
/// expansion of the determinant.
MPoly jacobi_trudi_poly(const std::vector<int>& a, int n);

/// Σ_T q^{charge(T)} over SSYT T of shape `shape` and content `content`.
ribbonfn::QPoly charge_kostka(const std::vector<int>& shape, const std::vector<int>& content);
/// Number of SSYT of the shape with the given content.
long long kostka_count(const std::vector<int>& shape, const std::vector<int>& content);

/// Reading word, rows from the bottom (shortest) to the top in English
/// notation, each left to right.
std::vector<int> reading_word(const Tableau& t);
int charge(const std::vector<int>& word);

/// All partitions of n, generated independently of the library.
std::vector<std::vector<int>> partitions(int n);

}  // namespace ref
