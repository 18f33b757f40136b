#pragma once

// Changes of basis at bounded degree: Schur ↔ {h, e, p, m}.
//
// Coefficients of the power-sum basis are rational, so every expansion is
// carried with rational q-polynomial coefficients and reports whether it is
// integral. Only the p basis ever produces non-integral entries.

#include "ribbonfn/partition.hpp"
#include "ribbonfn/qpoly.hpp"
#include "ribbonfn/symfunc.hpp"

#include <map>
#include <string_view>

namespace ribbonfn {

enum class Basis { schur, h, e, p, m };

std::string_view basis_name(Basis b);
/// Throws InvalidInput on an unknown name.
Basis parse_basis(std::string_view name);

struct Expansion {
  Basis basis = Basis::schur;
  std::map<Partition, RatQPoly, PartitionLess> terms;

  bool integral() const;
  bool operator==(const Expansion&) const = default;
};

/// z_λ = Π_i i^{n_i} n_i!.
BigInt z_lambda(const Partition& lambda);

/// Irreducible character χ^λ evaluated on cycle type ρ (|λ| = |ρ|).
long long character(const Partition& lambda, const Partition& rho);

Expansion basis_convert(const SymFunc& f, Basis target);

/// Inverse of basis_convert. Throws std::domain_error if a Schur coefficient
/// fails to be integral.
SymFunc from_basis(const Expansion& x);

/// Monomial expansion helper: Kostka number K_{λμ} = coefficient of m_μ in s_λ.
long long kostka_number(const Partition& lambda, const Partition& mu);

}  // namespace ribbonfn
