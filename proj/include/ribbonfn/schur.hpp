#pragma once

// Ring operations in the Schur basis at bounded degree.

#include "ribbonfn/partition.hpp"
#include "ribbonfn/symfunc.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace ribbonfn {

/// Integer combination of Schur functions (structure constants, Kostka rows).
using SchurCombo = std::map<Partition, long long, PartitionLess>;

// Pieri primitives. Results are listed without multiplicity.
std::vector<Partition> add_horizontal_strip(const Partition& lambda, int cells);
std::vector<Partition> add_vertical_strip(const Partition& lambda, int cells);
std::vector<Partition> remove_horizontal_strip(const Partition& lambda, int cells);
std::vector<Partition> remove_vertical_strip(const Partition& lambda, int cells);

struct Straightened {
  int sign;
  Partition shape;
  bool operator==(const Straightened&) const = default;
};

/// Normalizes s_seq to ±s_λ by the exchange rule
///   s_(…,a,b,…) = −s_(…,b−1,a+1,…)
/// applied at the rightmost ascent until none remain. Returns nullopt when
/// the function vanishes (an exchange with b = a+1, or a negative last part).
std::optional<Straightened> straighten(std::span<const int> seq);

/// s_seq as the Jacobi–Trudi determinant det(h_{seq_i − i + j}), expanded in
/// the h basis and then converted with Pieri's rule. Independent of
/// straighten(); the two must agree.
SymFunc jacobi_trudi(std::span<const int> seq);

/// s_λ in the h basis (resp. e basis). Keys are the sorted index multisets.
const SchurCombo& h_expansion(const Partition& lambda);
const SchurCombo& e_expansion(const Partition& lambda);

/// h_α and e_α (α sorted into a partition) expanded in the Schur basis.
SchurCombo h_product_to_schur(const Partition& alpha);
SchurCombo e_product_to_schur(const Partition& alpha);

/// c^ν_{λμ} for all ν: s_λ s_μ.
const SchurCombo& lr_product(const Partition& lambda, const Partition& mu);
/// s_{outer/inner} = Σ_μ c^{outer}_{inner,μ} s_μ; empty unless inner ⊆ outer.
const SchurCombo& skew_combo(const Partition& outer, const Partition& inner);

SymFunc to_symfunc(const SchurCombo& c);

SymFunc mult(const SymFunc& f, const SymFunc& g);
SymFunc skew_schur(const Partition& outer, const Partition& inner);
/// f^⊥ g, the adjoint of multiplication by f.
SymFunc perp(const SymFunc& f, const SymFunc& g);
QPoly hall_inner(const SymFunc& f, const SymFunc& g);
SymFunc omega(const SymFunc& f);

inline SymFunc h(int n) { return n < 0 ? SymFunc() : SymFunc::schur(Partition(std::vector<int>(n ? 1 : 0, n))); }
SymFunc e(int n);

// Fast paths used by the vertex operators.
SymFunc mul_h(int n, const SymFunc& f);
SymFunc mul_e(int n, const SymFunc& f);
SymFunc perp_h(int n, const SymFunc& f);
SymFunc perp_e(int n, const SymFunc& f);

}  // namespace ribbonfn
