#pragma once

#include "ribbonfn/partition.hpp"
#include "ribbonfn/qpoly.hpp"
#include "ribbonfn/symfunc.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ribbonfn {

enum class HlVia { rows, columns };

/// H_λ[X;q] = Σ_μ K_{λμ}(q) s_μ. rows: H^q_{λ_1} ⋯ H^q_{λ_ℓ} 1.
/// columns: H_{1^{λ'_1}} ⋯ H_{1^{λ'_{λ_1}}} 1.
SymFunc hl_build(const Partition& lambda, HlVia via = HlVia::rows);

/// Coefficient of s_μ in H_λ[X;q]; zero when the sizes differ.
QPoly kostka_foulkes(const Partition& lambda, const Partition& mu);

/// K_{λμ}(q) for every μ ⊢ |λ| in canonical order, zeros included.
std::vector<std::pair<Partition, QPoly>> kostka_table(const Partition& lambda);

/// Header lambda,mu,kostka_foulkes; all fields quoted.
std::string kostka_csv(const Partition& lambda);
/// {"lambda":[2,1],"entries":[{"mu":[3],"coeff":[[1,"1"]]},...]}
std::string kostka_json(const Partition& lambda);

}  // namespace ribbonfn
