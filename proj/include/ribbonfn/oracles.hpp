#pragma once

// Brute-force references used only to cross-check the algebraic code paths.
// Everything here is exponential and meant for sizes up to about 7.

#include "ribbonfn/partition.hpp"
#include "ribbonfn/symfunc.hpp"

#include <string>
#include <vector>

namespace ribbonfn::oracles {

/// One-line notation of a bijection of {1..k}.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p);
/// {i : σ(i) > σ(i+1)}.
std::vector<int> descent_set(const Permutation& p);
Permutation inverse(const Permutation& p);

struct Tableaux {
  std::vector<std::vector<int>> insertion;
  std::vector<std::vector<int>> recording;
};
/// Row insertion; throws InvalidInput on a non-permutation.
Tableaux rsk(const Permutation& p);
Partition rsk_shape(const Permutation& p);
/// {i : i+1 lies in a strictly lower row than i} of a standard tableau.
std::vector<int> tableau_descents(const std::vector<std::vector<int>>& t);

/// Semistandard tableaux of the given shape and content.
long long ssyt_count(const Partition& shape, const Partition& weight);
long long syt_count(const Partition& shape);
/// Littlewood–Richardson tableaux of shape ν/λ and content μ.
long long lr_enumerate(const Partition& lambda, const Partition& mu, const Partition& nu);
/// s_{outer/inner} from LR-tableau counts.
SymFunc skew_by_enumeration(const Partition& outer, const Partition& inner);

/// Σ_{R ⊨ k} q^{comaj R} s_{λ/λ^{rc}}, with the skew Schur functions taken
/// from LR enumeration.
SymFunc h1k_by_ribbons(int k);

enum class PermDomain { all, involutions };
enum class PermSource { word, inverse, recording };
enum class PermStat { maj, comaj };

struct RskStatistic {
  PermDomain domain;
  PermSource source;
  PermStat stat;
  std::string name() const;
  bool operator==(const RskStatistic&) const = default;
};

/// All domain × source × statistic combinations, in a fixed order.
std::vector<RskStatistic> statistic_candidates();

/// Σ_σ q^{stat(σ)} s_{λ(σ)} over the chosen domain of S_k.
SymFunc h1k_by_rsk(int k, const RskStatistic& s);

struct StatisticSelection {
  std::vector<RskStatistic> matching;  // in candidate order
  std::vector<std::string> report;     // one line per candidate
};
/// Candidates whose RSK sum equals h1k_by_ribbons(k) for every k in ks.
StatisticSelection select_statistic(const std::vector<int>& ks = {3, 4});

}  // namespace ribbonfn::oracles
