#pragma once

// Degree-shifting linear operators on SymFunc, given by their values on the
// Schur basis, and the vertex-operator generators built from them.

#include "ribbonfn/detail/cache.hpp"
#include "ribbonfn/partition.hpp"
#include "ribbonfn/qpoly.hpp"
#include "ribbonfn/ribbon.hpp"
#include "ribbonfn/symfunc.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace ribbonfn {

/// Evaluation procedure of an operator on s_λ, with a per-node memo table.
/// Nodes are interned by key, so equal keys share one memo.
class OpNode {
 public:
  OpNode(std::string key, int shift) : key_(std::move(key)), shift_(shift) {}
  virtual ~OpNode() = default;
  OpNode(const OpNode&) = delete;
  OpNode& operator=(const OpNode&) = delete;

  const std::string& key() const { return key_; }
  int shift() const { return shift_; }
  SymFunc on_basis(const Partition& lambda) const;
  std::size_t memo_size() const { return memo_.size(); }

 protected:
  virtual SymFunc compute(const Partition& lambda) const = 0;

 private:
  std::string key_;
  int shift_;
  mutable detail::MemoCache<Partition, SymFunc, PartitionHash> memo_;
};

class LinearOp {
 public:
  explicit LinearOp(std::shared_ptr<const OpNode> node) : node_(std::move(node)) {}

  SymFunc operator()(const SymFunc& f) const;
  SymFunc on_basis(const Partition& lambda) const { return node_->on_basis(lambda); }
  int degree_shift() const { return node_->shift(); }
  /// Structural key; also the memo key.
  const std::string& key() const { return node_->key(); }

 private:
  std::shared_ptr<const OpNode> node_;
};

LinearOp identity_op();
LinearOp zero_op(int shift);

/// S_m = Σ_k (−1)^k h_{m+k} e_k^⊥.
LinearOp bernstein_row(int m);
/// S_m as [z^m] P[X − 1/z] Ω[zX].
LinearOp bernstein_row_series(int m);
/// S̃_m = Σ_k (−1)^k e_{m+k} h_k^⊥.
LinearOp bernstein_col(int m);
/// S̃_m as (−1)^m [z^m] P[X + 1/z] Ω[−zX].
LinearOp bernstein_col_series(int m);
/// H_m^q P = [z^m] P[X − (1−q)/z] Ω[zX].
LinearOp jing_row(int m);
/// The same operator from its Schur expansion Σ_{hooks μ} s_μ[q−1] h_{m+|μ|} s_μ^⊥.
LinearOp jing_row_hooks(int m);

/// S^R = s_{λ^{rc}}^⊥ ∘ S̃_{λ'_1} ∘ … ∘ S̃_{λ'_{λ_1}} for R = λ/λ^{rc}.
LinearOp ribbon_op(const Ribbon& r);

enum class HcolMode { sum, recursive };
/// H_{1^k}^q: Σ_{R ⊨ k} q^{comaj R} S^R, or by the hat recursion. k = 0 gives S̃_0.
LinearOp hcol(int k, HcolMode mode = HcolMode::sum);

/// V̂(s_γ) = Σ_{μ ⊆ γ} (−1)^{|μ|} s_{γ/μ} V(s_{μ'}).
LinearOp hat(const LinearOp& v);
/// Two-alphabet form: for V P = [z^m] P[X + A] Ω[εzX], V̂ s_γ = [z^m] s_γ[−A] Ω[εzX].
/// Only for the translation-type generators; used to validate hat().
SymFunc hat_translation(const std::string& generator, int m, const Partition& gamma);
/// ω V ω.
LinearOp omega_conj(const LinearOp& v);
/// f^⊥; f must be homogeneous (or zero).
LinearOp perp_op(const SymFunc& f);
/// Multiplication by f; f must be homogeneous (or zero).
LinearOp mul_op(const SymFunc& f);

/// u ∘ v (v acts first).
LinearOp compose(const LinearOp& u, const LinearOp& v);
/// Throws InvalidInput when the shifts differ.
LinearOp add(const LinearOp& u, const LinearOp& v);
LinearOp subtract(const LinearOp& u, const LinearOp& v);
LinearOp scale(const QPoly& c, const LinearOp& v);
/// Operator given by a function on basis elements. The key must identify fn.
LinearOp custom(std::string key, int shift, std::function<SymFunc(const Partition&)> fn);

struct KLevelResult {
  bool equal = true;
  std::optional<Partition> witness;
  SymFunc lhs;
  SymFunc rhs;
  int cases = 0;
};

/// U(s_λ) = V(s_λ) for all λ with ℓ(λ) ≤ k and |λ| ≤ max_size; the first
/// failure in canonical order is returned as witness.
KLevelResult k_level_equal(const LinearOp& u, const LinearOp& v, int k, int max_size);

/// Largest input degree an operator may be evaluated on (RIBBONFN_MAX_DEGREE).
int max_degree();

}  // namespace ribbonfn
