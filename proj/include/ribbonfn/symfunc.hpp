#pragma once

#include "ribbonfn/partition.hpp"
#include "ribbonfn/qpoly.hpp"

#include <map>
#include <optional>

namespace ribbonfn {

/// A finite Schur-basis expansion Σ c_λ(q) s_λ with c_λ ∈ ℤ[q].
///
/// Terms are kept in canonical order (size, then lexicographic), and no
/// stored coefficient is zero.
class SymFunc {
 public:
  using Terms = std::map<Partition, QPoly, PartitionLess>;

  SymFunc() = default;
  static SymFunc one() { return schur(Partition{}); }
  static SymFunc schur(const Partition& p, QPoly c = QPoly(1));
  static SymFunc constant(QPoly c) { return schur(Partition{}, std::move(c)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  QPoly coefficient(const Partition& p) const;

  void add_term(const Partition& p, const QPoly& c);

  /// Degree of the single homogeneous component, or nullopt if mixed; zero
  /// has no degree either.
  std::optional<int> homogeneous_degree() const;
  int max_degree() const;
  SymFunc degree_component(int n) const;

  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  SymFunc operator-() const;
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  SymFunc scaled(const QPoly& c) const;

  /// Substitutes an integer value for q.
  SymFunc at_q(long long value) const;

  bool operator==(const SymFunc& o) const { return terms_ == o.terms_; }
  bool operator!=(const SymFunc& o) const { return !(*this == o); }

 private:
  Terms terms_;
};

}  // namespace ribbonfn
