#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ribbonfn {

/// Raised for arguments outside an operation's domain (bad partition text,
/// empty input to rc(), ribbon size <= 0, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the empty partition.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidInput unless the parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Drops trailing zeros; throws on anything else that is not a partition.
  static Partition from_weak(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// i-th part, 0-indexed; zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Canonical order: by size, then lexicographic on parts.
struct PartitionLess {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() < b.parts();
  }
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};

Partition conjugate(const Partition& p);

/// (λ_2 − 1, …, λ_k − 1) with zero entries dropped.
Partition rc(const Partition& p);

/// Cell-wise containment inner ⊆ outer.
bool contains(const Partition& outer, const Partition& inner);

/// Dominance order a ⊵ b (requires equal sizes; false otherwise).
bool dominates(const Partition& a, const Partition& b);

/// All partitions of n in canonical order.
const std::vector<Partition>& partitions_of(int n);

/// All partitions of size <= max_size (and length <= max_length) in canonical order.
std::vector<Partition> partitions_up_to(int max_size, int max_length = -1);

/// All μ ⊆ λ, in canonical order.
std::vector<Partition> subpartitions(const Partition& lambda);

/// λ + (1^k): adds one to each of the first k parts (λ is padded with zeros).
Partition add_column(const Partition& lambda, int k);

/// "4,3,2"; the empty partition is "".
std::string to_string(const Partition& p);
/// Parses "4,3,2" (whitespace tolerated, "" is empty). Throws InvalidInput.
Partition parse_partition(std::string_view text);

}  // namespace ribbonfn
