#pragma once

#include "ribbonfn/partition.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ribbonfn {

/// A ribbon of size k, identified by its descent set D ⊆ {1, …, k−1}.
///
/// Cells are labelled 1..k left to right, top to bottom with the diagram
/// drawn French style (smallest row on top); i ∈ D exactly when cell i+1
/// sits directly below cell i. Bit i−1 of the mask encodes i ∈ D.
class Ribbon {
 public:
  /// Throws InvalidInput for size <= 0, size > 63 or descents outside {1..size−1}.
  Ribbon(int size, std::vector<int> descents);
  static Ribbon from_mask(int size, std::uint64_t mask);

  int size() const { return size_; }
  std::uint64_t mask() const { return mask_; }
  std::vector<int> descents() const;
  bool has_descent(int i) const { return i >= 1 && i < size_ && ((mask_ >> (i - 1)) & 1U); }

  bool operator==(const Ribbon& o) const { return size_ == o.size_ && mask_ == o.mask_; }

 private:
  Ribbon(int size, std::uint64_t mask, int) : size_(size), mask_(mask) {}
  int size_;
  std::uint64_t mask_;
};

int maj(const Ribbon& r);
int comaj(const Ribbon& r);
Ribbon complement(const Ribbon& r);

/// All 2^{k−1} ribbons of size k, ordered by ascending descent mask.
std::vector<Ribbon> enumerate_ribbons(int k);

struct RibbonShape {
  Partition outer;
  Partition inner;
};

/// The unique λ with λ/λ^{rc} equal to the ribbon; inner = rc(outer).
RibbonShape ribbon_shape(const Ribbon& r);

/// Inverse of ribbon_shape: reads the descent set off λ/rc(λ).
Ribbon ribbon_from_shape(const Partition& outer);

/// R with a cell appended on the right (same descents, size k+1).
Ribbon extend_right(const Ribbon& r);
/// R with a cell appended below all others (descents D ∪ {k}, size k+1).
Ribbon extend_below(const Ribbon& r);

/// "4:{1,3}".
std::string to_string(const Ribbon& r);
/// Parses "4:{1,3}" or "3:{}". Throws InvalidInput.
Ribbon parse_ribbon(std::string_view text);

}  // namespace ribbonfn
