#include "ribbonfn/ribbon.hpp"

#include <cctype>
#include <charconv>

namespace ribbonfn {

Ribbon::Ribbon(int size, std::vector<int> descents) : size_(size), mask_(0) {
  if (size <= 0) throw InvalidInput("ribbon size must be positive");
  if (size > 63) throw InvalidInput("ribbon size too large");
  for (int d : descents) {
    if (d < 1 || d >= size) throw InvalidInput("ribbon descent out of range");
    mask_ |= std::uint64_t{1} << (d - 1);
  }
}

Ribbon Ribbon::from_mask(int size, std::uint64_t mask) {
  if (size <= 0) throw InvalidInput("ribbon size must be positive");
  if (size > 63 || (mask >> (size - 1)) != 0) throw InvalidInput("ribbon mask out of range");
  return Ribbon(size, mask, 0);
}

std::vector<int> Ribbon::descents() const {
  std::vector<int> out;
  for (int i = 1; i < size_; ++i)
    if (has_descent(i)) out.push_back(i);
  return out;
}

int maj(const Ribbon& r) {
  int s = 0;
  for (int d : r.descents()) s += d;
  return s;
}

int comaj(const Ribbon& r) { return r.size() * (r.size() - 1) / 2 - maj(r); }

Ribbon complement(const Ribbon& r) {
  const std::uint64_t full = (std::uint64_t{1} << (r.size() - 1)) - 1;
  return Ribbon::from_mask(r.size(), full & ~r.mask());
}

std::vector<Ribbon> enumerate_ribbons(int k) {
  if (k <= 0) throw InvalidInput("enumerate_ribbons requires k >= 1");
  if (k > 24) throw InvalidInput("enumerate_ribbons: k too large");
  std::vector<Ribbon> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << (k - 1)); ++m) out.push_back(Ribbon::from_mask(k, m));
  return out;
}

RibbonShape ribbon_shape(const Ribbon& r) {
  // Row lengths read top to bottom are the gaps between consecutive descents.
  std::vector<int> top_down;
  int prev = 0;
  for (int d : r.descents()) {
    top_down.push_back(d - prev);
    prev = d;
  }
  top_down.push_back(r.size() - prev);
  // Skew row i (bottom = 0) has length λ_i − λ_{i+1} + 1, the top row λ_t.
  const int t = static_cast<int>(top_down.size());
  std::vector<int> lambda(t);
  lambda[t - 1] = top_down[0];
  for (int i = t - 2; i >= 0; --i) lambda[i] = top_down[t - 1 - i] + lambda[i + 1] - 1;
  Partition outer(std::move(lambda));
  return {outer, rc(outer)};
}

Ribbon ribbon_from_shape(const Partition& outer) {
  if (outer.empty()) throw InvalidInput("ribbon_from_shape requires a nonempty partition");
  const int t = outer.length();
  std::vector<int> descents;
  int acc = 0;
  for (int row = t - 1; row >= 1; --row) {  // top row first
    acc += outer[row] - outer[row + 1] + (row == t - 1 ? 0 : 1);
    descents.push_back(acc);
  }
  return Ribbon(outer.size() - rc(outer).size(), std::move(descents));
}

Ribbon extend_right(const Ribbon& r) { return Ribbon::from_mask(r.size() + 1, r.mask()); }

Ribbon extend_below(const Ribbon& r) {
  return Ribbon::from_mask(r.size() + 1, r.mask() | (std::uint64_t{1} << (r.size() - 1)));
}

std::string to_string(const Ribbon& r) {
  std::string s = std::to_string(r.size()) + ":{";
  bool first = true;
  for (int d : r.descents()) {
    if (!first) s += ',';
    s += std::to_string(d);
    first = false;
  }
  return s + "}";
}

Ribbon parse_ribbon(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  auto fail = [&] { return InvalidInput("malformed ribbon '" + std::string(text) + "'"); };
  const auto colon = compact.find(':');
  if (colon == std::string::npos || compact.size() < colon + 3 || compact[colon + 1] != '{' || compact.back() != '}')
    throw fail();
  int size = 0;
  auto [p, ec] = std::from_chars(compact.data(), compact.data() + colon, size);
  if (ec != std::errc() || p != compact.data() + colon) throw fail();
  std::vector<int> descents;
  std::string_view body(compact.data() + colon + 2, compact.size() - colon - 3);
  std::size_t i = 0;
  while (i < body.size()) {
    int d = 0;
    auto [q, ec2] = std::from_chars(body.data() + i, body.data() + body.size(), d);
    if (ec2 != std::errc()) throw fail();
    descents.push_back(d);
    i = static_cast<std::size_t>(q - body.data());
    if (i < body.size()) {
      if (body[i] != ',') throw fail();
      ++i;
      if (i == body.size()) throw fail();
    }
  }
  return Ribbon(size, std::move(descents));
}

}  // namespace ribbonfn
