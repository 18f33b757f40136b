#include "ribbonfn/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>

namespace ribbonfn {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidInput("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidInput("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_weak(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(p.empty() ? 0 : p.parts()[0], 0);
  for (int row : p.parts())
    for (int j = 0; j < row; ++j) ++out[j];
  return Partition(std::move(out));
}

Partition rc(const Partition& p) {
  if (p.empty()) throw InvalidInput("rc() is undefined on the empty partition");
  std::vector<int> out;
  for (std::size_t i = 1; i < p.parts().size(); ++i)
    if (p.parts()[i] > 1) out.push_back(p.parts()[i] - 1);
  return Partition(std::move(out));
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return false;
  int sa = 0, sb = 0;
  const int n = std::max(a.length(), b.length());
  for (int i = 0; i < n; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa < sb) return false;
  }
  return true;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  if (n >= 0) {
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
  }
  std::sort(out.begin(), out.end(), PartitionLess{});
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<Partition> partitions_up_to(int max_size, int max_length) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n)
    for (const auto& p : partitions_of(n))
      if (max_length < 0 || p.length() <= max_length) out.push_back(p);
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> cur;
  // Row i ranges over [0, min(λ_i, previous row)].
  auto rec = [&](auto&& self, int i, int bound) -> void {
    if (i == lambda.length() || bound == 0) {
      out.push_back(Partition::from_weak(cur));
      return;
    }
    for (int v = 0; v <= std::min(lambda[i], bound); ++v) {
      cur.push_back(v);
      self(self, i + 1, v);
      cur.pop_back();
    }
  };
  rec(rec, 0, lambda.empty() ? 0 : lambda[0]);
  std::sort(out.begin(), out.end(), PartitionLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Partition add_column(const Partition& lambda, int k) {
  std::vector<int> parts = lambda.parts();
  if (static_cast<int>(parts.size()) < k) parts.resize(k, 0);
  for (int i = 0; i < k; ++i) ++parts[i];
  return Partition(std::move(parts));
}

std::string to_string(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p.parts()[i]);
  }
  return s;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) return {};
  while (true) {
    skip_ws();
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc()) throw InvalidInput("malformed partition '" + std::string(text) + "'");
    i = static_cast<std::size_t>(ptr - text.data());
    parts.push_back(v);
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != ',') throw InvalidInput("malformed partition '" + std::string(text) + "'");
    ++i;
  }
  return Partition(std::move(parts));
}

}  // namespace ribbonfn
