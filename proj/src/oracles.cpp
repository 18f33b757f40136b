#include "ribbonfn/oracles.hpp"

#include "ribbonfn/ribbon.hpp"

#include <algorithm>
#include <numeric>

namespace ribbonfn::oracles {

namespace {

// Backtracking fill of a (skew) diagram. Rows are English-indexed, row 0 the
// longest. Cells of row r occupy columns [inner[r], outer[r]).
struct SsytSearch {
  const Partition& outer;
  const Partition& inner;
  std::vector<int> remaining;  // content still to place, value v at index v-1
  std::vector<std::vector<int>> grid;
  long long count = 0;

  SsytSearch(const Partition& o, const Partition& i, const Partition& weight)
      : outer(o), inner(i), remaining(weight.parts()) {
    grid.resize(o.length());
    for (int r = 0; r < o.length(); ++r) grid[r].assign(o[r], 0);
  }

  void fill(int r, int c) {
    if (r == outer.length()) {
      ++count;
      return;
    }
    if (c == outer[r]) return fill(r + 1, inner[r + 1]);
    int lo = 1;
    if (c > inner[r]) lo = grid[r][c - 1];
    if (r > 0 && c >= inner[r - 1] && c < outer[r - 1]) lo = std::max(lo, grid[r - 1][c] + 1);
    for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
      if (remaining[v - 1] == 0) continue;
      --remaining[v - 1];
      grid[r][c] = v;
      fill(r, c + 1);
      ++remaining[v - 1];
    }
    grid[r][c] = 0;
  }
};

struct LrSearch {
  const Partition& outer;
  const Partition& inner;
  std::vector<int> remaining;
  std::vector<int> used;
  std::vector<std::vector<int>> grid;
  long long count = 0;

  LrSearch(const Partition& o, const Partition& i, const Partition& content)
      : outer(o), inner(i), remaining(content.parts()), used(content.length(), 0) {
    grid.resize(o.length());
    for (int r = 0; r < o.length(); ++r) grid[r].assign(o[r], 0);
  }

  // Reading order: rows top to bottom, each row right to left.
  void fill(int r, int c) {
    if (r == outer.length()) {
      ++count;
      return;
    }
    if (c < inner[r]) {
      if (r + 1 == outer.length()) return fill(r + 1, 0);
      return fill(r + 1, outer[r + 1] - 1);
    }
    int hi = static_cast<int>(remaining.size());
    if (c + 1 < outer[r]) hi = std::min(hi, grid[r][c + 1]);
    int lo = 1;
    if (r > 0 && c >= inner[r - 1]) lo = grid[r - 1][c] + 1;
    for (int v = lo; v <= hi; ++v) {
      if (remaining[v - 1] == 0) continue;
      if (v > 1 && used[v - 1] + 1 > used[v - 2]) continue;
      --remaining[v - 1];
      ++used[v - 1];
      grid[r][c] = v;
      fill(r, c - 1);
      ++remaining[v - 1];
      --used[v - 1];
    }
    grid[r][c] = 0;
  }
};

int choose2(int k) { return k * (k - 1) / 2; }

std::vector<Permutation> permutations(int k, PermDomain d) {
  std::vector<Permutation> out;
  Permutation p(k);
  std::iota(p.begin(), p.end(), 1);
  do {
    if (d == PermDomain::involutions) {
      bool inv = true;
      for (int i = 0; i < k && inv; ++i) inv = p[p[i] - 1] == i + 1;
      if (!inv) continue;
    }
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size() + 1, false);
  for (int x : p) {
    if (x < 1 || x > static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

std::vector<int> descent_set(const Permutation& p) {
  std::vector<int> d;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] > p[i + 1]) d.push_back(static_cast<int>(i) + 1);
  return d;
}

Permutation inverse(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = static_cast<int>(i) + 1;
  return q;
}

Tableaux rsk(const Permutation& p) {
  if (!is_permutation(p)) throw InvalidInput("not a permutation");
  Tableaux t;
  for (std::size_t step = 0; step < p.size(); ++step) {
    int x = p[step];
    std::size_t row = 0;
    for (;; ++row) {
      if (row == t.insertion.size()) {
        t.insertion.push_back({x});
        t.recording.push_back({static_cast<int>(step) + 1});
        break;
      }
      auto& r = t.insertion[row];
      auto it = std::upper_bound(r.begin(), r.end(), x);
      if (it == r.end()) {
        r.push_back(x);
        t.recording[row].push_back(static_cast<int>(step) + 1);
        break;
      }
      std::swap(x, *it);
    }
  }
  return t;
}

Partition rsk_shape(const Permutation& p) {
  std::vector<int> parts;
  for (const auto& row : rsk(p).insertion) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

std::vector<int> tableau_descents(const std::vector<std::vector<int>>& t) {
  std::vector<int> row_of;
  for (std::size_t r = 0; r < t.size(); ++r)
    for (int x : t[r]) {
      if (static_cast<int>(row_of.size()) < x + 1) row_of.resize(x + 1, 0);
      row_of[x] = static_cast<int>(r);
    }
  std::vector<int> d;
  for (std::size_t i = 1; i + 1 < row_of.size(); ++i)
    if (row_of[i + 1] > row_of[i]) d.push_back(static_cast<int>(i));
  return d;
}

long long ssyt_count(const Partition& shape, const Partition& weight) {
  if (shape.size() != weight.size()) return 0;
  if (shape.empty()) return 1;
  const Partition none;
  SsytSearch s(shape, none, weight);
  s.fill(0, 0);
  return s.count;
}

long long syt_count(const Partition& shape) {
  return ssyt_count(shape, Partition(std::vector<int>(shape.size(), 1)));
}

long long lr_enumerate(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size() || !contains(nu, lambda)) return 0;
  if (mu.empty()) return 1;
  LrSearch s(nu, lambda, mu);
  s.fill(0, nu[0] - 1);
  return s.count;
}

SymFunc skew_by_enumeration(const Partition& outer, const Partition& inner) {
  SymFunc out;
  if (!contains(outer, inner)) return out;
  for (const auto& mu : partitions_of(outer.size() - inner.size())) {
    const long long c = lr_enumerate(inner, mu, outer);
    if (c) out.add_term(mu, QPoly(c));
  }
  return out;
}

SymFunc h1k_by_ribbons(int k) {
  SymFunc out;
  for (const auto& r : enumerate_ribbons(k)) {
    const RibbonShape shape = ribbon_shape(r);
    out += skew_by_enumeration(shape.outer, shape.inner).scaled(q_power(comaj(r)));
  }
  return out;
}

std::string RskStatistic::name() const {
  std::string s = domain == PermDomain::all ? "all" : "involutions";
  s += "/";
  s += stat == PermStat::maj ? "maj" : "comaj";
  s += "/";
  s += source == PermSource::word ? "word" : source == PermSource::inverse ? "inverse" : "recording";
  return s;
}

std::vector<RskStatistic> statistic_candidates() {
  std::vector<RskStatistic> out;
  for (PermDomain d : {PermDomain::all, PermDomain::involutions})
    for (PermStat st : {PermStat::comaj, PermStat::maj})
      for (PermSource src : {PermSource::word, PermSource::inverse, PermSource::recording})
        out.push_back({d, src, st});
  return out;
}

SymFunc h1k_by_rsk(int k, const RskStatistic& s) {
  if (k < 0 || k > 9) throw InvalidInput("h1k_by_rsk supports 0 <= k <= 9");
  SymFunc out;
  for (const auto& p : permutations(k, s.domain)) {
    std::vector<int> d;
    switch (s.source) {
      case PermSource::word: d = descent_set(p); break;
      case PermSource::inverse: d = descent_set(inverse(p)); break;
      case PermSource::recording: d = tableau_descents(rsk(p).recording); break;
    }
    const int maj = std::accumulate(d.begin(), d.end(), 0);
    const int e = s.stat == PermStat::maj ? maj : choose2(k) - maj;
    out.add_term(rsk_shape(p), q_power(e));
  }
  return out;
}

StatisticSelection select_statistic(const std::vector<int>& ks) {
  StatisticSelection sel;
  for (const auto& cand : statistic_candidates()) {
    bool ok = true;
    for (int k : ks) ok = ok && h1k_by_rsk(k, cand) == h1k_by_ribbons(k);
    sel.report.push_back(cand.name() + (ok ? ": matches" : ": differs"));
    if (ok) sel.matching.push_back(cand);
  }
  return sel;
}

}  // namespace ribbonfn::oracles
