#include "ribbonfn/schur.hpp"

#include "ribbonfn/detail/cache.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ribbonfn {

namespace {

struct PartIntHash {
  std::size_t operator()(const std::pair<Partition, int>& k) const noexcept {
    return PartitionHash{}(k.first) * 31 + static_cast<std::size_t>(k.second);
  }
};

struct PartPairHash {
  std::size_t operator()(const std::pair<Partition, Partition>& k) const noexcept {
    return PartitionHash{}(k.first) * 0x9e3779b97f4a7c15ULL ^ PartitionHash{}(k.second);
  }
};

long long checked_add(long long a, long long b) {
  long long r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("structure constant overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("structure constant overflow");
  return r;
}

void accumulate(SchurCombo& into, const Partition& p, long long c) {
  if (c == 0) return;
  auto [it, inserted] = into.try_emplace(p, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) into.erase(it);
  }
}

std::vector<Partition> compute_horizontal_add(const Partition& lambda, int cells) {
  std::vector<Partition> out;
  if (cells < 0) return out;
  const int len = lambda.length();
  std::vector<int> add(len + 1, 0);
  // Rows 1..len take at most λ_{i−1} − λ_i extra cells; row 0 takes the rest.
  auto rec = [&](auto&& self, int row, int remaining) -> void {
    if (row == 0) {
      add[0] = remaining;
      std::vector<int> parts(len + 1);
      for (int i = 0; i <= len; ++i) parts[i] = lambda[i] + add[i];
      out.push_back(Partition::from_weak(std::move(parts)));
      return;
    }
    const int cap = std::min(remaining, lambda[row - 1] - lambda[row]);
    for (int a = 0; a <= cap; ++a) {
      add[row] = a;
      self(self, row - 1, remaining - a);
    }
    add[row] = 0;
  };
  rec(rec, len, cells);
  return out;
}

std::vector<Partition> compute_horizontal_remove(const Partition& lambda, int cells) {
  std::vector<Partition> out;
  if (cells < 0 || cells > lambda.size()) return out;
  const int len = lambda.length();
  std::vector<int> parts(len, 0);
  // μ_i ∈ [λ_{i+1}, λ_i].
  auto rec = [&](auto&& self, int row, int remaining) -> void {
    if (row == len) {
      if (remaining == 0) out.push_back(Partition::from_weak(parts));
      return;
    }
    const int lo = lambda[row + 1];
    const int max_take = lambda[row] - lo;
    for (int take = 0; take <= std::min(max_take, remaining); ++take) {
      parts[row] = lambda[row] - take;
      self(self, row + 1, remaining - take);
    }
  };
  rec(rec, 0, cells);
  return out;
}

detail::MemoCache<std::pair<Partition, int>, std::vector<Partition>, PartIntHash> h_add_cache, h_remove_cache,
    e_add_cache, e_remove_cache;

std::vector<Partition> conj_all(const std::vector<Partition>& v) {
  std::vector<Partition> out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(conjugate(p));
  return out;
}

// Expansion of det(M_{ij}) with M_{ij} = index(i, j) for a permutation over
// rows, keyed by the sorted multiset of positive indices (zeros are the unit).
SchurCombo determinant_expansion(const std::vector<int>& seq) {
  const int len = static_cast<int>(seq.size());
  SchurCombo out;
  std::vector<bool> used(len, false);
  std::vector<int> picked;
  auto rec = [&](auto&& self, int row, int sign) -> void {
    if (row == len) {
      std::vector<int> idx;
      for (int v : picked)
        if (v > 0) idx.push_back(v);
      std::sort(idx.rbegin(), idx.rend());
      accumulate(out, Partition(std::move(idx)), sign);
      return;
    }
    for (int col = len - 1; col >= 0; --col) {
      // Sign of the permutation via the number of unused columns to the left.
      if (used[col]) continue;
      int left_unused = 0;
      for (int c = 0; c < col; ++c)
        if (!used[c]) ++left_unused;
      const int index = seq[row] - row + col;
      if (index < 0) continue;
      used[col] = true;
      picked.push_back(index);
      self(self, row + 1, (left_unused % 2) ? -sign : sign);
      picked.pop_back();
      used[col] = false;
    }
  };
  rec(rec, 0, 1);
  return out;
}

detail::MemoCache<Partition, SchurCombo, PartitionHash> h_exp_cache, e_exp_cache, h_prod_cache, e_prod_cache;
detail::MemoCache<std::pair<Partition, Partition>, SchurCombo, PartPairHash> lr_cache, skew_cache;

SchurCombo apply_strips(const Partition& start, const Partition& alpha, bool horizontal) {
  SchurCombo cur{{start, 1}};
  for (int a : alpha.parts()) {
    SchurCombo next;
    for (const auto& [p, c] : cur) {
      const auto& targets = horizontal ? add_horizontal_strip(p, a) : add_vertical_strip(p, a);
      for (const auto& t : targets) accumulate(next, t, c);
    }
    cur = std::move(next);
  }
  return cur;
}

SchurCombo remove_strips(const Partition& start, const Partition& alpha, bool horizontal) {
  SchurCombo cur{{start, 1}};
  for (int a : alpha.parts()) {
    SchurCombo next;
    for (const auto& [p, c] : cur) {
      const auto targets = horizontal ? remove_horizontal_strip(p, a) : remove_vertical_strip(p, a);
      for (const auto& t : targets) accumulate(next, t, c);
    }
    cur = std::move(next);
    if (cur.empty()) break;
  }
  return cur;
}

bool prefer_h(const Partition& mu) { return mu.length() <= (mu.empty() ? 0 : mu[0]); }

}  // namespace

std::vector<Partition> add_horizontal_strip(const Partition& lambda, int cells) {
  return h_add_cache.get_or_compute({lambda, cells}, [&] { return compute_horizontal_add(lambda, cells); });
}

std::vector<Partition> add_vertical_strip(const Partition& lambda, int cells) {
  return e_add_cache.get_or_compute(
      {lambda, cells}, [&] { return conj_all(compute_horizontal_add(conjugate(lambda), cells)); });
}

std::vector<Partition> remove_horizontal_strip(const Partition& lambda, int cells) {
  return h_remove_cache.get_or_compute({lambda, cells}, [&] { return compute_horizontal_remove(lambda, cells); });
}

std::vector<Partition> remove_vertical_strip(const Partition& lambda, int cells) {
  return e_remove_cache.get_or_compute(
      {lambda, cells}, [&] { return conj_all(compute_horizontal_remove(conjugate(lambda), cells)); });
}

std::optional<Straightened> straighten(std::span<const int> seq) {
  std::vector<int> v(seq.begin(), seq.end());
  while (!v.empty() && v.back() == 0) v.pop_back();
  const long long n = static_cast<long long>(v.size());
  const long long bound = n * n + 1;
  int sign = 1;
  for (long long iter = 0;; ++iter) {
    if (iter > bound) throw std::logic_error("straighten: iteration bound exceeded");
    int ascent = -1;
    for (int i = static_cast<int>(v.size()) - 2; i >= 0; --i) {
      if (v[i] < v[i + 1]) {
        ascent = i;
        break;
      }
    }
    if (ascent < 0) break;
    const int a = v[ascent];
    const int b = v[ascent + 1];
    if (b == a + 1) return std::nullopt;
    v[ascent] = b - 1;
    v[ascent + 1] = a + 1;
    sign = -sign;
  }
  while (!v.empty() && v.back() == 0) v.pop_back();
  if (!v.empty() && v.back() < 0) return std::nullopt;
  return Straightened{sign, Partition(std::move(v))};
}

SymFunc jacobi_trudi(std::span<const int> seq) {
  const SchurCombo dets = determinant_expansion(std::vector<int>(seq.begin(), seq.end()));
  SchurCombo total;
  for (const auto& [alpha, c] : dets)
    for (const auto& [p, k] : h_product_to_schur(alpha)) accumulate(total, p, checked_mul(c, k));
  return to_symfunc(total);
}

const SchurCombo& h_expansion(const Partition& lambda) {
  if (const auto* v = h_exp_cache.lookup(lambda)) return *v;
  return h_exp_cache.insert(lambda, determinant_expansion(lambda.parts()));
}

const SchurCombo& e_expansion(const Partition& lambda) {
  if (const auto* v = e_exp_cache.lookup(lambda)) return *v;
  return e_exp_cache.insert(lambda, determinant_expansion(conjugate(lambda).parts()));
}

SchurCombo h_product_to_schur(const Partition& alpha) {
  return h_prod_cache.get_or_compute(alpha, [&] { return apply_strips(Partition{}, alpha, true); });
}

SchurCombo e_product_to_schur(const Partition& alpha) {
  return e_prod_cache.get_or_compute(alpha, [&] { return apply_strips(Partition{}, alpha, false); });
}

const SchurCombo& lr_product(const Partition& lambda, const Partition& mu) {
  const std::pair<Partition, Partition> key{lambda, mu};
  if (const auto* v = lr_cache.lookup(key)) return *v;
  // Expand the smaller factor as a polynomial in h (or e) and apply Pieri to the other.
  const bool lambda_smaller = PartitionLess{}(lambda, mu);
  const Partition& base = lambda_smaller ? mu : lambda;
  const Partition& expanded = lambda_smaller ? lambda : mu;
  SchurCombo out;
  if (expanded.empty()) {
    out.emplace(base, 1);
  } else {
    const bool use_h = prefer_h(expanded);
    const SchurCombo& exp = use_h ? h_expansion(expanded) : e_expansion(expanded);
    for (const auto& [alpha, c] : exp)
      for (const auto& [p, k] : apply_strips(base, alpha, use_h)) accumulate(out, p, checked_mul(c, k));
  }
  return lr_cache.insert(key, std::move(out));
}

const SchurCombo& skew_combo(const Partition& outer, const Partition& inner) {
  const std::pair<Partition, Partition> key{outer, inner};
  if (const auto* v = skew_cache.lookup(key)) return *v;
  SchurCombo out;
  if (contains(outer, inner)) {
    if (inner.empty()) {
      out.emplace(outer, 1);
    } else {
      const bool use_h = prefer_h(inner);
      const SchurCombo& exp = use_h ? h_expansion(inner) : e_expansion(inner);
      for (const auto& [alpha, c] : exp)
        for (const auto& [p, k] : remove_strips(outer, alpha, use_h)) accumulate(out, p, checked_mul(c, k));
    }
  }
  return skew_cache.insert(key, std::move(out));
}

SymFunc to_symfunc(const SchurCombo& c) {
  SymFunc f;
  for (const auto& [p, k] : c) f.add_term(p, QPoly(k));
  return f;
}

SymFunc mult(const SymFunc& f, const SymFunc& g) {
  SymFunc out;
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) {
      const QPoly coeff = ca * cb;
      for (const auto& [p, k] : lr_product(a, b)) out.add_term(p, coeff.scaled(BigInt(k)));
    }
  return out;
}

SymFunc skew_schur(const Partition& outer, const Partition& inner) { return to_symfunc(skew_combo(outer, inner)); }

SymFunc perp(const SymFunc& f, const SymFunc& g) {
  SymFunc out;
  for (const auto& [mu, cm] : f.terms())
    for (const auto& [lam, cl] : g.terms()) {
      if (mu.size() > lam.size()) continue;
      const QPoly coeff = cm * cl;
      for (const auto& [p, k] : skew_combo(lam, mu)) out.add_term(p, coeff.scaled(BigInt(k)));
    }
  return out;
}

QPoly hall_inner(const SymFunc& f, const SymFunc& g) {
  QPoly acc;
  for (const auto& [p, c] : f.terms()) acc += c * g.coefficient(p);
  return acc;
}

SymFunc omega(const SymFunc& f) {
  SymFunc out;
  for (const auto& [p, c] : f.terms()) out.add_term(conjugate(p), c);
  return out;
}

SymFunc e(int n) { return n < 0 ? SymFunc() : SymFunc::schur(Partition(std::vector<int>(n, 1))); }

SymFunc mul_h(int n, const SymFunc& f) {
  SymFunc out;
  if (n < 0) return out;
  for (const auto& [p, c] : f.terms())
    for (const auto& t : add_horizontal_strip(p, n)) out.add_term(t, c);
  return out;
}

SymFunc mul_e(int n, const SymFunc& f) {
  SymFunc out;
  if (n < 0) return out;
  for (const auto& [p, c] : f.terms())
    for (const auto& t : add_vertical_strip(p, n)) out.add_term(t, c);
  return out;
}

SymFunc perp_h(int n, const SymFunc& f) {
  SymFunc out;
  if (n < 0) return out;
  for (const auto& [p, c] : f.terms())
    for (const auto& t : remove_horizontal_strip(p, n)) out.add_term(t, c);
  return out;
}

SymFunc perp_e(int n, const SymFunc& f) {
  SymFunc out;
  if (n < 0) return out;
  for (const auto& [p, c] : f.terms())
    for (const auto& t : remove_vertical_strip(p, n)) out.add_term(t, c);
  return out;
}

}  // namespace ribbonfn
