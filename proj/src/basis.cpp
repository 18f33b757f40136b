#include "ribbonfn/basis.hpp"

#include "ribbonfn/detail/cache.hpp"
#include "ribbonfn/schur.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ribbonfn {

namespace {

struct PartPairHash {
  std::size_t operator()(const std::pair<Partition, Partition>& k) const noexcept {
    return PartitionHash{}(k.first) * 0x9e3779b97f4a7c15ULL ^ PartitionHash{}(k.second);
  }
};

detail::MemoCache<std::pair<Partition, Partition>, long long, PartPairHash> character_cache;
detail::MemoCache<Partition, SchurCombo, PartitionHash> m_to_schur_cache;

// Beta-set form of a partition for rim-hook removal.
std::vector<int> beta_set(const Partition& lambda) {
  const int len = lambda.length();
  std::vector<int> b(len);
  for (int i = 0; i < len; ++i) b[i] = lambda[i] + (len - 1 - i);
  return b;
}

Partition from_beta(std::vector<int> b) {
  std::sort(b.rbegin(), b.rend());
  const int len = static_cast<int>(b.size());
  std::vector<int> parts(len);
  for (int i = 0; i < len; ++i) parts[i] = b[i] - (len - 1 - i);
  return Partition::from_weak(std::move(parts));
}

long long compute_character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) return 0;
  if (rho.empty()) return 1;
  const int r = rho[0];
  const Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
  const std::vector<int> beta = beta_set(lambda);
  const std::set<int> occupied(beta.begin(), beta.end());
  long long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - r;
    if (target < 0 || occupied.count(target)) continue;
    int between = 0;
    for (int x : beta)
      if (x > target && x < beta[i]) ++between;
    std::vector<int> moved = beta;
    moved[i] = target;
    const long long sub = character(from_beta(std::move(moved)), rest);
    total += (between % 2 ? -sub : sub);
  }
  return total;
}

const SchurCombo& m_to_schur(const Partition& mu) {
  if (const auto* v = m_to_schur_cache.lookup(mu)) return *v;
  // s_μ = m_μ + Σ_{ν ◁ μ} K_{μν} m_ν, solved downward in dominance order.
  SchurCombo out{{mu, 1}};
  for (const auto& nu : partitions_of(mu.size())) {
    if (nu == mu || !dominates(mu, nu)) continue;
    const long long k = kostka_number(mu, nu);
    if (k == 0) continue;
    for (const auto& [p, c] : m_to_schur(nu)) {
      auto& slot = out[p];
      slot -= k * c;
      if (slot == 0) out.erase(p);
    }
  }
  return m_to_schur_cache.insert(mu, std::move(out));
}

void add_rat(std::map<Partition, RatQPoly, PartitionLess>& into, const Partition& p, const RatQPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = into.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

}  // namespace

std::string_view basis_name(Basis b) {
  switch (b) {
    case Basis::schur: return "schur";
    case Basis::h: return "h";
    case Basis::e: return "e";
    case Basis::p: return "p";
    case Basis::m: return "m";
  }
  return "?";
}

Basis parse_basis(std::string_view name) {
  for (Basis b : {Basis::schur, Basis::h, Basis::e, Basis::p, Basis::m})
    if (basis_name(b) == name) return b;
  throw InvalidInput("unknown basis '" + std::string(name) + "'");
}

bool Expansion::integral() const {
  for (const auto& [p, c] : terms)
    if (!to_integral(c)) return false;
  return true;
}

BigInt z_lambda(const Partition& lambda) {
  BigInt z = 1;
  int i = 0;
  const auto& parts = lambda.parts();
  while (i < lambda.length()) {
    int j = i;
    while (j < lambda.length() && parts[j] == parts[i]) ++j;
    const int mult = j - i;
    for (int k = 1; k <= mult; ++k) z *= BigInt(parts[i]) * k;
    i = j;
  }
  return z;
}

long long character(const Partition& lambda, const Partition& rho) {
  return character_cache.get_or_compute({lambda, rho}, [&] { return compute_character(lambda, rho); });
}

long long kostka_number(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return 0;
  const SchurCombo hs = h_product_to_schur(mu);
  auto it = hs.find(lambda);
  return it == hs.end() ? 0 : it->second;
}

Expansion basis_convert(const SymFunc& f, Basis target) {
  Expansion out;
  out.basis = target;
  for (const auto& [lambda, c] : f.terms()) {
    const RatQPoly rc = to_rational(c);
    switch (target) {
      case Basis::schur: add_rat(out.terms, lambda, rc); break;
      case Basis::h:
        for (const auto& [alpha, k] : h_expansion(lambda)) add_rat(out.terms, alpha, rc.scaled(BigRational(k)));
        break;
      case Basis::e:
        for (const auto& [alpha, k] : e_expansion(lambda)) add_rat(out.terms, alpha, rc.scaled(BigRational(k)));
        break;
      case Basis::p:
        for (const auto& rho : partitions_of(lambda.size())) {
          const long long chi = character(lambda, rho);
          if (chi == 0) continue;
          add_rat(out.terms, rho, rc.scaled(BigRational(BigInt(chi), z_lambda(rho))));
        }
        break;
      case Basis::m:
        for (const auto& mu : partitions_of(lambda.size())) {
          const long long k = kostka_number(lambda, mu);
          if (k != 0) add_rat(out.terms, mu, rc.scaled(BigRational(k)));
        }
        break;
    }
  }
  return out;
}

SymFunc from_basis(const Expansion& x) {
  std::map<Partition, RatQPoly, PartitionLess> acc;
  auto add_combo = [&](const SchurCombo& combo, const RatQPoly& c) {
    for (const auto& [p, k] : combo) add_rat(acc, p, c.scaled(BigRational(k)));
  };
  for (const auto& [idx, c] : x.terms) {
    switch (x.basis) {
      case Basis::schur: add_rat(acc, idx, c); break;
      case Basis::h: add_combo(h_product_to_schur(idx), c); break;
      case Basis::e: add_combo(e_product_to_schur(idx), c); break;
      case Basis::m: add_combo(m_to_schur(idx), c); break;
      case Basis::p:
        for (const auto& lambda : partitions_of(idx.size())) {
          const long long chi = character(lambda, idx);
          if (chi != 0) add_rat(acc, lambda, c.scaled(BigRational(chi)));
        }
        break;
    }
  }
  SymFunc out;
  for (const auto& [p, c] : acc) {
    auto integral = to_integral(c);
    if (!integral) throw std::domain_error("non-integral Schur coefficient at s[" + to_string(p) + "]");
    out.add_term(p, *integral);
  }
  return out;
}

}  // namespace ribbonfn
