#include "ribbonfn/symfunc.hpp"

#include <algorithm>

namespace ribbonfn {

SymFunc SymFunc::schur(const Partition& p, QPoly c) {
  SymFunc f;
  if (!c.is_zero()) f.terms_.emplace(p, std::move(c));
  return f;
}

QPoly SymFunc::coefficient(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? QPoly() : it->second;
}

void SymFunc::add_term(const Partition& p, const QPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> SymFunc::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.size();
  if (terms_.rbegin()->first.size() != d) return std::nullopt;
  return d;
}

int SymFunc::max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.size(); }

SymFunc SymFunc::degree_component(int n) const {
  SymFunc out;
  for (const auto& [p, c] : terms_)
    if (p.size() == n) out.terms_.emplace_hint(out.terms_.end(), p, c);
  return out;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

SymFunc SymFunc::operator-() const {
  SymFunc out = *this;
  for (auto& [p, c] : out.terms_) c = -c;
  return out;
}

SymFunc SymFunc::scaled(const QPoly& c) const {
  SymFunc out;
  if (c.is_zero()) return out;
  for (const auto& [p, a] : terms_) {
    QPoly v = a * c;
    if (!v.is_zero()) out.terms_.emplace_hint(out.terms_.end(), p, std::move(v));
  }
  return out;
}

SymFunc SymFunc::at_q(long long value) const {
  SymFunc out;
  for (const auto& [p, c] : terms_) out.add_term(p, QPoly::constant(c.evaluate(value)));
  return out;
}

}  // namespace ribbonfn
