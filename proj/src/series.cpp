#include "ribbonfn/series.hpp"

#include "ribbonfn/basis.hpp"
#include "ribbonfn/detail/cache.hpp"
#include "ribbonfn/schur.hpp"

#include <algorithm>
#include <climits>

namespace ribbonfn {

namespace {

using RatLaurent = Poly<RatQPoly>;

struct KeyHash {
  std::size_t operator()(const std::pair<std::string, Partition>& k) const noexcept {
    return std::hash<std::string>{}(k.first) ^ (PartitionHash{}(k.second) << 1);
  }
};

detail::MemoCache<std::pair<std::string, Partition>, LaurentQ, KeyHash> scalar_cache;

struct ZPartLess {
  bool operator()(const std::pair<int, Partition>& a, const std::pair<int, Partition>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return PartitionLess{}(a.second, b.second);
  }
};

RatLaurent to_rational(const LaurentQ& x) {
  std::vector<RatLaurent::Term> t;
  for (const auto& [e, c] : x.terms()) t.emplace_back(e, ribbonfn::to_rational(c));
  return RatLaurent::from_terms(std::move(t));
}

LaurentQ to_integral_laurent(const RatLaurent& x, const std::string& where) {
  std::vector<LaurentQ::Term> t;
  for (const auto& [e, c] : x.terms()) {
    auto ic = to_integral(c);
    if (!ic) throw std::domain_error("non-integral plethystic scalar in " + where);
    t.emplace_back(e, *ic);
  }
  return LaurentQ::from_terms(std::move(t));
}

LaurentQ compute_scalar_schur(const Partition& mu, const Alphabet& a) {
  RatLaurent acc;
  for (const auto& rho : partitions_of(mu.size())) {
    const long long chi = character(mu, rho);
    if (chi == 0) continue;
    RatLaurent prod = RatLaurent::constant(RatQPoly(1));
    for (int part : rho.parts()) {
      prod = prod * to_rational(a.power_sum(part));
      if (prod.is_zero()) break;
    }
    if (prod.is_zero()) continue;
    const RatQPoly weight = RatQPoly::constant(BigRational(BigInt(chi), z_lambda(rho)));
    acc += prod.scaled(weight);
  }
  return to_integral_laurent(acc, "s[" + to_string(mu) + "][" + a.id + "]");
}

}  // namespace

Alphabet Alphabet::minus_inverse_z() {
  return {"-1/z", [](int k) { return LaurentQ::monomial(QPoly(-1), -k); }};
}

Alphabet Alphabet::plus_inverse_z() {
  return {"+1/z", [](int k) { return LaurentQ::monomial(QPoly(1), -k); }};
}

Alphabet Alphabet::hall_littlewood() {
  return {"-(1-q)/z", [](int k) { return LaurentQ::monomial(q_power(k) - QPoly(1), -k); }};
}

Alphabet Alphabet::zero() {
  return {"0", [](int) { return LaurentQ(); }};
}

const LaurentQ& scalar_schur(const Partition& mu, const Alphabet& a) {
  const std::pair<std::string, Partition> key{a.id, mu};
  if (const auto* v = scalar_cache.lookup(key)) return *v;
  return scalar_cache.insert(key, compute_scalar_schur(mu, a));
}

ZSeries::ZSeries(Window w, bool polynomial)
    : window_(w), polynomial_(polynomial), exact_through_(polynomial ? INT_MAX : w.hi) {}

void ZSeries::add(int exponent, const SymFunc& c) {
  if (c.is_zero()) return;
  if (exponent < window_.lo) throw WindowError("series term z^" + std::to_string(exponent) + " below window", exponent, window_.hi);
  if (exponent > window_.hi) {
    polynomial_ = false;
    exact_through_ = std::min(exact_through_, window_.hi);
    return;
  }
  auto [it, inserted] = coeffs_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

SymFunc ZSeries::coefficient(int exponent) const {
  if (exponent < window_.lo) return {};
  if (!polynomial_ && exponent > exact_through_)
    throw WindowError("coefficient z^" + std::to_string(exponent) + " not exactly known", window_.lo, exponent);
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? SymFunc() : it->second;
}

namespace {

// Lowest exponent actually present; unknown terms of a non-polynomial
// series can only start above its window.
long long lowest(const ZSeries& s) {
  if (s.coefficients().empty()) return s.polynomial() ? LLONG_MAX / 4 : s.window().lo;
  return s.coefficients().begin()->first;
}

int exact_bound(const ZSeries& a, const ZSeries& b) {
  long long bound = LLONG_MAX;
  if (!a.polynomial()) bound = std::min<long long>(bound, static_cast<long long>(a.exact_through()) + lowest(b));
  if (!b.polynomial()) bound = std::min<long long>(bound, static_cast<long long>(b.exact_through()) + lowest(a));
  return bound > INT_MAX ? INT_MAX : static_cast<int>(bound);
}

}  // namespace

ZSeries operator*(const ZSeries& a, const ZSeries& b) {
  const Window w{a.window().lo + b.window().lo, a.window().hi + b.window().hi};
  const int bound = exact_bound(a, b);
  ZSeries out(w, bound == INT_MAX);
  out.exact_through_ = bound;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) {
      if (ea + eb > bound) continue;
      out.add(ea + eb, mult(ca, cb));
    }
  return out;
}

SymFunc ZSeries::product_coefficient(const ZSeries& a, const ZSeries& b, int exponent) {
  if (exponent > exact_bound(a, b))
    throw WindowError("product coefficient z^" + std::to_string(exponent) + " not exactly known",
                      a.window().lo + b.window().lo, exponent);
  SymFunc out;
  for (const auto& [ea, ca] : a.coeffs_) {
    const SymFunc cb = b.coefficient(exponent - ea);
    if (!cb.is_zero()) out += mult(ca, cb);
  }
  return out;
}

ZSeries omega_series(int sign, Window w) {
  ZSeries s(w, false);
  for (int n = std::max(0, w.lo); n <= w.hi; ++n) {
    if (sign >= 0)
      s.add(n, h(n));
    else
      s.add(n, (n % 2 ? -e(n) : e(n)));
  }
  return s;
}

ZSeries plethystic_translate(const SymFunc& f, const Alphabet& a, Window w) {
  ZSeries out(w, true);
  for (const auto& [lambda, c] : f.terms()) {
    for (const auto& mu : subpartitions(lambda)) {
      const LaurentQ& scalar = scalar_schur(mu, a);
      if (scalar.is_zero()) continue;
      const SymFunc skew = skew_schur(lambda, mu);
      for (const auto& [ze, qc] : scalar.terms()) {
        if (ze < w.lo || ze > w.hi)
          throw WindowError("translation term z^" + std::to_string(ze) + " outside window", std::min(ze, w.lo),
                            std::max(ze, w.hi));
        out.add(ze, skew.scaled(qc * c));
      }
    }
  }
  return out;
}

ZSeries plethystic_translate_pbasis(const SymFunc& f, const Alphabet& a, Window w) {
  const Expansion px = basis_convert(f, Basis::p);
  // (z exponent, p-index) -> rational coefficient.
  std::map<std::pair<int, Partition>, RatQPoly, ZPartLess> acc;
  auto add_acc = [&](int ze, const Partition& nu, const RatQPoly& c) {
    if (c.is_zero()) return;
    auto [it, ins] = acc.try_emplace({ze, nu}, c);
    if (!ins) {
      it->second += c;
      if (it->second.is_zero()) acc.erase(it);
    }
  };
  for (const auto& [rho, coeff] : px.terms) {
    const int len = rho.length();
    for (unsigned mask = 0; mask < (1U << len); ++mask) {
      // Parts in the mask stay as p_k[X]; the rest become p_k[A].
      std::vector<int> kept;
      RatLaurent scalar = RatLaurent::constant(RatQPoly(1));
      for (int i = 0; i < len; ++i) {
        if (mask & (1U << i))
          kept.push_back(rho[i]);
        else
          scalar = scalar * to_rational(a.power_sum(rho[i]));
      }
      if (scalar.is_zero()) continue;
      const Partition nu(std::move(kept));
      for (const auto& [ze, sc] : scalar.terms()) add_acc(ze, nu, sc * coeff);
    }
  }
  std::map<int, std::map<Partition, RatQPoly, PartitionLess>> schur_terms;
  for (const auto& [key, c] : acc) {
    const auto& [ze, nu] = key;
    for (const auto& lambda : partitions_of(nu.size())) {
      const long long chi = character(lambda, nu);
      if (chi == 0) continue;
      auto& slot = schur_terms[ze][lambda];
      slot += c.scaled(BigRational(chi));
    }
  }
  ZSeries out(w, true);
  for (const auto& [ze, terms] : schur_terms) {
    SymFunc coeff;
    for (const auto& [lambda, c] : terms) {
      auto ic = to_integral(c);
      if (!ic) throw std::domain_error("non-integral coefficient after p-basis translation");
      coeff.add_term(lambda, *ic);
    }
    if (coeff.is_zero()) continue;
    if (ze < w.lo || ze > w.hi)
      throw WindowError("translation term outside window", std::min(ze, w.lo), std::max(ze, w.hi));
    out.add(ze, coeff);
  }
  return out;
}

void BiSeries::add(int z, int u, const SymFunc& c) {
  if (c.is_zero()) return;
  if (!box_.contains(z, u)) throw WindowError("bivariate term outside exact box", box_.z_lo, box_.z_hi);
  auto [it, ins] = coeffs_.try_emplace({z, u}, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

SymFunc BiSeries::coefficient(int z, int u) const {
  if (zero_below_z_ && z < box_.z_lo) return {};
  if (!box_.contains(z, u))
    throw WindowError("bivariate coefficient (" + std::to_string(z) + "," + std::to_string(u) + ") not known",
                      box_.z_lo, box_.z_hi);
  auto it = coeffs_.find({z, u});
  return it == coeffs_.end() ? SymFunc() : it->second;
}

BiSeries BiSeries::times(const std::map<std::pair<int, int>, QPoly>& poly) const {
  Box b{zero_below_z_ ? INT_MAX : INT_MIN, INT_MAX, INT_MIN, INT_MAX};
  for (const auto& [d, c] : poly) {
    const auto [dz, du] = d;
    b.z_lo = zero_below_z_ ? std::min(b.z_lo, box_.z_lo + dz) : std::max(b.z_lo, box_.z_lo + dz);
    b.z_hi = std::min(b.z_hi, box_.z_hi + dz);
    b.u_lo = std::max(b.u_lo, box_.u_lo + du);
    b.u_hi = std::min(b.u_hi, box_.u_hi + du);
  }
  BiSeries out(b, zero_below_z_);
  for (int z = b.z_lo; z <= b.z_hi; ++z)
    for (int u = b.u_lo; u <= b.u_hi; ++u) {
      SymFunc acc;
      for (const auto& [d, c] : poly) acc += coefficient(z - d.first, u - d.second).scaled(c);
      out.add(z, u, acc);
    }
  return out;
}

}  // namespace ribbonfn
