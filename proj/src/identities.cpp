#include "ribbonfn/identities.hpp"

#include "ribbonfn/format.hpp"
#include "ribbonfn/hall_littlewood.hpp"
#include "ribbonfn/operators.hpp"
#include "ribbonfn/oracles.hpp"
#include "ribbonfn/ribbon.hpp"
#include "ribbonfn/schur.hpp"
#include "ribbonfn/series.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <exception>
#include <map>
#include <thread>

namespace ribbonfn {

namespace {

using Cases = std::vector<IdentityCase>;
using Notes = std::vector<std::string>;

std::string input_text(const Partition& p) { return "s[" + to_string(p) + "]"; }

std::string tag(const std::string& name, std::initializer_list<std::pair<const char*, std::string>> params) {
  std::string s = name + "[";
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) s += ",";
    s += std::string(k) + "=" + v;
    first = false;
  }
  return s + "]";
}

std::string str(int v) { return std::to_string(v); }

// U(s_λ) = V(s_λ) for |λ| <= max_size (and ℓ(λ) <= level when level >= 0).
void op_cases(Cases& out, const std::string& id, const LinearOp& u, const LinearOp& v, int max_size, int level = -1) {
  for (const auto& lambda : partitions_up_to(max_size, level))
    out.push_back({id, input_text(lambda), [u, v, lambda] { return std::pair{u.on_basis(lambda), v.on_basis(lambda)}; }});
}

void value_case(Cases& out, const std::string& id, const std::string& input, std::function<CaseValue()> f) {
  out.push_back({id, input, std::move(f)});
}

SymFunc integer(long long v) { return SymFunc::constant(QPoly(v)); }

// Σ_j (−1)^{m−j} h_j V S̃_{m−j}; the sum stops once S̃_{m−j} kills s_λ.
LinearOp hat_row_rhs(const LinearOp& v, int m) {
  return custom("hat-row-rhs(" + v.key() + "," + str(m) + ")", v.degree_shift() + m, [v, m](const Partition& lambda) {
    SymFunc out;
    for (int j = 0; j <= m + lambda.size(); ++j) {
      const SymFunc inner = v(bernstein_col(m - j).on_basis(lambda));
      if (inner.is_zero()) continue;
      const SymFunc term = mul_h(j, inner);
      out += (m - j) % 2 ? -term : term;
    }
    return out;
  });
}

LinearOp dhat(const LinearOp& v, const LinearOp& s) { return hat(compose(hat(v), s)); }

// ---------------------------------------------------------------- suites

void column_commutation(Cases& out, const Bounds& b, Notes& notes, bool full) {
  if (full)
    notes.push_back("checked as a full operator identity on every s_lambda");
  else
    notes.push_back("checked at level k: inputs s_lambda with length(lambda) <= k");
  for (int k = 0; k <= b.max_k; ++k)
    for (int m = 0; m <= b.max_m; ++m)
      op_cases(out, tag(full ? "column-commutation-full" : "column-commutation", {{"k", str(k)}, {"m", str(m)}}),
               compose(jing_row(m + 1), hcol(k)), compose(hcol(k + 1), jing_row(m)), b.max_size, full ? -1 : k);
}

void column_adding(Cases& out, const Bounds& b, Notes&) {
  for (int k = 1; k <= b.max_k; ++k)
    for (const auto& lambda : partitions_up_to(b.max_size, k)) {
      if (lambda.length() != k) continue;
      value_case(out, tag("column-adding", {{"k", str(k)}}), to_string(lambda), [k, lambda] {
        return std::pair{hcol(k)(hl_build(lambda)), hl_build(add_column(lambda, k))};
      });
      value_case(out, tag("column-adding-chain", {{"k", str(k)}}), to_string(lambda), [k, lambda] {
        SymFunc f = hcol(0)(SymFunc::one());
        for (int i = k - 1; i >= 0; --i) f = jing_row(lambda[i] + 1)(f);
        return std::pair{f, hl_build(add_column(lambda, k))};
      });
    }
}

void column_st2(Cases& out, const Bounds& b, Notes&) {
  for (int k = 2; k <= std::max(2, b.max_k); ++k)
    op_cases(out, tag("column-st2", {{"k", str(k)}}), scale(q_power(k - 1), compose(hcol(k), bernstein_col(2))),
             dhat(hcol(k), bernstein_row(2)), b.max_size);
}

// Compares two bivariate series on their common exact box, restricted to
// z + u >= min_total.
CaseValue compare_boxes(const BiSeries& l, const BiSeries& r, int min_total) {
  const auto& lb = l.box();
  const auto& rb = r.box();
  for (int z = std::max(lb.z_lo, rb.z_lo); z <= std::min(lb.z_hi, rb.z_hi); ++z)
    for (int u = std::max(lb.u_lo, rb.u_lo); u <= std::min(lb.u_hi, rb.u_hi); ++u) {
      if (z + u < min_total) continue;
      SymFunc a = l.coefficient(z, u);
      SymFunc c = r.coefficient(z, u);
      if (a != c) {
        CaseValue v(std::pair<SymFunc, SymFunc>{a, c});
        v.where = "z^" + str(z) + " u^" + str(u);
        return v;
      }
    }
  return {};
}

void gf_commutation(Cases& out, const Bounds& b, Notes& notes, bool full) {
  const int w = b.max_m;
  // Below total degree 1 the first commutation has boundary corrections.
  const int min_total = full ? INT_MIN : 1;
  notes.push_back("series windows: u and z exponents in [-1, " + str(w + 1) + "]");
  if (!full) notes.push_back("first commutation compared on coefficients z^b u^a with a + b >= 1");
  for (const auto& lambda : partitions_up_to(b.max_size)) {
    const SymFunc s = SymFunc::schur(lambda);
    value_case(out, "jing-st-series", input_text(lambda), [w, s, min_total] {
      // H(u) S̃(z) P = (q − u/z) S̃(z) H(u) P, with [z^b] S̃(z) = (−1)^b S̃_b.
      const BiSeries::Box box{-1, w + 1, -1, w + 1};
      BiSeries lhs(box, false), base(box, false);
      for (int zb = box.z_lo; zb <= box.z_hi; ++zb)
        for (int ua = box.u_lo; ua <= box.u_hi; ++ua) {
          const SymFunc hs = jing_row(ua)(bernstein_col(zb)(s));
          const SymFunc sh = bernstein_col(zb)(jing_row(ua)(s));
          lhs.add(zb, ua, zb % 2 ? -hs : hs);
          base.add(zb, ua, zb % 2 ? -sh : sh);
        }
      const BiSeries rhs = base.times({{{0, 0}, q_power(1)}, {{-1, 1}, QPoly(-1)}});
      return compare_boxes(lhs, rhs, min_total);
    });
    value_case(out, "jing-h-series", input_text(lambda), [w, s] {
      // (1 − qz/u) H(u) Ω[zX] P = (1 − z/u) Ω[zX] H(u) P.
      const BiSeries::Box box{0, w + 1, -1, w + 1};
      BiSeries l0(box, true), r0(box, true);
      for (int zb = box.z_lo; zb <= box.z_hi; ++zb)
        for (int ua = box.u_lo; ua <= box.u_hi; ++ua) {
          l0.add(zb, ua, jing_row(ua)(mul_h(zb, s)));
          r0.add(zb, ua, mul_h(zb, jing_row(ua)(s)));
        }
      const BiSeries lhs = l0.times({{{0, 0}, QPoly(1)}, {{1, -1}, -q_power(1)}});
      const BiSeries rhs = r0.times({{{0, 0}, QPoly(1)}, {{1, -1}, QPoly(-1)}});
      return compare_boxes(lhs, rhs, INT_MIN);
    });
  }
  // Coefficient forms.
  for (int a = -1; a <= w; ++a)
    for (int bb = -1; bb <= w; ++bb) {
      if (a + bb < min_total) continue;
      const LinearOp lhs = compose(jing_row(a), bernstein_col(bb));
      const LinearOp rhs = add(scale(q_power(1), compose(bernstein_col(bb), jing_row(a))),
                               compose(bernstein_col(bb + 1), jing_row(a - 1)));
      op_cases(out, tag("jing-st", {{"a", str(a)}, {"b", str(bb)}}), lhs, rhs, b.max_size);
    }
  for (int a = -1; a <= w; ++a)
    for (int bb = 0; bb <= w; ++bb) {
      LinearOp rhs = compose(mul_op(h(bb)), jing_row(a));
      for (int j = 1; j <= bb; ++j)
        rhs = add(rhs, scale(q_power(j) - q_power(j - 1), compose(mul_op(h(bb - j)), jing_row(a + j))));
      op_cases(out, tag("jing-h", {{"a", str(a)}, {"b", str(bb)}}), compose(jing_row(a), mul_op(h(bb))), rhs,
               b.max_size);
    }
}

void commutation_steps(Cases& out, const Bounds& b, Notes& notes, bool full) {
  notes.push_back("intermediate steps of the column commutation argument, checked at level k");
  if (!full) notes.push_back("the two expansion steps start at k = 2, where Hcol[k-1] is a ribbon sum");
  for (int k = 1; k <= b.max_k; ++k)
    for (int m = 1; m <= b.max_m; ++m) {
      const bool steps = full || k >= 2;
      const LinearOp hk = hcol(k), hk1 = hcol(k - 1);
      const LinearOp s1 = bernstein_row(1), s2 = bernstein_row(2), t1 = bernstein_col(1), t2 = bernstein_col(2);
      const LinearOp hm = jing_row(m), hm1 = jing_row(m - 1), hp = jing_row(m + 1);
      if (steps) {
        op_cases(out, tag("commutation-step-hat", {{"k", str(k)}, {"m", str(m)}}), compose(hp, dhat(hk1, s1)),
                 subtract(compose(dhat(hk, s1), hm), compose(dhat(hk, s2), hm1)), b.max_size, k);
        op_cases(out, tag("commutation-step-st", {{"k", str(k)}, {"m", str(m)}}), compose(hp, compose(hk1, t1)),
                 add(scale(q_power(1), compose(hk, compose(t1, hm))), compose(hk, compose(t2, hm1))), b.max_size, k);
      }
      LinearOp rhs = add(compose(dhat(hk, s1), hm), scale(q_power(k), compose(hk, compose(t1, hm))));
      rhs = subtract(rhs, compose(dhat(hk, s2), hm1));
      rhs = add(rhs, scale(q_power(k - 1), compose(hk, compose(t2, hm1))));
      op_cases(out, tag("commutation-steps", {{"k", str(k)}, {"m", str(m)}}), compose(hp, hk), rhs, b.max_size, k);
    }
}

void involution(Cases& out, const Bounds& b, Notes&) {
  std::vector<LinearOp> ops{identity_op(), bernstein_row(1), bernstein_row(2), bernstein_col(2), jing_row(2)};
  for (const auto& r : enumerate_ribbons(3)) ops.push_back(ribbon_op(r));
  for (const auto& v : ops) op_cases(out, "involution[" + v.key() + "]", hat(hat(v)), v, b.max_size);
}

void ribbon_right(Cases& out, const Bounds& b, Notes&) {
  for (int k = 1; k <= b.max_k; ++k)
    for (const auto& r : enumerate_ribbons(k))
      op_cases(out, "ribbon-right[" + to_string(r) + "]", compose(ribbon_op(r), bernstein_col(1)), ribbon_op(extend_right(r)),
               b.max_size);
}

void ribbon_below(Cases& out, const Bounds& b, Notes&) {
  for (int k = 1; k <= b.max_k; ++k)
    for (const auto& r : enumerate_ribbons(k))
      op_cases(out, "ribbon-below[" + to_string(r) + "]", dhat(ribbon_op(r), bernstein_row(1)), ribbon_op(extend_below(r)),
               b.max_size);
}

void hat_row(Cases& out, const Bounds& b, Notes&) {
  const std::vector<LinearOp> ops{identity_op(), bernstein_row(1), perp_op(SymFunc::schur({1}))};
  for (const auto& v : ops)
    for (int m = -1; m <= 2; ++m)
      op_cases(out, tag("hat-row", {{"V", v.key()}, {"m", str(m)}}), dhat(v, bernstein_row(m)), hat_row_rhs(v, m),
               b.max_size);
}

void hat_skew(Cases& out, const Bounds& b, Notes&) {
  const std::vector<Partition> lambdas{{}, {1}, {2}, {1, 1}};
  for (const auto& lambda : lambdas)
    for (int m = 1; m <= 3; ++m) {
      std::vector<int> seq{m};
      seq.insert(seq.end(), lambda.parts().begin(), lambda.parts().end());
      const auto st = straighten(seq);
      const int shift = -(m + lambda.size());
      const LinearOp rhs = st ? scale(QPoly(st->sign), perp_op(SymFunc::schur(st->shape))) : zero_op(shift);
      op_cases(out, tag("hat-skew", {{"lambda", "(" + to_string(lambda) + ")"}, {"m", str(m)}}),
               dhat(perp_op(SymFunc::schur(lambda)), bernstein_row(-m)), rhs, b.max_size);
    }
}

void ribbon_duality(Cases& out, const Bounds& b, Notes& notes) {
  notes.push_back("asserted at level k only");
  for (int k = 1; k <= b.max_k; ++k)
    for (const auto& r : enumerate_ribbons(k))
      op_cases(out, "ribbon-duality[" + to_string(r) + "]", omega_conj(hat(ribbon_op(r))), ribbon_op(complement(r)),
               b.max_size, k);
}

void st_commutation(Cases& out, const Bounds& b, Notes&) {
  for (int a = -1; a <= b.max_m; ++a) {
    for (int c = -1; c <= b.max_m; ++c) {
      if (c == a + 1) continue;
      op_cases(out, tag("st-exchange", {{"a", str(a)}, {"b", str(c)}}), compose(bernstein_col(a), bernstein_col(c)),
               scale(QPoly(-1), compose(bernstein_col(c - 1), bernstein_col(a + 1))), b.max_size);
    }
    op_cases(out, tag("st-vanish", {{"a", str(a)}}), compose(bernstein_col(a), bernstein_col(a + 1)),
             zero_op(2 * a + 1), b.max_size);
  }
}

void hcol_recursion(Cases& out, const Bounds& b, Notes&) {
  for (int k = 0; k <= b.max_k; ++k)
    op_cases(out, tag("hcol-recursion", {{"k", str(k)}}), hcol(k, HcolMode::recursive), hcol(k, HcolMode::sum), b.max_size);
}

void bernstein(Cases& out, const Bounds& b, Notes&) {
  for (int m = -b.max_m; m <= b.max_m; ++m) {
    op_cases(out, tag("row-series", {{"m", str(m)}}), bernstein_row(m), bernstein_row_series(m), b.max_size);
    op_cases(out, tag("col-series", {{"m", str(m)}}), bernstein_col(m), bernstein_col_series(m), b.max_size);
    op_cases(out, tag("col-omega", {{"m", str(m)}}), bernstein_col(m), omega_conj(bernstein_row(m)), b.max_size);
    op_cases(out, tag("jing-hooks", {{"m", str(m)}}), jing_row(m), jing_row_hooks(m), b.max_size);
    const LinearOp hm = jing_row(m), sm = bernstein_row(m), mh = mul_op(h(m));
    for (const auto& lambda : partitions_up_to(b.max_size)) {
      value_case(out, tag("jing-q0", {{"m", str(m)}}), input_text(lambda),
                 [hm, sm, lambda] { return std::pair{hm.on_basis(lambda).at_q(0), sm.on_basis(lambda)}; });
      value_case(out, tag("jing-q1", {{"m", str(m)}}), input_text(lambda), [hm, mh, m, lambda] {
        return std::pair{hm.on_basis(lambda).at_q(1), m < 0 ? SymFunc() : mh.on_basis(lambda)};
      });
    }
  }
  for (const auto& lambda : partitions_up_to(b.max_size)) {
    value_case(out, "rodrigues-row", input_text(lambda), [lambda] {
      SymFunc f = SymFunc::one();
      for (int i = lambda.length() - 1; i >= 0; --i) f = bernstein_row(lambda[i])(f);
      return std::pair{f, SymFunc::schur(lambda)};
    });
    value_case(out, "rodrigues-col", input_text(lambda), [lambda] {
      const Partition cols = conjugate(lambda);
      SymFunc f = SymFunc::one();
      for (int i = cols.length() - 1; i >= 0; --i) f = bernstein_col(cols[i])(f);
      return std::pair{f, SymFunc::schur(lambda)};
    });
  }
}

void hat_gate(Cases& out, const Bounds& b, Notes& notes) {
  notes.push_back("finite skew expansion of hat versus the two-alphabet form [z^m] s_gamma[-A] Omega");
  for (const char* g : {"S", "H", "St"})
    for (int m = -1; m <= std::max(2, b.max_m); ++m) {
      const std::string gen = g;
      const LinearOp v = gen == "S" ? bernstein_row(m) : gen == "H" ? jing_row(m) : bernstein_col(m);
      const LinearOp hv = hat(v);
      for (const auto& gamma : partitions_up_to(b.max_size))
        value_case(out, tag("hat-gate", {{"V", v.key()}}), input_text(gamma),
                   [hv, gen, m, gamma] { return std::pair{hv.on_basis(gamma), hat_translation(gen, m, gamma)}; });
    }
}

void rows_columns(Cases& out, const Bounds& b, Notes&) {
  for (int n = 0; n <= b.max_size; ++n)
    for (const auto& lambda : partitions_of(n))
      value_case(out, "rows-columns", to_string(lambda),
                 [lambda] { return std::pair{hl_build(lambda, HlVia::rows), hl_build(lambda, HlVia::columns)}; });
}

void specialization(Cases& out, const Bounds& b, Notes& notes) {
  notes.push_back("triangularity is observed, not assumed");
  for (int n = 0; n <= b.max_size; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const std::string in = to_string(lambda);
      value_case(out, "q=0", in, [lambda] { return std::pair{hl_build(lambda).at_q(0), SymFunc::schur(lambda)}; });
      value_case(out, "q=1", in,
                 [lambda] { return std::pair{hl_build(lambda).at_q(1), to_symfunc(h_product_to_schur(lambda))}; });
      value_case(out, "diagonal", in,
                 [lambda] { return std::pair{SymFunc::constant(kostka_foulkes(lambda, lambda)), integer(1)}; });
      for (const auto& mu : partitions_of(n)) {
        const std::string pair = "(" + in + "),(" + to_string(mu) + ")";
        value_case(out, "K(1)=ssyt", pair, [lambda, mu] {
          return std::pair{SymFunc::constant(kostka_foulkes(lambda, mu)).at_q(1),
                           integer(oracles::ssyt_count(mu, lambda))};
        });
        if (!dominates(mu, lambda))
          value_case(out, "triangularity", pair,
                     [lambda, mu] { return std::pair{SymFunc::constant(kostka_foulkes(lambda, mu)), SymFunc()}; });
      }
    }
}

void oracle_suite(Cases& out, const Bounds& b, Notes& notes) {
  const auto sel = oracles::select_statistic({3, 4});
  for (const auto& line : sel.report) notes.push_back("statistic " + line);
  if (sel.matching.empty()) {
    value_case(out, "statistic-selection", "k=3,4", [] { return std::pair{integer(1), integer(0)}; });
    return;
  }
  const auto stat = sel.matching.front();
  notes.push_back("selected statistic: " + stat.name());
  for (int k = 1; k <= b.max_k; ++k) {
    const std::string in = "k=" + str(k);
    value_case(out, "hcol=ribbons", in, [k] { return std::pair{hcol(k)(SymFunc::one()), oracles::h1k_by_ribbons(k)}; });
    value_case(out, "ribbons=rsk", in,
               [k, stat] { return std::pair{oracles::h1k_by_ribbons(k), oracles::h1k_by_rsk(k, stat)}; });
    value_case(out, "q=1 gives SYT counts", in, [k] {
      SymFunc expected;
      for (const auto& lambda : partitions_of(k)) expected.add_term(lambda, QPoly(oracles::syt_count(lambda)));
      return std::pair{oracles::h1k_by_ribbons(k).at_q(1), expected};
    });
  }
}

void lr_suite(Cases& out, const Bounds& b, Notes&) {
  for (const auto& lambda : partitions_up_to(b.max_size))
    for (const auto& mu : partitions_up_to(b.max_size)) {
      if (lambda.empty() || mu.empty()) continue;
      value_case(out, "mult=lr", "(" + to_string(lambda) + ")*(" + to_string(mu) + ")", [lambda, mu] {
        SymFunc expected;
        for (const auto& nu : partitions_of(lambda.size() + mu.size())) {
          const long long c = oracles::lr_enumerate(lambda, mu, nu);
          if (c) expected.add_term(nu, QPoly(c));
        }
        return std::pair{mult(SymFunc::schur(lambda), SymFunc::schur(mu)), expected};
      });
    }
  for (const auto& outer : partitions_up_to(b.max_size))
    for (const auto& inner : subpartitions(outer))
      value_case(out, "skew=lr", "(" + to_string(outer) + ")/(" + to_string(inner) + ")", [outer, inner] {
        return std::pair{skew_schur(outer, inner), oracles::skew_by_enumeration(outer, inner)};
      });
}

void schur_suite(Cases& out, const Bounds& b, Notes&) {
  const int lo = -2, hi = 6;
  for (int len = 1; len <= 4; ++len) {
    std::vector<int> seq(len, lo);
    for (;;) {
      value_case(out, "straighten=jacobi-trudi", "(" + [&] {
        std::string s;
        for (std::size_t i = 0; i < seq.size(); ++i) s += (i ? "," : "") + str(seq[i]);
        return s;
      }() + ")", [seq] {
        const auto st = straighten(seq);
        SymFunc viaexchange = st ? SymFunc::schur(st->shape, QPoly(st->sign)) : SymFunc();
        return std::pair{viaexchange, jacobi_trudi(seq)};
      });
      int i = len - 1;
      while (i >= 0 && seq[i] == hi) seq[i--] = lo;
      if (i < 0) break;
      ++seq[i];
    }
  }
  const std::vector<Alphabet> alphabets{Alphabet::minus_inverse_z(), Alphabet::plus_inverse_z(),
                                        Alphabet::hall_littlewood()};
  for (const auto& a : alphabets)
    for (const auto& gamma : partitions_up_to(b.max_size))
      value_case(out, "translate=pbasis[" + a.id + "]", input_text(gamma), [a, gamma] {
        const Window w = Window::for_degree(gamma.size(), 0);
        const ZSeries x = plethystic_translate(SymFunc::schur(gamma), a, w);
        const ZSeries y = plethystic_translate_pbasis(SymFunc::schur(gamma), a, w);
        // Compare coefficient by coefficient, exposing the first difference.
        for (int e = w.lo; e <= w.hi; ++e)
          if (x.coefficient(e) != y.coefficient(e)) return std::pair{x.coefficient(e), y.coefficient(e)};
        return std::pair{SymFunc(), SymFunc()};
      });
  for (const auto& f : partitions_up_to(b.max_size))
    for (const auto& g : partitions_up_to(b.max_size)) {
      if (f.size() + g.size() > b.max_size + 1) continue;
      value_case(out, "omega-ring-map", "(" + to_string(f) + "),(" + to_string(g) + ")", [f, g] {
        return std::pair{omega(mult(SymFunc::schur(f), SymFunc::schur(g))),
                         mult(omega(SymFunc::schur(f)), omega(SymFunc::schur(g)))};
      });
      for (const auto& k : partitions_of(std::max(0, g.size() - f.size()))) {
        if (f.size() > g.size()) break;
        value_case(out, "perp-adjoint", "(" + to_string(f) + "),(" + to_string(g) + "),(" + to_string(k) + ")",
                   [f, g, k] {
                     const SymFunc sf = SymFunc::schur(f), sg = SymFunc::schur(g), sk = SymFunc::schur(k);
                     return std::pair{SymFunc::constant(hall_inner(perp(sf, sg), sk)),
                                      SymFunc::constant(hall_inner(sg, mult(sf, sk)))};
                   });
      }
    }
}

using Builder = void (*)(Cases&, const Bounds&, Notes&);

struct Entry {
  SuiteInfo info;
  Builder build;
};

void column_commutation_level(Cases& c, const Bounds& b, Notes& n) { column_commutation(c, b, n, false); }
void column_commutation_full(Cases& c, const Bounds& b, Notes& n) { column_commutation(c, b, n, true); }
void gf_main(Cases& c, const Bounds& b, Notes& n) { gf_commutation(c, b, n, false); }
void gf_full(Cases& c, const Bounds& b, Notes& n) { gf_commutation(c, b, n, true); }
void commutation_steps_main(Cases& c, const Bounds& b, Notes& n) { commutation_steps(c, b, n, false); }
void commutation_steps_full(Cases& c, const Bounds& b, Notes& n) { commutation_steps(c, b, n, true); }

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {{"column-commutation", "H[m+1] . Hcol[k] = Hcol[k+1] . H[m] at level k", {5, 4, 6}}, column_commutation_level},
      {{"column-commutation-full", "the same commutation on every input", {5, 4, 6}}, column_commutation_full},
      {{"column-adding", "Hcol[k] adds a column to H_lambda, l(lambda) = k", {0, 3, 5}}, column_adding},
      {{"column-st2", "q^{k-1} Hcol[k] . St[2] = hat(hat(Hcol[k]) . S[2])", {0, 3, 5}}, column_st2},
      {{"gf-commutation", "H(u) against St(z) and Omega[zX], series and coefficient forms", {3, 0, 4}}, gf_main},
      {{"gf-commutation-full", "the same, including coefficients with a + b <= 0", {3, 0, 4}}, gf_full},
      {{"commutation-steps", "intermediate identities behind the column commutation", {3, 3, 5}}, commutation_steps_main},
      {{"commutation-steps-full", "the same, including the k = 1 expansion steps", {3, 3, 5}}, commutation_steps_full},
      {{"involution", "hat(hat(V)) = V", {0, 0, 6}}, involution},
      {{"ribbon-right", "S^R . St[1] = S^{R with a cell to the right}", {0, 5, 6}}, ribbon_right},
      {{"ribbon-below", "hat(hat(S^R) . S[1]) = S^{R with a cell below}", {0, 5, 6}}, ribbon_below},
      {{"hat-row", "hat(hat(V) . S[m]) = sum_j (-1)^{m-j} h_j V St[m-j]", {0, 0, 5}}, hat_row},
      {{"hat-skew", "hat(hat(perp(s_lambda)) . S[-m]) = perp(s_(m,lambda))", {0, 0, 6}}, hat_skew},
      {{"ribbon-duality", "omega hat(S^R) omega = S^{complement R} at level k", {0, 4, 8}}, ribbon_duality},
      {{"st-commutation", "St[a] . St[b] = -St[b-1] . St[a+1] and St[a] . St[a+1] = 0", {4, 0, 5}}, st_commutation},
      {{"hcol-recursion", "recursive and ribbon-sum forms of Hcol[k] agree", {0, 5, 6}}, hcol_recursion},
      {{"bernstein", "generator cross-checks and Rodrigues formulas", {4, 0, 6}}, bernstein},
      {{"hat-gate", "finite hat expansion against the two-alphabet definition", {2, 0, 5}}, hat_gate},
      {{"rows-columns", "H_lambda by rows equals H_lambda by columns", {0, 0, 7}}, rows_columns},
      {{"specialization", "q = 0 and q = 1 specializations and Kostka-Foulkes checks", {0, 0, 6}}, specialization},
      {{"oracles", "Hcol[k](1) against ribbon and RSK sums", {0, 6, 0}}, oracle_suite},
      {{"lr", "products and skews against LR-tableau enumeration", {0, 0, 5}}, lr_suite},
      {{"schur", "straightening, plethystic translation and ring-map checks", {0, 0, 5}}, schur_suite},
  };
  return entries;
}

const Entry& find_entry(const std::string& name) {
  for (const auto& e : registry())
    if (e.info.name == name) return e;
  throw InvalidInput("unknown suite '" + name + "'");
}

}  // namespace

std::string IdentityReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["bounds"] = {{"max_m", bounds.max_m}, {"max_k", bounds.max_k}, {"max_size", bounds.max_size}};
  j["cases"] = cases;
  nlohmann::ordered_json f = nlohmann::ordered_json::array();
  for (const auto& x : failures) {
    nlohmann::ordered_json e;
    e["identity"] = x.identity;
    e["input"] = x.input;
    e["lhs"] = x.lhs;
    e["rhs"] = x.rhs;
    f.push_back(std::move(e));
  }
  j["failures"] = std::move(f);
  j["notes"] = notes;
  return j.dump();
}

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> v;
    for (const auto& e : registry()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

bool has_suite(const std::string& name) {
  return std::any_of(registry().begin(), registry().end(), [&](const Entry& e) { return e.info.name == name; });
}

Bounds default_bounds(const std::string& name) { return find_entry(name).info.defaults; }

std::vector<IdentityCase> suite_cases(const std::string& name, const Bounds& b, std::vector<std::string>* notes) {
  const Entry& e = find_entry(name);
  Cases cases;
  Notes n;
  e.build(cases, b, n);
  if (notes) *notes = std::move(n);
  return cases;
}

IdentityReport run_suite(const std::string& name, const Bounds& b, int jobs) {
  IdentityReport report;
  report.suite = name;
  report.bounds = b;
  const Cases cases = suite_cases(name, b, &report.notes);
  report.cases = static_cast<int>(cases.size());

  std::vector<std::optional<Failure>> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      const auto& c = cases[i];
      try {
        const CaseValue v = c.eval();
        if (v.lhs != v.rhs)
          results[i] = Failure{c.identity, v.where.empty() ? c.input : c.input + " at " + v.where, to_text(v.lhs),
                               to_text(v.rhs)};
      } catch (const std::exception& ex) {
        results[i] = Failure{c.identity, c.input, std::string("error: ") + ex.what(), ""};
      }
    }
  };
  if (jobs <= 0) jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  jobs = std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(1, cases.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& r : results)
    if (r) report.failures.push_back(std::move(*r));
  return report;
}

}  // namespace ribbonfn
