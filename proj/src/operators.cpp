#include "ribbonfn/operators.hpp"

#include "ribbonfn/format.hpp"
#include "ribbonfn/schur.hpp"
#include "ribbonfn/series.hpp"

#include <cstdlib>
#include <mutex>
#include <unordered_map>

namespace ribbonfn {

namespace {

std::mutex registry_mu;
std::unordered_map<std::string, std::shared_ptr<const OpNode>> registry;

std::shared_ptr<const OpNode> find_node(const std::string& key) {
  std::lock_guard lock(registry_mu);
  auto it = registry.find(key);
  return it == registry.end() ? nullptr : it->second;
}

LinearOp intern(std::shared_ptr<const OpNode> node) {
  std::lock_guard lock(registry_mu);
  return LinearOp(registry.try_emplace(node->key(), std::move(node)).first->second);
}

// Builds the node only when the key is new; concurrent builders race benignly.
template <class Node, class... Args>
LinearOp make(const std::string& key, int shift, Args&&... args) {
  if (auto n = find_node(key)) return LinearOp(std::move(n));
  return intern(std::make_shared<const Node>(key, shift, std::forward<Args>(args)...));
}

class FnNode : public OpNode {
 public:
  FnNode(std::string key, int shift, std::function<SymFunc(const Partition&)> fn)
      : OpNode(std::move(key), shift), fn_(std::move(fn)) {}

 protected:
  SymFunc compute(const Partition& lambda) const override { return fn_(lambda); }

 private:
  std::function<SymFunc(const Partition&)> fn_;
};

class DelegateNode : public OpNode {
 public:
  DelegateNode(std::string key, int shift, LinearOp impl) : OpNode(std::move(key), shift), impl_(std::move(impl)) {}

 protected:
  SymFunc compute(const Partition& lambda) const override { return impl_.on_basis(lambda); }

 private:
  LinearOp impl_;
};

std::string op_index(int m) { return "[" + std::to_string(m) + "]"; }

SymFunc sign_scaled(int k, const SymFunc& f) { return k % 2 ? -f : f; }

Alphabet negated_hall_littlewood() {
  return {"+(1-q)/z", [](int k) { return LaurentQ::monomial(QPoly(1) - q_power(k), -k); }};
}

Alphabet q_minus_one() {
  return {"q-1", [](int k) { return LaurentQ::constant(q_power(k) - QPoly(1)); }};
}

// [z^m] f[X + A] Ω[sign·zX].
SymFunc translate_coefficient(const Partition& lambda, const Alphabet& a, int sign, int m) {
  const Window w = Window::for_degree(lambda.size(), m);
  const ZSeries t = plethystic_translate(SymFunc::schur(lambda), a, w);
  const ZSeries o = omega_series(sign, w);
  return ZSeries::product_coefficient(t, o, m);
}

int homogeneous_shift(const SymFunc& f, const char* what) {
  if (f.is_zero()) return 0;
  auto d = f.homogeneous_degree();
  if (!d) throw InvalidInput(std::string(what) + " requires a homogeneous symmetric function");
  return *d;
}

}  // namespace

int max_degree() {
  static const int value = [] {
    const char* env = std::getenv("RIBBONFN_MAX_DEGREE");
    if (!env || !*env) return 24;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0) return 24;
    return static_cast<int>(v);
  }();
  return value;
}

SymFunc OpNode::on_basis(const Partition& lambda) const {
  if (const auto* v = memo_.lookup(lambda)) return *v;
  if (lambda.size() > max_degree() || lambda.size() + shift_ > max_degree())
    throw InvalidInput("degree " + std::to_string(lambda.size()) + " exceeds RIBBONFN_MAX_DEGREE=" +
                       std::to_string(max_degree()));
  return memo_.insert(lambda, compute(lambda));
}

SymFunc LinearOp::operator()(const SymFunc& f) const {
  SymFunc out;
  for (const auto& [p, c] : f.terms()) out += on_basis(p).scaled(c);
  return out;
}

LinearOp identity_op() {
  return make<FnNode>("id", 0, std::function<SymFunc(const Partition&)>([](const Partition& p) { return SymFunc::schur(p); }));
}

LinearOp zero_op(int shift) {
  return make<FnNode>("0" + op_index(shift), shift, std::function<SymFunc(const Partition&)>([](const Partition&) { return SymFunc(); }));
}

LinearOp custom(std::string key, int shift, std::function<SymFunc(const Partition&)> fn) {
  return make<FnNode>(key, shift, std::move(fn));
}

LinearOp bernstein_row(int m) {
  return custom("S" + op_index(m), m, [m](const Partition& lambda) {
    SymFunc out;
    const SymFunc s = SymFunc::schur(lambda);
    for (int k = 0; k <= lambda.size(); ++k) {
      if (m + k < 0) continue;
      const SymFunc skew = perp_e(k, s);
      if (skew.is_zero()) continue;
      out += sign_scaled(k, mul_h(m + k, skew));
    }
    return out;
  });
}

LinearOp bernstein_row_series(int m) {
  return custom("S" + op_index(m) + "@series", m, [m](const Partition& lambda) {
    return translate_coefficient(lambda, Alphabet::minus_inverse_z(), +1, m);
  });
}

LinearOp bernstein_col(int m) {
  return custom("St" + op_index(m), m, [m](const Partition& lambda) {
    SymFunc out;
    const SymFunc s = SymFunc::schur(lambda);
    for (int k = 0; k <= lambda.size(); ++k) {
      if (m + k < 0) continue;
      const SymFunc skew = perp_h(k, s);
      if (skew.is_zero()) continue;
      out += sign_scaled(k, mul_e(m + k, skew));
    }
    return out;
  });
}

LinearOp bernstein_col_series(int m) {
  return custom("St" + op_index(m) + "@series", m, [m](const Partition& lambda) {
    return sign_scaled(m < 0 ? -m : m, translate_coefficient(lambda, Alphabet::plus_inverse_z(), -1, m));
  });
}

LinearOp jing_row(int m) {
  return custom("H" + op_index(m), m, [m](const Partition& lambda) {
    return translate_coefficient(lambda, Alphabet::hall_littlewood(), +1, m);
  });
}

LinearOp jing_row_hooks(int m) {
  return custom("H" + op_index(m) + "@hooks", m, [m](const Partition& lambda) {
    SymFunc out;
    const Alphabet a = q_minus_one();
    for (const auto& mu : subpartitions(lambda)) {
      if (mu.length() > 1 && mu[1] > 1) continue;
      if (m + mu.size() < 0) continue;
      const LaurentQ& scalar = scalar_schur(mu, a);
      if (scalar.is_zero()) continue;
      out += mul_h(m + mu.size(), skew_schur(lambda, mu)).scaled(scalar.coefficient(0));
    }
    return out;
  });
}

LinearOp ribbon_op(const Ribbon& r) {
  const std::string key = "R{" + to_string(r) + "}";
  if (auto n = find_node(key)) return LinearOp(std::move(n));
  const RibbonShape shape = ribbon_shape(r);
  const Partition cols = conjugate(shape.outer);
  LinearOp chain = bernstein_col(cols[cols.length() - 1]);
  for (int j = cols.length() - 2; j >= 0; --j) chain = compose(bernstein_col(cols[j]), chain);
  LinearOp impl = shape.inner.empty() ? chain : compose(perp_op(SymFunc::schur(shape.inner)), chain);
  return make<DelegateNode>(key, r.size(), std::move(impl));
}

LinearOp hcol(int k, HcolMode mode) {
  if (k < 0) throw InvalidInput("hcol requires k >= 0");
  if (k == 0) return bernstein_col(0);
  const std::string key = "Hcol" + op_index(k) + (mode == HcolMode::recursive ? "@recursive" : "");
  if (auto n = find_node(key)) return LinearOp(std::move(n));
  std::optional<LinearOp> impl;
  if (mode == HcolMode::sum) {
    for (const auto& r : enumerate_ribbons(k)) {
      LinearOp term = scale(q_power(comaj(r)), ribbon_op(r));
      impl = impl ? add(*impl, term) : term;
    }
  } else if (k == 1) {
    impl = bernstein_col(1);
  } else {
    const LinearOp prev = hcol(k - 1, HcolMode::recursive);
    impl = add(scale(q_power(k - 1), compose(prev, bernstein_col(1))), hat(compose(hat(prev), bernstein_row(1))));
  }
  return make<DelegateNode>(key, k, std::move(*impl));
}

LinearOp hat(const LinearOp& v) {
  return custom("hat(" + v.key() + ")", v.degree_shift(), [v](const Partition& gamma) {
    SymFunc out;
    for (const auto& mu : subpartitions(gamma)) {
      const SymFunc image = v.on_basis(conjugate(mu));
      if (image.is_zero()) continue;
      const SymFunc skew = skew_schur(gamma, mu);
      out += sign_scaled(mu.size(), mult(skew, image));
    }
    return out;
  });
}

SymFunc hat_translation(const std::string& generator, int m, const Partition& gamma) {
  Alphabet negated;
  int sign = +1;
  if (generator == "S") {
    negated = Alphabet::plus_inverse_z();
  } else if (generator == "H") {
    negated = negated_hall_littlewood();
  } else if (generator == "St") {
    negated = Alphabet::minus_inverse_z();
    sign = -1;
  } else {
    throw InvalidInput("no translation form for generator '" + generator + "'");
  }
  const LaurentQ& scalar = scalar_schur(gamma, negated);
  SymFunc out;
  for (const auto& [ze, c] : scalar.terms()) {
    const int n = m - ze;
    const SymFunc omega_coeff = sign > 0 ? h(n) : sign_scaled(n, e(n));
    out += omega_coeff.scaled(c);
  }
  return generator == "St" ? sign_scaled(m < 0 ? -m : m, out) : out;
}

LinearOp omega_conj(const LinearOp& v) {
  return custom("omegaConj(" + v.key() + ")", v.degree_shift(),
                [v](const Partition& gamma) { return omega(v.on_basis(conjugate(gamma))); });
}

LinearOp perp_op(const SymFunc& f) {
  const int d = homogeneous_shift(f, "perp");
  return custom("perp(" + to_text(f) + ")", -d, [f](const Partition& lambda) { return perp(f, SymFunc::schur(lambda)); });
}

LinearOp mul_op(const SymFunc& f) {
  const int d = homogeneous_shift(f, "mul");
  return custom("mul(" + to_text(f) + ")", d, [f](const Partition& lambda) { return mult(f, SymFunc::schur(lambda)); });
}

LinearOp compose(const LinearOp& u, const LinearOp& v) {
  return custom("(" + u.key() + " . " + v.key() + ")", u.degree_shift() + v.degree_shift(),
                [u, v](const Partition& lambda) { return u(v.on_basis(lambda)); });
}

LinearOp add(const LinearOp& u, const LinearOp& v) {
  if (u.degree_shift() != v.degree_shift())
    throw InvalidInput("cannot add operators with degree shifts " + std::to_string(u.degree_shift()) + " and " +
                       std::to_string(v.degree_shift()));
  return custom("(" + u.key() + " + " + v.key() + ")", u.degree_shift(),
                [u, v](const Partition& lambda) { return u.on_basis(lambda) + v.on_basis(lambda); });
}

LinearOp subtract(const LinearOp& u, const LinearOp& v) { return add(u, scale(QPoly(-1), v)); }

LinearOp scale(const QPoly& c, const LinearOp& v) {
  return custom("(" + to_text(c) + ")*" + v.key(), v.degree_shift(),
                [c, v](const Partition& lambda) { return v.on_basis(lambda).scaled(c); });
}

KLevelResult k_level_equal(const LinearOp& u, const LinearOp& v, int k, int max_size) {
  KLevelResult res;
  for (const auto& lambda : partitions_up_to(max_size, k)) {
    ++res.cases;
    SymFunc a = u.on_basis(lambda);
    SymFunc b = v.on_basis(lambda);
    if (a != b) {
      res.equal = false;
      res.witness = lambda;
      res.lhs = std::move(a);
      res.rhs = std::move(b);
      return res;
    }
  }
  return res;
}

}  // namespace ribbonfn
