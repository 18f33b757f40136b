#include "ribbonfn/hall_littlewood.hpp"

#include "ribbonfn/detail/cache.hpp"
#include "ribbonfn/format.hpp"
#include "ribbonfn/operators.hpp"

#include "json.hpp"

namespace ribbonfn {

namespace {

detail::MemoCache<Partition, SymFunc, PartitionHash> rows_cache;

}  // namespace

SymFunc hl_build(const Partition& lambda, HlVia via) {
  if (via == HlVia::rows) {
    if (const auto* v = rows_cache.lookup(lambda)) return *v;
    SymFunc f = SymFunc::one();
    for (int i = lambda.length() - 1; i >= 0; --i) f = jing_row(lambda[i])(f);
    return rows_cache.insert(lambda, std::move(f));
  }
  const Partition cols = conjugate(lambda);
  SymFunc f = SymFunc::one();
  for (int i = cols.length() - 1; i >= 0; --i) f = hcol(cols[i])(f);
  return f;
}

QPoly kostka_foulkes(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return {};
  return hl_build(lambda).coefficient(mu);
}

std::vector<std::pair<Partition, QPoly>> kostka_table(const Partition& lambda) {
  const SymFunc h = hl_build(lambda);
  std::vector<std::pair<Partition, QPoly>> out;
  for (const auto& mu : partitions_of(lambda.size())) out.emplace_back(mu, h.coefficient(mu));
  return out;
}

std::string kostka_csv(const Partition& lambda) {
  std::string out = "lambda,mu,kostka_foulkes\n";
  const std::string l = to_string(lambda);
  for (const auto& [mu, k] : kostka_table(lambda))
    out += "\"" + l + "\",\"" + to_string(mu) + "\",\"" + to_text(k) + "\"\n";
  return out;
}

std::string kostka_json(const Partition& lambda) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& [mu, k] : kostka_table(lambda)) {
    nlohmann::ordered_json coeff = nlohmann::ordered_json::array();
    for (const auto& [e, c] : k.terms()) coeff.push_back({e, c.str()});
    nlohmann::ordered_json entry;
    entry["mu"] = mu.parts();
    entry["coeff"] = std::move(coeff);
    entries.push_back(std::move(entry));
  }
  nlohmann::ordered_json j;
  j["lambda"] = lambda.parts();
  j["entries"] = std::move(entries);
  return j.dump();
}

}  // namespace ribbonfn
