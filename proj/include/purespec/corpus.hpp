#pragma once

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cache.hpp"
#include "verify.hpp"

namespace purespec {

struct CorpusSpec {
  std::uint64_t zmod_max = 0;  // Z/n for 2 <= n <= zmod_max
  bool products = false;
  std::size_t product_factors = 2;      // products of 2..k seed rings
  std::size_t product_max_order = 64;
  std::vector<std::pair<std::uint64_t, unsigned>> polyquot;  // (p, d): all monic f over Z/p, 1 <= deg f <= d
  std::vector<std::string> checks;
  unsigned threads = 0;  // 0: hardware concurrency
  Limits limits{};
  std::optional<std::filesystem::path> cache_dir;
};

// Z/n for n <= 64, two-factor products of order <= 64, and Z/p[x]/(f) for
// p in {2,3}, deg f <= 2.
inline CorpusSpec default_corpus_spec() {
  CorpusSpec s;
  s.zmod_max = 64;
  s.products = true;
  s.polyquot = {{2, 2}, {3, 2}};
  s.checks = all_check_ids();
  return s;
}

inline void validate(const CorpusSpec& s) {
  if (s.checks.empty()) throw ConfigError("corpus needs at least one check");
  for (const auto& id : s.checks)
    if (!is_check_id(id)) throw UnknownCheckId("unknown check id '" + id + "'");
  for (auto [p, d] : s.polyquot) {
    if (p < 2) throw ConfigError("polyquot modulus must be >= 2");
    if (d < 1) throw ConfigError("polyquot degree must be >= 1");
  }
  if (s.products && s.product_factors < 2) throw ConfigError("products need at least 2 factors");
}

// Monic polynomials of degree d over Z/p, ascending coefficients, in
// lexicographic order of the lower coefficients (constant term fastest).
inline std::vector<std::vector<std::int64_t>> monic_polys(std::uint64_t p, unsigned d, const Limits& limits) {
  std::size_t count = 1;
  for (unsigned k = 0; k < d; ++k) {
    count *= p;
    if (count > limits.order_cap) throw OrderCapExceeded("Z/" + std::to_string(p) + "[x] degree " + std::to_string(d) + " exceeds order cap");
  }
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::vector<std::int64_t> f(d + 1, 0);
    std::size_t rest = idx;
    for (unsigned k = 0; k < d; ++k) {
      f[k] = static_cast<std::int64_t>(rest % p);
      rest /= p;
    }
    f[d] = 1;
    out.push_back(std::move(f));
  }
  return out;
}

// The rings of a corpus in a fixed order: Z/n ascending, then polynomial
// quotients, then products. Product seeds are the Z/n and the quotients of
// degree >= 2 (degree-one quotients only repeat Z/p).
inline std::vector<RingPtr> corpus_rings(const CorpusSpec& s) {
  std::vector<RingPtr> out, seeds;
  for (std::uint64_t n = 2; n <= s.zmod_max; ++n) {
    out.push_back(build_zmod(n, s.limits));
    seeds.push_back(out.back());
  }
  for (auto [p, d] : s.polyquot)
    for (unsigned deg = 1; deg <= d; ++deg)
      for (auto& f : monic_polys(p, deg, s.limits)) {
        out.push_back(build_poly_quotient(p, f, s.limits));
        if (deg >= 2) seeds.push_back(out.back());
      }
  if (!s.products) return out;
  const std::size_t cap = std::min(s.product_max_order, s.limits.order_cap);
  // Non-decreasing index tuples, so each multiset of seeds appears once.
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t from, std::size_t order) -> void {
    if (idx.size() >= 2) {
      std::vector<RingPtr> fs;
      for (auto k : idx) fs.push_back(seeds[k]);
      out.push_back(build_product(fs, s.limits));
    }
    if (idx.size() == s.product_factors) return;
    for (std::size_t k = from; k < seeds.size(); ++k) {
      if (order * seeds[k]->order() > cap) continue;
      idx.push_back(k);
      self(self, k, order * seeds[k]->order());
      idx.pop_back();
    }
  };
  rec(rec, 0, 1);
  return out;
}

struct RingReport {
  std::string label;
  std::size_t order = 0;
  std::optional<ClassReport> classification;  // absent when the lattice hit a cap
  std::vector<CheckResult> checks;
  std::optional<bool> conjecture_holds;
};

struct CheckCounts {
  std::size_t pass = 0, fail = 0, skipped = 0;
  friend bool operator==(const CheckCounts&, const CheckCounts&) = default;
};

struct CorpusReport {
  CorpusSpec spec;
  std::vector<RingReport> rings;
  CheckCounts counts;
  std::size_t conjecture_pass = 0, conjecture_fail = 0;
  std::string caveat;
  bool resource_skips = false;
};

inline void tally(CheckCounts& c, CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: ++c.pass; break;
    case CheckStatus::fail: ++c.fail; break;
    case CheckStatus::skipped: ++c.skipped; break;
  }
}

inline bool is_resource_skip(const CheckResult& r) {
  return r.status == CheckStatus::skipped && r.details.rfind("resource:", 0) == 0;
}

// Runs `checks` on one ring; lattice caps turn every check into a skip.
inline RingReport analyze_ring(const RingPtr& ring, const std::vector<std::string>& checks, const Limits& limits,
                               LatticeCache* cache = nullptr) {
  RingReport rep{ring->label(), ring->order(), std::nullopt, {}, std::nullopt};
  std::optional<RingAnalysis> a;
  try {
    a.emplace(cache ? cache->get_or_compute(ring, limits) : IdealLattice::enumerate(ring, limits), limits);
  } catch (const ResourceError& e) {
    for (const auto& id : checks)
      rep.checks.push_back({id, ring->label(), CheckStatus::skipped, std::string("resource: ") + e.what(), {}});
    return rep;
  }
  rep.classification = a->classification();
  for (const auto& id : checks) rep.checks.push_back(run_check(*a, id));
  rep.conjecture_holds = detail::member_set(a->purely_primes()) == detail::member_set(a->purely_maximals());
  return rep;
}

inline CorpusReport run_corpus(const CorpusSpec& spec) {
  validate(spec);
  CorpusReport rep;
  rep.spec = spec;
  rep.caveat = detail::kGelfandCaveat;
  auto rings = corpus_rings(spec);
  rep.rings.resize(rings.size());

  std::optional<LatticeCache> cache;
  if (spec.cache_dir) cache.emplace(*spec.cache_dir);

  unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(rings.size(), 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < rings.size();) {
      try {
        rep.rings[k] = analyze_ring(rings[k], spec.checks, spec.limits, cache ? &*cache : nullptr);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  // Fold in ring order so the aggregate does not depend on scheduling.
  for (const auto& r : rep.rings) {
    for (const auto& c : r.checks) {
      tally(rep.counts, c.status);
      rep.resource_skips = rep.resource_skips || is_resource_skip(c);
    }
    if (r.conjecture_holds) ++(*r.conjecture_holds ? rep.conjecture_pass : rep.conjecture_fail);
  }
  return rep;
}

}  // namespace purespec
