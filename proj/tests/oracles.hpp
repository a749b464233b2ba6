#pragma once

// Brute-force reference computations for tests. Nothing here calls the
// library's algorithms; only raw ring tables are read.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "purespec/ring.hpp"

namespace oracle {

using purespec::Element;
using purespec::FiniteRing;
using Members = std::vector<Element>;  // sorted element indices

inline std::vector<std::uint64_t> zmod_idempotents(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t e = 0; e < n; ++e)
    if (e * e % n == e) out.push_back(e);
  return out;
}

inline Members zmod_annihilator(std::uint64_t n, std::uint64_t f) {
  Members out;
  for (std::uint64_t g = 0; g < n; ++g)
    if (f * g % n == 0) out.push_back(static_cast<Element>(g));
  return out;
}

// Ideal of Z/n generated by d: the multiples of gcd(d, n).
inline Members zmod_multiples(std::uint64_t n, std::uint64_t d) {
  std::uint64_t g = std::gcd(d, n);
  Members out;
  for (std::uint64_t k = 0; k < n; k += g) out.push_back(static_cast<Element>(k));
  return out;
}

inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t m) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    unsigned c = 0;
    while (m % p == 0) {
      m /= p;
      ++c;
    }
    if (c) out.push_back({p, c});
  }
  if (m > 1) out.push_back({m, 1});
  return out;
}

inline bool is_ideal(const FiniteRing& r, const Members& s) {
  std::vector<bool> in(r.order(), false);
  for (auto e : s) in[e] = true;
  if (!in[r.zero()]) return false;
  for (auto a : s) {
    for (auto b : s) {
      // a - b: search the additive inverse by scanning the table
      for (Element c = 0; c < r.order(); ++c)
        if (r.add_table()[b * r.order() + c] == r.zero() && !in[r.add_table()[a * r.order() + c]])
          return false;
    }
    for (Element x = 0; x < r.order(); ++x)
      if (!in[r.mul_table()[x * r.order() + a]]) return false;
  }
  return true;
}

// Every ideal by scanning all subsets that contain zero (order <= 16).
inline std::set<Members> all_ideals_by_subset_scan(const FiniteRing& r) {
  std::set<Members> out;
  const std::size_t n = r.order();
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    if (!(mask >> r.zero() & 1)) continue;
    Members s;
    for (Element e = 0; e < n; ++e)
      if (mask >> e & 1) s.push_back(e);
    if (is_ideal(r, s)) out.insert(s);
  }
  return out;
}

inline bool contains(const Members& s, Element e) { return std::binary_search(s.begin(), s.end(), e); }

inline bool subset(const Members& a, const Members& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Definition: every f in I has g in I with f = fg.
inline bool is_pure(const FiniteRing& r, const Members& s) {
  for (auto f : s) {
    bool ok = false;
    for (auto g : s) ok = ok || r.mul(f, g) == f;
    if (!ok) return false;
  }
  return true;
}

inline bool is_prime(const FiniteRing& r, const Members& s) {
  if (s.size() == r.order()) return false;
  for (Element a = 0; a < r.order(); ++a)
    for (Element b = 0; b < r.order(); ++b)
      if (contains(s, r.mul(a, b)) && !contains(s, a) && !contains(s, b)) return false;
  return true;
}

// Largest pure ideal inside `i`: union-free search for the pure member of
// `ideals` containing all other pure members inside `i`.
inline Members largest_pure_inside(const FiniteRing& r, const std::set<Members>& ideals, const Members& i) {
  std::vector<Members> pure;
  for (const auto& j : ideals)
    if (subset(j, i) && is_pure(r, j)) pure.push_back(j);
  for (const auto& cand : pure) {
    bool top = true;
    for (const auto& j : pure) top = top && subset(j, cand);
    if (top) return cand;
  }
  return {};
}

// Brute-force table isomorphism search (small orders). Returns the map.
inline std::optional<std::vector<Element>> find_isomorphism(const FiniteRing& a, const FiniteRing& b) {
  if (a.order() != b.order()) return std::nullopt;
  const std::size_t n = a.order();
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[a.zero()] != b.zero() || perm[a.one()] != b.one()) continue;
    bool ok = true;
    for (Element x = 0; ok && x < n; ++x)
      for (Element y = 0; ok && y < n; ++y)
        ok = perm[a.add(x, y)] == b.add(perm[x], perm[y]) &&
             perm[a.mul(x, y)] == b.mul(perm[x], perm[y]);
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace oracle
