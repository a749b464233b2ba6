#pragma once

#include <optional>
#include <set>
#include <vector>

#include "errors.hpp"
#include "ideal.hpp"
#include "ring.hpp"

namespace purespec {

// Purity via "for each f in I there is g in I with f(1-g) = 0", i.e. f = fg.
inline bool pure_by_witness(const Ideal& i) {
  const auto& r = i.r();
  bool ok = true;
  i.members().for_each([&](Element f) {
    if (!ok) return;
    bool found = false;
    i.members().for_each([&](Element g) { found = found || r.mul(f, g) == f; });
    ok = found;
  });
  return ok;
}

// Purity via "Ann(f) + I = A for all f in I".
inline bool pure_by_annihilator(const Ideal& i) {
  bool ok = true;
  i.members().for_each([&](Element f) {
    if (ok && !ideals_coprime(annihilator(i.ring(), f), i)) ok = false;
  });
  return ok;
}

// Both criteria are evaluated; disagreement is an implementation bug.
inline bool is_pure(const Ideal& i) {
  bool a = pure_by_witness(i);
  bool b = pure_by_annihilator(i);
  if (a != b) {
    throw InternalInvariant("purity criteria disagree on " + i.to_string() + " in " +
                            i.r().label());
  }
  return a;
}

// u(I) = {f : f = fg for some g in I}.
inline Ideal unit_part(const Ideal& i) {
  const auto& r = i.r();
  ElementSet m(r.order());
  for (Element f = 0; f < r.order(); ++f) {
    bool found = false;
    i.members().for_each([&](Element g) { found = found || r.mul(f, g) == f; });
    if (found) m.insert(f);
  }
  return {Ideal::Trusted{}, i.ring(), std::move(m)};
}

// Largest pure ideal inside I, as the stable point of J -> u(J) started at I.
// A u-fixed ideal is pure, and every pure K ⊆ J satisfies K ⊆ u(J), so the
// limit contains every pure subideal of I. `trace` receives J_0, J_1, ...
// ending with the fixed point repeated once.
inline Ideal pure_part_fixed_point(const Ideal& i, std::vector<Ideal>* trace = nullptr) {
  Ideal cur = i;
  if (trace) trace->push_back(cur);
  for (;;) {
    Ideal next = unit_part(cur);
    if (trace) trace->push_back(next);
    if (next == cur) return cur;
    if (!next.proper_subset_of(cur)) {
      throw InternalInvariant("unit part is not contained in its ideal: " + cur.to_string());
    }
    cur = std::move(next);
  }
}

// Kernel of the localization at p: {f : fs = 0 for some s ∉ p}.
inline Ideal ker_pi(const Ideal& p) {
  if (!is_prime_ideal(p)) throw NotPrime(p.to_string() + " is not a prime ideal");
  const auto& r = p.r();
  const ElementSet outside = p.members().complement();
  ElementSet m(r.order());
  for (Element f = 0; f < r.order(); ++f) {
    bool killed = false;
    outside.for_each([&](Element s) { killed = killed || r.mul(f, s) == r.zero(); });
    if (killed) m.insert(f);
  }
  return {Ideal::Trusted{}, p.ring(), std::move(m)};
}

// D(f) restricted to the given primes: those not containing f.
inline std::vector<Ideal> basic_open(const std::vector<Ideal>& primes, Element f) {
  std::vector<Ideal> out;
  for (const auto& p : primes)
    if (!p.contains(f)) out.push_back(p);
  return out;
}

// Ideal generated by the idempotents lying in I. This is λ(P) for a
// purely-prime P.
inline Ideal regular_part(const Ideal& i) {
  std::vector<Element> gens;
  for (Element e : idempotents(i.r()))
    if (i.contains(e)) gens.push_back(e);
  return ideal_generate(i.ring(), gens);
}

// Regular = generated by idempotents; equivalently generated by the
// idempotents it contains.
inline bool is_regular(const Ideal& i) { return regular_part(i) == i; }

// The unique idempotent e with I = Ae. Every pure ideal of a finite ring is
// finitely generated, so e exists; failing to find exactly one is a bug.
inline Element idempotent_generator(const Ideal& i) {
  if (!is_pure(i)) throw NotPure(i.to_string() + " is not pure");
  std::optional<Element> found;
  for (Element e : idempotents(i.r())) {
    if (!i.contains(e)) continue;
    if (principal_ideal(i.ring(), e) == i) {
      if (found) {
        throw InternalInvariant("two idempotents generate " + i.to_string() + ": " +
                                i.r().name(*found) + " and " + i.r().name(e));
      }
      found = e;
    }
  }
  if (!found) {
    throw InternalInvariant("pure ideal " + i.to_string() + " of " + i.r().label() +
                            " has no idempotent generator");
  }
  return *found;
}

// All regular ideals: ideals Ae for idempotents e closed under sums (a sum
// of regular ideals is again generated by idempotents). Canonical order.
inline std::vector<Ideal> regular_ideals(const RingPtr& ring) {
  std::set<ElementSet, CanonicalLess> seen;
  std::vector<Ideal> principal;
  for (Element e : idempotents(*ring)) {
    auto p = principal_ideal(ring, e);
    if (seen.insert(p.members()).second) principal.push_back(p);
  }
  std::vector<Ideal> frontier = principal;
  while (!frontier.empty()) {
    std::vector<Ideal> next;
    for (const auto& a : frontier) {
      for (const auto& p : principal) {
        auto s = ideal_sum(a, p);
        if (seen.insert(s.members()).second) next.push_back(s);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Ideal> out;
  for (const auto& m : seen) out.emplace_back(Ideal::Trusted{}, ring, m);
  return out;
}

// Pierce points: maximal elements among proper regular ideals.
inline std::vector<Ideal> max_regular_ideals(const RingPtr& ring) {
  std::vector<Ideal> proper;
  for (auto& i : regular_ideals(ring))
    if (i.is_proper()) proper.push_back(std::move(i));
  std::vector<Ideal> out;
  for (const auto& i : proper) {
    bool maximal = true;
    for (const auto& j : proper) maximal = maximal && !i.proper_subset_of(j);
    if (maximal) out.push_back(i);
  }
  return out;
}

}  // namespace purespec
