#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ideal.hpp"
#include "lattice.hpp"
#include "purity.hpp"
#include "symz.hpp"

namespace purespec {

// Ring classes, each decided from its own definition. `witnesses` holds one
// explanation per negative flag.
struct ClassReport {
  bool is_reduced = false;
  bool is_gelfand = false;
  bool is_mp = false;
  unsigned krull_dimension = 0;
  bool is_pp_ring = false;
  bool is_von_neumann_regular = false;
  bool all_pure_idempotent_generated = false;
  bool is_semi_noetherian = false;
  std::vector<std::string> witnesses;
};

namespace detail {

inline bool is_idempotent_generated(const Ideal& i) {
  for (Element e : idempotents(i.r()))
    if (i.contains(e) && principal_ideal(i.ring(), e) == i) return true;
  return false;
}

}  // namespace detail

inline ClassReport classify(const IdealLattice& lattice) {
  ClassReport c;
  const auto& ring = lattice.ring();
  const auto& r = *ring;
  const auto primes = lattice.primes();
  const auto maximals = lattice.maximals();
  const auto minimals = lattice.minimal_primes();

  auto nil = radical(Ideal::zero(ring));
  c.is_reduced = nil.is_zero();
  if (!c.is_reduced) {
    Element w = (nil.members() - Ideal::zero(ring).members()).first();
    c.witnesses.push_back("not reduced: " + r.name(w) + " is a nonzero nilpotent");
  }

  c.is_gelfand = true;
  c.is_mp = true;
  for (const auto& p : primes) {
    std::vector<const Ideal*> above, below;
    for (const auto& m : maximals)
      if (p.subset_of(m)) above.push_back(&m);
    for (const auto& q : minimals)
      if (q.subset_of(p)) below.push_back(&q);
    if (c.is_gelfand && above.size() != 1) {
      c.is_gelfand = false;
      std::string w = "not Gelfand: prime " + p.to_string() + " lies in " +
                      std::to_string(above.size()) + " maximal ideals";
      for (auto* m : above) w += " " + m->to_string();
      c.witnesses.push_back(w);
    }
    if (c.is_mp && below.size() != 1) {
      c.is_mp = false;
      std::string w = "not mp: prime " + p.to_string() + " contains " +
                      std::to_string(below.size()) + " minimal primes";
      for (auto* q : below) w += " " + q->to_string();
      c.witnesses.push_back(w);
    }
  }

  // Longest strict chain of primes, by depth over the prime poset.
  std::vector<unsigned> depth(primes.size(), 0);
  std::vector<std::size_t> order(primes.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](auto a, auto b) { return primes[a].size() < primes[b].size(); });
  for (auto a : order)
    for (auto b : order)
      if (primes[b].proper_subset_of(primes[a])) depth[a] = std::max(depth[a], depth[b] + 1);
  c.krull_dimension = depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());

  c.is_pp_ring = true;
  c.is_von_neumann_regular = true;
  for (Element f = 0; f < r.order(); ++f) {
    if (c.is_pp_ring && !detail::is_idempotent_generated(annihilator(ring, f))) {
      c.is_pp_ring = false;
      c.witnesses.push_back("not p.p.: Ann(" + r.name(f) + ") = " +
                            annihilator(ring, f).to_string() + " is not generated by an idempotent");
    }
    if (c.is_von_neumann_regular && !detail::is_idempotent_generated(principal_ideal(ring, f))) {
      c.is_von_neumann_regular = false;
      c.witnesses.push_back("not von Neumann regular: principal ideal (" + r.name(f) + ") = " +
                            principal_ideal(ring, f).to_string() +
                            " is not generated by an idempotent");
    }
  }

  c.all_pure_idempotent_generated = true;
  for (const auto& i : lattice.pure_ideals()) {
    try {
      idempotent_generator(i);
    } catch (const InternalInvariant&) {
      c.all_pure_idempotent_generated = false;
      c.witnesses.push_back("pure ideal " + i.to_string() + " has no idempotent generator");
      break;
    }
  }
  // Every ideal of a finite ring is generated by its finitely many members.
  c.is_semi_noetherian = true;
  return c;
}

// Closed-form report for the ring of integers.
inline ClassReport classify_symz() {
  ClassReport c;
  c.is_reduced = true;
  c.is_gelfand = false;
  c.witnesses.push_back("not Gelfand: prime 0 lies in maximal ideals 2Z and 3Z");
  c.is_mp = true;  // domain: 0 is the unique minimal prime
  c.krull_dimension = 1;
  c.is_pp_ring = true;  // domain: Ann(f) is 0 or Z
  c.is_von_neumann_regular = false;
  c.witnesses.push_back("not von Neumann regular: 2Z is not generated by an idempotent");
  c.all_pure_idempotent_generated = true;  // pure ideals are 0 = Z·0 and Z = Z·1
  c.is_semi_noetherian = true;             // every domain is
  return c;
}

// The pure ideals of Z: exactly 0Z and Z.
inline std::vector<ZIdeal> pure_ideals_symz() { return {{0}, {1}}; }

}  // namespace purespec
