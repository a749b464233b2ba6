#pragma once

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

#include "config.hpp"
#include "errors.hpp"
#include "ideal.hpp"
#include "purity.hpp"

namespace purespec {

struct LatticeEntry {
  Ideal ideal;
  bool is_prime = false;
  bool is_maximal = false;
  bool is_minimal_prime = false;
  bool is_pure = false;
  bool is_regular = false;
};

// Every ideal of a ring exactly once, in canonical order, with each flag
// computed from its own definition.
class IdealLattice {
 public:
  // Breadth-first closure: start from the principal ideals and add sums with
  // principal ideals until nothing new appears. Every ideal of a finite ring
  // is a finite sum of principal ideals, so this reaches all of them.
  static IdealLattice enumerate(const RingPtr& ring, const Limits& limits = {}) {
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
    std::vector<Ideal> all;
    auto add = [&](Ideal i) {
      if (seen.emplace(i.members(), all.size()).second) {
        all.push_back(std::move(i));
        if (all.size() > limits.lattice_cap) {
          throw IdealLatticeTooLarge(ring->label() + " has more than " +
                                     std::to_string(limits.lattice_cap) + " ideals");
        }
        return true;
      }
      return false;
    };
    add(Ideal::zero(ring));
    std::vector<Ideal> principal;
    for (Element f = 0; f < ring->order(); ++f) {
      auto p = principal_ideal(ring, f);
      if (add(p)) principal.push_back(std::move(p));
    }
    for (std::size_t k = 0; k < all.size(); ++k) {
      for (const auto& p : principal) {
        if (p.members().is_subset_of(all[k].members())) continue;
        add(ideal_sum(all[k], p));
      }
    }
    return from_ideals(ring, std::move(all));
  }

  // Builds the flags for a known-complete list of ideals (e.g. a cache hit).
  static IdealLattice from_ideals(const RingPtr& ring, std::vector<Ideal> ideals) {
    std::sort(ideals.begin(), ideals.end(), IdealCanonicalLess{});
    IdealLattice lat;
    lat.ring_ = ring;
    for (auto& i : ideals) {
      if (i.ring() != ring) throw RingMismatch("lattice ideal from another ring");
      LatticeEntry e{std::move(i)};
      e.is_prime = is_prime_ideal(e.ideal);
      e.is_pure = is_pure(e.ideal);
      e.is_regular = is_regular(e.ideal);
      lat.index_.emplace(e.ideal.members(), lat.entries_.size());
      lat.entries_.push_back(std::move(e));
    }
    if (lat.index_.size() != lat.entries_.size()) throw InvalidArgument("duplicate ideals in lattice");
    for (auto& e : lat.entries_) {
      if (!e.ideal.is_proper()) continue;
      e.is_maximal = std::none_of(lat.entries_.begin(), lat.entries_.end(), [&](const auto& o) {
        return o.ideal.is_proper() && e.ideal.proper_subset_of(o.ideal);
      });
    }
    for (auto& e : lat.entries_) {
      if (!e.is_prime) continue;
      e.is_minimal_prime = std::none_of(lat.entries_.begin(), lat.entries_.end(), [&](const auto& o) {
        return o.is_prime && o.ideal.proper_subset_of(e.ideal);
      });
    }
    return lat;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<LatticeEntry>& entries() const noexcept { return entries_; }
  const LatticeEntry& operator[](std::size_t k) const { return entries_.at(k); }

  std::optional<std::size_t> index_of(const ElementSet& members) const {
    auto it = index_.find(members);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> index_of(const Ideal& i) const { return index_of(i.members()); }

  std::vector<Ideal> ideals() const { return select([](const auto&) { return true; }); }
  std::vector<Ideal> primes() const { return select([](const auto& e) { return e.is_prime; }); }
  std::vector<Ideal> maximals() const { return select([](const auto& e) { return e.is_maximal; }); }
  std::vector<Ideal> minimal_primes() const {
    return select([](const auto& e) { return e.is_minimal_prime; });
  }
  std::vector<Ideal> pure_ideals() const { return select([](const auto& e) { return e.is_pure; }); }

 private:
  template <class Pred>
  std::vector<Ideal> select(Pred pred) const {
    std::vector<Ideal> out;
    for (const auto& e : entries_)
      if (pred(e)) out.push_back(e.ideal);
    return out;
  }

  RingPtr ring_;
  std::vector<LatticeEntry> entries_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
};

inline IdealLattice enumerate_ideals(const RingPtr& ring, const Limits& limits = {}) {
  return IdealLattice::enumerate(ring, limits);
}

struct PrimePoint {
  Ideal ideal;
  bool maximal = false;
  bool minimal = false;
};

// All primes with their flags. In a finite ring each prime is both maximal
// and minimal; a prime missing either flag raises InternalInvariant.
inline std::vector<PrimePoint> prime_spectrum(const IdealLattice& lattice) {
  std::vector<PrimePoint> out;
  for (const auto& e : lattice.entries()) {
    if (!e.is_prime) continue;
    if (!e.is_maximal || !e.is_minimal_prime) {
      throw InternalInvariant("prime " + e.ideal.to_string() + " of finite ring " +
                              lattice.ring()->label() + " is not both maximal and minimal");
    }
    out.push_back({e.ideal, e.is_maximal, e.is_minimal_prime});
  }
  return out;
}

// Rad(I): intersection of the maximal ideals containing I.
inline Ideal rad_of(const Ideal& i, const IdealLattice& lattice) {
  if (!i.is_proper()) throw ImproperIdeal("Rad is defined for proper ideals");
  if (i.ring() != lattice.ring()) throw RingMismatch("ideal and lattice rings differ");
  Ideal acc = Ideal::whole(i.ring());
  for (const auto& m : lattice.maximals())
    if (i.subset_of(m)) acc = ideal_intersect(acc, m);
  return acc;
}

}  // namespace purespec
