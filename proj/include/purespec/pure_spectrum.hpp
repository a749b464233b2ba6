#pragma once

#include <vector>

#include "errors.hpp"
#include "ideal.hpp"
#include "lattice.hpp"
#include "purity.hpp"

namespace purespec {

enum class PurePartMode { fixed_point, oracle };

// ν(I). fixed_point iterates the unit part; oracle sums every pure ideal of
// the lattice that lies in I and needs `lattice`.
inline Ideal pure_part(const Ideal& i, PurePartMode mode = PurePartMode::fixed_point,
                       const IdealLattice* lattice = nullptr) {
  if (mode == PurePartMode::fixed_point) return pure_part_fixed_point(i);
  if (!lattice) throw InvalidArgument("oracle pure part needs the ideal lattice");
  if (lattice->ring() != i.ring()) throw RingMismatch("ideal and lattice rings differ");
  Ideal acc = Ideal::zero(i.ring());
  for (const auto& e : lattice->entries())
    if (e.is_pure && e.ideal.subset_of(i)) acc = ideal_sum(acc, e.ideal);
  return acc;
}

// Supp(I) among `primes`: primes p with Ann(g) ⊆ p for some g in I.
inline std::vector<Ideal> supp(const Ideal& i, const std::vector<Ideal>& primes) {
  std::vector<Ideal> anns;
  i.members().for_each([&](Element g) { anns.push_back(annihilator(i.ring(), g)); });
  std::vector<Ideal> out;
  for (const auto& p : primes) {
    for (const auto& a : anns) {
      if (a.subset_of(p)) {
        out.push_back(p);
        break;
      }
    }
  }
  return out;
}

inline std::vector<Ideal> supp(const Ideal& i, const IdealLattice& lattice) {
  return supp(i, lattice.primes());
}

// ⋃_{f ∈ I} D(f) among `primes`: primes not containing I.
inline std::vector<Ideal> union_of_basic_opens(const Ideal& i, const std::vector<Ideal>& primes) {
  std::vector<Ideal> out;
  for (const auto& p : primes)
    if (!i.subset_of(p)) out.push_back(p);
  return out;
}

struct PureIdealInfo {
  Ideal ideal;
  Element generator;
  bool purely_maximal = false;
  bool purely_prime = false;
  bool purely_minimal = false;
};

// Purely-prime test quantifies over pure pairs only.
inline bool is_purely_prime(const Ideal& p, const std::vector<Ideal>& pure) {
  if (!p.is_proper() || !is_pure(p)) return false;
  for (const auto& i : pure) {
    if (i.subset_of(p)) continue;
    for (const auto& j : pure) {
      if (j.subset_of(p)) continue;
      if (ideal_product(i, j).subset_of(p)) return false;
    }
  }
  return true;
}

// All pure ideals of the lattice in canonical order with their
// purely-maximal / purely-prime / purely-minimal flags.
inline std::vector<PureIdealInfo> enumerate_pure(const IdealLattice& lattice) {
  const auto pure = lattice.pure_ideals();
  std::vector<PureIdealInfo> out;
  for (const auto& i : pure) {
    PureIdealInfo info{i, idempotent_generator(i)};
    if (i.is_proper()) {
      info.purely_maximal = true;
      for (const auto& j : pure)
        if (j.is_proper() && i.proper_subset_of(j)) info.purely_maximal = false;
      info.purely_prime = is_purely_prime(i, pure);
    }
    out.push_back(std::move(info));
  }
  for (auto& info : out) {
    if (!info.purely_prime) continue;
    info.purely_minimal = true;
    for (const auto& other : out)
      if (other.purely_prime && other.ideal.proper_subset_of(info.ideal)) info.purely_minimal = false;
  }
  return out;
}

inline std::vector<Ideal> purely_prime_ideals(const std::vector<PureIdealInfo>& pure) {
  std::vector<Ideal> out;
  for (const auto& p : pure)
    if (p.purely_prime) out.push_back(p.ideal);
  return out;
}

inline std::vector<Ideal> purely_maximal_ideals(const std::vector<PureIdealInfo>& pure) {
  std::vector<Ideal> out;
  for (const auto& p : pure)
    if (p.purely_maximal) out.push_back(p.ideal);
  return out;
}

}  // namespace purespec
