#pragma once

#include <map>
#include <memory>
#include <vector>

#include "classify.hpp"
#include "config.hpp"
#include "lattice.hpp"
#include "pure_spectrum.hpp"
#include "spectra.hpp"

namespace purespec {

// A quotient A/I together with its own lattice and pure spectrum.
struct QuotientData {
  Quotient quotient;
  IdealLattice lattice;
  SpacePtr spp;
};

// Everything the check catalog needs about one ring, computed once. Spaces
// and quotients are built on first use; the object is not thread-safe, so
// corpus workers each own their analyses.
class RingAnalysis {
 public:
  explicit RingAnalysis(const RingPtr& ring, const Limits& limits = {})
      : RingAnalysis(IdealLattice::enumerate(ring, limits), limits) {}

  explicit RingAnalysis(IdealLattice lattice, const Limits& limits = {})
      : limits_(limits), lattice_(std::move(lattice)) {
    ideals_ = lattice_.ideals();
    primes_ = lattice_.primes();
    maximals_ = lattice_.maximals();
    minimals_ = lattice_.minimal_primes();
    pure_ = lattice_.pure_ideals();
    info_ = enumerate_pure(lattice_);
    for (const auto& p : info_) {
      if (p.purely_prime) purely_primes_.push_back(p.ideal);
      if (p.purely_maximal) purely_maximals_.push_back(p.ideal);
      if (p.purely_minimal) purely_minimals_.push_back(p.ideal);
    }
    idempotents_ = purespec::idempotents(r());
    for (const auto& i : ideals_) {
      nu_.push_back(pure_part_fixed_point(i));
      u_.push_back(unit_part(i));
    }
    class_ = classify(lattice_);
  }

  const RingPtr& ring() const noexcept { return lattice_.ring(); }
  const FiniteRing& r() const noexcept { return *lattice_.ring(); }
  const Limits& limits() const noexcept { return limits_; }
  const IdealLattice& lattice() const noexcept { return lattice_; }
  const std::vector<Ideal>& ideals() const noexcept { return ideals_; }
  const std::vector<Ideal>& primes() const noexcept { return primes_; }
  const std::vector<Ideal>& maximals() const noexcept { return maximals_; }
  const std::vector<Ideal>& minimal_primes() const noexcept { return minimals_; }
  const std::vector<Ideal>& pure_ideals() const noexcept { return pure_; }
  const std::vector<PureIdealInfo>& pure_info() const noexcept { return info_; }
  const std::vector<Ideal>& purely_primes() const noexcept { return purely_primes_; }
  const std::vector<Ideal>& purely_maximals() const noexcept { return purely_maximals_; }
  const std::vector<Ideal>& purely_minimals() const noexcept { return purely_minimals_; }
  const std::vector<Element>& idempotents() const noexcept { return idempotents_; }
  const ClassReport& classification() const noexcept { return class_; }

  std::size_t index(const Ideal& i) const {
    auto k = lattice_.index_of(i);
    if (!k) throw InternalInvariant(i.to_string() + " is missing from the ideal lattice");
    return *k;
  }
  const Ideal& nu(const Ideal& i) const { return nu_[index(i)]; }
  const Ideal& u(const Ideal& i) const { return u_[index(i)]; }

  const SpacePtr& space(SpaceKind kind) const {
    auto it = spaces_.find(kind);
    if (it == spaces_.end()) it = spaces_.emplace(kind, build_space_ptr(lattice_, kind)).first;
    return it->second;
  }

  // A/I for a proper ideal I of the lattice.
  const QuotientData& quotient(const Ideal& i) const {
    std::size_t k = index(i);
    auto it = quotients_.find(k);
    if (it == quotients_.end()) {
      auto q = quotient_ring(i, limits_);
      auto lat = IdealLattice::enumerate(q.ring, limits_);
      auto spp = build_space_ptr(lat, SpaceKind::pure);
      it = quotients_
               .emplace(k, std::make_unique<QuotientData>(QuotientData{std::move(q), std::move(lat), spp}))
               .first;
    }
    return *it->second;
  }

 private:
  Limits limits_;
  IdealLattice lattice_;
  std::vector<Ideal> ideals_, primes_, maximals_, minimals_, pure_;
  std::vector<PureIdealInfo> info_;
  std::vector<Ideal> purely_primes_, purely_maximals_, purely_minimals_;
  std::vector<Element> idempotents_;
  std::vector<Ideal> nu_, u_;
  ClassReport class_;
  mutable std::map<SpaceKind, SpacePtr> spaces_;
  mutable std::map<std::size_t, std::unique_ptr<QuotientData>> quotients_;
};

}  // namespace purespec
