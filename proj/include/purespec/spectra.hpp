#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "errors.hpp"
#include "ideal.hpp"
#include "lattice.hpp"
#include "pure_spectrum.hpp"
#include "purity.hpp"
#include "topology.hpp"

namespace purespec {

namespace detail {

inline std::vector<Point> as_points(const std::vector<Ideal>& ideals, PointKind kind) {
  std::vector<Point> out;
  for (const auto& i : ideals) out.push_back({i, kind});
  return out;
}

// For each generator, the set of points whose ideal satisfies `in_open`.
template <class Gen, class Pred>
std::vector<PointSet> subbase_from(const std::vector<Point>& points, const std::vector<Gen>& gens,
                                   Pred in_open) {
  std::vector<PointSet> out;
  for (const auto& g : gens) {
    PointSet s(points.size());
    for (std::size_t k = 0; k < points.size(); ++k)
      if (in_open(g, points[k].ideal)) s.insert(static_cast<Element>(k));
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<Element> all_elements(const FiniteRing& r) {
  std::vector<Element> v(r.order());
  for (Element a = 0; a < r.order(); ++a) v[a] = a;
  return v;
}

}  // namespace detail

// Materialises one of the spectra of the lattice's ring.
inline FinTopSpace build_space(const IdealLattice& lattice, SpaceKind kind) {
  const auto& ring = lattice.ring();
  auto d_of = [](Element f, const Ideal& p) { return !p.contains(f); };
  switch (kind) {
    case SpaceKind::zariski:
    case SpaceKind::zariski_max:
    case SpaceKind::zariski_min: {
      auto ideals = kind == SpaceKind::zariski       ? lattice.primes()
                    : kind == SpaceKind::zariski_max ? lattice.maximals()
                                                     : lattice.minimal_primes();
      auto pts = detail::as_points(ideals, PointKind::prime);
      auto sub = detail::subbase_from(pts, detail::all_elements(*ring), d_of);
      return FinTopSpace::from_subbase(kind, std::move(pts), sub);
    }
    case SpaceKind::flat_min: {
      // Every ideal of a finite ring is finitely generated, so all V(I) ∩ Min
      // are basic opens.
      auto pts = detail::as_points(lattice.minimal_primes(), PointKind::prime);
      auto sub = detail::subbase_from(pts, lattice.ideals(),
                                      [](const Ideal& i, const Ideal& p) { return i.subset_of(p); });
      return FinTopSpace::from_subbase(kind, std::move(pts), sub);
    }
    case SpaceKind::pure: {
      auto info = enumerate_pure(lattice);
      auto pts = detail::as_points(purely_prime_ideals(info), PointKind::purely_prime);
      auto sub = detail::subbase_from(pts, lattice.pure_ideals(),
                                      [](const Ideal& i, const Ideal& p) { return !i.subset_of(p); });
      return FinTopSpace::from_subbase(kind, std::move(pts), sub);
    }
    case SpaceKind::pierce: {
      auto pts = detail::as_points(max_regular_ideals(ring), PointKind::max_regular);
      auto sub = detail::subbase_from(pts, idempotents(*ring), d_of);
      return FinTopSpace::from_subbase(kind, std::move(pts), sub);
    }
    case SpaceKind::subspace:
    case SpaceKind::components:
      break;
  }
  throw InvalidArgument(std::string("cannot build a space of kind ") + to_string(kind) +
                        " from a lattice");
}

inline SpacePtr build_space_ptr(const IdealLattice& lattice, SpaceKind kind) {
  return std::make_shared<const FinTopSpace>(build_space(lattice, kind));
}

// The point map x ↦ fn(ideal of x), looked up among the target's points.
inline SpaceMap map_by_ideal_function(const SpacePtr& source, const SpacePtr& target,
                                      const std::function<Ideal(const Ideal&)>& fn,
                                      const char* what) {
  std::vector<std::size_t> m;
  for (const auto& p : source->points()) {
    Ideal img = fn(p.ideal);
    auto k = target->index_of(img);
    if (!k) {
      throw InternalInvariant(std::string(what) + " sends " + p.ideal.to_string() + " to " +
                              img.to_string() + ", which is not a point of the target");
    }
    m.push_back(*k);
  }
  return {source, target, std::move(m)};
}

enum class CanonicalMapKind {
  nu,         // Spec → Spp, p ↦ ν(p)
  lambda,     // Spp → Sp, P ↦ ideal generated by the idempotents of P
  nu_max,     // Max → Spp, m ↦ ν(m)
  unit_max,   // Max → Spp, m ↦ u(m)
};

inline SpaceMap canonical_map(CanonicalMapKind kind, const SpacePtr& source, const SpacePtr& target) {
  switch (kind) {
    case CanonicalMapKind::nu:
    case CanonicalMapKind::nu_max:
      return map_by_ideal_function(source, target,
                                   [](const Ideal& p) { return pure_part_fixed_point(p); }, "nu");
    case CanonicalMapKind::lambda:
      return map_by_ideal_function(source, target, regular_part, "lambda");
    case CanonicalMapKind::unit_max:
      return map_by_ideal_function(source, target, unit_part, "u");
  }
  throw InvalidArgument("unknown canonical map");
}

inline SpaceMap canonical_map(const IdealLattice& lattice, CanonicalMapKind kind) {
  auto spp = build_space_ptr(lattice, SpaceKind::pure);
  switch (kind) {
    case CanonicalMapKind::nu:
      return canonical_map(kind, build_space_ptr(lattice, SpaceKind::zariski), spp);
    case CanonicalMapKind::nu_max:
    case CanonicalMapKind::unit_max:
      return canonical_map(kind, build_space_ptr(lattice, SpaceKind::zariski_max), spp);
    case CanonicalMapKind::lambda:
      return canonical_map(kind, spp, build_space_ptr(lattice, SpaceKind::pierce));
  }
  throw InvalidArgument("unknown canonical map");
}

// Spp(φ): Spp(target) → Spp(source), P ↦ ν(φ⁻¹(P)). The spaces passed in
// must be the pure spectra of φ's target and source respectively.
inline SpaceMap spp_of_hom(const RingHom& phi, const SpacePtr& spp_target, const SpacePtr& spp_source) {
  if (spp_target->kind() != SpaceKind::pure || spp_source->kind() != SpaceKind::pure)
    throw InvalidArgument("spp_of_hom needs pure spectra");
  if (spp_target->size() && spp_target->point(0).ideal.ring() != phi.target())
    throw RingMismatch("first space is not Spp of the hom's target");
  if (spp_source->size() && spp_source->point(0).ideal.ring() != phi.source())
    throw RingMismatch("second space is not Spp of the hom's source");
  return map_by_ideal_function(
      spp_target, spp_source,
      [&](const Ideal& p) { return pure_part_fixed_point(hom_preimage(phi, p)); }, "Spp(phi)");
}

inline SpaceMap spp_of_hom(const RingHom& phi, const IdealLattice& source_lattice,
                           const IdealLattice& target_lattice) {
  return spp_of_hom(phi, build_space_ptr(target_lattice, SpaceKind::pure),
                    build_space_ptr(source_lattice, SpaceKind::pure));
}

}  // namespace purespec
