#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"
#include "ideal.hpp"

namespace purespec {

enum class PointKind { prime, purely_prime, max_regular, component };

enum class SpaceKind {
  zariski,       // Spec with opens generated by D(f)
  zariski_max,   // Max with the induced Zariski topology
  zariski_min,   // Min with the induced Zariski topology
  flat_min,      // Min with opens generated by V(I) ∩ Min
  pure,          // Spp with opens U_I
  pierce,        // Sp with opens d(e)
  subspace,
  components,    // π0 of another space
};

inline const char* to_string(SpaceKind k) {
  switch (k) {
    case SpaceKind::zariski: return "zariski";
    case SpaceKind::zariski_max: return "zariski_max";
    case SpaceKind::zariski_min: return "zariski_min";
    case SpaceKind::flat_min: return "flat_min";
    case SpaceKind::pure: return "pure";
    case SpaceKind::pierce: return "pierce";
    case SpaceKind::subspace: return "subspace";
    case SpaceKind::components: return "components";
  }
  return "?";
}

struct Point {
  Ideal ideal;
  PointKind kind;
};

using PointSet = ElementSet;

// A finite topological space with its full family of opens, stored in
// canonical order.
class FinTopSpace {
 public:
  // Topology generated by `subbase`. In a finite space every open is the
  // union of the minimal neighbourhoods U_x (intersection of the subbase
  // members containing x, or the whole space), so the opens are exactly the
  // unions of those.
  static FinTopSpace from_subbase(SpaceKind kind, std::vector<Point> points,
                                  const std::vector<PointSet>& subbase) {
    const std::size_t n = points.size();
    for (const auto& s : subbase)
      if (s.universe() != n) throw InvalidArgument("subbase set has wrong universe");
    std::vector<PointSet> nbhd(n, PointSet::full(n));
    for (const auto& s : subbase)
      s.for_each([&](Element x) { nbhd[x] &= s; });
    std::set<PointSet, CanonicalLess> opens{PointSet(n)};
    std::vector<PointSet> frontier{PointSet(n)};
    while (!frontier.empty()) {
      std::vector<PointSet> next;
      for (const auto& o : frontier) {
        for (Element x = 0; x < n; ++x) {
          if (o.contains(x)) continue;
          auto u = o | nbhd[x];
          if (opens.insert(u).second) next.push_back(std::move(u));
        }
      }
      frontier = std::move(next);
    }
    return FinTopSpace(kind, std::move(points), {opens.begin(), opens.end()});
  }

  // Takes an explicit open family; call validate() to audit it.
  static FinTopSpace from_opens(SpaceKind kind, std::vector<Point> points,
                                std::vector<PointSet> opens) {
    std::sort(opens.begin(), opens.end(), CanonicalLess{});
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    return FinTopSpace(kind, std::move(points), std::move(opens));
  }

  SpaceKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<Point>& points() const noexcept { return points_; }
  const Point& point(std::size_t k) const { return points_.at(k); }
  const std::vector<PointSet>& opens() const noexcept { return opens_; }

  PointSet empty_set() const { return PointSet(size()); }
  PointSet full_set() const { return PointSet::full(size()); }

  bool is_open(const PointSet& s) const {
    return std::binary_search(opens_.begin(), opens_.end(), s, CanonicalLess{});
  }
  bool is_closed(const PointSet& s) const { return is_open(s.complement()); }
  bool is_clopen(const PointSet& s) const { return is_open(s) && is_closed(s); }

  // Smallest closed set containing s.
  PointSet closure(const PointSet& s) const {
    PointSet acc = full_set();
    for (const auto& o : opens_)
      if (!o.intersects(s)) acc &= o.complement();
    return acc;
  }

  // Smallest open set containing x.
  PointSet minimal_neighborhood(std::size_t x) const {
    PointSet acc = full_set();
    for (const auto& o : opens_)
      if (o.contains(static_cast<Element>(x))) acc &= o;
    return acc;
  }

  std::optional<std::size_t> index_of(const Ideal& i) const {
    for (std::size_t k = 0; k < points_.size(); ++k)
      if (points_[k].ideal == i) return k;
    return std::nullopt;
  }

  // Throws InternalInvariant unless the open family is a topology on a
  // duplicate-free point list.
  void validate() const {
    for (std::size_t a = 0; a < points_.size(); ++a)
      for (std::size_t b = a + 1; b < points_.size(); ++b)
        if (points_[a].ideal == points_[b].ideal) throw InternalInvariant("duplicate point");
    if (!is_open(empty_set()) || !is_open(full_set()))
      throw InternalInvariant("opens must contain the empty set and the whole space");
    for (const auto& a : opens_) {
      if (a.universe() != size()) throw InternalInvariant("open set has wrong universe");
      for (const auto& b : opens_) {
        if (!is_open(a | b)) throw InternalInvariant("opens not closed under union");
        if (!is_open(a & b)) throw InternalInvariant("opens not closed under intersection");
      }
    }
  }

  std::string describe_set(const PointSet& s) const {
    std::string out = "{";
    bool first = true;
    s.for_each([&](Element x) {
      out += (first ? "" : ", ") + points_[x].ideal.to_string();
      first = false;
    });
    return out + "}";
  }

 private:
  FinTopSpace(SpaceKind kind, std::vector<Point> points, std::vector<PointSet> opens)
      : kind_(kind), points_(std::move(points)), opens_(std::move(opens)) {}

  SpaceKind kind_;
  std::vector<Point> points_;
  std::vector<PointSet> opens_;
};

using SpacePtr = std::shared_ptr<const FinTopSpace>;

// Subspace on the points in `keep`, in their original order.
inline FinTopSpace subspace(const FinTopSpace& x, const PointSet& keep) {
  std::vector<std::size_t> idx;
  keep.for_each([&](Element k) { idx.push_back(k); });
  std::vector<Point> pts;
  for (auto k : idx) pts.push_back(x.point(k));
  std::vector<PointSet> opens;
  for (const auto& o : x.opens()) {
    PointSet s(idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
      if (o.contains(static_cast<Element>(idx[j]))) s.insert(static_cast<Element>(j));
    opens.push_back(std::move(s));
  }
  return FinTopSpace::from_opens(SpaceKind::subspace, std::move(pts), std::move(opens));
}

// A total map between the point sets of two spaces.
class SpaceMap {
 public:
  SpaceMap(SpacePtr source, SpacePtr target, std::vector<std::size_t> point_map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(point_map)) {
    if (map_.size() != source_->size()) throw InvalidArgument("point map is not total");
    for (auto t : map_)
      if (t >= target_->size()) throw InvalidArgument("point map leaves the target");
  }

  const SpacePtr& source() const noexcept { return source_; }
  const SpacePtr& target() const noexcept { return target_; }
  const std::vector<std::size_t>& point_map() const noexcept { return map_; }
  std::size_t operator()(std::size_t x) const { return map_.at(x); }

  PointSet image(const PointSet& s) const {
    PointSet out(target_->size());
    s.for_each([&](Element x) { out.insert(static_cast<Element>(map_[x])); });
    return out;
  }
  PointSet preimage(const PointSet& t) const {
    PointSet out(source_->size());
    for (std::size_t x = 0; x < map_.size(); ++x)
      if (t.contains(static_cast<Element>(map_[x]))) out.insert(static_cast<Element>(x));
    return out;
  }

 private:
  SpacePtr source_;
  SpacePtr target_;
  std::vector<std::size_t> map_;
};

// g ∘ f.
inline SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
  if (f.target() != g.source()) throw InvalidArgument("cannot compose space maps");
  std::vector<std::size_t> m(f.source()->size());
  for (std::size_t x = 0; x < m.size(); ++x) m[x] = g(f(x));
  return {f.source(), g.target(), std::move(m)};
}

// Matches points of two spaces by ideal equality; nullopt when some point
// of `source` has no counterpart in `target`.
inline std::optional<SpaceMap> map_by_ideal(const SpacePtr& source, const SpacePtr& target) {
  std::vector<std::size_t> m;
  for (const auto& p : source->points()) {
    auto k = target->index_of(p.ideal);
    if (!k) return std::nullopt;
    m.push_back(*k);
  }
  return SpaceMap(source, target, std::move(m));
}

struct MapProperties {
  bool is_continuous = false;
  bool is_injective = false;
  bool is_surjective = false;
  bool is_bijective = false;
  bool is_open = false;
  bool is_closed = false;
  bool is_homeomorphism = false;
};

inline MapProperties compare_spaces(const SpaceMap& m) {
  MapProperties p;
  const auto& src = *m.source();
  const auto& tgt = *m.target();
  p.is_continuous = std::all_of(tgt.opens().begin(), tgt.opens().end(),
                                [&](const auto& o) { return src.is_open(m.preimage(o)); });
  p.is_surjective = m.image(src.full_set()).is_full();
  std::set<std::size_t> distinct(m.point_map().begin(), m.point_map().end());
  p.is_injective = distinct.size() == src.size();
  p.is_bijective = p.is_injective && p.is_surjective;
  p.is_open = std::all_of(src.opens().begin(), src.opens().end(),
                          [&](const auto& o) { return tgt.is_open(m.image(o)); });
  p.is_closed = std::all_of(src.opens().begin(), src.opens().end(), [&](const auto& o) {
    return tgt.is_closed(m.image(o.complement()));
  });
  p.is_homeomorphism = p.is_continuous && p.is_bijective && p.is_open;
  return p;
}

// Same points (as ideals) and the same open family.
inline bool same_topological_space(const SpacePtr& a, const SpacePtr& b) {
  if (a->size() != b->size()) return false;
  auto m = map_by_ideal(a, b);
  if (!m) return false;
  auto props = compare_spaces(*m);
  return props.is_bijective && props.is_continuous && props.is_open;
}

struct TopologyProps {
  std::vector<PointSet> clopens;
  std::vector<PointSet> components;
  bool is_connected = false;
  bool is_hausdorff = false;
  bool is_quasi_compact = true;
  std::shared_ptr<const FinTopSpace> pi0;
};

inline TopologyProps topology_props(const FinTopSpace& x) {
  TopologyProps t;
  for (const auto& o : x.opens())
    if (x.is_closed(o)) t.clopens.push_back(o);

  // Finite spaces are locally connected: x and y share a component iff they
  // are linked by a chain of specialisations (y ∈ U_x or x ∈ U_y).
  const std::size_t n = x.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t a = 0; a < n; ++a) {
    x.minimal_neighborhood(a).for_each([&](Element b) {
      auto ra = find(a), rb = find(b);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    });
  }
  std::vector<PointSet> comps;
  std::vector<std::size_t> comp_of(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t r = find(a);
    std::size_t k = 0;
    while (k < comps.size() && !comps[k].contains(static_cast<Element>(r))) ++k;
    if (k == comps.size()) comps.emplace_back(n);
    comps[k].insert(static_cast<Element>(a));
    comp_of[a] = k;
  }
  t.components = comps;
  t.is_connected = comps.size() <= 1;

  // A finite space is Hausdorff iff it is discrete.
  t.is_hausdorff = true;
  for (std::size_t a = 0; a < n; ++a)
    t.is_hausdorff = t.is_hausdorff && x.is_open(PointSet(n, {static_cast<Element>(a)}));

  // Every open cover of a finite space has a finite subcover.
  t.is_quasi_compact = true;

  // π0 with the quotient topology: a set of components is open iff its
  // union is open.
  std::vector<Point> cpts;
  for (const auto& c : comps) {
    Ideal label = x.point(c.first()).ideal;
    c.for_each([&](Element p) { label = ideal_intersect(label, x.point(p).ideal); });
    cpts.push_back({label, PointKind::component});
  }
  std::vector<PointSet> copens;
  for (const auto& o : x.opens()) {
    PointSet cs(comps.size());
    bool saturated = true;
    o.for_each([&](Element p) { cs.insert(static_cast<Element>(comp_of[p])); });
    cs.for_each([&](Element k) { saturated = saturated && comps[k].is_subset_of(o); });
    if (saturated) copens.push_back(std::move(cs));
  }
  t.pi0 = std::make_shared<const FinTopSpace>(
      FinTopSpace::from_opens(SpaceKind::components, std::move(cpts), std::move(copens)));
  return t;
}

}  // namespace purespec
