#pragma once

#include <string>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"
#include "ring.hpp"

namespace purespec {

// An ideal of a finite ring, stored as its member set.
class Ideal {
 public:
  // Checks the ideal axioms and throws NotAnIdeal on failure.
  Ideal(RingPtr ring, ElementSet members) : ring_(std::move(ring)), members_(std::move(members)) {
    if (!ring_) throw InvalidArgument("null ring");
    if (members_.universe() != ring_->order()) throw NotAnIdeal("member set has wrong universe");
    const auto& r = *ring_;
    if (!members_.contains(r.zero())) throw NotAnIdeal("ideal must contain zero");
    bool ok = true;
    members_.for_each([&](Element a) {
      if (!ok) return;
      if (!members_.contains(r.neg(a))) ok = false;
      members_.for_each([&](Element b) {
        if (ok && !members_.contains(r.add(a, b))) ok = false;
      });
      for (Element x = 0; ok && x < r.order(); ++x)
        if (!members_.contains(r.mul(x, a))) ok = false;
    });
    if (!ok) throw NotAnIdeal("set is not closed under addition or ring multiplication");
  }

  // Skips the axiom check; callers guarantee closure.
  struct Trusted {};
  Ideal(Trusted, RingPtr ring, ElementSet members)
      : ring_(std::move(ring)), members_(std::move(members)) {}

  static Ideal zero(const RingPtr& ring) {
    return {Trusted{}, ring, ElementSet(ring->order(), {ring->zero()})};
  }
  static Ideal whole(const RingPtr& ring) {
    return {Trusted{}, ring, ElementSet::full(ring->order())};
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const FiniteRing& r() const noexcept { return *ring_; }
  const ElementSet& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Element e) const { return members_.contains(e); }
  bool is_proper() const { return !members_.is_full(); }
  bool is_zero() const { return members_.size() == 1; }

  bool subset_of(const Ideal& other) const {
    require_same_ring(other);
    return members_.is_subset_of(other.members_);
  }
  bool proper_subset_of(const Ideal& other) const {
    require_same_ring(other);
    return members_.is_proper_subset_of(other.members_);
  }

  void require_same_ring(const Ideal& other) const {
    if (ring_ != other.ring_) {
      throw RingMismatch("ideals belong to different rings: " + ring_->label() + " vs " +
                         other.ring_->label());
    }
  }

  // "{0,4,8}" in element-index order using the ring's element names.
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    members_.for_each([&](Element e) {
      out += (first ? "" : ",") + ring_->name(e);
      first = false;
    });
    return out + "}";
  }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring_ == b.ring_ && a.members_ == b.members_;
  }

 private:
  RingPtr ring_;
  ElementSet members_;
};

struct IdealCanonicalLess {
  bool operator()(const Ideal& a, const Ideal& b) const {
    return canonical_less(a.members(), b.members());
  }
};

// Closes `seed ∪ {0}` under addition. In a finite ring this is the additive
// subgroup the seed generates.
inline ElementSet additive_closure(const FiniteRing& r, ElementSet seed) {
  seed.insert(r.zero());
  std::vector<Element> frontier = seed.elements();
  const std::vector<Element> gens = frontier;
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element a : frontier) {
      for (Element g : gens) {
        Element s = r.add(a, g);
        if (!seed.contains(s)) {
          seed.insert(s);
          next.push_back(s);
        }
      }
    }
    frontier = std::move(next);
  }
  return seed;
}

inline Ideal principal_ideal(const RingPtr& ring, Element f) {
  ElementSet m(ring->order());
  for (Element a = 0; a < ring->order(); ++a) m.insert(ring->mul(a, f));
  return {Ideal::Trusted{}, ring, std::move(m)};
}

inline Ideal ideal_sum(const Ideal& i, const Ideal& j) {
  i.require_same_ring(j);
  const auto& r = i.r();
  ElementSet m(r.order());
  i.members().for_each([&](Element a) {
    j.members().for_each([&](Element b) { m.insert(r.add(a, b)); });
  });
  return {Ideal::Trusted{}, i.ring(), std::move(m)};
}

inline Ideal ideal_product(const Ideal& i, const Ideal& j) {
  i.require_same_ring(j);
  const auto& r = i.r();
  ElementSet m(r.order());
  i.members().for_each([&](Element a) {
    j.members().for_each([&](Element b) { m.insert(r.mul(a, b)); });
  });
  return {Ideal::Trusted{}, i.ring(), additive_closure(r, std::move(m))};
}

inline Ideal ideal_intersect(const Ideal& i, const Ideal& j) {
  i.require_same_ring(j);
  return {Ideal::Trusted{}, i.ring(), i.members() & j.members()};
}

enum class IdealOp { sum, product, intersect };

inline Ideal ideal_arith(IdealOp op, const Ideal& i, const Ideal& j) {
  switch (op) {
    case IdealOp::sum: return ideal_sum(i, j);
    case IdealOp::product: return ideal_product(i, j);
    case IdealOp::intersect: return ideal_intersect(i, j);
  }
  throw InvalidArgument("unknown ideal operation");
}

// Smallest ideal containing `gens`: the sum of the principal ideals.
inline Ideal ideal_generate(const RingPtr& ring, const std::vector<Element>& gens) {
  Ideal acc = Ideal::zero(ring);
  for (Element g : gens) {
    if (g >= ring->order()) throw InvalidArgument("generator outside the ring");
    if (!acc.contains(g)) acc = ideal_sum(acc, principal_ideal(ring, g));
  }
  return acc;
}

inline Ideal ideal_generate(const RingPtr& ring, const ElementSet& gens) {
  return ideal_generate(ring, gens.elements());
}

inline bool ideals_coprime(const Ideal& a, const Ideal& b) {
  return ideal_sum(a, b).contains(a.r().one());
}

inline Ideal annihilator(const RingPtr& ring, Element f) {
  ElementSet m(ring->order());
  for (Element g = 0; g < ring->order(); ++g)
    if (ring->mul(f, g) == ring->zero()) m.insert(g);
  return {Ideal::Trusted{}, ring, std::move(m)};
}

// {f : f^k ∈ I for some k >= 1}. Powers of f repeat within order() steps,
// and once a power lands in I every later one does too.
inline Ideal radical(const Ideal& i) {
  const auto& r = i.r();
  ElementSet m(r.order());
  for (Element f = 0; f < r.order(); ++f) {
    Element p = f;
    for (std::size_t k = 0; k <= r.order(); ++k) {
      if (i.contains(p)) {
        m.insert(f);
        break;
      }
      p = r.mul(p, f);
    }
  }
  return {Ideal::Trusted{}, i.ring(), std::move(m)};
}

// Exhaustive primality: proper, and a,b ∉ P implies ab ∉ P.
inline bool is_prime_ideal(const Ideal& p) {
  if (!p.is_proper()) return false;
  const auto& r = p.r();
  const ElementSet outside = p.members().complement();
  bool ok = true;
  outside.for_each([&](Element a) {
    if (!ok) return;
    outside.for_each([&](Element b) {
      if (ok && p.contains(r.mul(a, b))) ok = false;
    });
  });
  return ok;
}

// A unital ring homomorphism, verified over all pairs at construction.
class RingHom {
 public:
  RingHom(RingPtr source, RingPtr target, std::vector<Element> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    const auto& s = *source_;
    const auto& t = *target_;
    if (map_.size() != s.order()) throw NotAHomomorphism("map is not total on the source");
    for (Element v : map_)
      if (v >= t.order()) throw NotAHomomorphism("image outside the target");
    if (map_[s.zero()] != t.zero()) throw NotAHomomorphism("zero is not preserved");
    if (map_[s.one()] != t.one()) throw NotAHomomorphism("one is not preserved");
    for (Element a = 0; a < s.order(); ++a) {
      for (Element b = 0; b < s.order(); ++b) {
        if (map_[s.add(a, b)] != t.add(map_[a], map_[b]))
          throw NotAHomomorphism("addition not preserved at (" + s.name(a) + ", " + s.name(b) + ")");
        if (map_[s.mul(a, b)] != t.mul(map_[a], map_[b]))
          throw NotAHomomorphism("multiplication not preserved at (" + s.name(a) + ", " +
                                 s.name(b) + ")");
      }
    }
  }

  static RingHom identity(const RingPtr& r) {
    std::vector<Element> m(r->order());
    for (Element a = 0; a < r->order(); ++a) m[a] = a;
    return {r, r, std::move(m)};
  }

  const RingPtr& source() const noexcept { return source_; }
  const RingPtr& target() const noexcept { return target_; }
  const std::vector<Element>& map() const noexcept { return map_; }
  Element operator()(Element a) const { return map_.at(a); }

 private:
  RingPtr source_;
  RingPtr target_;
  std::vector<Element> map_;
};

// outer ∘ inner.
inline RingHom compose(const RingHom& outer, const RingHom& inner) {
  if (inner.target() != outer.source()) throw RingMismatch("cannot compose: rings do not match");
  std::vector<Element> m(inner.source()->order());
  for (Element a = 0; a < m.size(); ++a) m[a] = outer(inner(a));
  return {inner.source(), outer.target(), std::move(m)};
}

inline Ideal hom_preimage(const RingHom& phi, const Ideal& j) {
  if (j.ring() != phi.target()) throw RingMismatch("ideal does not live in the hom's target");
  ElementSet m(phi.source()->order());
  for (Element a = 0; a < m.universe(); ++a)
    if (j.contains(phi(a))) m.insert(a);
  return {Ideal::Trusted{}, phi.source(), std::move(m)};
}

inline Ideal hom_kernel(const RingHom& phi) { return hom_preimage(phi, Ideal::zero(phi.target())); }

// The extension IB: the ideal of the target generated by φ(I).
inline Ideal hom_extend(const RingHom& phi, const Ideal& i) {
  if (i.ring() != phi.source()) throw RingMismatch("ideal does not live in the hom's source");
  ElementSet img(phi.target()->order());
  i.members().for_each([&](Element a) { img.insert(phi(a)); });
  return ideal_generate(phi.target(), img);
}

struct Quotient {
  RingPtr ring;
  RingHom projection;
  std::vector<Element> representatives;  // smallest source element of each coset
};

inline Quotient quotient_ring(const Ideal& i, const Limits& limits = {}) {
  if (!i.is_proper()) throw ImproperIdeal("cannot form the quotient by the whole ring");
  const auto& r = i.r();
  const auto n = r.order();
  std::vector<Element> coset_of(n, static_cast<Element>(n));
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (coset_of[x] != n) continue;
    auto id = static_cast<Element>(reps.size());
    reps.push_back(x);
    i.members().for_each([&](Element m) { coset_of[r.add(x, m)] = id; });
  }
  const std::size_t q = reps.size();
  std::vector<Element> add(q * q), mul(q * q);
  std::vector<std::string> names(q);
  for (std::size_t a = 0; a < q; ++a) {
    names[a] = "[" + r.name(reps[a]) + "]";
    for (std::size_t b = 0; b < q; ++b) {
      add[a * q + b] = coset_of[r.add(reps[a], reps[b])];
      mul[a * q + b] = coset_of[r.mul(reps[a], reps[b])];
    }
  }
  Construction c;
  c.kind = Construction::Kind::quotient;
  c.parts = {i.ring()};
  c.ideal = i.members().elements();
  auto qring = FiniteRing::from_tables(q, std::move(add), std::move(mul), coset_of[r.zero()],
                                       coset_of[r.one()], "(" + r.label() + ")/" + i.to_string(),
                                       std::move(c), std::move(names), limits);
  RingHom proj(i.ring(), qring, coset_of);
  return {qring, std::move(proj), std::move(reps)};
}

// Given surjections π_I: A → A/I and π_J: A → A/J with I ⊆ J, the induced
// map A/I → A/J.
inline RingHom induced_hom(const Quotient& from, const Quotient& to) {
  if (from.projection.source() != to.projection.source())
    throw RingMismatch("quotients of different rings");
  std::vector<Element> m(from.ring->order());
  for (Element q = 0; q < m.size(); ++q) m[q] = to.projection(from.representatives[q]);
  return {from.ring, to.ring, std::move(m)};
}

}  // namespace purespec
