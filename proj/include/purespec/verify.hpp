#pragma once

#include <array>
#include <chrono>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "symz.hpp"

namespace purespec {

enum class CheckStatus { pass, fail, skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

struct CheckResult {
  std::string check_id;
  std::string ring_label;
  CheckStatus status = CheckStatus::skipped;
  std::string details;  // witness, counterexample, or skip reason
  std::chrono::nanoseconds elapsed{0};
};

struct CheckInfo {
  const char* id;
  const char* statement;
};

// Outcome of one item of an equivalence battery.
struct ItemResult {
  bool holds = true;
  std::string witness;  // first counterexample when !holds
};
using ItemTable = std::array<ItemResult, 8>;

namespace detail {

struct Outcome {
  CheckStatus status;
  std::string details;
};

inline Outcome passed(std::string d) { return {CheckStatus::pass, std::move(d)}; }
inline Outcome failed(std::string d) { return {CheckStatus::fail, std::move(d)}; }
inline Outcome skipped(std::string d) { return {CheckStatus::skipped, std::move(d)}; }

using Witness = std::optional<std::string>;

inline std::string set_str(const std::vector<Ideal>& v) {
  std::string out = "{";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].to_string();
  return out + "}";
}

inline std::string count(std::size_t n, const char* noun) {
  return std::to_string(n) + " " + noun;
}

inline std::set<ElementSet, CanonicalLess> member_set(const std::vector<Ideal>& v) {
  std::set<ElementSet, CanonicalLess> out;
  for (const auto& i : v) out.insert(i.members());
  return out;
}

inline bool is_whole(const Ideal& i) { return i.members().is_full(); }

inline Ideal sum_of(const RingPtr& r, const std::vector<Ideal>& family) {
  Ideal acc = Ideal::zero(r);
  for (const auto& i : family) acc = ideal_sum(acc, i);
  return acc;
}

// Rad(I): intersection of the maximal ideals containing I. Rad(A) = A
// (empty intersection).
inline Ideal rad_conv(const RingAnalysis& a, const Ideal& i) {
  Ideal acc = Ideal::whole(a.ring());
  for (const auto& m : a.maximals())
    if (i.subset_of(m)) acc = ideal_intersect(acc, m);
  return acc;
}

inline std::vector<bool> max_in_v(const RingAnalysis& a, const Ideal& i) {
  std::vector<bool> out;
  for (const auto& m : a.maximals()) out.push_back(i.subset_of(m));
  return out;
}

// U_I on a pure spectrum, V_p(I) its complement.
inline PointSet u_open(const FinTopSpace& spp, const Ideal& i) {
  PointSet s(spp.size());
  for (std::size_t k = 0; k < spp.size(); ++k)
    if (!i.subset_of(spp.point(k).ideal)) s.insert(static_cast<Element>(k));
  return s;
}
inline PointSet v_closed(const FinTopSpace& spp, const Ideal& i) { return u_open(spp, i).complement(); }

// Families over which "arbitrary family" quantifiers are evaluated: every
// pair of ideals, and for each ideal I the family (Af)_{f∈I}.
struct Families {
  std::vector<std::vector<Ideal>> list;
  std::size_t pairs = 0;
  std::size_t principal = 0;

  std::string bound() const {
    return "families: " + count(pairs, "pairs") + " + " + count(principal, "principal families");
  }
};

inline Families bounded_families(const RingAnalysis& a) {
  Families f;
  const auto& is = a.ideals();
  for (std::size_t x = 0; x < is.size(); ++x)
    for (std::size_t y = x; y < is.size(); ++y) {
      f.list.push_back({is[x], is[y]});
      ++f.pairs;
    }
  for (const auto& i : is) {
    std::set<ElementSet, CanonicalLess> seen;
    std::vector<Ideal> fam;
    i.members().for_each([&](Element e) {
      auto p = principal_ideal(a.ring(), e);
      if (seen.insert(p.members()).second) fam.push_back(std::move(p));
    });
    f.list.push_back(std::move(fam));
    ++f.principal;
  }
  return f;
}

inline std::string family_str(const std::vector<Ideal>& fam) { return set_str(fam); }

// Max(A) → Spp(A), m ↦ part(m); nullopt witness means a homeomorphism.
inline Witness max_to_spp_homeomorphism(const RingAnalysis& a,
                                        const std::function<const Ideal&(const Ideal&)>& part,
                                        const char* name) {
  const auto& mx = a.space(SpaceKind::zariski_max);
  const auto& spp = a.space(SpaceKind::pure);
  std::vector<std::size_t> m;
  for (const auto& p : mx->points()) {
    auto k = spp->index_of(part(p.ideal));
    if (!k) {
      return std::string(name) + "(" + p.ideal.to_string() + ") = " + part(p.ideal).to_string() +
             " is not purely-prime";
    }
    m.push_back(*k);
  }
  auto props = compare_spaces(SpaceMap(mx, spp, std::move(m)));
  if (!props.is_homeomorphism) {
    return std::string("m -> ") + name + "(m) is not a homeomorphism (continuous=" +
           (props.is_continuous ? "yes" : "no") + ", bijective=" + (props.is_bijective ? "yes" : "no") +
           ", open=" + (props.is_open ? "yes" : "no") + ")";
  }
  return std::nullopt;
}

inline ItemResult item(const Witness& w) { return w ? ItemResult{false, *w} : ItemResult{}; }

inline std::string battery_details(const ItemTable& t, const Families& fam) {
  static const char* roman[] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii"};
  bool all = true, none = true;
  for (const auto& r : t) {
    all = all && r.holds;
    none = none && !r.holds;
  }
  std::string d;
  if (all) {
    d = "items i-viii all hold";
  } else if (none) {
    d = "items i-viii all fail";
  } else {
    d = "items disagree:";
    for (std::size_t k = 0; k < 8; ++k) d += std::string(" ") + roman[k] + "=" + (t[k].holds ? "T" : "F");
  }
  for (std::size_t k = 0; k < 8; ++k)
    if (!t[k].holds) d += std::string("; (") + roman[k] + ") " + t[k].witness;
  return d + " (" + fam.bound() + ")";
}

inline bool battery_agrees(const ItemTable& t) {
  for (const auto& r : t)
    if (r.holds != t[0].holds) return false;
  return true;
}

inline Witness gelfand_item(const RingAnalysis& a) {
  if (a.classification().is_gelfand) return std::nullopt;
  for (const auto& w : a.classification().witnesses)
    if (w.rfind("not Gelfand", 0) == 0) return w;
  return std::string("not Gelfand");
}

// ν or u: the item battery shared by both characterizations, keyed by the
// part function.
struct PartItems {
  Witness coprime;       // I + J = A ⇒ part(I) + part(J) = A
  Witness family_sum;    // part(ΣI_k) = Σpart(I_k)
  Witness rad;           // Rad(I) = Rad(part(I))
  Witness max_sum;       // m ≠ m' ⇒ part(m) + part(m') = A
  Witness contained;     // part(I) ⊆ m ⇒ I ⊆ m
  Witness max_v;         // Max ∩ V(I) = Max ∩ V(part(I))
  Witness homeo;         // m ↦ part(m) homeomorphism
};

inline PartItems part_items(const RingAnalysis& a, const Families& fam,
                            const std::function<const Ideal&(const Ideal&)>& part, const char* name) {
  PartItems out;
  const std::string n(name);
  for (const auto& i : a.ideals()) {
    for (const auto& j : a.ideals()) {
      if (out.coprime) break;
      if (is_whole(ideal_sum(i, j)) && !is_whole(ideal_sum(part(i), part(j))))
        out.coprime = i.to_string() + " + " + j.to_string() + " = A but " + n + "(I) + " + n +
                      "(J) = " + ideal_sum(part(i), part(j)).to_string();
    }
  }
  for (const auto& f : fam.list) {
    Ideal s = sum_of(a.ring(), f);
    std::vector<Ideal> parts;
    for (const auto& i : f) parts.push_back(part(i));
    Ideal rhs = sum_of(a.ring(), parts);
    if (part(s) != rhs) {
      out.family_sum = n + "(sum of " + family_str(f) + ") = " + part(s).to_string() + " but sum of " + n +
                       " = " + rhs.to_string();
      break;
    }
  }
  for (const auto& i : a.ideals()) {
    if (!out.rad && rad_conv(a, i) != rad_conv(a, part(i)))
      out.rad = "Rad(" + i.to_string() + ") = " + rad_conv(a, i).to_string() + " but Rad(" + n + ") = " +
                rad_conv(a, part(i)).to_string();
    if (!out.max_v && max_in_v(a, i) != max_in_v(a, part(i)))
      out.max_v = "Max meets V(" + i.to_string() + ") and V(" + part(i).to_string() + ") differently";
    for (const auto& m : a.maximals()) {
      if (out.contained) break;
      if (part(i).subset_of(m) && !i.subset_of(m))
        out.contained = n + "(" + i.to_string() + ") = " + part(i).to_string() + " lies in " + m.to_string() +
                        " but the ideal does not";
    }
  }
  const auto& mx = a.maximals();
  for (std::size_t x = 0; x < mx.size() && !out.max_sum; ++x)
    for (std::size_t y = x + 1; y < mx.size() && !out.max_sum; ++y)
      if (!is_whole(ideal_sum(part(mx[x]), part(mx[y]))))
        out.max_sum = n + "(" + mx[x].to_string() + ") + " + n + "(" + mx[y].to_string() + ") = " +
                      ideal_sum(part(mx[x]), part(mx[y])).to_string();
  out.homeo = max_to_spp_homeomorphism(a, part, name);
  return out;
}

}  // namespace detail

// Pure-part characterization of Gelfand rings, items (i)-(viii) in order.
inline ItemTable pure_part_items(const RingAnalysis& a, const detail::Families& fam) {
  auto p = detail::part_items(a, fam, [&](const Ideal& i) -> const Ideal& { return a.nu(i); }, "nu");
  return {detail::item(detail::gelfand_item(a)), detail::item(p.coprime), detail::item(p.family_sum),
          detail::item(p.rad),                   detail::item(p.max_sum), detail::item(p.contained),
          detail::item(p.max_v),                 detail::item(p.homeo)};
}

// Unit-part characterization of Gelfand rings, items (i)-(viii) in order.
inline ItemTable unit_part_items(const RingAnalysis& a, const detail::Families& fam) {
  auto p = detail::part_items(a, fam, [&](const Ideal& i) -> const Ideal& { return a.u(i); }, "u");
  return {detail::item(detail::gelfand_item(a)), detail::item(p.contained), detail::item(p.max_sum),
          detail::item(p.coprime),               detail::item(p.family_sum), detail::item(p.max_v),
          detail::item(p.rad),                   detail::item(p.homeo)};
}

inline ItemTable pure_part_items(const RingAnalysis& a) { return pure_part_items(a, detail::bounded_families(a)); }
inline ItemTable unit_part_items(const RingAnalysis& a) { return unit_part_items(a, detail::bounded_families(a)); }

// Spp(Z/m) predicted from the factorization of m: one point p^c Z/m per
// prime power exactly dividing m.
inline std::vector<Ideal> predicted_spp_zmod(const RingPtr& ring) {
  const auto m = ring->construction().modulus;
  std::vector<std::uint64_t> powers;
  std::uint64_t rest = m;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    std::uint64_t q = 1;
    while (rest % p == 0) {
      rest /= p;
      q *= p;
    }
    powers.push_back(q);
  }
  if (rest > 1) powers.push_back(rest);
  std::vector<Ideal> out;
  for (auto q : powers) {
    ElementSet s(m);
    for (std::uint64_t k = 0; k < m; k += q) s.insert(static_cast<Element>(k));
    out.emplace_back(ring, std::move(s));
  }
  std::sort(out.begin(), out.end(), IdealCanonicalLess{});
  return out;
}

namespace detail {

using CheckFn = std::function<Outcome(const RingAnalysis&)>;

inline const char* kGelfandCaveat =
    "every finite commutative ring is Gelfand, so this sweep cross-checks the implementation and "
    "cannot refute the conjecture";

// Homomorphisms out of A used by the functoriality check: projections onto
// every proper quotient and onto each factor of a product construction.
struct HomCase {
  RingHom phi;
  SpacePtr spp_target;
  std::string name;
};

inline std::vector<HomCase> hom_cases(const RingAnalysis& a) {
  std::vector<HomCase> out;
  const auto& id = a.space(SpaceKind::pure);
  out.push_back({RingHom::identity(a.ring()), id, "identity"});
  for (const auto& i : a.ideals()) {
    if (!i.is_proper()) continue;
    const auto& q = a.quotient(i);
    out.push_back({q.quotient.projection, q.spp, "A -> A/" + i.to_string()});
  }
  const auto& c = a.r().construction();
  if (c.kind == Construction::Kind::product) {
    std::size_t stride = a.r().order();
    for (const auto& part : c.parts) {
      stride /= part->order();
      std::vector<Element> m(a.r().order());
      for (Element e = 0; e < m.size(); ++e) m[e] = static_cast<Element>((e / stride) % part->order());
      auto lat = IdealLattice::enumerate(part, a.limits());
      out.push_back({RingHom(a.ring(), part, std::move(m)), build_space_ptr(lat, SpaceKind::pure),
                     "projection onto " + part->label()});
    }
  }
  return out;
}

inline Outcome check_L2_1(const RingAnalysis& a) {
  const auto& pure = a.pure_ideals();
  for (const auto& i : pure)
    for (const auto& j : pure) {
      if (!is_pure(ideal_sum(i, j)))
        return failed(i.to_string() + " + " + j.to_string() + " = " + ideal_sum(i, j).to_string() + " is not pure");
      if (!is_pure(ideal_intersect(i, j)))
        return failed(i.to_string() + " meet " + j.to_string() + " is not pure");
    }
  if (!is_pure(sum_of(a.ring(), pure))) return failed("sum of all pure ideals is not pure");
  return passed(count(pure.size(), "pure ideals") + "; all pairwise sums and intersections pure; sum of all pure");
}

inline Outcome check_L2_4(const RingAnalysis& a) {
  for (const auto& p : a.pure_info())
    if (p.purely_maximal && !p.purely_prime) return failed(p.ideal.to_string() + " is purely-maximal, not purely-prime");
  return passed(count(a.purely_maximals().size(), "purely-maximal ideals") + ", all purely-prime");
}

inline Outcome check_P2_6(const RingAnalysis& a) {
  const auto& spp = a.space(SpaceKind::pure);
  // Cover by the basic opens U_I; pick one member per point.
  std::set<ElementSet, CanonicalLess> chosen;
  PointSet covered = spp->empty_set();
  for (std::size_t k = 0; k < spp->size(); ++k) {
    if (covered.contains(static_cast<Element>(k))) continue;
    for (const auto& i : a.pure_ideals()) {
      auto u = u_open(*spp, i);
      if (u.contains(static_cast<Element>(k))) {
        chosen.insert(i.members());
        covered |= u;
        break;
      }
    }
  }
  if (!covered.is_full()) return failed("the basic opens U_I do not cover Spp");
  if (!topology_props(*spp).is_quasi_compact) return failed("Spp reported not quasi-compact");
  return passed("finite space with " + count(spp->size(), "points") + "; basic cover reduced to " +
                count(chosen.size(), "members"));
}

inline Outcome check_T2_7(const RingAnalysis& a) {
  const auto& spp = a.space(SpaceKind::pure);
  auto cases = hom_cases(a);
  for (const auto& h : cases) {
    for (const auto& i : a.pure_ideals()) {
      auto ib = hom_extend(h.phi, i);
      if (!is_pure(ib)) return failed(h.name + ": extension of " + i.to_string() + " is " + ib.to_string() + ", not pure");
    }
    try {
      auto m = spp_of_hom(h.phi, h.spp_target, spp);
      if (!compare_spaces(m).is_continuous) return failed("Spp(" + h.name + ") is not continuous");
    } catch (const InternalInvariant& e) {
      return failed("Spp(" + h.name + "): " + e.what());
    }
  }
  std::size_t laws = 0;
  for (const auto& i : a.ideals()) {
    if (!i.is_proper()) continue;
    for (const auto& j : a.ideals()) {
      if (!j.is_proper() || i == j || !i.subset_of(j)) continue;
      const auto& qi = a.quotient(i);
      const auto& qj = a.quotient(j);
      auto psi = induced_hom(qi.quotient, qj.quotient);
      auto direct = compose(psi, qi.quotient.projection);
      if (direct.map() != qj.quotient.projection.map())
        return failed("A/" + i.to_string() + " -> A/" + j.to_string() + " does not factor the projection");
      auto lhs = spp_of_hom(direct, qj.spp, spp);
      auto rhs = compose(spp_of_hom(qi.quotient.projection, qi.spp, spp), spp_of_hom(psi, qj.spp, qi.spp));
      if (lhs.point_map() != rhs.point_map())
        return failed("composition law fails for " + i.to_string() + " in " + j.to_string());
      ++laws;
    }
  }
  return passed(count(cases.size(), "homs") + " checked for pure extensions and continuity; " +
                count(laws, "composition laws"));
}

inline Outcome check_L2_8(const RingAnalysis& a) {
  std::size_t eq = 0;
  for (const auto& i : a.ideals()) {
    auto s = member_set(supp(i, a.primes()));
    auto d = member_set(union_of_basic_opens(i, a.primes()));
    if (!std::includes(s.begin(), s.end(), d.begin(), d.end(), CanonicalLess{}))
      return failed("union of D(f) over " + i.to_string() + " is not inside Supp");
    bool equal = s == d;
    eq += equal;
    if (equal != is_pure(i))
      return failed(i.to_string() + ": Supp equality is " + (equal ? "true" : "false") + " but purity is " +
                    (is_pure(i) ? "true" : "false"));
  }
  return passed(count(a.ideals().size(), "ideals") + "; inclusion everywhere, equality exactly on the " +
                count(eq, "pure ideals"));
}

inline Outcome check_L2_9(const RingAnalysis& a) {
  const auto& spp = *a.space(SpaceKind::pure);
  const auto& pure = a.pure_ideals();
  if (!u_open(spp, Ideal::whole(a.ring())).is_full()) return failed("U_A is not all of Spp");
  for (const auto& i : pure)
    for (const auto& j : pure) {
      auto ui = u_open(spp, i), uj = u_open(spp, j);
      if (ui.is_subset_of(uj) != i.subset_of(j))
        return failed("U order disagrees with inclusion for " + i.to_string() + ", " + j.to_string());
      if ((ui & uj) != u_open(spp, ideal_product(i, j)))
        return failed("U_I meet U_J differs from U_IJ for " + i.to_string() + ", " + j.to_string());
    }
  return passed(count(pure.size() * pure.size(), "pure pairs") + " checked");
}

inline Outcome check_L3_1(const RingAnalysis& a) {
  const auto& spp = *a.space(SpaceKind::pure);
  for (const auto& p : a.primes()) {
    const auto& nu = a.nu(p);
    if (!spp.index_of(nu)) return failed("nu(" + p.to_string() + ") = " + nu.to_string() + " is not purely-prime");
    auto k = ker_pi(p);
    if (pure_part_fixed_point(k) != nu)
      return failed("nu(" + p.to_string() + ") differs from nu(Ker pi) = " + pure_part_fixed_point(k).to_string());
  }
  return passed(count(a.primes().size(), "primes") + "; nu(p) purely-prime and equal to nu(Ker pi_p)");
}

inline Outcome check_C3_2(const RingAnalysis& a) {
  std::size_t pairs = 0;
  for (const auto& p : a.primes())
    for (const auto& q : a.primes()) {
      if (!p.proper_subset_of(q)) continue;
      ++pairs;
      if (a.nu(p) != a.nu(q)) return failed("nu(" + p.to_string() + ") != nu(" + q.to_string() + ")");
    }
  if (pairs == 0) return skipped("vacuous: no pair of primes p strictly inside q");
  return passed(count(pairs, "prime chains") + " checked");
}

inline Outcome check_L3_6(const RingAnalysis& a) {
  std::size_t met = 0;
  std::string excluded;
  for (const auto& i : a.ideals()) {
    auto rad = radical(i);
    if (is_pure(rad)) {
      ++met;
      if (i != rad) return failed("radical of " + i.to_string() + " is pure but differs: " + rad.to_string());
    } else if (excluded.empty()) {
      excluded = "rad " + i.to_string() + " = " + rad.to_string() + " is not pure";
    }
  }
  std::string d = "hypothesis met by " + std::to_string(met) + " of " + count(a.ideals().size(), "ideals");
  if (!excluded.empty()) d += "; excluded: " + excluded;
  return passed(d);
}

inline Outcome check_L3_7(const RingAnalysis& a) {
  if (!a.classification().is_reduced) return skipped("hypothesis not met: ring is not reduced");
  for (const auto& i : a.pure_ideals())
    if (radical(i) != i) return failed("pure " + i.to_string() + " has radical " + radical(i).to_string());
  return passed(count(a.pure_ideals().size(), "pure ideals") + ", all radical");
}

inline Outcome check_T3_8(const RingAnalysis& a) {
  if (!a.classification().is_reduced) return skipped("hypothesis not met: ring is not reduced");
  for (const auto& i : a.pure_ideals()) {
    auto s = member_set(supp(i, a.primes()));
    ElementSet formula(a.r().order());
    for (Element f = 0; f < a.r().order(); ++f) {
      auto d = member_set(basic_open(a.primes(), f));
      if (std::includes(s.begin(), s.end(), d.begin(), d.end(), CanonicalLess{})) formula.insert(f);
    }
    if (formula != i.members())
      return failed("{f : D(f) in Supp(" + i.to_string() + ")} = " + Ideal(a.ring(), formula).to_string());
  }
  return passed(count(a.pure_ideals().size(), "pure ideals") + " recovered from their supports");
}

inline Outcome check_P3_9(const RingAnalysis& a) {
  auto m = canonical_map(CanonicalMapKind::nu, a.space(SpaceKind::zariski), a.space(SpaceKind::pure));
  auto p = compare_spaces(m);
  if (!p.is_continuous) return failed("nu: Spec -> Spp is not continuous");
  // Surjectivity is recorded, not asserted.
  return passed("nu: Spec (" + count(m.source()->size(), "points") + ") -> Spp (" +
                count(m.target()->size(), "points") + ") continuous; surjective " +
                (p.is_surjective ? "yes" : "no"));
}

inline Outcome check_T3_10(const RingAnalysis& a) {
  const auto& spp = *a.space(SpaceKind::pure);
  auto clopens = topology_props(spp).clopens;
  std::set<ElementSet, CanonicalLess> images;
  for (Element e : a.idempotents()) {
    auto u = u_open(spp, principal_ideal(a.ring(), e));
    if (!spp.is_clopen(u)) return failed("U_" + a.r().name(e) + " is not clopen");
    if (!images.insert(u).second) return failed("two idempotents share U_" + a.r().name(e));
  }
  if (images.size() != clopens.size())
    return failed(count(a.idempotents().size(), "idempotents") + " but " + count(clopens.size(), "clopens"));
  return passed(count(a.idempotents().size(), "idempotents") + " <-> " + count(clopens.size(), "clopens"));
}

inline Outcome check_C3_11(const RingAnalysis& a) {
  bool connected = topology_props(*a.space(SpaceKind::pure)).is_connected;
  bool trivial = a.idempotents().size() == 2;
  if (connected != trivial)
    return failed(std::string("Spp ") + (connected ? "connected" : "disconnected") + " with " +
                  count(a.idempotents().size(), "idempotents"));
  return passed(std::string("Spp ") + (connected ? "connected" : "disconnected") + ", " +
                count(a.idempotents().size(), "idempotents"));
}

inline Outcome check_P3_12(const RingAnalysis& a) {
  auto m = canonical_map(CanonicalMapKind::lambda, a.space(SpaceKind::pure), a.space(SpaceKind::pierce));
  auto p = compare_spaces(m);
  if (!p.is_continuous) return failed("lambda is not continuous");
  if (!p.is_surjective) return failed("lambda misses a Pierce point");
  return passed("lambda: Spp (" + count(m.source()->size(), "points") + ") -> Sp (" +
                count(m.target()->size(), "points") + ") continuous and surjective");
}

inline Outcome check_L3_13(const RingAnalysis& a) {
  std::size_t n = 0;
  for (const auto& i : a.pure_ideals()) {
    if (!i.is_proper()) continue;
    ++n;
    const auto& q = a.quotient(i);
    std::vector<Ideal> images, spp_images;
    for (const auto& j : a.pure_ideals())
      if (i.subset_of(j)) images.push_back(hom_extend(q.quotient.projection, j));
    for (const auto& p : a.purely_primes())
      if (i.subset_of(p)) spp_images.push_back(hom_extend(q.quotient.projection, p));
    if (member_set(images) != member_set(q.lattice.pure_ideals()))
      return failed("pure ideals of A/" + i.to_string() + " are not the images J/I");
    std::vector<Ideal> qspp;
    for (const auto& pt : q.spp->points()) qspp.push_back(pt.ideal);
    if (member_set(spp_images) != member_set(qspp))
      return failed("Spp(A/" + i.to_string() + ") is not {P/I : P in V_p(I)}");
  }
  return passed(count(n, "proper pure ideals") + "; quotient pure ideals and Spp match");
}

inline Outcome check_C3_14(const RingAnalysis& a) {
  const auto& spp = a.space(SpaceKind::pure);
  std::size_t n = 0;
  for (const auto& i : a.pure_ideals()) {
    if (!i.is_proper()) {
      if (!v_closed(*spp, i).empty()) return failed("V_p(A) is not empty");
      continue;  // A/A is the zero ring: both sides empty
    }
    ++n;
    const auto& q = a.quotient(i);
    auto fn = [&](const Ideal& p) { return pure_part_fixed_point(hom_preimage(q.quotient.projection, p)); };
    auto m = map_by_ideal_function(q.spp, spp, fn, "Spp(pi)");
    PointSet v = v_closed(*spp, i);
    if (m.image(m.source()->full_set()) != v) return failed("image of Spp(A/" + i.to_string() + ") is not V_p(I)");
    auto sub = std::make_shared<const FinTopSpace>(subspace(*spp, v));
    auto onto = map_by_ideal_function(q.spp, sub, fn, "Spp(pi)");
    if (!compare_spaces(onto).is_homeomorphism)
      return failed("Spp(A/" + i.to_string() + ") -> V_p(I) is not a homeomorphism");
  }
  return passed(count(n, "proper pure ideals") + ": Spp(A/I) homeomorphic to V_p(I); I = A gives empty on both sides");
}

inline Outcome check_T3_16(const RingAnalysis& a) {
  const auto& spp = *a.space(SpaceKind::pure);
  const auto& pierce = a.space(SpaceKind::pierce);
  auto props = topology_props(spp);
  std::set<ElementSet, CanonicalLess> comps(props.components.begin(), props.components.end());
  std::set<ElementSet, CanonicalLess> vps;
  for (const auto& m : pierce->points()) vps.insert(v_closed(spp, m.ideal));
  if (comps != vps) return failed("components of Spp are not the sets V_p(M)");
  auto m = map_by_ideal(props.pi0, pierce);
  if (!m || !compare_spaces(*m).is_homeomorphism) return failed("pi0(Spp) is not homeomorphic to Sp");
  return passed(count(comps.size(), "components") + " = V_p(M) over max-regular M; pi0(Spp) homeomorphic to Sp");
}

inline Outcome check_R3_18(const RingAnalysis& a) {
  for (const auto& p : a.purely_primes()) {
    bool found = false;
    for (const auto& q : a.purely_minimals()) found = found || q.subset_of(p);
    if (!found) return failed("no purely-minimal ideal inside " + p.to_string());
  }
  return passed(count(a.purely_primes().size(), "purely-prime ideals") + ", " +
                count(a.purely_minimals().size(), "purely-minimal"));
}

inline Outcome check_T4_1(const RingAnalysis& a) {
  if (!a.classification().is_gelfand) return skipped("hypothesis not met: ring is not Gelfand");
  std::vector<Ideal> kers;
  for (const auto& m : a.maximals()) kers.push_back(ker_pi(m));
  if (member_set(kers) != member_set(a.purely_maximals()))
    return failed("purely-maximal " + set_str(a.purely_maximals()) + " vs Ker pi_m " + set_str(kers));
  return passed("purely-maximal = Ker pi_m = " + set_str(a.purely_maximals()));
}

inline Outcome check_C4_3(const RingAnalysis& a) {
  if (!a.classification().is_gelfand) return skipped("hypothesis not met: ring is not Gelfand");
  for (const auto& i : a.ideals())
    if (a.nu(i) != a.u(i))
      return failed("nu(" + i.to_string() + ") = " + a.nu(i).to_string() + " but u = " + a.u(i).to_string());
  return passed("nu = u on all " + count(a.ideals().size(), "ideals"));
}

inline Outcome check_L4_4(const RingAnalysis& a) {
  for (const auto& i : a.ideals())
    for (const auto& j : a.ideals()) {
      auto lhs = a.nu(ideal_product(i, j));
      auto rhs = ideal_product(a.nu(i), a.nu(j));
      if (lhs != rhs)
        return failed("nu(" + i.to_string() + " * " + j.to_string() + ") = " + lhs.to_string() + " vs " + rhs.to_string());
    }
  return passed(count(a.ideals().size() * a.ideals().size(), "ideal pairs") + " checked");
}

inline Outcome check_battery(const ItemTable& t, const Families& fam) {
  auto d = battery_details(t, fam);
  return battery_agrees(t) ? passed(d) : failed(d);
}

inline Outcome check_T4_6(const RingAnalysis& a) {
  auto fam = bounded_families(a);
  return check_battery(pure_part_items(a, fam), fam);
}

inline Outcome check_T4_9(const RingAnalysis& a) {
  auto fam = bounded_families(a);
  return check_battery(unit_part_items(a, fam), fam);
}

inline Outcome check_C4_7(const RingAnalysis& a) {
  if (!a.classification().is_gelfand) return skipped("hypothesis not met: ring is not Gelfand");
  for (const auto& i : a.pure_ideals()) {
    Ideal acc = Ideal::zero(a.ring());
    i.members().for_each([&](Element f) { acc = ideal_sum(acc, a.nu(principal_ideal(a.ring(), f))); });
    if (acc != i) return failed("sum of nu(Af) over " + i.to_string() + " is " + acc.to_string());
  }
  return passed(count(a.pure_ideals().size(), "pure ideals") + " equal the sum of nu(Af)");
}

inline Outcome check_C4_8(const RingAnalysis& a) {
  bool zero_dim = a.classification().krull_dimension == 0;
  auto m = canonical_map(CanonicalMapKind::nu, a.space(SpaceKind::zariski), a.space(SpaceKind::pure));
  bool iso = compare_spaces(m).is_homeomorphism;
  std::string d = std::string("dimension ") + std::to_string(a.classification().krull_dimension) +
                  "; nu: Spec -> Spp " + (iso ? "is" : "is not") + " a homeomorphism";
  return zero_dim == iso ? passed(d) : failed(d);
}

inline Outcome check_P4_10(const RingAnalysis& a) {
  for (const auto& i : a.ideals()) {
    Ideal acc = Ideal::whole(a.ring());
    for (const auto& m : a.maximals())
      if (i.subset_of(m)) acc = ideal_intersect(acc, a.u(m));
    if (acc != a.u(i)) return failed("u(" + i.to_string() + ") = " + a.u(i).to_string() + " but meet is " + acc.to_string());
  }
  return passed(count(a.ideals().size(), "ideals") + " checked");
}

inline Outcome check_L5_1(const RingAnalysis& a) {
  const auto& pure = a.pure_ideals();
  for (const auto& i : pure)
    for (const auto& j : pure)
      if (i != j && radical(i) == radical(j))
        return failed(i.to_string() + " and " + j.to_string() + " share the radical " + radical(i).to_string());
  return passed(count(pure.size(), "pure ideals") + " with distinct radicals");
}

inline bool mp_criterion(const RingAnalysis& a) {
  for (const auto& p : a.minimal_primes())
    if (radical(a.nu(p)) != p) return false;
  return true;
}

inline Outcome check_T5_2(const RingAnalysis& a) {
  bool mp = a.classification().is_mp;
  bool crit = mp_criterion(a);
  std::string d = std::string(mp ? "mp" : "not mp") + "; p = rad nu(p) on Min " + (crit ? "holds" : "fails");
  return mp == crit ? passed(d) : failed(d);
}

inline Outcome check_T5_3(const RingAnalysis& a) {
  if (!a.classification().is_mp) return skipped("hypothesis not met: ring is not mp");
  std::vector<Ideal> nus;
  for (const auto& p : a.minimal_primes()) nus.push_back(a.nu(p));
  if (member_set(nus) != member_set(a.purely_maximals()))
    return failed("purely-maximal " + set_str(a.purely_maximals()) + " vs nu(Min) " + set_str(nus));
  std::string d = "purely-maximal = nu(Min) = " + set_str(a.purely_maximals());
  if (a.classification().is_reduced) {
    if (member_set(a.minimal_primes()) != member_set(a.purely_maximals()))
      return failed("reduced mp ring: purely-maximal " + set_str(a.purely_maximals()) + " vs Min " +
                    set_str(a.minimal_primes()));
    d += " = Min";
  }
  return passed(d);
}

inline Outcome check_T5_5(const RingAnalysis& a) {
  if (!(a.classification().is_reduced && a.classification().is_mp))
    return skipped("hypothesis not met: ring is not a reduced mp-ring");
  if (member_set(a.purely_primes()) != member_set(a.purely_maximals()))
    return failed("purely-prime " + set_str(a.purely_primes()) + " vs purely-maximal " + set_str(a.purely_maximals()));
  return passed("purely-prime = purely-maximal = " + set_str(a.purely_primes()));
}

inline Outcome check_T5_6(const RingAnalysis& a) {
  bool reduced_mp = a.classification().is_reduced && a.classification().is_mp;
  const auto& flat = a.space(SpaceKind::flat_min);
  const auto& spp = a.space(SpaceKind::pure);
  std::vector<Ideal> mins, pts;
  for (const auto& p : flat->points()) mins.push_back(p.ideal);
  for (const auto& p : spp->points()) pts.push_back(p.ideal);
  bool as_sets = member_set(mins) == member_set(pts);
  bool as_spaces = same_topological_space(flat, spp);
  std::string d = std::string(reduced_mp ? "reduced mp" : "not reduced mp") + "; Min = Spp as spaces " +
                  (as_spaces ? "yes" : "no") + ", as sets " + (as_sets ? "yes" : "no");
  return reduced_mp == as_spaces && as_spaces == as_sets ? passed(d) : failed(d);
}

inline Outcome check_T5_7(const RingAnalysis& a) {
  if (!(a.classification().is_reduced && a.classification().is_mp))
    return skipped("hypothesis not met: ring is not a reduced mp-ring");
  bool pp = a.classification().is_pp_ring;
  bool same = same_topological_space(a.space(SpaceKind::zariski_min), a.space(SpaceKind::pure));
  std::string d = std::string(pp ? "p.p." : "not p.p.") + "; pure and Zariski topologies on Min " +
                  (same ? "agree" : "differ");
  return pp == same ? passed(d) : failed(d);
}

inline Outcome check_CONJ(const RingAnalysis& a) {
  std::string d = "Spp = " + set_str(a.purely_primes()) + ", purely-maximal = " + set_str(a.purely_maximals()) +
                  "; caveat: " + kGelfandCaveat;
  return member_set(a.purely_primes()) == member_set(a.purely_maximals()) ? passed(d) : failed(d);
}

inline Outcome check_T6_2(const RingAnalysis& a) {
  for (const auto& info : a.pure_info()) {
    const auto& i = info.ideal;
    std::size_t gens = 0;
    for (Element e : a.idempotents()) gens += principal_ideal(a.ring(), e) == i;
    if (gens != 1) return failed(i.to_string() + " has " + count(gens, "idempotent generators"));
    if (principal_ideal(a.ring(), info.generator) != i) return failed(i.to_string() + " is not A" + a.r().name(info.generator));
  }
  if (!a.classification().is_semi_noetherian) return failed("ring not semi-Noetherian");
  return passed(count(a.pure_info().size(), "pure ideals") + ", each Ae for a unique idempotent e; " +
                count(a.purely_maximals().size(), "purely-maximal ideals") + " finitely generated");
}

inline Outcome check_spp_formula(const RingAnalysis& a) {
  if (a.r().construction().kind != Construction::Kind::zmod) return skipped("applies to Z/m only");
  auto expected = predicted_spp_zmod(a.ring());
  if (member_set(expected) != member_set(a.purely_primes()))
    return failed("Spp = " + set_str(a.purely_primes()) + " but prime powers give " + set_str(expected));
  return passed("Spp = " + set_str(a.purely_primes()));
}

struct CatalogEntry {
  CheckInfo info;
  CheckFn fn;
};

inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries{
      {{"P-L2.1", "finite sums and intersections of pure ideals are pure"}, check_L2_1},
      {{"P-L2.4", "purely-maximal ideals are purely-prime"}, check_L2_4},
      {{"P-P2.6", "the pure spectrum is quasi-compact"}, check_P2_6},
      {{"P-T2.7", "homs extend pure ideals to pure ideals and induce continuous, functorial Spp maps"}, check_T2_7},
      {{"P-L2.8", "D(f) over I lies in Supp(I), with equality exactly for pure I"}, check_L2_8},
      {{"P-L2.9", "U_I <= U_J iff I <= J; U_I meet U_J = U_IJ"}, check_L2_9},
      {{"P-L3.1", "nu(p) is purely-prime and equals nu(Ker pi_p)"}, check_L3_1},
      {{"P-C3.2", "nu is constant along prime chains"}, check_C3_2},
      {{"P-L3.6", "if rad I is pure then I = rad I"}, check_L3_6},
      {{"P-L3.7", "in a reduced ring pure ideals are radical"}, check_L3_7},
      {{"P-T3.8", "reduced ring: pure I = {f : D(f) <= Supp(I)}"}, check_T3_8},
      {{"P-P3.9", "nu: Spec -> Spp is continuous"}, check_P3_9},
      {{"P-T3.10", "e -> U_e is a bijection from idempotents to clopens of Spp"}, check_T3_10},
      {{"P-C3.11", "Spp is connected iff there are no nontrivial idempotents"}, check_C3_11},
      {{"P-P3.12", "lambda: Spp -> Sp is continuous and surjective"}, check_P3_12},
      {{"P-L3.13", "for pure I, pure ideals of A/I are the J/I with J pure over I"}, check_L3_13},
      {{"P-C3.14", "for pure I, Spp(A/I) is homeomorphic to V_p(I)"}, check_C3_14},
      {{"P-T3.16", "components of Spp are V_p(M) over max-regular M; pi0(Spp) ~ Sp"}, check_T3_16},
      {{"P-R3.18", "every purely-prime ideal contains a purely-minimal one"}, check_R3_18},
      {{"P-T4.1", "Gelfand: purely-maximal ideals are the Ker pi_m"}, check_T4_1},
      {{"P-C4.3", "Gelfand: nu = u"}, check_C4_3},
      {{"P-L4.4", "nu(IJ) = nu(I) nu(J)"}, check_L4_4},
      {{"P-T4.6", "the eight pure-part conditions agree"}, check_T4_6},
      {{"P-C4.7", "Gelfand: a pure I is the sum of nu(Af) over f in I"}, check_C4_7},
      {{"P-C4.8", "zero-dimensional iff nu: Spec -> Spp is a homeomorphism"}, check_C4_8},
      {{"P-T4.9", "the eight unit-part conditions agree"}, check_T4_9},
      {{"P-P4.10", "u(I) is the meet of u(m) over maximal m containing I"}, check_P4_10},
      {{"P-L5.1", "pure ideals with equal radicals are equal"}, check_L5_1},
      {{"P-T5.2", "mp iff p = rad nu(p) for every minimal prime"}, check_T5_2},
      {{"P-T5.3/C5.4", "mp: purely-maximal = nu(Min); reduced mp: = Min"}, check_T5_3},
      {{"P-T5.5", "reduced mp: purely-prime = purely-maximal"}, check_T5_5},
      {{"P-T5.6", "reduced mp iff Min = Spp as spaces iff as sets"}, check_T5_6},
      {{"P-T5.7", "reduced mp: p.p. iff pure and Zariski topologies on Min agree"}, check_T5_7},
      {{"P-CONJ", "purely-prime = purely-maximal"}, check_CONJ},
      {{"P-T6.2", "every pure ideal is Ae for a unique idempotent e"}, check_T6_2},
      {{"Spp-formula", "Spp(Z/m) is the set of p^c Z/m over prime powers exactly dividing m"}, check_spp_formula},
  };
  return entries;
}

inline const CatalogEntry& find_entry(const std::string& id) {
  for (const auto& e : catalog_entries())
    if (id == e.info.id) return e;
  throw UnknownCheckId("unknown check id '" + id + "'");
}

// Closed-form checks on the integers; everything else is out of reach.
inline Outcome symz_check(const std::string& id) {
  constexpr std::uint64_t kMaxGen = 64;
  auto primes = [] {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t n = 2; n <= kMaxGen; ++n) {
      bool prime = true;
      for (std::uint64_t d = 2; d * d <= n; ++d) prime = prime && n % d;
      if (prime) ps.push_back(n);
    }
    return ps;
  };
  if (id == "P-C3.2") {
    for (auto p : primes())
      if (!(pure_part_symz(p) == pure_part_symz(0))) return failed("nu(" + std::to_string(p) + "Z) != nu(0)");
    return passed("nu(0) = nu(pZ) = 0 for primes p <= " + std::to_string(kMaxGen));
  }
  if (id == "P-L2.1") {
    for (const auto& i : pure_ideals_symz())
      for (const auto& j : pure_ideals_symz())
        if (!is_pure_symz(zsum(i, j).generator) || !is_pure_symz(zintersect(i, j).generator))
          return failed("pure ideals of Z not closed at " + i.to_string() + ", " + j.to_string());
    return passed("pure ideals {0, Z} closed under sum and intersection");
  }
  if (id == "P-L4.4") {
    for (std::uint64_t a = 0; a <= kMaxGen; ++a)
      for (std::uint64_t b = 0; b <= kMaxGen; ++b)
        if (!(pure_part_symz(zproduct({a}, {b})) == zproduct(pure_part_symz(a), pure_part_symz(b))))
          return failed("nu(" + std::to_string(a) + "Z * " + std::to_string(b) + "Z) mismatch");
    return passed("generators 0.." + std::to_string(kMaxGen) + " checked");
  }
  if (id == "P-L5.1") {
    // Pure ideals 0 and Z have radicals 0 and Z.
    return passed("pure ideals {0, Z} have distinct radicals 0 and Z");
  }
  return skipped("unsupported on the symbolic Z backend: needs a finite ideal lattice");
}

}  // namespace detail

inline std::vector<CheckInfo> check_catalog() {
  std::vector<CheckInfo> out;
  for (const auto& e : detail::catalog_entries()) out.push_back(e.info);
  return out;
}

inline std::vector<std::string> all_check_ids() {
  std::vector<std::string> out;
  for (const auto& e : detail::catalog_entries()) out.emplace_back(e.info.id);
  return out;
}

inline bool is_check_id(const std::string& id) {
  for (const auto& e : detail::catalog_entries())
    if (id == e.info.id) return true;
  return false;
}

inline CheckResult run_check(const RingAnalysis& a, const std::string& id) {
  const auto& entry = detail::find_entry(id);
  auto t0 = std::chrono::steady_clock::now();
  CheckResult r{id, a.r().label(), CheckStatus::skipped, {}, {}};
  try {
    auto o = entry.fn(a);
    r.status = o.status;
    r.details = std::move(o.details);
  } catch (const ResourceError& e) {
    r.status = CheckStatus::skipped;
    r.details = std::string("resource: ") + e.what();
  }
  r.elapsed = std::chrono::steady_clock::now() - t0;
  return r;
}

inline CheckResult run_check(const RingPtr& ring, const std::string& id, const Limits& limits = {}) {
  detail::find_entry(id);
  std::optional<RingAnalysis> a;
  try {
    a.emplace(ring, limits);
  } catch (const ResourceError& e) {
    return {id, ring->label(), CheckStatus::skipped, std::string("resource: ") + e.what(), {}};
  }
  return run_check(*a, id);
}

inline CheckResult run_check_symz(const std::string& id) {
  detail::find_entry(id);
  auto t0 = std::chrono::steady_clock::now();
  auto o = detail::symz_check(id);
  return {id, SymbolicZ{}.label, o.status, std::move(o.details), std::chrono::steady_clock::now() - t0};
}

}  // namespace purespec
