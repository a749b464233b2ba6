#include <gtest/gtest.h>

#include "purespec/spectra.hpp"
#include "test_rings.hpp"

using namespace purespec;

namespace {

using V = std::vector<Element>;

V members(const Ideal& i) { return i.members().elements(); }

Ideal ideal_of(const RingPtr& r, V m) { return Ideal(r, ElementSet::of(r->order(), m)); }

std::vector<V> point_members(const FinTopSpace& x) {
  std::vector<V> out;
  for (const auto& p : x.points()) out.push_back(members(p.ideal));
  return out;
}

// U_I = {P : I ⊄ P}, computed directly from the point list.
PointSet u_set(const FinTopSpace& spp, const Ideal& i) {
  PointSet s(spp.size());
  for (std::size_t k = 0; k < spp.size(); ++k)
    if (!i.subset_of(spp.point(k).ideal)) s.insert(static_cast<Element>(k));
  return s;
}

// V_p(I) = {P : I ⊆ P}.
PointSet v_set(const FinTopSpace& spp, const Ideal& i) { return u_set(spp, i).complement(); }

const std::vector<SpaceKind> kLatticeKinds{SpaceKind::zariski,  SpaceKind::zariski_max,
                                           SpaceKind::zariski_min, SpaceKind::flat_min,
                                           SpaceKind::pure,     SpaceKind::pierce};

}  // namespace

TEST(BuildSpace, PureSpectrumOfZmodTwelveIsDiscreteOnTwoPoints) {
  auto lat = enumerate_ideals(build_zmod(12));
  auto spp = build_space(lat, SpaceKind::pure);
  EXPECT_EQ(point_members(spp), (std::vector<V>{{0, 4, 8}, {0, 3, 6, 9}}));
  EXPECT_EQ(spp.opens().size(), 4u);
  EXPECT_TRUE(topology_props(spp).is_hausdorff);
  for (std::size_t k = 0; k < 2; ++k) EXPECT_TRUE(spp.is_open(PointSet(2, {static_cast<Element>(k)})));
}

TEST(BuildSpace, PureSpectrumOfZmodFourIsOnePoint) {
  auto spp = build_space(enumerate_ideals(build_zmod(4)), SpaceKind::pure);
  EXPECT_EQ(point_members(spp), (std::vector<V>{{0}}));
}

TEST(BuildSpace, FieldGivesOnePointInEveryKind) {
  auto lat = enumerate_ideals(build_poly_quotient(3, {1, 0, 1}));
  for (auto k : kLatticeKinds) {
    auto x = build_space(lat, k);
    EXPECT_EQ(point_members(x), (std::vector<V>{{0}})) << to_string(k);
    EXPECT_EQ(x.opens().size(), 2u) << to_string(k);
  }
}

TEST(BuildSpace, EverySpaceIsATopology) {
  for (const auto& r : testing_rings::property_rings()) {
    auto lat = enumerate_ideals(r);
    for (auto k : kLatticeKinds) {
      auto x = build_space(lat, k);
      EXPECT_NO_THROW(x.validate()) << r->label() << " " << to_string(k);
      EXPECT_EQ(x.kind(), k);
      EXPECT_TRUE(topology_props(x).is_quasi_compact);
    }
  }
}

TEST(BuildSpace, RejectsDerivedKinds) {
  auto lat = enumerate_ideals(build_zmod(6));
  EXPECT_THROW(build_space(lat, SpaceKind::subspace), InvalidArgument);
  EXPECT_THROW(build_space(lat, SpaceKind::components), InvalidArgument);
}

TEST(CanonicalMap, NuOnZmodTwelve) {
  auto lat = enumerate_ideals(build_zmod(12));
  auto nu = canonical_map(lat, CanonicalMapKind::nu);
  const auto& src = *nu.source();
  const auto& tgt = *nu.target();
  ASSERT_EQ(src.size(), 2u);
  for (std::size_t k = 0; k < 2; ++k) {
    auto p = members(src.point(k).ideal);
    auto img = members(tgt.point(nu(k)).ideal);
    V expected = p == V{0, 2, 4, 6, 8, 10} ? V{0, 4, 8} : V{0, 3, 6, 9};
    EXPECT_EQ(img, expected);
  }
  EXPECT_TRUE(compare_spaces(nu).is_homeomorphism);
}

TEST(CanonicalMap, LambdaOnZmodTwelve) {
  auto lat = enumerate_ideals(build_zmod(12));
  auto lam = canonical_map(lat, CanonicalMapKind::lambda);
  for (std::size_t k = 0; k < lam.source()->size(); ++k)
    EXPECT_EQ(lam.target()->point(lam(k)).ideal, lam.source()->point(k).ideal);
  EXPECT_EQ(regular_part(ideal_of(lam.source()->point(0).ideal.ring(), {0, 4, 8})),
            ideal_of(lam.source()->point(0).ideal.ring(), {0, 4, 8}));
}

TEST(CanonicalMap, FieldMapsAreIdentityLike) {
  auto lat = enumerate_ideals(build_zmod(7));
  for (auto k : {CanonicalMapKind::nu, CanonicalMapKind::lambda, CanonicalMapKind::nu_max,
                 CanonicalMapKind::unit_max}) {
    auto m = canonical_map(lat, k);
    EXPECT_EQ(m.point_map(), (std::vector<std::size_t>{0}));
    EXPECT_TRUE(compare_spaces(m).is_homeomorphism);
  }
}

TEST(CanonicalMap, ContinuityAndSurjectivityEverywhere) {
  for (const auto& r : testing_rings::property_rings()) {
    auto lat = enumerate_ideals(r);
    auto nu = compare_spaces(canonical_map(lat, CanonicalMapKind::nu));
    EXPECT_TRUE(nu.is_continuous) << r->label();
    auto lam = compare_spaces(canonical_map(lat, CanonicalMapKind::lambda));
    EXPECT_TRUE(lam.is_continuous && lam.is_surjective) << r->label();
    EXPECT_TRUE(compare_spaces(canonical_map(lat, CanonicalMapKind::nu_max)).is_homeomorphism);
    EXPECT_TRUE(compare_spaces(canonical_map(lat, CanonicalMapKind::unit_max)).is_homeomorphism);
  }
}

TEST(SppOfHom, QuotientOfZmodTwelve) {
  auto z12 = build_zmod(12);
  auto i = ideal_of(z12, {0, 4, 8});
  auto q = quotient_ring(i);
  auto lat = enumerate_ideals(z12);
  auto qlat = enumerate_ideals(q.ring);
  auto m = spp_of_hom(q.projection, lat, qlat);
  ASSERT_EQ(m.source()->size(), 1u);
  EXPECT_EQ(m.target()->point(m(0)).ideal, i);
  PointSet img = m.image(m.source()->full_set());
  EXPECT_EQ(img, v_set(*m.target(), i));
}

TEST(SppOfHom, IdentityGivesIdentity) {
  for (const auto& r : {build_zmod(12), build_zmod(30), build_product({build_zmod(2), build_zmod(2)})}) {
    auto lat = enumerate_ideals(r);
    auto m = spp_of_hom(RingHom::identity(r), lat, lat);
    for (std::size_t k = 0; k < m.source()->size(); ++k) EXPECT_EQ(m.source()->point(k).ideal, m.target()->point(m(k)).ideal);
  }
}

TEST(SppOfHom, ProductProjection) {
  auto z2 = build_zmod(2);
  auto z3 = build_zmod(3);
  auto p = build_product({z2, z3});
  std::vector<Element> map(6);
  for (Element e = 0; e < 6; ++e) map[e] = e % 3;  // (a,b) sits at 3a+b
  RingHom proj(p, z3, map);
  auto m = spp_of_hom(proj, enumerate_ideals(p), enumerate_ideals(z3));
  ASSERT_EQ(m.source()->size(), 1u);
  EXPECT_EQ(members(m.target()->point(m(0)).ideal), (V{0, 3}));
  EXPECT_EQ(p->name(3), "(1,0)");
  EXPECT_TRUE(compare_spaces(m).is_continuous);
}

TEST(SppOfHom, RejectsWrongSpaces) {
  auto z6 = build_zmod(6);
  auto lat = enumerate_ideals(z6);
  auto zar = build_space_ptr(lat, SpaceKind::zariski);
  auto spp = build_space_ptr(lat, SpaceKind::pure);
  EXPECT_THROW(spp_of_hom(RingHom::identity(z6), zar, spp), InvalidArgument);
  auto other = build_space_ptr(enumerate_ideals(build_zmod(10)), SpaceKind::pure);
  EXPECT_THROW(spp_of_hom(RingHom::identity(z6), other, spp), RingMismatch);
}

TEST(SppOfHom, QuotientHomeomorphismAndCompositionLaw) {
  for (const auto& r : testing_rings::property_rings()) {
    if (r->order() > 36) continue;
    auto lat = enumerate_ideals(r);
    auto spp = build_space_ptr(lat, SpaceKind::pure);
    std::vector<Ideal> proper;
    for (const auto& i : lat.ideals())
      if (i.is_proper()) proper.push_back(i);
    std::vector<Quotient> qs;
    std::vector<SpacePtr> qspp;
    for (const auto& i : proper) {
      qs.push_back(quotient_ring(i));
      qspp.push_back(build_space_ptr(enumerate_ideals(qs.back().ring), SpaceKind::pure));
    }
    for (std::size_t a = 0; a < proper.size(); ++a) {
      auto m = spp_of_hom(qs[a].projection, qspp[a], spp);
      EXPECT_TRUE(compare_spaces(m).is_continuous) << r->label();
      if (is_pure(proper[a])) {
        // Spp(A/I) onto V_p(I), homeomorphically onto the subspace.
        PointSet v = v_set(*spp, proper[a]);
        EXPECT_EQ(m.image(m.source()->full_set()), v) << r->label() << proper[a].to_string();
        auto sub = std::make_shared<const FinTopSpace>(subspace(*spp, v));
        auto onto = map_by_ideal_function(
            qspp[a], sub,
            [&](const Ideal& p) { return pure_part_fixed_point(hom_preimage(qs[a].projection, p)); },
            "Spp(pi)");
        EXPECT_TRUE(compare_spaces(onto).is_homeomorphism) << r->label() << proper[a].to_string();
      }
      for (std::size_t b = 0; b < proper.size(); ++b) {
        if (a == b || !proper[a].subset_of(proper[b])) continue;
        auto psi = induced_hom(qs[a], qs[b]);
        auto lhs = spp_of_hom(compose(psi, qs[a].projection), qspp[b], spp);
        auto rhs = compose(spp_of_hom(qs[a].projection, qspp[a], spp), spp_of_hom(psi, qspp[b], qspp[a]));
        EXPECT_EQ(lhs.point_map(), rhs.point_map()) << r->label();
      }
    }
  }
}

TEST(PureTopology, UOrderAndIntersections) {
  for (const auto& r : testing_rings::property_rings()) {
    auto lat = enumerate_ideals(r);
    auto spp = build_space(lat, SpaceKind::pure);
    auto pure = lat.pure_ideals();
    for (const auto& i : pure) {
      EXPECT_TRUE(spp.is_open(u_set(spp, i)));
      for (const auto& j : pure) {
        EXPECT_EQ(u_set(spp, i).is_subset_of(u_set(spp, j)), i.subset_of(j)) << r->label();
        EXPECT_EQ(u_set(spp, i) & u_set(spp, j), u_set(spp, ideal_product(i, j))) << r->label();
      }
    }
    EXPECT_TRUE(u_set(spp, Ideal::whole(r)).is_full());
  }
}

TEST(PureTopology, ClosureOfAPointIsVp) {
  for (const auto& r : testing_rings::property_rings()) {
    auto spp = build_space(enumerate_ideals(r), SpaceKind::pure);
    for (std::size_t k = 0; k < spp.size(); ++k)
      EXPECT_EQ(spp.closure(PointSet(spp.size(), {static_cast<Element>(k)})), v_set(spp, spp.point(k).ideal));
  }
}

TEST(PureTopology, IdempotentsBijectWithClopens) {
  for (const auto& r : testing_rings::property_rings()) {
    auto spp = build_space(enumerate_ideals(r), SpaceKind::pure);
    auto props = topology_props(spp);
    auto es = idempotents(*r);
    EXPECT_EQ(props.clopens.size(), es.size()) << r->label();
    std::set<PointSet, CanonicalLess> images;
    for (Element e : es) {
      auto u = u_set(spp, principal_ideal(r, e));
      EXPECT_TRUE(spp.is_clopen(u));
      images.insert(u);
    }
    EXPECT_EQ(images.size(), es.size()) << r->label();
  }
}

TEST(PureTopology, IdempotentDichotomy) {
  for (const auto& r : testing_rings::property_rings()) {
    auto spp = build_space(enumerate_ideals(r), SpaceKind::pure);
    for (const auto& p : spp.points())
      for (Element e : idempotents(*r))
        EXPECT_NE(p.ideal.contains(e), p.ideal.contains(r->sub(r->one(), e))) << r->label();
  }
}

TEST(PureTopology, ComponentsAreVpOfMaxRegularAndPi0IsPierce) {
  for (const auto& r : testing_rings::property_rings()) {
    auto lat = enumerate_ideals(r);
    auto spp = build_space(lat, SpaceKind::pure);
    auto pierce = build_space_ptr(lat, SpaceKind::pierce);
    auto props = topology_props(spp);
    std::set<PointSet, CanonicalLess> comps(props.components.begin(), props.components.end());
    std::set<PointSet, CanonicalLess> vps;
    for (const auto& m : pierce->points()) vps.insert(v_set(spp, m.ideal));
    EXPECT_EQ(comps, vps) << r->label();
    props.pi0->validate();
    auto m = map_by_ideal(props.pi0, pierce);
    ASSERT_TRUE(m.has_value()) << r->label();
    EXPECT_TRUE(compare_spaces(*m).is_homeomorphism) << r->label();
  }
}

TEST(TopologyProps, Examples) {
  auto spp12 = build_space(enumerate_ideals(build_zmod(12)), SpaceKind::pure);
  auto p12 = topology_props(spp12);
  EXPECT_EQ(p12.clopens.size(), 4u);
  ASSERT_EQ(p12.components.size(), 2u);
  EXPECT_EQ(p12.components[0], v_set(spp12, spp12.point(0).ideal));
  EXPECT_FALSE(p12.is_connected);
  EXPECT_EQ(p12.pi0->size(), 2u);

  auto one = topology_props(build_space(enumerate_ideals(build_zmod(5)), SpaceKind::pure));
  EXPECT_EQ(one.clopens.size(), 2u);
  EXPECT_TRUE(one.is_connected);

  auto p4 = topology_props(build_space(enumerate_ideals(build_zmod(4)), SpaceKind::pure));
  EXPECT_TRUE(p4.is_connected);
  EXPECT_EQ(idempotents(*build_zmod(4)), (V{0, 1}));
}

TEST(TopologyProps, ConnectedIffNoNontrivialIdempotents) {
  for (const auto& r : testing_rings::property_rings()) {
    auto props = topology_props(build_space(enumerate_ideals(r), SpaceKind::pure));
    EXPECT_EQ(props.is_connected, idempotents(*r).size() == 2) << r->label();
  }
}

TEST(TopologyProps, NonDiscreteSpaceIsNotHausdorff) {
  // Sierpinski space on two primes of Z/6, built by hand.
  auto lat = enumerate_ideals(build_zmod(6));
  auto pts = build_space(lat, SpaceKind::zariski).points();
  auto s = FinTopSpace::from_opens(SpaceKind::subspace, pts, {PointSet(2), PointSet(2, {0}), PointSet::full(2)});
  EXPECT_NO_THROW(s.validate());
  auto props = topology_props(s);
  EXPECT_FALSE(props.is_hausdorff);
  EXPECT_TRUE(props.is_connected);
  EXPECT_EQ(props.clopens.size(), 2u);
  EXPECT_EQ(props.pi0->size(), 1u);
}

TEST(CompareSpaces, Examples) {
  auto lat12 = enumerate_ideals(build_zmod(12));
  EXPECT_TRUE(compare_spaces(canonical_map(lat12, CanonicalMapKind::nu_max)).is_homeomorphism);

  auto spp = build_space_ptr(lat12, SpaceKind::pure);
  SpaceMap constant(spp, spp, {0, 0});
  auto c = compare_spaces(constant);
  EXPECT_TRUE(c.is_continuous);
  EXPECT_FALSE(c.is_bijective);
  EXPECT_FALSE(c.is_homeomorphism);

  auto lat6 = enumerate_ideals(build_zmod(6));
  auto flat = build_space_ptr(lat6, SpaceKind::flat_min);
  auto pure6 = build_space_ptr(lat6, SpaceKind::pure);
  auto id = map_by_ideal(flat, pure6);
  ASSERT_TRUE(id.has_value());
  EXPECT_TRUE(compare_spaces(*id).is_homeomorphism);
  EXPECT_TRUE(same_topological_space(flat, pure6));
}

TEST(CompareSpaces, SierpinskiIdentityIsNotAHomeomorphism) {
  auto pts = build_space(enumerate_ideals(build_zmod(6)), SpaceKind::zariski).points();
  auto disc = std::make_shared<const FinTopSpace>(FinTopSpace::from_opens(
      SpaceKind::subspace, pts, {PointSet(2), PointSet(2, {0}), PointSet(2, {1}), PointSet::full(2)}));
  auto sier = std::make_shared<const FinTopSpace>(
      FinTopSpace::from_opens(SpaceKind::subspace, pts, {PointSet(2), PointSet(2, {0}), PointSet::full(2)}));
  auto m = compare_spaces(SpaceMap(disc, sier, {0, 1}));
  EXPECT_TRUE(m.is_continuous && m.is_bijective);
  EXPECT_FALSE(m.is_open);
  EXPECT_FALSE(m.is_homeomorphism);
  auto back = compare_spaces(SpaceMap(sier, disc, {0, 1}));
  EXPECT_FALSE(back.is_continuous);
  EXPECT_TRUE(back.is_open);
  EXPECT_EQ(SpaceMap(sier, disc, {1, 0})(0), 1u);
}

TEST(FlatTopology, MinEqualsSppOnReducedRings) {
  for (const auto& r : testing_rings::property_rings()) {
    auto lat = enumerate_ideals(r);
    if (!radical(Ideal::zero(r)).is_zero()) continue;
    EXPECT_TRUE(same_topological_space(build_space_ptr(lat, SpaceKind::flat_min),
                                       build_space_ptr(lat, SpaceKind::pure)))
        << r->label();
  }
}
