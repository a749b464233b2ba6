#include <gtest/gtest.h>

#include "oracles.hpp"
#include "purespec/classify.hpp"
#include "purespec/spectra.hpp"
#include "test_rings.hpp"

using namespace purespec;

namespace {

bool has_witness(const ClassReport& c, const std::string& prefix) {
  for (const auto& w : c.witnesses)
    if (w.rfind(prefix, 0) == 0) return true;
  return false;
}

// Squarefree modulus check, independent of the ring tables.
bool squarefree(std::uint64_t n) {
  for (auto [p, c] : oracle::factorize(n))
    if (c > 1) return false;
  return true;
}

}  // namespace

TEST(Classify, ZmodSix) {
  auto c = classify(enumerate_ideals(build_zmod(6)));
  EXPECT_TRUE(c.is_reduced);
  EXPECT_TRUE(c.is_gelfand);
  EXPECT_TRUE(c.is_mp);
  EXPECT_EQ(c.krull_dimension, 0u);
  EXPECT_TRUE(c.is_pp_ring);
  EXPECT_TRUE(c.is_von_neumann_regular);
  EXPECT_TRUE(c.all_pure_idempotent_generated);
  EXPECT_TRUE(c.witnesses.empty());
}

TEST(Classify, ZmodFour) {
  auto c = classify(enumerate_ideals(build_zmod(4)));
  EXPECT_FALSE(c.is_reduced);
  EXPECT_TRUE(c.is_gelfand);
  EXPECT_TRUE(c.is_mp);
  EXPECT_EQ(c.krull_dimension, 0u);
  EXPECT_FALSE(c.is_von_neumann_regular);
  EXPECT_TRUE(has_witness(c, "not reduced: 2 is a nonzero nilpotent"));
  EXPECT_TRUE(has_witness(c, "not von Neumann regular"));
}

TEST(Classify, DualNumbersAreNotPP) {
  auto c = classify(enumerate_ideals(build_poly_quotient(2, {0, 0, 1})));
  EXPECT_FALSE(c.is_reduced);
  EXPECT_FALSE(c.is_pp_ring);
  EXPECT_TRUE(has_witness(c, "not p.p.: Ann(x) = {0,x}"));
  EXPECT_TRUE(c.is_gelfand);
}

TEST(Classify, ReducedMatchesSquarefreeModulus) {
  for (std::uint64_t n = 2; n <= 100; ++n) {
    auto c = classify(enumerate_ideals(build_zmod(n)));
    EXPECT_EQ(c.is_reduced, squarefree(n)) << n;
    EXPECT_EQ(c.is_von_neumann_regular, squarefree(n)) << n;
  }
}

TEST(Classify, FiniteRingsCollapse) {
  for (const auto& r : testing_rings::property_rings()) {
    auto c = classify(enumerate_ideals(r));
    EXPECT_EQ(c.krull_dimension, 0u) << r->label();
    EXPECT_TRUE(c.is_gelfand) << r->label();
    EXPECT_TRUE(c.is_mp) << r->label();
    EXPECT_TRUE(c.all_pure_idempotent_generated) << r->label();
    EXPECT_TRUE(c.is_semi_noetherian) << r->label();
    if (c.is_reduced && c.krull_dimension == 0) {
      EXPECT_TRUE(c.is_von_neumann_regular) << r->label();
    }
    if (c.is_von_neumann_regular) {
      EXPECT_TRUE(c.is_reduced && c.is_pp_ring) << r->label();
    }
  }
}

TEST(Classify, PPEquivalentToTopologyEquality) {
  for (const auto& r : testing_rings::property_rings()) {
    auto lat = enumerate_ideals(r);
    auto c = classify(lat);
    if (!(c.is_reduced && c.is_mp)) continue;
    bool same = same_topological_space(build_space_ptr(lat, SpaceKind::zariski_min),
                                       build_space_ptr(lat, SpaceKind::pure));
    EXPECT_EQ(c.is_pp_ring, same) << r->label();
  }
}

TEST(Classify, MpCriterion) {
  for (const auto& r : testing_rings::property_rings()) {
    auto lat = enumerate_ideals(r);
    bool crit = true;
    for (const auto& p : lat.minimal_primes()) crit = crit && p == radical(pure_part_fixed_point(p));
    EXPECT_EQ(classify(lat).is_mp, crit) << r->label();
  }
}

TEST(Classify, DimensionAgreesWithChainOracle) {
  for (const auto& r : testing_rings::property_rings()) {
    if (r->order() > 16) continue;
    std::vector<oracle::Members> primes;
    for (const auto& s : oracle::all_ideals_by_subset_scan(*r))
      if (oracle::is_prime(*r, s)) primes.push_back(s);
    unsigned dim = 0;
    for (const auto& a : primes)
      for (const auto& b : primes)
        if (a != b && oracle::subset(a, b)) dim = 1;
    EXPECT_EQ(classify(enumerate_ideals(r)).krull_dimension, dim) << r->label();
  }
}

TEST(ClassifySymz, ClosedForm) {
  auto c = classify_symz();
  EXPECT_TRUE(c.is_reduced);
  EXPECT_FALSE(c.is_gelfand);
  EXPECT_TRUE(has_witness(c, "not Gelfand: prime 0 lies in maximal ideals 2Z and 3Z"));
  EXPECT_TRUE(c.is_mp);
  EXPECT_EQ(c.krull_dimension, 1u);
  EXPECT_TRUE(c.is_pp_ring);
  EXPECT_FALSE(c.is_von_neumann_regular);
  EXPECT_TRUE(c.is_semi_noetherian);
  EXPECT_EQ(pure_ideals_symz(), (std::vector<ZIdeal>{{0}, {1}}));
}
