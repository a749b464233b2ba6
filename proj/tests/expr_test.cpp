#include <gtest/gtest.h>

#include <random>

#include "purespec/expr.hpp"

using namespace purespec;

TEST(ParseExpr, Examples) {
  EXPECT_EQ(parse_ring_expr("Z/12"), RingExpr::zmod(12));
  EXPECT_EQ(parse_ring_expr("Z/2 x Z/3"), RingExpr::product({RingExpr::zmod(2), RingExpr::zmod(3)}));
  EXPECT_EQ(parse_ring_expr("Z/2[x]/(x^2+x+1)"), RingExpr::poly_quotient(2, {1, 1, 1}));
  EXPECT_EQ(parse_ring_expr("Z"), RingExpr::symz());
}

TEST(ParseExpr, WhitespaceAndAliases) {
  auto want = RingExpr::product({RingExpr::zmod(2), RingExpr::poly_quotient(3, {-1, 0, 1}), RingExpr::zmod(5)});
  EXPECT_EQ(parse_ring_expr("  Z / 2 *Z/3 [ x ] / ( x ^ 2 - 1 )x Z/5 "), want);
  EXPECT_EQ(parse_ring_expr("Z/2xZ/3"), parse_ring_expr("Z/2 x Z/3"));
  EXPECT_EQ(parse_ring_expr("Z/5[x]/(2*x + 3x^2 - 2x^2 + 1)"), RingExpr::poly_quotient(5, {1, 2, 1}));
  EXPECT_EQ(parse_ring_expr("Z/5[x]/(x)"), RingExpr::poly_quotient(5, {0, 1}));
}

TEST(ParseExpr, Errors) {
  auto offset = [](const char* s) {
    try {
      parse_ring_expr(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1L;
  };
  EXPECT_EQ(offset("Z/0"), 2);
  EXPECT_EQ(offset("Z/1"), 2);
  EXPECT_EQ(offset(""), 0);
  EXPECT_EQ(offset("Q"), 0);
  EXPECT_EQ(offset("Z/"), 2);
  EXPECT_EQ(offset("Z/4 + Z/2"), 4);
  EXPECT_EQ(offset("Z/4 x"), 5);
  EXPECT_EQ(offset("Z/2[y]"), 4);
  EXPECT_EQ(offset("Z/2[x]/(x^2+)"), 12);
  EXPECT_EQ(offset("Z/2[x]/(x^2"), 11);
  EXPECT_EQ(offset("Z/99999999999999999999"), 2);
  EXPECT_THROW(parse_ring_expr("Z x Z/2"), SemanticError);
  EXPECT_THROW(parse_ring_expr("Z/2 * Z"), SemanticError);
  EXPECT_THROW(parse_ring_expr("Z/4[x]/(2x^2+1)"), SemanticError);
  EXPECT_THROW(parse_ring_expr("Z/4[x]/(3)"), SemanticError);
  EXPECT_THROW(parse_ring_expr("Z/4[x]/(x^2-x^2)"), SemanticError);
  // Both are InvalidArgument, which the CLI maps to exit code 2.
  EXPECT_THROW(parse_ring_expr("Z/0"), InvalidArgument);
}

TEST(ParseExpr, LeadingCoefficientIsMonicModN) {
  auto e = parse_ring_expr("Z/2[x]/(3x^2+1)");
  EXPECT_EQ(e, RingExpr::poly_quotient(2, {1, 0, 3}));
  EXPECT_EQ(build_ring(e)->fingerprint(), build_poly_quotient(2, {1, 0, 1})->fingerprint());
}

TEST(BuildRing, MatchesConstructors) {
  EXPECT_EQ(build_ring(parse_ring_expr("Z/12"))->fingerprint(), build_zmod(12)->fingerprint());
  auto p = build_ring(parse_ring_expr("Z/2 x Z/3[x]/(x^2+1)"));
  EXPECT_EQ(p->order(), 18u);
  EXPECT_EQ(p->fingerprint(), build_product({build_zmod(2), build_poly_quotient(3, {1, 0, 1})})->fingerprint());
  EXPECT_THROW(build_ring(RingExpr::symz()), UnsupportedBackend);
  EXPECT_THROW(build_ring(parse_ring_expr("Z/32 x Z/32")), OrderCapExceeded);
}

namespace {

RingExpr random_factor(std::mt19937& rng) {
  std::uniform_int_distribution<std::uint64_t> mod(2, 40);
  if (rng() % 2) return RingExpr::zmod(mod(rng));
  auto n = mod(rng);
  std::uniform_int_distribution<std::int64_t> coef(-9, 9);
  std::vector<std::int64_t> f(1 + rng() % 4);
  for (auto& c : f) c = coef(rng);
  f.push_back(1 + static_cast<std::int64_t>(n) * static_cast<std::int64_t>(rng() % 2));  // leading ≡ 1
  return RingExpr::poly_quotient(n, f);
}

// Trailing zero terms are dropped by the parser, so generated trees must
// not end in zero coefficients.
RingExpr random_expr(std::mt19937& rng) {
  auto k = 1 + rng() % 3;
  if (k == 1) return random_factor(rng);
  std::vector<RingExpr> fs;
  for (std::size_t i = 0; i < k; ++i) fs.push_back(random_factor(rng));
  return RingExpr::product(std::move(fs));
}

}  // namespace

TEST(ParseExpr, PrintParseRoundTrip) {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 2000; ++trial) {
    auto e = random_expr(rng);
    auto text = to_string(e);
    EXPECT_EQ(parse_ring_expr(text), e) << text;
    EXPECT_EQ(to_string(parse_ring_expr(text)), text);
  }
  EXPECT_EQ(to_string(parse_ring_expr("Z")), "Z");
}
