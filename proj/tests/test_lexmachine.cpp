#include <gtest/gtest.h>

#include "hyperres/lexmachine.hpp"
#include "hyperres/macaulay.hpp"
#include "hyperres/parse.hpp"
#include "hyperres/random.hpp"

using namespace hyperres;

namespace {

auto ring_xy() { return make_ring(RationalField{}, 2, MonomialOrder::grevlex(), {"x", "y"}); }
auto ring_xyz() { return make_ring(RationalField{}, 3, MonomialOrder::grevlex(), {"x", "y", "z"}); }

}  // namespace

TEST(HilbertFunction, Validation) {
  EXPECT_NO_THROW(HilbertFunction(2, {1, 2, 1, 1}));
  EXPECT_THROW(HilbertFunction(2, {1, 2, 4}), std::invalid_argument);
  EXPECT_THROW(HilbertFunction(2, {2, 2}), std::invalid_argument);
  EXPECT_THROW(HilbertFunction(2, {1, 3}), std::invalid_argument);
}

TEST(LexSegment, Examples) {
  auto r = ring_xy();
  auto lex = lex_segment_ideal(r, HilbertFunction(2, {1, 2, 1, 1}));
  EXPECT_EQ(lex, Ideal<RationalField>(r, parse_polynomial_list(r, "x^2, x*y")));

  auto r3 = ring_xyz();
  EXPECT_TRUE(lex_segment_ideal(r3, HilbertFunction(3, {1, 3, 6, 10, 15})).is_zero());

  auto partial = lex_segment_ideal(r3, HilbertFunction(3, {1, 3, 4}));
  EXPECT_EQ(partial, Ideal<RationalField>(r3, parse_polynomial_list(r3, "x^2, x*y")));
}

TEST(LexRestriction, Examples) {
  auto r = ring_xy();
  auto lex = lex_segment_ideal(r, HilbertFunction(2, {1, 2, 1, 1}));
  EXPECT_EQ(lex_restricted_dim(lex, 2), 0u);
  EXPECT_EQ(macaulay_lower(1, 2), 0);

  auto r3 = ring_xyz();
  EXPECT_EQ(lex_restricted_dim(Ideal<RationalField>::zero(r3), 2), 3u);
  EXPECT_EQ(macaulay_lower(6, 2), 3);

  for (int d = 0; d < 4; ++d) EXPECT_EQ(lex_restricted_dim(Ideal<RationalField>::unit(r3), d), 0u);
}

TEST(LexSegment, RoundTripIdentityAndShape) {
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng(derive_seed(99, t));
    std::uniform_int_distribution<std::size_t> nvars(1, 4);
    std::uniform_int_distribution<int> horizon(1, 5);
    const std::size_t n = nvars(rng);
    auto hf = HilbertFunction::random(n, horizon(rng), rng);
    auto ring = make_ring(PrimeField{}, n);
    auto lex = lex_segment_ideal(ring, hf);
    ASSERT_TRUE(is_lex_segment(lex, hf.horizon())) << "trial " << t;
    for (int d = 0; d <= hf.horizon(); ++d) {
      ASSERT_EQ(hilbert_dim(lex, d), hf[d]) << "trial " << t << " degree " << d;
      if (d >= 1)
        ASSERT_EQ(BigInt(static_cast<unsigned long>(lex_restricted_dim(lex, d))),
                  macaulay_lower(BigInt(static_cast<unsigned long>(hf[d])), static_cast<unsigned>(d)))
            << "trial " << t << " degree " << d;
    }
  }
}

TEST(LexSegment, DetectsNonSegments) {
  auto r = ring_xy();
  EXPECT_FALSE(is_lex_segment(Ideal<RationalField>(r, parse_polynomial_list(r, "y^2")), 2));
  EXPECT_TRUE(is_lex_segment(Ideal<RationalField>(r, parse_polynomial_list(r, "x^2")), 2));
}
