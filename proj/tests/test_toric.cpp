#include <gtest/gtest.h>

#include "hyperres/parse.hpp"
#include "hyperres/toric.hpp"
#include "oracles.hpp"

using namespace hyperres;

namespace {

using Q = RationalField;

Ideal<Q> ideal(const ToricPresentation<Q>& t, const std::string& text) {
  return Ideal<Q>(t.ring, parse_polynomial_list(t.ring, text));
}

std::string form_text(const ToricPresentation<Q>& t, const LinearForm<Q>& l) {
  return l.to_polynomial(t.ring).to_string();
}

template <class F>
void expect_sound(const ToricPresentation<F>& t) {
  EXPECT_TRUE(kernel_vanishes(t));
  auto source = make_ring(t.ring->field(), t.source_vars);
  for (const auto& g : t.presentation_ideal.generators()) {
    EXPECT_TRUE(g.is_homogeneous());
    EXPECT_EQ(g.size(), 2u) << g.to_string();
    EXPECT_TRUE(oracle::substitute_monomials(g, t.images, source).is_zero());
  }
  EXPECT_EQ(t.quotient().hilbert_dim(1), t.num_vars());
  for (const auto& m : t.images) EXPECT_EQ(m.degree(), t.images.front().degree());
}

}  // namespace

TEST(Segre, Examples) {
  auto s22 = segre(Q{}, {2, 2});
  EXPECT_EQ(s22.num_vars(), 4u);
  EXPECT_EQ(s22.ring->names(), (std::vector<std::string>{"T11", "T12", "T21", "T22"}));
  EXPECT_EQ(s22.presentation_ideal, ideal(s22, "T11*T22 - T12*T21"));

  auto s11 = segre(Q{}, {1, 1});
  EXPECT_EQ(s11.num_vars(), 1u);
  EXPECT_TRUE(s11.presentation_ideal.is_zero());

  auto s23 = segre(Q{}, {2, 3});
  EXPECT_EQ(s23.num_vars(), 6u);
  EXPECT_EQ(s23.presentation_ideal,
            ideal(s23, "T11*T22 - T12*T21, T11*T23 - T13*T21, T12*T23 - T13*T22"));
  for (const auto& t : {s22, s11, s23}) expect_sound(t);
}

TEST(Veronese, Examples) {
  auto v22 = veronese(Q{}, 2, 2);
  EXPECT_EQ(v22.num_vars(), 3u);
  EXPECT_EQ(v22.presentation_ideal, ideal(v22, "Z2^2 - Z1*Z3"));

  auto v31 = veronese(Q{}, 3, 1);
  EXPECT_EQ(v31.num_vars(), 3u);
  EXPECT_TRUE(v31.presentation_ideal.is_zero());

  // 2x2 minors of the catalecticant [[Z1, Z2, Z3], [Z2, Z3, Z4]].
  auto v23 = veronese(Q{}, 2, 3);
  EXPECT_EQ(v23.num_vars(), 4u);
  EXPECT_EQ(v23.presentation_ideal, ideal(v23, "Z1*Z3 - Z2^2, Z1*Z4 - Z2*Z3, Z2*Z4 - Z3^2"));
  for (const auto& t : {v22, v31, v23}) expect_sound(t);
}

TEST(SegreVeronese, Coincidences) {
  auto a = segre_veronese(Q{}, {2}, {2});
  auto b = veronese(Q{}, 2, 2);
  EXPECT_EQ(a.images, b.images);
  EXPECT_EQ(a.presentation_ideal.groebner_basis(), b.presentation_ideal.groebner_basis());

  auto c = segre_veronese(Q{}, {2, 2}, {1, 1});
  auto d = segre(Q{}, {2, 2});
  EXPECT_EQ(c.images, d.images);
  EXPECT_EQ(c.presentation_ideal.groebner_basis(), d.presentation_ideal.groebner_basis());

  auto e = segre_veronese(Q{}, {2, 2}, {2, 1});
  EXPECT_EQ(e.num_vars(), 6u);
  // Rank-one condition on the 3x2 matrix of monomials: three 2x2 minors,
  // plus the Veronese relations between rows.
  auto source = make_ring(Q{}, 4);
  auto kernel_by_elimination = kernel_of_monomial_map(e.ring, 4, std::span<const Monomial>(e.images));
  EXPECT_EQ(e.presentation_ideal, kernel_by_elimination);
  expect_sound(e);
  EXPECT_THROW(segre_veronese(Q{}, {2, 2}, {1}), std::invalid_argument);
}

TEST(ChainToric, Examples) {
  auto c22 = chain_toric(Q{}, {2, 2});
  EXPECT_EQ(c22.num_vars(), 3u);
  EXPECT_EQ(c22.ring->names(), (std::vector<std::string>{"T11", "T12", "T22"}));
  EXPECT_EQ(c22.presentation_ideal, ideal(c22, "T12^2 - T11*T22"));

  auto c111 = chain_toric(Q{}, {1, 1, 1});
  EXPECT_EQ(c111.num_vars(), 1u);
  EXPECT_TRUE(c111.presentation_ideal.is_zero());

  auto c12 = chain_toric(Q{}, {1, 2});
  EXPECT_EQ(c12.num_vars(), 2u);
  EXPECT_TRUE(c12.presentation_ideal.is_zero());

  EXPECT_THROW(chain_toric(Q{}, {2, 1}), std::invalid_argument);
  for (const auto& t : {c22, c111, c12, chain_toric(Q{}, {1, 2, 3})}) expect_sound(t);
}

TEST(FiberCone, Examples) {
  auto fc = fiber_cone(Q{}, {Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}});
  auto v = veronese(Q{}, 2, 2);
  EXPECT_EQ(fc.images, v.images);
  EXPECT_EQ(fc.presentation_ideal, ideal(fc, "Z2^2 - Z1*Z3"));
  EXPECT_EQ(fc.presentation_ideal.groebner_basis().front().to_string(), "Z2^2 - Z1*Z3");

  EXPECT_TRUE(fiber_cone(Q{}, {Monomial{1, 0}, Monomial{0, 1}}).presentation_ideal.is_zero());
  EXPECT_TRUE(fiber_cone(Q{}, {Monomial{2, 0}, Monomial{0, 2}}).presentation_ideal.is_zero());
  EXPECT_THROW(fiber_cone(Q{}, {Monomial{2, 0}, Monomial{0, 1}}), std::invalid_argument);
  expect_sound(fc);
}

TEST(StructuredForm, Examples) {
  auto s22 = segre(Q{}, {2, 2});
  auto l = structured_form(s22, {{1, 1}, {1, -1}}, StructuredVariant::segre_product);
  EXPECT_EQ(form_text(s22, l), "T11 - T12 + T21 - T22");

  auto v22 = veronese(Q{}, 2, 2);
  EXPECT_EQ(form_text(v22, structured_form(v22, {{1, 1}}, StructuredVariant::veronese_power)), "Z1 + 2*Z2 + Z3");

  auto c12 = chain_toric(Q{}, {1, 2});
  // l1 = 2 X1, l2 = X1 + 3 X2: l1 (l1 + l2) = 6 X1^2 + 6 X1 X2.
  auto chain = structured_form(c12, {{2}, {1, 3}}, StructuredVariant::chain_partial_sums);
  EXPECT_EQ(form_text(c12, chain), "6*T11 + 6*T12");

  EXPECT_THROW(structured_form(s22, {{1, 1}}, StructuredVariant::segre_product), std::invalid_argument);
  EXPECT_THROW(structured_form(s22, {{1, 1}, {1}}, StructuredVariant::segre_product), std::invalid_argument);
  EXPECT_THROW(structured_form(v22, {{1, 1}}, StructuredVariant::chain_partial_sums), std::invalid_argument);
}

TEST(StructuredForm, CharacteristicTwoKillsTheMiddleCoefficient) {
  auto v = veronese(PrimeField{2}, 2, 2);
  for (std::uint64_t t = 0; t < 50; ++t) {
    Rng rng(derive_seed(2, t));
    auto l = sample_structured_form(v, StructuredVariant::veronese_power, rng);
    EXPECT_EQ(l.coeffs[1], 0u);
  }
  auto direct = structured_form(v, {{1, 1}}, StructuredVariant::veronese_power);
  EXPECT_EQ(direct.coeffs, (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(StructuredForm, ScalesMultilinearly) {
  PrimeField f;
  auto sv = segre_veronese(f, {2, 2}, {2, 1});
  for (std::uint64_t t = 0; t < 10; ++t) {
    Rng rng(derive_seed(9, t));
    std::vector<std::vector<std::uint32_t>> u{{f.random(rng), f.random(rng)}, {f.random(rng), f.random(rng)}};
    const auto lambda = f.random(rng);
    auto base = structured_form(sv, u, StructuredVariant::segre_veronese);
    auto first = u;
    for (auto& c : first[0]) c = f.mul(c, lambda);
    auto second = u;
    for (auto& c : second[1]) c = f.mul(c, lambda);
    auto scaled_first = structured_form(sv, first, StructuredVariant::segre_veronese);
    auto scaled_second = structured_form(sv, second, StructuredVariant::segre_veronese);
    for (std::size_t k = 0; k < sv.num_vars(); ++k) {
      EXPECT_EQ(scaled_first.coeffs[k], f.mul(f.mul(lambda, lambda), base.coeffs[k]));
      EXPECT_EQ(scaled_second.coeffs[k], f.mul(lambda, base.coeffs[k]));
    }
  }
}

TEST(StructuredVariantNames, RoundTrip) {
  for (auto v : {StructuredVariant::segre_product, StructuredVariant::veronese_power,
                 StructuredVariant::segre_veronese, StructuredVariant::chain_partial_sums})
    EXPECT_EQ(parse_structured_variant(to_string(v)), v);
  EXPECT_THROW(parse_structured_variant("cubes"), std::invalid_argument);
}
