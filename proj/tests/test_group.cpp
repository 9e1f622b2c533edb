#include "support.hpp"

#include <welded/invariants.hpp>

#include <gtest/gtest.h>

using namespace welded;
using namespace testing_support;

namespace {

GroupPresentation on_components(std::size_t n) {
  GroupPresentation p;
  p.component_count = n;
  for (std::size_t i = 0; i < n; ++i) p.generators.push_back({i, i});
  return p;
}

Word random_word(std::mt19937_64& rng, std::size_t gens, std::size_t len) {
  Word w;
  for (std::size_t i = 0; i < len; ++i)
    w.push({static_cast<std::size_t>(rng() % gens), rng() % 2 ? 1 : -1});
  return w;
}

}  // namespace

TEST(Wirtinger, Shapes) {
  const auto u = wirtinger_presentation(fixture("unknot"));
  EXPECT_EQ(u.generator_count(), 1u);
  EXPECT_TRUE(u.relators.empty());
  const auto tre = wirtinger_presentation(fixture("trefoil"));
  EXPECT_EQ(tre.generator_count(), 3u);
  EXPECT_EQ(tre.relators.size(), 3u);
  const auto hopf = wirtinger_presentation(fixture("hopf"));
  EXPECT_EQ(hopf.generator_count(), 2u);
  EXPECT_EQ(hopf.component_count, 2u);
  EXPECT_EQ(hopf.generators[0].component, 0u);
  EXPECT_EQ(hopf.generators[1].component, 1u);
}

TEST(Wirtinger, RelatorForm) {
  // every relator is c^-1 b^-e a b^e with e = +-1
  for (const auto& name : all_fixtures()) {
    const auto d = fixture(name);
    const auto p = wirtinger_presentation(d);
    ASSERT_EQ(p.relators.size(), d.crossing_count()) << name;
    for (const auto& r : p.relators) {
      EXPECT_LE(r.size(), 4u) << name;
      EXPECT_EQ(r.letters().front().exponent, -1) << name;
    }
  }
}

TEST(Generalized, WeightOneIsWirtinger) {
  for (const auto& name : all_fixtures()) {
    const auto d = fixture(name);
    EXPECT_EQ(generalized_presentation(d, 1), wirtinger_presentation(d)) << name;
  }
}

TEST(Generalized, TrefoilWeights) {
  const auto d = fixture("trefoil");
  const auto p0 = generalized_presentation(d, 0);
  for (const auto& r : p0.relators) {
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r.letters()[0].exponent, -1);
    EXPECT_EQ(r.letters()[1].exponent, 1);
  }
  const auto p2 = generalized_presentation(d, 2);
  for (const auto& r : p2.relators) {
    // c^-1 b^-2 a b^2
    ASSERT_EQ(r.size(), 6u);
    const auto& l = r.letters();
    EXPECT_EQ(l[1], l[2]);
    EXPECT_EQ(l[1].exponent, -1);
    EXPECT_EQ(l[4], l[5]);
    EXPECT_EQ(l[4].exponent, 1);
    EXPECT_EQ(l[1].generator, l[4].generator);
  }
}

TEST(Simplify, Examples) {
  const auto p = simplify(parse_presentation("< a, b | b^-1 a >"));
  EXPECT_EQ(p.generator_count(), 1u);
  EXPECT_TRUE(p.relators.empty());
  const auto tre = simplify(wirtinger_presentation(fixture("trefoil")));
  EXPECT_LE(tre.generator_count(), 2u);
  EXPECT_EQ(simplify(wirtinger_presentation(fixture("unknot"))).generator_count(), 1u);
}

TEST(Simplify, PreservesHomCountsAndAlexander) {
  const auto s3 = FiniteTarget::symmetric(3);
  const auto s4 = FiniteTarget::symmetric(4);
  for (const auto& name : all_fixtures()) {
    const auto p = wirtinger_presentation(fixture(name));
    const auto q = simplify(p);
    EXPECT_LE(q.generator_count(), p.generator_count());
    EXPECT_EQ(count_homs(q, s3), count_homs(p, s3)) << name;
    EXPECT_EQ(count_homs(q, s4), count_homs(p, s4)) << name;
    const AlexanderOptions raw{.simplify = false};
    for (std::size_t k = 1; k <= 2; ++k) {
      EXPECT_EQ(alexander_of_presentation(q, k, VariableMode::Single, raw),
                alexander_of_presentation(p, k, VariableMode::Single, raw))
          << name << " k=" << k;
    }
    EXPECT_EQ(alexander_of_presentation(q, 1, VariableMode::Multi, raw),
              alexander_of_presentation(p, 1, VariableMode::Multi, raw))
        << name;
  }
}

TEST(Fox, Examples) {
  const Word a = Word::letter(0), b = Word::letter(1);
  EXPECT_EQ(fox_derivative(a * b, 0), (GroupRingElement{{Word{}, 1}}));
  EXPECT_EQ(fox_derivative(a * b, 1), (GroupRingElement{{a, 1}}));
  EXPECT_EQ(fox_derivative(a.inverse(), 0), (GroupRingElement{{a.inverse(), -1}}));
  EXPECT_TRUE(fox_derivative(b, 0).empty());

  const auto p = on_components(2);
  const Word r = b.inverse() * a * b;
  const auto d = abelianize(p, fox_derivative(r, 1), VariableMode::Multi);
  const auto one2 = LaurentPolynomial::one(2);
  EXPECT_EQ(d, tv(2, 1, -1) * (tv(2, 0) - one2));
}

TEST(Fox, ProductRuleRandomized) {
  std::mt19937_64 rng(17);
  const auto p = on_components(3);
  for (int i = 0; i < 200; ++i) {
    const Word u = random_word(rng, 3, rng() % 7);
    const Word v = random_word(rng, 3, rng() % 7);
    const std::size_t x = rng() % 3;
    const auto phi_u = abelianize(p, GroupRingElement{{u, 1}}, VariableMode::Multi);
    const auto lhs = abelianize(p, fox_derivative(u * v, x), VariableMode::Multi);
    const auto rhs = abelianize(p, fox_derivative(u, x), VariableMode::Multi) +
                     phi_u * abelianize(p, fox_derivative(v, x), VariableMode::Multi);
    ASSERT_EQ(lhs, rhs) << to_string(u) << " | " << to_string(v);
  }
}

// Fundamental formula: sum_j (dr/dx_j)(x_j - 1) = r - 1, which vanishes
// once the relator is abelianized.
TEST(Jacobian, FundamentalFormula) {
  for (const auto& name : all_fixtures()) {
    const auto p = wirtinger_presentation(fixture(name));
    for (auto mode : {VariableMode::Single, VariableMode::Multi}) {
      const auto j = jacobian(p, mode);
      ASSERT_EQ(j.rows(), p.relators.size());
      ASSERT_EQ(j.cols(), p.generator_count());
      const std::size_t arity = j.arity();
      for (std::size_t r = 0; r < j.rows(); ++r) {
        LaurentPolynomial sum(arity);
        for (std::size_t c = 0; c < j.cols(); ++c) {
          const auto x = LaurentPolynomial::monomial(abelian_image(p, c, mode));
          sum = sum + j(r, c) * (x - LaurentPolynomial::one(arity));
        }
        EXPECT_TRUE(sum.is_zero()) << name << " row " << r;
      }
    }
  }
}

TEST(Jacobian, MatchesFoxDerivatives) {
  const auto p = wirtinger_presentation(fixture("borromean"));
  const auto j = jacobian(p, VariableMode::Multi);
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (std::size_t c = 0; c < p.generator_count(); ++c)
      EXPECT_EQ(j(r, c), abelianize(p, fox_derivative(p.relators[r], c), VariableMode::Multi));
}

TEST(Abelianization, FreeRankIsComponentCount) {
  for (const auto& name : all_fixtures()) {
    const auto d = fixture(name);
    const auto a = abelianization(wirtinger_presentation(d));
    EXPECT_EQ(a.free_rank, d.component_count()) << name;
    EXPECT_TRUE(a.torsion.empty()) << name;
  }
}

TEST(Abelianization, Torsion) {
  const auto a = abelianization(parse_presentation("< a | a^2 >"));
  EXPECT_EQ(a.free_rank, 0u);
  EXPECT_EQ(a.torsion, (std::vector<BigInt>{2}));
  const auto b = abelianization(parse_presentation("< x, y | x^2 y^-4, x^4 y^2 >"));
  EXPECT_EQ(b.free_rank, 0u);
  EXPECT_EQ(b.torsion, (std::vector<BigInt>{2, 10}));
}

TEST(PresentationText, RoundTrip) {
  for (const auto& name : all_fixtures()) {
    const auto p = wirtinger_presentation(fixture(name));
    const auto q = parse_presentation(to_string(p));
    EXPECT_EQ(q.generator_count(), p.generator_count()) << name;
    EXPECT_EQ(q.relators, p.relators) << name;
  }
  EXPECT_EQ(to_string(parse_presentation("< a, b | a b^-2 a >")), "< x1, x2 | x1 x2^-2 x1 >");
  EXPECT_THROW((void)parse_presentation("a, b | a"), Error);
  EXPECT_THROW((void)parse_presentation("< a | b >"), Error);
  EXPECT_THROW((void)parse_presentation("< a, a | a >"), Error);
}

TEST(HomCount, Examples) {
  const auto s3 = FiniteTarget::symmetric(3);
  EXPECT_EQ(count_homs(wirtinger_presentation(fixture("unknot")), s3), 6u);
  // Z^2 into S3: commuting pairs
  EXPECT_EQ(count_homs(wirtinger_presentation(fixture("hopf")), s3), 18u);
  // 6 constant maps plus 6 non-trivial 3-colourings
  EXPECT_EQ(count_homs(wirtinger_presentation(fixture("trefoil")), s3), 12u);
  EXPECT_EQ(count_homs(parse_presentation("< a | a^2 >"), s3), 4u);
  EXPECT_EQ(count_homs(parse_presentation("< | >"), s3), 1u);
}

TEST(HomCount, TargetErrors) {
  EXPECT_EQ(parse_target("S4").order(), 24u);
  EXPECT_THROW((void)parse_target("Q8"), Error);
  EXPECT_THROW((void)parse_target("S0"), Error);
  try {
    HomCountOptions o;
    o.max_target_order = 10;
    (void)count_homs(parse_presentation("< a | >"), FiniteTarget::symmetric(4), o);
    FAIL() << "expected TargetTooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TargetTooLarge);
  }
}

TEST(HomCount, BruteForceOracle) {
  const auto s3 = FiniteTarget::symmetric(3);
  std::size_t checked = 0;
  for (const auto& name : all_fixtures()) {
    const auto d = fixture(name);
    for (int m : {1, 2, -1}) {
      for (const auto& p : {generalized_presentation(d, m), simplify(generalized_presentation(d, m))}) {
        if (p.generator_count() > 3) continue;
        ASSERT_EQ(count_homs(p, s3), brute_force_homs(p, s3)) << name << " m=" << m;
        HomCountOptions plain;
        plain.use_conjugacy_classes = false;
        ASSERT_EQ(count_homs(p, s3, plain), brute_force_homs(p, s3)) << name << " m=" << m;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 10u);
}

TEST(HomCount, RandomPresentationsOracle) {
  std::mt19937_64 rng(606);
  const auto s3 = FiniteTarget::symmetric(3);
  for (int i = 0; i < 100; ++i) {
    GroupPresentation p;
    const std::size_t g = 1 + rng() % 3;
    for (std::size_t k = 0; k < g; ++k) p.generators.push_back({k, 0});
    const std::size_t rels = rng() % 4;
    for (std::size_t k = 0; k < rels; ++k) p.relators.push_back(random_word(rng, g, 1 + rng() % 8));
    ASSERT_EQ(count_homs(p, s3), brute_force_homs(p, s3)) << to_string(p);
  }
}
