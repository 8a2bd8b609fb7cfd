#include <gtest/gtest.h>

#include <set>

#include "coinsys/canonicality.hpp"
#include "coinsys/characterize.hpp"
#include "coinsys/families.hpp"

namespace coinsys {
namespace {

TEST(FixedGap, NamedExamples) {
  EXPECT_EQ(gen_fixed_gap({6, 5, 3, 2, 7}), (CoinSystem{1, 3, 5, 12, 14, 23}));
  EXPECT_EQ(gen_fixed_gap({11, 8, 2, 3, 1}),
            (CoinSystem{1, 2, 5, 6, 9, 10, 13, 14, 18, 22, 26}));
  EXPECT_EQ(gen_fixed_gap({12, 9, 4, 3, 11}),
            (CoinSystem{1, 4, 7, 18, 21, 32, 35, 46, 49, 63, 77, 91}));
}

TEST(FixedGap, RejectsInvalidSpecs) {
  EXPECT_THROW(gen_fixed_gap({6, 3, 3, 2, 7}), std::invalid_argument);   // ell <= 3
  EXPECT_THROW(gen_fixed_gap({6, 6, 3, 2, 7}), std::invalid_argument);   // ell >= n
  EXPECT_THROW(gen_fixed_gap({6, 5, 1, 2, 7}), std::invalid_argument);   // x < 2
  EXPECT_THROW(gen_fixed_gap({6, 5, 3, 2, 2}), std::invalid_argument);   // equal deltas
  EXPECT_THROW(gen_fixed_gap({6, 5, 3, 0, 7}), std::invalid_argument);   // zero delta
}

TEST(Generators, NamedExamples) {
  EXPECT_EQ(gen_D(3, 3), (CoinSystem{1, 2, 5, 6, 9, 10, 13, 14, 18, 22, 26}));
  EXPECT_EQ(gen_D(1, 2), (CoinSystem{1, 2, 4, 5, 8}));
  EXPECT_EQ(gen_D(1, 4), (CoinSystem{1, 2, 6, 7, 12}));
  EXPECT_EQ(gen_E(4, 3, 4), (CoinSystem{1, 4, 7, 18, 21, 32, 35, 46, 49, 63, 77, 91}));
  EXPECT_EQ(gen_E(2, 3, 4), (CoinSystem{1, 4, 7, 18, 21, 35}));
  EXPECT_EQ(gen_E(2, 2, 3), (CoinSystem{1, 3, 5, 8, 10, 15}));
  EXPECT_EQ(gen_F(4, 3, 4), (CoinSystem{1, 4, 8, 18, 22, 32, 36, 46, 50, 64, 78, 92}));
  EXPECT_EQ(gen_F(2, 3, 4), (CoinSystem{1, 4, 8, 18, 22, 36}));
  EXPECT_EQ(gen_F(2, 2, 2), (CoinSystem{1, 2, 4, 5, 7, 10}));
}

TEST(Generators, RejectOutOfBoundParameters) {
  EXPECT_THROW(gen_D(0, 3), std::invalid_argument);
  EXPECT_THROW(gen_D(1, 1), std::invalid_argument);
  EXPECT_THROW(gen_E(1, 2, 3), std::invalid_argument);
  EXPECT_THROW(gen_E(2, 3, 3), std::invalid_argument);
  EXPECT_THROW(gen_E(2, 1, 3), std::invalid_argument);
  EXPECT_THROW(gen_F(2, 4, 3), std::invalid_argument);
  EXPECT_THROW(gen_F(2, 1, 3), std::invalid_argument);
}

TEST(Generators, AgreeWithFixedGapMapping) {
  for (Value r = 1; r <= 5; ++r) {
    for (Value a = 2; a <= 8; ++a) {
      const FamilyParams p{Family::D, r, a};
      EXPECT_EQ(gen_D(r, a), gen_fixed_gap({3 * r + 2, 2 * r + 2, 2, a, 1}));
      EXPECT_EQ(generate(p), gen_D(r, a));
    }
  }
  for (Value r = 2; r <= 4; ++r) {
    for (Value a = 3; a <= 8; ++a) {
      for (Value m = 2; m < a; ++m) {
        EXPECT_EQ(gen_E(r, m, a),
                  gen_fixed_gap({3 * r, 2 * r + 1, a, a - 1, (m - 1) * (2 * a - 1) - (a - 1)}));
      }
    }
    for (Value a = 2; a <= 8; ++a) {
      for (Value m = 2; m <= a; ++m) {
        EXPECT_EQ(gen_F(r, m, a),
                  gen_fixed_gap({3 * r, 2 * r + 1, a, a, (m - 1) * (2 * a - 1) - a}));
      }
    }
  }
}

TEST(TargetPattern, NamedExamples) {
  EXPECT_TRUE(verify_target_pattern(gen_D(3, 3)));
  EXPECT_FALSE(verify_target_pattern(CoinSystem{1, 5, 10, 25, 50}));
  EXPECT_TRUE(verify_target_pattern(gen_E(2, 3, 4)));
  EXPECT_THROW(verify_target_pattern(CoinSystem{1, 2, 5, 6}), std::invalid_argument);
}

TEST(Lemma, NamedExamples) {
  const LemmaReport d = lemma_prefix_check(fixed_gap_spec({Family::D, 3, 3}));
  ASSERT_EQ(d.prefixes.size(), 6u);
  EXPECT_EQ(d.prefixes.front().length, 5u);
  EXPECT_EQ(d.prefixes.back().length, 10u);
  EXPECT_TRUE(d.holds());

  const LemmaReport e = lemma_prefix_check(fixed_gap_spec({Family::E, 4, 4, 3}));
  ASSERT_EQ(e.prefixes.size(), 7u);
  EXPECT_EQ(e.prefixes.back().length, 11u);
  EXPECT_TRUE(e.holds());
  for (const LemmaPrefix& p : e.prefixes) EXPECT_GE(p.length, 5u);
}

TEST(Lemma, NamedWitnessesAreTwiceAnEarlierCoin) {
  const FixedGapSpec spec = fixed_gap_spec({Family::D, 3, 3});
  const CoinSystem c = gen_fixed_gap(spec);
  for (const LemmaPrefix& p : lemma_prefix_check(spec).prefixes) {
    const Value expected = p.length <= spec.ell ? 2 * c[p.length - 2] : 2 * c[spec.ell - 2];
    EXPECT_EQ(p.named_witness, expected) << "k=" << p.length;
  }
}

TEST(Lemma, RejectsSpecsOutsideHypotheses) {
  // Even ell requires x + delta1 > delta2 + 1.
  EXPECT_THROW(lemma_prefix_check({8, 6, 2, 1, 5}), std::invalid_argument);
}

TEST(Membership, NamedExamples) {
  EXPECT_EQ(family_membership(CoinSystem{1, 2, 5, 6, 9, 10, 13, 14, 18, 22, 26}),
            (FamilyParams{Family::D, 3, 3}));
  EXPECT_EQ(family_membership(CoinSystem{1, 4, 8, 18, 22, 32, 36, 46, 50, 64, 78, 92}),
            (FamilyParams{Family::F, 4, 4, 3}));
  EXPECT_EQ(family_membership(CoinSystem{1, 5, 10, 25}), std::nullopt);
  EXPECT_EQ(family_membership(CoinSystem{1, 2, 5, 6, 9, 10, 13, 14, 18, 22, 27}), std::nullopt);
}

TEST(Membership, RoundTripsAndSeparatesGridPoints) {
  std::set<CoinSystem> seen;
  auto check = [&](const FamilyParams& p) {
    const CoinSystem c = generate(p);
    EXPECT_EQ(family_membership(c), p) << c.to_string();
    EXPECT_TRUE(seen.insert(c).second) << "duplicate " << c.to_string();
  };
  for (Value r = 1; r <= 5; ++r)
    for (Value a = 2; a <= 8; ++a) check({Family::D, r, a});
  for (Value r = 2; r <= 4; ++r)
    for (Value a = 2; a <= 8; ++a)
      for (Value m = 2; m <= a; ++m) {
        if (m < a) check({Family::E, r, a, m});
        check({Family::F, r, a, m});
      }
}

TEST(Bridge, SixValueMembersClassifyAsCase2) {
  for (Value a = 2; a <= 8; ++a) {
    for (Value m = 2; m <= a; ++m) {
      if (m < a) {
        const SixValueClass e = classify6(gen_E(2, m, a));
        EXPECT_EQ(e.label, SixValueCase::case_2a) << a << "," << m;
        EXPECT_EQ(e.params->a, a);
        EXPECT_EQ(e.params->m, m);
      }
      const SixValueClass f = classify6(gen_F(2, m, a));
      EXPECT_EQ(f.label, SixValueCase::case_2b) << a << "," << m;
      EXPECT_EQ(f.params->m, m);
    }
  }
}

TEST(FamilyNames, ParseAndPrint) {
  EXPECT_EQ(parse_family("E"), Family::E);
  EXPECT_EQ(parse_family("Q"), std::nullopt);
  EXPECT_EQ(to_string(Family::F), "F");
}

}  // namespace
}  // namespace coinsys
