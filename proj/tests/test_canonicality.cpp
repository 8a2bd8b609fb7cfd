#include <gtest/gtest.h>

#include "brute.hpp"
#include "coinsys/canonicality.hpp"

namespace coinsys {
namespace {

using testing::brute_min_counterexample;
using testing::brute_optimal_set;
using testing::for_each_system;

std::vector<Count> counts_of(const Representation& rep) {
  return {rep.counts().begin(), rep.counts().end()};
}

TEST(Oracle, NamedExamples) {
  EXPECT_EQ(min_counterexample_oracle(CoinSystem{1, 3, 4}), Value{6});
  EXPECT_EQ(min_counterexample_oracle(CoinSystem{1, 5, 10, 25}), std::nullopt);
  EXPECT_EQ(min_counterexample_oracle(CoinSystem{1, 5, 15, 20}), Value{30});
  EXPECT_EQ(min_counterexample_oracle(CoinSystem{1, 2, 5, 6}), Value{10});
  EXPECT_EQ(min_counterexample_oracle(CoinSystem{1}), std::nullopt);
  EXPECT_EQ(min_counterexample_oracle(CoinSystem{1, 1000}), std::nullopt);
}

// The bounded scan must agree with an unbounded scan well past the range.
TEST(Oracle, MatchesUnboundedScan) {
  for (std::size_t n = 3; n <= 4; ++n) {
    for_each_system(n, 14, [](const CoinSystem& c) {
      ASSERT_EQ(min_counterexample_oracle(c), brute_min_counterexample(c, 3 * c.largest()))
          << c.to_string();
    });
  }
}

TEST(IsOrderly, NamedExamples) {
  EXPECT_TRUE(is_orderly(CoinSystem{1, 5, 10, 25}).orderly);
  EXPECT_FALSE(is_orderly(CoinSystem{1, 5, 10, 25}).witness.has_value());
  EXPECT_TRUE(is_orderly(CoinSystem{1, 2, 3, 5, 6, 10}).orderly);

  const CanonicalityReport r = is_orderly(CoinSystem{1, 2, 5, 6});
  ASSERT_FALSE(r.orderly);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->value, 10u);
  EXPECT_EQ(counts_of(r.witness->greedy), (std::vector<Count>{0, 2, 0, 1}));
  EXPECT_EQ(counts_of(r.witness->optimal), (std::vector<Count>{0, 0, 2, 0}));
  EXPECT_EQ(r.witness->greedy_count, 3u);
  EXPECT_EQ(r.witness->opt_count, 2u);

  const CanonicalityReport s = is_orderly(CoinSystem{1, 5, 15, 20});
  ASSERT_TRUE(s.witness);
  EXPECT_EQ(s.witness->value, 30u);
  EXPECT_EQ(s.witness->greedy_count, 3u);
  EXPECT_EQ(s.witness->opt_count, 2u);
  EXPECT_EQ(counts_of(s.witness->optimal), (std::vector<Count>{0, 0, 2, 0}));
}

TEST(Pearson, CandidatesFollowTheConstruction) {
  // (1,3,4): k=2 gives c_3 - 1 = 3 -> greedy (0,1,0); p=1 -> (0,2,0) = 6.
  const auto candidates = pearson_candidates(CoinSystem{1, 3, 4});
  ASSERT_EQ(candidates.size(), 1u);
  EXPECT_EQ(candidates[0].source_k, 2u);
  EXPECT_EQ(candidates[0].p, 1u);
  EXPECT_EQ(candidates[0].value, 6u);
  EXPECT_EQ(counts_of(candidates[0].vector), (std::vector<Count>{0, 2, 0}));

  // n values give sum over k of (k - 1) candidates.
  EXPECT_EQ(pearson_candidates(CoinSystem{1, 2, 5, 6, 10, 11}).size(), 1u + 2 + 3 + 4);
  EXPECT_TRUE(pearson_candidates(CoinSystem{1, 2}).empty());
}

TEST(Pearson, CandidateValuesMatchVectors) {
  for_each_system(5, 20, [](const CoinSystem& c) {
    for (const PearsonCandidate& cand : pearson_candidates(c)) {
      ASSERT_EQ(cand.vector.value(), cand.value);
      ASSERT_LT(cand.p, cand.source_k);
      ASSERT_GE(cand.p, 1u);
    }
  });
}

TEST(Pearson, AgreesWithOracleOnSmallSystems) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for_each_system(n, 24, [](const CoinSystem& c) {
      const auto oracle = min_counterexample_oracle(c);
      ASSERT_EQ(pearson_orderly(c), !oracle) << c.to_string();
      ASSERT_EQ(pearson_min_counterexample(c), oracle) << c.to_string();
    });
  }
}

// The reported optimal representation is the lexicographically smallest
// among all optimal representations of the witness.
TEST(IsOrderly, WitnessIsLexSmallestOptimal) {
  for_each_system(4, 16, [](const CoinSystem& c) {
    const CanonicalityReport r = is_orderly(c);
    if (r.orderly) return;
    const auto all = brute_optimal_set(c, r.witness->value);
    ASSERT_EQ(counts_of(r.witness->optimal), all.front()) << c.to_string();
    ASSERT_EQ(r.witness->opt_count, r.witness->optimal.size());
    ASSERT_GT(r.witness->greedy_count, r.witness->opt_count);
  });
}

TEST(OnePoint, NamedExamples) {
  const OnePointVerdict a = one_point_check(CoinSystem{1, 5, 10}, 25);
  EXPECT_EQ(a.m, 3u);
  EXPECT_EQ(a.greedy_at_m_cn1, 2u);
  EXPECT_TRUE(a.orderly);

  const OnePointVerdict b = one_point_check(CoinSystem{1, 3}, 4);
  EXPECT_EQ(b.m, 2u);
  EXPECT_EQ(b.greedy_at_m_cn1, 3u);
  EXPECT_FALSE(b.orderly);

  const OnePointVerdict c = one_point_check(CoinSystem{1, 2}, 4);
  EXPECT_EQ(c.m, 2u);
  EXPECT_EQ(c.greedy_at_m_cn1, 1u);
  EXPECT_TRUE(c.orderly);
}

TEST(OnePoint, EnforcesPreconditions) {
  EXPECT_THROW(one_point_check(CoinSystem{1, 5}, 5), std::invalid_argument);
  EXPECT_THROW(one_point_check(CoinSystem{1, 3, 4}, 9), std::invalid_argument);
  EXPECT_NO_THROW(one_point_check(CoinSystem{1, 3, 4}, 9, PrefixCheck::trusted));
}

TEST(OnePoint, AgreesWithOracleOnExtensions) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for_each_system(n, 18, [](const CoinSystem& prefix) {
      if (min_counterexample_oracle(prefix)) return;
      for (Value next = prefix.largest() + 1; next <= 30; ++next) {
        const bool expected = !min_counterexample_oracle(prefix.extended(next));
        ASSERT_EQ(one_point_check(prefix, next).orderly, expected)
            << prefix.to_string() << " + " << next;
      }
    });
  }
}

TEST(Tight, NamedExamples) {
  EXPECT_TRUE(is_tight(CoinSystem{1, 3, 4}));
  EXPECT_TRUE(is_tight(CoinSystem{1, 5, 10, 25}));
  EXPECT_TRUE(is_tight(CoinSystem{1, 2, 5, 6}));
  EXPECT_TRUE(is_tight(CoinSystem{1, 2, 5, 6, 10}.prefix(4)));
  // 6 is a counterexample below 20.
  EXPECT_FALSE(is_tight(CoinSystem{1, 3, 4, 20}));
}

TEST(SumPair, NamedExamples) {
  // 5 + 5 = 10 > 6 is a counterexample of (1,2,5,6).
  EXPECT_EQ(sum_pair_counterexample(CoinSystem{1, 2, 5, 6}),
            (std::pair<std::size_t, std::size_t>{2, 2}));
  EXPECT_EQ(sum_pair_counterexample(CoinSystem{1, 3, 5, 8, 10, 15}), std::nullopt);

  const auto pair = sum_pair_counterexample(CoinSystem{1, 2, 4, 5, 7});
  ASSERT_TRUE(pair);
  const CoinSystem c{1, 2, 4, 5, 7};
  EXPECT_EQ(c[pair->first] + c[pair->second], 10u);
  EXPECT_THROW(sum_pair_counterexample(CoinSystem{1, 3, 4}), std::invalid_argument);
}

TEST(SumPair, ReturnedPairsAreCounterexamples) {
  for_each_system(5, 18, [](const CoinSystem& c) {
    const auto pair = sum_pair_counterexample(c);
    if (!pair) return;
    const Value sum = c[pair->first] + c[pair->second];
    ASSERT_GT(sum, c.largest());
    ASSERT_NE(greedy_count(c, sum), opt_count(c, sum));
  });
}

TEST(Filters, NamedExamples) {
  EXPECT_FALSE(gap_filter(CoinSystem{1, 5, 8}));
  EXPECT_TRUE(gap_filter(CoinSystem{1, 5, 10, 25}));
  EXPECT_TRUE(gap_filter(CoinSystem{1, 2, 3}));

  EXPECT_FALSE(jump_filter(CoinSystem{1, 3, 7, 9}));
  EXPECT_TRUE(jump_filter(CoinSystem{1, 2, 4, 8}));
  EXPECT_TRUE(jump_filter(CoinSystem{1, 3, 7, 12, 17}));
}

TEST(Filters, RejectOnlyNonOrderlySystems) {
  for (std::size_t n = 3; n <= 5; ++n) {
    for_each_system(n, 26, [](const CoinSystem& c) {
      if (!gap_filter(c) || !jump_filter(c)) {
        ASSERT_TRUE(min_counterexample_oracle(c).has_value()) << c.to_string();
      }
    });
  }
}

TEST(Disjointness, NamedExamples) {
  const auto a = chang_disjointness(CoinSystem{1, 3, 4});
  EXPECT_EQ(a.status, DisjointnessResult::Status::holds);
  EXPECT_EQ(a.counterexample, Value{6});

  EXPECT_EQ(chang_disjointness(CoinSystem{1, 5, 10, 25}).status,
            DisjointnessResult::Status::vacuous);

  const auto c = chang_disjointness(CoinSystem{1, 5, 15, 20});
  EXPECT_EQ(c.status, DisjointnessResult::Status::holds);
  EXPECT_EQ(c.counterexample, Value{30});
  EXPECT_FALSE(c.violating_optimal.has_value());
}

}  // namespace
}  // namespace coinsys
