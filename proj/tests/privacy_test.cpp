// Copyright 2026 The icpriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "icpriv/privacy.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "icpriv/errors.hpp"
#include "icpriv/special_case.hpp"
#include "test_support.hpp"

namespace icpriv {
namespace {

using testing::random_matrix;

constexpr double kTol = 1e-9;
const FieldConfig kF257(257);

// Every pair with |S| = s and its first satisfying pattern in `space`.
StrategyTable first_pattern_strategy(const SpecialCaseParams& p, const std::vector<SegmentPattern>& space) {
  std::map<ClientPair, PatternDistribution> entries;
  for_each_combination(1, p.m(), p.s(), [&](const IndexSet& side) {
    for (std::size_t q = 1; q <= p.m(); ++q) {
      if (std::find(side.begin(), side.end(), q) != side.end()) continue;
      const ClientPair pair(q, side);
      for (const SegmentPattern& pat : space) {
        if (is_decodable_single_row_blocks(pat, pair)) {
          entries[pair][pat] = 1;
          break;
        }
      }
    }
  });
  return StrategyTable(std::move(entries));
}

// Random positive weights over each pair's satisfying patterns.
StrategyTable random_strategy(const SpecialCaseParams& p, const std::vector<SegmentPattern>& space,
                              std::mt19937_64& rng) {
  std::map<ClientPair, PatternDistribution> entries;
  for_each_combination(1, p.m(), p.s(), [&](const IndexSet& side) {
    for (std::size_t q = 1; q <= p.m(); ++q) {
      if (std::find(side.begin(), side.end(), q) != side.end()) continue;
      const ClientPair pair(q, side);
      PatternDistribution dist;
      Rational total = 0;
      for (const SegmentPattern& pat : space) {
        if (!is_decodable_single_row_blocks(pat, pair)) continue;
        const Rational w(static_cast<long long>(rng() % 5));
        if (w == 0) continue;
        dist[pat] = w;
        total += w;
      }
      if (total == 0) continue;
      for (auto& [pat, w] : dist) w /= total;
      entries[pair] = std::move(dist);
    }
  });
  return StrategyTable(std::move(entries));
}

TEST(UniversalBoundsTest, Examples) {
  const UniversalBounds a = ub_lemma2(30, 3, 3);
  EXPECT_EQ(a.joint, BigInt(12180));
  EXPECT_EQ(a.requests, BigInt(30));
  EXPECT_EQ(a.side_infos, BigInt(4060));
  const UniversalBounds b = ub_lemma2(6, 2, 2);
  EXPECT_EQ(b.joint, BigInt(30));
  EXPECT_EQ(b.requests, BigInt(6));
  EXPECT_EQ(b.side_infos, BigInt(15));
  EXPECT_THROW(ub_lemma2(6, 2, 0), ParameterError);
  EXPECT_THROW(ub_lemma2(6, 2, 6), ParameterError);
}

TEST(UniversalBoundsTest, HoldForRandomMatrices) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 3 + rng() % 5;
    const std::size_t T = 1 + rng() % 3;
    const std::size_t s = 1 + rng() % (m - 1);
    const FieldMatrix a = random_matrix(rng, static_cast<Eigen::Index>(T), static_cast<Eigen::Index>(m), kF257,
                                        0.2 + 0.6 * static_cast<double>(rng() % 2));
    const DecodableSets d = enumerate_decodable(a, s);
    const UniversalBounds ub = ub_lemma2(m, T, s);
    EXPECT_LE(BigInt(d.pairs.size()), ub.joint);
    EXPECT_LE(BigInt(d.requests.size()), ub.requests);
    EXPECT_LE(BigInt(d.side_infos.size()), ub.side_infos);
    for (const auto& [side, n] : d.counts) EXPECT_LE(n, T);
  }
}

TEST(UniversalBoundsTest, MdsGeneratorAttainsJointBoundWhenSideInfoIsLarge) {
  for (std::size_t m = 2; m <= 8; ++m) {
    for (std::size_t T = 1; T < m; ++T) {
      const FieldMatrix a = vandermonde_generator(m, T, kF257);
      for (std::size_t s = m - T; s < m; ++s) {
        const DecodableSets d = enumerate_decodable(a, s);
        EXPECT_EQ(BigInt(d.pairs.size()), BigInt(m) * binomial(static_cast<std::int64_t>(m - 1),
                                                               static_cast<std::int64_t>(s)));
      }
    }
  }
}

TEST(Thm1CountTest, Examples) {
  EXPECT_EQ(thm1_joint_count(SchemeParams(6, 2, 2, 2, 2), 2), BigInt(16));
  EXPECT_EQ(thm1_joint_count(SchemeParams(5, 2, 2, 1, 1), 1), BigInt(8));
  EXPECT_EQ(thm1_request_count(SchemeParams(6, 2, 2, 2, 2)), 4u);
  EXPECT_EQ(thm1_request_count(SchemeParams(5, 2, 2, 1, 1)), 2u);
}

TEST(Thm1CountTest, MatchesEnumerationOnGrid) {
  for (std::size_t m = 2; m <= 9; ++m) {
    for (std::size_t T : {1u, 2u, 4u}) {
      for (std::size_t k = 1; k <= T; ++k) {
        if (T % k) continue;
        for (std::size_t ell = 1; ell * k <= m; ++ell) {
          const std::size_t first_s = ell > T / k ? ell - T / k : 1;
          for (std::size_t s = std::max<std::size_t>(first_s, 1); s < m; ++s) {
            const SchemeParams p(m, T, k, ell, s);
            const DecodableSets d = enumerate_decodable(build_base_matrix(p, canonical_pattern(p)), s);
            ASSERT_EQ(BigInt(d.pairs.size()), thm1_joint_count(p, s)) << m << " " << T << " " << k << " " << ell
                                                                      << " " << s;
            ASSERT_EQ(d.requests.size(), thm1_request_count(p));
          }
        }
      }
    }
  }
}

TEST(StrategyTableTest, RejectsBadDistributions) {
  const SegmentPattern a(5, {{1}, {3}});
  const SegmentPattern b(5, {{1}, {4}});
  const ClientPair pair(1, {2});
  EXPECT_THROW(StrategyTable({{pair, {{a, Rational(1, 2)}}}}), InconsistentInputError);
  EXPECT_THROW(StrategyTable({{pair, {{a, Rational(3, 2)}, {b, Rational(-1, 2)}}}}), InconsistentInputError);
  const StrategyTable ok({{pair, {{a, Rational(1, 3)}, {b, Rational(2, 3)}}}});
  EXPECT_EQ(ok.probability(pair, b), Rational(2, 3));
  EXPECT_EQ(ok.probability(ClientPair(2, {1}), b), Rational(0));
}

TEST(PosteriorTest, SchemeStrategyIsUniformOverDecodablePairs) {
  const SpecialCaseParams sp(6, 2, 2, 2);
  const SchemeParams p = sp.scheme();
  const auto space = enumerate_patterns(p);
  const StrategyTable strategy = scheme_strategy(sp, space);
  const PrivacyReport r = posterior_entropies(p, space, strategy, canonical_pattern(p), 2);
  EXPECT_NEAR(r.h_joint, 4.0, kTol);
  EXPECT_NEAR(r.h_q, 2.0, kTol);
  EXPECT_NEAR(r.h_s, 3.5, kTol);
  EXPECT_NEAR(r.ub_joint, std::log2(30.0), kTol);
  EXPECT_NEAR(r.g_q, std::log2(6.0) - 2.0, kTol);
  EXPECT_NEAR(r.r_q, 4.0 / 6.0, kTol);
  EXPECT_EQ(check_uniformity(p, space, strategy, canonical_pattern(p), 2), (UniformityFlags{true, true, false}));
}

TEST(PosteriorTest, FullSegmentsGiveUniformSideInformation) {
  const SpecialCaseParams sp(6, 2, 3, 2);
  const SchemeParams p = sp.scheme();
  const auto space = enumerate_patterns(p);
  const StrategyTable strategy = scheme_strategy(sp, space);
  for (const SegmentPattern& observed : space) {
    EXPECT_EQ(check_uniformity(p, space, strategy, observed, 2), (UniformityFlags{true, true, true}));
  }
}

TEST(PosteriorTest, SinglePatternSpace) {
  const SchemeParams p(4, 4, 1, 4, 3);
  const std::vector<SegmentPattern> space = enumerate_patterns(p);
  ASSERT_EQ(space.size(), 1u);
  std::map<ClientPair, PatternDistribution> entries;
  for (std::size_t q = 1; q <= 4; ++q) {
    IndexSet side;
    for (std::size_t j = 1; j <= 4; ++j) {
      if (j != q) side.push_back(j);
    }
    entries[ClientPair(q, side)][space[0]] = 1;
  }
  const PrivacyReport r = posterior_entropies(p, space, StrategyTable(entries), space[0], 3);
  EXPECT_NEAR(r.h_joint, 2.0, kTol);
  EXPECT_NEAR(r.h_q, 2.0, kTol);
  EXPECT_NEAR(r.h_s, 2.0, kTol);
}

TEST(PosteriorTest, PairDistinguishingStrategyLeaksInformation) {
  const SpecialCaseParams sp(6, 2, 2, 2);
  const SchemeParams p = sp.scheme();
  const auto space = enumerate_patterns(p);
  const StrategyTable strategy = first_pattern_strategy(sp, space);
  std::size_t leaking = 0;
  for (const SegmentPattern& observed : space) {
    Posterior post;
    try {
      post = compute_posterior(p, space, strategy, observed, 2);
    } catch (const InconsistentInputError&) {
      continue;  // no pair maps here
    }
    const double full = std::log2(static_cast<double>(post.decodable.pairs.size()));
    EXPECT_LE(entropy_bits(post.joint), full + kTol);
    if (entropy_bits(post.joint) < full - 0.1) {
      EXPECT_FALSE(check_uniformity(post).joint);
      ++leaking;
    }
  }
  EXPECT_GT(leaking, 0u);
}

TEST(PosteriorTest, WeightedStrategyFallsBelowDecodableSetSize) {
  const SpecialCaseParams sp(6, 2, 2, 2);
  const SchemeParams p = sp.scheme();
  const auto space = enumerate_patterns(p);
  const StrategyTable uniform = scheme_strategy(sp, space);
  std::map<ClientPair, PatternDistribution> entries;
  for (const auto& [pair, dist] : uniform.entries()) {
    Rational total = 0;
    PatternDistribution weighted;
    std::size_t rank_in_list = 0;
    for (const auto& [pat, prob] : dist) {
      weighted[pat] = Rational(static_cast<long long>(++rank_in_list));
      total += weighted[pat];
    }
    for (auto& [pat, w] : weighted) w /= total;
    entries[pair] = std::move(weighted);
  }
  const StrategyTable strategy(std::move(entries));
  // The canonical pattern heads every list, so it alone stays uniform.
  EXPECT_NEAR(posterior_entropies(p, space, strategy, canonical_pattern(p), 2).h_joint, 4.0, kTol);
  std::size_t below = 0;
  for (const SegmentPattern& observed : space) {
    const double h = posterior_entropies(p, space, strategy, observed, 2).h_joint;
    EXPECT_LE(h, 4.0 + kTol);
    if (h < 4.0 - 1e-6) ++below;
  }
  EXPECT_GT(below, 0u);
}

TEST(PosteriorTest, EntropyInequalitiesForRandomStrategies) {
  std::mt19937_64 rng(42);
  for (const auto& [m, ell, s] : std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>{
           {5, 1, 1}, {5, 2, 1}, {6, 2, 2}, {5, 2, 2}}) {
    const SpecialCaseParams sp(m, 2, ell, s);
    const SchemeParams p = sp.scheme();
    const auto space = enumerate_patterns(p);
    for (int trial = 0; trial < 4; ++trial) {
      const StrategyTable strategy = random_strategy(sp, space, rng);
      for (std::size_t i = 0; i < space.size(); i += 1 + space.size() / 6) {
        Posterior post;
        try {
          post = compute_posterior(p, space, strategy, space[i], s);
        } catch (const InconsistentInputError&) {
          continue;  // zero-probability observation
        }
        const double hj = entropy_bits(post.joint);
        const double hq = entropy_bits(post.request);
        const double hs = entropy_bits(post.side_info);
        const auto& d = post.decodable;
        EXPECT_LE(hj, std::log2(static_cast<double>(d.pairs.size())) + kTol);
        EXPECT_LE(hq, std::log2(static_cast<double>(d.requests.size())) + kTol);
        EXPECT_LE(hs, std::log2(static_cast<double>(d.side_infos.size())) + kTol);
        EXPECT_LE(hq, hj + kTol);
        EXPECT_LE(hs, hj + kTol);
        EXPECT_LE(hj, hq + hs + kTol);
        const UniversalBounds ub = ub_lemma2(m, 2, s);
        EXPECT_LE(hj, std::log2(to_double(ub.joint)) + kTol);
      }
    }
  }
}

TEST(PosteriorTest, RejectsInconsistentInputs) {
  const SpecialCaseParams sp(5, 2, 1, 1);
  const SchemeParams p = sp.scheme();
  const auto space = enumerate_patterns(p);
  const SegmentPattern a(5, {{1}, {3}});
  const SegmentPattern b(5, {{2}, {3}});
  const std::vector<SegmentPattern> small{a};

  EXPECT_THROW(compute_posterior(p, small, StrategyTable({{ClientPair(1, {2}), {{a, 1}}}}), b, 1),
               InconsistentInputError);
  EXPECT_THROW(compute_posterior(p, small, StrategyTable({{ClientPair(2, {1}), {{b, 1}}}}), a, 1),
               InconsistentInputError);
  // Pair (2, {1}) is not decodable under a.
  EXPECT_THROW(compute_posterior(p, space, StrategyTable({{ClientPair(2, {1}), {{a, 1}}}}), a, 1),
               InconsistentInputError);
  // Nothing maps to b.
  EXPECT_THROW(compute_posterior(p, space, StrategyTable({{ClientPair(1, {2}), {{a, 1}}}}), b, 1),
               InconsistentInputError);
}

}  // namespace
}  // namespace icpriv
