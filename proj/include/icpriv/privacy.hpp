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

// Privacy levels seen by an eavesdropping client.
//
// After observing the encoding matrix, the eavesdropper's posterior over
// another client's (q, S) is supported on the decodable set D(A, s). Its
// entropies are bounded by log|D|, log|D^Q|, log|D^S| (tight exactly when
// the posterior is uniform over that set), and those sizes are in turn
// bounded by T C(m,s), m and C(m,s) for every matrix.
//
// The posterior engine handles the two-client model in which the
// eavesdropper has no request of its own, so the only conditioning is on
// the observed matrix and the side-information size.

#ifndef ICPRIV_PRIVACY_HPP_
#define ICPRIV_PRIVACY_HPP_

#include <map>
#include <span>
#include <vector>

#include "icpriv/combinatorics.hpp"
#include "icpriv/construction.hpp"
#include "icpriv/decodability.hpp"

namespace icpriv {

/// Entropies in bits, their universal bounds, and the derived gap
/// g = ub - h and ratio r = 2^-g for the joint, request and side-info views.
struct PrivacyReport {
  double h_joint = 0, h_q = 0, h_s = 0;
  double ub_joint = 0, ub_q = 0, ub_s = 0;
  double g_joint = 0, g_q = 0, g_s = 0;
  double r_joint = 0, r_q = 0, r_s = 0;
};

// Fills the bound, gap and ratio fields from the entropies.
PrivacyReport make_report(double h_joint, double h_q, double h_s, std::size_t m, std::size_t T,
                          std::size_t s);

struct UniversalBounds {
  BigInt joint;       // T C(m, s)
  BigInt requests;    // m
  BigInt side_infos;  // C(m, s)
};

// Throws ParameterError unless 1 <= s <= m - 1.
UniversalBounds ub_lemma2(std::size_t m, std::size_t T, std::size_t s);

// |D(A_base, s)| = k ell sum_{j = ell - T/k}^{ell - 1} C(ell-1, j) C(m-ell, s-j).
BigInt thm1_joint_count(const SchemeParams& p, std::size_t s);

// |D^Q(A_base, s)| = k ell for s >= s_min.
std::size_t thm1_request_count(const SchemeParams& p);

using PatternDistribution = std::map<SegmentPattern, Rational>;

/// p(A | q, S): for each pair, a distribution over segment patterns.
class StrategyTable {
 public:
  StrategyTable() = default;
  // Throws InconsistentInputError if a distribution has a negative weight or
  // does not sum to exactly 1.
  explicit StrategyTable(std::map<ClientPair, PatternDistribution> entries);

  const std::map<ClientPair, PatternDistribution>& entries() const { return entries_; }

  // Zero when the pair or pattern is absent.
  Rational probability(const ClientPair& pair, const SegmentPattern& pattern) const;

 private:
  std::map<ClientPair, PatternDistribution> entries_;
};

/// Exact posterior over the pairs, requests and side-information sets.
struct Posterior {
  DecodableSets decodable;
  std::map<ClientPair, Rational> joint;
  std::map<std::size_t, Rational> request;
  std::map<IndexSet, Rational> side_info;
};

// Bayes' rule with a uniform prior over {(q, S) : |S| = s, q not in S}.
// Throws InconsistentInputError if `observed` is not in `space`, if the
// strategy puts mass on a pattern outside `space` or on one in which the
// pair is not decodable, or if `observed` has zero probability.
Posterior compute_posterior(const SchemeParams& p, std::span<const SegmentPattern> space,
                            const StrategyTable& strategy, const SegmentPattern& observed,
                            std::size_t s);

PrivacyReport posterior_entropies(const SchemeParams& p, std::span<const SegmentPattern> space,
                                  const StrategyTable& strategy, const SegmentPattern& observed,
                                  std::size_t s);

struct UniformityFlags {
  bool joint = false;
  bool request = false;
  bool side_info = false;

  friend bool operator==(const UniformityFlags&, const UniformityFlags&) = default;
};

// Whether each posterior is exactly uniform over D, D^Q and D^S.
UniformityFlags check_uniformity(const Posterior& posterior);

UniformityFlags check_uniformity(const SchemeParams& p, std::span<const SegmentPattern> space,
                                 const StrategyTable& strategy, const SegmentPattern& observed,
                                 std::size_t s);

double log2_rational(const Rational& x);

// -sum p log2 p over exact probabilities.
template <typename Map>
double entropy_bits(const Map& distribution) {
  double h = 0;
  for (const auto& [key, prob] : distribution) {
    if (prob > 0) h -= to_double(prob) * log2_rational(prob);
  }
  return h;
}

}  // namespace icpriv

#endif  // ICPRIV_PRIVACY_HPP_
