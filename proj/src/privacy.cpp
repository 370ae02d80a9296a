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

#include <algorithm>
#include <cmath>

#include "icpriv/errors.hpp"

namespace icpriv {

namespace {

std::int64_t as_signed(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

double log2_rational(const Rational& x) {
  return log2_big(boost::multiprecision::numerator(x)) -
         log2_big(boost::multiprecision::denominator(x));
}

PrivacyReport make_report(double h_joint, double h_q, double h_s, std::size_t m, std::size_t T,
                          std::size_t s) {
  const UniversalBounds ub = ub_lemma2(m, T, s);
  PrivacyReport r;
  r.h_joint = h_joint;
  r.h_q = h_q;
  r.h_s = h_s;
  r.ub_joint = log2_big(ub.joint);
  r.ub_q = log2_big(ub.requests);
  r.ub_s = log2_big(ub.side_infos);
  r.g_joint = r.ub_joint - h_joint;
  r.g_q = r.ub_q - h_q;
  r.g_s = r.ub_s - h_s;
  r.r_joint = std::exp2(-r.g_joint);
  r.r_q = std::exp2(-r.g_q);
  r.r_s = std::exp2(-r.g_s);
  return r;
}

UniversalBounds ub_lemma2(std::size_t m, std::size_t T, std::size_t s) {
  if (s < 1 || s + 1 > m) throw ParameterError("side-information size must satisfy 1 <= s <= m - 1");
  if (T == 0) throw ParameterError("T must be positive");
  const BigInt c = binomial(as_signed(m), as_signed(s));
  return {c * T, BigInt(m), c};
}

BigInt thm1_joint_count(const SchemeParams& p, std::size_t s) {
  if (s + 1 > p.m()) throw ParameterError("side-information size must be at most m - 1");
  const std::int64_t ell = as_signed(p.ell());
  const std::int64_t r = as_signed(p.block_rows());
  BigInt per_request = 0;
  for (std::int64_t j = ell - r; j <= ell - 1; ++j) {
    per_request += binomial(ell - 1, j) * binomial(as_signed(p.m()) - ell, as_signed(s) - j);
  }
  return per_request * (p.k() * p.ell());
}

std::size_t thm1_request_count(const SchemeParams& p) { return p.k() * p.ell(); }

StrategyTable::StrategyTable(std::map<ClientPair, PatternDistribution> entries)
    : entries_(std::move(entries)) {
  for (const auto& [pair, dist] : entries_) {
    Rational total = 0;
    for (const auto& [pattern, prob] : dist) {
      if (prob < 0) throw InconsistentInputError("negative strategy probability");
      total += prob;
    }
    if (total != 1) throw InconsistentInputError("strategy distribution does not sum to 1");
  }
}

Rational StrategyTable::probability(const ClientPair& pair, const SegmentPattern& pattern) const {
  const auto it = entries_.find(pair);
  if (it == entries_.end()) return 0;
  const auto jt = it->second.find(pattern);
  return jt == it->second.end() ? Rational(0) : jt->second;
}

Posterior compute_posterior(const SchemeParams& p, std::span<const SegmentPattern> space,
                            const StrategyTable& strategy, const SegmentPattern& observed,
                            std::size_t s) {
  std::vector<SegmentPattern> sorted_space(space.begin(), space.end());
  std::sort(sorted_space.begin(), sorted_space.end());
  const auto in_space = [&](const SegmentPattern& pat) {
    return std::binary_search(sorted_space.begin(), sorted_space.end(), pat);
  };
  if (!in_space(observed)) throw InconsistentInputError("observed pattern is not in the space");

  std::map<SegmentPattern, FieldMatrix> matrices;
  const auto matrix_for = [&](const SegmentPattern& pat) -> const FieldMatrix& {
    auto it = matrices.find(pat);
    if (it == matrices.end()) it = matrices.emplace(pat, build_base_matrix(p, pat)).first;
    return it->second;
  };
  for (const auto& [pair, dist] : strategy.entries()) {
    if (pair.s() != s) continue;
    for (const auto& [pat, prob] : dist) {
      if (prob == 0) continue;
      if (!in_space(pat)) throw InconsistentInputError("strategy uses a pattern outside the space");
      if (!is_decodable(matrix_for(pat), pair)) {
        throw InconsistentInputError("strategy support includes a pattern that does not satisfy its pair");
      }
    }
  }

  Posterior post;
  post.decodable = enumerate_decodable(matrix_for(observed), s);
  // The uniform prior cancels in the normalization.
  Rational total = 0;
  for (const ClientPair& pair : post.decodable.pairs) {
    const Rational w = strategy.probability(pair, observed);
    if (w > 0) {
      post.joint[pair] = w;
      total += w;
    }
  }
  if (total == 0) throw InconsistentInputError("observed pattern has zero probability");
  for (auto& [pair, prob] : post.joint) {
    prob /= total;
    post.request[pair.q()] += prob;
    post.side_info[pair.side_info()] += prob;
  }
  return post;
}

PrivacyReport posterior_entropies(const SchemeParams& p, std::span<const SegmentPattern> space,
                                  const StrategyTable& strategy, const SegmentPattern& observed,
                                  std::size_t s) {
  const Posterior post = compute_posterior(p, space, strategy, observed, s);
  return make_report(entropy_bits(post.joint), entropy_bits(post.request),
                     entropy_bits(post.side_info), p.m(), p.T(), s);
}

namespace {

template <typename Key>
bool uniform_over(const std::map<Key, Rational>& dist, std::size_t support_size) {
  if (support_size == 0 || dist.size() != support_size) return false;
  const Rational expected(1, static_cast<long long>(support_size));
  return std::all_of(dist.begin(), dist.end(), [&](const auto& kv) { return kv.second == expected; });
}

}  // namespace

UniformityFlags check_uniformity(const Posterior& post) {
  // Posterior support is always within D, so a map entry for each element
  // of D with mass 1/|D| is exactly uniformity over D.
  return {uniform_over(post.joint, post.decodable.pairs.size()),
          uniform_over(post.request, post.decodable.requests.size()),
          uniform_over(post.side_info, post.decodable.side_infos.size())};
}

UniformityFlags check_uniformity(const SchemeParams& p, std::span<const SegmentPattern> space,
                                 const StrategyTable& strategy, const SegmentPattern& observed,
                                 std::size_t s) {
  return check_uniformity(compute_posterior(p, space, strategy, observed, s));
}

}  // namespace icpriv
