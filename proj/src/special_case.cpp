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

#include "icpriv/special_case.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "icpriv/errors.hpp"

namespace icpriv {

namespace {

std::int64_t sg(std::size_t v) { return static_cast<std::int64_t>(v); }

// sum_{x=1}^{i} (-1)^(i-x) C(i-1, x-1) log2 x
double alternating_log_sum(std::size_t i) {
  double total = 0;
  for (std::size_t x = 1; x <= i; ++x) {
    const double term = to_double(binomial(sg(i) - 1, sg(x) - 1)) * std::log2(static_cast<double>(x));
    total += ((i - x) % 2 == 0) ? term : -term;
  }
  return total;
}

// B as a function of the number d = T - x of free segments.
BigInt b_free(const SpecialCaseParams& p, std::size_t d) { return appendix_B_value(p, p.T() - d); }

}  // namespace

SpecialCaseParams::SpecialCaseParams(std::size_t m, std::size_t T, std::size_t ell, std::size_t s,
                                     const FieldConfig& field)
    : m_(m), T_(T), ell_(ell), s_(s), field_(field) {
  if (T == 0) throw ParameterError("T must be positive");
  if (s < 1 || s + 1 > m) throw ParameterError("side-information size must satisfy 1 <= s <= m - 1");
  if (ell < 1 || ell > s + 1 || ell > m / T) {
    throw ParameterError("segment width must satisfy 1 <= ell <= min(s + 1, floor(m/T)); got m=" +
                         std::to_string(m) + " T=" + std::to_string(T) + " ell=" +
                         std::to_string(ell) + " s=" + std::to_string(s));
  }
}

BigInt count_satisfying_K(const SpecialCaseParams& p) {
  std::vector<std::int64_t> parts(p.T() - 1, sg(p.ell()));
  parts.push_back(sg(p.m() - p.T() * p.ell()));
  return BigInt(p.T()) * binomial(sg(p.s()), sg(p.ell()) - 1) * multinomial(parts);
}

SegmentPattern sample_satisfying_pattern(const SpecialCaseParams& p, const ClientPair& pair,
                                         std::uint64_t seed) {
  if (pair.s() != p.s()) throw ParameterError("pair side information has the wrong size");
  if (pair.q() < 1 || pair.q() > p.m() ||
      (!pair.side_info().empty() && pair.side_info().back() > p.m()) ||
      (!pair.side_info().empty() && pair.side_info().front() < 1)) {
    throw ParameterError("pair index outside [1, m]");
  }
  std::mt19937_64 rng(seed);

  std::uniform_int_distribution<std::size_t> pick_label(0, p.T() - 1);
  const std::size_t label = pick_label(rng);

  IndexSet side = pair.side_info();
  std::shuffle(side.begin(), side.end(), rng);
  IndexSet own{pair.q()};
  own.insert(own.end(), side.begin(), side.begin() + static_cast<std::ptrdiff_t>(p.ell() - 1));

  IndexSet rest;
  for (std::size_t idx = 1; idx <= p.m(); ++idx) {
    if (std::find(own.begin(), own.end(), idx) == own.end()) rest.push_back(idx);
  }
  std::shuffle(rest.begin(), rest.end(), rng);

  std::vector<IndexSet> segs(p.T());
  segs[label] = own;
  auto next = rest.begin();
  for (std::size_t j = 0; j < p.T(); ++j) {
    if (j == label) continue;
    segs[j].assign(next, next + static_cast<std::ptrdiff_t>(p.ell()));
    next += static_cast<std::ptrdiff_t>(p.ell());
  }
  return SegmentPattern(p.m(), std::move(segs));
}

StrategyTable scheme_strategy(const SpecialCaseParams& p, std::span<const SegmentPattern> space) {
  std::map<ClientPair, PatternDistribution> entries;
  for_each_combination(1, p.m(), p.s(), [&](const IndexSet& side) {
    for (std::size_t q = 1; q <= p.m(); ++q) {
      if (std::binary_search(side.begin(), side.end(), q)) continue;
      const ClientPair pair(q, side);
      std::vector<const SegmentPattern*> satisfying;
      for (const auto& pat : space) {
        if (is_decodable_single_row_blocks(pat, pair)) satisfying.push_back(&pat);
      }
      if (satisfying.empty()) continue;
      const Rational w(1, static_cast<long long>(satisfying.size()));
      auto& dist = entries[pair];
      for (const auto* pat : satisfying) dist.emplace(*pat, w);
    }
  });
  return StrategyTable(std::move(entries));
}

double lb_q(const SpecialCaseParams& p) { return std::log2(static_cast<double>(p.T() * p.ell())); }

double lb_joint(const SpecialCaseParams& p) {
  const BigInt d = BigInt(p.T() * p.ell()) *
                   binomial(sg(p.m()) - sg(p.ell()), sg(p.s()) - sg(p.ell()) + 1);
  return log2_big(d);
}

double k_correction(const SpecialCaseParams& p) {
  const BigInt per_request = binomial(sg(p.m()) - sg(p.ell()), sg(p.s()) - sg(p.ell()) + 1);
  double total = 0;
  for (std::size_t i = 1; i <= p.T(); ++i) {
    const BigInt numer = binomial(sg(p.T()) - 1, sg(i) - 1) * ipow(BigInt(p.ell()), unsigned(i - 1)) *
                         appendix_B_value(p, i);
    if (numer == 0) continue;
    total += to_double(Rational(numer, per_request)) * alternating_log_sum(i);
  }
  return total;
}

double lb_s(const SpecialCaseParams& p) { return lb_joint(p) - k_correction(p); }

BigInt appendix_B_value(const SpecialCaseParams& p, std::size_t x) {
  if (x > p.T()) throw ParameterError("x must lie in [0, T]");
  return binomial(sg(p.m()) - sg(x * p.ell()), sg(p.s()) - sg(x) * (sg(p.ell()) - 1));
}

namespace {

// sum over (l_1..l_d) in allowed^d of prod C(ell, l_i) C(m - T ell, target - sum l_i).
BigInt occupancy_sum(const SpecialCaseParams& p, std::size_t d, std::int64_t target,
                     bool exclude_ell_minus_one) {
  const std::int64_t ell = sg(p.ell());
  const std::int64_t zero_block = sg(p.m()) - sg(p.T()) * ell;
  std::vector<std::int64_t> occ(d, 0);
  BigInt total = 0;
  while (true) {
    bool allowed = true;
    BigInt term = 1;
    std::int64_t used = 0;
    for (std::int64_t o : occ) {
      if (exclude_ell_minus_one && o == ell - 1) {
        allowed = false;
        break;
      }
      term *= binomial(ell, o);
      used += o;
    }
    if (allowed) total += term * binomial(zero_block, target - used);
    // Odometer over [0, ell]^d.
    std::size_t i = 0;
    while (i < d && occ[i] == ell) occ[i++] = 0;
    if (i == d) break;
    ++occ[i];
  }
  return total;
}

}  // namespace

BigInt appendix_B_raw(const SpecialCaseParams& p, std::size_t x) {
  if (x > p.T()) throw ParameterError("x must lie in [0, T]");
  return occupancy_sum(p, p.T() - x, sg(p.s()) - sg(x) * (sg(p.ell()) - 1), false);
}

BigInt appendix_C_value(const SpecialCaseParams& p, std::size_t x, CRoute route) {
  if (x > p.T()) throw ParameterError("x must lie in [0, T]");
  const std::size_t d = p.T() - x;
  const BigInt ell(p.ell());
  switch (route) {
    case CRoute::kRawSum:
      return occupancy_sum(p, d, sg(p.s()) - sg(x) * (sg(p.ell()) - 1), true);
    case CRoute::kClosedForm: {
      BigInt total = 0;
      for (std::size_t v = 0; v <= d; ++v) {
        const BigInt term = ipow(ell, unsigned(v)) * binomial(sg(d), sg(v)) * b_free(p, d - v);
        total += (v % 2 == 0) ? term : BigInt(-term);
      }
      return total;
    }
    case CRoute::kRecurrence: {
      std::vector<BigInt> c(d + 1);
      c[0] = b_free(p, 0);
      for (std::size_t j = 1; j <= d; ++j) {
        c[j] = b_free(p, j);
        for (std::size_t y = 1; y <= j; ++y) {
          c[j] -= binomial(sg(j), sg(y)) * ipow(ell, unsigned(y)) * c[j - y];
        }
      }
      return c[d];
    }
  }
  throw ParameterError("unknown route");
}

double n_bar_t(const SpecialCaseParams& p, NBarRoute route, std::uint64_t cap) {
  if (route == NBarRoute::kDirect) {
    const SchemeParams sp = p.scheme();
    const DecodableSets d = enumerate_decodable(build_base_matrix(sp, canonical_pattern(sp)), p.s(), cap);
    double total = 0;
    for (const auto& [side, n] : d.counts) {
      total += static_cast<double>(n) * std::log2(static_cast<double>(n));
    }
    return total;
  }
  double total = 0;
  for (std::size_t i = 1; i <= p.T(); ++i) {
    const BigInt coeff = binomial(sg(p.T()) - 1, sg(i) - 1) * ipow(BigInt(p.ell()), unsigned(i)) *
                         appendix_B_value(p, i);
    if (coeff == 0) continue;
    total += to_double(coeff) * alternating_log_sum(i);
  }
  return static_cast<double>(p.T()) * total;
}

PrivacyReport entropy_oracle(const SpecialCaseParams& p, const SegmentPattern& observed,
                             std::uint64_t cap) {
  const DecodableSets d = enumerate_decodable(build_base_matrix(p.scheme(), observed), p.s(), cap);
  if (d.pairs.empty()) throw InconsistentInputError("observed pattern decodes no pair");
  const auto total = static_cast<long long>(d.pairs.size());
  std::map<IndexSet, Rational> side_posterior;
  for (const auto& [side, n] : d.counts) side_posterior.emplace(side, Rational(static_cast<long long>(n), total));
  return make_report(std::log2(static_cast<double>(d.pairs.size())),
                     std::log2(static_cast<double>(d.requests.size())), entropy_bits(side_posterior),
                     p.m(), p.T(), p.s());
}

}  // namespace icpriv
