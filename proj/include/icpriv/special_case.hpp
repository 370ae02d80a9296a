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

// Single-client scheme with one row per segment (k = T).
//
// The server serves one client (q, S) by drawing, uniformly at random, one
// of the K segment patterns in which q sits in a segment whose other ell-1
// members lie in S. K does not depend on the pair, so the eavesdropper's
// posterior is uniform over D and over D^Q, and the side-information
// entropy falls short of log|D| by a correction term computed here in
// closed form. Every closed form has a brute-force counterpart.

#ifndef ICPRIV_SPECIAL_CASE_HPP_
#define ICPRIV_SPECIAL_CASE_HPP_

#include <cstdint>
#include <span>

#include "icpriv/combinatorics.hpp"
#include "icpriv/construction.hpp"
#include "icpriv/decodability.hpp"
#include "icpriv/privacy.hpp"

namespace icpriv {

class SpecialCaseParams {
 public:
  // Throws ParameterError unless 1 <= s <= m - 1 and
  // 1 <= ell <= min(s + 1, floor(m / T)).
  SpecialCaseParams(std::size_t m, std::size_t T, std::size_t ell, std::size_t s,
                    const FieldConfig& field = FieldConfig{});

  std::size_t m() const { return m_; }
  std::size_t T() const { return T_; }
  std::size_t ell() const { return ell_; }
  std::size_t s() const { return s_; }
  const FieldConfig& field() const { return field_; }

  // The matching block-MDS parameters: k = T, s_min = s.
  SchemeParams scheme() const { return SchemeParams(m_, T_, T_, ell_, s_, field_); }

 private:
  std::size_t m_, T_, ell_, s_;
  FieldConfig field_;
};

// Number of patterns satisfying any fixed pair:
// T C(s, ell-1) (m-ell)! / ((ell!)^(T-1) (m - T ell)!).
BigInt count_satisfying_K(const SpecialCaseParams& p);

// A uniformly random satisfying pattern for `pair`, deterministic in `seed`.
SegmentPattern sample_satisfying_pattern(const SpecialCaseParams& p, const ClientPair& pair,
                                         std::uint64_t seed);

// Uniform over the satisfying patterns of `space`, for every pair with |S| = s.
StrategyTable scheme_strategy(const SpecialCaseParams& p, std::span<const SegmentPattern> space);

// log2(T ell).
double lb_q(const SpecialCaseParams& p);
// log2(T ell C(m - ell, s - ell + 1)).
double lb_joint(const SpecialCaseParams& p);
// Deficit of the side-information entropy below lb_joint, in bits.
double k_correction(const SpecialCaseParams& p);
double lb_s(const SpecialCaseParams& p);

// B(T - x) = C(m - x ell, s - x(ell - 1)), for 0 <= x <= T.
BigInt appendix_B_value(const SpecialCaseParams& p, std::size_t x);
// The same quantity as the raw sum over the occupancies of the T - x free
// segments and the zero block.
BigInt appendix_B_raw(const SpecialCaseParams& p, std::size_t x);

enum class CRoute { kRecurrence, kClosedForm, kRawSum };

// C(T - x): side-information sets counted with none of the T - x free
// segments holding exactly ell - 1 members. For 0 <= x <= T.
BigInt appendix_C_value(const SpecialCaseParams& p, std::size_t x, CRoute route);

enum class NBarRoute { kClosedForm, kDirect };

// sum over decodable S of N_S log2 N_S. The direct route enumerates the
// canonical base matrix and may throw CapExceededError.
double n_bar_t(const SpecialCaseParams& p, NBarRoute route, std::uint64_t cap = kDefaultCheckCap);

// Brute-force entropies for the observed pattern: enumerates D and uses the
// uniform posterior over it.
PrivacyReport entropy_oracle(const SpecialCaseParams& p, const SegmentPattern& observed,
                             std::uint64_t cap = kDefaultCheckCap);

}  // namespace icpriv

#endif  // ICPRIV_SPECIAL_CASE_HPP_
