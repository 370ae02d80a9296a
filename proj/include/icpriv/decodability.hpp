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

#ifndef ICPRIV_DECODABILITY_HPP_
#define ICPRIV_DECODABILITY_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "icpriv/construction.hpp"
#include "icpriv/field.hpp"

namespace icpriv {

inline constexpr std::uint64_t kDefaultCheckCap = 10'000'000;

/// A client's request q and side-information set S (1-based, q not in S).
class ClientPair {
 public:
  ClientPair(std::size_t q, IndexSet side_info);

  std::size_t q() const { return q_; }
  const IndexSet& side_info() const { return side_info_; }
  std::size_t s() const { return side_info_.size(); }

  friend auto operator<=>(const ClientPair&, const ClientPair&) = default;
  friend bool operator==(const ClientPair&, const ClientPair&) = default;

 private:
  std::size_t q_;
  IndexSet side_info_;
};

/// D(A, s) and its projections. `pairs` is ordered by side-information set
/// (lexicographic), then request; `counts` holds N_{A,S} for every decodable S.
struct DecodableSets {
  std::vector<ClientPair> pairs;
  IndexSet requests;
  std::vector<IndexSet> side_infos;
  std::map<IndexSet, std::size_t> counts;
};

// Decodable iff column q is outside the span of the columns not in {q} u S.
// Throws DimensionError if an index is outside [1, m].
bool is_decodable(const FieldMatrix& a, const ClientPair& pair);

// Shortcut for block matrices with one row per segment (k = T): q must sit
// in a segment whose other members all lie in S. Must agree with
// is_decodable on build_base_matrix output.
bool is_decodable_single_row_blocks(const SegmentPattern& pattern, const ClientPair& pair);

// Tests every (q, S) with |S| = s. Throws CapExceededError when
// C(m, s) * m exceeds `cap`, ParameterError unless 1 <= s <= m - 1.
DecodableSets enumerate_decodable(const FieldMatrix& a, std::size_t s,
                                  std::uint64_t cap = kDefaultCheckCap);

// Recovers b_q from y = A b and the known messages b_S (`known` maps each
// 1-based index of S to its message). Throws NotDecodableError if the pair
// is not decodable and InconsistentInputError if `known` does not cover
// exactly S.
Elem recover_message(const FieldMatrix& a, const ElemVector& y, const ClientPair& pair,
                     const std::map<std::size_t, Elem>& known);

}  // namespace icpriv

#endif  // ICPRIV_DECODABILITY_HPP_
