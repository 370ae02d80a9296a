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

// Block-MDS encoding matrices.
//
// The base matrix has k labeled segments of ell columns each plus a zero
// block. Segment j owns row block j (T/k rows) and carries a copy of an
// [ell, T/k] MDS generator A_b there; everything else is zero. Column
// permutations of the base matrix that keep segment membership fixed have
// the same decodable sets, so a permutation is represented by the
// SegmentPattern it induces.

#ifndef ICPRIV_CONSTRUCTION_HPP_
#define ICPRIV_CONSTRUCTION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "icpriv/combinatorics.hpp"
#include "icpriv/field.hpp"

namespace icpriv {

// Message indices are 1-based throughout, matching the file formats.
using IndexSet = std::vector<std::size_t>;

inline constexpr std::uint64_t kDefaultPatternCap = 10'000'000;

class SchemeParams {
 public:
  // Throws ParameterError unless k | T, k*ell <= m and
  // 1 <= ell <= min(s_min + T/k, floor(m/k)).
  SchemeParams(std::size_t m, std::size_t T, std::size_t k, std::size_t ell, std::size_t s_min,
               const FieldConfig& field = FieldConfig{});

  std::size_t m() const { return m_; }
  std::size_t T() const { return T_; }
  std::size_t k() const { return k_; }
  std::size_t ell() const { return ell_; }
  std::size_t s_min() const { return s_min_; }
  std::size_t block_rows() const { return T_ / k_; }
  const FieldConfig& field() const { return field_; }

 private:
  std::size_t m_, T_, k_, ell_, s_min_;
  FieldConfig field_;
};

class SegmentPattern {
 public:
  // Segments may be given in any internal order; they are stored sorted.
  // Throws ParameterError unless the segments are nonempty, equally sized,
  // pairwise disjoint and drawn from [1, m].
  SegmentPattern(std::size_t m, std::vector<IndexSet> segments);

  std::size_t m() const { return m_; }
  std::size_t k() const { return segments_.size(); }
  std::size_t ell() const { return segments_.front().size(); }
  const std::vector<IndexSet>& segments() const { return segments_; }
  const IndexSet& zero_block() const { return zero_block_; }

  // 0-based label of the segment holding `index`, or nullopt for the zero block.
  std::optional<std::size_t> segment_of(std::size_t index) const;

  friend auto operator<=>(const SegmentPattern&, const SegmentPattern&) = default;
  friend bool operator==(const SegmentPattern&, const SegmentPattern&) = default;

 private:
  std::size_t m_;
  std::vector<IndexSet> segments_;
  IndexSet zero_block_;
};

// r x ell matrix with entry (i, j) = x_j^(i+1), x_j = j + 1. Any min(r, ell)
// columns are independent. Throws ParameterError if ell > L - 1.
FieldMatrix vandermonde_generator(std::size_t ell, std::size_t r, const FieldConfig& f);

// Every rows x rows column submatrix has full rank. Requires rows <= cols.
bool is_mds(const FieldMatrix& m);

FieldMatrix build_base_matrix(const SchemeParams& p, const SegmentPattern& pattern);

// Like build_base_matrix, but the i-th listed index of segment j receives
// column i of A_b. Used to check that decodability ignores this order.
FieldMatrix build_block_matrix(const SchemeParams& p,
                               const std::vector<std::vector<std::size_t>>& ordered_segments);

SegmentPattern canonical_pattern(const SchemeParams& p);

// m! / ((ell!)^k (m - k ell)!).
BigInt pattern_count(std::size_t m, std::size_t k, std::size_t ell);

// Visits every labeled segment pattern once, in lexicographic order.
// Throws CapExceededError if pattern_count exceeds `cap`.
void for_each_pattern(const SchemeParams& p, const std::function<void(const SegmentPattern&)>& visit,
                      std::uint64_t cap = kDefaultPatternCap);

std::vector<SegmentPattern> enumerate_patterns(const SchemeParams& p,
                                               std::uint64_t cap = kDefaultPatternCap);

// Text format: "k ell m", then k lines of ell 1-based indices.
SegmentPattern read_pattern(std::istream& in);
void write_pattern(std::ostream& out, const SegmentPattern& pattern);

}  // namespace icpriv

#endif  // ICPRIV_CONSTRUCTION_HPP_
