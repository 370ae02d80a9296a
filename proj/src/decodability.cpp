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

#include "icpriv/decodability.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "icpriv/errors.hpp"

namespace icpriv {

ClientPair::ClientPair(std::size_t q, IndexSet side_info) : q_(q), side_info_(std::move(side_info)) {
  std::sort(side_info_.begin(), side_info_.end());
  if (q_ == 0 || (!side_info_.empty() && side_info_.front() == 0)) {
    throw ParameterError("indices are 1-based");
  }
  if (std::adjacent_find(side_info_.begin(), side_info_.end()) != side_info_.end()) {
    throw ParameterError("side information has repeated indices");
  }
  if (std::binary_search(side_info_.begin(), side_info_.end(), q_)) {
    throw ParameterError("request " + std::to_string(q_) + " lies in its own side information");
  }
}

namespace {

// Columns (0-based) outside {q} u S.
std::vector<Eigen::Index> interfering_columns(std::size_t m, const ClientPair& pair) {
  std::vector<Eigen::Index> cols;
  const auto& side = pair.side_info();
  for (std::size_t idx = 1; idx <= m; ++idx) {
    if (idx == pair.q() || std::binary_search(side.begin(), side.end(), idx)) continue;
    cols.push_back(static_cast<Eigen::Index>(idx - 1));
  }
  return cols;
}

void check_range(const FieldMatrix& a, const ClientPair& pair) {
  const auto m = static_cast<std::size_t>(a.cols());
  const bool bad_q = pair.q() < 1 || pair.q() > m;
  const bool bad_s = !pair.side_info().empty() &&
                     (pair.side_info().front() < 1 || pair.side_info().back() > m);
  if (bad_q || bad_s) throw DimensionError("pair index outside [1, " + std::to_string(m) + "]");
}

}  // namespace

bool is_decodable(const FieldMatrix& a, const ClientPair& pair) {
  check_range(a, pair);
  const ElemVector target = a.column(static_cast<Eigen::Index>(pair.q() - 1));
  if (target.isZero()) return false;
  const auto cols = interfering_columns(static_cast<std::size_t>(a.cols()), pair);
  return !in_span(target, a.select_columns(cols));
}

bool is_decodable_single_row_blocks(const SegmentPattern& pattern, const ClientPair& pair) {
  const auto seg = pattern.segment_of(pair.q());
  if (!seg) return false;
  const auto& side = pair.side_info();
  for (std::size_t idx : pattern.segments()[*seg]) {
    if (idx != pair.q() && !std::binary_search(side.begin(), side.end(), idx)) return false;
  }
  return true;
}

DecodableSets enumerate_decodable(const FieldMatrix& a, std::size_t s, std::uint64_t cap) {
  const auto m = static_cast<std::size_t>(a.cols());
  if (s < 1 || s + 1 > m) {
    throw ParameterError("side-information size must satisfy 1 <= s <= m - 1");
  }
  const BigInt checks = binomial(static_cast<std::int64_t>(m), static_cast<std::int64_t>(s)) * m;
  if (checks > cap) {
    throw CapExceededError("enumeration needs " + checks.str() + " checks, cap is " +
                           std::to_string(cap));
  }

  DecodableSets out;
  std::set<std::size_t> requests;
  for_each_combination(1, m, s, [&](const IndexSet& side) {
    std::size_t n = 0;
    for (std::size_t q = 1; q <= m; ++q) {
      if (std::binary_search(side.begin(), side.end(), q)) continue;
      ClientPair pair(q, side);
      if (!is_decodable(a, pair)) continue;
      out.pairs.push_back(std::move(pair));
      requests.insert(q);
      ++n;
    }
    if (n > 0) {
      out.side_infos.push_back(side);
      out.counts.emplace(side, n);
    }
  });
  out.requests.assign(requests.begin(), requests.end());
  return out;
}

Elem recover_message(const FieldMatrix& a, const ElemVector& y, const ClientPair& pair,
                     const std::map<std::size_t, Elem>& known) {
  check_range(a, pair);
  if (y.size() != a.rows()) throw DimensionError("transmission length != T");
  if (known.size() != pair.s() ||
      !std::all_of(pair.side_info().begin(), pair.side_info().end(),
                   [&](std::size_t j) { return known.contains(j); })) {
    throw InconsistentInputError("known messages must cover exactly the side information");
  }
  if (!is_decodable(a, pair)) {
    throw NotDecodableError("request " + std::to_string(pair.q()) +
                            " is not decodable from the given side information");
  }
  const FieldConfig& f = a.field();

  // lambda must vanish on the interfering columns and be 1 on column q.
  auto cols = interfering_columns(static_cast<std::size_t>(a.cols()), pair);
  cols.push_back(static_cast<Eigen::Index>(pair.q() - 1));
  ElemRowVector target = ElemRowVector::Zero(static_cast<Eigen::Index>(cols.size()));
  target(target.size() - 1) = 1;
  const auto lambda = solve_left(a.select_columns(cols), target);
  if (!lambda) throw InconsistentInputError("no decoding combination exists");

  const ElemRowVector coeffs = apply_left(*lambda, a);
  Elem value = 0;
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    value = field_add(value, field_mul((*lambda)(r), y(r), f), f);
  }
  for (std::size_t j : pair.side_info()) {
    const Elem known_j = known.at(j);
    if (!f.contains(known_j)) throw InconsistentInputError("known message outside the field");
    value = field_sub(value, field_mul(coeffs(static_cast<Eigen::Index>(j - 1)), known_j, f), f);
  }
  return value;
}

}  // namespace icpriv
