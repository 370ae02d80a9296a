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

#include "icpriv/construction.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>

#include "icpriv/errors.hpp"

namespace icpriv {

SchemeParams::SchemeParams(std::size_t m, std::size_t T, std::size_t k, std::size_t ell,
                           std::size_t s_min, const FieldConfig& field)
    : m_(m), T_(T), k_(k), ell_(ell), s_min_(s_min), field_(field) {
  if (m == 0 || T == 0 || k == 0) throw ParameterError("m, T and k must be positive");
  if (T % k != 0) throw ParameterError("T must be a multiple of k");
  if (ell == 0) throw ParameterError("segment width must be positive");
  if (ell > s_min + T / k) throw ParameterError("segment width exceeds s_min + T/k");
  if (ell > m / k) throw ParameterError("segment width exceeds floor(m/k)");
}

SegmentPattern::SegmentPattern(std::size_t m, std::vector<IndexSet> segments)
    : m_(m), segments_(std::move(segments)) {
  if (segments_.empty()) throw ParameterError("a pattern needs at least one segment");
  const std::size_t width = segments_.front().size();
  if (width == 0) throw ParameterError("segments must be nonempty");
  std::vector<bool> used(m + 1, false);
  for (auto& seg : segments_) {
    if (seg.size() != width) throw ParameterError("segments must have equal size");
    std::sort(seg.begin(), seg.end());
    for (std::size_t idx : seg) {
      if (idx < 1 || idx > m) throw ParameterError("segment index out of [1, m]");
      if (used[idx]) throw ParameterError("segments must be disjoint");
      used[idx] = true;
    }
  }
  for (std::size_t idx = 1; idx <= m; ++idx) {
    if (!used[idx]) zero_block_.push_back(idx);
  }
}

std::optional<std::size_t> SegmentPattern::segment_of(std::size_t index) const {
  for (std::size_t j = 0; j < segments_.size(); ++j) {
    if (std::binary_search(segments_[j].begin(), segments_[j].end(), index)) return j;
  }
  return std::nullopt;
}

FieldMatrix vandermonde_generator(std::size_t ell, std::size_t r, const FieldConfig& f) {
  if (ell + 1 > f.modulus()) {
    throw ParameterError("GF(" + std::to_string(f.modulus()) + ") has fewer than " +
                         std::to_string(ell) + " distinct nonzero points");
  }
  ElemMatrix g(r, ell);
  for (std::size_t j = 0; j < ell; ++j) {
    const Elem x = static_cast<Elem>(j + 1);
    Elem power = x;
    for (std::size_t i = 0; i < r; ++i) {
      g(i, j) = power;
      power = field_mul(power, x, f);
    }
  }
  return FieldMatrix(f, std::move(g));
}

bool is_mds(const FieldMatrix& m) {
  if (m.rows() > m.cols()) throw DimensionError("is_mds requires rows <= cols");
  const auto t = static_cast<std::size_t>(m.rows());
  bool all_full = true;
  for_each_combination(0, static_cast<std::size_t>(m.cols()), t, [&](const IndexSet& cols) {
    if (!all_full) return;
    std::vector<Eigen::Index> c(cols.begin(), cols.end());
    if (rank(m.select_columns(c)) != t) all_full = false;
  });
  return all_full;
}

FieldMatrix build_block_matrix(const SchemeParams& p,
                               const std::vector<std::vector<std::size_t>>& ordered_segments) {
  if (ordered_segments.size() != p.k()) throw ParameterError("pattern has wrong segment count");
  const std::size_t r = p.block_rows();
  const FieldMatrix block = vandermonde_generator(p.ell(), r, p.field());
  ElemMatrix a = ElemMatrix::Zero(p.T(), p.m());
  std::vector<bool> used(p.m() + 1, false);
  for (std::size_t j = 0; j < p.k(); ++j) {
    const auto& seg = ordered_segments[j];
    if (seg.size() != p.ell()) throw ParameterError("pattern segment width != ell");
    for (std::size_t i = 0; i < seg.size(); ++i) {
      if (seg[i] < 1 || seg[i] > p.m() || used[seg[i]]) {
        throw ParameterError("pattern indices must be distinct and within [1, m]");
      }
      used[seg[i]] = true;
      a.block(j * r, seg[i] - 1, r, 1) = block.entries().col(i);
    }
  }
  return FieldMatrix(p.field(), std::move(a));
}

FieldMatrix build_base_matrix(const SchemeParams& p, const SegmentPattern& pattern) {
  if (pattern.m() != p.m()) throw ParameterError("pattern m does not match parameters");
  return build_block_matrix(p, pattern.segments());
}

SegmentPattern canonical_pattern(const SchemeParams& p) {
  std::vector<IndexSet> segs(p.k());
  for (std::size_t j = 0; j < p.k(); ++j) {
    for (std::size_t i = 0; i < p.ell(); ++i) segs[j].push_back(j * p.ell() + i + 1);
  }
  return SegmentPattern(p.m(), std::move(segs));
}

BigInt pattern_count(std::size_t m, std::size_t k, std::size_t ell) {
  if (k * ell > m) return 0;
  std::vector<std::int64_t> parts(k, static_cast<std::int64_t>(ell));
  parts.push_back(static_cast<std::int64_t>(m - k * ell));
  return multinomial(parts);
}

namespace {

void fill_segments(std::size_t m, std::size_t ell, std::vector<bool>& used,
                   std::vector<IndexSet>& segs, std::size_t j,
                   const std::function<void(const SegmentPattern&)>& visit) {
  if (j == segs.size()) {
    visit(SegmentPattern(m, segs));
    return;
  }
  IndexSet free;
  for (std::size_t idx = 1; idx <= m; ++idx) {
    if (!used[idx]) free.push_back(idx);
  }
  for_each_combination(0, free.size(), ell, [&](const IndexSet& pick) {
    IndexSet seg;
    for (std::size_t i : pick) seg.push_back(free[i]);
    for (std::size_t idx : seg) used[idx] = true;
    segs[j] = seg;
    fill_segments(m, ell, used, segs, j + 1, visit);
    for (std::size_t idx : seg) used[idx] = false;
  });
}

}  // namespace

void for_each_pattern(const SchemeParams& p, const std::function<void(const SegmentPattern&)>& visit,
                      std::uint64_t cap) {
  const BigInt count = pattern_count(p.m(), p.k(), p.ell());
  if (count > cap) {
    throw CapExceededError("pattern count " + count.str() + " exceeds cap " + std::to_string(cap));
  }
  std::vector<bool> used(p.m() + 1, false);
  std::vector<IndexSet> segs(p.k());
  fill_segments(p.m(), p.ell(), used, segs, 0, visit);
}

std::vector<SegmentPattern> enumerate_patterns(const SchemeParams& p, std::uint64_t cap) {
  std::vector<SegmentPattern> out;
  for_each_pattern(p, [&](const SegmentPattern& pat) { out.push_back(pat); }, cap);
  return out;
}

SegmentPattern read_pattern(std::istream& in) {
  long long k = 0, ell = 0, m = 0;
  if (!(in >> k >> ell >> m) || k < 1 || ell < 1 || m < 1 || k * ell > m) {
    throw FormatError("pattern header must be 'k ell m' with k*ell <= m");
  }
  std::vector<IndexSet> segs(static_cast<std::size_t>(k));
  for (auto& seg : segs) {
    for (long long i = 0; i < ell; ++i) {
      long long idx = 0;
      if (!(in >> idx)) throw FormatError("pattern body truncated");
      if (idx < 1 || idx > m) throw FormatError("pattern index out of [1, m]");
      seg.push_back(static_cast<std::size_t>(idx));
    }
  }
  try {
    return SegmentPattern(static_cast<std::size_t>(m), std::move(segs));
  } catch (const ParameterError& e) {
    throw FormatError(std::string("invalid pattern: ") + e.what());
  }
}

void write_pattern(std::ostream& out, const SegmentPattern& pattern) {
  out << pattern.k() << ' ' << pattern.ell() << ' ' << pattern.m() << '\n';
  for (const auto& seg : pattern.segments()) {
    for (std::size_t i = 0; i < seg.size(); ++i) {
      if (i > 0) out << ' ';
      out << seg[i];
    }
    out << '\n';
  }
}

}  // namespace icpriv
