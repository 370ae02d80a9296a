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

#include "icpriv/field.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "icpriv/errors.hpp"
#include "test_support.hpp"

namespace icpriv {
namespace {

using testing::from_rows;
using testing::random_matrix;

const FieldConfig kF7(7);
const FieldConfig kF257(257);

TEST(FieldConfigTest, RejectsNonPrimeModulus) {
  EXPECT_THROW(FieldConfig(4), ParameterError);
  EXPECT_THROW(FieldConfig(1), ParameterError);
  EXPECT_THROW(FieldConfig(0), ParameterError);
  EXPECT_NO_THROW(FieldConfig(2));
  EXPECT_EQ(FieldConfig().modulus(), 257u);
}

TEST(FieldArithmeticTest, Examples) {
  EXPECT_EQ(field_add(3, 5, kF7), 1u);
  EXPECT_EQ(field_sub(3, 5, kF7), 5u);
  for (Elem x = 0; x < 257; ++x) EXPECT_EQ(field_mul(0, x, kF257), 0u);
  EXPECT_EQ(field_mul(200, 200, kF257), 165u);  // 40000 = 155 * 257 + 165
}

TEST(FieldArithmeticTest, InverseExamples) {
  EXPECT_EQ(field_inv(1, kF7), 1u);
  EXPECT_EQ(field_inv(1, kF257), 1u);
  EXPECT_EQ(field_inv(2, kF7), 4u);
  EXPECT_THROW(field_inv(0, kF7), ZeroInverseError);
}

TEST(FieldArithmeticTest, InverseIsExhaustivelyCorrect) {
  for (std::uint32_t L = 2; L <= 257; ++L) {
    if (!is_prime(L)) continue;
    const FieldConfig f(L);
    for (Elem a = 1; a < L; ++a) ASSERT_EQ(field_mul(a, field_inv(a, f), f), 1u) << "L=" << L << " a=" << a;
  }
}

TEST(RankTest, Examples) {
  EXPECT_EQ(rank(FieldMatrix(kF257, 2, 5)), 0u);
  EXPECT_EQ(rank(FieldMatrix(kF257, 3, 0)), 0u);
  EXPECT_EQ(rank(FieldMatrix::identity(kF7, 2)), 2u);
  EXPECT_EQ(rank(from_rows(kF257, {{1, 1, 0, 0, 0}, {0, 0, 1, 1, 0}})), 2u);
  EXPECT_EQ(rank(from_rows(kF7, {{1, 2}, {2, 4}})), 1u);
}

TEST(RankTest, MatchesSpanEnumerationOverSmallFields) {
  std::mt19937_64 rng(11);
  for (std::uint32_t L : {2u, 3u, 5u}) {
    const FieldConfig f(L);
    for (int trial = 0; trial < 150; ++trial) {
      const auto rows = static_cast<Eigen::Index>(1 + rng() % 4);
      const auto cols = static_cast<Eigen::Index>(rng() % 6);
      const FieldMatrix m = random_matrix(rng, rows, cols, f, 0.4);
      ASSERT_EQ(rank(m), testing::rank_by_enumeration(m));
    }
  }
}

TEST(RankTest, BoundedAndPermutationInvariant) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rows = static_cast<Eigen::Index>(1 + rng() % 5);
    const auto cols = static_cast<Eigen::Index>(1 + rng() % 8);
    const FieldMatrix m = random_matrix(rng, rows, cols, kF257, 0.5);
    const std::size_t r = rank(m);
    EXPECT_LE(r, static_cast<std::size_t>(std::min(rows, cols)));

    std::vector<Eigen::Index> col_perm(static_cast<std::size_t>(cols));
    std::iota(col_perm.begin(), col_perm.end(), 0);
    std::shuffle(col_perm.begin(), col_perm.end(), rng);
    EXPECT_EQ(rank(m.select_columns(col_perm)), r);

    ElemMatrix swapped = m.entries();
    swapped.row(0).swap(swapped.row(rows - 1));
    EXPECT_EQ(rank(swapped, kF257), r);
  }
}

TEST(InSpanTest, Examples) {
  const FieldMatrix m = from_rows(kF257, {{0, 0}, {1, 0}});
  EXPECT_TRUE(in_span(ElemVector::Zero(2), m));
  EXPECT_TRUE(in_span(ElemVector::Zero(2), FieldMatrix(kF257, 2, 0)));
  EXPECT_FALSE(in_span((ElemVector(2) << 1, 0).finished(), m));
  EXPECT_TRUE(in_span((ElemVector(2) << 1, 0).finished(), FieldMatrix::identity(kF257, 2)));
  EXPECT_FALSE(in_span((ElemVector(2) << 1, 0).finished(), FieldMatrix(kF257, 2, 0)));
}

TEST(InSpanTest, DimensionMismatchThrows) {
  EXPECT_THROW(in_span(ElemVector::Zero(3), FieldMatrix::identity(kF7, 2)), DimensionError);
}

TEST(InSpanTest, AgreesWithExplicitSolve) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 400; ++trial) {
    const auto rows = static_cast<Eigen::Index>(1 + rng() % 4);
    const auto cols = static_cast<Eigen::Index>(rng() % 9);
    const FieldMatrix m = random_matrix(rng, rows, cols, kF7, 0.5);
    const FieldMatrix v = random_matrix(rng, rows, 1, kF7, 0.5);
    const bool member = in_span(v.column(0), m);
    // M c = v  <=>  c^T M^T = v^T.
    const auto c = solve_left(m.transpose(), v.column(0).transpose());
    ASSERT_EQ(member, c.has_value());
    if (c) EXPECT_EQ(apply(m, c->transpose()), v.column(0));
  }
}

TEST(InSpanTest, MonotoneInColumns) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const FieldMatrix m = random_matrix(rng, 3, 7, kF7, 0.5);
    std::vector<Eigen::Index> subset;
    for (Eigen::Index c = 0; c < 7; ++c) {
      if (rng() % 2) subset.push_back(c);
    }
    const FieldMatrix sub = m.select_columns(subset);
    const ElemVector v = random_matrix(rng, 3, 1, kF7, 0.3).column(0);
    if (in_span(v, sub)) EXPECT_TRUE(in_span(v, m));
  }
}

TEST(SolveLeftTest, Examples) {
  const auto lambda = solve_left(FieldMatrix::identity(kF7, 2), (ElemRowVector(2) << 5, 3).finished());
  ASSERT_TRUE(lambda);
  EXPECT_EQ(*lambda, (ElemRowVector(2) << 5, 3).finished());

  const FieldMatrix m = from_rows(kF7, {{1, 1}, {0, 0}});
  EXPECT_FALSE(solve_left(m, (ElemRowVector(2) << 0, 1).finished()));

  const auto scaled = solve_left(m, (ElemRowVector(2) << 2, 2).finished());
  ASSERT_TRUE(scaled);
  EXPECT_EQ((*scaled)(0), 2u);
  EXPECT_EQ(apply_left(*scaled, m), (ElemRowVector(2) << 2, 2).finished());
}

TEST(SolveLeftTest, DimensionMismatchThrows) {
  EXPECT_THROW(solve_left(FieldMatrix::identity(kF7, 2), ElemRowVector::Zero(3)), DimensionError);
}

TEST(MatrixIoTest, ReadsWhatItWrites) {
  std::mt19937_64 rng(15);
  const FieldMatrix m = random_matrix(rng, 3, 5, kF257);
  std::stringstream ss;
  write_matrix(ss, m);
  EXPECT_EQ(read_matrix(ss), m);
}

TEST(MatrixIoTest, ParsesExampleFile) {
  std::istringstream in("2 5 257\n1 0 0 0 0\n0 0 1 0 0\n");
  const FieldMatrix m = read_matrix(in);
  EXPECT_EQ(m, from_rows(kF257, {{1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}}));
}

TEST(MatrixIoTest, RejectsMalformedInput) {
  std::istringstream truncated("2 2 7\n1 0\n0");
  EXPECT_THROW(read_matrix(truncated), FormatError);
  std::istringstream out_of_range("1 2 7\n1 7\n");
  EXPECT_THROW(read_matrix(out_of_range), FormatError);
  std::istringstream bad_header("x y z");
  EXPECT_THROW(read_matrix(bad_header), FormatError);
  std::istringstream composite("1 1 8\n1\n");
  EXPECT_THROW(read_matrix(composite), ParameterError);
}

}  // namespace
}  // namespace icpriv
