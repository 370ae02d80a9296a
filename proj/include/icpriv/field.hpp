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

// Exact arithmetic over a prime field GF(L) and the dense linear algebra
// built on it. Matrices are stored as Eigen dense matrices of residues;
// elimination is done by hand since Eigen's decompositions assume a
// floating-point scalar.

#ifndef ICPRIV_FIELD_HPP_
#define ICPRIV_FIELD_HPP_

#include <cassert>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>

#include <Eigen/Dense>

namespace icpriv {

using Elem = std::uint32_t;
using ElemMatrix = Eigen::Matrix<Elem, Eigen::Dynamic, Eigen::Dynamic>;
using ElemVector = Eigen::Matrix<Elem, Eigen::Dynamic, 1>;
using ElemRowVector = Eigen::Matrix<Elem, 1, Eigen::Dynamic>;

inline constexpr std::uint32_t kDefaultModulus = 257;

/// A prime field GF(L). The modulus is checked for primality on
/// construction and must fit in 32 bits so products fit in 64.
class FieldConfig {
 public:
  explicit FieldConfig(std::uint32_t modulus = kDefaultModulus);

  std::uint32_t modulus() const { return modulus_; }
  bool contains(Elem a) const { return a < modulus_; }

  friend bool operator==(const FieldConfig&, const FieldConfig&) = default;

 private:
  std::uint32_t modulus_;
};

bool is_prime(std::uint32_t n);

inline Elem field_add(Elem a, Elem b, const FieldConfig& f) {
  assert(f.contains(a) && f.contains(b));
  const std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Elem>(s >= f.modulus() ? s - f.modulus() : s);
}

inline Elem field_sub(Elem a, Elem b, const FieldConfig& f) {
  assert(f.contains(a) && f.contains(b));
  return a >= b ? a - b : static_cast<Elem>(std::uint64_t{a} + f.modulus() - b);
}

inline Elem field_neg(Elem a, const FieldConfig& f) {
  return a == 0 ? 0 : f.modulus() - a;
}

inline Elem field_mul(Elem a, Elem b, const FieldConfig& f) {
  assert(f.contains(a) && f.contains(b));
  return static_cast<Elem>((std::uint64_t{a} * b) % f.modulus());
}

Elem field_pow(Elem a, std::uint64_t e, const FieldConfig& f);

// Throws ZeroInverseError for a == 0.
Elem field_inv(Elem a, const FieldConfig& f);

/// A T x m matrix over GF(L). Entries are validated to lie in [0, L).
class FieldMatrix {
 public:
  FieldMatrix(const FieldConfig& field, Eigen::Index rows, Eigen::Index cols);
  FieldMatrix(const FieldConfig& field, ElemMatrix entries);

  static FieldMatrix identity(const FieldConfig& field, Eigen::Index n);

  Eigen::Index rows() const { return entries_.rows(); }
  Eigen::Index cols() const { return entries_.cols(); }
  const FieldConfig& field() const { return field_; }
  const ElemMatrix& entries() const { return entries_; }
  Elem operator()(Eigen::Index r, Eigen::Index c) const { return entries_(r, c); }

  ElemVector column(Eigen::Index c) const { return entries_.col(c); }

  // Submatrix keeping only the given (0-based) columns, in order.
  FieldMatrix select_columns(std::span<const Eigen::Index> cols) const;

  FieldMatrix transpose() const { return FieldMatrix(field_, entries_.transpose()); }

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.field_ == b.field_ && a.rows() == b.rows() && a.cols() == b.cols() &&
           a.entries_ == b.entries_;
  }

 private:
  FieldConfig field_;
  ElemMatrix entries_;
};

// Reduces `m` in place to row echelon form over GF(L) and returns its rank.
// Pivots are the first nonzero entry found scanning down each column.
std::size_t row_reduce(ElemMatrix& m, const FieldConfig& f);

template <typename Derived>
std::size_t rank(const Eigen::MatrixBase<Derived>& m, const FieldConfig& f) {
  ElemMatrix work = m;
  return row_reduce(work, f);
}

inline std::size_t rank(const FieldMatrix& m) { return rank(m.entries(), m.field()); }

// True iff v lies in the column span of M. M may have zero columns.
bool in_span(const ElemVector& v, const FieldMatrix& m);

// Some lambda with lambda * M = target, or nullopt if none exists.
std::optional<ElemRowVector> solve_left(const FieldMatrix& m, const ElemRowVector& target);

// M * x over GF(L).
ElemVector apply(const FieldMatrix& m, const ElemVector& x);

// Row vector times matrix over GF(L).
ElemRowVector apply_left(const ElemRowVector& lambda, const FieldMatrix& m);

// Text format: "T m L" on the first line, then T rows of m residues.
FieldMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const FieldMatrix& m);

}  // namespace icpriv

#endif  // ICPRIV_FIELD_HPP_
