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

#include <istream>
#include <ostream>
#include <string>
#include <utility>

#include "icpriv/errors.hpp"

namespace icpriv {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldConfig::FieldConfig(std::uint32_t modulus) : modulus_(modulus) {
  if (!is_prime(modulus)) {
    throw ParameterError("field modulus " + std::to_string(modulus) + " is not prime");
  }
}

Elem field_pow(Elem a, std::uint64_t e, const FieldConfig& f) {
  Elem result = 1 % f.modulus();
  Elem base = a;
  while (e > 0) {
    if (e & 1) result = field_mul(result, base, f);
    base = field_mul(base, base, f);
    e >>= 1;
  }
  return result;
}

Elem field_inv(Elem a, const FieldConfig& f) {
  if (a == 0) throw ZeroInverseError();
  // Fermat: a^(L-2) = a^-1 in a prime field.
  return field_pow(a, f.modulus() - 2, f);
}

FieldMatrix::FieldMatrix(const FieldConfig& field, Eigen::Index rows, Eigen::Index cols)
    : field_(field), entries_(ElemMatrix::Zero(rows, cols)) {}

FieldMatrix::FieldMatrix(const FieldConfig& field, ElemMatrix entries)
    : field_(field), entries_(std::move(entries)) {
  for (Eigen::Index c = 0; c < entries_.cols(); ++c) {
    for (Eigen::Index r = 0; r < entries_.rows(); ++r) {
      if (!field_.contains(entries_(r, c))) {
        throw ParameterError("matrix entry " + std::to_string(entries_(r, c)) +
                             " outside GF(" + std::to_string(field_.modulus()) + ")");
      }
    }
  }
}

FieldMatrix FieldMatrix::identity(const FieldConfig& field, Eigen::Index n) {
  return FieldMatrix(field, ElemMatrix::Identity(n, n));
}

FieldMatrix FieldMatrix::select_columns(std::span<const Eigen::Index> cols) const {
  ElemMatrix out(rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] < 0 || cols[j] >= this->cols()) {
      throw DimensionError("column index out of range");
    }
    out.col(static_cast<Eigen::Index>(j)) = entries_.col(cols[j]);
  }
  return FieldMatrix(field_, std::move(out));
}

std::size_t row_reduce(ElemMatrix& m, const FieldConfig& f) {
  Eigen::Index pivot_row = 0;
  for (Eigen::Index c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    Eigen::Index p = pivot_row;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != pivot_row) m.row(p).swap(m.row(pivot_row));

    const Elem inv = field_inv(m(pivot_row, c), f);
    for (Eigen::Index k = c; k < m.cols(); ++k) {
      m(pivot_row, k) = field_mul(m(pivot_row, k), inv, f);
    }
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m(r, c) == 0) continue;
      const Elem factor = m(r, c);
      for (Eigen::Index k = c; k < m.cols(); ++k) {
        m(r, k) = field_sub(m(r, k), field_mul(factor, m(pivot_row, k), f), f);
      }
    }
    ++pivot_row;
  }
  return static_cast<std::size_t>(pivot_row);
}

bool in_span(const ElemVector& v, const FieldMatrix& m) {
  if (v.size() != m.rows()) {
    throw DimensionError("in_span: vector length " + std::to_string(v.size()) +
                         " != matrix rows " + std::to_string(m.rows()));
  }
  if (v.isZero()) return true;
  ElemMatrix augmented(m.rows(), m.cols() + 1);
  augmented.leftCols(m.cols()) = m.entries();
  augmented.col(m.cols()) = v;
  return rank(augmented, m.field()) == rank(m);
}

std::optional<ElemRowVector> solve_left(const FieldMatrix& m, const ElemRowVector& target) {
  if (target.size() != m.cols()) {
    throw DimensionError("solve_left: target length " + std::to_string(target.size()) +
                         " != matrix cols " + std::to_string(m.cols()));
  }
  const FieldConfig& f = m.field();
  const Eigen::Index unknowns = m.rows();
  // lambda * M = t  <=>  M^T lambda^T = t^T; reduce [M^T | t^T].
  ElemMatrix aug(m.cols(), unknowns + 1);
  aug.leftCols(unknowns) = m.entries().transpose();
  aug.col(unknowns) = target.transpose();
  const std::size_t r = row_reduce(aug, f);

  ElemRowVector lambda = ElemRowVector::Zero(unknowns);
  for (std::size_t i = 0; i < r; ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    Eigen::Index lead = 0;
    while (lead <= unknowns && aug(row, lead) == 0) ++lead;
    if (lead == unknowns) return std::nullopt;  // 0 = nonzero
    // Free variables are zero, so the pivot variable equals the rhs.
    lambda(lead) = aug(row, unknowns);
  }
  return lambda;
}

ElemVector apply(const FieldMatrix& m, const ElemVector& x) {
  if (x.size() != m.cols()) throw DimensionError("apply: dimension mismatch");
  const FieldConfig& f = m.field();
  ElemVector y = ElemVector::Zero(m.rows());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      y(r) = field_add(y(r), field_mul(m(r, c), x(c), f), f);
    }
  }
  return y;
}

ElemRowVector apply_left(const ElemRowVector& lambda, const FieldMatrix& m) {
  if (lambda.size() != m.rows()) throw DimensionError("apply_left: dimension mismatch");
  const FieldConfig& f = m.field();
  ElemRowVector out = ElemRowVector::Zero(m.cols());
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      out(c) = field_add(out(c), field_mul(lambda(r), m(r, c), f), f);
    }
  }
  return out;
}

FieldMatrix read_matrix(std::istream& in) {
  long long rows = -1, cols = -1, modulus = -1;
  if (!(in >> rows >> cols >> modulus) || rows < 0 || cols < 0 || modulus < 2 ||
      modulus > 0xFFFFFFFFLL) {
    throw FormatError("matrix header must be 'T m L' with T, m >= 0 and prime L");
  }
  const FieldConfig f(static_cast<std::uint32_t>(modulus));
  ElemMatrix entries(rows, cols);
  for (long long r = 0; r < rows; ++r) {
    for (long long c = 0; c < cols; ++c) {
      long long v = -1;
      if (!(in >> v)) throw FormatError("matrix body truncated");
      if (v < 0 || v >= modulus) throw FormatError("matrix entry out of range [0, L)");
      entries(r, c) = static_cast<Elem>(v);
    }
  }
  return FieldMatrix(f, std::move(entries));
}

void write_matrix(std::ostream& out, const FieldMatrix& m) {
  out << m.rows() << ' ' << m.cols() << ' ' << m.field().modulus() << '\n';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ' ';
      out << m(r, c);
    }
    out << '\n';
  }
}

}  // namespace icpriv
