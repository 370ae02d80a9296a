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

#include "icpriv/combinatorics.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

namespace icpriv {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n - k + i, i)
  }
  return result;
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt result = 1;
  for (std::int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt multinomial(std::span<const std::int64_t> parts) {
  // Product of binomials avoids the huge intermediate n!.
  BigInt result = 1;
  std::int64_t total = 0;
  for (std::int64_t p : parts) {
    if (p < 0) return 0;
    total += p;
    result *= binomial(total, p);
  }
  return result;
}

BigInt ipow(const BigInt& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

double to_double(const BigInt& x) { return x.convert_to<double>(); }

double to_double(const Rational& x) { return x.convert_to<double>(); }

double log2_big(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log2 of a non-positive integer");
  const std::size_t bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 60) return std::log2(x.convert_to<double>());
  // Keep the top 60 bits as the mantissa.
  const std::size_t shift = bits - 60;
  const BigInt top = x >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

void for_each_combination(std::size_t first, std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), first);
  const std::size_t last = first + n;
  while (true) {
    visit(idx);
    // Advance the rightmost index that still has room.
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == last - (k - i) - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace icpriv
