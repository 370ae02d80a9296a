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

#ifndef ICPRIV_COMBINATORICS_HPP_
#define ICPRIV_COMBINATORICS_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace icpriv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k), zero whenever k < 0, k > n or n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

BigInt factorial(std::int64_t n);

// n! / (parts[0]! * parts[1]! * ...); parts must sum to n.
BigInt multinomial(std::span<const std::int64_t> parts);

BigInt ipow(const BigInt& base, unsigned exponent);

double to_double(const BigInt& x);
double to_double(const Rational& x);

// log2 of a positive integer, accurate for values far beyond double range.
double log2_big(const BigInt& x);

// Calls visit(subset) for every k-subset of {first, ..., first + n - 1} in
// lexicographic order. The subset is sorted ascending.
void for_each_combination(std::size_t first, std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& visit);

}  // namespace icpriv

#endif  // ICPRIV_COMBINATORICS_HPP_
