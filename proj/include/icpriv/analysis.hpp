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

// Trade-off sweeps, large-m gap analysis and the grid self-check.

#ifndef ICPRIV_ANALYSIS_HPP_
#define ICPRIV_ANALYSIS_HPP_

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "icpriv/combinatorics.hpp"
#include "icpriv/decodability.hpp"
#include "icpriv/privacy.hpp"
#include "icpriv/special_case.hpp"

namespace icpriv {

struct SweepSpec {
  std::size_t m = 30;
  std::size_t s = 3;
  std::vector<std::size_t> T_values{1, 2, 3, 5};
};

struct Figure2Row {
  std::size_t T = 0;
  std::size_t ell = 0;
  double r_q = 0;
  double r_s = 0;
  double r_joint = 0;
};

struct SweepResult {
  std::vector<Figure2Row> rows;       // ordered by (T, ell)
  std::vector<std::string> warnings;  // one per skipped point
};

// Ratios for every ell in 1..min(s+1, floor(m/T)), for each T.
SweepResult sweep_figure2(const SweepSpec& spec);

// Exact request and joint ratios: T ell / m and C(m-ell, s-ell+1) ell / C(m, s).
Rational ratio_q_exact(const SpecialCaseParams& p);
Rational ratio_joint_exact(const SpecialCaseParams& p);
// r_s = T ell C(m-ell, s-ell+1) / C(m, s) * 2^-k_correction.
double ratio_s(const SpecialCaseParams& p);

struct AsymptoticSpec {
  double c = 0.5;  // s = floor(c m)
  double b = 0.0;  // ell = floor(b m) + 1
  std::size_t T = 2;
  std::vector<std::size_t> m_values{10, 20, 40, 80};
};

struct GapRow {
  std::size_t m = 0, s = 0, ell = 0;
  double g_q = 0;
  double g_joint = 0;
  double g_s_upper = 0;  // log2 C(m,s) - (lb_joint - lb_q)
  double g_s = 0;
  double k_corr = 0;
};

struct GapResult {
  std::vector<GapRow> rows;
  std::vector<std::string> warnings;
};

// Throws ParameterError for negative fractions or b > c.
GapResult asymptotic_gaps(const AsymptoticSpec& spec);

struct CaseOneResult {
  std::size_t s = 0;
  std::size_t pairs = 0, requests = 0, side_infos = 0;
  // Entropies under a posterior uniform over each decodable set.
  PrivacyReport report;
  bool full_request_privacy = false;
  bool full_side_info_privacy = false;
  bool full_joint_privacy = false;
};

// Uses an [m, k_c] Vandermonde generator with s = m - k_c.
CaseOneResult case1_check(std::size_t m, std::size_t k_c, const FieldConfig& field = FieldConfig{});

struct CheckRecord {
  std::string check;
  std::string params;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerifySummary {
  std::vector<CheckRecord> records;
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool ok() const { return failed == 0; }
};

struct VerifyOptions {
  std::size_t max_m = 8;
  std::uint64_t seed = 20260101;
  // Overridable so tests can confirm that a corrupted closed form is caught.
  std::function<double(const SpecialCaseParams&)> k_correction = icpriv::k_correction;
};

// Runs the closed-form vs brute-force equivalences over every grid point
// with m <= max_m and records each comparison.
VerifySummary verify_all(const VerifyOptions& options);

// CSV emitters.
void write_figure2_csv(std::ostream& out, const SweepResult& result);
void write_figure2_gnuplot(std::ostream& out, const std::string& csv_path,
                           const std::vector<std::size_t>& T_values);
void write_gaps_csv(std::ostream& out, const GapResult& result);
void write_bounds_csv(std::ostream& out, const SchemeParams& p, std::size_t s);
// Returns false when --verify finds a mismatch beyond 1e-9 bits.
bool write_scheme_csv(std::ostream& out, const SpecialCaseParams& p, bool verify);

std::string format_double(double v);

}  // namespace icpriv

#endif  // ICPRIV_ANALYSIS_HPP_
