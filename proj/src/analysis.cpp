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

#include "icpriv/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "icpriv/errors.hpp"

namespace icpriv {

namespace {

constexpr double kBitsTolerance = 1e-9;

std::int64_t sg(std::size_t v) { return static_cast<std::int64_t>(v); }

BigInt per_request_count(const SpecialCaseParams& p) {
  return binomial(sg(p.m()) - sg(p.ell()), sg(p.s()) - sg(p.ell()) + 1);
}

std::string describe(const SpecialCaseParams& p) {
  return "m=" + std::to_string(p.m()) + " T=" + std::to_string(p.T()) +
         " ell=" + std::to_string(p.ell()) + " s=" + std::to_string(p.s());
}

}  // namespace

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

Rational ratio_q_exact(const SpecialCaseParams& p) {
  return Rational(static_cast<long long>(p.T() * p.ell()), static_cast<long long>(p.m()));
}

Rational ratio_joint_exact(const SpecialCaseParams& p) {
  const BigInt lb = BigInt(p.T() * p.ell()) * per_request_count(p);
  const BigInt ub = BigInt(p.T()) * binomial(sg(p.m()), sg(p.s()));
  return Rational(lb, ub);
}

double ratio_s(const SpecialCaseParams& p) {
  const Rational base(BigInt(p.T() * p.ell()) * per_request_count(p), binomial(sg(p.m()), sg(p.s())));
  return to_double(base) * std::exp2(-k_correction(p));
}

SweepResult sweep_figure2(const SweepSpec& spec) {
  SweepResult out;
  std::vector<std::size_t> Ts = spec.T_values;
  std::sort(Ts.begin(), Ts.end());
  Ts.erase(std::unique(Ts.begin(), Ts.end()), Ts.end());
  for (std::size_t T : Ts) {
    const std::size_t max_ell = T == 0 ? 0 : std::min(spec.s + 1, spec.m / T);
    if (max_ell == 0) {
      out.warnings.push_back("T=" + std::to_string(T) + ": no admissible segment width");
      continue;
    }
    for (std::size_t ell = 1; ell <= max_ell; ++ell) {
      try {
        const SpecialCaseParams p(spec.m, T, ell, spec.s);
        out.rows.push_back({T, ell, to_double(ratio_q_exact(p)), ratio_s(p),
                            to_double(ratio_joint_exact(p))});
      } catch (const ParameterError& e) {
        out.warnings.push_back("T=" + std::to_string(T) + " ell=" + std::to_string(ell) + ": " + e.what());
      }
    }
  }
  return out;
}

GapResult asymptotic_gaps(const AsymptoticSpec& spec) {
  if (spec.c < 0 || spec.b < 0) throw ParameterError("fractions must be non-negative");
  if (spec.b > spec.c) throw ParameterError("need b <= c");
  if (spec.T == 0) throw ParameterError("T must be positive");
  GapResult out;
  for (std::size_t m : spec.m_values) {
    const std::string tag = "m=" + std::to_string(m);
    if (m < 2 || spec.c > static_cast<double>(m - 1) / static_cast<double>(m)) {
      out.warnings.push_back(tag + ": c exceeds (m-1)/m");
      continue;
    }
    // Nudge so that products like 0.1 * 30 floor to the intended integer.
    const auto s = static_cast<std::size_t>(std::floor(spec.c * static_cast<double>(m) + 1e-9));
    const auto ell = static_cast<std::size_t>(std::floor(spec.b * static_cast<double>(m) + 1e-9)) + 1;
    try {
      const SpecialCaseParams p(m, spec.T, ell, s);
      const UniversalBounds ub = ub_lemma2(m, spec.T, s);
      GapRow row;
      row.m = m;
      row.s = s;
      row.ell = ell;
      row.g_q = log2_big(ub.requests) - lb_q(p);
      row.g_joint = log2_big(ub.joint) - lb_joint(p);
      row.g_s_upper = log2_big(ub.side_infos) - (lb_joint(p) - lb_q(p));
      row.k_corr = k_correction(p);
      row.g_s = log2_big(ub.side_infos) - lb_s(p);
      out.rows.push_back(row);
    } catch (const ParameterError& e) {
      out.warnings.push_back(tag + " s=" + std::to_string(s) + " ell=" + std::to_string(ell) + ": " +
                             e.what());
    }
  }
  return out;
}

CaseOneResult case1_check(std::size_t m, std::size_t k_c, const FieldConfig& field) {
  if (k_c < 1 || k_c >= m) throw ParameterError("need 1 <= k_c <= m - 1");
  const FieldMatrix gen = vandermonde_generator(m, k_c, field);
  CaseOneResult out;
  out.s = m - k_c;
  const DecodableSets d = enumerate_decodable(gen, out.s);
  out.pairs = d.pairs.size();
  out.requests = d.requests.size();
  out.side_infos = d.side_infos.size();
  const auto lg = [](std::size_t n) { return n == 0 ? 0.0 : std::log2(static_cast<double>(n)); };
  out.report = make_report(lg(out.pairs), lg(out.requests), lg(out.side_infos), m, k_c, out.s);
  const UniversalBounds ub = ub_lemma2(m, k_c, out.s);
  out.full_request_privacy = ub.requests == out.requests;
  out.full_side_info_privacy = ub.side_infos == out.side_infos;
  out.full_joint_privacy = ub.joint == out.pairs;
  return out;
}

namespace {

class Recorder {
 public:
  explicit Recorder(VerifySummary& summary) : summary_(summary) {}

  void exact(const std::string& check, const std::string& params, const std::string& expected,
             const std::string& actual) {
    add({check, params, expected, actual, expected == actual});
  }

  void close(const std::string& check, const std::string& params, double expected, double actual) {
    add({check, params, format_double(expected), format_double(actual),
         std::abs(expected - actual) <= kBitsTolerance});
  }

 private:
  void add(CheckRecord r) {
    (r.pass ? summary_.passed : summary_.failed)++;
    summary_.records.push_back(std::move(r));
  }

  VerifySummary& summary_;
};

void verify_base_counts(Recorder& rec, std::size_t max_m) {
  for (std::size_t m = 2; m <= max_m; ++m) {
    for (std::size_t T : {1u, 2u, 4u}) {
      for (std::size_t k = 1; k <= T; ++k) {
        if (T % k != 0) continue;
        for (std::size_t s = 1; s < m; ++s) {
          for (std::size_t ell = 1; ell <= std::min(s + T / k, m / k); ++ell) {
            const SchemeParams p(m, T, k, ell, s);
            const DecodableSets d = enumerate_decodable(build_base_matrix(p, canonical_pattern(p)), s);
            const std::string params = "m=" + std::to_string(m) + " T=" + std::to_string(T) +
                                       " k=" + std::to_string(k) + " ell=" + std::to_string(ell) +
                                       " s=" + std::to_string(s);
            rec.exact("base_joint_count", params, thm1_joint_count(p, s).str(),
                      std::to_string(d.pairs.size()));
            rec.exact("base_request_count", params, std::to_string(thm1_request_count(p)),
                      std::to_string(d.requests.size()));
          }
        }
      }
    }
  }
}

void verify_scheme_entropies(Recorder& rec, const VerifyOptions& opt) {
  for (std::size_t m = 2; m <= opt.max_m; ++m) {
    for (std::size_t T = 1; T <= 3; ++T) {
      for (std::size_t s = 1; s < m; ++s) {
        for (std::size_t ell = 1; ell <= std::min(s + 1, m / T); ++ell) {
          const SpecialCaseParams p(m, T, ell, s);
          const std::string params = describe(p);
          const SchemeParams sp = p.scheme();
          const DecodableSets d = enumerate_decodable(build_base_matrix(sp, canonical_pattern(sp)), s);
          const PrivacyReport oracle = entropy_oracle(p, canonical_pattern(sp));
          const double lbs = lb_joint(p) - opt.k_correction(p);
          rec.close("scheme_request_entropy", params, lb_q(p), oracle.h_q);
          rec.close("scheme_joint_entropy", params, lb_joint(p), oracle.h_joint);
          rec.close("scheme_side_info_entropy", params, lbs, oracle.h_s);

          double direct = 0;
          for (const auto& [side, n] : d.counts) direct += n * std::log2(static_cast<double>(n));
          rec.close("n_bar_t_routes", params, n_bar_t(p, NBarRoute::kClosedForm), direct);
          rec.close("entropy_decomposition", params,
                    oracle.h_joint - direct / static_cast<double>(d.pairs.size()), oracle.h_s);
          rec.exact("conditioning_bound", params, "true",
                    oracle.h_s + kBitsTolerance >= oracle.h_joint - oracle.h_q ? "true" : "false");

          for (std::size_t x = 0; x <= T; ++x) {
            const std::string px = params + " x=" + std::to_string(x);
            rec.exact("occupancy_b_routes", px, appendix_B_value(p, x).str(),
                      appendix_B_raw(p, x).str());
            const BigInt raw = appendix_C_value(p, x, CRoute::kRawSum);
            rec.exact("occupancy_c_recurrence", px, raw.str(),
                      appendix_C_value(p, x, CRoute::kRecurrence).str());
            rec.exact("occupancy_c_closed_form", px, raw.str(),
                      appendix_C_value(p, x, CRoute::kClosedForm).str());
          }
        }
      }
    }
  }
}

void verify_k_count(Recorder& rec, std::size_t max_m) {
  for (std::size_t m = 2; m <= std::min<std::size_t>(max_m, 8); ++m) {
    for (std::size_t T = 1; T <= 2; ++T) {
      for (std::size_t s = 1; s < m; ++s) {
        for (std::size_t ell = 1; ell <= std::min({s + 1, m / T, std::size_t{2}}); ++ell) {
          const SpecialCaseParams p(m, T, ell, s);
          const SchemeParams sp = p.scheme();
          std::map<ClientPair, std::size_t> satisfying;
          std::size_t patterns = 0;
          std::size_t total_d = 0;
          for_each_pattern(sp, [&](const SegmentPattern& pat) {
            ++patterns;
            const DecodableSets d = enumerate_decodable(build_base_matrix(sp, pat), s);
            total_d += d.pairs.size();
            for (const auto& pair : d.pairs) ++satisfying[pair];
          });
          const std::size_t canonical_d = thm1_joint_count(sp, s).convert_to<std::size_t>();
          const BigInt k = count_satisfying_K(p);
          const BigInt all_pairs = BigInt(m) * binomial(sg(m) - 1, sg(s));
          std::size_t mismatched = 0;
          for (const auto& [pair, n] : satisfying) mismatched += (BigInt(n) != k);
          if (BigInt(satisfying.size()) != all_pairs) ++mismatched;
          rec.exact("k_per_pair", describe(p), "0", std::to_string(mismatched));
          const BigInt incidences = k * all_pairs;
          const BigInt pattern_side = BigInt(patterns) * canonical_d;
          rec.exact("k_double_counting", describe(p), incidences.str(), pattern_side.str());
          rec.exact("k_pattern_pair_incidences", describe(p), incidences.str(),
                    std::to_string(total_d));
        }
      }
    }
  }
}

void verify_universal_bounds(Recorder& rec, const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  const FieldConfig f;
  const std::size_t top = std::min<std::size_t>(opt.max_m, 10);
  if (top < 2) return;
  std::uniform_int_distribution<std::size_t> pick_m(2, top);
  std::uniform_int_distribution<std::size_t> pick_T(1, 4);
  std::uniform_int_distribution<Elem> pick_e(0, f.modulus() - 1);
  std::bernoulli_distribution sparse(0.5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = pick_m(rng), T = pick_T(rng);
    ElemMatrix a(T, m);
    for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = sparse(rng) ? 0 : pick_e(rng);
    const FieldMatrix mat(f, a);
    for (std::size_t s = 1; s < m; ++s) {
      const DecodableSets d = enumerate_decodable(mat, s);
      const UniversalBounds ub = ub_lemma2(m, T, s);
      const bool ok = ub.joint >= d.pairs.size() && ub.requests >= d.requests.size() &&
                      ub.side_infos >= d.side_infos.size();
      rec.exact("universal_bounds", "trial=" + std::to_string(trial) + " m=" + std::to_string(m) +
                    " T=" + std::to_string(T) + " s=" + std::to_string(s),
                "true", ok ? "true" : "false");
    }
  }
}

void verify_uniformity(Recorder& rec, std::size_t max_m) {
  for (std::size_t m = 3; m <= std::min<std::size_t>(max_m, 6); ++m) {
    for (std::size_t s = 1; s < m; ++s) {
      for (std::size_t ell = 1; ell <= std::min(s + 1, m / 2); ++ell) {
        const SpecialCaseParams p(m, 2, ell, s);
        const SchemeParams sp = p.scheme();
        const auto space = enumerate_patterns(sp);
        const StrategyTable strategy = scheme_strategy(p, space);
        const Posterior post = compute_posterior(sp, space, strategy, space.front(), s);
        const UniformityFlags flags = check_uniformity(post);
        rec.exact("posterior_uniform_joint_and_request", describe(p), "true true",
                  std::string(flags.joint ? "true" : "false") + " " + (flags.request ? "true" : "false"));
        rec.close("posterior_joint_tight", describe(p), std::log2(double(post.decodable.pairs.size())),
                  entropy_bits(post.joint));
      }
    }
  }
}

void verify_case1(Recorder& rec, std::size_t max_m) {
  for (std::size_t m = 2; m <= std::min<std::size_t>(max_m, 8); ++m) {
    for (std::size_t kc = 1; kc <= std::min<std::size_t>(3, m - 1); ++kc) {
      const CaseOneResult r = case1_check(m, kc);
      rec.exact("case1_full_privacy", "m=" + std::to_string(m) + " k_c=" + std::to_string(kc),
                "true true true",
                std::string(r.full_request_privacy ? "true" : "false") + " " +
                    (r.full_side_info_privacy ? "true" : "false") + " " +
                    (r.full_joint_privacy ? "true" : "false"));
    }
  }
}

}  // namespace

VerifySummary verify_all(const VerifyOptions& options) {
  VerifySummary summary;
  Recorder rec(summary);
  verify_base_counts(rec, options.max_m);
  verify_scheme_entropies(rec, options);
  verify_k_count(rec, options.max_m);
  verify_universal_bounds(rec, options);
  verify_uniformity(rec, options.max_m);
  verify_case1(rec, options.max_m);
  return summary;
}

void write_figure2_csv(std::ostream& out, const SweepResult& result) {
  out << "T,ell,r_q,r_s,r_joint\n";
  for (const auto& r : result.rows) {
    out << r.T << ',' << r.ell << ',' << format_double(r.r_q) << ',' << format_double(r.r_s) << ','
        << format_double(r.r_joint) << '\n';
  }
}

void write_figure2_gnuplot(std::ostream& out, const std::string& csv_path,
                           const std::vector<std::size_t>& T_values) {
  out << "set datafile separator ','\n"
      << "set key autotitle columnhead\n"
      << "set xlabel 'ell'\n"
      << "set yrange [0:1.05]\n"
      << "set multiplot layout 1,3\n";
  const char* columns[] = {"r_q", "r_s", "r_joint"};
  for (int c = 0; c < 3; ++c) {
    out << "set title '" << columns[c] << "'\nplot ";
    for (std::size_t i = 0; i < T_values.size(); ++i) {
      if (i > 0) out << ", \\\n     ";
      out << "'" << csv_path << "' using ($1==" << T_values[i] << " ? $2 : 1/0):" << (c + 3)
          << " with linespoints title 'T=" << T_values[i] << "'";
    }
    out << '\n';
  }
  out << "unset multiplot\n";
}

void write_gaps_csv(std::ostream& out, const GapResult& result) {
  out << "m,s,ell,G_q,G_joint,G_s_upper\n";
  for (const auto& r : result.rows) {
    out << r.m << ',' << r.s << ',' << r.ell << ',' << format_double(r.g_q) << ','
        << format_double(r.g_joint) << ',' << format_double(r.g_s_upper) << '\n';
  }
}

void write_bounds_csv(std::ostream& out, const SchemeParams& p, std::size_t s) {
  const UniversalBounds ub = ub_lemma2(p.m(), p.T(), s);
  out << "m,T,k,ell,s,ub_joint,ub_q,ub_s,thm1_joint,thm1_q\n"
      << p.m() << ',' << p.T() << ',' << p.k() << ',' << p.ell() << ',' << s << ',' << ub.joint << ','
      << ub.requests << ',' << ub.side_infos << ',' << thm1_joint_count(p, s) << ','
      << thm1_request_count(p) << '\n';
}

bool write_scheme_csv(std::ostream& out, const SpecialCaseParams& p, bool verify) {
  const double q = lb_q(p), joint = lb_joint(p), kc = k_correction(p), side = lb_s(p);
  const PrivacyReport bounds = make_report(joint, q, side, p.m(), p.T(), p.s());
  out << "m,T,l,s,lb_q,lb_joint,k_corr,lb_s,ub_q,ub_joint,ub_s,r_q,r_joint,r_s";
  if (verify) out << ",oracle_h_q,oracle_h_joint,oracle_h_s,match";
  out << '\n'
      << p.m() << ',' << p.T() << ',' << p.ell() << ',' << p.s() << ',' << format_double(q) << ','
      << format_double(joint) << ',' << format_double(kc) << ',' << format_double(side) << ','
      << format_double(bounds.ub_q) << ',' << format_double(bounds.ub_joint) << ','
      << format_double(bounds.ub_s) << ',' << format_double(bounds.r_q) << ','
      << format_double(bounds.r_joint) << ',' << format_double(bounds.r_s);
  bool match = true;
  if (verify) {
    const PrivacyReport o = entropy_oracle(p, canonical_pattern(p.scheme()));
    match = std::abs(o.h_q - q) <= kBitsTolerance && std::abs(o.h_joint - joint) <= kBitsTolerance &&
            std::abs(o.h_s - side) <= kBitsTolerance;
    out << ',' << format_double(o.h_q) << ',' << format_double(o.h_joint) << ','
        << format_double(o.h_s) << ',' << (match ? "true" : "false");
  }
  out << '\n';
  return match;
}

}  // namespace icpriv
