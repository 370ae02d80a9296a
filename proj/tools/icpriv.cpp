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


// Command-line front end: decodability queries, bounds, the k = T scheme,
// trade-off sweeps and the grid self-check.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "icpriv/analysis.hpp"
#include "icpriv/errors.hpp"
#include "json.hpp"

namespace {

using namespace icpriv;

std::string join(const IndexSet& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

IndexSet parse_indices(const std::string& text) {
  IndexSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const unsigned long v = std::stoul(item, &used);
    if (used != item.size()) throw FormatError("bad index '" + item + "'");
    out.push_back(v);
  }
  return out;
}

template <typename Read>
auto read_file(const std::string& path, Read read) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read(in);
}

// Writes to `path`, or standard output when it is empty or "-".
template <typename Write>
void emit(const std::string& path, Write write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  write(out);
}

struct DecodableArgs {
  std::string matrix, pattern;
  std::size_t T = 0, s = 1;
  bool list = false;
};

int run_decodable(const DecodableArgs& a) {
  FieldMatrix mat = [&] {
    if (!a.matrix.empty()) return read_file(a.matrix, [](std::istream& in) { return read_matrix(in); });
    const SegmentPattern pat = read_file(a.pattern, [](std::istream& in) { return read_pattern(in); });
    const std::size_t T = a.T == 0 ? pat.k() : a.T;
    return build_base_matrix(SchemeParams(pat.m(), T, pat.k(), pat.ell(), a.s), pat);
  }();
  const DecodableSets d = enumerate_decodable(mat, a.s);
  std::cout << d.pairs.size() << ' ' << d.requests.size() << ' ' << d.side_infos.size() << '\n';
  if (a.list) {
    for (const ClientPair& p : d.pairs) std::cout << p.q() << ':' << join(p.side_info()) << '\n';
  }
  return 0;
}

int run_verify_all(std::size_t max_m, const std::string& log_path) {
  VerifyOptions opt;
  opt.max_m = max_m;
  const VerifySummary summary = verify_all(opt);
  if (!log_path.empty()) {
    emit(log_path, [&](std::ostream& out) {
      for (const CheckRecord& r : summary.records) {
        out << nlohmann::ordered_json{{"check", r.check},
                              {"params", r.params},
                              {"expected", r.expected},
                              {"actual", r.actual},
                              {"pass", r.pass}}
                   .dump()
            << '\n';
      }
    });
  }
  std::map<std::string, std::pair<std::size_t, std::size_t>> by_check;
  for (const CheckRecord& r : summary.records) {
    auto& [pass, fail] = by_check[r.check];
    (r.pass ? pass : fail)++;
  }
  for (const auto& [check, counts] : by_check) {
    std::cout << check << ": " << counts.first << " passed, " << counts.second << " failed\n";
  }
  for (const CheckRecord& r : summary.records) {
    if (!r.pass) {
      std::cout << "FAIL " << r.check << " [" << r.params << "] expected " << r.expected << " got "
                << r.actual << '\n';
    }
  }
  std::cout << "total: " << summary.passed << " passed, " << summary.failed << " failed\n";
  return summary.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Privacy analysis of linear index codes over prime fields"};
  app.require_subcommand(1);

  DecodableArgs dec;
  auto* decodable = app.add_subcommand("decodable", "Count the decodable pairs of a matrix");
  auto* matrix_opt = decodable->add_option("--matrix", dec.matrix, "Matrix file (T m L, then rows)");
  auto* pattern_opt = decodable->add_option("--pattern", dec.pattern, "Segment pattern file (k ell m, then segments)");
  matrix_opt->excludes(pattern_opt);
  decodable->add_option("--T", dec.T, "Rows for a pattern file (default: one per segment)");
  decodable->add_option("--s", dec.s, "Side-information size")->required();
  decodable->add_flag("--list", dec.list, "Print every pair as q:S");

  std::size_t m = 0, T = 1, k = 1, ell = 1, s = 1;
  auto* bounds = app.add_subcommand("bounds", "Universal bounds and base-matrix counts as CSV");
  bounds->add_option("--m", m)->required();
  bounds->add_option("--T", T)->required();
  bounds->add_option("--s", s)->required();
  bounds->add_option("--k", k, "Segments (default 1)");
  bounds->add_option("--l", ell, "Segment width (default 1)");

  bool verify = false;
  auto* scheme = app.add_subcommand("scheme", "Closed-form privacy levels of the k = T scheme as CSV");
  scheme->add_option("--m", m)->required();
  scheme->add_option("--T", T)->required();
  scheme->add_option("--l", ell)->required();
  scheme->add_option("--s", s)->required();
  scheme->add_flag("--verify", verify, "Compare against brute-force enumeration");

  std::size_t q = 0;
  std::string side_text, out_path;
  std::uint64_t seed = 0;
  auto* sample = app.add_subcommand("sample", "Draw a segment pattern that serves (q, S)");
  sample->add_option("--m", m)->required();
  sample->add_option("--T", T)->required();
  sample->add_option("--l", ell)->required();
  sample->add_option("--q", q)->required();
  sample->add_option("--S", side_text, "Comma-separated side information")->required();
  sample->add_option("--seed", seed)->required();
  sample->add_option("--out", out_path, "Pattern file (default: standard output)");

  SweepSpec sweep;
  bool gnuplot = false;
  auto* figure2 = app.add_subcommand("figure2", "Privacy ratios over segment widths");
  figure2->add_option("--m", sweep.m, "Messages")->capture_default_str();
  figure2->add_option("--s", sweep.s, "Side-information size")->capture_default_str();
  figure2->add_option("--T", sweep.T_values, "Transmission counts")->delimiter(',')->capture_default_str();
  figure2->add_option("--out", out_path, "CSV file (default: standard output)");
  figure2->add_flag("--gnuplot", gnuplot, "Also write a gnuplot script next to the CSV");

  AsymptoticSpec asym;
  auto* asymptotics = app.add_subcommand("asymptotics", "Privacy gaps for growing m");
  asymptotics->add_option("--c", asym.c, "s = floor(c m)")->capture_default_str();
  asymptotics->add_option("--b", asym.b, "ell = floor(b m) + 1")->capture_default_str();
  asymptotics->add_option("--T", asym.T)->capture_default_str();
  asymptotics->add_option("--m-values", asym.m_values)->delimiter(',')->capture_default_str();
  asymptotics->add_option("--out", out_path, "CSV file (default: standard output)");

  std::size_t max_m = 8;
  std::string log_path;
  auto* verify_cmd = app.add_subcommand("verify-all", "Check every closed form against enumeration");
  verify_cmd->add_option("--max-m", max_m)->capture_default_str();
  verify_cmd->add_option("--log", log_path, "JSON-lines record of every check");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*decodable) {
      if (dec.matrix.empty() && dec.pattern.empty()) throw CLI::RequiredError("--matrix or --pattern");
      return run_decodable(dec);
    }
    if (*bounds) {
      write_bounds_csv(std::cout, SchemeParams(m, T, k, ell, s), s);
      return 0;
    }
    if (*scheme) return write_scheme_csv(std::cout, SpecialCaseParams(m, T, ell, s), verify) ? 0 : 1;
    if (*sample) {
      IndexSet side = parse_indices(side_text);
      const SpecialCaseParams p(m, T, ell, side.size());
      const SegmentPattern pat = sample_satisfying_pattern(p, ClientPair(q, std::move(side)), seed);
      emit(out_path, [&](std::ostream& out) { write_pattern(out, pat); });
      return 0;
    }
    if (*figure2) {
      const SweepResult r = sweep_figure2(sweep);
      for (const std::string& w : r.warnings) std::cerr << "warning: " << w << '\n';
      emit(out_path, [&](std::ostream& out) { write_figure2_csv(out, r); });
      if (gnuplot) {
        const std::string csv = out_path.empty() || out_path == "-" ? "fig2.csv" : out_path;
        emit(csv + ".gp", [&](std::ostream& out) { write_figure2_gnuplot(out, csv, sweep.T_values); });
      }
      return 0;
    }
    if (*asymptotics) {
      const GapResult r = asymptotic_gaps(asym);
      for (const std::string& w : r.warnings) std::cerr << "warning: " << w << '\n';
      emit(out_path, [&](std::ostream& out) { write_gaps_csv(out, r); });
      return 0;
    }
    if (*verify_cmd) return run_verify_all(max_m, log_path);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
