// Copyright 2026 The Authors.
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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hermq/verify.hpp"

using namespace hermq;

namespace {

struct Options {
  long q = 0, m = 0;
  std::optional<long> d, r, a, b, wmax;
  std::string E;          // comma list of idx:mult, idx is a canonical point
                          // index or "inf"
  std::optional<long> P;  // canonical point index
  std::string out;
  std::string format = "json";
  unsigned seed = 1;
  int threads = 0;
  std::string config;
  long trials = 500;
  unsigned long long budget = 2'000'000'000ULL;
  bool with_runtime = false;  // runtimes vary run to run; omit by default so
                              // reports stay byte-identical
};

void write_output(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + opt.out);
  f << text;
}

Curve make_curve(const Options& opt) {
  if (opt.q < 2 || opt.m < 1)
    throw CLI::ValidationError("--q and --m are required for this command");
  return Curve::build(opt.q, opt.m);
}

// "7:1,12:2,inf:1" -> divisor over canonical point indices
EffectiveDivisor parse_divisor(const Curve& curve, const std::string& text) {
  EffectiveDivisor E;
  if (text.empty()) return E;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    auto colon = tok.find(':');
    std::string pt = colon == std::string::npos ? tok : tok.substr(0, colon);
    long mult = colon == std::string::npos ? 1 : std::stol(tok.substr(colon + 1));
    if (mult < 1) throw CLI::ValidationError("--E multiplicities must be >= 1");
    std::size_t idx;
    if (pt == "inf" || pt == "Pinf") {
      idx = curve.points().size() - 1;
    } else {
      idx = static_cast<std::size_t>(std::stoul(pt));
      if (idx >= curve.points().size())
        throw CLI::ValidationError("--E point index out of range: " + pt);
    }
    E.add(idx, mult);
  }
  return E;
}

PlaneScheme to_scheme(const Curve& curve, const EffectiveDivisor& E) {
  PlaneScheme s;
  std::size_t inf = curve.points().size() - 1;
  for (const auto& [idx, mult] : E.support()) {
    if (idx == inf) {
      if (mult != 1)
        throw CLI::ValidationError("plane schemes carry at most a reduced point at infinity");
      s.reduced_at_infinity = true;
    } else {
      s.affine.add(idx, mult);
    }
  }
  return s;
}

const CurvePoint& point_at(const Curve& curve, long idx) {
  if (idx < 0 || static_cast<std::size_t>(idx) >= curve.points().size())
    throw CLI::ValidationError("--P point index out of range");
  return curve.points()[static_cast<std::size_t>(idx)];
}

// Builds the code selected by the flags: --r (one-point), --a/--b/--P
// (two-point), or --d with optional --E (complete).
LinearCode select_code(const Options& opt, const Curve& curve) {
  if (opt.r) return build_one_point(curve, *opt.r);
  if (opt.a || opt.b) {
    if (!opt.P) throw CLI::ValidationError("two-point codes need --P");
    return build_two_point(curve, opt.a.value_or(0), opt.b.value_or(0),
                           point_at(curve, *opt.P))
        .code;
  }
  if (!opt.d) throw CLI::ValidationError("give --r, --a/--b/--P, or --d");
  return build_complete(curve, *opt.d, to_scheme(curve, parse_divisor(curve, opt.E)));
}

std::string emit_reports(const Options& opt, const std::vector<VerificationReport>& reps) {
  if (opt.format == "csv") return reports_to_csv(reps, opt.with_runtime);
  if (opt.format == "txt") {
    std::string out;
    for (const auto& r : reps)
      out += r.instance.dump() + "  " + r.claim + "  claimed=" + r.claimed +
             "  computed=" + r.computed + "  " + verdict_to_string(r.verdict) + "\n";
    return out;
  }
  return reports_to_json(reps, opt.with_runtime);
}

std::vector<ConfiguredInstance> select_instances(const Options& opt) {
  std::vector<ConfiguredInstance> insts;
  if (!opt.config.empty()) {
    std::ifstream f(opt.config);
    if (!f) throw std::runtime_error("cannot read config file: " + opt.config);
    std::stringstream ss;
    ss << f.rdbuf();
    insts = parse_config(ss.str());
  } else {
    insts = default_instances();
  }
  if (opt.q > 0 && opt.m > 0) {
    std::vector<long> ds;
    if (opt.d) {
      ds = {*opt.d};
    } else {
      for (const auto& inst : insts)
        if (inst.q == opt.q && inst.m == opt.m) ds = inst.ds;
      if (ds.empty()) ds = {1};
    }
    return {{opt.q, opt.m, ds}};
  }
  return insts;
}

int run_verify(const Options& opt, const std::string& suite) {
  int threads = resolve_threads(opt.threads);
  std::vector<VerificationReport> reps;
  if (suite == "lemma-4.1") {
    reps = suite_lemma_4_1(select_instances(opt), threads, opt.budget);
  } else if (suite == "theorem-4.5") {
    reps = suite_theorem_4_5(select_instances(opt), threads, opt.budget);
  } else if (suite == "prop-2.2") {
    reps = suite_prop_2_2(select_instances(opt), threads, opt.budget);
  } else if (suite == "theorem-5.3") {
    Curve curve = make_curve(opt);
    if (!opt.d) throw CLI::ValidationError("theorem-5.3 needs --d");
    reps = suite_theorem_5_3(curve, *opt.d, parse_divisor(curve, opt.E), opt.budget);
  } else if (suite == "prop-3.2") {
    Curve curve = make_curve(opt);
    if (!opt.d) throw CLI::ValidationError("prop-3.2 needs --d");
    reps = suite_prop_3_2(curve, *opt.d,
                          to_scheme(curve, parse_divisor(curve, opt.E)), opt.budget);
  } else if (suite == "lemma-4.4") {
    reps = suite_lemma_4_4(make_curve(opt));
  } else if (suite == "lemma-2.3") {
    reps = suite_lemma_2_3(make_curve(opt), opt.seed, static_cast<int>(opt.trials));
  } else if (suite == "remark-6.4") {
    reps = suite_remark_6_4(make_curve(opt), opt.seed,
                            static_cast<int>(std::min(opt.trials, 10L)));
  } else if (suite == "coro-6.5") {
    if (!opt.r) throw CLI::ValidationError("coro-6.5 needs --r");
    reps = suite_coro_6_5(make_curve(opt), *opt.r, opt.budget);
  } else if (suite == "coro-6.6") {
    if (!opt.P) throw CLI::ValidationError("coro-6.6 needs --P");
    Curve curve = make_curve(opt);
    reps = suite_coro_6_6(curve, opt.a.value_or(0), opt.b.value_or(0),
                          point_at(curve, *opt.P), opt.budget);
  } else {
    throw CLI::ValidationError("unknown suite: " + suite);
  }
  write_output(opt, emit_reports(opt, reps));
  return reports_exit_code(reps);
}

int run_repro(const Options& opt, const std::string& example) {
  std::vector<VerificationReport> reps;
  if (example == "example-4.2") {
    reps = repro_example_4_2(opt.budget);
  } else if (example == "example-4.6") {
    reps = repro_example_4_6(opt.budget);
  } else {
    throw CLI::ValidationError("unknown example: " + example);
  }
  write_output(opt, emit_reports(opt, reps));
  return reports_exit_code(reps);
}

int run_params(const Options& opt) {
  Curve c = make_curve(opt);
  nlohmann::json j = {
      {"q", c.q()},
      {"m", c.m()},
      {"field", c.field()->name()},
      {"genus", c.genus()},
      {"points", c.points().size()},
      {"affine_points", c.affine_count()},
      {"quotient_index", (c.q() + 1) / c.m()},
  };
  if (opt.format == "txt" || opt.format == "csv") {
    std::string out;
    for (auto& [k, v] : j.items()) out += k + "=" + v.dump() + "\n";
    write_output(opt, out);
  } else {
    write_output(opt, j.dump(2) + "\n");
  }
  return 0;
}

int run_points(const Options& opt) {
  Curve c = make_curve(opt);
  if (opt.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < c.points().size(); ++i)
      arr.push_back({{"index", i}, {"point", c.point_to_string(c.points()[i])}});
    write_output(opt, arr.dump(2) + "\n");
  } else {
    std::string out;
    for (std::size_t i = 0; i < c.points().size(); ++i)
      out += std::to_string(i) + " " + c.point_to_string(c.points()[i]) + "\n";
    write_output(opt, out);
  }
  return 0;
}

int run_build(const Options& opt) {
  Curve c = make_curve(opt);
  LinearCode code = select_code(opt, c);
  if (opt.format == "json") {
    nlohmann::json j = {{"n", code.n()}, {"k", code.k()},
                        {"field", code.field->name()}, {"labels", code.labels},
                        {"matrix", code_to_string(code)}};
    write_output(opt, j.dump(2) + "\n");
  } else {
    write_output(opt, code_to_string(code));
  }
  return 0;
}

int run_dual_distance(const Options& opt) {
  Curve c = make_curve(opt);
  LinearCode code = select_code(opt, c);
  long wmax = opt.wmax.value_or(static_cast<long>(code.k()) + 1);
  DistanceResult res = dual_min_distance(code, wmax, opt.budget);
  nlohmann::json j;
  j["w_max"] = wmax;
  j["work"] = res.work;
  switch (res.status) {
    case DistanceResult::Status::Exact:
      j["status"] = "exact";
      j["d_min"] = res.d_min;
      break;
    case DistanceResult::Status::AboveWmax:
      j["status"] = "above-wmax";
      j["proven_lower"] = wmax + 1;
      break;
    case DistanceResult::Status::BudgetExceeded:
      j["status"] = "budget-exceeded";
      j["proven_lower"] = res.proven_lower;
      break;
  }
  if (res.witness) {
    j["witness_cols"] = res.witness->cols;
    nlohmann::json pts = nlohmann::json::array();
    for (std::size_t col : res.witness->cols)
      pts.push_back(c.point_to_string(c.points()[code.labels[col]]));
    j["witness_points"] = pts;
  }
  if (opt.format == "txt" || opt.format == "csv") {
    std::string out;
    for (auto& [k, v] : j.items()) out += k + "=" + v.dump() + "\n";
    write_output(opt, out);
  } else {
    write_output(opt, j.dump(2) + "\n");
  }
  return 0;
}

int run_circuits(const Options& opt) {
  Curve c = make_curve(opt);
  LinearCode code = select_code(opt, c);
  if (!opt.wmax) throw CLI::ValidationError("circuits needs --wmax (the weight)");
  std::vector<Circuit> circuits = enumerate_circuits(code, *opt.wmax, opt.budget);
  MinWeightSummary s = min_weight_codeword_count(c, code, *opt.wmax, circuits);
  nlohmann::json j;
  j["weight"] = *opt.wmax;
  j["circuits"] = s.circuit_count;
  j["codewords"] = s.codeword_count;
  nlohmann::json hist;
  auto geo_name = [](SupportGeometry g) -> std::string {
    switch (g) {
      case SupportGeometry::HorizontalLambda: return "horizontal";
      case SupportGeometry::HorizontalL0: return "on-L0";
      case SupportGeometry::OtherLine: return "other-line";
      case SupportGeometry::NonCollinear: return "non-collinear";
    }
    return "";
  };
  for (const auto& [g, n] : s.geometry_histogram) hist[geo_name(g)] = n;
  j["geometry"] = hist;
  nlohmann::json list = nlohmann::json::array();
  for (const Circuit& circ : circuits) {
    nlohmann::json pts = nlohmann::json::array();
    for (std::size_t col : circ.cols)
      pts.push_back(c.point_to_string(c.points()[code.labels[col]]));
    nlohmann::json coeffs = nlohmann::json::array();
    for (const FieldElem& e : circ.coeffs) coeffs.push_back(code.field->to_string(e));
    list.push_back({{"cols", circ.cols}, {"points", pts}, {"coeffs", coeffs}});
  }
  j["list"] = list;
  write_output(opt, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification harness for dual distances of curve-quotient codes"};
  app.require_subcommand(1);
  Options opt;
  std::string suite, example;

  auto add_common = [&](CLI::App* cmd, bool needs_qm) {
    auto* oq = cmd->add_option("--q", opt.q, "base field parameter q");
    auto* om = cmd->add_option("--m", opt.m, "exponent m (m | q+1)");
    if (needs_qm) {
      oq->required();
      om->required();
    }
    cmd->add_option("--out", opt.out, "output file (default stdout)");
    cmd->add_option("--format", opt.format, "json, csv, or txt")
        ->check(CLI::IsMember({"json", "csv", "txt"}));
    cmd->add_option("--threads", opt.threads, "worker threads (0 = auto)");
    cmd->add_option("--budget", opt.budget, "work budget for subset searches");
    cmd->add_flag("--runtime", opt.with_runtime,
                  "include runtimes in reports (breaks byte determinism)");
  };
  auto add_code_flags = [&](CLI::App* cmd) {
    cmd->add_option("--d", opt.d, "plane-form degree d");
    cmd->add_option("--r", opt.r, "one-point pole order r");
    cmd->add_option("--a", opt.a, "two-point pole order at Pinf");
    cmd->add_option("--b", opt.b, "two-point pole order at P");
    cmd->add_option("--E", opt.E, "scheme as idx:mult list, e.g. 7:1,inf:1");
    cmd->add_option("--P", opt.P, "canonical point index of P");
    cmd->add_option("--wmax", opt.wmax, "largest dependent-set size to search");
  };

  auto* params = app.add_subcommand("params", "curve invariants");
  add_common(params, true);
  auto* points = app.add_subcommand("points", "canonical point list");
  add_common(points, true);
  auto* build = app.add_subcommand("build", "build a code and print its matrix");
  add_common(build, true);
  add_code_flags(build);
  auto* dd = app.add_subcommand("dual-distance", "dual minimum distance");
  add_common(dd, true);
  add_code_flags(dd);
  auto* circ = app.add_subcommand("circuits", "enumerate dependent sets of a given size");
  add_common(circ, true);
  add_code_flags(circ);
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, false);
  add_code_flags(verify);
  verify->add_option("suite", suite, "suite id, e.g. lemma-4.1, theorem-4.5")
      ->required();
  verify->add_option("--seed", opt.seed, "rng seed for sampled suites");
  verify->add_option("--trials", opt.trials, "sample count for sampled suites");
  verify->add_option("--config", opt.config, "instance matrix config file");
  auto* repro = app.add_subcommand("repro", "reproduce a worked example");
  add_common(repro, false);
  repro->add_option("example", example, "example-4.2 or example-4.6")->required();

  try {
    app.parse(argc, argv);
    if (*params) return run_params(opt);
    if (*points) return run_points(opt);
    if (*build) return run_build(opt);
    if (*dd) return run_dual_distance(opt);
    if (*circ) return run_circuits(opt);
    if (*verify) return run_verify(opt, suite);
    if (*repro) return run_repro(opt, example);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
