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
//
// Acceptance gate: twelve criteria, one pass/fail line each. Verdicts that
// document a discrepancy in a published constant (count formulas, per-case
// alpha values, the e > 0 one-point reduction) are expected outcomes; the
// criteria check that the harness resolves them and records the evidence,
// not that every published value is confirmed.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "hermq/verify.hpp"

using namespace hermq;

namespace {

int g_failures = 0;

struct Criterion {
  int id;
  std::string name;
  std::chrono::steady_clock::time_point start;
  long limit_ms;
  bool ok = true;
  std::string detail;

  Criterion(int id_, std::string name_, long limit_ms_)
      : id(id_), name(std::move(name_)),
        start(std::chrono::steady_clock::now()), limit_ms(limit_ms_) {}

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }

  ~Criterion() {
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (ms > limit_ms) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += "over time limit " + std::to_string(limit_ms) + " ms";
    }
    if (!ok) ++g_failures;
    std::printf("CRITERION %2d: %s  (%ld ms)  %s%s%s\n", id,
                ok ? "PASS" : "FAIL", ms, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
  }
};

const VerificationReport* find(const std::vector<VerificationReport>& rs,
                               const std::string& claim) {
  for (const auto& r : rs)
    if (r.claim == claim) return &r;
  return nullptr;
}

bool decided(const VerificationReport* r) {
  return r && (r->verdict == Verdict::Match || r->verdict == Verdict::Mismatch);
}

std::size_t first_nonzero_x(const Curve& c) {
  std::size_t idx = 0;
  while (c.points()[idx].x.is_zero()) ++idx;
  return idx;
}

// exhaustive (x, y) recount, independent of the fiber-based construction
long brute_affine_count(const Curve& c) {
  const Field* f = c.field().get();
  long n = 0;
  for (long xl = -1; xl < f->order() - 1; ++xl)
    for (long yl = -1; yl < f->order() - 1; ++yl) {
      FieldElem x(f, static_cast<std::int32_t>(xl));
      FieldElem y(f, static_cast<std::int32_t>(yl));
      if ((f->pow(y, c.q()) + y - f->pow(x, c.m())).is_zero()) ++n;
    }
  return n;
}

void criterion_1() {
  Criterion c(1, "curve invariants for every configured (q,m), < 1 s each",
              12000);
  for (const auto& inst : default_instances()) {
    auto t0 = std::chrono::steady_clock::now();
    std::string tag =
        "(" + std::to_string(inst.q) + "," + std::to_string(inst.m) + ")";
    Curve curve = Curve::build(inst.q, inst.m);
    long expected = 1 + inst.q * (1 + (inst.q - 1) * inst.m);
    c.require(static_cast<long>(curve.points().size()) == expected,
              "point count formula " + tag);
    c.require(curve.genus() == (inst.q - 1) * (inst.m - 1) / 2,
              "genus formula " + tag);
    c.require(brute_affine_count(curve) ==
                  static_cast<long>(curve.affine_count()),
              "exhaustive affine recount " + tag);
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    c.require(ms <= 1000, "instance " + tag + " over 1 s");
  }
}

void criterion_2() {
  Criterion c(2, "worked counterexample (5,2,d=1): distance 4, non-collinear support",
              5000);
  auto reps = repro_example_4_2();
  c.require(reps.size() == 3, "three reports");
  for (const auto& r : reps)
    c.require(r.verdict == Verdict::Match, r.claim);
}

void criterion_3() {
  Criterion c(3, "worked example (5,3,d=1): distance 3, non-horizontal support",
              5000);
  auto reps = repro_example_4_6();
  c.require(reps.size() == 2, "two reports");
  for (const auto& r : reps)
    c.require(r.verdict == Verdict::Match, r.claim);
}

void criterion_4() {
  Criterion c(4, "horizontal-support theorem at (8,3,d=1) + count verdict", 30000);
  auto reps = suite_theorem_4_5({{8, 3, {1}}}, 1);
  const auto* dist = find(reps, "theorem-4.5:distance");
  const auto* hor = find(reps, "theorem-4.5:horizontal-supports");
  const auto* cnt = find(reps, "theorem-4.5:count");
  c.require(dist && dist->verdict == Verdict::Match && dist->computed == "3",
            "distance 3");
  c.require(hor && hor->verdict == Verdict::Match, "all supports horizontal");
  // the closed form disagrees with the exhaustive enumeration; the criterion
  // is that the comparison is resolved and recorded, either way
  c.require(decided(cnt), "count verdict recorded");
  c.require(cnt && cnt->computed == "3528", "enumerated codeword count");
}

void criterion_5() {
  Criterion c(5, "general-scheme parts 1-2 at (7,4,d=2,|E|=1): distance 3", 60000);
  Curve curve = Curve::build(7, 4);
  EffectiveDivisor E;
  E.add(first_nonzero_x(curve), 1);
  auto reps = suite_theorem_5_3(curve, 2, E);
  const auto* alpha = find(reps, "theorem-5.3:alpha-invariants");
  c.require(alpha && alpha->computed == "alpha1=1 alpha2=1", "alpha = (1,1)");
  const auto* p1 = find(reps, "theorem-5.3(1):distance-lower-bound");
  c.require(p1 && p1->verdict == Verdict::Match, "lower bound >= 3");
  const auto* p2 = find(reps, "theorem-5.3(2):distance");
  c.require(p2 && p2->verdict == Verdict::Match && p2->computed == "3",
            "distance exactly 3");
  const auto* cnt = find(reps, "theorem-5.3(2):count-lower-bound");
  c.require(decided(cnt), "count comparison recorded");
}

void criterion_6() {
  Criterion c(6, "general-scheme part 3 at (11,6,d=2,|E|=1): horizontal supports",
              300000);
  Curve curve = Curve::build(11, 6);
  EffectiveDivisor E;
  E.add(first_nonzero_x(curve), 1);
  auto reps = suite_theorem_5_3(curve, 2, E);
  const auto* p2 = find(reps, "theorem-5.3(2):distance");
  c.require(p2 && p2->verdict == Verdict::Match && p2->computed == "3",
            "distance exactly 3");
  const auto* p3 = find(reps, "theorem-5.3(3):horizontal-supports-and-exact-count");
  c.require(p3 != nullptr, "part 3 applies");
  if (p3) {
    c.require(p3->computed.rfind("all horizontal", 0) == 0,
              "all minimum-weight supports horizontal");
    // enumerated count vs the closed form 24000: recorded, either way
    c.require(decided(p3), "count comparison recorded");
  }
}

void criterion_7() {
  Criterion c(7, "subcode containment + dual-distance inequality, all instances",
              10000);
  // the inequality check is capped at length 500 and a 1e7 search budget:
  // beyond that the weight >= 4 searches alone exceed the time budget, and
  // containment (which implies the inequality) is still verified exactly
  auto reps = suite_prop_2_2(default_instances(), 1, 10'000'000ULL, 500);
  long pairs = 0;
  for (const auto& r : reps) {
    if (r.claim == "prop-2.2:subcode") {
      ++pairs;
      c.require(r.verdict == Verdict::Match,
                "containment at " + r.instance.dump());
    } else {
      c.require(r.verdict != Verdict::Mismatch,
                "inequality at " + r.instance.dump());
    }
  }
  c.require(pairs >= 24, "every configured (q,m,d<q) covered");
}

void criterion_8() {
  Criterion c(8, "uncomplete duals at (7,4,d=2), deg E <= 1", 60000);
  Curve curve = Curve::build(7, 4);
  auto reps0 = suite_prop_3_2(curve, 2, PlaneScheme{});
  c.require(reps0.size() == 1 && reps0[0].verdict == Verdict::Match, "E empty");
  PlaneScheme E;
  E.affine.add(first_nonzero_x(curve), 1);
  auto reps1 = suite_prop_3_2(curve, 2, E);
  c.require(reps1.size() == 1 && reps1[0].verdict == Verdict::Match,
            "E one reduced point");
}

void criterion_9() {
  Criterion c(9, "cohomology/line equivalence over seeded schemes", 60000);
  auto reps = suite_lemma_2_3(Curve::build(5, 2), 20260823, 500);
  c.require(reps.size() == 1 && reps[0].verdict == Verdict::Match,
            "zero counterexamples");
  c.require(reps[0].witness["h1_positive"].get<long>() > 0 &&
                reps[0].witness["h1_zero"].get<long>() > 0,
            "both sides sampled");
}

void criterion_10() {
  Criterion c(10, "space-curve collinear triples at (8,3), exhaustive", 120000);
  auto reps = suite_lemma_4_4(Curve::build(8, 3));
  c.require(reps.size() == 1 && reps[0].verdict == Verdict::Match,
            "all collinear triples horizontal");
  c.require(reps[0].witness["triples_checked"].get<long>() > 800000,
            "full triple space covered");
}

void criterion_11() {
  Criterion c(11, "divisor equivalence (q+1)P ~ (q+1)Qinf, 10 seeded points", 60000);
  for (auto [q, m] : {std::pair<long, long>{8, 3}, {5, 3}}) {
    auto reps = suite_remark_6_4(Curve::build(q, m), 20260823, 10);
    c.require(reps.size() == 2, "two reports");
    for (const auto& r : reps)
      c.require(r.verdict == Verdict::Match,
                r.claim + " at (" + std::to_string(q) + "," + std::to_string(m) + ")");
  }
}

void criterion_12() {
  Criterion c(12, "one-point and two-point corollaries, all cases", 300000);

  // e = 0, c >= 3: exact-count claim; enumeration disagrees, recorded
  auto r83 = suite_coro_6_5(Curve::build(8, 3), 8);
  c.require(find(r83, "coro-6.5(1):distance")->verdict == Verdict::Match,
            "(8,3,r=8) distance");
  c.require(decided(find(r83, "coro-6.5(1):count")), "(8,3,r=8) count verdict");
  c.require(find(r83, "coro-6.5:decomposition-routes")->verdict == Verdict::Match,
            "(8,3,r=8) routes");

  // e = 0, c = 2: lower-bound count claim holds
  auto r53 = suite_coro_6_5(Curve::build(5, 3), 5);
  for (const auto& r : r53)
    c.require(r.verdict == Verdict::Match, "(5,3,r=5) " + r.claim);

  // e > 0: the claimed reduction fails and the distance claim with it; the
  // ceil-route decomposition still verifies
  auto r95 = suite_coro_6_5(Curve::build(9, 5), 19);
  c.require(decided(find(r95, "coro-6.5(2):distance")), "(9,5,r=19) distance verdict");
  const auto* routes95 = find(r95, "coro-6.5:decomposition-routes");
  c.require(routes95 && routes95->verdict == Verdict::Match &&
                routes95->computed.find("ceil (r = d'q-e'): verified") !=
                    std::string::npos,
            "(9,5,r=19) ceil route");

  // two-point case A: reduction verified, alpha computed exactly, distance
  // check budget-limited (skipped with its proven bound)
  {
    Curve c116 = Curve::build(11, 6);
    CurvePoint P0 =
        CurvePoint::affine(c116.field()->zero(), c116.field()->zero());
    auto reps = suite_coro_6_6(c116, 0, 41, P0, 300'000'000ULL);
    c.require(find(reps, "coro-6.6:reduction")->verdict == Verdict::Match,
              "case A reduction");
    const auto* alpha = find(reps, "coro-6.6:alpha-invariants");
    c.require(alpha && alpha->computed == "alpha1=2 alpha2=1", "case A alpha");
    const auto* dist = find(reps, "coro-6.6(A):distance-lower-bound");
    c.require(dist && dist->verdict != Verdict::NotApplicable, "case A verdict");
  }

  // two-point cases B and C on (7,4)
  {
    Curve c74 = Curve::build(7, 4);
    CurvePoint P0 = CurvePoint::affine(c74.field()->zero(), c74.field()->zero());
    auto repsB = suite_coro_6_6(c74, 10, 3, P0);
    c.require(find(repsB, "coro-6.6:reduction")->verdict == Verdict::Match,
              "case B reduction");
    const auto* alphaB = find(repsB, "coro-6.6:alpha-invariants");
    c.require(alphaB && alphaB->computed == "alpha1=0 alpha2=1", "case B alpha");
    c.require(decided(find(repsB, "coro-6.6(B):distance")), "case B verdict");

    const CurvePoint& P = c74.points()[first_nonzero_x(c74)];
    auto repsC = suite_coro_6_6(c74, 6, 7, P);
    c.require(find(repsC, "coro-6.6:reduction")->verdict == Verdict::Match,
              "case C reduction");
    const auto* alphaC = find(repsC, "coro-6.6:alpha-invariants");
    c.require(alphaC && alphaC->computed == "alpha1=1 alpha2=1", "case C alpha");
    c.require(decided(find(repsC, "coro-6.6(C):distance")), "case C verdict");
  }
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  std::printf("ACCEPTANCE: %s (%d failing)\n", g_failures == 0 ? "PASS" : "FAIL",
              g_failures);
  return g_failures == 0 ? 0 : 1;
}
