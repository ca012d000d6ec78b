/// Acceptance battery: nine top-level criteria, one verdict line each.
/// Every criterion names the checks it gates on inside the scenario
/// reports and enforces its wall-clock budget; the process exits nonzero
/// when any criterion fails.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "moducert/errors.hpp"
#include "moducert/report.hpp"
#include "moducert/scenario.hpp"

using namespace moducert;

namespace {

constexpr std::uint64_t kSeed = 20240816ull;

const CheckRecord* find_check(const Report& r, const std::string& name) {
  for (const CheckRecord& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

/// All named checks exist and passed; otherwise `why` names the first gap.
bool gate(const Report& r, const std::vector<std::string>& names, std::string* why) {
  for (const std::string& n : names) {
    const CheckRecord* c = find_check(r, n);
    if (c == nullptr) {
      *why = "check '" + n + "' missing from the " + r.scenario + " report";
      return false;
    }
    if (c->verdict != Verdict::Pass) {
      *why = "check '" + n + "' " + verdict_name(c->verdict) +
             (c->detail.empty() ? "" : ": " + c->detail);
      return false;
    }
  }
  return true;
}

struct Criterion {
  int number = 0;
  std::string description;
  double budget_seconds = 0;  ///< 0: untimed
  bool pass = false;
  double elapsed = 0;
  std::string why;
};

void print_line(const Criterion& c) {
  std::string line = std::string(c.pass ? "[PASS]" : "[FAIL]") + " criterion " +
                     std::to_string(c.number) + ": " + c.description;
  if (!c.pass && !c.why.empty()) line += " — " + c.why;
  if (c.budget_seconds > 0) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), " (%.2fs, budget %.0fs)", c.elapsed,
                  c.budget_seconds);
    line += buf;
  }
  std::printf("%s\n", line.c_str());
}

/// Runs one timed criterion body; the body returns pass/fail and may set why.
template <class Fn>
Criterion run_criterion(int number, const std::string& description,
                        double budget_seconds, Fn body) {
  Criterion c;
  c.number = number;
  c.description = description;
  c.budget_seconds = budget_seconds;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.pass = body(&c.why);
  } catch (const Error& e) {
    c.pass = false;
    c.why = std::string("aborted: ") + e.what();
  }
  c.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                  .count();
  if (c.pass && budget_seconds > 0 && c.elapsed >= budget_seconds) {
    c.pass = false;
    c.why = "over the time budget";
  }
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion> results;

  results.push_back(run_criterion(
      1,
      "d=1 chart battery: the eliminated system is {(d+cg)d, (f+ci)d, (d+cg)g, "
      "(f+ci)g}, the locus splits into exactly two components, the component "
      "carrying the degenerating family is smooth of dimension 3, and the "
      "union of the components covers the locus",
      5.0, [](std::string* why) {
        const Report r = run_chart_scenario(1, kSeed);
        return gate(r, {"elim.d1", "count.d1", "mf-smooth.d1", "cover.d1"}, why);
      }));

  results.push_back(run_criterion(
      2,
      "d=2 chart battery: the distinguished component is the frozen "
      "triangular graph h=c, i=-cm, j=-c^2m, k=-cp, l=-cq, n=cm over "
      "(c,m,p,q), smooth of dimension 4",
      30.0, [](std::string* why) {
        const Report r = run_chart_scenario(2, kSeed);
        return gate(r, {"mf-map.d2", "mf-smooth.d2", "cover.d2"}, why);
      }));

  results.push_back(run_criterion(
      3,
      "d=3 chart battery: the distinguished component is smooth of dimension "
      "5, reported as an extrapolation beyond the exhaustively frozen range",
      300.0, [](std::string* why) {
        const Report r = run_chart_scenario(3, kSeed);
        if (!gate(r, {"mf-smooth.d3"}, why)) return false;
        const CheckRecord* c = find_check(r, "mf-smooth.d3");
        if (c->detail.find("extrapolation") == std::string::npos) {
          *why = "the d=3 verdict does not carry the extrapolation note";
          return false;
        }
        return true;
      }));

  results.push_back(run_criterion(
      4,
      "degeneration locus: 20 random direction/slope points per d in [1,5] "
      "give kernels of dimension d+2, and 50 random families per d in [1,4] "
      "have limits equal to the locus kernels exactly",
      30.0, [](std::string* why) {
        const Report r = run_gamma_scenario(5, 20, kSeed);
        std::vector<std::string> names;
        for (int d = 1; d <= 5; ++d) names.push_back("dim.d" + std::to_string(d));
        for (int d = 1; d <= 4; ++d) names.push_back("limit.d" + std::to_string(d));
        return gate(r, names, why);
      }));

  results.push_back(run_criterion(
      5,
      "chart transition for d in [1,5]: involutive, fixing a1=1, scaling the "
      "fibre by -1/a1^2, and equal to the chart change of the quadric "
      "xz + y^2 = 0 on its smooth locus",
      5.0, [](std::string* why) {
        const Report r = run_transition_scenario(5);
        std::vector<std::string> names;
        for (int d = 1; d <= 5; ++d) {
          for (const char* k : {"involution", "fixed", "quadric", "fibre", "module"}) {
            names.push_back(std::string(k) + ".d" + std::to_string(d));
          }
        }
        return gate(r, names, why);
      }));

  results.push_back(run_criterion(
      6,
      "rank inequality, exhaustively for m <= 5 and r_i <= 5: "
      "(sum r_i)^2 >= sum (2m+1-2i) r_i, equality exactly at all-ones, and "
      "the filtration bound is tight exactly at equality",
      10.0, [](std::string* why) {
        const Report r = run_ineq_scenario(5, 5);
        return gate(r, {"holds", "equality-iff", "tight-iff", "frozen"}, why);
      }));

  results.push_back(run_criterion(
      7,
      "pushforward Chern characters: (0, 2C, 2d), (0, 2C, d), and "
      "(0, dH, -d^2 H^2/2) for d <= 10, additivity across the structure "
      "sequence of the double curve, and the strict-transform defect "
      "identity on 200 random blowup chains",
      10.0, [](std::string* why) {
        const Report r = run_chern_scenario(200, kSeed);
        return gate(r,
                    {"push-2c", "push-sum", "ses", "push-picard", "defect-frozen",
                     "defect-random"},
                    why);
      }));

  results.push_back(run_criterion(
      8,
      "elementary-transform ledger: the double curve drains in exactly two "
      "steps with multiplicity trace 2, 1, 0; its choice dimension is d+2 "
      "for d in [1,5] and 1 on the ample side; and the backward run "
      "restores every exceptional invariant to zero through traces -b*j on "
      "100 random consistent graphs",
      30.0, [](std::string* why) {
        const Report r = run_transform_scenario(100, kSeed);
        return gate(r,
                    {"2c-forward", "2c-choice", "picard1-choice", "random-validate",
                     "random-backward"},
                    why);
      }));

  bool previous_all_pass = true;
  for (const Criterion& c : results) previous_all_pass = previous_all_pass && c.pass;
  {
    Criterion c;
    c.number = 9;
    c.description =
        "scope: projectivity of the moduli problem, global isomorphism types, "
        "and punctual-quotient dimension counts are not decided here; they "
        "are replaced by the exact chart, cover, transition, inequality, and "
        "ledger certificates above";
    c.pass = previous_all_pass;
    if (!c.pass) c.why = "a replacement certificate failed";
    results.push_back(c);
  }

  int failures = 0;
  for (const Criterion& c : results) {
    print_line(c);
    if (!c.pass) ++failures;
  }
  if (failures > 0) {
    std::printf("acceptance: %d of %zu criteria failed\n", failures, results.size());
    return 1;
  }
  std::printf("acceptance: all %zu criteria passed\n", results.size());
  return 0;
}
