/// @file report.hpp
/// Deterministic verification reports: named checks, each tied to the
/// mathematical statement it certifies, with pass/fail/inconclusive
/// verdicts, JSON and text renderings, and the process exit-code mapping.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace moducert {

enum class Verdict { Pass, Fail, Inconclusive };

std::string verdict_name(Verdict v);

struct CheckRecord {
  std::string name;    ///< stable dotted identifier, e.g. "gamma.dim.d2"
  std::string anchor;  ///< the mathematical statement being certified
  Verdict verdict = Verdict::Fail;
  std::string detail;  ///< values, counterexamples, sample counts
};

/// One scenario run.  Reports are deterministic: no timestamps, insertion
/// order preserved, identical inputs give byte-identical renderings.
struct Report {
  std::string scenario;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<CheckRecord> checks;

  void param(const std::string& key, const std::string& value);
  void add(const std::string& name, const std::string& anchor, Verdict verdict,
           const std::string& detail = "");
  void add(const std::string& name, const std::string& anchor, bool pass,
           const std::string& detail = "");
  /// Appends another report's checks (name-prefixed by its scenario).
  void absorb(const Report& sub);

  long passed() const;
  long failed() const;
  long inconclusive() const;
  bool all_passed() const { return failed() == 0 && inconclusive() == 0; }

  /// 0 when nothing failed and nothing is inconclusive; 1 on any failure;
  /// 3 when the only non-passes are inconclusive.
  int exit_code() const;

  std::string to_json() const;
  std::string to_text() const;
};

}  // namespace moducert
