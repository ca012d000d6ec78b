/// @file report.cpp
#include "moducert/report.hpp"

#include <json.hpp>

#include "moducert/version.hpp"

namespace moducert {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "fail";
}

void Report::param(const std::string& key, const std::string& value) {
  params.emplace_back(key, value);
}

void Report::add(const std::string& name, const std::string& anchor,
                 Verdict verdict, const std::string& detail) {
  checks.push_back(CheckRecord{name, anchor, verdict, detail});
}

void Report::add(const std::string& name, const std::string& anchor, bool pass,
                 const std::string& detail) {
  add(name, anchor, pass ? Verdict::Pass : Verdict::Fail, detail);
}

void Report::absorb(const Report& sub) {
  for (const CheckRecord& c : sub.checks) {
    checks.push_back(CheckRecord{sub.scenario + "." + c.name, c.anchor,
                                 c.verdict, c.detail});
  }
}

long Report::passed() const {
  long n = 0;
  for (const auto& c : checks) n += c.verdict == Verdict::Pass ? 1 : 0;
  return n;
}

long Report::failed() const {
  long n = 0;
  for (const auto& c : checks) n += c.verdict == Verdict::Fail ? 1 : 0;
  return n;
}

long Report::inconclusive() const {
  long n = 0;
  for (const auto& c : checks) n += c.verdict == Verdict::Inconclusive ? 1 : 0;
  return n;
}

int Report::exit_code() const {
  if (failed() > 0) return 1;
  if (inconclusive() > 0) return 3;
  return 0;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["scenario"] = scenario;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) j["params"][k] = v;
  j["summary"] = {{"checks", checks.size()},
                  {"passed", passed()},
                  {"failed", failed()},
                  {"inconclusive", inconclusive()},
                  {"verdict", failed() > 0        ? "fail"
                              : inconclusive() > 0 ? "inconclusive"
                                                   : "pass"}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckRecord& c : checks) {
    nlohmann::ordered_json rec;
    rec["name"] = c.name;
    rec["anchor"] = c.anchor;
    rec["verdict"] = verdict_name(c.verdict);
    if (!c.detail.empty()) rec["detail"] = c.detail;
    j["checks"].push_back(std::move(rec));
  }
  return j.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::string out;
  out += std::string(kToolName) + " " + kToolVersion + " — scenario " +
         scenario + "\n";
  for (const auto& [k, v] : params) out += "  " + k + " = " + v + "\n";
  for (const CheckRecord& c : checks) {
    std::string tag = c.verdict == Verdict::Pass   ? "PASS"
                      : c.verdict == Verdict::Fail ? "FAIL"
                                                   : "INCONCLUSIVE";
    out += "[" + tag + "] " + c.name + " — " + c.anchor;
    if (!c.detail.empty()) out += " (" + c.detail + ")";
    out += "\n";
  }
  out += "summary: " + std::to_string(checks.size()) + " checks, " +
         std::to_string(passed()) + " passed, " + std::to_string(failed()) +
         " failed, " + std::to_string(inconclusive()) + " inconclusive\n";
  return out;
}

}  // namespace moducert
