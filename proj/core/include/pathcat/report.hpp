#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pathcat/appendixpb.hpp"
#include "pathcat/funcspaces.hpp"

namespace pathcat {

// One named check inside a report. `records` holds per-instance summaries in
// enumeration order; `skipped` lists instances abandoned at a resource cap.
struct CheckResult {
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t instances = 0;
  json records = json::array();
  std::vector<Violation> failures;
  json skipped = json::array();

  void fail(std::string rule, json witness) {
    failures.push_back({std::move(rule), std::move(witness)});
  }
  void absorb(const ValidationReport& rep) {
    for (const auto& v : rep.violations) failures.push_back(v);
  }
};

struct Report {
  std::string command;
  json model;
  std::vector<CheckResult> checks;

  std::size_t failure_count() const;
  std::size_t skipped_count() const;
  // 0 clean, 1 failures, 3 clean but some instance hit a resource cap.
  int exit_code() const;
  json to_json() const;
  std::string to_text() const;
};

struct SuiteOptions {
  // Largest hom-set (objects of a hom-groupoid) the law suites quantify over.
  std::size_t max_hom_objects = 8;
  // Lifting squares enumerated by the filler suite.
  std::size_t max_squares = 2000;
};

json model_summary(PathStructure& ps);

Report validate_suite(PathStructure& ps);
// Hom-groupoids of all fragment pairs with their groupoid laws; in the
// groupoid model also the functor-groupoid oracle.
Report enrich_suite(PathStructure& ps, const SuiteOptions& opt = {});

const std::vector<std::string>& law_names();
// Empty `laws` runs every law.
Report laws_suite(PathStructure& ps, const std::vector<std::string>& laws,
                  const SuiteOptions& opt = {});

using Candidate = std::variant<ExponentialCandidate, PiCandidate>;
// {kind: "exponential", X, Y[, E, eval]} or {kind: "pi", f, g[, pi, to_base, eval]};
// omitted parts are taken from the model's own construction.
Candidate candidate_from_json(PathStructure& ps, const json& doc);

Report exponential_suite(PathStructure& ps, const std::optional<ExponentialCandidate>& cand = {});
Report pi_suite(PathStructure& ps, const std::optional<PiCandidate>& cand = {});
Report construct_suite(PathStructure& ps);
Report funext_suite(PathStructure& ps);
// Every suite above, in order, as one report.
Report full_report(PathStructure& ps, const SuiteOptions& opt = {});

}  // namespace pathcat
