#include "doctest.h"

#include "pathcat/models.hpp"
#include "pathcat/report.hpp"

using namespace pathcat;

TEST_CASE("exit codes follow failures and skips") {
  Report r;
  r.checks.emplace_back("a");
  r.checks.back().instances = 1;
  CHECK(r.exit_code() == 0);
  r.checks.back().skipped.push_back({{"at", 1}});
  CHECK(r.exit_code() == 3);
  r.checks.back().fail("rule", 1);
  CHECK(r.exit_code() == 1);
  CHECK(r.failure_count() == 1);
  CHECK(r.skipped_count() == 1);
}

TEST_CASE("clean suites on the interval model") {
  auto ps = make_gpd_model(std::vector<std::string>{"interval"});
  const Report v = validate_suite(*ps);
  CHECK(v.exit_code() == 0);
  CHECK(v.checks.size() == 1);
  const Report l = laws_suite(*ps, {"interchange"});
  REQUIRE(l.checks.size() == 1);
  CHECK(l.checks[0].name == "interchange");
  CHECK(l.checks[0].instances > 0);
  CHECK(l.exit_code() == 0);
}

TEST_CASE("mutated model fails the validate suite") {
  auto ps = make_gpd_model(std::vector<std::string>{"interval"});
  MutantPathStructure mu(*ps, "unmarked");
  mu.remove_fibrations.insert(ps->gpd().to_terminal(ps->named("I")));
  const Report r = validate_suite(mu);
  CHECK(r.exit_code() == 1);
  CHECK(r.to_json()["checks"][0]["failures"].size() == r.failure_count());
}

TEST_CASE("reports are deterministic") {
  auto a = make_gpd_model(std::vector<std::string>{"bz2"});
  auto b = make_gpd_model(std::vector<std::string>{"bz2"});
  CHECK(construct_suite(*a).to_json().dump() == construct_suite(*b).to_json().dump());
  CHECK(enrich_suite(*a).to_json().dump() == enrich_suite(*a).to_json().dump());
}

TEST_CASE("candidate documents") {
  auto ps = make_gpd_model(std::vector<std::string>{"bz2"});
  const ObjId b = ps->named("bz2");
  const json doc = {{"kind", "exponential"}, {"X", idx(b)}, {"Y", idx(b)}};
  const Candidate cand = candidate_from_json(*ps, doc);
  REQUIRE(std::holds_alternative<ExponentialCandidate>(cand));
  const Report r = exponential_suite(*ps, std::get<ExponentialCandidate>(cand));
  CHECK(r.exit_code() == 0);

  auto schema_error = [&](const json& d) {
    try {
      candidate_from_json(*ps, d);
    } catch (const Error& e) {
      return e.code() == Errc::SchemaError;
    }
    return false;
  };
  CHECK(schema_error({{"kind", "sheaf"}}));
  CHECK(schema_error({{"kind", "exponential"}, {"X", idx(b)}}));
  CHECK(schema_error({{"kind", "exponential"}, {"X", "bz2"}, {"Y", idx(b)}}));
  CHECK(schema_error(json::array()));
}
