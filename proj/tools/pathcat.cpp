#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pathcat/models.hpp"
#include "pathcat/report.hpp"

using namespace pathcat;

namespace {

struct Args {
  std::string model_path;
  std::string discrete;
  std::string seeds;
  std::vector<std::string> laws;
  std::string candidate;
  std::size_t cap = 0;
  std::string format = "text";
  std::string out;
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::shared_ptr<PathStructure> open_model(const Args& a) {
  const int given = !a.model_path.empty() + !a.discrete.empty() + !a.seeds.empty();
  if (given != 1)
    throw Error(Errc::Precondition, "give exactly one of model.json, --discrete, --gpd-seeds");
  Caps caps;
  if (a.cap > 0) caps.budget = a.cap;
  if (!a.model_path.empty()) return load_model_file(a.model_path);
  if (!a.discrete.empty()) {
    std::vector<int> sizes;
    for (const auto& s : split(a.discrete)) {
      try {
        std::size_t used = 0;
        sizes.push_back(std::stoi(s, &used));
        if (used != s.size()) throw std::invalid_argument(s);
      } catch (const std::logic_error&) {
        throw Error(Errc::Precondition, "--discrete expects comma-separated sizes, got " + s);
      }
    }
    return make_discrete_model(sizes, caps);
  }
  return make_gpd_model(split(a.seeds), caps);
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

Report dispatch(const std::string& cmd, PathStructure& ps, const Args& a) {
  if (cmd == "validate") return validate_suite(ps);
  if (cmd == "enrich") return enrich_suite(ps);
  if (cmd == "laws") return laws_suite(ps, a.laws);
  if (cmd == "construct") return construct_suite(ps);
  if (cmd == "funext") return funext_suite(ps);
  if (cmd == "report") return full_report(ps);
  std::optional<Candidate> cand;
  if (!a.candidate.empty()) cand = candidate_from_json(ps, read_json(a.candidate));
  if (cmd == "check-exp") {
    if (cand && !std::holds_alternative<ExponentialCandidate>(*cand))
      throw Error(Errc::SchemaError, "check-exp needs an exponential candidate");
    return exponential_suite(ps, cand ? std::optional(std::get<ExponentialCandidate>(*cand))
                                      : std::nullopt);
  }
  if (cand && !std::holds_alternative<PiCandidate>(*cand))
    throw Error(Errc::SchemaError, "check-pi needs a pi candidate");
  return pi_suite(ps, cand ? std::optional(std::get<PiCandidate>(*cand)) : std::nullopt);
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case Errc::ResourceCap:
      return 3;
    case Errc::ParseError:
    case Errc::SchemaError:
    case Errc::Precondition:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path categories: hom-groupoids, homotopy function spaces and their checks"};
  app.require_subcommand(1);
  Args a;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"validate", "check the path-category axioms"},
      {"enrich", "build hom-groupoids and compare with functor groupoids"},
      {"laws", "run the 2-categorical law suites"},
      {"check-exp", "check homotopy exponential candidates"},
      {"check-pi", "check homotopy Pi-type candidates"},
      {"construct", "run the function-space and pullback constructions"},
      {"funext", "compare strength with function extensionality"},
      {"report", "run every suite"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("model", a.model_path, "model document (JSON)");
    sub->add_option("--discrete", a.discrete, "discrete model with these set sizes, e.g. 1,2");
    sub->add_option("--gpd-seeds", a.seeds,
                    "groupoid model seeds: terminal, interval, bz2, indiscrete3");
    sub->add_option("--law", a.laws, "law to run (repeatable)")
        ->check(CLI::IsMember(law_names()));
    sub->add_option("--candidate", a.candidate, "candidate document (JSON)");
    sub->add_option("--cap", a.cap, "candidate budget per enumeration");
    sub->add_option("--format", a.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", a.out, "write the report here instead of stdout");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  Report report;
  try {
    std::shared_ptr<PathStructure> ps = open_model(a);
    report = dispatch(cmd, *ps, a);
  } catch (const Error& e) {
    std::cerr << "pathcat: " << e.what() << "\n";
    if (!e.witness().is_null()) std::cerr << "  witness: " << e.witness().dump() << "\n";
    return exit_for(e);
  } catch (const std::bad_alloc&) {
    std::cerr << "pathcat: out of memory\n";
    return 3;
  }

  const std::string text = a.format == "json" ? report.to_json().dump(2) + "\n" : report.to_text();
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(a.out);
    if (!out) {
      std::cerr << "pathcat: cannot write " << a.out << "\n";
      return 2;
    }
    out << text;
  }
  return report.exit_code();
}
