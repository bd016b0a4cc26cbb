// Acceptance run: one [PASS]/[FAIL] line per criterion.
// Usage: pathcat_acceptance <pathcat-cli> <data-dir>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "pathcat/models.hpp"
#include "pathcat/report.hpp"

using namespace pathcat;

namespace {

using Model = std::shared_ptr<GpdPathStructure>;

std::vector<Model> corpus() {
  return {make_discrete_model({1, 2}), make_gpd_model(std::vector<std::string>{"interval"}),
          make_gpd_model(std::vector<std::string>{"bz2"})};
}

// The corpus plus the model holding both groupoid seeds, for cross pairs.
std::vector<Model> corpus_and_mixed() {
  auto ms = corpus();
  ms.push_back(make_gpd_model(std::vector<std::string>{"interval", "bz2"}));
  return ms;
}

// Collects the reasons a criterion fails.
struct Verdict {
  std::vector<std::string> problems;
  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  bool ok() const { return problems.empty(); }
};

const CheckResult* find_check(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

// Every named check ran at least once with no failure and no skip.
void require_clean(Verdict& v, const Report& r, const std::vector<std::string>& names,
                   const std::string& model) {
  for (const auto& n : names) {
    const CheckResult* c = find_check(r, n);
    if (!c) {
      v.require(false, model + ": missing check " + n);
      continue;
    }
    v.require(c->instances > 0, model + ": " + n + " has no instances");
    v.require(c->failures.empty(), model + ": " + n + " has " +
                                       std::to_string(c->failures.size()) + " failures, first " +
                                       (c->failures.empty() ? "" : c->failures[0].rule));
    v.require(c->skipped.empty(), model + ": " + n + " skipped " + c->skipped.dump());
  }
}

bool has_rule(const ValidationReport& rep, const std::string& rule) {
  for (const auto& viol : rep.violations)
    if (viol.rule == rule && !viol.witness.is_null()) return true;
  return false;
}

// AC1 -------------------------------------------------------------------

struct Mutant {
  std::string name, rule;
  // Marks the fault on `mu`; false when the model has no site for it.
  std::function<bool(GpdPathStructure&, MutantPathStructure&)> inject;
};

// Calls visit(x, y, f) on fragment maps until it returns true.
template <class Visit>
bool any_map(GpdPathStructure& ps, Visit&& visit) {
  for (ObjId x : ps.fragment())
    for (ObjId y : ps.fragment())
      for (MorId f : ps.cat().hom(x, y))
        if (visit(x, y, f)) return true;
  return false;
}

bool non_identity(FinCategory& c, MorId f) { return f != c.identity(c.dom(f)); }

std::optional<ObjId> non_terminal(GpdPathStructure& ps) {
  for (ObjId x : ps.fragment())
    if (x != ps.terminal()) return x;
  return std::nullopt;
}

const std::vector<Mutant>& mutants() {
  static const std::vector<Mutant> all{
      {"unmark a composite fibration", "fibration_composition",
       [](GpdPathStructure& ps, MutantPathStructure& mu) {
         FinCategory& c = ps.cat();
         return any_map(ps, [&](ObjId, ObjId y, MorId f) {
           if (!ps.is_fibration(f) || !non_identity(c, f)) return false;
           for (ObjId z : ps.fragment())
             for (MorId g : c.hom(y, z)) {
               const MorId gf = c.compose(g, f);
               if (ps.is_fibration(g) && non_identity(c, g) && non_identity(c, gf) && gf != f &&
                   gf != g) {
                 mu.remove_fibrations.insert(gf);
                 return true;
               }
             }
           return false;
         });
       }},
      {"unmark a pullback of a fibration", "pullback_fibration",
       [](GpdPathStructure& ps, MutantPathStructure& mu) {
         FinCategory& c = ps.cat();
         return any_map(ps, [&](ObjId, ObjId z, MorId p) {
           if (!ps.is_fibration(p) || !non_identity(c, p)) return false;
           for (ObjId y : ps.fragment())
             for (MorId f : c.hom(y, z)) {
               const MorId proj = c.pullback(f, p).proj1;
               if (proj != p && ps.is_fibration(proj)) {
                 mu.remove_fibrations.insert(proj);
                 return true;
               }
             }
           return false;
         });
       }},
      {"unmark a pullback of an acyclic fibration", "pullback_acyclic_fibration",
       [](GpdPathStructure& ps, MutantPathStructure& mu) {
         FinCategory& c = ps.cat();
         return any_map(ps, [&](ObjId, ObjId z, MorId p) {
           if (!ps.is_acyclic_fibration(p) || !non_identity(c, p)) return false;
           for (ObjId y : ps.fragment())
             for (MorId f : c.hom(y, z)) {
               const MorId proj = c.pullback(f, p).proj1;
               if (proj != p && ps.is_weak_equivalence(proj)) {
                 mu.remove_weak_equivalences.insert(proj);
                 return true;
               }
             }
           return false;
         });
       }},
      {"unmark the first map of a 2-out-of-6 chain", "two_out_of_six",
       [](GpdPathStructure& ps, MutantPathStructure& mu) {
         FinCategory& c = ps.cat();
         return any_map(ps, [&](ObjId, ObjId x, MorId f) {
           if (!ps.is_weak_equivalence(f) || !non_identity(c, f)) return false;
           for (ObjId y : ps.fragment())
             for (MorId g : c.hom(x, y))
               for (ObjId z : ps.fragment())
                 for (MorId h : c.hom(y, z))
                   if (ps.is_weak_equivalence(c.compose(g, f)) &&
                       ps.is_weak_equivalence(c.compose(h, g))) {
                     mu.remove_weak_equivalences.insert(f);
                     return true;
                   }
           return false;
         });
       }},
      {"unmark an identity as fibration", "isomorphism_acyclic",
       [](GpdPathStructure& ps, MutantPathStructure& mu) {
         const auto x = non_terminal(ps);
         if (x) mu.remove_fibrations.insert(ps.cat().identity(*x));
         return x.has_value();
       }},
      {"unmark a map to the terminal object", "terminal_fibrant",
       [](GpdPathStructure& ps, MutantPathStructure& mu) {
         const auto x = non_terminal(ps);
         if (x) mu.remove_fibrations.insert(ps.cat().to_terminal(*x));
         return x.has_value();
       }},
      {"path object with t replaced by s", "path_object",
       [](GpdPathStructure& ps, MutantPathStructure& mu) {
         const auto x = non_terminal(ps);
         if (!x) return false;
         const MorId bang = ps.cat().to_terminal(*x);
         const PathObjectData po = ps.path_object(bang);
         if (po.s == po.t) return false;
         mu.path_overrides[bang] = make_path_object(ps.cat(), bang, po.P, po.r, po.s, po.s);
         return true;
       }},
  };
  return all;
}

Verdict ac1() {
  Verdict v;
  const auto models = corpus();
  for (const auto& m : models) {
    const ValidationReport rep = validate_path_axioms(*m);
    v.require(rep.ok(), m->name() + ": " + rep.to_json().dump());
  }
  for (const auto& mt : mutants()) {
    std::size_t sites = 0;
    for (const auto& m : models) {
      MutantPathStructure mu(*m, m->name() + "/" + mt.name);
      if (!mt.inject(*m, mu)) continue;
      ++sites;
      v.require(has_rule(validate_path_axioms(mu), mt.rule),
                mu.name() + ": not caught as " + mt.rule);
    }
    v.require(sites > 0, mt.name + ": no injection site in the corpus");
  }
  return v;
}

// AC2-AC5 ---------------------------------------------------------------

Verdict ac2() {
  Verdict v;
  for (const auto& m : corpus()) {
    require_clean(v, enrich_suite(*m), {"hom_groupoids"}, m->name());
    require_clean(v,
                  laws_suite(*m, {"groupoid", "interchange", "horizontal-formulas",
                                  "horizontal-associativity"}),
                  {"groupoid", "interchange", "horizontal-formulas", "horizontal-associativity"},
                  m->name());
  }
  return v;
}

Verdict ac3() {
  Verdict v;
  for (const auto& m : corpus_and_mixed()) {
    if (m->name().find("discrete") != std::string::npos) continue;
    require_clean(v, enrich_suite(*m), {"functor_groupoid_oracle"}, m->name());
  }
  return v;
}

Verdict ac4() {
  Verdict v;
  for (const auto& m : corpus_and_mixed())
    require_clean(v, laws_suite(*m, {"whisker-lemmas"}), {"whisker-lemmas"}, m->name());
  return v;
}

Verdict ac5() {
  Verdict v;
  for (const auto& m : corpus())
    require_clean(v, laws_suite(*m, {"fillers"}), {"fillers"}, m->name());
  return v;
}

// AC6 -------------------------------------------------------------------

Verdict ac6() {
  Verdict v;
  std::size_t undersized = 0;
  for (const auto& m : corpus_and_mixed()) {
    require_clean(v, exponential_suite(*m), {"exponential"}, m->name());
    GpdCategory& c = m->gpd();
    Enrichment e(*m);
    const ObjId one = m->terminal();
    // E = 1 with a constant evaluation cannot reach a second component of C(X, Y).
    for (ObjId x : m->fragment())
      for (ObjId y : m->fragment()) {
        if (e.hom(x, y).groupoid->components() < 2) continue;
        ExponentialCandidate cand;
        cand.X = x;
        cand.Y = y;
        cand.E = one;
        cand.product = c.product(one, x);
        cand.eval = c.compose(c.hom(x, y).front(), cand.product.proj2);
        const StrengthVerdict sv = check_exponential(*m, cand);
        ++undersized;
        const std::string at = m->name() + " " + c.object_label(x) + "->" + c.object_label(y);
        v.require(!sv.weak, at + ": under-sized candidate is weak");
        v.require(sv.witness_weak.contains("T"), at + ": no witness T");
        v.require((!sv.strong || sv.ordinary) && (!sv.ordinary || sv.weak), at + ": ordering");
      }
  }
  v.require(undersized > 0, "no under-sized candidate was tried");
  return v;
}

// AC7 -------------------------------------------------------------------

// Rebuilds R, the strict pullback of p * - along (eps_Z * -)(- x X), and the
// induced alpha : C(T, Y^X) -> R, then checks that the outer square commutes
// and that alpha and its fibres over each g : T -> Z^X have the input strength.
void check_glued_square(Verdict& v, PathStructure& ps, MorId p, const ExponentialCandidate& base,
                 bool strong, const std::string& at, std::size_t& squares) {
  FinCategory& c = ps.cat();
  const ExponentialOverFibration out = construct_exponential_over_fibration(ps, p, base);
  Enrichment e(ps);
  for (ObjId t : ps.fragment()) {
    const std::string here = at + " T=" + std::to_string(idx(t));
    const ObjId tx = c.product(t, base.X).apex;
    const GroupoidFunctor upper = exponential_functor(e, out.exp, t);
    const GroupoidFunctor lower = exponential_functor(e, base, t);
    const GroupoidFunctor left = e.left_whisker_functor(out.p_exp, t);
    const GroupoidFunctor right = e.left_whisker_functor(p, tx);
    if (*upper.tgt != *right.src || *left.tgt != *lower.src) {
      v.require(false, here + ": faces do not meet");
      continue;
    }
    ++squares;
    const bool commutes =
        compose_maps(right.maps, upper.maps) == compose_maps(lower.maps, left.maps);
    v.require(commutes, here + ": outer square does not commute");
    if (!commutes) continue;

    const GroupoidPullback R = groupoid_pullback(*lower.src, *right.src, lower.maps, right.maps);
    auto apex = std::make_shared<const FinGroupoid>(R.apex);
    const GroupoidFunctor alpha{upper.src, apex, R.mediate(left.maps, upper.maps)};
    const GroupoidFunctor pi1{apex, lower.src, R.proj1};
    const GroupoidFunctor pi2{apex, right.src, R.proj2};
    v.require(is_functor(*alpha.src, *alpha.tgt, alpha.maps), here + ": alpha is not a functor");
    v.require(compose_maps(R.proj1, alpha.maps) == left.maps &&
                  compose_maps(R.proj2, alpha.maps) == upper.maps,
              here + ": alpha does not factor the square");
    auto enough = [&](const FunctorProperties& fp) { return strong ? fp.esf() : fp.es(); };
    v.require(functor_properties(*right.src, *right.tgt, right.maps).isofibration,
              here + ": p * - is not an isofibration");
    if (enough(functor_properties(lower)))
      v.require(enough(functor_properties(pi2)), here + ": pi2 below input strength");
    v.require(enough(functor_properties(alpha)), here + ": alpha below input strength");
    for (int g = 0; g < lower.src->objects(); ++g)
      v.require(enough(functor_properties(induced_on_fibers(alpha, pi1, g))),
                here + ": fibre of alpha over " + std::to_string(g) + " below input strength");
  }
}

Verdict ac7() {
  Verdict v;
  std::size_t squares = 0;
  for (const auto& m : corpus()) {
    require_clean(v, construct_suite(*m),
                  {"exponential_over_fibration", "pi_over_fibration", "pi_horizontal"}, m->name());
    FinCategory& c = m->cat();
    const auto os = m->fragment();
    for (ObjId y : os)
      for (ObjId z : os)
        for (MorId p : c.hom(y, z)) {
          if (!m->is_fibration(p)) continue;
          for (ObjId x : os) {
            const auto base = m->exponential(x, z);
            if (!base) continue;
            const StrengthVerdict vb = check_exponential(*m, *base);
            if (!vb.weak) continue;
            const std::string at = m->name() + " p=" + std::to_string(idx(p)) +
                                   " X=" + std::to_string(idx(x));
            check_glued_square(v, *m, p, *base, vb.strong, at, squares);
          }
        }
  }
  v.require(squares > 0, "no diagram was rebuilt");
  return v;
}

// AC8, AC9 --------------------------------------------------------------

Verdict ac8() {
  Verdict v;
  std::size_t faithful = 0;
  for (const auto& m : corpus_and_mixed()) {
    const Report r = funext_suite(*m);
    require_clean(v, r, {"funext"}, m->name());
    for (const auto& rec : find_check(r, "funext")->records) {
      const json& fv = rec["verdict"];
      v.require(fv["agree"].get<bool>(), m->name() + ": sides disagree");
      if (fv["strong"].get<bool>()) {
        v.require(fv["fully_faithful"] == true, m->name() + ": strong but not faithful");
        ++faithful;
      }
    }
  }
  v.require(faithful > 0, "no strong instance reached the faithfulness check");
  return v;
}

Verdict ac9() {
  Verdict v;
  for (const auto& m : corpus_and_mixed())
    require_clean(v, construct_suite(*m), {"fiberwise_path_object", "slice_comparison", "transpose"},
                  m->name());
  return v;
}

// AC10 ------------------------------------------------------------------

int run_cli(const std::string& cmdline) {
  const int status = std::system(cmdline.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

int expected_exit(const json& report) {
  std::size_t failures = 0, skipped = 0;
  for (const auto& c : report["checks"]) {
    failures += c["failures"].size();
    skipped += c["skipped"].size();
  }
  return failures ? 1 : skipped ? 3 : 0;
}

Verdict ac10(const std::string& cli, const std::string& data) {
  Verdict v;
  using Suite = std::function<Report(PathStructure&)>;
  const std::vector<std::pair<std::string, Suite>> suites{
      {"validate", [](PathStructure& ps) { return validate_suite(ps); }},
      {"enrich", [](PathStructure& ps) { return enrich_suite(ps); }},
      {"laws", [](PathStructure& ps) { return laws_suite(ps, {}); }},
      {"check-exp", [](PathStructure& ps) { return exponential_suite(ps); }},
      {"check-pi", [](PathStructure& ps) { return pi_suite(ps); }},
      {"construct", [](PathStructure& ps) { return construct_suite(ps); }},
      {"funext", [](PathStructure& ps) { return funext_suite(ps); }}};
  for (const auto& [name, suite] : suites)
    for (std::size_t k = 0; k < corpus().size(); ++k) {
      // Fresh models each time, so memo state cannot leak between runs.
      const std::string first = suite(*corpus()[k]).to_json().dump();
      const std::string second = suite(*corpus()[k]).to_json().dump();
      v.require(first == second, name + " on corpus model " + std::to_string(k) + " differs");
    }

  const auto tmp = std::filesystem::temp_directory_path() / "pathcat_acceptance.json";
  const std::vector<std::pair<std::string, int>> runs{
      {"validate --discrete 1,2", 0},
      {"laws --gpd-seeds bz2 --law interchange", 0},
      {"construct --gpd-seeds interval", 0},
      {"validate " + data + "/point.json", 0},
      {"validate " + data + "/point_unmarked.json", 1},
      {"report --gpd-seeds interval,bz2", 0}};
  for (const auto& [args, want] : runs) {
    const int rc = run_cli(cli + " " + args + " --format json --out " + tmp.string());
    std::ifstream in(tmp);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception&) {
      v.require(false, args + ": no report written");
      continue;
    }
    v.require(rc == expected_exit(doc), args + ": exit " + std::to_string(rc) +
                                            " does not match the report");
    v.require(rc == want, args + ": exit " + std::to_string(rc) + ", expected " +
                              std::to_string(want));
  }
  const int usage = run_cli(cli + " validate --discrete 1 --gpd-seeds bz2 2>/dev/null");
  v.require(usage == 2, "conflicting model options exit " + std::to_string(usage));
  std::filesystem::remove(tmp);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: pathcat_acceptance <pathcat-cli> <data-dir>\n";
    return 2;
  }
  const std::string cli = argv[1], data = argv[2];
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"axioms and single-fault mutants", ac1},
      {"enrichment laws", ac2},
      {"functor-groupoid oracle", ac3},
      {"whiskering lemmas", ac4},
      {"fillers", ac5},
      {"exponential strengths", ac6},
      {"constructions over fibrations", ac7},
      {"function extensionality", ac8},
      {"appendix constructions", ac9},
      {"determinism and exit codes", [&] { return ac10(cli, data); }}};
  int failed = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[n].second();
    } catch (const std::exception& e) {
      v.require(false, std::string("threw: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(secs < 60.0, "took longer than 60 s");
    std::printf("[%s] AC%zu %s (%.2f s)\n", v.ok() ? "PASS" : "FAIL", n + 1,
                criteria[n].first.c_str(), secs);
    for (const auto& p : v.problems) std::printf("    %s\n", p.c_str());
    std::fflush(stdout);
    failed += !v.ok();
  }
  return failed ? 1 : 0;
}
