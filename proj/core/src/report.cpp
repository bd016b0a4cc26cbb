#include "pathcat/report.hpp"

#include <algorithm>
#include <sstream>

#include "pathcat/models.hpp"

namespace pathcat {

namespace {

template <class Body>
void guarded(CheckResult& cr, const json& at, Body&& body) {
  try {
    body();
  } catch (const Error& e) {
    if (e.code() == Errc::ResourceCap)
      cr.skipped.push_back({{"at", at}, {"reason", e.what()}});
    else
      cr.fail("error", {{"at", at},
                        {"code", std::string(errc_name(e.code()))},
                        {"message", e.what()},
                        {"witness", e.witness()}});
  }
}

json objs(std::initializer_list<ObjId> xs) {
  json out = json::array();
  for (ObjId x : xs) out.push_back(idx(x));
  return out;
}

int strength(const StrengthVerdict& v) { return v.strong ? 3 : v.ordinary ? 2 : v.weak ? 1 : 0; }

// The constructions preserve the weak and the strong flavour only.
int required(const StrengthVerdict& v) { return v.strong ? 3 : v.weak ? 1 : 0; }

json verdict_summary(const StrengthVerdict& v) {
  return {{"weak", v.weak}, {"ordinary", v.ordinary}, {"strong", v.strong},
          {"tests", v.tests.size()}};
}

void check_ordering(CheckResult& cr, const StrengthVerdict& v, const json& at) {
  if ((v.strong && !v.ordinary) || (v.ordinary && !v.weak))
    cr.fail("strength_ordering", {{"at", at}, {"verdict", verdict_summary(v)}});
}

Report start(PathStructure& ps, std::string command) {
  Report r;
  r.command = std::move(command);
  r.model = model_summary(ps);
  return r;
}

// Fragment triples with every hom-set small enough.
struct Fragment {
  PathStructure& ps;
  std::vector<ObjId> objs;
  std::size_t limit;
  std::map<std::pair<ObjId, ObjId>, bool> small_;

  bool small(ObjId x, ObjId y) {
    auto [it, fresh] = small_.try_emplace({x, y}, false);
    if (fresh) it->second = ps.cat().hom(x, y).size() <= limit;
    return it->second;
  }
};

std::vector<MorId> fibrations(PathStructure& ps, ObjId x, ObjId y) {
  std::vector<MorId> out;
  for (MorId m : ps.cat().hom(x, y))
    if (ps.is_fibration(m)) out.push_back(m);
  return out;
}

}  // namespace

std::size_t Report::failure_count() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.failures.size();
  return n;
}

std::size_t Report::skipped_count() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.skipped.size();
  return n;
}

int Report::exit_code() const {
  if (failure_count() > 0) return 1;
  return skipped_count() > 0 ? 3 : 0;
}

json Report::to_json() const {
  json cs = json::array();
  for (const auto& c : checks) {
    json fs = json::array();
    for (const auto& f : c.failures) fs.push_back({{"rule", f.rule}, {"witness", f.witness}});
    cs.push_back({{"name", c.name},
                  {"instances", c.instances},
                  {"records", c.records},
                  {"failures", fs},
                  {"skipped", c.skipped}});
  }
  return {{"command", command},
          {"model", model},
          {"checks", cs},
          {"failure_count", failure_count()},
          {"skipped_count", skipped_count()},
          {"exit_code", exit_code()}};
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "pathcat " << command << " on " << model.value("name", std::string("?")) << "\n";
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  for (const auto& c : checks) {
    os << "  " << c.name << std::string(width - c.name.size() + 2, ' ') << "instances "
       << c.instances << "  failures " << c.failures.size();
    if (!c.skipped.empty()) os << "  skipped " << c.skipped.size();
    os << "\n";
    for (const auto& f : c.failures) os << "    FAIL " << f.rule << " " << f.witness.dump() << "\n";
    for (const auto& s : c.skipped) os << "    SKIP " << s.dump() << "\n";
  }
  os << "result: " << (failure_count() == 0 ? "PASS" : "FAIL") << " (" << failure_count()
     << " failures, " << skipped_count() << " skipped)\n";
  return os.str();
}

json model_summary(PathStructure& ps) {
  FinCategory& c = ps.cat();
  json frag = json::array();
  for (ObjId x : ps.fragment()) frag.push_back({{"id", idx(x)}, {"label", c.object_label(x)}});
  return {{"name", ps.name()}, {"fragment", frag}};
}

Report validate_suite(PathStructure& ps) {
  Report r = start(ps, "validate");
  CheckResult cr{"path_axioms"};
  guarded(cr, nullptr, [&] {
    const ValidationReport rep = validate_path_axioms(ps);
    cr.instances = ps.fragment().size();
    cr.absorb(rep);
  });
  r.checks.push_back(std::move(cr));
  return r;
}

Report enrich_suite(PathStructure& ps, const SuiteOptions& opt) {
  Report r = start(ps, "enrich");
  Enrichment e(ps);
  Fragment fr{ps, ps.fragment(), opt.max_hom_objects, {}};
  auto* gpd = dynamic_cast<GpdPathStructure*>(&ps);
  CheckResult homs{"hom_groupoids"}, oracle{"functor_groupoid_oracle"};
  for (ObjId x : fr.objs)
    for (ObjId y : fr.objs) {
      const json at = objs({x, y});
      if (!fr.small(x, y)) continue;
      guarded(homs, at, [&] {
        const HomGroupoid& h = e.hom(x, y);
        ++homs.instances;
        homs.absorb(h.laws);
        homs.records.push_back(
            {{"objects", at}, {"hom_objects", h.objects.size()}, {"hom_arrows", h.arrows.size()}});
        if (!gpd) return;
        const FinGroupoid& gx = gpd->gpd().groupoid(x);
        const FinGroupoid& gy = gpd->gpd().groupoid(y);
        if (gx.objects() > 3 || gx.arrows() > 8 || gy.objects() > 3 || gy.arrows() > 8) return;
        guarded(oracle, at, [&] {
          ++oracle.instances;
          const FunctorGroupoid fg = functor_groupoid(gx, gy);
          if (!groupoid_iso_search(*h.groupoid, fg.fun))
            oracle.fail("not_isomorphic", {{"objects", at},
                                           {"hom_arrows", h.arrows.size()},
                                           {"functor_arrows", fg.fun.arrows()}});
        });
      });
    }
  r.checks.push_back(std::move(homs));
  if (gpd) r.checks.push_back(std::move(oracle));
  return r;
}

const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names{
      "groupoid",           "interchange",          "horizontal-formulas",
      "horizontal-associativity", "whisker-exchange", "whisker-functoriality",
      "whisker-lemmas",     "path-object-independence", "extension-composition",
      "fillers"};
  return names;
}

namespace {

void run_fillers(PathStructure& ps, const SuiteOptions& opt, CheckResult& cr) {
  FinCategory& c = ps.cat();
  const auto objs = ps.fragment();
  std::size_t squares = 0;
  bool truncated = false;
  [&] {
    for (ObjId a : objs)
      for (ObjId y : objs)
        for (MorId w : c.hom(a, y)) {
          if (!ps.is_weak_equivalence(w)) continue;
          for (ObjId x : objs)
            for (ObjId z : objs)
              for (MorId p : c.hom(x, z)) {
                if (!ps.is_fibration(p)) continue;
                for (MorId h : c.hom(a, x))
                  for (MorId k : c.hom(y, z)) {
                    if (c.compose(p, h) != c.compose(k, w)) continue;
                    if (squares++ >= opt.max_squares) {
                      truncated = true;
                      return;
                    }
                    const LiftingSquare sq{w, p, h, k};
                    guarded(cr, sq.to_json(), [&] {
                      ++cr.instances;
                      const FillerResult res = find_filler(ps, sq, true);
                      if (!res.pairwise_homotopic)
                        cr.fail("fillers_not_homotopic", {{"square", sq.to_json()},
                                                          {"fillers", json(res.all)}});
                    });
                  }
              }
        }
  }();
  cr.records.push_back({{"squares", cr.instances}, {"truncated", truncated}});
}

void run_extension_composition(PathStructure& ps, Fragment& fr, CheckResult& cr) {
  FinCategory& c = ps.cat();
  Enrichment e(ps);
  for (ObjId a : fr.objs)
    for (ObjId b : fr.objs) {
      ProductFunctor F(c, a), G(c, b);
      CompositeFunctor GF(G, F);
      FunctorExtension ef(e, e, F), eg(e, e, G), egf(e, e, GF);
      for (ObjId x : fr.objs)
        for (ObjId y : fr.objs) {
          const json at = {{"factors", objs({a, b})}, {"objects", objs({x, y})}};
          if (!fr.small(x, y) || !fr.small(F.obj(x), F.obj(y)) ||
              !fr.small(GF.obj(x), GF.obj(y)))
            continue;
          guarded(cr, at, [&] {
            ValidationReport laws;
            const GroupoidFunctor f1 = ef.on_hom(x, y, &laws);
            const GroupoidFunctor g1 = eg.on_hom(F.obj(x), F.obj(y), &laws);
            const GroupoidFunctor gf = egf.on_hom(x, y, &laws);
            cr.absorb(laws);
            ++cr.instances;
            if (compose_maps(g1.maps, f1.maps) != gf.maps) cr.fail("extension_composition", at);
          });
        }
    }
}

}  // namespace

Report laws_suite(PathStructure& ps, const std::vector<std::string>& laws,
                  const SuiteOptions& opt) {
  Report r = start(ps, "laws");
  const std::vector<std::string>& run = laws.empty() ? law_names() : laws;
  for (const auto& name : run)
    if (std::find(law_names().begin(), law_names().end(), name) == law_names().end())
      throw Error(Errc::Precondition, "unknown law " + name);
  Enrichment e(ps);
  Fragment fr{ps, ps.fragment(), opt.max_hom_objects, {}};
  const auto& os = fr.objs;

  for (const auto& name : run) {
    CheckResult cr{name};
    auto tally = [&](const json& at, auto&& body) {
      guarded(cr, at, [&] {
        ValidationReport rep;
        const std::size_t n = body(rep);
        cr.instances += n;
        cr.absorb(rep);
        cr.records.push_back({{"objects", at}, {"instances", n}, {"failures", rep.violations.size()}});
      });
    };
    if (name == "groupoid" || name == "path-object-independence") {
      for (ObjId x : os)
        for (ObjId y : os)
          if (fr.small(x, y))
            tally(objs({x, y}), [&](ValidationReport& rep) {
              return name == "groupoid" ? check_groupoid_laws(e, x, y, rep)
                                        : check_path_object_independence(e, x, y, rep);
            });
    } else if (name == "horizontal-associativity" || name == "whisker-exchange") {
      for (ObjId w : os)
        for (ObjId x : os)
          for (ObjId y : os)
            for (ObjId z : os) {
              if (!fr.small(w, x) || !fr.small(x, y) || !fr.small(y, z) || !fr.small(w, z) ||
                  !fr.small(w, y) || !fr.small(x, z))
                continue;
              tally(objs({w, x, y, z}), [&](ValidationReport& rep) {
                return name == "whisker-exchange" ? check_whisker_exchange(e, w, x, y, z, rep)
                                                  : check_horizontal_associativity(e, w, x, y, z, rep);
              });
            }
    } else if (name == "fillers") {
      guarded(cr, nullptr, [&] { run_fillers(ps, opt, cr); });
    } else if (name == "extension-composition") {
      run_extension_composition(ps, fr, cr);
    } else {
      for (ObjId x : os)
        for (ObjId y : os)
          for (ObjId z : os) {
            if (!fr.small(x, y) || !fr.small(y, z) || !fr.small(x, z)) continue;
            if (name == "whisker-lemmas" && (!fr.small(z, x) || !fr.small(y, x))) continue;
            tally(objs({x, y, z}), [&](ValidationReport& rep) {
              if (name == "interchange") return check_interchange(e, x, y, z, rep);
              if (name == "horizontal-formulas") return check_horizontal_formulas(e, x, y, z, rep);
              if (name == "whisker-functoriality")
                return check_whisker_functoriality(e, x, y, z, rep);
              return check_whisker_lemmas(e, x, y, z, rep);
            });
          }
    }
    r.checks.push_back(std::move(cr));
  }
  return r;
}

Candidate candidate_from_json(PathStructure& ps, const json& doc) {
  FinCategory& c = ps.cat();
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    throw Error(Errc::SchemaError, "candidate needs a string field kind");
  auto id = [&](const char* field) -> std::uint32_t {
    if (!doc.contains(field) || !doc[field].is_number_unsigned())
      throw Error(Errc::SchemaError, std::string("candidate field ") + field +
                                         " must be a non-negative integer");
    return doc[field].get<std::uint32_t>();
  };
  auto obj = [&](const char* field) {
    const std::uint32_t v = id(field);
    if (v >= c.object_count())
      throw Error(Errc::SchemaError, std::string("object id out of range in ") + field, v);
    return obj_id(v);
  };
  auto mor = [&](const char* field) {
    const std::uint32_t v = id(field);
    if (v >= c.morphism_count())
      throw Error(Errc::SchemaError, std::string("morphism id out of range in ") + field, v);
    return mor_id(v);
  };
  const std::string kind = doc["kind"];
  if (kind == "exponential") {
    const ObjId x = obj("X"), y = obj("Y");
    if (!doc.contains("E")) {
      auto built = ps.exponential(x, y);
      if (!built) throw Error(Errc::SchemaError, "model has no exponential to complete the candidate");
      return *built;
    }
    ExponentialCandidate cand;
    cand.X = x;
    cand.Y = y;
    cand.E = obj("E");
    cand.product = c.product(cand.E, x);
    cand.eval = mor("eval");
    if (c.dom(cand.eval) != cand.product.apex || c.cod(cand.eval) != y)
      throw Error(Errc::SchemaError, "eval must be a map E x X -> Y", idx(cand.eval));
    return cand;
  }
  if (kind == "pi") {
    const MorId f = mor("f"), g = mor("g");
    if (c.cod(f) != c.dom(g)) throw Error(Errc::SchemaError, "f and g are not composable");
    if (!doc.contains("pi")) {
      auto built = ps.pi_type(f, g);
      if (!built) throw Error(Errc::SchemaError, "model has no Pi-type to complete the candidate");
      return *built;
    }
    PiCandidate cand;
    cand.f = f;
    cand.g = g;
    cand.pi = obj("pi");
    cand.to_base = mor("to_base");
    if (c.dom(cand.to_base) != cand.pi || c.cod(cand.to_base) != c.cod(g))
      throw Error(Errc::SchemaError, "to_base must be a map pi -> J", idx(cand.to_base));
    cand.pullback = c.pullback(cand.to_base, g);
    cand.eval = mor("eval");
    if (c.dom(cand.eval) != cand.pullback.apex || c.cod(cand.eval) != c.dom(f))
      throw Error(Errc::SchemaError, "eval must be a map pi x_J I -> X", idx(cand.eval));
    return cand;
  }
  throw Error(Errc::SchemaError, "unknown candidate kind " + kind);
}

Report exponential_suite(PathStructure& ps, const std::optional<ExponentialCandidate>& cand) {
  Report r = start(ps, "check-exp");
  CheckResult cr{"exponential"};
  auto one = [&](const ExponentialCandidate& k) {
    const json at = k.to_json();
    guarded(cr, at, [&] {
      const StrengthVerdict v = check_exponential(ps, k);
      ++cr.instances;
      cr.records.push_back({{"candidate", at}, {"verdict", verdict_summary(v)}});
      check_ordering(cr, v, at);
      if (!v.strong)
        cr.fail("not_strong", {{"candidate", at}, {"verdict", v.to_json()}});
    });
  };
  if (cand) {
    one(*cand);
  } else {
    for (ObjId x : ps.fragment())
      for (ObjId y : ps.fragment()) {
        std::optional<ExponentialCandidate> k;
        guarded(cr, objs({x, y}), [&] { k = ps.exponential(x, y); });
        if (k) one(*k);
      }
  }
  r.checks.push_back(std::move(cr));
  return r;
}

Report pi_suite(PathStructure& ps, const std::optional<PiCandidate>& cand) {
  Report r = start(ps, "check-pi");
  CheckResult cr{"pi_type"};
  auto one = [&](const PiCandidate& k) {
    const json at = k.to_json();
    guarded(cr, at, [&] {
      const StrengthVerdict v = check_pi_type(ps, k);
      ++cr.instances;
      cr.records.push_back({{"candidate", at}, {"verdict", verdict_summary(v)}});
      check_ordering(cr, v, at);
      if (!v.strong) cr.fail("not_strong", {{"candidate", at}, {"verdict", v.to_json()}});
    });
  };
  if (cand) {
    one(*cand);
  } else {
    const auto os = ps.fragment();
    for (ObjId x : os)
      for (ObjId i : os)
        for (MorId f : fibrations(ps, x, i))
          for (ObjId j : os)
            for (MorId g : fibrations(ps, i, j)) {
              std::optional<PiCandidate> k;
              guarded(cr, {{"f", f}, {"g", g}}, [&] { k = ps.pi_type(f, g); });
              if (k) one(*k);
            }
  }
  r.checks.push_back(std::move(cr));
  return r;
}

Report construct_suite(PathStructure& ps) {
  Report r = start(ps, "construct");
  FinCategory& c = ps.cat();
  const auto os = ps.fragment();

  CheckResult fpo{"fiberwise_path_object"};
  for (ObjId x : os)
    for (ObjId y : os)
      for (MorId f : fibrations(ps, x, y))
        guarded(fpo, {{"f", f}}, [&] {
          const FiberwisePathObject q = construct_fiberwise_path_object(ps, f);
          ++fpo.instances;
          fpo.records.push_back({{"f", f}, {"Q", q.Q.P}, {"Pf", q.Pf}});
          if (!q.verified)
            fpo.fail("not_a_path_object",
                     {{"f", f}, {"defect", path_object_defect(ps, q.Q)}, {"Q", q.to_json()}});
        });
  r.checks.push_back(std::move(fpo));

  CheckResult sc{"slice_comparison"};
  for (ObjId y : os)
    for (ObjId z : os)
      for (MorId g : fibrations(ps, y, z))
        for (ObjId x : os)
          for (MorId f : fibrations(ps, x, y))
            for (ObjId w : os)
              for (MorId h : c.hom(w, y)) {
                const json at = {{"g", g}, {"f", f}, {"h", h}};
                guarded(sc, at, [&] {
                  const SliceComparison res = slice_comparison(ps, g, f, h);
                  ++sc.instances;
                  sc.records.push_back({{"at", at},
                                        {"source_arrows", res.J.src->arrows()},
                                        {"target_arrows", res.J.tgt->arrows()}});
                  if (!res.whole_source) sc.fail("source_not_whole", at);
                  if (!res.props.bijective_on_objects) sc.fail("not_bijective_on_objects", at);
                  if (!res.props.esf()) sc.fail("not_esf", {{"at", at}, {"properties", res.props.to_json()}});
                  if (!res.witnesses_ok) sc.fail("fullness_witness", res.to_json());
                });
              }
  r.checks.push_back(std::move(sc));

  CheckResult tr{"transpose"};
  for (ObjId z : os)
    for (ObjId i : os)
      for (MorId l : fibrations(ps, z, i))
        for (ObjId y : os)
          for (MorId g : c.hom(y, z)) {
            if (!ps.is_fibration(c.compose(l, g))) continue;
            for (ObjId x : os)
              for (MorId k : fibrations(ps, x, z))
                for (ObjId v : os)
                  for (MorId vm : c.hom(v, y)) {
                    const json at = {{"l", l}, {"g", g}, {"k", k}, {"v", vm}};
                    guarded(tr, at, [&] {
                      const TransposeIso t = transpose_hom_iso(ps, {l, g, k, vm});
                      ++tr.instances;
                      tr.records.push_back({{"at", at}, {"arrows", t.forward.src->arrows()}});
                      if (!t.iso) tr.fail("not_iso", {{"at", at}, {"result", t.to_json()}});
                      if (!t.square.commutes) tr.fail("square", {{"at", at}, {"result", t.to_json()}});
                      if (!t.coherence) tr.fail("coherence", at);
                    });
                  }
          }
  r.checks.push_back(std::move(tr));

  CheckResult ex{"exponential_over_fibration"};
  for (ObjId y : os)
    for (ObjId z : os)
      for (MorId p : fibrations(ps, y, z))
        for (ObjId x : os) {
          const json at = {{"p", p}, {"X", x}};
          guarded(ex, at, [&] {
            const auto base = ps.exponential(x, z);
            if (!base) return;
            const StrengthVerdict vb = check_exponential(ps, *base);
            if (!vb.weak) return;
            const ExponentialOverFibration out = construct_exponential_over_fibration(ps, p, *base);
            const StrengthVerdict vo = check_exponential(ps, out.exp);
            ++ex.instances;
            ex.records.push_back({{"at", at}, {"base", verdict_summary(vb)}, {"out", verdict_summary(vo)}});
            if (!out.square_commutes) ex.fail("square", {{"at", at}, {"result", out.to_json()}});
            if (!ps.is_fibration(out.p_exp)) ex.fail("not_fibration", at);
            if (strength(vo) < required(vb))
              ex.fail("strength", {{"at", at}, {"base", verdict_summary(vb)}, {"out", verdict_summary(vo)}});
          });
        }
  r.checks.push_back(std::move(ex));

  CheckResult pf{"pi_over_fibration"};
  for (ObjId yo : os)
    for (ObjId i : os)
      for (MorId q : fibrations(ps, yo, i))
        for (ObjId j : os)
          for (MorId f : fibrations(ps, i, j))
            for (ObjId x : os)
              for (MorId p : fibrations(ps, x, yo)) {
                const json at = {{"q", q}, {"f", f}, {"p", p}};
                guarded(pf, at, [&] {
                  const auto base = ps.pi_type(q, f);
                  if (!base) return;
                  const StrengthVerdict vb = check_pi_type(ps, *base);
                  if (!vb.weak) return;
                  const PiOverFibration out = construct_pi_over_fibration(ps, f, p, *base);
                  const StrengthVerdict vo = check_pi_type(ps, out.out);
                  ++pf.instances;
                  pf.records.push_back({{"at", at}, {"base", verdict_summary(vb)}, {"out", verdict_summary(vo)}});
                  if (!out.square_commutes) pf.fail("square", {{"at", at}, {"result", out.to_json()}});
                  if (!ps.is_fibration(out.pi_p)) pf.fail("not_fibration", at);
                  if (strength(vo) < required(vb))
                    pf.fail("strength", {{"at", at}, {"base", verdict_summary(vb)}, {"out", verdict_summary(vo)}});
                });
              }
  r.checks.push_back(std::move(pf));

  CheckResult hz{"pi_horizontal"};
  for (ObjId x : os)
    for (ObjId i : os)
      for (MorId f : fibrations(ps, x, i))
        for (ObjId j : os)
          for (MorId g : fibrations(ps, i, j))
            for (ObjId k : os)
              for (MorId h : fibrations(ps, j, k)) {
                const json at = {{"f", f}, {"g", g}, {"h", h}};
                guarded(hz, at, [&] {
                  const auto inner = ps.pi_type(f, g);
                  if (!inner) return;
                  const auto outer = ps.pi_type(inner->to_base, h);
                  if (!outer) return;
                  const int need = std::min(required(check_pi_type(ps, *inner)),
                                            required(check_pi_type(ps, *outer)));
                  if (need == 0) return;
                  const PiCandidate out = compose_pi_horizontal(ps, f, g, h);
                  const StrengthVerdict v = check_pi_type(ps, out);
                  ++hz.instances;
                  hz.records.push_back({{"at", at}, {"verdict", verdict_summary(v)}});
                  check_ordering(hz, v, at);
                  if (strength(v) < need)
                    hz.fail("strength", {{"at", at}, {"verdict", v.to_json()}, {"required", need}});
                });
              }
  r.checks.push_back(std::move(hz));
  return r;
}

Report funext_suite(PathStructure& ps) {
  Report r = start(ps, "funext");
  CheckResult cr{"funext"};
  for (ObjId x : ps.fragment())
    for (ObjId y : ps.fragment()) {
      const json at = objs({x, y});
      guarded(cr, at, [&] {
        const auto cand = ps.exponential(x, y);
        if (!cand) return;
        if (!check_exponential(ps, *cand).weak) return;
        const FunextData fd = build_funext_comparison(ps, *cand);
        FunextVerdict v;
        bool scanned = true;
        try {
          v = check_funext(ps, *cand, fd, true);
        } catch (const Error& e) {
          if (e.code() != Errc::ResourceCap) throw;
          scanned = false;
          v = check_funext(ps, *cand, fd, false);
        }
        ++cr.instances;
        cr.records.push_back({{"objects", at}, {"verdict", v.to_json()}, {"phi_scanned", scanned}});
        if (!fd.st_square) cr.fail("st_square", at);
        if (!fd.r_homotopy) cr.fail("r_homotopy", at);
        if (!v.agree) cr.fail("disagree", {{"objects", at}, {"verdict", v.to_json()}});
        if (v.phi_homotopy_equivalence && *v.phi_homotopy_equivalence != v.phi_weak_equivalence)
          cr.fail("phi_sides", {{"objects", at}, {"verdict", v.to_json()}});
        if (v.fully_faithful && !*v.fully_faithful)
          cr.fail("not_faithful", {{"objects", at}, {"verdict", v.to_json()}});
      });
    }
  r.checks.push_back(std::move(cr));
  return r;
}

Report full_report(PathStructure& ps, const SuiteOptions& opt) {
  Report r = start(ps, "report");
  for (Report part : {validate_suite(ps), enrich_suite(ps, opt), laws_suite(ps, {}, opt),
                      exponential_suite(ps), pi_suite(ps), construct_suite(ps), funext_suite(ps)})
    for (auto& cr : part.checks) {
      cr.name = part.command + "/" + cr.name;
      r.checks.push_back(std::move(cr));
    }
  return r;
}

}  // namespace pathcat
