#include "pathcat/models.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace pathcat {

namespace {

std::size_t maps_hash(ObjId dom, ObjId cod, const FunctorMaps& m) {
  std::size_t h = idx(dom) * 1000003u + idx(cod);
  for (int a : m.arr) h ^= static_cast<std::size_t>(a) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

GpdCategory::GpdCategory(Caps caps) : caps_(caps) { terminal_ = intern(builtin::terminal(), "1"); }

ObjId GpdCategory::intern(FinGroupoid g, const std::string& label) {
  const std::size_t h = g.hash();
  auto& bucket = obj_index_[h];
  for (ObjId x : bucket)
    if (*objects_[idx(x)].g == g) {
      if (objects_[idx(x)].label.empty() && !label.empty()) objects_[idx(x)].label = label;
      return x;
    }
  if (objects_.size() >= caps_.objects)
    throw Error(Errc::ResourceCap, "generated object cap reached", {{"cap", caps_.objects}});
  const ObjId x = obj_id(static_cast<std::uint32_t>(objects_.size()));
  objects_.push_back({std::make_shared<const FinGroupoid>(std::move(g)), label, MorId{}});
  bucket.push_back(x);
  objects_[idx(x)].identity = intern(x, x, identity_maps(*objects_[idx(x)].g));
  return x;
}

MorId GpdCategory::intern(ObjId dom, ObjId cod, FunctorMaps maps) {
  const std::size_t h = maps_hash(dom, cod, maps);
  auto& bucket = mor_index_[h];
  for (MorId m : bucket)
    if (mors_[idx(m)].dom == dom && mors_[idx(m)].cod == cod && mors_[idx(m)].maps.arr == maps.arr)
      return m;
  if (mors_.size() >= caps_.morphisms)
    throw Error(Errc::ResourceCap, "generated morphism cap reached", {{"cap", caps_.morphisms}});
  const MorId m = mor_id(static_cast<std::uint32_t>(mors_.size()));
  auto key = functor_key(groupoid(dom), maps);
  mors_.push_back({dom, cod, std::move(maps), std::move(key)});
  bucket.push_back(m);
  return m;
}

GroupoidFunctor GpdCategory::functor(MorId m) const {
  return {groupoid_ptr(dom(m)), groupoid_ptr(cod(m)), maps(m)};
}

MorId GpdCategory::compose(MorId g, MorId f) {
  if (cod(f) != dom(g))
    throw Error(Errc::NotComposable, "functors not composable", json::array({idx(g), idx(f)}));
  const std::uint64_t key = (static_cast<std::uint64_t>(idx(g)) << 32) | idx(f);
  if (auto it = comp_memo_.find(key); it != comp_memo_.end()) return it->second;
  const MorId gf = intern(dom(f), cod(g), compose_maps(maps(g), maps(f)));
  comp_memo_.emplace(key, gf);
  return gf;
}

std::vector<MorId> GpdCategory::hom(ObjId x, ObjId y) {
  auto key = std::make_pair(x, y);
  if (auto it = hom_memo_.find(key); it != hom_memo_.end()) return it->second;
  EnumOptions opt;
  opt.budget = caps_.budget;
  std::vector<MorId> out;
  enumerate_functors(groupoid(x), groupoid(y), opt, [&](const FunctorMaps& f) {
    out.push_back(intern(x, y, f));
    return true;
  });
  return hom_memo_.emplace(key, std::move(out)).first->second;
}

bool GpdCategory::canonical_less(MorId a, MorId b) const {
  return mors_[idx(a)].key < mors_[idx(b)].key;
}

std::vector<MorId> GpdCategory::lifts(MorId k, MorId p) {
  auto key = std::make_pair(k, p);
  if (auto it = lift_memo_.find(key); it != lift_memo_.end()) return it->second;
  if (cod(k) != cod(p)) throw Error(Errc::Precondition, "lift of maps with different codomains");
  LiftConstraint lc{&maps(p), &maps(k)};
  EnumOptions opt;
  opt.constraint = &lc;
  opt.budget = caps_.budget;
  std::vector<FunctorMaps> found;
  enumerate_functors(groupoid(dom(k)), groupoid(dom(p)), opt, [&](const FunctorMaps& f) {
    found.push_back(f);
    return true;
  });
  std::vector<MorId> out;
  for (auto& f : found) out.push_back(intern(dom(k), dom(p), std::move(f)));
  return lift_memo_.emplace(key, std::move(out)).first->second;
}

std::optional<MorId> GpdCategory::first_lift(MorId k, MorId p) {
  if (auto it = lift_memo_.find({k, p}); it != lift_memo_.end()) {
    if (it->second.empty()) return std::nullopt;
    return it->second.front();
  }
  if (cod(k) != cod(p)) throw Error(Errc::Precondition, "lift of maps with different codomains");
  LiftConstraint lc{&maps(p), &maps(k)};
  EnumOptions opt;
  opt.constraint = &lc;
  opt.budget = caps_.budget;
  std::optional<FunctorMaps> found;
  enumerate_functors(groupoid(dom(k)), groupoid(dom(p)), opt, [&](const FunctorMaps& f) {
    found = f;
    return false;
  });
  if (!found) return std::nullopt;
  return intern(dom(k), dom(p), std::move(*found));
}

MorId GpdCategory::to_terminal(ObjId x) {
  const FinGroupoid& g = groupoid(x);
  FunctorMaps m;
  m.obj.assign(g.objects(), 0);
  m.arr.assign(g.arrows(), 0);
  return intern(x, terminal_, std::move(m));
}

const PullbackData& GpdCategory::pullback(MorId f, MorId g) {
  auto key = std::make_pair(f, g);
  if (auto it = pullbacks_.find(key); it != pullbacks_.end()) return it->second.data;
  if (cod(f) != cod(g)) throw Error(Errc::Precondition, "pullback of maps with different codomains");
  GroupoidPullback gp = groupoid_pullback(groupoid(dom(f)), groupoid(dom(g)), maps(f), maps(g));
  const ObjId apex = intern(gp.apex);
  PullbackData data{f, g, apex, intern(apex, dom(f), gp.proj1), intern(apex, dom(g), gp.proj2)};
  return pullbacks_.emplace(key, PullbackRec{data, std::move(gp)}).first->second.data;
}

const GroupoidPullback& GpdCategory::pullback_groupoid(const PullbackData& pb) {
  pullback(pb.f, pb.g);
  return pullbacks_.at({pb.f, pb.g}).gp;
}

MorId GpdCategory::mediator(const PullbackData& pb, MorId a, MorId b) {
  const GroupoidPullback& gp = pullback_groupoid(pb);
  if (dom(a) != dom(b)) throw Error(Errc::Precondition, "cone legs have different domains");
  return intern(dom(a), pb.apex, gp.mediate(maps(a), maps(b)));
}

std::string GpdCategory::object_label(ObjId x) const {
  const auto& rec = objects_[idx(x)];
  if (!rec.label.empty()) return rec.label;
  return "G" + std::to_string(idx(x));
}

const GpdCategory::PathRec& GpdCategory::vertical_path(MorId p) {
  if (auto it = paths_.find(p); it != paths_.end()) return it->second;
  PathGroupoid pg = vertical_path_groupoid(groupoid(dom(p)), maps(p));
  const ObjId P = intern(std::move(pg.path));
  const ObjId y = dom(p);
  PathRec rec{P, intern(y, P, std::move(pg.r)), intern(P, y, std::move(pg.s)),
              intern(P, y, std::move(pg.t))};
  return paths_.emplace(p, rec).first->second;
}

const ExponentialCandidate& GpdCategory::function_space(ObjId x, ObjId y) {
  auto key = std::make_pair(x, y);
  if (auto it = exps_.find(key); it != exps_.end()) return it->second;
  FunctorGroupoid fg = functor_groupoid(groupoid(x), groupoid(y), caps_.budget);
  const ObjId e = intern(fg.fun);
  ExponentialCandidate cand;
  cand.X = x;
  cand.Y = y;
  cand.E = e;
  cand.product = product(e, x);
  const GroupoidPullback& gp = pullback_groupoid(cand.product);
  const FinGroupoid& yg = groupoid(y);
  FunctorMaps ev;
  for (const auto& [F, ox] : gp.obj_pairs) ev.obj.push_back(fg.functors[F].obj[ox]);
  for (const auto& [th, al] : gp.arr_pairs) {
    const auto& G = fg.functors[fg.fun.cod(th)];
    const int x0 = groupoid(x).dom(al);
    ev.arr.push_back(yg.compose(G.arr[al], fg.components[th][x0]));
  }
  cand.eval = intern(cand.product.apex, y, std::move(ev));
  return exps_.emplace(key, cand).first->second;
}

const PiCandidate& GpdCategory::pi(MorId f, MorId g) {
  auto key = std::make_pair(f, g);
  if (auto it = pis_.find(key); it != pis_.end()) return it->second;
  if (cod(f) != dom(g)) throw Error(Errc::Precondition, "Pi-type needs f : X -> I and g : I -> J");
  const FinGroupoid& xg = groupoid(dom(f));
  const FinGroupoid& ig = groupoid(dom(g));
  const FinGroupoid& jg = groupoid(cod(g));
  PiGroupoid pg = pi_groupoid(xg, ig, jg, maps(f), maps(g), caps_.budget);
  PiCandidate cand;
  cand.f = f;
  cand.g = g;
  cand.pi = intern(pg.pi);
  cand.to_base = intern(cand.pi, cod(g), pg.to_base);
  cand.pullback = pullback(cand.to_base, g);
  const GroupoidPullback& gp = pullback_groupoid(cand.pullback);
  FunctorMaps ev;
  for (const auto& [p, i] : gp.obj_pairs) ev.obj.push_back(pg.eval_object(p, i));
  for (const auto& [pa, ga] : gp.arr_pairs) ev.arr.push_back(pg.eval_arrow(ig, xg, pa, ga));
  cand.eval = intern(cand.pullback.apex, dom(f), std::move(ev));
  return pis_.emplace(key, cand).first->second;
}

bool GpdCategory::isofibration(MorId m) {
  if (auto it = isofib_memo_.find(idx(m)); it != isofib_memo_.end()) return it->second;
  const bool v = is_isofibration(groupoid(dom(m)), groupoid(cod(m)), maps(m));
  isofib_memo_.emplace(idx(m), v);
  return v;
}

bool GpdCategory::equivalence(MorId m) {
  if (auto it = equiv_memo_.find(idx(m)); it != equiv_memo_.end()) return it->second;
  const bool v = is_equivalence(groupoid(dom(m)), groupoid(cod(m)), maps(m));
  equiv_memo_.emplace(idx(m), v);
  return v;
}

std::optional<MorId> GpdCategory::quasi_inverse(MorId f) {
  const FinGroupoid& a = groupoid(dom(f));
  const FinGroupoid& b = groupoid(cod(f));
  const FunctorMaps& fm = maps(f);
  FunctorMaps g;
  std::vector<int> beta(b.objects(), -1);  // f(g y) -> y
  for (int y = 0; y < b.objects(); ++y) {
    for (int x = 0; x < a.objects() && beta[y] < 0; ++x)
      if (b.hom_size(fm.obj[x], y) > 0) {
        g.obj.push_back(x);
        beta[y] = b.hom_begin(fm.obj[x], y);
      }
    if (beta[y] < 0) return std::nullopt;
  }
  for (int v = 0; v < b.arrows(); ++v) {
    const int y = b.dom(v), y2 = b.cod(v);
    const int want = b.compose(b.inverse(beta[y2]), b.compose(v, beta[y]));
    int hit = -1;
    for (int u = a.hom_begin(g.obj[y], g.obj[y2]); u < a.hom_end(g.obj[y], g.obj[y2]); ++u)
      if (fm.arr[u] == want) {
        if (hit >= 0) return std::nullopt;
        hit = u;
      }
    if (hit < 0) return std::nullopt;
    g.arr.push_back(hit);
  }
  if (!is_functor(b, a, g)) return std::nullopt;
  return intern(cod(f), dom(f), std::move(g));
}

GpdPathStructure::GpdPathStructure(std::shared_ptr<GpdCategory> cat, Kind kind,
                                   std::vector<ObjId> fragment, std::string name)
    : cat_(std::move(cat)), kind_(kind), fragment_(std::move(fragment)), name_(std::move(name)) {}

bool GpdPathStructure::is_fibration(MorId m) {
  return kind_ == Kind::Discrete || cat_->isofibration(m);
}

bool GpdPathStructure::is_weak_equivalence(MorId m) { return cat_->equivalence(m); }

PathObjectData GpdPathStructure::path_object(MorId p) {
  if (auto it = paths_.find(p); it != paths_.end()) return it->second;
  if (!is_fibration(p))
    throw Error(Errc::MissingSlicePathObject, "path objects are designated for fibrations only",
                idx(p));
  PathObjectData d;
  if (kind_ == Kind::Discrete) {
    const ObjId y = cat_->dom(p);
    const MorId id = cat_->identity(y);
    d = make_path_object(*cat_, p, y, id, id, id);
  } else {
    const auto& rec = cat_->vertical_path(p);
    d = make_path_object(*cat_, p, rec.P, rec.r, rec.s, rec.t);
  }
  return paths_.emplace(p, d).first->second;
}

std::optional<ExponentialCandidate> GpdPathStructure::exponential(ObjId x, ObjId y) {
  return cat_->function_space(x, y);
}

std::optional<PiCandidate> GpdPathStructure::pi_type(MorId f, MorId g) {
  if (!is_fibration(f) || !is_fibration(g)) return std::nullopt;
  return cat_->pi(f, g);
}

std::vector<MorId> GpdPathStructure::homotopy_inverse_candidates(MorId f) {
  auto g = cat_->quasi_inverse(f);
  if (!g) return {};
  return {*g};
}

// Fillers split over the components of the codomain of w: the lift condition
// and the vertical homotopy l w ~ h both restrict to each component, so the
// least filler is the least choice per component.
FillerSearch GpdPathStructure::least_filler(const LiftingSquare& sq) {
  if (kind_ != Kind::Groupoid) return {};
  GpdCategory& c = *cat_;
  const FinGroupoid& A = c.groupoid(c.dom(sq.w));
  const FinGroupoid& Y = c.groupoid(c.cod(sq.w));
  const FinGroupoid& X = c.groupoid(c.dom(sq.p));
  const FinGroupoid& Z = c.groupoid(c.cod(sq.p));
  const FunctorMaps& w = c.maps(sq.w);
  const FunctorMaps& p = c.maps(sq.p);
  const FunctorMaps& h = c.maps(sq.h);
  const FunctorMaps& k = c.maps(sq.k);
  LiftConstraint con{&p, &k};
  EnumOptions opt;
  opt.constraint = &con;
  opt.budget = c.caps().budget;

  auto vertical_iso = [&](const FunctorMaps& l, int d) {
    const int ra = A.root(d);
    const int src = l.obj[w.obj[ra]], tgt = h.obj[ra];
    for (int th = X.hom_begin(src, tgt); th < X.hom_end(src, tgt); ++th) {
      if (p.arr[th] != Z.identity(p.obj[src])) continue;
      bool natural = true;
      for (int g : A.generators(d)) {
        const int loop = A.loop(d, g);
        if (X.compose(h.arr[loop], th) != X.compose(th, l.arr[w.arr[loop]])) {
          natural = false;
          break;
        }
      }
      if (natural) return true;
    }
    return false;
  };

  // Necessary condition on object images: l(w a) reaches h(a) vertically.
  std::vector<std::vector<int>> targets(Y.objects());
  for (int a = 0; a < A.objects(); ++a) targets[w.obj[a]].push_back(h.obj[a]);
  auto reaches = [&](int y, int ex) {
    for (int ht : targets[y]) {
      bool any = false;
      for (int th = X.hom_begin(ex, ht); th < X.hom_end(ex, ht) && !any; ++th)
        any = p.arr[th] == Z.identity(p.obj[ex]);
      if (!any) return false;
    }
    return true;
  };

  FunctorMaps l;
  l.obj.assign(Y.objects(), -1);
  l.arr.assign(Y.arrows(), -1);
  for (int cy = 0; cy < Y.components(); ++cy) {
    std::vector<int> over;
    for (int d = 0; d < A.components(); ++d)
      if (Y.component(w.obj[A.root(d)]) == cy) over.push_back(d);
    auto cand = first_component_functor(Y, X, cy, opt, reaches, [&](const FunctorMaps& f) {
      return std::all_of(over.begin(), over.end(), [&](int d) { return vertical_iso(f, d); });
    });
    if (!cand) return {true, std::nullopt};
    for (int y : Y.members(cy)) {
      l.obj[y] = cand->obj[y];
      for (int u = Y.out_begin(y); u < Y.out_end(y); ++u) l.arr[u] = cand->arr[u];
    }
  }
  return {true, c.intern(c.cod(sq.w), c.dom(sq.p), std::move(l))};
}

ObjId GpdPathStructure::named(const std::string& label) const {
  for (ObjId x : fragment_)
    if (cat_->object_label(x) == label) return x;
  throw Error(Errc::Precondition, "no fragment object named " + label);
}

std::shared_ptr<GpdPathStructure> make_discrete_model(const std::vector<int>& sizes, Caps caps) {
  auto cat = std::make_shared<GpdCategory>(caps);
  std::vector<ObjId> frag{cat->terminal()};
  std::string name = "discrete(";
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 0) throw Error(Errc::Precondition, "set sizes must be non-negative");
    const ObjId x = cat->intern(builtin::discrete(sizes[i]), std::to_string(sizes[i]));
    if (std::find(frag.begin(), frag.end(), x) == frag.end()) frag.push_back(x);
    name += (i ? "," : "") + std::to_string(sizes[i]);
  }
  if (frag.size() > caps.fragment_objects)
    throw Error(Errc::ResourceCap, "fragment exceeds the object cap");
  return std::make_shared<GpdPathStructure>(cat, GpdPathStructure::Kind::Discrete, frag, name + ")");
}

std::shared_ptr<GpdPathStructure> make_gpd_model(
    const std::vector<std::pair<std::string, FinGroupoid>>& seeds, Caps caps) {
  auto cat = std::make_shared<GpdCategory>(caps);
  std::vector<ObjId> frag{cat->terminal(), cat->intern(builtin::interval(), "I")};
  std::string name = "gpd(";
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const auto& [label, g] = seeds[i];
    if (static_cast<std::size_t>(g.objects()) > caps.seed_objects)
      throw Error(Errc::ResourceCap, "seed groupoid exceeds the object cap", label);
    const ObjId x = cat->intern(g, label);
    if (std::find(frag.begin(), frag.end(), x) == frag.end()) frag.push_back(x);
    name += (i ? "," : "") + label;
  }
  if (frag.size() > caps.fragment_objects)
    throw Error(Errc::ResourceCap, "fragment exceeds the object cap");
  return std::make_shared<GpdPathStructure>(cat, GpdPathStructure::Kind::Groupoid, frag, name + ")");
}

std::shared_ptr<GpdPathStructure> make_gpd_model(const std::vector<std::string>& names, Caps caps) {
  std::vector<std::pair<std::string, FinGroupoid>> seeds;
  for (const auto& n : names) {
    auto g = builtin::by_name(n);
    if (!g) throw Error(Errc::Precondition, "unknown seed groupoid: " + n);
    seeds.emplace_back(n == "interval" ? "I" : n, std::move(*g));
  }
  return make_gpd_model(seeds, caps);
}

namespace {

[[noreturn]] void schema(const std::string& what, json witness = nullptr) {
  throw Error(Errc::SchemaError, what, std::move(witness));
}

std::uint32_t read_id(const json& v, std::size_t bound, const std::string& field) {
  if (!v.is_number_integer() || v.get<long long>() < 0 ||
      static_cast<std::size_t>(v.get<long long>()) >= bound)
    schema("id out of range in " + field, v);
  return static_cast<std::uint32_t>(v.get<long long>());
}

}  // namespace

std::shared_ptr<TablePathStructure> load_model(const json& doc) {
  static const std::set<std::string> allowed{"objects",    "morphisms",         "identities",
                                             "comp",       "fibrations",        "weak_equivalences",
                                             "path_objects", "name"};
  if (!doc.is_object()) schema("model document must be an object");
  for (const auto& [k, v] : doc.items()) {
    (void)v;
    if (!allowed.count(k)) schema("unknown key", k);
  }
  for (const char* k : {"objects", "morphisms", "identities", "comp"})
    if (!doc.contains(k)) schema(std::string("missing key ") + k);
  const auto& objs = doc["objects"];
  if (!objs.is_array()) schema("objects must be an array");
  for (std::size_t i = 0; i < objs.size(); ++i)
    if (!objs[i].is_number_integer() || objs[i].get<long long>() != static_cast<long long>(i))
      schema("object ids must be dense from 0", objs[i]);
  const std::size_t n = objs.size();
  const auto& mors = doc["morphisms"];
  if (!mors.is_array()) schema("morphisms must be an array");
  std::vector<TableCategory::Morphism> ms;
  for (std::size_t i = 0; i < mors.size(); ++i) {
    const auto& m = mors[i];
    if (!m.is_object()) schema("morphism entries must be objects");
    for (const auto& [k, v] : m.items()) {
      (void)v;
      if (k != "id" && k != "dom" && k != "cod") schema("unknown key in morphism", k);
    }
    if (!m.contains("id") || !m["id"].is_number_integer() ||
        m["id"].get<long long>() != static_cast<long long>(i))
      schema("morphism ids must be dense from 0", m);
    ms.push_back({obj_id(read_id(m.at("dom"), n, "dom")), obj_id(read_id(m.at("cod"), n, "cod"))});
  }
  const std::size_t nm = ms.size();
  const auto& ids = doc["identities"];
  if (!ids.is_object()) schema("identities must be an object");
  std::vector<MorId> identities(n, mor_id(0));
  std::vector<char> have(n, 0);
  for (const auto& [k, v] : ids.items()) {
    std::size_t x = 0;
    try {
      x = std::stoul(k);
    } catch (const std::exception&) {
      schema("identity key is not an object id", k);
    }
    if (x >= n) schema("identity key out of range", k);
    identities[x] = mor_id(read_id(v, nm, "identities"));
    have[x] = 1;
  }
  for (std::size_t x = 0; x < n; ++x)
    if (!have[x]) schema("object without identity", x);
  std::vector<TableCategory::CompEntry> comp;
  for (const auto& e : doc["comp"]) {
    if (!e.is_array() || e.size() != 3) schema("comp entries are [g, f, gf]", e);
    comp.push_back({mor_id(read_id(e[0], nm, "comp")), mor_id(read_id(e[1], nm, "comp")),
                    mor_id(read_id(e[2], nm, "comp"))});
  }
  auto cat = std::make_shared<TableCategory>(n, ms, identities, comp);
  for (std::uint32_t f = 0; f < nm; ++f)
    for (std::uint32_t g = 0; g < nm; ++g)
      if (ms[f].cod == ms[g].dom && !cat->lookup(mor_id(g), mor_id(f)))
        schema("missing composition entry", json::array({g, f}));
  std::set<MorId> fibs, wes;
  if (doc.contains("fibrations"))
    for (const auto& v : doc["fibrations"]) fibs.insert(mor_id(read_id(v, nm, "fibrations")));
  if (doc.contains("weak_equivalences"))
    for (const auto& v : doc["weak_equivalences"])
      wes.insert(mor_id(read_id(v, nm, "weak_equivalences")));
  std::vector<TablePathStructure::Designation> des;
  if (doc.contains("path_objects"))
    for (const auto& p : doc["path_objects"]) {
      for (const auto& [k, v] : p.items()) {
        (void)v;
        static const std::set<std::string> pk{"base", "object", "P", "r", "s", "t", "fibration"};
        if (!pk.count(k)) schema("unknown key in path object", k);
      }
      TablePathStructure::Designation d{
          obj_id(read_id(p.at("base"), n, "base")), obj_id(read_id(p.at("object"), n, "object")),
          obj_id(read_id(p.at("P"), n, "P")),       mor_id(read_id(p.at("r"), nm, "r")),
          mor_id(read_id(p.at("s"), nm, "s")),      mor_id(read_id(p.at("t"), nm, "t")),
          std::nullopt};
      if (p.contains("fibration")) d.fibration = mor_id(read_id(p["fibration"], nm, "fibration"));
      des.push_back(d);
    }
  std::string name = doc.contains("name") ? doc["name"].get<std::string>() : "table";
  return std::make_shared<TablePathStructure>(cat, fibs, wes, des, name);
}

std::shared_ptr<TablePathStructure> load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, path + ": " + e.what(), {{"byte", e.byte}});
  }
  try {
    return load_model(doc);
  } catch (const json::exception& e) {
    throw Error(Errc::SchemaError, path + ": " + e.what());
  }
}

json save_model(TablePathStructure& ps) {
  TableCategory& c = ps.table();
  json doc;
  doc["name"] = ps.name();
  doc["objects"] = json::array();
  for (std::uint32_t i = 0; i < c.object_count(); ++i) doc["objects"].push_back(i);
  doc["morphisms"] = json::array();
  for (std::uint32_t m = 0; m < c.morphism_count(); ++m)
    doc["morphisms"].push_back({{"id", m}, {"dom", idx(c.dom(mor_id(m)))}, {"cod", idx(c.cod(mor_id(m)))}});
  doc["identities"] = json::object();
  for (std::uint32_t i = 0; i < c.object_count(); ++i)
    doc["identities"][std::to_string(i)] = idx(c.identity(obj_id(i)));
  doc["comp"] = json::array();
  for (const auto& [g, f, gf] : c.comp_entries()) doc["comp"].push_back({idx(g), idx(f), idx(gf)});
  doc["fibrations"] = json::array();
  for (MorId m : ps.fibrations()) doc["fibrations"].push_back(idx(m));
  doc["weak_equivalences"] = json::array();
  for (MorId m : ps.weak_equivalences()) doc["weak_equivalences"].push_back(idx(m));
  std::vector<json> pos;
  for (const auto& d : ps.designations()) {
    json p{{"base", idx(d.base)}, {"object", idx(d.object)}, {"P", idx(d.P)},
           {"r", idx(d.r)},       {"s", idx(d.s)},           {"t", idx(d.t)}};
    if (d.fibration) p["fibration"] = idx(*d.fibration);
    pos.push_back(p);
  }
  std::sort(pos.begin(), pos.end());
  doc["path_objects"] = pos;
  return doc;
}

json save_model(PathStructure& ps, std::size_t max_objects) {
  FinCategory& c = ps.cat();
  std::vector<ObjId> objs = ps.fragment();
  auto add = [&](ObjId x) {
    if (std::find(objs.begin(), objs.end(), x) != objs.end()) return false;
    if (objs.size() >= max_objects)
      throw Error(Errc::ResourceCap, "materialized closure exceeds the object cap",
                  {{"cap", max_objects}});
    objs.push_back(x);
    return true;
  };
  for (bool grew = true; grew;) {
    grew = false;
    const auto snapshot = objs;
    for (ObjId x : snapshot) {
      const PathObjectData po = ps.absolute_path_object(x);
      grew |= add(po.P);
      grew |= add(po.fiber_product.apex);
    }
    for (ObjId x : snapshot)
      for (ObjId z : snapshot)
        for (MorId p : c.hom(x, z)) {
          if (!ps.is_fibration(p)) continue;
          for (ObjId y : snapshot)
            for (MorId f : c.hom(y, z)) grew |= add(c.pullback(f, p).apex);
        }
  }
  std::map<ObjId, std::uint32_t> oid;
  for (std::uint32_t i = 0; i < objs.size(); ++i) oid[objs[i]] = i;
  std::vector<MorId> all;
  std::map<MorId, std::uint32_t> mid;
  for (ObjId x : objs)
    for (ObjId y : objs)
      for (MorId m : c.hom(x, y)) {
        mid[m] = static_cast<std::uint32_t>(all.size());
        all.push_back(m);
      }
  json doc;
  doc["name"] = ps.name();
  doc["objects"] = json::array();
  for (std::uint32_t i = 0; i < objs.size(); ++i) doc["objects"].push_back(i);
  doc["morphisms"] = json::array();
  doc["fibrations"] = json::array();
  doc["weak_equivalences"] = json::array();
  for (std::uint32_t i = 0; i < all.size(); ++i) {
    doc["morphisms"].push_back({{"id", i}, {"dom", oid[c.dom(all[i])]}, {"cod", oid[c.cod(all[i])]}});
    if (ps.is_fibration(all[i])) doc["fibrations"].push_back(i);
    if (ps.is_weak_equivalence(all[i])) doc["weak_equivalences"].push_back(i);
  }
  doc["identities"] = json::object();
  for (ObjId x : objs) doc["identities"][std::to_string(oid[x])] = mid[c.identity(x)];
  std::vector<json> comp;
  for (MorId f : all)
    for (ObjId z : objs)
      for (MorId g : c.hom(c.cod(f), z)) comp.push_back({mid[g], mid[f], mid[c.compose(g, f)]});
  std::sort(comp.begin(), comp.end());
  doc["comp"] = comp;
  std::vector<json> pos;
  for (ObjId x : objs) {
    const PathObjectData po = ps.absolute_path_object(x);
    pos.push_back({{"base", oid[po.base]}, {"object", oid[x]}, {"P", oid[po.P]}, {"r", mid[po.r]},
                   {"s", mid[po.s]}, {"t", mid[po.t]}, {"fibration", mid[po.fibration]}});
  }
  std::sort(pos.begin(), pos.end());
  doc["path_objects"] = pos;
  return doc;
}

}  // namespace pathcat
