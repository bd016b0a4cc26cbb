#include "pathcat/pathstruct.hpp"

#include <algorithm>

#include "pathcat/union_find.hpp"

namespace pathcat {

json PathObjectData::to_json() const {
  return {{"fibration", fibration}, {"base", base}, {"object", object}, {"P", P},
          {"r", r},                 {"s", s},       {"t", t},           {"st", st}};
}

json LiftingSquare::to_json() const { return {{"w", w}, {"p", p}, {"h", h}, {"k", k}}; }

json ExponentialCandidate::to_json() const {
  return {{"kind", "exponential"}, {"X", X}, {"Y", Y}, {"E", E}, {"eval", eval}};
}

json PiCandidate::to_json() const {
  return {{"kind", "pi"}, {"f", f}, {"g", g}, {"Pi", pi}, {"to_base", to_base}, {"eval", eval}};
}

PathObjectData make_path_object(FinCategory& c, MorId fibration, ObjId p, MorId r, MorId s,
                                MorId t) {
  PathObjectData d;
  d.fibration = fibration;
  d.object = c.dom(fibration);
  d.base = c.cod(fibration);
  d.P = p;
  d.r = r;
  d.s = s;
  d.t = t;
  try {
    d.fiber_product = c.pullback(fibration, fibration);
  } catch (const Error& e) {
    if (e.code() != Errc::NoPullback) throw;
    throw Error(Errc::MissingPullback, "fibre product Y x_B Y is absent", idx(fibration));
  }
  d.st = c.mediator(d.fiber_product, s, t);
  return d;
}

TablePathStructure::TablePathStructure(std::shared_ptr<TableCategory> cat,
                                       std::set<MorId> fibrations,
                                       std::set<MorId> weak_equivalences,
                                       std::vector<Designation> path_objects, std::string name)
    : cat_(std::move(cat)),
      fibs_(std::move(fibrations)),
      wes_(std::move(weak_equivalences)),
      designated_(std::move(path_objects)),
      name_(std::move(name)) {}

std::vector<ObjId> TablePathStructure::fragment() {
  std::vector<ObjId> out;
  for (std::uint32_t i = 0; i < cat_->object_count(); ++i) out.push_back(obj_id(i));
  return out;
}

PathObjectData TablePathStructure::path_object(MorId m) {
  if (auto it = resolved_.find(m); it != resolved_.end()) return it->second;
  FinCategory& c = *cat_;
  const ObjId y = c.dom(m), b = c.cod(m);
  const MorId idy = c.identity(y);
  for (const auto& d : designated_) {
    if (d.base != b || d.object != y) continue;
    if (d.fibration && *d.fibration != m) continue;
    if (c.dom(d.s) != d.P || c.dom(d.t) != d.P || c.cod(d.s) != y || c.cod(d.t) != y) continue;
    if (c.compose(m, d.s) != c.compose(m, d.t)) continue;
    auto data = make_path_object(c, m, d.P, d.r, d.s, d.t);
    return resolved_.emplace(m, data).first->second;
  }
  for (std::uint32_t pi = 0; pi < c.object_count(); ++pi) {
    const ObjId p = obj_id(pi);
    for (MorId r : c.hom(y, p)) {
      if (!is_weak_equivalence(r)) continue;
      for (MorId s : c.hom(p, y)) {
        if (c.compose(s, r) != idy) continue;
        for (MorId t : c.hom(p, y)) {
          if (c.compose(t, r) != idy || c.compose(m, s) != c.compose(m, t)) continue;
          PathObjectData data;
          try {
            data = make_path_object(c, m, p, r, s, t);
          } catch (const Error&) {
            continue;
          }
          if (!is_fibration(data.st)) continue;
          return resolved_.emplace(m, data).first->second;
        }
      }
    }
  }
  throw Error(Errc::MissingSlicePathObject, "no path object designated or found",
              {{"fibration", idx(m)}});
}

bool MutantPathStructure::is_fibration(MorId m) {
  if (remove_fibrations.count(m)) return false;
  if (add_fibrations.count(m)) return true;
  return base_.is_fibration(m);
}

bool MutantPathStructure::is_weak_equivalence(MorId m) {
  if (remove_weak_equivalences.count(m)) return false;
  if (add_weak_equivalences.count(m)) return true;
  return base_.is_weak_equivalence(m);
}

PathObjectData MutantPathStructure::path_object(MorId fibration) {
  if (auto it = path_overrides.find(fibration); it != path_overrides.end()) return it->second;
  return base_.path_object(fibration);
}

SliceCategory::SliceCategory(FinCategory& base, ObjId j) : base_(base), j_(j) {}

ObjId SliceCategory::intern_object(MorId structure) {
  if (base_.cod(structure) != j_)
    throw Error(Errc::Precondition, "slice object must map into the base object",
                idx(structure));
  if (auto it = obj_index_.find(idx(structure)); it != obj_index_.end()) return it->second;
  const ObjId x = obj_id(static_cast<std::uint32_t>(objs_.size()));
  objs_.push_back(structure);
  obj_index_.emplace(idx(structure), x);
  identities_.push_back(MorId{});
  identities_[idx(x)] = intern_morphism(x, x, base_.identity(base_.dom(structure)));
  return x;
}

MorId SliceCategory::intern_morphism(ObjId dom, ObjId cod, MorId base_mor) {
  auto key = std::make_tuple(dom, cod, base_mor);
  if (auto it = mor_index_.find(key); it != mor_index_.end()) return it->second;
  if (base_.dom(base_mor) != base_object(dom) || base_.cod(base_mor) != base_object(cod) ||
      base_.compose(structure(cod), base_mor) != structure(dom))
    throw Error(Errc::Precondition, "map does not commute with the slice structure",
                idx(base_mor));
  const MorId m = mor_id(static_cast<std::uint32_t>(mors_.size()));
  mors_.push_back({dom, cod, base_mor});
  mor_index_.emplace(key, m);
  return m;
}

MorId SliceCategory::identity(ObjId x) const { return identities_[idx(x)]; }

MorId SliceCategory::compose(MorId g, MorId f) {
  if (cod(f) != dom(g))
    throw Error(Errc::NotComposable, "slice morphisms not composable",
                json::array({idx(g), idx(f)}));
  return intern_morphism(dom(f), cod(g), base_.compose(base_morphism(g), base_morphism(f)));
}

std::vector<MorId> SliceCategory::hom(ObjId x, ObjId y) {
  std::vector<MorId> out;
  for (MorId l : base_.lifts(structure(x), structure(y))) out.push_back(intern_morphism(x, y, l));
  return out;
}

bool SliceCategory::canonical_less(MorId a, MorId b) const {
  return base_.canonical_less(base_morphism(a), base_morphism(b));
}

std::vector<MorId> SliceCategory::lifts(MorId k, MorId p) {
  std::vector<MorId> out;
  for (MorId l : base_.lifts(base_morphism(k), base_morphism(p)))
    out.push_back(intern_morphism(dom(k), dom(p), l));
  return out;
}

std::optional<MorId> SliceCategory::first_lift(MorId k, MorId p) {
  auto l = base_.first_lift(base_morphism(k), base_morphism(p));
  if (!l) return std::nullopt;
  return intern_morphism(dom(k), dom(p), *l);
}

ObjId SliceCategory::terminal() { return intern_object(base_.identity(j_)); }

MorId SliceCategory::to_terminal(ObjId x) { return intern_morphism(x, terminal(), structure(x)); }

const PullbackData& SliceCategory::pullback(MorId f, MorId g) {
  auto key = std::make_pair(f, g);
  if (auto it = pullbacks_.find(key); it != pullbacks_.end()) return it->second;
  const PullbackData& bpb = base_.pullback(base_morphism(f), base_morphism(g));
  const ObjId a = dom(f), b = dom(g);
  const ObjId apex = intern_object(base_.compose(structure(a), bpb.proj1));
  PullbackData pb{f, g, apex, intern_morphism(apex, a, bpb.proj1),
                  intern_morphism(apex, b, bpb.proj2)};
  return pullbacks_.emplace(key, pb).first->second;
}

MorId SliceCategory::mediator(const PullbackData& pb, MorId a, MorId b) {
  const PullbackData& bpb = base_.pullback(base_morphism(pb.f), base_morphism(pb.g));
  return intern_morphism(dom(a), pb.apex, base_.mediator(bpb, base_morphism(a), base_morphism(b)));
}

std::string SliceCategory::object_label(ObjId x) const {
  return base_.object_label(base_object(x)) + "/" + base_.object_label(j_);
}

SlicePathStructure::SlicePathStructure(PathStructure& base, ObjId j, bool fibrant_only)
    : base_(base), slice_(base.cat(), j), fibrant_only_(fibrant_only) {}

std::string SlicePathStructure::name() const {
  return base_.name() + "/" + base_.cat().object_label(slice_.over());
}

PathObjectData SlicePathStructure::path_object(MorId m) {
  const PathObjectData b = base_.path_object(slice_.base_morphism(m));
  const ObjId a = slice_.dom(m);
  PathObjectData d;
  d.fibration = m;
  d.object = a;
  d.base = slice_.cod(m);
  d.P = slice_.intern_object(base_.cat().compose(slice_.structure(a), b.s));
  d.r = slice_.intern_morphism(a, d.P, b.r);
  d.s = slice_.intern_morphism(d.P, a, b.s);
  d.t = slice_.intern_morphism(d.P, a, b.t);
  d.fiber_product = slice_.pullback(m, m);
  d.st = slice_.intern_morphism(d.P, d.fiber_product.apex, b.st);
  return d;
}

FillerSearch SlicePathStructure::least_filler(const LiftingSquare& sq) {
  auto b = [&](MorId m) { return slice_.base_morphism(m); };
  FillerSearch res = base_.least_filler({b(sq.w), b(sq.p), b(sq.h), b(sq.k)});
  if (res.handled && res.filler)
    res.filler = slice_.intern_morphism(slice_.cod(sq.w), slice_.dom(sq.p), *res.filler);
  return res;
}

std::vector<ObjId> SlicePathStructure::fragment() {
  std::vector<ObjId> out;
  std::set<ObjId> seen;
  FinCategory& c = base_.cat();
  for (ObjId x : base_.fragment())
    for (MorId m : c.hom(x, slice_.over())) {
      if (fibrant_only_ && !base_.is_fibration(m)) continue;
      const ObjId o = slice_.intern_object(m);
      if (seen.insert(o).second) out.push_back(o);
    }
  return out;
}

std::unique_ptr<SlicePathStructure> slice_category(PathStructure& ps, ObjId j, bool fibrant_only) {
  return std::make_unique<SlicePathStructure>(ps, j, fibrant_only);
}

std::string path_object_defect(PathStructure& ps, const PathObjectData& d) {
  FinCategory& c = ps.cat();
  const ObjId y = d.object;
  if (c.dom(d.fibration) != y || c.cod(d.fibration) != d.base) return "fibration mistyped";
  if (c.dom(d.r) != y || c.cod(d.r) != d.P) return "r mistyped";
  if (c.dom(d.s) != d.P || c.cod(d.s) != y || c.dom(d.t) != d.P || c.cod(d.t) != y)
    return "s or t mistyped";
  const MorId idy = c.identity(y);
  if (c.compose(d.s, d.r) != idy) return "s r is not the identity";
  if (c.compose(d.t, d.r) != idy) return "t r is not the identity";
  if (c.compose(d.fibration, d.s) != c.compose(d.fibration, d.t)) return "s and t differ over the base";
  if (!ps.is_weak_equivalence(d.r)) return "r is not a weak equivalence";
  const PullbackData& fp = d.fiber_product;
  if (c.dom(d.st) != d.P || c.cod(d.st) != fp.apex || c.compose(fp.proj1, d.st) != d.s ||
      c.compose(fp.proj2, d.st) != d.t)
    return "(s, t) is not the pairing into the fibre product";
  if (!ps.is_fibration(d.st)) return "(s, t) is not a fibration";
  return {};
}

bool is_path_object(PathStructure& ps, const PathObjectData& cand) {
  return path_object_defect(ps, cand).empty();
}

std::vector<Homotopy> enumerate_homotopies(PathStructure& ps, MorId fibration, MorId f, MorId g) {
  FinCategory& c = ps.cat();
  if (c.compose(fibration, f) != c.compose(fibration, g))
    throw Error(Errc::Precondition, "maps do not agree over the base",
                json::array({idx(f), idx(g)}));
  const PathObjectData po = ps.path_object(fibration);
  const MorId pairing = c.mediator(po.fiber_product, f, g);
  std::vector<Homotopy> out;
  for (MorId h : c.lifts(pairing, po.st)) out.push_back({h, f, g});
  return out;
}

bool homotopic_over(PathStructure& ps, MorId fibration, MorId f, MorId g) {
  FinCategory& c = ps.cat();
  if (f == g) return true;
  if (c.compose(fibration, f) != c.compose(fibration, g)) return false;
  const PathObjectData po = ps.path_object(fibration);
  return c.first_lift(c.mediator(po.fiber_product, f, g), po.st).has_value();
}

bool homotopic(PathStructure& ps, MorId f, MorId g) {
  FinCategory& c = ps.cat();
  if (c.dom(f) != c.dom(g) || c.cod(f) != c.cod(g)) return false;
  return homotopic_over(ps, c.to_terminal(c.cod(f)), f, g);
}

FillerResult find_filler(PathStructure& ps, const LiftingSquare& sq, bool all_fillers) {
  FinCategory& c = ps.cat();
  if (c.compose(sq.p, sq.h) != c.compose(sq.k, sq.w))
    throw Error(Errc::Precondition, "lifting square does not commute", sq.to_json());
  FillerResult res;
  bool found = false;
  // With w an identity, h itself is a strict filler and is preferred.
  if (sq.w == c.identity(c.dom(sq.w))) {
    res.filler = sq.h;
    found = true;
    if (!all_fillers) return res;
  }
  if (!all_fillers) {
    FillerSearch fast = ps.least_filler(sq);
    if (fast.handled) {
      if (!fast.filler) throw Error(Errc::NoFiller, "lifting square has no filler", sq.to_json());
      res.filler = *fast.filler;
      return res;
    }
  }
  for (MorId l : c.lifts(sq.k, sq.p)) {
    if (!homotopic_over(ps, sq.p, c.compose(l, sq.w), sq.h)) continue;
    if (!found) {
      res.filler = l;
      found = true;
      if (!all_fillers) break;
    }
    res.all.push_back(l);
  }
  if (!found) throw Error(Errc::NoFiller, "lifting square has no filler", sq.to_json());
  if (all_fillers)
    for (std::size_t i = 0; i < res.all.size() && res.pairwise_homotopic; ++i)
      for (std::size_t j = i + 1; j < res.all.size(); ++j)
        if (!homotopic_over(ps, sq.p, res.all[i], res.all[j])) {
          res.pairwise_homotopic = false;
          break;
        }
  return res;
}

MorId filler(PathStructure& ps, const LiftingSquare& sq) { return find_filler(ps, sq).filler; }

namespace {

json mor_list(std::initializer_list<MorId> ms) {
  json j = json::array();
  for (MorId m : ms) j.push_back(idx(m));
  return j;
}

}  // namespace

ValidationReport validate_path_axioms(PathStructure& ps) {
  FinCategory& c = ps.cat();
  const auto objs = ps.fragment();
  ValidationReport rep = validate_category(c, objs);

  std::map<std::pair<ObjId, ObjId>, std::vector<MorId>> homs;
  for (ObjId x : objs)
    for (ObjId y : objs) homs[{x, y}] = c.hom(x, y);

  // Fibrations compose.
  for (ObjId x : objs)
    for (ObjId y : objs)
      for (MorId f : homs[{x, y}]) {
        if (!ps.is_fibration(f)) continue;
        for (ObjId z : objs)
          for (MorId g : homs[{y, z}])
            if (ps.is_fibration(g) && !ps.is_fibration(c.compose(g, f)))
              rep.add("fibration_composition", mor_list({g, f}));
      }

  // Pullbacks of fibrations, and of acyclic fibrations.
  for (ObjId x : objs)
    for (ObjId z : objs)
      for (MorId p : homs[{x, z}]) {
        if (!ps.is_fibration(p)) continue;
        const bool acyclic = ps.is_weak_equivalence(p);
        for (ObjId y : objs)
          for (MorId f : homs[{y, z}]) {
            try {
              const PullbackData& pb = c.pullback(f, p);
              if (!ps.is_fibration(pb.proj1))
                rep.add("pullback_fibration", {{"p", idx(p)}, {"along", idx(f)}, {"proj", idx(pb.proj1)}});
              if (acyclic && !ps.is_weak_equivalence(pb.proj1))
                rep.add("pullback_acyclic_fibration",
                        {{"p", idx(p)}, {"along", idx(f)}, {"proj", idx(pb.proj1)}});
            } catch (const Error& e) {
              if (e.code() != Errc::NoPullback) throw;
              rep.add("pullback_exists", {{"p", idx(p)}, {"along", idx(f)}});
            }
          }
      }

  // 2-out-of-6.
  for (ObjId w : objs)
    for (ObjId x : objs)
      for (MorId f : homs[{w, x}])
        for (ObjId y : objs)
          for (MorId g : homs[{x, y}]) {
            const MorId gf = c.compose(g, f);
            if (!ps.is_weak_equivalence(gf)) continue;
            for (ObjId z : objs)
              for (MorId h : homs[{y, z}]) {
                const MorId hg = c.compose(h, g);
                if (!ps.is_weak_equivalence(hg)) continue;
                const MorId hgf = c.compose(h, gf);
                if (!ps.is_weak_equivalence(f) || !ps.is_weak_equivalence(g) ||
                    !ps.is_weak_equivalence(h) || !ps.is_weak_equivalence(hgf))
                  rep.add("two_out_of_six", mor_list({h, g, f}));
              }
          }

  // Isomorphisms are acyclic fibrations; acyclic fibrations have sections.
  for (ObjId x : objs)
    for (ObjId y : objs)
      for (MorId f : homs[{x, y}]) {
        bool iso = false;
        for (MorId g : homs[{y, x}])
          if (c.compose(g, f) == c.identity(x) && c.compose(f, g) == c.identity(y)) iso = true;
        if (iso && !ps.is_acyclic_fibration(f)) rep.add("isomorphism_acyclic", mor_list({f}));
        if (ps.is_acyclic_fibration(f) && !c.first_lift(c.identity(y), f))
          rep.add("acyclic_fibration_section", mor_list({f}));
      }

  // Maps to the terminal object are fibrations; path objects exist.
  for (ObjId x : objs) {
    const MorId bang = c.to_terminal(x);
    if (!ps.is_fibration(bang)) rep.add("terminal_fibrant", {{"object", idx(x)}, {"map", idx(bang)}});
    try {
      const PathObjectData po = ps.path_object(bang);
      const std::string defect = path_object_defect(ps, po);
      if (!defect.empty())
        rep.add("path_object", {{"object", idx(x)}, {"defect", defect}, {"data", po.to_json()}});
    } catch (const Error& e) {
      rep.add("path_object", {{"object", idx(x)}, {"error", e.what()}});
    }
  }
  return rep;
}

HomotopyCategory homotopy_category(PathStructure& ps) {
  FinCategory& c = ps.cat();
  const auto objs = ps.fragment();
  const std::size_t n = objs.size();
  std::map<ObjId, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[objs[i]] = i;

  // Per hom-set: canonical list, union-find over it, class index per member.
  struct HomClasses {
    std::vector<MorId> mors;
    std::vector<std::size_t> cls;  // member -> class (dense within hom-set)
    std::vector<MorId> reps;
  };
  std::map<std::pair<ObjId, ObjId>, HomClasses> hc;
  for (ObjId x : objs)
    for (ObjId y : objs) {
      HomClasses h;
      h.mors = c.hom(x, y);
      std::map<MorId, std::size_t> where;
      for (std::size_t i = 0; i < h.mors.size(); ++i) where[h.mors[i]] = i;
      UnionFind uf(h.mors.size());
      if (!h.mors.empty()) {
        const PathObjectData po = ps.absolute_path_object(y);
        for (MorId H : c.hom(x, po.P))
          uf.unite(where.at(c.compose(po.s, H)), where.at(c.compose(po.t, H)));
      }
      std::map<std::size_t, std::size_t> dense;
      for (std::size_t i = 0; i < h.mors.size(); ++i) {
        const std::size_t root = uf.find(i);
        auto [it, fresh] = dense.emplace(root, h.reps.size());
        if (fresh) h.reps.push_back(h.mors[root]);
        h.cls.push_back(it->second);
      }
      hc[{x, y}] = std::move(h);
    }
  auto class_index = [&](MorId m) {
    const HomClasses& h = hc.at({c.dom(m), c.cod(m)});
    const auto it = std::find(h.mors.begin(), h.mors.end(), m);
    return h.cls[static_cast<std::size_t>(it - h.mors.begin())];
  };

  // Congruence: composing a class member on either side stays in one class.
  for (ObjId x : objs)
    for (ObjId y : objs) {
      const HomClasses& h = hc.at({x, y});
      for (std::size_t i = 0; i < h.mors.size(); ++i) {
        const MorId f = h.mors[i], rep = h.reps[h.cls[i]];
        if (f == rep) continue;
        for (ObjId z : objs)
          for (MorId g : hc.at({y, z}).mors)
            if (class_index(c.compose(g, f)) != class_index(c.compose(g, rep)))
              throw Error(Errc::CongruenceFailure, "post-composition breaks homotopy",
                          mor_list({g, f, rep}));
        for (ObjId w : objs)
          for (MorId e : hc.at({w, x}).mors)
            if (class_index(c.compose(f, e)) != class_index(c.compose(rep, e)))
              throw Error(Errc::CongruenceFailure, "pre-composition breaks homotopy",
                          mor_list({f, rep, e}));
      }
    }

  HomotopyCategory ho;
  ho.objects = objs;
  std::vector<TableCategory::Morphism> mors;
  std::map<std::pair<ObjId, ObjId>, std::size_t> first_id;
  for (ObjId x : objs)
    for (ObjId y : objs) {
      first_id[{x, y}] = mors.size();
      for (MorId rep : hc.at({x, y}).reps) {
        mors.push_back({obj_id(static_cast<std::uint32_t>(pos[x])),
                        obj_id(static_cast<std::uint32_t>(pos[y]))});
        ho.representative.push_back(rep);
      }
    }
  auto ho_id = [&](MorId m) {
    return mor_id(static_cast<std::uint32_t>(first_id.at({c.dom(m), c.cod(m)}) + class_index(m)));
  };
  for (ObjId x : objs)
    for (ObjId y : objs)
      for (MorId m : hc.at({x, y}).mors) ho.class_of[m] = ho_id(m);
  std::vector<MorId> ids;
  for (ObjId x : objs) ids.push_back(ho_id(c.identity(x)));
  std::vector<TableCategory::CompEntry> comp;
  for (std::size_t f = 0; f < mors.size(); ++f)
    for (std::size_t g = 0; g < mors.size(); ++g)
      if (mors[f].cod == mors[g].dom)
        comp.push_back({mor_id(static_cast<std::uint32_t>(g)), mor_id(static_cast<std::uint32_t>(f)),
                        ho_id(c.compose(ho.representative[g], ho.representative[f]))});
  ho.cat = std::make_shared<TableCategory>(n, std::move(mors), std::move(ids), comp);
  return ho;
}

bool is_homotopy_equivalence(PathStructure& ps, MorId f) {
  FinCategory& c = ps.cat();
  const ObjId x = c.dom(f), y = c.cod(f);
  std::vector<MorId> cands;
  try {
    cands = c.hom(y, x);
  } catch (const Error& e) {
    if (e.code() != Errc::ResourceCap) throw;
    cands = ps.homotopy_inverse_candidates(f);
  }
  for (MorId g : cands)
    if (homotopic(ps, c.compose(f, g), c.identity(y)) && homotopic(ps, c.compose(g, f), c.identity(x)))
      return true;
  return false;
}

}  // namespace pathcat
