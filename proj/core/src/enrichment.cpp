#include "pathcat/enrichment.hpp"

#include <algorithm>
#include <numeric>

#include "pathcat/union_find.hpp"

namespace pathcat {

json EGroupoidData::to_json() const {
  return {{"Y", Y}, {"P", P.to_json()}, {"PP", PP.to_json()}, {"rr", rr}, {"tau", tau},
          {"sigma", sigma}};
}

int HomGroupoid::object_of(MorId f) const {
  auto it = object_index.find(f);
  if (it == object_index.end()) throw Error(Errc::Precondition, "not an object of the hom-groupoid", f);
  return it->second;
}

int HomGroupoid::class_of_homotopy(MorId h) const {
  auto it = class_of.find(h);
  if (it == class_of.end()) throw Error(Errc::Precondition, "not a map into the path object", h);
  return it->second;
}

const PathObjectData& Enrichment::path(ObjId y) {
  if (auto it = paths_.find(y); it != paths_.end()) return it->second;
  return paths_.emplace(y, ps_.absolute_path_object(y)).first->second;
}

const EGroupoidData& Enrichment::egroupoid(ObjId y) {
  if (auto it = egs_.find(y); it != egs_.end()) return it->second;
  FinCategory& c = cat();
  EGroupoidData d;
  d.Y = y;
  d.P = path(y);
  d.PP = ps_.path_object(d.P.st);
  d.product = d.P.fiber_product;
  d.comp_domain = c.pullback(d.P.t, d.P.s);
  d.rr = c.mediator(d.comp_domain, d.P.r, d.P.r);

  const MorId s1 = c.compose(d.P.s, d.comp_domain.proj1);
  const MorId t2 = c.compose(d.P.t, d.comp_domain.proj2);
  d.tau = filler(ps_, {d.rr, d.P.st, d.P.r, c.mediator(d.product, s1, t2)});
  d.sigma = filler(ps_, {d.P.r, d.P.st, d.P.r, c.mediator(d.product, d.P.t, d.P.s)});
  return egs_.emplace(y, std::move(d)).first->second;
}

const HomGroupoid& Enrichment::hom(ObjId x, ObjId y) {
  const auto key = std::make_pair(x, y);
  if (auto it = homs_.find(key); it != homs_.end()) return it->second;
  FinCategory& c = cat();
  const EGroupoidData& eg = egroupoid(y);

  HomGroupoid hg;
  hg.X = x;
  hg.Y = y;
  hg.objects = c.hom(x, y);
  for (std::size_t i = 0; i < hg.objects.size(); ++i)
    hg.object_index.emplace(hg.objects[i], static_cast<int>(i));

  const std::vector<MorId> hs = c.hom(x, eg.P.P);
  std::unordered_map<MorId, std::size_t> pos;
  for (std::size_t i = 0; i < hs.size(); ++i) pos.emplace(hs[i], i);
  UnionFind uf(hs.size());
  for (MorId big : c.hom(x, eg.PP.P))
    uf.unite(pos.at(c.compose(eg.PP.s, big)), pos.at(c.compose(eg.PP.t, big)));

  // Classes keyed by their least member; hs is in canonical order.
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < hs.size(); ++i) groups[uf.find(i)].push_back(i);
  struct Raw {
    int src, tgt;
    std::size_t first;
    std::vector<std::size_t> members;
  };
  std::vector<Raw> raw;
  for (auto& [root, members] : groups) {
    const MorId h = hs[members.front()];
    const int src = hg.object_of(c.compose(eg.P.s, h));
    const int tgt = hg.object_of(c.compose(eg.P.t, h));
    for (std::size_t m : members) {
      if (hg.object_of(c.compose(eg.P.s, hs[m])) != src ||
          hg.object_of(c.compose(eg.P.t, hs[m])) != tgt)
        hg.laws.add("endpoints", {{"rep", h}, {"member", hs[m]}});
    }
    raw.push_back({src, tgt, members.front(), members});
  }
  std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
    return std::tie(a.src, a.tgt, a.first) < std::tie(b.src, b.tgt, b.first);
  });
  for (std::size_t a = 0; a < raw.size(); ++a) {
    HomGroupoid::Arrow arr{raw[a].src, raw[a].tgt, hs[raw[a].first], {}};
    for (std::size_t m : raw[a].members) {
      arr.members.push_back(hs[m]);
      hg.class_of.emplace(hs[m], static_cast<int>(a));
    }
    hg.arrows.push_back(std::move(arr));
  }

  const int n = static_cast<int>(hg.objects.size());
  FinGroupoid::Builder b(n);
  for (const auto& arr : hg.arrows) b.add_arrow(arr.src, arr.tgt);
  for (int i = 0; i < n; ++i) {
    const int id = hg.class_of_homotopy(c.compose(eg.P.r, hg.objects[i]));
    if (hg.arrows[id].src != i || hg.arrows[id].tgt != i)
      hg.laws.add("identity", {{"object", hg.objects[i]}});
    b.set_identity(i, id);
  }

  // beta . alpha is the class of tau (H, K) for H in alpha, K in beta; every
  // pair of members is checked to land in one class.
  auto compose_class = [&](int beta, int alpha) {
    const auto& al = hg.arrows[alpha];
    const auto& be = hg.arrows[beta];
    auto one = [&](MorId h, MorId k) {
      return hg.class_of_homotopy(c.compose(eg.tau, c.mediator(eg.comp_domain, h, k)));
    };
    const int result = one(al.rep, be.rep);
    for (MorId h : al.members)
      for (MorId k : be.members)
        if (one(h, k) != result) {
          hg.laws.add("composition_well_defined", {{"alpha", alpha}, {"beta", beta}, {"H", h}, {"K", k}});
          return result;
        }
    return result;
  };
  try {
    hg.groupoid = std::make_shared<const FinGroupoid>(std::move(b).build(compose_class));
  } catch (const Error& err) {
    throw Error(Errc::CongruenceFailure, err.what(), {{"X", x}, {"Y", y}});
  }
  for (const auto& v : hg.groupoid->validate().violations) hg.laws.add(v.rule, v.witness);
  for (std::size_t a = 0; a < hg.arrows.size(); ++a)
    for (MorId h : hg.arrows[a].members)
      if (hg.class_of_homotopy(c.compose(eg.sigma, h)) != hg.inverse(static_cast<int>(a))) {
        hg.laws.add("inverse", {{"class", a}, {"H", h}});
        break;
      }
  return homs_.emplace(key, std::move(hg)).first->second;
}

MorId Enrichment::whisker_filler(MorId f) {
  if (auto it = pf_.find(f); it != pf_.end()) return it->second;
  FinCategory& c = cat();
  const PathObjectData py = path(c.dom(f));
  const PathObjectData pz = path(c.cod(f));
  const MorId k = c.mediator(pz.fiber_product, c.compose(f, py.s), c.compose(f, py.t));
  const MorId pf = filler(ps_, {py.r, pz.st, c.compose(pz.r, f), k});
  pf_.emplace(f, pf);
  return pf;
}

int Enrichment::whisker_left(MorId f, ObjId x, int alpha) {
  const auto key = std::make_tuple(f, x, alpha);
  if (auto it = wl_.find(key); it != wl_.end()) return it->second;
  FinCategory& c = cat();
  const MorId rep = hom(x, c.dom(f)).arrows.at(alpha).rep;
  const MorId pf = whisker_filler(f);
  const int out = hom(x, c.cod(f)).class_of_homotopy(c.compose(pf, rep));
  wl_.emplace(key, out);
  return out;
}

int Enrichment::whisker_right(ObjId y, ObjId z, int alpha, MorId g) {
  const auto key = std::make_tuple(y, z, alpha, g);
  if (auto it = wr_.find(key); it != wr_.end()) return it->second;
  FinCategory& c = cat();
  const MorId rep = hom(y, z).arrows.at(alpha).rep;
  const int out = hom(c.dom(g), z).class_of_homotopy(c.compose(rep, g));
  wr_.emplace(key, out);
  return out;
}

// (beta * f') . (g * alpha)
int Enrichment::horizontal_compose(ObjId x, ObjId y, ObjId z, int beta, int alpha) {
  const HomGroupoid& cxy = hom(x, y);
  const HomGroupoid& cyz = hom(y, z);
  const MorId g = cyz.objects[cyz.arrows.at(beta).src];
  const MorId f1 = cxy.objects[cxy.arrows.at(alpha).tgt];
  const int left = whisker_left(g, x, alpha);
  const int right = whisker_right(y, z, beta, f1);
  return hom(x, z).compose(right, left);
}

// (g' * alpha) . (beta * f)
int Enrichment::horizontal_compose_alt(ObjId x, ObjId y, ObjId z, int beta, int alpha) {
  const HomGroupoid& cxy = hom(x, y);
  const HomGroupoid& cyz = hom(y, z);
  const MorId g1 = cyz.objects[cyz.arrows.at(beta).tgt];
  const MorId f = cxy.objects[cxy.arrows.at(alpha).src];
  const int right = whisker_right(y, z, beta, f);
  const int left = whisker_left(g1, x, alpha);
  return hom(x, z).compose(left, right);
}

GroupoidFunctor Enrichment::left_whisker_functor(MorId f, ObjId x) {
  FinCategory& c = cat();
  const HomGroupoid& src = hom(x, c.dom(f));
  const HomGroupoid& tgt = hom(x, c.cod(f));
  GroupoidFunctor F{src.groupoid, tgt.groupoid, {}};
  for (MorId g : src.objects) F.maps.obj.push_back(tgt.object_of(c.compose(f, g)));
  for (int a = 0; a < src.groupoid->arrows(); ++a) F.maps.arr.push_back(whisker_left(f, x, a));
  return F;
}

GroupoidFunctor Enrichment::right_whisker_functor(ObjId z, MorId g) {
  FinCategory& c = cat();
  const HomGroupoid& src = hom(c.cod(g), z);
  const HomGroupoid& tgt = hom(c.dom(g), z);
  GroupoidFunctor F{src.groupoid, tgt.groupoid, {}};
  for (MorId h : src.objects) F.maps.obj.push_back(tgt.object_of(c.compose(h, g)));
  for (int a = 0; a < src.groupoid->arrows(); ++a)
    F.maps.arr.push_back(whisker_right(c.cod(g), z, a, g));
  return F;
}

ObjId PullbackFunctor::obj(ObjId a) { return si_.object(square(a).proj2); }

const PullbackData& PullbackFunctor::square(ObjId a) {
  return sj_.slice().base().pullback(sj_.slice().structure(a), g_);
}

MorId PullbackFunctor::mor(MorId m) {
  SliceCategory& s = sj_.slice();
  FinCategory& c = s.base();
  const PullbackData& from = square(s.dom(m));
  const PullbackData& to = square(s.cod(m));
  const MorId base = c.mediator(to, c.compose(s.base_morphism(m), from.proj1), from.proj2);
  return si_.morphism(si_.object(from.proj2), si_.object(to.proj2), base);
}

ObjId PostcompositionFunctor::obj(ObjId a) {
  FinCategory& c = sy_.slice().base();
  return sz_.object(c.compose(g_, sy_.slice().structure(a)));
}

MorId PostcompositionFunctor::mor(MorId m) {
  SliceCategory& s = sy_.slice();
  return sz_.morphism(obj(s.dom(m)), obj(s.cod(m)), s.base_morphism(m));
}

MorId FunctorExtension::lambda(ObjId y) {
  if (auto it = lambda_.find(y); it != lambda_.end()) return it->second;
  FinCategory& d = tgt_.cat();
  const PathObjectData ps = src_.path(y);
  const PathObjectData pt = tgt_.path(f_.obj(y));
  const MorId w = f_.mor(ps.r);
  if (!tgt_.structure().is_weak_equivalence(w))
    throw Error(Errc::NotHomotopical, "image of r is not a weak equivalence",
                {{"functor", f_.name()}, {"Y", y}});
  const MorId k = d.mediator(pt.fiber_product, f_.mor(ps.s), f_.mor(ps.t));
  const MorId l = filler(tgt_.structure(), {w, pt.st, pt.r, k});
  lambda_.emplace(y, l);
  return l;
}

int FunctorExtension::map_homotopy(ObjId x, ObjId y, MorId h) {
  const MorId image = tgt_.cat().compose(lambda(y), f_.mor(h));
  return tgt_.hom(f_.obj(x), f_.obj(y)).class_of_homotopy(image);
}

GroupoidFunctor FunctorExtension::on_hom(ObjId x, ObjId y, ValidationReport* laws) {
  const HomGroupoid& src = src_.hom(x, y);
  const HomGroupoid& tgt = tgt_.hom(f_.obj(x), f_.obj(y));
  GroupoidFunctor F{src.groupoid, tgt.groupoid, {}};
  for (MorId g : src.objects) F.maps.obj.push_back(tgt.object_of(f_.mor(g)));
  for (std::size_t a = 0; a < src.arrows.size(); ++a) {
    const auto& arr = src.arrows[a];
    const int image = map_homotopy(x, y, arr.rep);
    F.maps.arr.push_back(image);
    if (!laws) continue;
    for (MorId h : arr.members)
      if (map_homotopy(x, y, h) != image) {
        laws->add("extension_well_defined", {{"class", a}, {"H", h}});
        break;
      }
  }
  if (laws && !is_functor(*F.src, *F.tgt, F.maps))
    laws->add("extension_functorial", {{"functor", f_.name()}, {"X", x}, {"Y", y}});
  return F;
}

GroupoidFunctor extend_homotopical_functor(FunctorExtension& ext, ObjId x, ObjId y) {
  ValidationReport laws;
  GroupoidFunctor F = ext.on_hom(x, y, &laws);
  if (!laws.ok()) throw Error(Errc::CongruenceFailure, "extension is not a functor", laws.to_json());
  return F;
}

GroupoidFunctor whiskered_extension(FunctorExtension& ext, ObjId x, ObjId y, MorId f,
                                    ValidationReport* laws) {
  Enrichment& d = ext.target();
  FinCategory& dc = d.cat();
  CatFunctor& F = ext.functor();
  const HomGroupoid& src = ext.source().hom(x, y);
  const HomGroupoid& tgt = d.hom(F.obj(x), dc.cod(f));
  const MorId via = dc.compose(d.whisker_filler(f), ext.lambda(y));
  auto image = [&](MorId h) { return tgt.class_of_homotopy(dc.compose(via, F.mor(h))); };
  GroupoidFunctor G{src.groupoid, tgt.groupoid, {}};
  for (MorId k : src.objects) G.maps.obj.push_back(tgt.object_of(dc.compose(f, F.mor(k))));
  for (std::size_t a = 0; a < src.arrows.size(); ++a) {
    const int im = image(src.arrows[a].rep);
    G.maps.arr.push_back(im);
    if (!laws) continue;
    for (MorId h : src.arrows[a].members)
      if (image(h) != im) {
        laws->add("extension_well_defined", {{"class", a}, {"H", h}});
        break;
      }
  }
  if (laws && !is_functor(*G.src, *G.tgt, G.maps))
    laws->add("extension_functorial", {{"functor", F.name()}, {"X", x}, {"Y", y}});
  return G;
}

CommutationCertificate induced_strict_transformation(FunctorExtension& fext,
                                                     FunctorExtension& gext,
                                                     const std::map<ObjId, MorId>& alpha,
                                                     ObjId x, ObjId y) {
  Enrichment& d = fext.target();
  FinCategory& dc = d.cat();
  CatFunctor& F = fext.functor();
  CatFunctor& G = gext.functor();
  const MorId ax = alpha.at(x);
  const MorId ay = alpha.at(y);
  const HomGroupoid& cxy = fext.source().hom(x, y);

  CommutationCertificate cert;
  for (MorId f : cxy.objects) {
    ++cert.objects_checked;
    if (dc.compose(ay, F.mor(f)) != dc.compose(G.mor(f), ax))
      throw Error(Errc::NaturalityFailure, "components are not natural",
                  {{"morphism", f}, {"X", x}, {"Y", y}});
  }
  const GroupoidFunctor Fxy = fext.on_hom(x, y);
  const GroupoidFunctor Gxy = gext.on_hom(x, y);
  for (std::size_t a = 0; a < cxy.arrows.size(); ++a) {
    ++cert.arrows_checked;
    const int lhs = d.whisker_left(ay, F.obj(x), Fxy.maps.arr[a]);
    const int rhs = d.whisker_right(G.obj(x), G.obj(y), Gxy.maps.arr[a], ax);
    if (lhs != rhs) {
      cert.commutes = false;
      cert.witnesses.push_back({{"class", a}, {"lhs", lhs}, {"rhs", rhs}});
    }
  }
  return cert;
}

std::size_t check_groupoid_laws(Enrichment& e, ObjId x, ObjId y, ValidationReport& rep) {
  const HomGroupoid& h = e.hom(x, y);
  for (const auto& v : h.laws.violations) rep.add(v.rule, v.witness);
  return h.arrows.size();
}

namespace {

// Composable pairs (first, second) with cod first == dom second.
std::vector<std::pair<int, int>> composable(const FinGroupoid& g) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < g.arrows(); ++a)
    for (int b = g.out_begin(g.cod(a)); b < g.out_end(g.cod(a)); ++b) out.emplace_back(a, b);
  return out;
}

}  // namespace

std::size_t check_interchange(Enrichment& e, ObjId x, ObjId y, ObjId z, ValidationReport& rep) {
  const HomGroupoid& cxy = e.hom(x, y);
  const HomGroupoid& cyz = e.hom(y, z);
  const HomGroupoid& cxz = e.hom(x, z);
  std::size_t n = 0;
  for (auto [a, a1] : composable(*cxy.groupoid))
    for (auto [b, b1] : composable(*cyz.groupoid)) {
      ++n;
      const int lhs = cxz.compose(e.horizontal_compose(x, y, z, b1, a1),
                                  e.horizontal_compose(x, y, z, b, a));
      const int rhs = e.horizontal_compose(x, y, z, cyz.compose(b1, b), cxy.compose(a1, a));
      if (lhs != rhs) rep.add("interchange", {{"alpha", {a, a1}}, {"beta", {b, b1}}});
    }
  return n;
}

std::size_t check_horizontal_formulas(Enrichment& e, ObjId x, ObjId y, ObjId z,
                                      ValidationReport& rep) {
  const int na = e.hom(x, y).groupoid->arrows();
  const int nb = e.hom(y, z).groupoid->arrows();
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b)
      if (e.horizontal_compose(x, y, z, b, a) != e.horizontal_compose_alt(x, y, z, b, a))
        rep.add("horizontal_formulas", {{"alpha", a}, {"beta", b}});
  return static_cast<std::size_t>(na) * nb;
}

std::size_t check_horizontal_associativity(Enrichment& e, ObjId w, ObjId x, ObjId y, ObjId z,
                                           ValidationReport& rep) {
  const int na = e.hom(w, x).groupoid->arrows();
  const int nb = e.hom(x, y).groupoid->arrows();
  const int nc = e.hom(y, z).groupoid->arrows();
  std::size_t n = 0;
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b)
      for (int c = 0; c < nc; ++c) {
        ++n;
        const int lhs = e.horizontal_compose(w, y, z, c, e.horizontal_compose(w, x, y, b, a));
        const int rhs = e.horizontal_compose(w, x, z, e.horizontal_compose(x, y, z, c, b), a);
        if (lhs != rhs) rep.add("horizontal_associativity", {{"alpha", a}, {"beta", b}, {"gamma", c}});
      }
  return n;
}

// g * (alpha * f) = (g * alpha) * f for f : W -> X, alpha in C(X, Y), g : Y -> Z.
std::size_t check_whisker_exchange(Enrichment& e, ObjId x, ObjId y, ObjId z, ObjId w,
                                   ValidationReport& rep) {
  FinCategory& c = e.cat();
  const int na = e.hom(x, y).groupoid->arrows();
  std::size_t n = 0;
  for (MorId f : c.hom(w, x))
    for (MorId g : c.hom(y, z))
      for (int a = 0; a < na; ++a) {
        ++n;
        const int lhs = e.whisker_left(g, w, e.whisker_right(x, y, a, f));
        const int rhs = e.whisker_right(x, z, e.whisker_left(g, x, a), f);
        if (lhs != rhs) rep.add("whisker_exchange", {{"f", f}, {"g", g}, {"alpha", a}});
      }
  return n;
}

std::size_t check_whisker_functoriality(Enrichment& e, ObjId x, ObjId y, ObjId z,
                                        ValidationReport& rep) {
  FinCategory& c = e.cat();
  std::size_t n = 0;
  for (MorId g : c.hom(y, z)) {
    ++n;
    GroupoidFunctor F = e.left_whisker_functor(g, x);
    if (!is_functor(*F.src, *F.tgt, F.maps)) rep.add("left_whisker_functor", {{"g", g}});
  }
  for (MorId f : c.hom(x, y)) {
    ++n;
    GroupoidFunctor F = e.right_whisker_functor(z, f);
    if (!is_functor(*F.src, *F.tgt, F.maps)) rep.add("right_whisker_functor", {{"f", f}});
  }
  return n;
}

std::size_t check_whisker_lemmas(Enrichment& e, ObjId x, ObjId y, ObjId z, ValidationReport& rep) {
  PathStructure& ps = e.structure();
  FinCategory& c = e.cat();
  const std::vector<MorId> fs = c.hom(y, z);
  std::vector<GroupoidFunctor> left, right;
  for (MorId f : fs) {
    left.push_back(e.left_whisker_functor(f, x));
    right.push_back(e.right_whisker_functor(x, f));
  }
  std::size_t n = 0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const MorId f = fs[i];
    const GroupoidFunctor& L = left[i];
    const GroupoidFunctor& R = right[i];
    if (ps.is_fibration(f)) {
      ++n;
      if (!is_isofibration(*L.src, *L.tgt, L.maps))
        rep.add("fibration_isofibration", {{"f", f}, {"X", x}});
    }
    if (ps.is_weak_equivalence(f)) {
      n += 2;
      if (!is_equivalence(*L.src, *L.tgt, L.maps))
        rep.add("weak_equivalence_left", {{"f", f}, {"X", x}});
      if (!is_equivalence(*R.src, *R.tgt, R.maps))
        rep.add("weak_equivalence_right", {{"f", f}, {"X", x}});
    }
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      if (!homotopic(ps, f, fs[j])) continue;
      n += 2;
      if (!natural_iso_search(*L.src, *L.tgt, L.maps, left[j].maps))
        rep.add("homotopic_left", {{"f", f}, {"g", fs[j]}, {"X", x}});
      if (!natural_iso_search(*R.src, *R.tgt, R.maps, right[j].maps))
        rep.add("homotopic_right", {{"f", f}, {"g", fs[j]}, {"X", x}});
    }
  }
  return n;
}

std::size_t check_path_object_independence(Enrichment& e, ObjId x, ObjId y,
                                           ValidationReport& rep) {
  PathStructure& ps = e.structure();
  FinCategory& c = e.cat();
  const EGroupoidData& eg = e.egroupoid(y);
  const PathObjectData alt =
      make_path_object(c, c.to_terminal(y), eg.comp_domain.apex, eg.rr,
                       c.compose(eg.P.s, eg.comp_domain.proj1),
                       c.compose(eg.P.t, eg.comp_domain.proj2));
  if (const std::string why = path_object_defect(ps, alt); !why.empty()) {
    rep.add("alternative_path_object", {{"Y", y}, {"defect", why}});
    return 1;
  }
  MutantPathStructure other(ps, ps.name() + "+alt");
  other.path_overrides.emplace(c.to_terminal(y), alt);
  Enrichment e2(other);

  const HomGroupoid& h1 = e.hom(x, y);
  const HomGroupoid& h2 = e2.hom(x, y);
  const MorId phi = filler(ps, {eg.P.r, alt.st, alt.r, eg.P.st});
  const MorId psi = filler(ps, {alt.r, eg.P.st, eg.P.r, alt.st});

  auto transfer = [&](const HomGroupoid& from, const HomGroupoid& to, MorId via,
                      const char* rule) {
    GroupoidFunctor F{from.groupoid, to.groupoid, {}};
    for (std::size_t i = 0; i < from.objects.size(); ++i) F.maps.obj.push_back(static_cast<int>(i));
    for (std::size_t a = 0; a < from.arrows.size(); ++a) {
      const int image = to.class_of_homotopy(c.compose(via, from.arrows[a].rep));
      for (MorId h : from.arrows[a].members)
        if (to.class_of_homotopy(c.compose(via, h)) != image) {
          rep.add(rule, {{"class", a}, {"H", h}, {"reason", "not well defined"}});
          break;
        }
      F.maps.arr.push_back(image);
    }
    if (!is_functor(*F.src, *F.tgt, F.maps)) rep.add(rule, {{"reason", "not a functor"}});
    return F;
  };
  const GroupoidFunctor Phi = transfer(h1, h2, phi, "comparison_phi");
  const GroupoidFunctor Psi = transfer(h2, h1, psi, "comparison_psi");
  if (compose_maps(Psi.maps, Phi.maps) != identity_maps(*h1.groupoid) ||
      compose_maps(Phi.maps, Psi.maps) != identity_maps(*h2.groupoid))
    rep.add("comparison_inverse", {{"X", x}, {"Y", y}});
  return h1.arrows.size() + h2.arrows.size();
}

}  // namespace pathcat
