#include "pathcat/appendixpb.hpp"

namespace pathcat {

namespace {

json pb_json(const PullbackData& pb) {
  return {{"f", pb.f}, {"g", pb.g}, {"apex", pb.apex}, {"proj1", pb.proj1}, {"proj2", pb.proj2}};
}

}  // namespace

json FiberwisePathObject::to_json() const {
  return {{"f", f},         {"Pf", Pf},           {"A", pb_json(A)},  {"boundary", boundary},
          {"Q", Q.to_json()}, {"pullback", pb_json(Qpb)}, {"p1", p1}, {"p2", p2},
          {"verified", verified}};
}

FiberwisePathObject construct_fiberwise_path_object(PathStructure& ps, MorId f) {
  FinCategory& c = ps.cat();
  if (!ps.is_fibration(f)) throw Error(Errc::Precondition, "f must be a fibration", f);
  const ObjId x = c.dom(f), y = c.cod(f);
  FiberwisePathObject out;
  out.f = f;
  out.PX = ps.absolute_path_object(x);
  out.PY = ps.absolute_path_object(y);
  out.PPY = ps.path_object(out.PY.st);

  const PullbackData& yy = out.PY.fiber_product;
  const MorId fsft =
      c.mediator(yy, c.compose(f, out.PX.s), c.compose(f, out.PX.t));
  const MorId rf = c.compose(out.PY.r, f);
  std::optional<MorId> pf;
  for (MorId cand : c.lifts(fsft, out.PY.st))
    if (c.compose(cand, out.PX.r) == rf && ps.is_fibration(cand)) {
      pf = cand;
      break;
    }
  if (!pf)
    throw Error(Errc::NoSuitablePf, "no fibration Pf with (Pf) r = r f",
                {{"f", f}, {"PX", out.PX.P}, {"PY", out.PY.P}});
  out.Pf = *pf;

  const MorId id = c.identity(y);
  const MorId diag = c.mediator(yy, id, id);
  out.A = c.pullback(diag, fsft);
  out.boundary = c.mediator(out.PPY.fiber_product, c.compose(out.PY.r, out.A.proj1),
                            c.compose(out.Pf, out.A.proj2));
  out.Qpb = c.pullback(out.boundary, out.PPY.st);
  out.p1 = c.compose(out.A.proj1, out.Qpb.proj1);
  out.p2 = c.compose(out.A.proj2, out.Qpb.proj1);

  const MorId ra = c.mediator(out.A, f, out.PX.r);
  const MorId rq = c.mediator(out.Qpb, ra, c.compose(out.PPY.r, rf));
  out.Q = make_path_object(c, f, out.Qpb.apex, rq, c.compose(out.PX.s, out.p2),
                           c.compose(out.PX.t, out.p2));
  out.verified = is_path_object(ps, out.Q);
  return out;
}

json SliceComparison::to_json() const {
  json ws = json::array();
  for (const auto& w : witnesses)
    ws.push_back({{"target_arrow", w.target_arrow},
                  {"H", w.H},
                  {"HH", w.HH},
                  {"into_Q", w.into_Q},
                  {"source_arrow", w.source_arrow}});
  return {{"properties", props.to_json()},
          {"source_objects", J.src->objects()},
          {"source_arrows", J.src->arrows()},
          {"target_objects", J.tgt->objects()},
          {"target_arrows", J.tgt->arrows()},
          {"whole_source", whole_source},
          {"witnesses_ok", witnesses_ok},
          {"witnesses", ws}};
}

SliceComparison slice_comparison(PathStructure& ps, MorId g, MorId f, MorId h) {
  FinCategory& c = ps.cat();
  if (!ps.is_fibration(g) || !ps.is_fibration(f))
    throw Error(Errc::Precondition, "g and f must be fibrations", {{"g", g}, {"f", f}});
  if (c.cod(f) != c.dom(g) || c.cod(h) != c.dom(g))
    throw Error(Errc::Precondition, "f and h must land in the domain of g",
                {{"g", g}, {"f", f}, {"h", h}});
  const ObjId y = c.dom(g), z = c.cod(g);
  SlicePathStructure sy(ps, y), sz(ps, z);
  Enrichment ey(sy), ez(sz);
  PostcompositionFunctor G(sy, sz, g);
  FunctorExtension ext(ey, ez, G);

  const ObjId wy = sy.object(h), xy = sy.object(f);
  const ObjId wz = sz.object(c.compose(g, h)), xz = sz.object(c.compose(g, f)),
              yz = sz.object(g);
  const MorId fz = sz.morphism(xz, yz, f);
  const MorId hz = sz.morphism(wz, yz, h);

  ValidationReport laws;
  GroupoidFunctor gstar = ext.on_hom(wy, xy, &laws);
  if (!laws.ok())
    throw Error(Errc::CongruenceFailure, "g_* is ill-defined on hom-groupoids", laws.to_json());
  const GroupoidFunctor fstar = ez.left_whisker_functor(fz, wz);
  const HomGroupoid& hz_hom = ez.hom(wz, yz);
  const int point = hz_hom.object_of(hz);

  SliceComparison out;
  out.J = induced_on_fibers(gstar, fstar, point);
  out.whole_source = out.J.src->objects() == gstar.src->objects() &&
                     out.J.src->arrows() == gstar.src->arrows();
  out.props = functor_properties(out.J);

  // Fullness per arrow of the target fibre, through the fiberwise path object.
  const HomGroupoid& hy = ey.hom(wy, xy);
  const HomGroupoid& hzx = ez.hom(wz, xz);
  const SubGroupoid fib = strict_fiber(fstar, point);
  std::vector<int> src_local(hy.arrows.size(), -1);
  const SubGroupoid src_fib = strict_fiber(
      {gstar.src, fstar.tgt, compose_maps(fstar.maps, gstar.maps)}, point);
  for (int i = 0; i < static_cast<int>(src_fib.arrows.size()); ++i)
    src_local[src_fib.arrows[i]] = i;

  const FiberwisePathObject fo = construct_fiberwise_path_object(sz, fz);
  SliceCategory& zs = sz.slice();
  SliceCategory& ys = sy.slice();
  // Q as an object over Y, and the comparison filler Q -> P_Y X.
  const MorId q_over_y = c.compose(f, zs.base_morphism(fo.Q.s));
  const ObjId qy = sy.object(q_over_y);
  const PathObjectData& pyx = ey.path(xy);
  const MorId rq_y = sy.morphism(xy, qy, zs.base_morphism(fo.Q.r));
  const MorId stq_y = sy.morphism(
      qy, pyx.fiber_product.apex,
      ys.base_morphism(ys.mediator(pyx.fiber_product, sy.morphism(qy, xy, zs.base_morphism(fo.Q.s)),
                                   sy.morphism(qy, xy, zs.base_morphism(fo.Q.t)))));
  const MorId cmp = filler(sy, {rq_y, pyx.st, pyx.r, stq_y});

  for (int a = 0; a < static_cast<int>(fib.arrows.size()); ++a) {
    const MorId H = hzx.arrows[fib.arrows[a]].rep;
    SliceComparison::Witness w{a, H, {}, {}, -1};
    const auto hs = enumerate_homotopies(sz, fo.PY.st, zs.compose(fo.PY.r, hz), zs.compose(fo.Pf, H));
    if (!hs.empty()) {
      w.HH = hs.front().map;
      const MorId into_a = zs.mediator(fo.A, hz, H);
      w.into_Q = zs.mediator(fo.Qpb, into_a, w.HH);
      const MorId lifted = sy.morphism(
          wy, pyx.P, c.compose(ys.base_morphism(cmp), zs.base_morphism(w.into_Q)));
      const int cls = hy.class_of_homotopy(lifted);
      const int local = src_local[cls];
      if (local >= 0 && out.J.maps.arr[local] == a) w.source_arrow = cls;
    }
    if (w.source_arrow < 0) out.witnesses_ok = false;
    out.witnesses.push_back(w);
  }
  return out;
}

json TransposeIso::to_json() const {
  return {{"iso", iso},
          {"coherence", coherence},
          {"square", {{"commutes", square.commutes},
                      {"objects_checked", square.objects_checked},
                      {"arrows_checked", square.arrows_checked},
                      {"witnesses", square.witnesses}}},
          {"path_object", PW.to_json()},
          {"source_arrows", forward.src ? forward.src->arrows() : 0},
          {"target_arrows", forward.tgt ? forward.tgt->arrows() : 0}};
}

TransposeIso transpose_hom_iso(PathStructure& ps, const TransposeInstance& in) {
  FinCategory& c = ps.cat();
  if (!ps.is_fibration(in.l) || !ps.is_fibration(in.k))
    throw Error(Errc::Precondition, "l and k must be fibrations", {{"l", in.l}, {"k", in.k}});
  const ObjId y = c.dom(in.g), z = c.cod(in.g), base = c.cod(in.l);
  if (c.cod(in.k) != z || c.dom(in.l) != z || c.cod(in.v) != y)
    throw Error(Errc::Precondition, "ill-typed transpose instance",
                {{"l", in.l}, {"g", in.g}, {"k", in.k}, {"v", in.v}});
  if (!ps.is_fibration(c.compose(in.l, in.g)))
    throw Error(Errc::Precondition, "l g must be a fibration", {{"l", in.l}, {"g", in.g}});
  const PullbackData wpb = c.pullback(in.g, in.k);
  const MorId h = wpb.proj1, f = wpb.proj2;

  // P_Y W = Y x_Z P_Z X.
  const PathObjectData pzx = ps.path_object(in.k);
  const PullbackData ppb = c.pullback(in.g, c.compose(in.k, pzx.s));
  const MorId r1 = c.mediator(ppb, h, c.compose(pzx.r, f));
  const MorId s1 = c.mediator(wpb, ppb.proj1, c.compose(pzx.s, ppb.proj2));
  const MorId t1 = c.mediator(wpb, ppb.proj1, c.compose(pzx.t, ppb.proj2));
  const PathObjectData prescribed = make_path_object(c, h, ppb.apex, r1, s1, t1);
  if (!is_path_object(ps, prescribed))
    throw Error(Errc::Precondition, "Y x_Z P_Z X is not a path object of W over Y",
                {{"defect", path_object_defect(ps, prescribed)}});

  MutantPathStructure m(ps, ps.name() + "/transpose");
  TransposeIso out;
  MorId to_prescribed = c.identity(prescribed.P), from_prescribed = c.identity(prescribed.P);
  if (in.default_path_object) {
    out.PW = ps.path_object(h);
    to_prescribed = filler(ps, {out.PW.r, prescribed.st, prescribed.r, out.PW.st});
    from_prescribed = filler(ps, {prescribed.r, out.PW.st, out.PW.r, prescribed.st});
  } else {
    out.PW = prescribed;
    m.path_overrides[h] = prescribed;
  }

  SlicePathStructure sy(m, y), sz(m, z), si(m, base);
  Enrichment ey(sy), ez(sz), ei(si);
  const ObjId vy = sy.object(in.v), wy = sy.object(h);
  const ObjId vz = sz.object(c.compose(in.g, in.v)), xz = sz.object(in.k);
  const HomGroupoid& hy = ey.hom(vy, wy);
  const HomGroupoid& hz = ez.hom(vz, xz);
  const ObjId pyw = ey.path(wy).P, pzx_obj = ez.path(xz).P;
  SliceCategory& ys = sy.slice();
  SliceCategory& zs = sz.slice();

  ValidationReport laws;
  auto fwd_arrow = [&](MorId hm) {
    const MorId base_h = c.compose(to_prescribed, ys.base_morphism(hm));
    return hz.class_of_homotopy(sz.morphism(vz, pzx_obj, c.compose(ppb.proj2, base_h)));
  };
  auto bwd_arrow = [&](MorId km) {
    const MorId lifted = c.mediator(ppb, in.v, zs.base_morphism(km));
    return hy.class_of_homotopy(sy.morphism(vy, pyw, c.compose(from_prescribed, lifted)));
  };

  out.forward = {hy.groupoid, hz.groupoid, {}};
  for (MorId o : hy.objects)
    out.forward.maps.obj.push_back(
        hz.object_of(sz.morphism(vz, xz, c.compose(f, ys.base_morphism(o)))));
  for (std::size_t a = 0; a < hy.arrows.size(); ++a) {
    const int cls = fwd_arrow(hy.arrows[a].rep);
    for (MorId mem : hy.arrows[a].members)
      if (fwd_arrow(mem) != cls)
        laws.add("forward well-defined", {{"arrow", a}, {"member", mem}});
    out.forward.maps.arr.push_back(cls);
  }
  out.backward = {hz.groupoid, hy.groupoid, {}};
  for (MorId o : hz.objects)
    out.backward.maps.obj.push_back(
        hy.object_of(sy.morphism(vy, wy, c.mediator(wpb, in.v, zs.base_morphism(o)))));
  for (std::size_t a = 0; a < hz.arrows.size(); ++a) {
    const int cls = bwd_arrow(hz.arrows[a].rep);
    for (MorId mem : hz.arrows[a].members)
      if (bwd_arrow(mem) != cls)
        laws.add("backward well-defined", {{"arrow", a}, {"member", mem}});
    out.backward.maps.arr.push_back(cls);
  }
  const bool functors = is_functor(*hy.groupoid, *hz.groupoid, out.forward.maps) &&
                        is_functor(*hz.groupoid, *hy.groupoid, out.backward.maps);
  out.iso = laws.ok() && functors &&
            compose_maps(out.backward.maps, out.forward.maps) == identity_maps(*hy.groupoid) &&
            compose_maps(out.forward.maps, out.backward.maps) == identity_maps(*hz.groupoid);

  // l_* (transpose) = (f * -) (lg)_*.
  const MorId lg = c.compose(in.l, in.g);
  PostcompositionFunctor LG(sy, si, lg), L(sz, si, in.l);
  FunctorExtension ext_lg(ey, ei, LG), ext_l(ez, ei, L);
  const ObjId wi = si.object(c.compose(lg, h)), xi = si.object(c.compose(in.l, in.k));
  const MorId fi = si.morphism(wi, xi, f);
  const GroupoidFunctor lower = whiskered_extension(ext_lg, vy, wy, fi, &laws);
  const GroupoidFunctor lstar = ext_l.on_hom(vz, xz, &laws);
  const FunctorMaps upper = compose_maps(lstar.maps, out.forward.maps);
  for (std::size_t o = 0; o < upper.obj.size(); ++o) {
    ++out.square.objects_checked;
    if (upper.obj[o] != lower.maps.obj[o]) {
      out.square.commutes = false;
      out.square.witnesses.push_back({{"object", o}});
    }
  }
  for (std::size_t a = 0; a < upper.arr.size(); ++a) {
    ++out.square.arrows_checked;
    if (upper.arr[a] != lower.maps.arr[a]) {
      out.square.commutes = false;
      out.square.witnesses.push_back(
          {{"arrow", a}, {"upper", upper.arr[a]}, {"lower", lower.maps.arr[a]}});
    }
  }
  if (!laws.ok()) out.square.commutes = false;

  // (Pf) lambda_{(lg)*} ~ lambda_{l*} pi2 over X x_I X, as maps P_Y W -> P_I X.
  SliceCategory& is = si.slice();
  const MorId pf = ei.whisker_filler(fi);
  const MorId lam_lg = ext_lg.lambda(wy), lam_l = ext_l.lambda(xz);
  const ObjId from = is.dom(lam_lg);
  const MorId left = is.compose(pf, lam_lg);
  const MorId pi2 =
      si.morphism(from, is.dom(lam_l), c.compose(ppb.proj2, to_prescribed));
  const MorId right = is.compose(lam_l, pi2);
  out.coherence = homotopic_over(si, ei.path(xi).st, left, right);
  return out;
}

}  // namespace pathcat
