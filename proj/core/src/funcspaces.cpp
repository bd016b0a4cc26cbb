#include "pathcat/funcspaces.hpp"

namespace pathcat {

json TestRecord::to_json() const {
  json j{{"T", T}, {"props", props.to_json()}};
  if (over) j["over"] = *over;
  return j;
}

bool StrengthVerdict::faithful() const {
  for (const auto& t : tests)
    if (!t.props.faithful) return false;
  return true;
}

json StrengthVerdict::to_json() const {
  json tj = json::array();
  for (const auto& t : tests) tj.push_back(t.to_json());
  return {{"weak", weak},
          {"ordinary", ordinary},
          {"strong", strong},
          {"witness_weak", witness_weak},
          {"witness_ordinary", witness_ordinary},
          {"witness_strong", witness_strong},
          {"tests", tj}};
}

namespace {

void record(StrengthVerdict& v, TestRecord rec) {
  const json w = rec.to_json();
  if (v.weak && !rec.props.es()) {
    v.weak = false;
    v.witness_weak = w;
  }
  if (v.ordinary && !rec.props.esei()) {
    v.ordinary = false;
    v.witness_ordinary = w;
  }
  if (v.strong && !rec.props.esf()) {
    v.strong = false;
    v.witness_strong = w;
  }
  v.tests.push_back(std::move(rec));
}

// eval re-expressed on the category's chosen product E x X.
MorId eval_on_product(FinCategory& c, const ExponentialCandidate& cand) {
  const PullbackData& prod = c.product(cand.E, cand.X);
  if (prod.apex == cand.product.apex && prod.proj1 == cand.product.proj1 &&
      prod.proj2 == cand.product.proj2)
    return cand.eval;
  return c.compose(cand.eval, c.mediator(cand.product, prod.proj1, prod.proj2));
}

}  // namespace

GroupoidFunctor exponential_functor(Enrichment& e, const ExponentialCandidate& cand, ObjId t) {
  FinCategory& c = e.cat();
  ProductFunctor F(c, cand.X);
  FunctorExtension ext(e, e, F);
  ValidationReport laws;
  GroupoidFunctor G = whiskered_extension(ext, t, cand.E, eval_on_product(c, cand), &laws);
  if (!laws.ok()) throw Error(Errc::CongruenceFailure, "induced functor ill-defined", laws.to_json());
  return G;
}

StrengthVerdict check_exponential(Enrichment& e, const ExponentialCandidate& cand) {
  StrengthVerdict v;
  for (ObjId t : e.structure().fragment()) {
    const GroupoidFunctor H = exponential_functor(e, cand, t);
    record(v, {t, std::nullopt, functor_properties(H)});
  }
  return v;
}

StrengthVerdict check_exponential(PathStructure& ps, const ExponentialCandidate& cand) {
  Enrichment e(ps);
  return check_exponential(e, cand);
}

StrengthVerdict check_pi_type(PathStructure& ps, const PiCandidate& cand) {
  FinCategory& c = ps.cat();
  if (!ps.is_fibration(cand.f) || !ps.is_fibration(cand.g) || !ps.is_fibration(cand.to_base))
    throw Error(Errc::Precondition, "Pi-type data must consist of fibrations", cand.to_json());
  const ObjId i = c.dom(cand.g), j = c.cod(cand.g);
  SlicePathStructure sj(ps, j), si(ps, i);
  Enrichment ej(sj), ei(si);
  PullbackFunctor G(sj, si, cand.g);
  FunctorExtension ext(ej, ei, G);

  const ObjId pobj = sj.object(cand.to_base);
  const ObjId xobj = si.object(cand.f);
  const PullbackData& pb = G.square(pobj);
  MorId eval = cand.eval;
  if (pb.apex != cand.pullback.apex || pb.proj1 != cand.pullback.proj1 ||
      pb.proj2 != cand.pullback.proj2)
    eval = c.compose(eval, c.mediator(cand.pullback, pb.proj1, pb.proj2));
  const MorId eval_s = si.morphism(G.obj(pobj), xobj, eval);

  StrengthVerdict v;
  for (ObjId t : ps.fragment())
    for (MorId tj : c.hom(t, j)) {
      const ObjId tobj = sj.object(tj);
      ValidationReport laws;
      const GroupoidFunctor H = whiskered_extension(ext, tobj, pobj, eval_s, &laws);
      if (!laws.ok())
        throw Error(Errc::CongruenceFailure, "induced functor ill-defined", laws.to_json());
      record(v, {t, tj, functor_properties(H)});
    }
  return v;
}

PiCandidate identity_pi(PathStructure& ps, MorId f) {
  FinCategory& c = ps.cat();
  const ObjId i = c.cod(f);
  PiCandidate out;
  out.f = f;
  out.g = c.identity(i);
  out.pi = c.dom(f);
  out.to_base = f;
  out.pullback = c.pullback(f, out.g);
  out.eval = out.pullback.proj1;
  return out;
}

ExponentialCandidate transport_along_weak_equivalence(PathStructure& ps,
                                                      const ExponentialCandidate& cand, MorId h,
                                                      TransportPosition position) {
  FinCategory& c = ps.cat();
  if (!ps.is_weak_equivalence(h))
    throw Error(Errc::NotWeakEquivalence, "transport needs a weak equivalence", h);
  ExponentialCandidate out = cand;
  switch (position) {
    case TransportPosition::DomainOfE: {
      if (c.cod(h) != cand.E) throw Error(Errc::Precondition, "h must land in E", h);
      out.E = c.dom(h);
      out.product = c.product(out.E, cand.X);
      const MorId hx =
          c.mediator(cand.product, c.compose(h, out.product.proj1), out.product.proj2);
      out.eval = c.compose(cand.eval, hx);
      break;
    }
    case TransportPosition::CodomainY:
      if (c.dom(h) != cand.Y) throw Error(Errc::Precondition, "h must start at Y", h);
      out.Y = c.cod(h);
      out.eval = c.compose(h, cand.eval);
      break;
    case TransportPosition::ArgumentX: {
      if (c.cod(h) != cand.X) throw Error(Errc::Precondition, "h must land in X", h);
      out.X = c.dom(h);
      out.product = c.product(cand.E, out.X);
      const MorId eh =
          c.mediator(cand.product, out.product.proj1, c.compose(h, out.product.proj2));
      out.eval = c.compose(cand.eval, eh);
      break;
    }
  }
  return out;
}

json ExponentialOverFibration::to_json() const {
  return {{"exponential", exp.to_json()}, {"p_exp", p_exp},   {"Q", Q.apex},
          {"pi", pi.to_json()},           {"eval_q", eval_q}, {"square_commutes", square_commutes}};
}

ExponentialOverFibration construct_exponential_over_fibration(PathStructure& ps, MorId p,
                                                              const ExponentialCandidate& base) {
  FinCategory& c = ps.cat();
  if (!ps.is_fibration(p)) throw Error(Errc::Precondition, "p must be a fibration", p);
  if (c.cod(p) != base.Y) throw Error(Errc::Precondition, "p must land in the base exponent", p);
  ExponentialOverFibration out;
  out.Q = c.pullback(base.eval, p);
  auto pic = ps.pi_type(out.Q.proj1, base.product.proj1);
  if (!pic) throw Error(Errc::MissingPiType, "no Pi-type along the projection", base.to_json());
  out.pi = *pic;
  out.p_exp = pic->to_base;
  const ObjId pi = pic->pi;
  const PullbackData& prod = c.product(pi, base.X);
  const MorId px1 = c.mediator(base.product, c.compose(out.p_exp, prod.proj1), prod.proj2);
  const MorId kappa = c.mediator(pic->pullback, prod.proj1, px1);
  out.eval_q = c.compose(pic->eval, kappa);
  out.exp.X = base.X;
  out.exp.Y = c.dom(p);
  out.exp.E = pi;
  out.exp.product = prod;
  out.exp.eval = c.compose(out.Q.proj2, out.eval_q);
  out.square_commutes = c.compose(p, out.exp.eval) == c.compose(base.eval, px1);
  return out;
}

json PiOverFibration::to_json() const {
  return {{"pi", out.to_json()},
          {"pi_p", pi_p},
          {"Q", Q.apex},
          {"inner", inner.to_json()},
          {"square_commutes", square_commutes}};
}

PiOverFibration construct_pi_over_fibration(PathStructure& ps, MorId f, MorId p,
                                            const PiCandidate& base_pi) {
  FinCategory& c = ps.cat();
  if (base_pi.g != f) throw Error(Errc::Precondition, "base Pi-type must be along f", f);
  if (c.cod(p) != c.dom(base_pi.f)) throw Error(Errc::Precondition, "p must land in Y", p);
  if (!ps.is_fibration(p)) throw Error(Errc::Precondition, "p must be a fibration", p);
  PiOverFibration out;
  out.Q = c.pullback(base_pi.eval, p);
  auto inner = ps.pi_type(out.Q.proj1, base_pi.pullback.proj1);
  if (!inner) throw Error(Errc::MissingPiType, "no Pi-type along the projection", base_pi.to_json());
  out.inner = *inner;
  out.pi_p = inner->to_base;

  PiCandidate& r = out.out;
  r.f = c.compose(base_pi.f, p);
  r.g = f;
  r.pi = inner->pi;
  r.to_base = c.compose(base_pi.to_base, inner->to_base);
  r.pullback = c.pullback(r.to_base, f);
  const MorId m1 = c.mediator(base_pi.pullback, c.compose(out.pi_p, r.pullback.proj1),
                              r.pullback.proj2);
  const MorId kappa = c.mediator(inner->pullback, r.pullback.proj1, m1);
  r.eval = c.compose(out.Q.proj2, c.compose(inner->eval, kappa));
  out.square_commutes = c.compose(p, r.eval) == c.compose(base_pi.eval, m1);
  return out;
}

PiCandidate compose_pi_horizontal(PathStructure& ps, MorId f, MorId g, MorId h) {
  FinCategory& c = ps.cat();
  auto inner = ps.pi_type(f, g);
  if (!inner) throw Error(Errc::MissingPiType, "no Pi-type for f along g", json{f, g});
  auto outer = ps.pi_type(inner->to_base, h);
  if (!outer) throw Error(Errc::MissingPiType, "no Pi-type along h", json{inner->to_base, h});
  PiCandidate r;
  r.f = f;
  r.g = c.compose(h, g);
  r.pi = outer->pi;
  r.to_base = outer->to_base;
  r.pullback = c.pullback(r.to_base, r.g);
  // W x_K I -> (W x_K J) x_J I -> Pi_g X x_J I -> X
  const PullbackData& wji = c.pullback(outer->pullback.proj2, g);
  const MorId kappa = c.mediator(
      wji, c.mediator(outer->pullback, r.pullback.proj1, c.compose(g, r.pullback.proj2)),
      r.pullback.proj2);
  const MorId g_eps = c.mediator(inner->pullback, c.compose(outer->eval, wji.proj1), wji.proj2);
  r.eval = c.compose(inner->eval, c.compose(g_eps, kappa));
  return r;
}

json FunextData::to_json() const {
  return {{"pair", pair.to_json()},
          {"path", path.to_json()},
          {"rX", rX},
          {"phi", phi},
          {"st_square", st_square},
          {"r_homotopy", r_homotopy},
          {"product_path_object", product_path_object}};
}

FunextData build_funext_comparison(PathStructure& ps, const ExponentialCandidate& cand) {
  FinCategory& c = ps.cat();
  FunextData fd;
  const ObjId e = cand.E;
  const PathObjectData py = ps.absolute_path_object(cand.Y);
  const PullbackData& yy = py.fiber_product;
  const PullbackData& ee = c.product(e, e);
  const PullbackData& eex = c.product(ee.apex, cand.X);

  fd.pair.X = cand.X;
  fd.pair.Y = yy.apex;
  fd.pair.E = ee.apex;
  fd.pair.product = eex;
  const MorId a1 =
      c.mediator(cand.product, c.compose(ee.proj1, eex.proj1), eex.proj2);
  const MorId a2 =
      c.mediator(cand.product, c.compose(ee.proj2, eex.proj1), eex.proj2);
  fd.pair.eval = c.mediator(yy, c.compose(cand.eval, a1), c.compose(cand.eval, a2));

  fd.path = construct_exponential_over_fibration(ps, py.st, fd.pair);
  fd.st_square = fd.path.square_commutes;

  // r^X over the diagonal, induced by (Delta x 1, r eps_Y) into Q.
  const MorId diag = c.mediator(ee, c.identity(e), c.identity(e));
  const MorId diag_x =
      c.mediator(eex, c.compose(diag, cand.product.proj1), cand.product.proj2);
  const MorId target = c.mediator(fd.path.Q, diag_x, c.compose(py.r, cand.eval));
  const PullbackData& pix = fd.path.exp.product;
  auto times_x = [&](MorId l) {
    return c.mediator(pix, c.compose(l, cand.product.proj1), cand.product.proj2);
  };
  bool found = false;
  for (MorId l : c.lifts(diag, fd.path.p_exp))
    if (homotopic_over(ps, fd.path.Q.proj1, c.compose(fd.path.eval_q, times_x(l)), target)) {
      fd.rX = l;
      found = true;
      break;
    }
  if (!found) throw Error(Errc::NoFiller, "no map r^X over the diagonal", cand.to_json());

  fd.PE = ps.absolute_path_object(e);
  fd.phi = filler(ps, {fd.PE.r, fd.path.p_exp, fd.rX, fd.PE.st});
  fd.r_homotopy = homotopic_over(ps, py.st, c.compose(fd.path.exp.eval, times_x(fd.rX)),
                                 c.compose(py.r, cand.eval));

  const PullbackData& pp = c.product(py.P, py.P);
  const MorId rr = c.mediator(pp, c.compose(py.r, yy.proj1), c.compose(py.r, yy.proj2));
  const MorId ss = c.mediator(yy, c.compose(py.s, pp.proj1), c.compose(py.s, pp.proj2));
  const MorId tt = c.mediator(yy, c.compose(py.t, pp.proj1), c.compose(py.t, pp.proj2));
  fd.product_path_object =
      is_path_object(ps, make_path_object(c, c.to_terminal(yy.apex), pp.apex, rr, ss, tt));
  return fd;
}

json FunextVerdict::to_json() const {
  json j{{"strong", strong}, {"phi_weak_equivalence", phi_weak_equivalence}, {"agree", agree}};
  j["phi_homotopy_equivalence"] = phi_homotopy_equivalence ? json(*phi_homotopy_equivalence) : json();
  j["fully_faithful"] = fully_faithful ? json(*fully_faithful) : json();
  return j;
}

FunextVerdict check_funext(PathStructure& ps, const ExponentialCandidate& cand,
                           const FunextData& fd, bool exhaustive_phi) {
  FunextVerdict v;
  const StrengthVerdict sv = check_exponential(ps, cand);
  if (!sv.weak)
    throw Error(Errc::Precondition, "function extensionality needs a weak exponential",
                sv.witness_weak);
  v.strong = sv.strong;
  v.phi_weak_equivalence = ps.is_weak_equivalence(fd.phi);
  if (exhaustive_phi) v.phi_homotopy_equivalence = is_homotopy_equivalence(ps, fd.phi);
  v.agree = v.strong == v.phi_weak_equivalence &&
            (!v.phi_homotopy_equivalence || *v.phi_homotopy_equivalence == v.phi_weak_equivalence);
  if (v.strong) v.fully_faithful = sv.faithful();
  return v;
}

json UpgradeReport::to_json() const {
  json j{{"strong", strong}};
  j["connecting"] = connecting ? json(*connecting) : json();
  return j;
}

UpgradeReport verify_ordinary_upgrade(PathStructure& ps, const ExponentialCandidate& strong_cand,
                                      const ExponentialCandidate& ordinary_cand) {
  FinCategory& c = ps.cat();
  if (strong_cand.X != ordinary_cand.X || strong_cand.Y != ordinary_cand.Y)
    throw Error(Errc::Precondition, "candidates are for different (X, Y)",
                {{"strong", strong_cand.to_json()}, {"ordinary", ordinary_cand.to_json()}});
  Enrichment e(ps);
  if (!check_exponential(e, strong_cand).strong)
    throw Error(Errc::Precondition, "first candidate is not strong", strong_cand.to_json());
  const StrengthVerdict ov = check_exponential(e, ordinary_cand);
  if (!ov.ordinary)
    throw Error(Errc::Precondition, "second candidate is not ordinary", ordinary_cand.to_json());
  UpgradeReport rep;
  rep.strong = ov.strong;
  for (MorId h : c.hom(ordinary_cand.E, strong_cand.E)) {
    if (!ps.is_weak_equivalence(h)) continue;
    const MorId hx = c.mediator(strong_cand.product, c.compose(h, ordinary_cand.product.proj1),
                                ordinary_cand.product.proj2);
    if (homotopic(ps, c.compose(strong_cand.eval, hx), ordinary_cand.eval)) {
      rep.connecting = h;
      break;
    }
  }
  return rep;
}

}  // namespace pathcat
