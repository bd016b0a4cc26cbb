#include "doctest.h"

#include "pathcat/funcspaces.hpp"
#include "pathcat/models.hpp"

using namespace pathcat;

namespace {

MorId with_objects(GpdCategory& c, ObjId x, ObjId y, std::vector<int> obj) {
  for (MorId m : c.hom(x, y))
    if (c.maps(m).obj == obj) return m;
  FAIL("no such map");
  return {};
}

void check_ordering(const StrengthVerdict& v) {
  CHECK((!v.strong || v.ordinary));
  CHECK((!v.ordinary || v.weak));
}

}  // namespace

TEST_CASE("strict exponential in the discrete model") {
  auto d = make_discrete_model({2, 3});
  auto& c = d->gpd();
  const ObjId two = d->named("2"), three = d->named("3");
  const ExponentialCandidate cand = c.function_space(two, three);
  CHECK(c.groupoid(cand.E).objects() == 9);
  const StrengthVerdict v = check_exponential(*d, cand);
  CHECK(v.weak);
  CHECK(v.ordinary);
  CHECK(v.strong);
  CHECK(v.tests.size() == d->fragment().size());
}

TEST_CASE("functor groupoids are strong exponentials") {
  auto ps = make_gpd_model(std::vector<std::string>{"bz2", "interval"});
  auto& c = ps->gpd();
  for (ObjId x : ps->fragment())
    for (ObjId y : ps->fragment()) {
      const StrengthVerdict v = check_exponential(*ps, c.function_space(x, y));
      CHECK_MESSAGE(v.strong, c.object_label(x) << " " << c.object_label(y));
      check_ordering(v);
    }
}

TEST_CASE("under-sized candidate is not even weak") {
  auto ps = make_gpd_model(std::vector<std::string>{"discrete2"});
  auto& c = ps->gpd();
  const ObjId one = ps->terminal(), d2 = ps->named("discrete2");
  ExponentialCandidate cand;
  cand.X = one;
  cand.Y = d2;
  cand.E = one;
  cand.product = c.product(one, one);
  cand.eval = c.compose(with_objects(c, one, d2, {0}), cand.product.proj1);
  const StrengthVerdict v = check_exponential(*ps, cand);
  CHECK_FALSE(v.weak);
  CHECK_FALSE(v.strong);
  CHECK(v.witness_weak["T"] == idx(one));
  check_ordering(v);
}

TEST_CASE("Pi-types") {
  auto ps = make_gpd_model(std::vector<std::string>{"bz2", "interval"});
  auto& c = ps->gpd();
  const ObjId one = ps->terminal(), b = ps->named("bz2"), i = ps->named("I");

  SUBCASE("over an identity") {
    const PullbackData& bi = c.product(b, i);
    const StrengthVerdict v = check_pi_type(*ps, identity_pi(*ps, bi.proj2));
    CHECK(v.strong);
  }
  SUBCASE("over the terminal object agrees with the exponential") {
    for (auto [x, y] : {std::pair{i, b}, std::pair{b, b}, std::pair{one, i}}) {
      const PullbackData& yx = c.product(y, x);
      const PiCandidate pic = *ps->pi_type(yx.proj2, c.to_terminal(x));
      const StrengthVerdict vp = check_pi_type(*ps, pic);
      const StrengthVerdict ve = check_exponential(*ps, c.function_space(x, y));
      CHECK(vp.strong == ve.strong);
      CHECK(vp.weak == ve.weak);
      CHECK(vp.strong);
    }
  }
  SUBCASE("under-sized Pi-type") {
    // Sections of I x bz2 -> I replaced by the constant ones only.
    const PullbackData& bi = c.product(b, i);
    PiCandidate pic = *ps->pi_type(bi.proj2, c.to_terminal(i));
    PiCandidate bad;
    bad.f = pic.f;
    bad.g = pic.g;
    bad.pi = one;
    bad.to_base = c.identity(one);
    bad.pullback = c.pullback(bad.to_base, bad.g);
    const MorId point = with_objects(c, i, b, {0, 0});
    bad.eval = c.mediator(bi, c.compose(point, bad.pullback.proj2), bad.pullback.proj2);
    const StrengthVerdict v = check_pi_type(*ps, bad);
    CHECK_FALSE(v.strong);
    check_ordering(v);
  }
}

TEST_CASE("transport along weak equivalences") {
  auto ps = make_gpd_model(std::vector<std::string>{"bz2", "interval"});
  auto& c = ps->gpd();
  const ObjId one = ps->terminal(), b = ps->named("bz2"), i = ps->named("I");
  const ExponentialCandidate cand = c.function_space(one, b);

  const ExponentialCandidate same =
      transport_along_weak_equivalence(*ps, cand, c.identity(cand.E), TransportPosition::DomainOfE);
  CHECK(same.eval == cand.eval);

  // Y replaced by the equivalent bz2 x I.
  const PullbackData& bi = c.product(b, i);
  const MorId incl = c.mediator(bi, c.identity(b), c.compose(with_objects(c, one, i, {0}), c.to_terminal(b)));
  CHECK(ps->is_weak_equivalence(incl));
  CHECK(check_exponential(*ps, transport_along_weak_equivalence(*ps, cand, incl,
                                                                TransportPosition::CodomainY))
            .strong);
  // E replaced by the equivalent E x I.
  const PullbackData& ei = c.product(cand.E, i);
  CHECK(check_exponential(*ps, transport_along_weak_equivalence(*ps, cand, ei.proj1,
                                                                TransportPosition::DomainOfE))
            .strong);
  // X replaced by the equivalent I.
  CHECK(check_exponential(*ps, transport_along_weak_equivalence(*ps, cand, c.to_terminal(i),
                                                                TransportPosition::ArgumentX))
            .strong);
  CHECK_THROWS_AS(transport_along_weak_equivalence(*ps, cand, with_objects(c, one, i, {0}),
                                                   TransportPosition::ArgumentX),
                  Error);
}

TEST_CASE("exponential over a fibration") {
  auto ps = make_gpd_model(std::vector<std::string>{"bz2", "interval"});
  auto& c = ps->gpd();
  const ObjId one = ps->terminal(), b = ps->named("bz2");
  const ExponentialOverFibration out =
      construct_exponential_over_fibration(*ps, c.to_terminal(b), c.function_space(one, one));
  CHECK(out.square_commutes);
  CHECK(groupoid_iso_search(c.groupoid(out.exp.E), c.groupoid(b)).has_value());
  CHECK(check_exponential(*ps, out.exp).strong);
}

TEST_CASE("function extensionality") {
  auto ps = make_gpd_model(std::vector<std::string>{"bz2", "discrete2"});
  auto& c = ps->gpd();
  const ObjId one = ps->terminal(), b = ps->named("bz2");
  const ExponentialCandidate cand = c.function_space(one, b);
  const FunextData fd = build_funext_comparison(*ps, cand);
  CHECK(fd.st_square);
  CHECK(fd.r_homotopy);
  CHECK(fd.product_path_object);
  const FunextVerdict v = check_funext(*ps, cand, fd, true);
  CHECK(v.strong);
  CHECK(v.phi_weak_equivalence);
  CHECK(v.phi_homotopy_equivalence == std::optional<bool>(true));
  CHECK(v.agree);
  CHECK(v.fully_faithful == std::optional<bool>(true));
}

TEST_CASE("ordinary upgrade") {
  auto ps = make_gpd_model(std::vector<std::string>{"bz2", "interval"});
  auto& c = ps->gpd();
  const ObjId one = ps->terminal(), b = ps->named("bz2"), i = ps->named("I");
  const ExponentialCandidate cand = c.function_space(one, b);
  UpgradeReport rep = verify_ordinary_upgrade(*ps, cand, cand);
  CHECK(rep.strong);
  CHECK(rep.connecting.has_value());
  const PullbackData& ei = c.product(cand.E, i);
  rep = verify_ordinary_upgrade(
      *ps, cand, transport_along_weak_equivalence(*ps, cand, ei.proj1, TransportPosition::DomainOfE));
  CHECK(rep.strong);
  CHECK(rep.connecting.has_value());
  CHECK_THROWS_AS(verify_ordinary_upgrade(*ps, cand, c.function_space(i, b)), Error);
}

TEST_CASE("function extensionality fails with the exponential") {
  auto ps = make_gpd_model(std::vector<std::string>{"discrete2", "interval"});
  auto& c = ps->gpd();
  const ObjId one = ps->terminal(), d2 = ps->named("discrete2"), i = ps->named("I");
  ExponentialCandidate cand;
  cand.X = one;
  cand.Y = i;
  cand.E = d2;
  cand.product = c.product(d2, one);
  cand.eval = c.compose(with_objects(c, d2, i, {0, 1}), cand.product.proj1);
  const StrengthVerdict sv = check_exponential(*ps, cand);
  CHECK(sv.weak);
  CHECK_FALSE(sv.ordinary);
  CHECK_FALSE(sv.strong);
  const FunextData fd = build_funext_comparison(*ps, cand);
  CHECK(fd.st_square);
  CHECK(fd.r_homotopy);
  const FunextVerdict v = check_funext(*ps, cand, fd, true);
  CHECK_FALSE(v.strong);
  CHECK_FALSE(v.phi_weak_equivalence);
  CHECK(v.agree);
  CHECK_FALSE(v.fully_faithful.has_value());
}

TEST_CASE("function extensionality for the interval") {
  auto ps = make_gpd_model(std::vector<std::string>{"interval"});
  auto& c = ps->gpd();
  const ObjId i = ps->named("I");
  const ExponentialCandidate cand = c.function_space(i, i);
  const FunextData fd = build_funext_comparison(*ps, cand);
  CHECK(fd.st_square);
  CHECK(fd.r_homotopy);
  const FunextVerdict v = check_funext(*ps, cand, fd);
  CHECK(v.strong);
  CHECK(v.phi_weak_equivalence);
  CHECK(v.agree);
}

TEST_CASE("Pi-types over fibrations") {
  auto ps = make_gpd_model(std::vector<std::string>{"bz2", "interval"});
  auto& c = ps->gpd();
  const ObjId one = ps->terminal(), b = ps->named("bz2"), i = ps->named("I");
  const MorId id1 = c.identity(one);

  SUBCASE("terminal base reduces to the exponential construction") {
    const PiCandidate base = *ps->pi_type(id1, id1);
    const PiOverFibration out = construct_pi_over_fibration(*ps, id1, c.to_terminal(b), base);
    CHECK(out.square_commutes);
    CHECK(groupoid_iso_search(c.groupoid(out.out.pi), c.groupoid(b)).has_value());
    const ExponentialOverFibration ex =
        construct_exponential_over_fibration(*ps, c.to_terminal(b), c.function_space(one, one));
    CHECK(groupoid_iso_search(c.groupoid(out.out.pi), c.groupoid(ex.exp.E)).has_value());
    CHECK(check_pi_type(*ps, out.out).strong);
  }
  SUBCASE("slice over the interval") {
    const MorId f = c.to_terminal(i);
    const PiCandidate base = *ps->pi_type(c.identity(i), f);
    const PullbackData& bi = c.product(b, i);
    const PiOverFibration out = construct_pi_over_fibration(*ps, f, bi.proj2, base);
    CHECK(out.square_commutes);
    CHECK(ps->is_fibration(out.pi_p));
    CHECK(check_pi_type(*ps, out.out).strong);
  }
  SUBCASE("horizontal composition") {
    const PullbackData& bi = c.product(b, i);
    const PiCandidate inner = *ps->pi_type(bi.proj2, c.to_terminal(i));
    const PiCandidate same = compose_pi_horizontal(*ps, bi.proj2, c.to_terminal(i), id1);
    CHECK(check_pi_type(*ps, same).strong == check_pi_type(*ps, inner).strong);
  }
}

TEST_CASE("three-stage Pi tower") {
  auto ps = make_gpd_model(std::vector<std::string>{"bz2", "discrete2"});
  auto& c = ps->gpd();
  const ObjId b = ps->named("bz2"), d2 = ps->named("discrete2");
  const PullbackData& bd = c.product(b, d2);
  const MorId swap = with_objects(c, d2, d2, {1, 0});
  const PiCandidate three = compose_pi_horizontal(*ps, bd.proj2, swap, c.to_terminal(d2));
  CHECK(check_pi_type(*ps, three).strong);
}
