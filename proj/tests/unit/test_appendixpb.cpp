#include "doctest.h"

#include "pathcat/appendixpb.hpp"
#include "pathcat/models.hpp"

using namespace pathcat;

namespace {

MorId with_objects(GpdCategory& c, ObjId x, ObjId y, std::vector<int> obj) {
  for (MorId m : c.hom(x, y))
    if (c.maps(m).obj == obj) return m;
  FAIL("no such map");
  return {};
}

void check_comparison(const SliceComparison& sc) {
  CHECK(sc.whole_source);
  CHECK(sc.props.bijective_on_objects);
  CHECK(sc.props.full);
  CHECK(sc.props.esf());
  CHECK(sc.witnesses_ok);
  CHECK(sc.witnesses.size() == static_cast<std::size_t>(sc.J.tgt->arrows()));
}

void check_transpose(const TransposeIso& t) {
  CHECK(t.iso);
  CHECK(t.square.commutes);
  CHECK(t.coherence);
  CHECK(t.square.arrows_checked == static_cast<std::size_t>(t.forward.src->arrows()));
}

}  // namespace

TEST_CASE("fiberwise path object in the discrete model") {
  auto d = make_discrete_model({1, 2});
  auto& c = d->gpd();
  for (ObjId x : d->fragment())
    for (ObjId y : d->fragment())
      for (MorId f : c.hom(x, y)) {
        const FiberwisePathObject q = construct_fiberwise_path_object(*d, f);
        CHECK(q.verified);
        CHECK(c.groupoid(q.Q.P).objects() == c.groupoid(x).objects());
      }
}

TEST_CASE("fiberwise path object of bz2 over the point") {
  auto ps = make_gpd_model(std::vector<std::string>{"bz2"});
  auto& c = ps->gpd();
  const ObjId b = ps->named("bz2");
  const FiberwisePathObject q = construct_fiberwise_path_object(*ps, c.to_terminal(b));
  CHECK(q.verified);
  const PathObjectData pb = ps->absolute_path_object(b);
  CHECK(groupoid_iso_search(c.groupoid(q.Q.P), c.groupoid(pb.P)).has_value());
}

TEST_CASE("fiberwise path object of an endpoint fibration") {
  auto ps = make_gpd_model(std::vector<std::string>{"interval"});
  const ObjId i = ps->named("I");
  const PathObjectData pi = ps->absolute_path_object(i);
  REQUIRE(ps->is_fibration(pi.s));
  CHECK(construct_fiberwise_path_object(*ps, pi.s).verified);
}

TEST_CASE("fiberwise path objects over every corpus fibration") {
  for (auto seeds : {std::vector<std::string>{"interval"}, std::vector<std::string>{"bz2"}}) {
    auto ps = make_gpd_model(seeds);
    auto& c = ps->gpd();
    for (ObjId x : ps->fragment())
      for (ObjId y : ps->fragment())
        for (MorId f : c.hom(x, y))
          if (ps->is_fibration(f)) CHECK(construct_fiberwise_path_object(*ps, f).verified);
  }
}

TEST_CASE("fiberwise path object in a slice") {
  auto ps = make_gpd_model(std::vector<std::string>{"interval", "bz2"});
  auto& c = ps->gpd();
  const ObjId i = ps->named("I"), b = ps->named("bz2");
  const PullbackData& bi = c.product(b, i);
  SlicePathStructure si(*ps, i);
  const MorId f = si.morphism(si.object(bi.proj2), si.object(c.identity(i)), bi.proj2);
  CHECK(construct_fiberwise_path_object(si, f).verified);
}

TEST_CASE("slice comparison along an identity is an isomorphism") {
  auto ps = make_gpd_model(std::vector<std::string>{"interval", "bz2"});
  auto& c = ps->gpd();
  const ObjId i = ps->named("I"), b = ps->named("bz2");
  const PullbackData& bi = c.product(b, i);
  const SliceComparison sc =
      slice_comparison(*ps, c.identity(i), bi.proj2, with_objects(c, ps->terminal(), i, {0}));
  check_comparison(sc);
  CHECK(sc.props.faithful);
  CHECK(sc.J.src->arrows() == sc.J.tgt->arrows());
}

TEST_CASE("slice comparison over the point") {
  auto ps = make_gpd_model(std::vector<std::string>{"interval", "bz2"});
  auto& c = ps->gpd();
  const ObjId i = ps->named("I"), b = ps->named("bz2");
  const PullbackData& bi = c.product(b, i);
  const PathObjectData pi = ps->absolute_path_object(i);
  for (MorId h : c.hom(ps->terminal(), i)) {
    const SliceComparison sc = slice_comparison(*ps, c.to_terminal(i), bi.proj2, h);
    check_comparison(sc);
    // The fibre of bz2 x I over a point of I.
    CHECK(sc.J.tgt->objects() == 1);
    CHECK(sc.J.tgt->arrows() == 2);
    check_comparison(slice_comparison(*ps, c.to_terminal(i), pi.s, h));
  }
  check_comparison(slice_comparison(*ps, c.to_terminal(i), bi.proj2, c.identity(i)));
}

TEST_CASE("slice comparison over the interval") {
  auto ps = make_gpd_model(std::vector<std::string>{"interval", "bz2"});
  auto& c = ps->gpd();
  const ObjId i = ps->named("I"), b = ps->named("bz2");
  const PullbackData& bi = c.product(b, i);
  const PullbackData& bbi = c.product(b, bi.apex);
  // Y = bz2 x I over Z = I, X = bz2 x Y over Y.
  for (MorId h : c.hom(ps->terminal(), bi.apex))
    check_comparison(slice_comparison(*ps, bi.proj2, bbi.proj2, h));
}

TEST_CASE("transpose along an identity") {
  auto ps = make_gpd_model(std::vector<std::string>{"interval", "bz2"});
  auto& c = ps->gpd();
  const ObjId i = ps->named("I"), b = ps->named("bz2");
  const PullbackData& bi = c.product(b, i);
  TransposeInstance in{c.to_terminal(i), c.identity(i), bi.proj2, c.identity(i)};
  const TransposeIso t = transpose_hom_iso(*ps, in);
  check_transpose(t);
  CHECK(t.forward.src->arrows() == t.forward.tgt->arrows());
}

TEST_CASE("transpose along an endpoint") {
  auto ps = make_gpd_model(std::vector<std::string>{"interval", "bz2"});
  auto& c = ps->gpd();
  const ObjId one = ps->terminal(), i = ps->named("I"), b = ps->named("bz2");
  const PullbackData& bi = c.product(b, i);
  const MorId end0 = with_objects(c, one, i, {0});
  TransposeInstance in{c.to_terminal(i), end0, bi.proj2, c.identity(one)};
  const TransposeIso t = transpose_hom_iso(*ps, in);
  check_transpose(t);
  // C(1, bz2): one object with two arrows.
  CHECK(t.forward.src->objects() == 1);
  CHECK(t.forward.src->arrows() == 2);

  in.v = c.to_terminal(b);
  check_transpose(transpose_hom_iso(*ps, in));
}

TEST_CASE("transpose with the default path object") {
  auto ps = make_gpd_model(std::vector<std::string>{"interval", "bz2"});
  auto& c = ps->gpd();
  const ObjId one = ps->terminal(), i = ps->named("I"), b = ps->named("bz2");
  const PullbackData& bi = c.product(b, i);
  TransposeInstance in{c.to_terminal(i), with_objects(c, one, i, {1}), bi.proj2,
                       c.identity(one), true};
  check_transpose(transpose_hom_iso(*ps, in));
}
