#include "doctest.h"

#include "pathcat/models.hpp"

using namespace pathcat;

namespace {

MorId picker(GpdPathStructure& ps, ObjId target, int object) {
  auto& c = ps.gpd();
  for (MorId m : c.hom(c.terminal(), target))
    if (c.maps(m).obj[0] == object) return m;
  FAIL("no picker");
  return {};
}

}  // namespace

TEST_CASE("discrete and groupoid models satisfy the axioms") {
  auto d = make_discrete_model({1, 2});
  CHECK(validate_path_axioms(*d).ok());
  auto gi = make_gpd_model(std::vector<std::string>{"interval"});
  auto rep = validate_path_axioms(*gi);
  CHECK_MESSAGE(rep.ok(), rep.to_json().dump());
  auto gb = make_gpd_model(std::vector<std::string>{"bz2"});
  rep = validate_path_axioms(*gb);
  CHECK_MESSAGE(rep.ok(), rep.to_json().dump());
}

TEST_CASE("homotopy counts") {
  auto gb = make_gpd_model(std::vector<std::string>{"bz2"});
  auto& c = gb->gpd();
  const ObjId b = gb->named("bz2");
  const MorId f = c.hom(c.terminal(), b).front();
  CHECK(enumerate_homotopies(*gb, c.to_terminal(b), f, f).size() == 2);

  const ObjId i = gb->named("I");
  const MorId p0 = picker(*gb, i, 0), p1 = picker(*gb, i, 1);
  CHECK(enumerate_homotopies(*gb, c.to_terminal(i), p0, p1).size() == 1);

  auto d = make_discrete_model({2});
  auto& dc = d->gpd();
  const ObjId two = d->fragment()[1];
  const MorId e = dc.hom(dc.terminal(), two).front();
  auto hs = enumerate_homotopies(*d, dc.to_terminal(two), e, e);
  REQUIRE(hs.size() == 1);
  CHECK(hs[0].map == e);
}

TEST_CASE("path objects pass is_path_object and tamper is detected") {
  auto gb = make_gpd_model(std::vector<std::string>{"bz2"});
  auto& c = gb->gpd();
  const ObjId b = gb->named("bz2");
  auto po = gb->absolute_path_object(b);
  CHECK(is_path_object(*gb, po));
  auto bad = po;
  // r := the constant functor onto the path-object's first object is not an equivalence
  // with s r = id, so swap r for s-section that fails typing.
  bad.r = c.compose(po.r, c.compose(c.hom(c.terminal(), b).front(), c.to_terminal(b)));
  CHECK_FALSE(is_path_object(*gb, bad));
}

TEST_CASE("homotopy category sizes") {
  auto g = make_gpd_model(std::vector<std::string>{"bz2"});
  auto ho = homotopy_category(*g);
  auto& hc = *ho.cat;
  auto pos = [&](ObjId x) {
    for (std::uint32_t k = 0; k < ho.objects.size(); ++k)
      if (ho.objects[k] == x) return obj_id(k);
    FAIL("missing");
    return obj_id(0);
  };
  const ObjId one = pos(g->terminal()), i = pos(g->named("I")), b = pos(g->named("bz2"));
  CHECK(hc.hom(one, i).size() == 1);
  CHECK(hc.hom(b, b).size() == 2);
  CHECK(validate_category(hc).ok());
}

TEST_CASE("homotopy equivalences") {
  auto g = make_gpd_model(std::vector<std::string>{"bz2"});
  auto& c = g->gpd();
  const ObjId i = g->named("I");
  CHECK(is_homotopy_equivalence(*g, c.to_terminal(i)));
  CHECK(is_homotopy_equivalence(*g, c.identity(i)));
  const ObjId two = c.intern(builtin::disjoint_union(builtin::cyclic(2), builtin::terminal()));
  const MorId inc = c.hom(c.terminal(), two).back();
  CHECK_FALSE(is_homotopy_equivalence(*g, inc));
  // marked weak equivalences coincide with homotopy equivalences on the fragment
  for (ObjId x : g->fragment())
    for (ObjId y : g->fragment())
      for (MorId m : c.hom(x, y)) CHECK(g->is_weak_equivalence(m) == is_homotopy_equivalence(*g, m));
}

TEST_CASE("filler search") {
  auto g = make_gpd_model(std::vector<std::string>{"bz2"});
  auto& c = g->gpd();
  const ObjId i = g->named("I"), b = g->named("bz2");
  // w = id: filler is h itself
  for (MorId h : c.hom(i, b)) {
    LiftingSquare sq{c.identity(i), c.to_terminal(b), h, c.to_terminal(i)};
    auto res = find_filler(*g, sq, true);
    CHECK(res.pairwise_homotopic);
    CHECK(res.filler == h);
    CHECK(res.all.size() == 2);
  }
  // acyclic fibration I -> 1 with k = id_1: a section
  LiftingSquare sq{c.identity(c.terminal()), c.to_terminal(i), c.hom(c.terminal(), i).front(),
                   c.identity(c.terminal())};
  auto res = find_filler(*g, sq, true);
  CHECK(res.all.size() == 2);
  CHECK(res.pairwise_homotopic);
}

TEST_CASE("slice path structure") {
  auto g = make_gpd_model(std::vector<std::string>{"bz2"});
  const ObjId b = g->named("bz2");
  auto s = slice_category(*g, b, true);
  auto rep = validate_path_axioms(*s);
  CHECK_MESSAGE(rep.ok(), rep.to_json().dump());
  // slice path object of id is b itself with identity structure
  auto& c = g->gpd();
  auto po = s->path_object(s->cat().to_terminal(s->object(c.identity(b))));
  CHECK(s->slice().base_object(po.P) == b);
}

TEST_CASE("model round trip") {
  auto d = make_discrete_model({1});
  json doc = save_model(*d);
  auto t = load_model(doc);
  CHECK(save_model(*t) == doc);
  CHECK(validate_path_axioms(*t).ok());
  json broken = doc;
  broken["comp"] = json::array();
  CHECK_THROWS_AS(load_model(broken), Error);
  json dense = doc;
  dense["objects"] = json::array({1});
  CHECK_THROWS_AS(load_model(dense), Error);
}
