#include "doctest.h"

#include "pathcat/enrichment.hpp"
#include "pathcat/models.hpp"

using namespace pathcat;

namespace {

std::shared_ptr<GpdPathStructure> model() {
  return make_gpd_model(std::vector<std::string>{"bz2", "interval"});
}

// Oracle: in the groupoid model C(X, Y) is the functor groupoid.
bool matches_functor_groupoid(GpdPathStructure& ps, Enrichment& e, ObjId x, ObjId y) {
  auto& c = ps.gpd();
  const HomGroupoid& h = e.hom(x, y);
  FunctorGroupoid fg = functor_groupoid(c.groupoid(x), c.groupoid(y));
  return h.laws.ok() && groupoid_iso_search(*h.groupoid, fg.fun).has_value();
}

MorId map_with_objects(GpdCategory& c, ObjId x, ObjId y, std::vector<int> obj) {
  for (MorId m : c.hom(x, y))
    if (c.maps(m).obj == obj) return m;
  FAIL("no such map");
  return {};
}

}  // namespace

TEST_CASE("hom-groupoids agree with functor groupoids") {
  auto ps = model();
  Enrichment e(*ps);
  const ObjId one = ps->terminal(), b = ps->named("bz2"), i = ps->named("I");
  const HomGroupoid& h = e.hom(one, b);
  CHECK(h.groupoid->objects() == 1);
  CHECK(h.groupoid->arrows() == 2);
  CHECK(e.hom(i, i).groupoid->arrows() == 16);
  CHECK(matches_functor_groupoid(*ps, e, one, b));
  CHECK(matches_functor_groupoid(*ps, e, i, i));
  CHECK(matches_functor_groupoid(*ps, e, b, b));
  CHECK(matches_functor_groupoid(*ps, e, i, b));
  CHECK(matches_functor_groupoid(*ps, e, b, i));
}

TEST_CASE("discrete model has discrete hom-groupoids") {
  auto d = make_discrete_model({1, 2});
  Enrichment e(*d);
  for (ObjId x : d->fragment())
    for (ObjId y : d->fragment()) {
      const HomGroupoid& h = e.hom(x, y);
      CHECK(h.laws.ok());
      CHECK(h.groupoid->arrows() == h.groupoid->objects());
      CHECK(h.objects.size() == d->cat().hom(x, y).size());
    }
}

TEST_CASE("2-categorical laws") {
  auto ps = model();
  Enrichment e(*ps);
  const ObjId one = ps->terminal(), b = ps->named("bz2"), i = ps->named("I");
  ValidationReport rep;
  CHECK(check_groupoid_laws(e, i, b, rep) == 8);
  CHECK(check_interchange(e, one, b, b, rep) > 0);
  CHECK(check_interchange(e, one, i, b, rep) > 0);
  CHECK(check_horizontal_formulas(e, i, b, b, rep) > 0);
  CHECK(check_horizontal_associativity(e, one, b, i, b, rep) > 0);
  CHECK(check_whisker_exchange(e, one, b, b, i, rep) > 0);
  CHECK(check_whisker_functoriality(e, one, b, i, rep) > 0);
  CHECK_MESSAGE(rep.ok(), rep.to_json().dump());
}

TEST_CASE("hom-groupoids do not depend on the path object") {
  auto ps = model();
  Enrichment e(*ps);
  const ObjId one = ps->terminal(), b = ps->named("bz2"), i = ps->named("I");
  ValidationReport rep;
  CHECK(check_path_object_independence(e, one, b, rep) > 0);
  CHECK(check_path_object_independence(e, i, i, rep) > 0);
  CHECK_MESSAGE(rep.ok(), rep.to_json().dump());
}

TEST_CASE("product functor extends to hom-groupoids") {
  auto ps = model();
  auto& c = ps->gpd();
  Enrichment e(*ps);
  const ObjId one = ps->terminal(), b = ps->named("bz2"), i = ps->named("I");
  ProductFunctor F(c, i);
  FunctorExtension ext(e, e, F);
  ValidationReport laws;
  GroupoidFunctor G = ext.on_hom(one, b, &laws);
  CHECK(laws.ok());
  CHECK(G.tgt->arrows() == e.hom(F.obj(one), F.obj(b)).groupoid->arrows());
  // - x I is faithful on the loops of bz2
  CHECK(G.maps.arr[0] != G.maps.arr[1]);
  GroupoidFunctor H = extend_homotopical_functor(ext, b, b);
  CHECK(functor_properties(H).faithful);
}

TEST_CASE("strict transformation from natural components") {
  auto ps = model();
  auto& c = ps->gpd();
  Enrichment e(*ps);
  const ObjId one = ps->terminal(), b = ps->named("bz2"), i = ps->named("I");
  ProductFunctor F(c, i);
  FunctorExtension ext(e, e, F);
  const MorId swap = map_with_objects(c, i, i, {1, 0});
  std::map<ObjId, MorId> alpha;
  for (ObjId y : {one, b}) alpha[y] = c.product_map(c.identity(y), swap);
  auto cert = induced_strict_transformation(ext, ext, alpha, one, b);
  CHECK(cert.commutes);
  CHECK(cert.arrows_checked == 2);

  const MorId c0 = map_with_objects(c, i, i, {0, 0});
  const MorId c1 = map_with_objects(c, i, i, {1, 1});
  alpha[one] = c.product_map(c.identity(one), c0);
  alpha[b] = c.product_map(c.identity(b), c1);
  CHECK_THROWS_AS(induced_strict_transformation(ext, ext, alpha, one, b), Error);
}

namespace {

// Same structure without the provider filler shortcut.
class Exhaustive : public PathStructure {
 public:
  explicit Exhaustive(PathStructure& b) : b_(b) {}
  FinCategory& cat() override { return b_.cat(); }
  std::string name() const override { return "exhaustive"; }
  bool is_fibration(MorId m) override { return b_.is_fibration(m); }
  bool is_weak_equivalence(MorId m) override { return b_.is_weak_equivalence(m); }
  PathObjectData path_object(MorId m) override { return b_.path_object(m); }
  std::vector<ObjId> fragment() override { return b_.fragment(); }

 private:
  PathStructure& b_;
};

}  // namespace

TEST_CASE("component filler search agrees with exhaustive search") {
  auto ps = model();
  auto& c = ps->gpd();
  Exhaustive slow(*ps);
  Enrichment fast(*ps), ref(slow);
  for (ObjId y : ps->fragment()) {
    CHECK(fast.egroupoid(y).tau == ref.egroupoid(y).tau);
    CHECK(fast.egroupoid(y).sigma == ref.egroupoid(y).sigma);
  }
  for (ObjId y : ps->fragment())
    for (ObjId z : ps->fragment())
      for (MorId f : c.hom(y, z)) CHECK(fast.whisker_filler(f) == ref.whisker_filler(f));
}

TEST_CASE("whiskering lemmas") {
  for (auto seeds : {std::vector<std::string>{"interval"}, std::vector<std::string>{"bz2"}}) {
    auto ps = make_gpd_model(seeds);
    Enrichment e(*ps);
    ValidationReport rep;
    std::size_t n = 0;
    for (ObjId x : ps->fragment())
      for (ObjId y : ps->fragment())
        for (ObjId z : ps->fragment()) n += check_whisker_lemmas(e, x, y, z, rep);
    CHECK(rep.ok());
    CHECK(n > 0);
  }
}
