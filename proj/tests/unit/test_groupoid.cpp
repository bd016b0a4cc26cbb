#include "doctest.h"

#include <set>

#include "pathcat/groupoid.hpp"

using namespace pathcat;

namespace {

// Brute-force oracle: every assignment of objects and arrows, kept when it
// satisfies the functor laws.
std::size_t count_functors_naive(const FinGroupoid& a, const FinGroupoid& b) {
  std::size_t count = 0;
  FunctorMaps f;
  f.obj.assign(a.objects(), 0);
  f.arr.assign(a.arrows(), 0);
  std::function<void(int)> arr_rec = [&](int u) {
    if (u == a.arrows()) {
      if (is_functor(a, b, f)) ++count;
      return;
    }
    for (int v = b.hom_begin(f.obj[a.dom(u)], f.obj[a.cod(u)]);
         v < b.hom_end(f.obj[a.dom(u)], f.obj[a.cod(u)]); ++v) {
      f.arr[u] = v;
      arr_rec(u + 1);
    }
  };
  std::function<void(int)> obj_rec = [&](int x) {
    if (x == a.objects()) {
      arr_rec(0);
      return;
    }
    for (int y = 0; y < b.objects(); ++y) {
      f.obj[x] = y;
      obj_rec(x + 1);
    }
  };
  obj_rec(0);
  return count;
}

std::vector<FinGroupoid> corpus() {
  return {builtin::terminal(), builtin::interval(), builtin::cyclic(2), builtin::cyclic(3),
          builtin::discrete(2), builtin::indiscrete(3),
          builtin::disjoint_union(builtin::cyclic(2), builtin::terminal())};
}

}  // namespace

TEST_CASE("builtin groupoids satisfy the groupoid laws") {
  for (const auto& g : corpus()) CHECK(g.validate().ok());
}

TEST_CASE("interval composition is forced") {
  auto i = builtin::interval();
  const int u = i.hom_begin(0, 1), v = i.hom_begin(1, 0);
  CHECK(i.hom_size(0, 1) == 1);
  CHECK(i.compose(v, u) == i.identity(0));
  CHECK(i.inverse(u) == v);
}

TEST_CASE("skeleton of a disjoint union") {
  auto g = builtin::disjoint_union(builtin::cyclic(2), builtin::interval());
  CHECK(g.components() == 2);
  CHECK(g.group_order(0) == 2);
  CHECK(g.generators(0).size() == 1);
  CHECK(g.group_order(1) == 1);
  CHECK(g.members(1) == std::vector<int>{1, 2});
}

TEST_CASE("functor enumeration matches the naive count") {
  auto cs = corpus();
  for (const auto& a : cs)
    for (const auto& b : cs) {
      if (a.arrows() > 6 || b.arrows() > 9) continue;
      auto fs = all_functors(a, b);
      CHECK(fs.size() == count_functors_naive(a, b));
      std::set<std::vector<int>> keys;
      std::vector<int> prev;
      for (const auto& f : fs) {
        CHECK(is_functor(a, b, f));
        auto k = functor_key(a, f);
        CHECK(keys.insert(k).second);
        if (!prev.empty()) CHECK(prev < k);
        prev = k;
      }
    }
}

TEST_CASE("constrained enumeration equals filtering") {
  auto i = builtin::interval();
  auto t = builtin::terminal();
  auto ii = groupoid_pullback(i, i, all_functors(i, t)[0], all_functors(i, t)[0]);
  CHECK(ii.apex.objects() == 4);
  CHECK(ii.apex.arrows() == 16);
  // lifts of the first projection along itself: only the identity.
  LiftConstraint lc{&ii.proj1, &ii.proj1};
  EnumOptions opt;
  opt.constraint = &lc;
  auto lifts = all_functors(ii.apex, ii.apex, opt);
  std::size_t filtered = 0;
  for (const auto& f : all_functors(ii.apex, ii.apex))
    if (compose_maps(ii.proj1, f) == ii.proj1) ++filtered;
  CHECK(lifts.size() == filtered);
  CHECK(filtered == 16);  // second coordinate free: Fun(I x I, I) restricted
}

TEST_CASE("budget overflow raises ResourceCap") {
  auto a = builtin::indiscrete(3);
  auto b = builtin::indiscrete(3);
  EnumOptions opt;
  opt.budget = 5;
  CHECK_THROWS_AS(all_functors(a, b, opt), Error);
}

TEST_CASE("path groupoid of bz2 over the point") {
  auto g = builtin::cyclic(2);
  auto t = builtin::terminal();
  auto p = all_functors(g, t)[0];
  auto pg = vertical_path_groupoid(g, p);
  CHECK(pg.path.objects() == 2);
  CHECK(pg.path.arrows() == 8);
  CHECK(pg.path.validate().ok());
  CHECK(is_functor(g, pg.path, pg.r));
  CHECK(is_functor(pg.path, g, pg.s));
  CHECK(is_functor(pg.path, g, pg.t));
  CHECK(compose_maps(pg.s, pg.r) == identity_maps(g));
  CHECK(compose_maps(pg.t, pg.r) == identity_maps(g));
}

TEST_CASE("functor groupoid sizes") {
  auto fg = functor_groupoid(builtin::interval(), builtin::interval());
  CHECK(fg.fun.objects() == 4);
  CHECK(fg.fun.arrows() == 16);
  auto fb = functor_groupoid(builtin::terminal(), builtin::cyclic(2));
  CHECK(fb.fun.objects() == 1);
  CHECK(fb.fun.arrows() == 2);
  auto fz = functor_groupoid(builtin::cyclic(2), builtin::cyclic(2));
  CHECK(fz.fun.objects() == 2);
  CHECK(fz.fun.arrows() == 4);  // abelian: each hom is a full loop group
  CHECK(fz.fun.validate().ok());
}

TEST_CASE("iso search") {
  CHECK(groupoid_iso_search(builtin::interval(), builtin::indiscrete(2)).has_value());
  CHECK_FALSE(groupoid_iso_search(builtin::cyclic(2), builtin::indiscrete(2)).has_value());
  auto fg = functor_groupoid(builtin::interval(), builtin::interval());
  CHECK(groupoid_iso_search(fg.fun, builtin::indiscrete(4)).has_value());
}

TEST_CASE("pi over the point is the functor groupoid") {
  auto x = builtin::cyclic(2);
  auto i = builtin::interval();
  auto t = builtin::terminal();
  // X x I -> I, sections over I|* (which is I) are functors I -> X
  auto px = all_functors(x, t)[0];
  auto pi_ = all_functors(i, t)[0];
  auto prod = groupoid_pullback(x, i, px, pi_);
  auto pg = pi_groupoid(prod.apex, i, t, prod.proj2, pi_);
  CHECK(pg.pi.validate().ok());
  auto fg = functor_groupoid(i, x);
  CHECK(groupoid_iso_search(pg.pi, fg.fun).has_value());
}
