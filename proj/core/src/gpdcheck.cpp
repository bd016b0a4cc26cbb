#include "pathcat/gpdcheck.hpp"

#include <algorithm>

namespace pathcat {

json FunctorProperties::to_json() const {
  return {{"ess_surjective", ess_surjective}, {"ess_injective", ess_injective},
          {"full", full},                     {"faithful", faithful},
          {"isofibration", isofibration},     {"equivalence", equivalence},
          {"bijective_on_objects", bijective_on_objects}};
}

bool is_isofibration(const FinGroupoid& a, const FinGroupoid& b, const FunctorMaps& f) {
  std::vector<char> hit(b.arrows());
  for (int x = 0; x < a.objects(); ++x) {
    const int fx = f.obj[x];
    for (int u = a.out_begin(x); u < a.out_end(x); ++u) hit[f.arr[u]] = 1;
    for (int v = b.out_begin(fx); v < b.out_end(fx); ++v)
      if (!hit[v]) return false;
    for (int u = a.out_begin(x); u < a.out_end(x); ++u) hit[f.arr[u]] = 0;
  }
  return true;
}

FunctorProperties functor_properties(const FinGroupoid& a, const FinGroupoid& b,
                                     const FunctorMaps& f, bool audit) {
  FunctorProperties p;
  std::vector<char> hit_comp(b.components());
  for (int x : f.obj) hit_comp[b.component(x)] = 1;
  p.ess_surjective = std::all_of(hit_comp.begin(), hit_comp.end(), [](char c) { return c; });

  std::vector<int> first_pre(b.components(), -1);
  p.ess_injective = true;
  for (int c = 0; c < a.components(); ++c) {
    const int bc = b.component(f.obj[a.root(c)]);
    if (first_pre[bc] >= 0) p.ess_injective = false;
    first_pre[bc] = c;
  }

  std::vector<char> hit(b.arrows());
  auto hom_image = [&](int x, int y, bool& surj, bool& inj) {
    const int fx = f.obj[x], fy = f.obj[y];
    surj = true;
    inj = true;
    for (int u = a.hom_begin(x, y); u < a.hom_end(x, y); ++u) {
      if (hit[f.arr[u]]) inj = false;
      hit[f.arr[u]] = 1;
    }
    for (int v = b.hom_begin(fx, fy); v < b.hom_end(fx, fy); ++v)
      if (!hit[v]) surj = false;
    for (int u = a.hom_begin(x, y); u < a.hom_end(x, y); ++u) hit[f.arr[u]] = 0;
  };

  if (audit) {
    p.full = true;
    p.faithful = true;
    for (int x = 0; x < a.objects(); ++x)
      for (int y = 0; y < a.objects(); ++y) {
        bool s = false, i = false;
        hom_image(x, y, s, i);
        p.full = p.full && s;
        p.faithful = p.faithful && i;
      }
  } else {
    p.full = p.ess_injective;
    p.faithful = true;
    for (int c = 0; c < a.components(); ++c) {
      bool s = false, i = false;
      hom_image(a.root(c), a.root(c), s, i);
      p.full = p.full && s;
      p.faithful = p.faithful && i;
    }
  }
  p.isofibration = is_isofibration(a, b, f);
  p.equivalence = p.ess_surjective && p.full && p.faithful;
  std::vector<int> obj_hits(b.objects());
  for (int x : f.obj) ++obj_hits[x];
  p.bijective_on_objects =
      std::all_of(obj_hits.begin(), obj_hits.end(), [](int k) { return k == 1; });
  return p;
}

FunctorProperties functor_properties(const GroupoidFunctor& f, bool audit) {
  return functor_properties(*f.src, *f.tgt, f.maps, audit);
}

bool is_equivalence(const FinGroupoid& a, const FinGroupoid& b, const FunctorMaps& f) {
  return functor_properties(a, b, f).equivalence;
}

SubGroupoid full_subgroupoid(const FinGroupoid& g, const std::vector<char>& keep) {
  SubGroupoid s;
  std::vector<int> local(g.objects(), -1);
  for (int x = 0; x < g.objects(); ++x)
    if (keep[x]) {
      local[x] = static_cast<int>(s.objects.size());
      s.objects.push_back(x);
    }
  FinGroupoid::Builder b(static_cast<int>(s.objects.size()));
  std::vector<int> local_arr(g.arrows(), -1);
  for (int x : s.objects)
    for (int y : s.objects)
      for (int u = g.hom_begin(x, y); u < g.hom_end(x, y); ++u) {
        local_arr[u] = b.add_arrow(local[x], local[y]);
        s.arrows.push_back(u);
        if (u == g.identity(x)) b.set_identity(local[x], local_arr[u]);
      }
  s.sub = std::move(b).build(
      [&](int h, int k) { return local_arr[g.compose(s.arrows[h], s.arrows[k])]; });
  return s;
}

namespace {

std::pair<SubGroupoid, std::vector<int>> strict_fiber_impl(const FinGroupoid& src,
                                                           const FinGroupoid& tgt,
                                                           const FunctorMaps& m, int alpha) {
  const int ida = tgt.identity(alpha);
  std::vector<int> local(src.objects(), -1), objs;
  for (int x = 0; x < src.objects(); ++x)
    if (m.obj[x] == alpha) {
      local[x] = static_cast<int>(objs.size());
      objs.push_back(x);
    }
  FinGroupoid::Builder b(static_cast<int>(objs.size()));
  std::vector<int> arrows, local_arr(src.arrows(), -1);
  for (int x : objs)
    for (int y : objs)
      for (int u = src.hom_begin(x, y); u < src.hom_end(x, y); ++u)
        if (m.arr[u] == ida) {
          local_arr[u] = b.add_arrow(local[x], local[y]);
          arrows.push_back(u);
          if (u == src.identity(x)) b.set_identity(local[x], local_arr[u]);
        }
  SubGroupoid s;
  s.sub = std::move(b).build(
      [&](int h, int k) { return local_arr[src.compose(arrows[h], arrows[k])]; });
  s.objects = std::move(objs);
  s.arrows = std::move(arrows);
  return {std::move(s), std::move(local_arr)};
}

}  // namespace

SubGroupoid strict_fiber(const GroupoidFunctor& g, int alpha) {
  return strict_fiber_impl(*g.src, *g.tgt, g.maps, alpha).first;
}

GroupoidFunctor fiber_over_point(const GroupoidFunctor& f, const GroupoidFunctor& g, int alpha) {
  const FunctorMaps gf = compose_maps(g.maps, f.maps);
  if (!is_isofibration(*f.src, *g.tgt, gf))
    throw Error(Errc::NotIsofibration, "composite is not an isofibration");
  return induced_on_fibers(f, g, alpha);
}

GroupoidFunctor induced_on_fibers(const GroupoidFunctor& f, const GroupoidFunctor& g, int alpha) {
  const FunctorMaps gf = compose_maps(g.maps, f.maps);
  auto strict_fiber = [&](const FinGroupoid& src, const FunctorMaps& m) {
    return strict_fiber_impl(src, *g.tgt, m, alpha);
  };
  auto [fa, fa_arr] = strict_fiber(*f.src, gf);
  auto [fb, fb_arr] = strict_fiber(*g.src, g.maps);
  std::vector<int> fb_obj(g.src->objects(), -1);
  for (int i = 0; i < static_cast<int>(fb.objects.size()); ++i) fb_obj[fb.objects[i]] = i;
  GroupoidFunctor out;
  for (int x : fa.objects) out.maps.obj.push_back(fb_obj[f.maps.obj[x]]);
  for (int u : fa.arrows) out.maps.arr.push_back(fb_arr[f.maps.arr[u]]);
  out.src = std::make_shared<const FinGroupoid>(std::move(fa.sub));
  out.tgt = std::make_shared<const FinGroupoid>(std::move(fb.sub));
  return out;
}

GroupoidFunctor pullback_of_functor(const GroupoidFunctor& f, const GroupoidFunctor& g) {
  if (!is_isofibration(*g.src, *g.tgt, g.maps))
    throw Error(Errc::NotIsofibration, "pullback of functors requires an isofibration");
  auto pb = groupoid_pullback(*f.src, *g.src, f.maps, g.maps);
  GroupoidFunctor out;
  out.maps = pb.proj2;
  out.src = std::make_shared<const FinGroupoid>(std::move(pb.apex));
  out.tgt = g.src;
  return out;
}

std::optional<std::vector<int>> natural_iso_search(const FinGroupoid& a, const FinGroupoid& b,
                                                   const FunctorMaps& f, const FunctorMaps& g) {
  auto all = natural_transformations(a, b, f, g);
  if (all.empty()) return std::nullopt;
  return expand_transformation(a, b, f, g, all.front());
}

}  // namespace pathcat
