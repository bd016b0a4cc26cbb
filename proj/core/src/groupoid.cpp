#include "pathcat/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace pathcat {

namespace {

void hash_mix(std::size_t& h, std::size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
}

void hash_vec(std::size_t& h, const std::vector<int>& v) {
  hash_mix(h, v.size());
  for (int x : v) hash_mix(h, static_cast<std::size_t>(x));
}

}  // namespace

namespace {
constexpr std::int64_t kMaxCompositionEntries = 1 << 26;
}  // namespace

FinGroupoid::Builder::Builder(int objects) : n_(objects), id_(objects, -1) {}

int FinGroupoid::Builder::add_arrow(int dom, int cod) {
  if (dom < 0 || dom >= n_ || cod < 0 || cod >= n_)
    throw Error(Errc::SchemaError, "arrow endpoint out of range");
  if (!dom_.empty() && std::pair(dom, cod) < std::pair(dom_.back(), cod_.back()))
    throw Error(Errc::SchemaError, "arrows must be added in (dom, cod) order");
  dom_.push_back(dom);
  cod_.push_back(cod);
  return static_cast<int>(dom_.size()) - 1;
}

void FinGroupoid::Builder::set_identity(int x, int arrow) { id_.at(x) = arrow; }

FinGroupoid FinGroupoid::Builder::build(const std::function<int(int, int)>& compose) && {
  FinGroupoid g;
  g.n_ = n_;
  g.dom_ = std::move(dom_);
  g.cod_ = std::move(cod_);
  g.id_ = std::move(id_);
  const int n = n_;
  const int m = g.arrows();
  for (int x = 0; x < n; ++x)
    if (g.id_[x] < 0 || g.dom_[g.id_[x]] != x || g.cod_[g.id_[x]] != x)
      throw Error(Errc::SchemaError, "missing or mistyped identity", x);
  g.hom_off_.assign(static_cast<std::size_t>(n) * n + 1, 0);
  for (int a = 0; a < m; ++a) ++g.hom_off_[g.dom_[a] * n + g.cod_[a] + 1];
  for (std::size_t k = 1; k < g.hom_off_.size(); ++k) g.hom_off_[k] += g.hom_off_[k - 1];
  g.comp_off_.resize(m + 1);
  std::int64_t run = 0;
  for (int f = 0; f < m; ++f) {
    g.comp_off_[f] = static_cast<int>(run);
    run += g.out_end(g.cod_[f]) - g.out_begin(g.cod_[f]);
    if (run > kMaxCompositionEntries)
      throw Error(Errc::ResourceCap, "groupoid composition table too large",
                  {{"objects", n}, {"arrows", m}});
  }
  g.comp_off_[m] = static_cast<int>(run);
  g.comp_.resize(run);
  for (int f = 0; f < m; ++f) {
    const int y = g.cod_[f];
    for (int h = g.out_begin(y); h < g.out_end(y); ++h) {
      const int gf = compose(h, f);
      if (gf < 0 || gf >= m) throw Error(Errc::SchemaError, "composite out of range");
      g.comp_[g.comp_off_[f] + h - g.out_begin(y)] = gf;
    }
  }
  g.inv_.assign(m, -1);
  for (int a = 0; a < m; ++a) {
    const int x = g.dom_[a], y = g.cod_[a];
    for (int b = g.hom_begin(y, x); b < g.hom_end(y, x); ++b)
      if (g.compose(b, a) == g.id_[x] && g.compose(a, b) == g.id_[y]) {
        g.inv_[a] = b;
        break;
      }
    if (g.inv_[a] < 0) throw Error(Errc::SchemaError, "arrow has no inverse", a);
  }
  g.finish();
  return g;
}

int FinGroupoid::compose(int g, int f) const {
  if (cod_[f] != dom_[g])
    throw Error(Errc::NotComposable, "groupoid arrows not composable", json::array({g, f}));
  return comp_[comp_off_[f] + g - out_begin(cod_[f])];
}

int FinGroupoid::group_mult(int c, int i, int j) const {
  return mult_[c][i * group_order(c) + j];
}

void FinGroupoid::finish() {
  const int n = n_;
  comp_of_.assign(n, -1);
  tree_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (comp_of_[x] >= 0) continue;
    const int c = static_cast<int>(roots_.size());
    roots_.push_back(x);
    members_.emplace_back();
    for (int y = 0; y < n; ++y)
      if (hom_size(x, y) > 0) {
        comp_of_[y] = c;
        members_[c].push_back(y);
        tree_[y] = y == x ? id_[x] : hom_begin(x, y);
      }
  }
  loop_pos_.resize(arrows());
  for (int a = 0; a < arrows(); ++a) {
    const int c = comp_of_[dom_[a]];
    const int r = roots_[c];
    const int l = compose(inv_[tree_[cod_[a]]], compose(a, tree_[dom_[a]]));
    loop_pos_[a] = l - hom_begin(r, r);
  }
  const int nc = components();
  mult_.resize(nc);
  gens_.resize(nc);
  cayley_.resize(nc);
  for (int c = 0; c < nc; ++c) {
    const int r = roots_[c];
    const int m = group_order(c);
    auto& mt = mult_[c];
    mt.resize(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) mt[i * m + j] = compose(loop(c, i), loop(c, j)) - hom_begin(r, r);
    const int idpos = id_[r] - hom_begin(r, r);
    std::vector<char> in(m, 0);
    auto close = [&] {
      std::fill(in.begin(), in.end(), 0);
      std::vector<int> queue{idpos};
      in[idpos] = 1;
      for (std::size_t q = 0; q < queue.size(); ++q)
        for (int gpos : gens_[c]) {
          const int y = mt[gpos * m + queue[q]];
          if (!in[y]) {
            in[y] = 1;
            queue.push_back(y);
          }
        }
    };
    close();
    for (int p = 0; p < m; ++p)
      if (!in[p]) {
        gens_[c].push_back(p);
        close();
      }
    std::vector<char> seen(m, 0);
    cayley_[c].push_back({idpos, -1, -1});
    seen[idpos] = 1;
    for (std::size_t q = 0; q < cayley_[c].size(); ++q) {
      const int x = cayley_[c][q].elem;
      for (int gi = 0; gi < static_cast<int>(gens_[c].size()); ++gi) {
        const int y = mt[gens_[c][gi] * m + x];
        if (!seen[y]) {
          seen[y] = 1;
          cayley_[c].push_back({y, gi, x});
        }
      }
    }
  }
  std::size_t h = static_cast<std::size_t>(n);
  hash_vec(h, dom_);
  hash_vec(h, cod_);
  hash_vec(h, id_);
  hash_vec(h, comp_);
  hash_ = h;
}

bool FinGroupoid::operator==(const FinGroupoid& o) const {
  return hash_ == o.hash_ && n_ == o.n_ && dom_ == o.dom_ && cod_ == o.cod_ && id_ == o.id_ &&
         comp_ == o.comp_;
}

ValidationReport FinGroupoid::validate() const {
  ValidationReport rep;
  for (int f = 0; f < arrows(); ++f) {
    if (compose(id_[cod_[f]], f) != f || compose(f, id_[dom_[f]]) != f)
      rep.add("identity_law", {{"arrow", f}});
    if (compose(inv_[f], f) != id_[dom_[f]]) rep.add("inverse_law", {{"arrow", f}});
    for (int g = out_begin(cod_[f]); g < out_end(cod_[f]); ++g) {
      const int gf = compose(g, f);
      if (dom_[gf] != dom_[f] || cod_[gf] != cod_[g]) {
        rep.add("composite_type", json::array({g, f}));
        continue;
      }
      for (int h = out_begin(cod_[g]); h < out_end(cod_[g]); ++h)
        if (compose(h, gf) != compose(compose(h, g), f))
          rep.add("associativity", json::array({h, g, f}));
    }
  }
  return rep;
}

json FinGroupoid::to_json() const {
  json arrows_j = json::array();
  for (int a = 0; a < arrows(); ++a) arrows_j.push_back({dom_[a], cod_[a]});
  return {{"objects", n_}, {"arrows", arrows_j}};
}

FunctorMaps identity_maps(const FinGroupoid& g) {
  FunctorMaps m;
  m.obj.resize(g.objects());
  m.arr.resize(g.arrows());
  std::iota(m.obj.begin(), m.obj.end(), 0);
  std::iota(m.arr.begin(), m.arr.end(), 0);
  return m;
}

FunctorMaps compose_maps(const FunctorMaps& g, const FunctorMaps& f) {
  FunctorMaps out;
  out.obj.reserve(f.obj.size());
  out.arr.reserve(f.arr.size());
  for (int x : f.obj) out.obj.push_back(g.obj[x]);
  for (int a : f.arr) out.arr.push_back(g.arr[a]);
  return out;
}

bool is_functor(const FinGroupoid& a, const FinGroupoid& b, const FunctorMaps& f) {
  if (static_cast<int>(f.obj.size()) != a.objects() || static_cast<int>(f.arr.size()) != a.arrows())
    return false;
  for (int x : f.obj)
    if (x < 0 || x >= b.objects()) return false;
  for (int m : f.arr)
    if (m < 0 || m >= b.arrows()) return false;
  for (int x = 0; x < a.objects(); ++x)
    if (f.arr[a.identity(x)] != b.identity(f.obj[x])) return false;
  for (int u = 0; u < a.arrows(); ++u) {
    if (b.dom(f.arr[u]) != f.obj[a.dom(u)] || b.cod(f.arr[u]) != f.obj[a.cod(u)]) return false;
    for (int v = a.out_begin(a.cod(u)); v < a.out_end(a.cod(u)); ++v)
      if (f.arr[a.compose(v, u)] != b.compose(f.arr[v], f.arr[u])) return false;
  }
  return true;
}

std::vector<int> functor_key(const FinGroupoid& a, const FunctorMaps& f) {
  std::vector<int> key;
  for (int c = 0; c < a.components(); ++c) {
    key.push_back(f.obj[a.root(c)]);
    for (int x : a.members(c))
      if (x != a.root(c)) key.push_back(f.arr[a.tree(x)]);
    for (int gpos : a.generators(c)) key.push_back(f.arr[a.loop(c, gpos)]);
  }
  return key;
}

namespace {

struct Assignment {
  std::vector<int> tree;  // per member index
  std::vector<int> phi;   // per vertex-group position
};

class Enumerator {
 public:
  Enumerator(const FinGroupoid& a, const FinGroupoid& e, const EnumOptions& opt)
      : a_(a), e_(e), opt_(opt), member_index_(a.objects()) {
    for (int c = 0; c < a.components(); ++c)
      for (int i = 0; i < static_cast<int>(a.members(c).size()); ++i)
        member_index_[a.members(c)[i]] = i;
  }

  std::size_t run(const std::function<bool(const FunctorMaps&)>& visit) {
    const int nc = a_.components();
    lists_.resize(nc);
    for (int c = 0; c < nc; ++c) {
      component_assignments(c);
      if (lists_[c].empty()) return 0;
    }
    FunctorMaps f;
    f.obj.assign(a_.objects(), -1);
    f.arr.assign(a_.arrows(), -1);
    used_.assign(e_.objects(), 0);
    std::size_t visited = 0;
    product(0, f, visit, visited);
    return visited;
  }

  std::optional<FunctorMaps> first_in_component(
      int c, const std::function<bool(int, int)>& obj_filter,
      const std::function<bool(const FunctorMaps&)>& accept) {
    std::optional<FunctorMaps> found;
    const auto& mem = a_.members(c);
    visit_component(c, obj_filter, [&](const Assignment& as) {
      FunctorMaps f;
      f.obj.assign(a_.objects(), -1);
      f.arr.assign(a_.arrows(), -1);
      for (int i = 0; i < static_cast<int>(mem.size()); ++i) f.obj[mem[i]] = e_.cod(as.tree[i]);
      for (int x : mem)
        for (int u = a_.out_begin(x); u < a_.out_end(x); ++u) {
          const int tx = as.tree[member_index_[x]];
          const int ty = as.tree[member_index_[a_.cod(u)]];
          f.arr[u] = e_.compose(ty, e_.compose(as.phi[a_.loop_pos(u)], e_.inverse(tx)));
        }
      if (!accept(f)) return true;
      found = std::move(f);
      return false;
    });
    return found;
  }

 private:
  const FinGroupoid& a_;
  const FinGroupoid& e_;
  const EnumOptions& opt_;
  std::vector<int> member_index_;
  std::vector<std::vector<Assignment>> lists_;
  std::vector<int> used_;
  std::size_t spent_ = 0;
  bool stop_ = false;

  void charge() {
    if (++spent_ > opt_.budget)
      throw Error(Errc::ResourceCap, "functor enumeration exceeded the candidate budget",
                  {{"budget", opt_.budget}});
  }

  bool obj_ok(int x, int ex) const {
    return !opt_.constraint || (*opt_.constraint->p).obj[ex] == (*opt_.constraint->k).obj[x];
  }
  bool arr_ok(int a, int ea) const {
    return !opt_.constraint || (*opt_.constraint->p).arr[ea] == (*opt_.constraint->k).arr[a];
  }

  void component_assignments(int c) {
    visit_component(c, {}, [&](const Assignment& as) {
      lists_[c].push_back(as);
      return true;
    });
  }

  // Depth-first over the assignments of component c in canonical order.
  // `obj_filter` prunes object images (member object, image); `sink` returns
  // false to stop. Returns false when stopped.
  bool visit_component(int c, const std::function<bool(int, int)>& obj_filter,
                       const std::function<bool(const Assignment&)>& sink) {
    const auto& mem = a_.members(c);
    const int k = static_cast<int>(mem.size());
    const int m = a_.group_order(c);
    const auto& gens = a_.generators(c);
    const auto& cay = a_.cayley(c);
    Assignment cur;
    cur.tree.assign(k, -1);
    std::vector<int> gimg(gens.size(), -1);
    std::vector<int> local_used(e_.objects(), 0);
    bool stop = false;
    for (int e0 = 0; e0 < e_.objects() && !stop; ++e0) {
      if (!obj_ok(mem[0], e0)) continue;
      if (obj_filter && !obj_filter(mem[0], e0)) continue;
      cur.tree[0] = e_.identity(e0);
      local_used[e0] = 1;
      std::function<void(int)> gen_rec;
      gen_rec = [&](int gi) {
        if (gi == static_cast<int>(gens.size())) {
          charge();
          cur.phi.assign(m, -1);
          cur.phi[cay[0].elem] = e_.identity(e0);
          for (std::size_t s = 1; s < cay.size(); ++s)
            cur.phi[cay[s].elem] = e_.compose(gimg[cay[s].gen], cur.phi[cay[s].prev]);
          for (int x = 0; x < m; ++x)
            for (int g = 0; g < static_cast<int>(gens.size()); ++g)
              if (cur.phi[a_.group_mult(c, gens[g], x)] != e_.compose(gimg[g], cur.phi[x])) return;
          if (!sink(cur)) stop = true;
          return;
        }
        const int la = a_.loop(c, gens[gi]);
        for (int l = e_.hom_begin(e0, e0); l < e_.hom_end(e0, e0) && !stop; ++l) {
          if (!arr_ok(la, l)) continue;
          gimg[gi] = l;
          gen_rec(gi + 1);
        }
      };
      std::function<void(int)> tree_rec;
      tree_rec = [&](int i) {
        if (i == k) {
          gen_rec(0);
          return;
        }
        const int ta = a_.tree(mem[i]);
        for (int b = e_.out_begin(e0); b < e_.out_end(e0) && !stop; ++b) {
          if (!arr_ok(ta, b)) continue;
          const int y = e_.cod(b);
          if (opt_.injective_objects && local_used[y]) continue;
          if (obj_filter && !obj_filter(mem[i], y)) continue;
          local_used[y] = 1;
          cur.tree[i] = b;
          tree_rec(i + 1);
          local_used[y] = 0;
        }
      };
      tree_rec(1);
      local_used[e0] = 0;
    }
    return !stop;
  }

  void product(int c, FunctorMaps& f, const std::function<bool(const FunctorMaps&)>& visit,
               std::size_t& visited) {
    if (stop_) return;
    if (c == a_.components()) {
      charge();
      ++visited;
      if (!visit(f)) stop_ = true;
      return;
    }
    const auto& mem = a_.members(c);
    for (const Assignment& as : lists_[c]) {
      bool clash = false;
      if (opt_.injective_objects)
        for (int i = 0; i < static_cast<int>(mem.size()); ++i)
          if (used_[e_.cod(as.tree[i])]) clash = true;
      if (clash) continue;
      for (int i = 0; i < static_cast<int>(mem.size()); ++i) {
        f.obj[mem[i]] = e_.cod(as.tree[i]);
        if (opt_.injective_objects) used_[f.obj[mem[i]]] = 1;
      }
      for (int x : mem)
        for (int u = a_.out_begin(x); u < a_.out_end(x); ++u) {
          const int tx = as.tree[member_index_[x]];
          const int ty = as.tree[member_index_[a_.cod(u)]];
          f.arr[u] = e_.compose(ty, e_.compose(as.phi[a_.loop_pos(u)], e_.inverse(tx)));
        }
      product(c + 1, f, visit, visited);
      if (opt_.injective_objects)
        for (int x : mem) used_[f.obj[x]] = 0;
      if (stop_) return;
    }
  }
};

}  // namespace

std::size_t enumerate_functors(const FinGroupoid& a, const FinGroupoid& e, const EnumOptions& opt,
                               const std::function<bool(const FunctorMaps&)>& visit) {
  Enumerator en(a, e, opt);
  return en.run(visit);
}

std::optional<FunctorMaps> first_component_functor(
    const FinGroupoid& a, const FinGroupoid& e, int c, const EnumOptions& opt,
    const std::function<bool(int, int)>& obj_filter,
    const std::function<bool(const FunctorMaps&)>& accept) {
  Enumerator en(a, e, opt);
  return en.first_in_component(c, obj_filter, accept);
}

std::vector<FunctorMaps> all_functors(const FinGroupoid& a, const FinGroupoid& e,
                                      const EnumOptions& opt) {
  std::vector<FunctorMaps> out;
  enumerate_functors(a, e, opt, [&](const FunctorMaps& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::vector<std::vector<int>> natural_transformations(const FinGroupoid& a, const FinGroupoid& b,
                                                      const FunctorMaps& f, const FunctorMaps& g,
                                                      const std::function<bool(int)>& root_ok) {
  std::vector<std::vector<int>> per_comp(a.components());
  for (int c = 0; c < a.components(); ++c) {
    const int r = a.root(c);
    const int fr = f.obj[r], gr = g.obj[r];
    for (int th = b.hom_begin(fr, gr); th < b.hom_end(fr, gr); ++th) {
      if (root_ok && !root_ok(th)) continue;
      bool nat = true;
      for (int gpos : a.generators(c)) {
        const int l = a.loop(c, gpos);
        if (b.compose(g.arr[l], th) != b.compose(th, f.arr[l])) {
          nat = false;
          break;
        }
      }
      if (nat) per_comp[c].push_back(th);
    }
  }
  std::vector<std::vector<int>> out;
  std::vector<int> cur(a.components());
  std::function<void(int)> rec = [&](int c) {
    if (c == a.components()) {
      out.push_back(cur);
      return;
    }
    for (int th : per_comp[c]) {
      cur[c] = th;
      rec(c + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<int> expand_transformation(const FinGroupoid& a, const FinGroupoid& b,
                                       const FunctorMaps& f, const FunctorMaps& g,
                                       const std::vector<int>& roots) {
  std::vector<int> comps(a.objects());
  for (int x = 0; x < a.objects(); ++x) {
    const int t = a.tree(x);
    comps[x] = b.compose(g.arr[t], b.compose(roots[a.component(x)], b.inverse(f.arr[t])));
  }
  return comps;
}

bool is_natural(const FinGroupoid& a, const FinGroupoid& b, const FunctorMaps& f,
                const FunctorMaps& g, const std::vector<int>& comps) {
  for (int x = 0; x < a.objects(); ++x)
    if (b.dom(comps[x]) != f.obj[x] || b.cod(comps[x]) != g.obj[x]) return false;
  for (int u = 0; u < a.arrows(); ++u)
    if (b.compose(comps[a.cod(u)], f.arr[u]) != b.compose(g.arr[u], comps[a.dom(u)])) return false;
  return true;
}

int GroupoidPullback::object_of(int a, int b) const { return obj_index[a * width_b + b]; }

int GroupoidPullback::arrow_of(int x, int y) const {
  auto it = arr_index.find(static_cast<std::uint64_t>(x) * arrows_b + y);
  return it == arr_index.end() ? -1 : it->second;
}

FunctorMaps GroupoidPullback::mediate(const FunctorMaps& u, const FunctorMaps& v) const {
  FunctorMaps m;
  m.obj.resize(u.obj.size());
  m.arr.resize(u.arr.size());
  for (std::size_t x = 0; x < u.obj.size(); ++x) {
    m.obj[x] = object_of(u.obj[x], v.obj[x]);
    if (m.obj[x] < 0) throw Error(Errc::Precondition, "cone does not commute over the cospan");
  }
  for (std::size_t a = 0; a < u.arr.size(); ++a) {
    m.arr[a] = arrow_of(u.arr[a], v.arr[a]);
    if (m.arr[a] < 0) throw Error(Errc::Precondition, "cone does not commute over the cospan");
  }
  return m;
}

GroupoidPullback groupoid_pullback(const FinGroupoid& a, const FinGroupoid& b,
                                   const FunctorMaps& f, const FunctorMaps& g) {
  GroupoidPullback pb;
  pb.width_a = a.objects();
  pb.width_b = b.objects();
  pb.arrows_b = b.arrows();
  pb.obj_index.assign(static_cast<std::size_t>(a.objects()) * b.objects(), -1);
  for (int x = 0; x < a.objects(); ++x)
    for (int y = 0; y < b.objects(); ++y)
      if (f.obj[x] == g.obj[y]) {
        pb.obj_index[x * b.objects() + y] = static_cast<int>(pb.obj_pairs.size());
        pb.obj_pairs.emplace_back(x, y);
      }
  FinGroupoid::Builder bld(static_cast<int>(pb.obj_pairs.size()));
  std::vector<std::tuple<int, int, int>> out;
  for (int p = 0; p < static_cast<int>(pb.obj_pairs.size()); ++p) {
    const auto [x, y] = pb.obj_pairs[p];
    out.clear();
    for (int al = a.out_begin(x); al < a.out_end(x); ++al)
      for (int be = b.out_begin(y); be < b.out_end(y); ++be)
        if (f.arr[al] == g.arr[be]) out.emplace_back(pb.object_of(a.cod(al), b.cod(be)), al, be);
    std::sort(out.begin(), out.end());
    for (const auto& [q, al, be] : out) {
      const int id = bld.add_arrow(p, q);
      pb.arr_pairs.emplace_back(al, be);
      pb.arr_index.emplace(static_cast<std::uint64_t>(al) * b.arrows() + be, id);
    }
    bld.set_identity(p, pb.arr_index.at(static_cast<std::uint64_t>(a.identity(x)) * b.arrows() +
                                        b.identity(y)));
  }
  pb.apex = std::move(bld).build([&](int h, int k) {
    const auto [a2, b2] = pb.arr_pairs[h];
    const auto [a1, b1] = pb.arr_pairs[k];
    return pb.arrow_of(a.compose(a2, a1), b.compose(b2, b1));
  });
  for (const auto& [x, y] : pb.obj_pairs) {
    pb.proj1.obj.push_back(x);
    pb.proj2.obj.push_back(y);
  }
  for (const auto& [al, be] : pb.arr_pairs) {
    pb.proj1.arr.push_back(al);
    pb.proj2.arr.push_back(be);
  }
  return pb;
}

PathGroupoid vertical_path_groupoid(const FinGroupoid& e, const FunctorMaps& p) {
  PathGroupoid pg;
  std::vector<int> obj_of(e.arrows(), -1);
  for (int u = 0; u < e.arrows(); ++u)
    if (p.arr[u] == p.arr[e.identity(e.dom(u))]) {
      obj_of[u] = static_cast<int>(pg.vertical.size());
      pg.vertical.push_back(u);
    }
  const int n = static_cast<int>(pg.vertical.size());
  FinGroupoid::Builder bld(n);
  std::vector<int> a0_of;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int dx = e.dom(pg.vertical[x]), dy = e.dom(pg.vertical[y]);
      for (int a0 = e.hom_begin(dx, dy); a0 < e.hom_end(dx, dy); ++a0) {
        const int id = bld.add_arrow(x, y);
        a0_of.push_back(a0);
        if (x == y && a0 == e.identity(dx)) bld.set_identity(x, id);
      }
    }
  // Arrow (x, y, a0) sits at hom_begin(x, y) + pos_in_hom(a0); the builder
  // preserves that layout, so composites can be addressed directly.
  std::vector<int> hb(static_cast<std::size_t>(n) * n + 1, 0);
  {
    int run = 0;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        hb[x * n + y] = run;
        run += e.hom_size(e.dom(pg.vertical[x]), e.dom(pg.vertical[y]));
      }
  }
  std::vector<int> src(a0_of.size()), dst(a0_of.size());
  {
    int k = 0;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int cnt = e.hom_size(e.dom(pg.vertical[x]), e.dom(pg.vertical[y]));
        for (int i = 0; i < cnt; ++i, ++k) {
          src[k] = x;
          dst[k] = y;
        }
      }
  }
  pg.path = std::move(bld).build([&](int h, int k) {
    const int x = src[k], z = dst[h];
    return hb[x * n + z] + e.pos_in_hom(e.compose(a0_of[h], a0_of[k]));
  });
  pg.r.obj.resize(e.objects());
  pg.r.arr.resize(e.arrows());
  for (int x = 0; x < e.objects(); ++x) pg.r.obj[x] = obj_of[e.identity(x)];
  for (int u = 0; u < e.arrows(); ++u)
    pg.r.arr[u] = hb[pg.r.obj[e.dom(u)] * n + pg.r.obj[e.cod(u)]] + e.pos_in_hom(u);
  for (int x = 0; x < n; ++x) {
    pg.s.obj.push_back(e.dom(pg.vertical[x]));
    pg.t.obj.push_back(e.cod(pg.vertical[x]));
  }
  for (int k = 0; k < pg.path.arrows(); ++k) {
    const int a0 = a0_of[k];
    pg.s.arr.push_back(a0);
    const int ex = pg.vertical[src[k]], ey = pg.vertical[dst[k]];
    pg.t.arr.push_back(e.compose(ey, e.compose(a0, e.inverse(ex))));
  }
  return pg;
}

FunctorGroupoid functor_groupoid(const FinGroupoid& x, const FinGroupoid& y, std::size_t budget) {
  FunctorGroupoid fg;
  EnumOptions opt;
  opt.budget = budget;
  fg.functors = all_functors(x, y, opt);
  const int n = static_cast<int>(fg.functors.size());
  FinGroupoid::Builder bld(n);
  std::map<std::vector<int>, int> index;
  std::vector<int> src, dst;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (auto& roots : natural_transformations(x, y, fg.functors[i], fg.functors[j])) {
        const int id = bld.add_arrow(i, j);
        src.push_back(i);
        dst.push_back(j);
        fg.components.push_back(expand_transformation(x, y, fg.functors[i], fg.functors[j], roots));
        if (i == j && fg.components.back() == [&] {
              std::vector<int> ids;
              for (int o : fg.functors[i].obj) ids.push_back(y.identity(o));
              return ids;
            }())
          bld.set_identity(i, id);
        std::vector<int> key{i, j};
        key.insert(key.end(), roots.begin(), roots.end());
        index.emplace(std::move(key), id);
        fg.roots.push_back(std::move(roots));
      }
  fg.fun = std::move(bld).build([&](int h, int k) {
    std::vector<int> key{src[k], dst[h]};
    for (std::size_t c = 0; c < fg.roots[k].size(); ++c)
      key.push_back(y.compose(fg.roots[h][c], fg.roots[k][c]));
    return index.at(key);
  });
  return fg;
}

int CommaGroupoid::object_of(int i, int b) const {
  auto it = obj_index.find({i, b});
  return it == obj_index.end() ? -1 : it->second;
}

int CommaGroupoid::arrow_of(int x, int gamma) const {
  auto it = arr_index.find({x, gamma});
  return it == arr_index.end() ? -1 : it->second;
}

CommaGroupoid comma_groupoid(const FinGroupoid& i, const FinGroupoid& j, const FunctorMaps& g,
                             int obj) {
  CommaGroupoid cg;
  for (int x = 0; x < i.objects(); ++x)
    for (int b = j.hom_begin(g.obj[x], obj); b < j.hom_end(g.obj[x], obj); ++b) {
      cg.obj_index.emplace(std::make_pair(x, b), static_cast<int>(cg.objs.size()));
      cg.objs.emplace_back(x, b);
    }
  const int n = static_cast<int>(cg.objs.size());
  FinGroupoid::Builder bld(n);
  for (int p = 0; p < n; ++p) {
    const auto [x, b] = cg.objs[p];
    for (int q = 0; q < n; ++q) {
      const auto [y, b2] = cg.objs[q];
      for (int ga = i.hom_begin(x, y); ga < i.hom_end(x, y); ++ga)
        if (j.compose(b2, g.arr[ga]) == b) {
          const int id = bld.add_arrow(p, q);
          cg.arr.push_back(ga);
          cg.arr_index.emplace(std::make_pair(p, ga), id);
          if (p == q && ga == i.identity(x)) bld.set_identity(p, id);
        }
    }
  }
  std::vector<int> src(cg.arr.size());
  for (const auto& [k, v] : cg.arr_index) src[v] = k.first;
  cg.comma = std::move(bld).build([&](int h, int k) {
    return cg.arrow_of(src[k], i.compose(cg.arr[h], cg.arr[k]));
  });
  for (const auto& ob : cg.objs) cg.proj.obj.push_back(ob.first);
  cg.proj.arr = cg.arr;
  return cg;
}

int PiGroupoid::eval_object(int pobj, int i) const {
  const Obj& o = objs[pobj];
  const CommaGroupoid& cg = commas[o.j];
  return o.section.obj[cg.object_of(i, base_identity[o.j])];
}


int PiGroupoid::eval_arrow(const FinGroupoid& i, const FinGroupoid& x, int parr,
                           int gamma) const {
  const Obj& so = objs[pi.dom(parr)];
  const Obj& to = objs[pi.cod(parr)];
  const Arr& ar = arrs[parr];
  const CommaGroupoid& cs = commas[so.j];
  const CommaGroupoid& ct = commas[to.j];
  // theta at (i, id_j), then s' on gamma seen as (i, d) -> (i', id_j').
  const int c0 = cs.object_of(i.dom(gamma), base_identity[so.j]);
  const int c1 = ct.object_of(i.dom(gamma), ar.d);
  const int step = ct.arrow_of(c1, gamma);
  if (c0 < 0 || c1 < 0 || step < 0)
    throw Error(Errc::Precondition, "arrow does not lie over the base arrow");
  return x.compose(to.section.arr[step], ar.theta[c0]);
}

PiGroupoid pi_groupoid(const FinGroupoid& x, const FinGroupoid& i, const FinGroupoid& j,
                       const FunctorMaps& f, const FunctorMaps& g, std::size_t budget) {
  PiGroupoid pg;
  for (int o = 0; o < j.objects(); ++o) {
    pg.commas.push_back(comma_groupoid(i, j, g, o));
    pg.base_identity.push_back(j.identity(o));
  }
  EnumOptions opt;
  opt.budget = budget;
  for (int o = 0; o < j.objects(); ++o) {
    const CommaGroupoid& cg = pg.commas[o];
    LiftConstraint lc{&f, &cg.proj};
    opt.constraint = &lc;
    enumerate_functors(cg.comma, x, opt, [&](const FunctorMaps& s) {
      pg.objs.push_back({o, s});
      return true;
    });
  }
  const int n = static_cast<int>(pg.objs.size());
  // s' . d_* as a functor out of g|j.
  auto pushforward = [&](int d, const FunctorMaps& s2) {
    const CommaGroupoid& cs = pg.commas[j.dom(d)];
    const CommaGroupoid& ct = pg.commas[j.cod(d)];
    FunctorMaps out;
    std::vector<int> dobj(cs.objs.size());
    for (std::size_t c = 0; c < cs.objs.size(); ++c) {
      dobj[c] = ct.object_of(cs.objs[c].first, j.compose(d, cs.objs[c].second));
      out.obj.push_back(s2.obj[dobj[c]]);
    }
    for (int a = 0; a < cs.comma.arrows(); ++a)
      out.arr.push_back(s2.arr[ct.arrow_of(dobj[cs.comma.dom(a)], cs.arr[a])]);
    return std::make_pair(out, dobj);
  };
  FinGroupoid::Builder bld(n);
  std::map<std::vector<int>, int> index;
  std::vector<int> src, dst;
  std::size_t spent = 0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const int jp = pg.objs[p].j, jq = pg.objs[q].j;
      const CommaGroupoid& cs = pg.commas[jp];
      for (int d = j.hom_begin(jp, jq); d < j.hom_end(jp, jq); ++d) {
        const auto [s2, dobj] = pushforward(d, pg.objs[q].section);
        (void)dobj;
        auto vertical = [&](int th) { return i.is_identity(f.arr[th]); };
        for (auto& roots :
             natural_transformations(cs.comma, x, pg.objs[p].section, s2, vertical)) {
          if (++spent > budget)
            throw Error(Errc::ResourceCap, "Pi-type construction exceeded the candidate budget");
          auto comps = expand_transformation(cs.comma, x, pg.objs[p].section, s2, roots);
          const int id = bld.add_arrow(p, q);
          src.push_back(p);
          dst.push_back(q);
          if (p == q && d == j.identity(jp)) {
            bool ident = true;
            for (std::size_t c = 0; c < comps.size(); ++c)
              ident = ident && comps[c] == x.identity(pg.objs[p].section.obj[c]);
            if (ident) bld.set_identity(p, id);
          }
          std::vector<int> key{p, q, d};
          key.insert(key.end(), comps.begin(), comps.end());
          index.emplace(std::move(key), id);
          pg.arrs.push_back({d, std::move(comps)});
        }
      }
    }
  pg.pi = std::move(bld).build([&](int h, int k) {
    const auto& a1 = pg.arrs[k];
    const auto& a2 = pg.arrs[h];
    const int jp = pg.objs[src[k]].j;
    const CommaGroupoid& cs = pg.commas[jp];
    const CommaGroupoid& cm = pg.commas[j.cod(a1.d)];
    std::vector<int> key{src[k], dst[h], j.compose(a2.d, a1.d)};
    for (std::size_t c = 0; c < cs.objs.size(); ++c) {
      const int moved = cm.object_of(cs.objs[c].first, j.compose(a1.d, cs.objs[c].second));
      key.push_back(x.compose(a2.theta[moved], a1.theta[c]));
    }
    return index.at(key);
  });
  for (const auto& o : pg.objs) pg.to_base.obj.push_back(o.j);
  for (const auto& a : pg.arrs) pg.to_base.arr.push_back(a.d);
  return pg;
}

namespace {

std::vector<std::pair<int, int>> component_signature(const FinGroupoid& g) {
  std::vector<std::pair<int, int>> sig;
  for (int c = 0; c < g.components(); ++c)
    sig.emplace_back(static_cast<int>(g.members(c).size()), g.group_order(c));
  std::sort(sig.begin(), sig.end());
  return sig;
}

}  // namespace

std::optional<FunctorMaps> groupoid_iso_search(const FinGroupoid& a, const FinGroupoid& b,
                                               std::size_t budget) {
  if (a.objects() != b.objects() || a.arrows() != b.arrows()) return std::nullopt;
  if (component_signature(a) != component_signature(b)) return std::nullopt;
  EnumOptions opt;
  opt.injective_objects = true;
  opt.budget = budget;
  std::optional<FunctorMaps> found;
  std::vector<char> hit(b.arrows());
  enumerate_functors(a, b, opt, [&](const FunctorMaps& f) {
    std::fill(hit.begin(), hit.end(), 0);
    for (int u : f.arr) {
      if (hit[u]) return true;
      hit[u] = 1;
    }
    found = f;
    return false;
  });
  return found;
}

namespace builtin {

FinGroupoid terminal() { return indiscrete(1); }
FinGroupoid interval() { return indiscrete(2); }

FinGroupoid indiscrete(int n) {
  FinGroupoid::Builder b(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int id = b.add_arrow(x, y);
      if (x == y) b.set_identity(x, id);
    }
  return std::move(b).build([n](int g, int f) { return (f / n) * n + (g % n); });
}

FinGroupoid discrete(int n) {
  FinGroupoid::Builder b(n);
  for (int x = 0; x < n; ++x) b.set_identity(x, b.add_arrow(x, x));
  return std::move(b).build([](int g, int) { return g; });
}

FinGroupoid cyclic(int n) {
  FinGroupoid::Builder b(1);
  for (int k = 0; k < n; ++k) b.add_arrow(0, 0);
  b.set_identity(0, 0);
  return std::move(b).build([n](int g, int f) { return (g + f) % n; });
}

FinGroupoid disjoint_union(const FinGroupoid& a, const FinGroupoid& c) {
  const int na = a.objects();
  FinGroupoid::Builder b(na + c.objects());
  for (int u = 0; u < a.arrows(); ++u) b.add_arrow(a.dom(u), a.cod(u));
  for (int u = 0; u < c.arrows(); ++u) b.add_arrow(na + c.dom(u), na + c.cod(u));
  for (int x = 0; x < na; ++x) b.set_identity(x, a.identity(x));
  for (int x = 0; x < c.objects(); ++x) b.set_identity(na + x, a.arrows() + c.identity(x));
  const int ma = a.arrows();
  return std::move(b).build([&](int g, int f) {
    return f < ma ? a.compose(g, f) : ma + c.compose(g - ma, f - ma);
  });
}

std::optional<FinGroupoid> by_name(const std::string& name) {
  if (name == "terminal") return terminal();
  if (name == "interval") return interval();
  if (name == "bz2") return cyclic(2);
  if (name == "bz3") return cyclic(3);
  if (name == "indiscrete3") return indiscrete(3);
  if (name == "discrete2") return discrete(2);
  return std::nullopt;
}

}  // namespace builtin

}  // namespace pathcat
