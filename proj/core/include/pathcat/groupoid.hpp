#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pathcat/fincat.hpp"

namespace pathcat {

// A finite groupoid with arrows sorted by (dom, cod), so every hom-set and
// every out-set is a contiguous id range. Immutable after build().
class FinGroupoid {
 public:
  class Builder {
   public:
    explicit Builder(int objects);
    // Arrows must arrive sorted by (dom, cod).
    int add_arrow(int dom, int cod);
    void set_identity(int x, int arrow);
    FinGroupoid build(const std::function<int(int g, int f)>& compose) &&;

   private:
    int n_;
    std::vector<int> dom_, cod_, id_;
  };

  FinGroupoid() = default;

  int objects() const { return n_; }
  int arrows() const { return static_cast<int>(dom_.size()); }
  int dom(int a) const { return dom_[a]; }
  int cod(int a) const { return cod_[a]; }
  int identity(int x) const { return id_[x]; }
  int inverse(int a) const { return inv_[a]; }
  bool is_identity(int a) const { return id_[dom_[a]] == a; }
  int compose(int g, int f) const;

  int hom_begin(int x, int y) const { return hom_off_[x * n_ + y]; }
  int hom_end(int x, int y) const { return hom_off_[x * n_ + y + 1]; }
  int hom_size(int x, int y) const { return hom_end(x, y) - hom_begin(x, y); }
  int out_begin(int x) const { return hom_off_[x * n_]; }
  int out_end(int x) const { return hom_off_[(x + 1) * n_]; }
  int pos_in_hom(int a) const { return a - hom_begin(dom_[a], cod_[a]); }

  // Skeleton: per connected component a root (smallest object), a tree arrow
  // root -> x for each member, the vertex group hom(root, root) with greedy
  // generators and a breadth-first spanning order of its Cayley graph.
  int components() const { return static_cast<int>(roots_.size()); }
  int component(int x) const { return comp_of_[x]; }
  int root(int c) const { return roots_[c]; }
  const std::vector<int>& members(int c) const { return members_[c]; }
  int tree(int x) const { return tree_[x]; }
  int group_order(int c) const { return hom_size(roots_[c], roots_[c]); }
  int loop(int c, int pos) const { return hom_begin(roots_[c], roots_[c]) + pos; }
  int loop_pos(int a) const { return loop_pos_[a]; }
  int group_mult(int c, int i, int j) const;
  const std::vector<int>& generators(int c) const { return gens_[c]; }
  struct CayleyStep {
    int elem, gen, prev;  // elem = gens[gen] * prev
  };
  const std::vector<CayleyStep>& cayley(int c) const { return cayley_[c]; }

  std::size_t hash() const { return hash_; }
  bool operator==(const FinGroupoid& o) const;

  ValidationReport validate() const;
  json to_json() const;

 private:
  int n_ = 0;
  std::vector<int> dom_, cod_, id_, inv_;
  std::vector<int> hom_off_;
  std::vector<int> comp_off_;
  std::vector<int> comp_;
  std::vector<int> comp_of_, roots_, tree_, loop_pos_;
  std::vector<std::vector<int>> members_, gens_, mult_;
  std::vector<std::vector<CayleyStep>> cayley_;
  std::size_t hash_ = 0;

  void finish();
};

struct FunctorMaps {
  std::vector<int> obj, arr;
  bool operator==(const FunctorMaps&) const = default;
};

FunctorMaps identity_maps(const FinGroupoid& g);
FunctorMaps compose_maps(const FunctorMaps& g, const FunctorMaps& f);
bool is_functor(const FinGroupoid& a, const FinGroupoid& b, const FunctorMaps& f);

// Canonical enumeration key of a functor out of `a`: per component the image
// of the root, of the tree arrows and of the generator loops.
std::vector<int> functor_key(const FinGroupoid& a, const FunctorMaps& f);

// Restricts enumeration to F : A -> E with p . F = k.
struct LiftConstraint {
  const FunctorMaps* p = nullptr;
  const FunctorMaps* k = nullptr;
};

struct EnumOptions {
  const LiftConstraint* constraint = nullptr;
  bool injective_objects = false;
  std::size_t budget = 200000;
};

// Visits functors A -> E in ascending functor_key order until visit returns
// false. Throws ResourceCap once more than `budget` candidates were examined.
std::size_t enumerate_functors(const FinGroupoid& a, const FinGroupoid& e, const EnumOptions& opt,
                               const std::function<bool(const FunctorMaps&)>& visit);

// First restriction to component c, in enumerate_functors order, that passes
// `accept`. `obj_filter(x, ex)` may reject object images early; it must only
// reject what `accept` would. Entries outside the component are -1.
std::optional<FunctorMaps> first_component_functor(
    const FinGroupoid& a, const FinGroupoid& e, int c, const EnumOptions& opt,
    const std::function<bool(int, int)>& obj_filter,
    const std::function<bool(const FunctorMaps&)>& accept);

std::vector<FunctorMaps> all_functors(const FinGroupoid& a, const FinGroupoid& e,
                                      const EnumOptions& opt = {});

// Natural transformations F => G given by one root component per component of
// the source. Components are expanded along tree arrows.
std::vector<std::vector<int>> natural_transformations(const FinGroupoid& a, const FinGroupoid& b,
                                                      const FunctorMaps& f, const FunctorMaps& g,
                                                      const std::function<bool(int)>& root_ok = {});
std::vector<int> expand_transformation(const FinGroupoid& a, const FinGroupoid& b,
                                       const FunctorMaps& f, const FunctorMaps& g,
                                       const std::vector<int>& roots);
bool is_natural(const FinGroupoid& a, const FinGroupoid& b, const FunctorMaps& f,
                const FunctorMaps& g, const std::vector<int>& components);

struct GroupoidPullback {
  FinGroupoid apex;
  std::vector<std::pair<int, int>> obj_pairs, arr_pairs;
  FunctorMaps proj1, proj2;
  int object_of(int a, int b) const;
  int arrow_of(int x, int y) const;
  FunctorMaps mediate(const FunctorMaps& u, const FunctorMaps& v) const;

  int width_a = 0, width_b = 0, arrows_b = 0;
  std::vector<int> obj_index;
  std::unordered_map<std::uint64_t, int> arr_index;
};

GroupoidPullback groupoid_pullback(const FinGroupoid& a, const FinGroupoid& b,
                                   const FunctorMaps& f, const FunctorMaps& g);

// Path groupoid of p : E -> B: objects are the p-vertical arrows of E, arrows
// (e, e', a0) with a0 : dom e -> dom e'; t sends it to e' a0 e^-1.
struct PathGroupoid {
  FinGroupoid path;
  std::vector<int> vertical;  // object -> arrow of E
  FunctorMaps r, s, t;
};

PathGroupoid vertical_path_groupoid(const FinGroupoid& e, const FunctorMaps& p);

struct FunctorGroupoid {
  FinGroupoid fun;
  std::vector<FunctorMaps> functors;
  std::vector<std::vector<int>> roots;  // per arrow, root components
  std::vector<std::vector<int>> components;  // per arrow, all components
};

FunctorGroupoid functor_groupoid(const FinGroupoid& x, const FinGroupoid& y,
                                 std::size_t budget = 200000);

// Comma groupoid g|j for g : I -> J: objects (i, b : g i -> j).
struct CommaGroupoid {
  FinGroupoid comma;
  std::vector<std::pair<int, int>> objs;  // (i, b)
  std::vector<int> arr;                   // arrow -> arrow of I
  FunctorMaps proj;                       // to I
  int object_of(int i, int b) const;
  int arrow_of(int x, int gamma) const;
  std::map<std::pair<int, int>, int> obj_index;
  std::map<std::pair<int, int>, int> arr_index;
};

CommaGroupoid comma_groupoid(const FinGroupoid& i, const FinGroupoid& j, const FunctorMaps& g,
                             int obj);

// Dependent product along g : I -> J of f : X -> I (both isofibrations).
// Objects (j, s) with s a section of f over g|j; arrows (d, theta) with theta
// a vertical transformation s => s' d_*.
struct PiGroupoid {
  FinGroupoid pi;
  FunctorMaps to_base;  // Pi -> J
  std::vector<CommaGroupoid> commas;  // per object of J
  struct Obj {
    int j;
    FunctorMaps section;
  };
  struct Arr {
    int d;
    std::vector<int> theta;  // components over g|j
  };
  std::vector<Obj> objs;
  std::vector<Arr> arrs;
  std::vector<int> base_identity;

  // Evaluation at ((j, s), i) with g i = j and along ((d, theta), gamma).
  int eval_object(int pobj, int i) const;
  int eval_arrow(const FinGroupoid& i, const FinGroupoid& x, int parr, int gamma) const;
};

PiGroupoid pi_groupoid(const FinGroupoid& x, const FinGroupoid& i, const FinGroupoid& j,
                       const FunctorMaps& f, const FunctorMaps& g, std::size_t budget = 200000);

std::optional<FunctorMaps> groupoid_iso_search(const FinGroupoid& a, const FinGroupoid& b,
                                               std::size_t budget = 200000);

namespace builtin {
FinGroupoid terminal();
FinGroupoid interval();
FinGroupoid indiscrete(int n);
FinGroupoid discrete(int n);
FinGroupoid cyclic(int n);  // one object, loops Z/n
FinGroupoid disjoint_union(const FinGroupoid& a, const FinGroupoid& b);
std::optional<FinGroupoid> by_name(const std::string& name);
}  // namespace builtin

}  // namespace pathcat

namespace pathcat {

struct GroupoidFunctor {
  std::shared_ptr<const FinGroupoid> src, tgt;
  FunctorMaps maps;
};

}  // namespace pathcat
