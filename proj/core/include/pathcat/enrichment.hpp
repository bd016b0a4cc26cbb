#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "pathcat/gpdcheck.hpp"
#include "pathcat/pathstruct.hpp"

namespace pathcat {

// Internal groupoid on Y: composition tau and inversion sigma as fillers.
struct EGroupoidData {
  ObjId Y{};
  PathObjectData P;        // PY
  PathObjectData PP;       // path object of (s, t) over Y x Y
  PullbackData product;    // Y x Y
  PullbackData comp_domain;  // PY x_Y PY: t of the first factor meets s of the second
  MorId rr{};              // (r, r) : Y -> PY x_Y PY
  MorId tau{}, sigma{};
  json to_json() const;
};

// C(X, Y): objects are maps X -> Y, arrows are classes of maps X -> PY up to
// homotopy over Y x Y. Arrow ids follow (src, tgt, representative) order.
struct HomGroupoid {
  ObjId X{}, Y{};
  std::vector<MorId> objects;
  std::unordered_map<MorId, int> object_index;
  struct Arrow {
    int src, tgt;
    MorId rep;
    std::vector<MorId> members;
  };
  std::vector<Arrow> arrows;
  std::unordered_map<MorId, int> class_of;
  std::shared_ptr<const FinGroupoid> groupoid;
  ValidationReport laws;  // well-definedness and groupoid-law violations

  int object_of(MorId f) const;
  int class_of_homotopy(MorId h) const;
  int identity(int obj) const { return groupoid->identity(obj); }
  int compose(int beta, int alpha) const { return groupoid->compose(beta, alpha); }
  int inverse(int alpha) const { return groupoid->inverse(alpha); }
};

class Enrichment {
 public:
  explicit Enrichment(PathStructure& ps) : ps_(ps) {}

  PathStructure& structure() { return ps_; }
  FinCategory& cat() { return ps_.cat(); }

  // Absolute path object of Y; cheaper than egroupoid when only P is needed.
  const PathObjectData& path(ObjId y);
  const EGroupoidData& egroupoid(ObjId y);
  const HomGroupoid& hom(ObjId x, ObjId y);

  // Pf : PY -> PZ for f : Y -> Z.
  MorId whisker_filler(MorId f);
  // f * alpha for alpha in C(X, Y): class in C(X, Z).
  int whisker_left(MorId f, ObjId x, int alpha);
  // alpha * g for alpha in C(Y, Z) and g : X -> Y: class in C(X, Z).
  int whisker_right(ObjId y, ObjId z, int alpha, MorId g);
  // beta * alpha for alpha in C(X, Y), beta in C(Y, Z).
  int horizontal_compose(ObjId x, ObjId y, ObjId z, int beta, int alpha);
  int horizontal_compose_alt(ObjId x, ObjId y, ObjId z, int beta, int alpha);

  // f * - : C(X, Y) -> C(X, Z) and - * g : C(Y, Z) -> C(X, Z) as functors.
  GroupoidFunctor left_whisker_functor(MorId f, ObjId x);
  GroupoidFunctor right_whisker_functor(ObjId z, MorId g);

 private:
  PathStructure& ps_;
  std::map<ObjId, PathObjectData> paths_;
  std::map<ObjId, EGroupoidData> egs_;
  std::map<std::pair<ObjId, ObjId>, HomGroupoid> homs_;
  std::map<MorId, MorId> pf_;
  std::map<std::tuple<MorId, ObjId, int>, int> wl_;
  std::map<std::tuple<ObjId, ObjId, int, MorId>, int> wr_;
};

// Functors between path categories, applied on demand.
class CatFunctor {
 public:
  virtual ~CatFunctor() = default;
  virtual ObjId obj(ObjId x) = 0;
  virtual MorId mor(MorId m) = 0;
  virtual std::string name() const = 0;
};

class IdentityFunctor : public CatFunctor {
 public:
  ObjId obj(ObjId x) override { return x; }
  MorId mor(MorId m) override { return m; }
  std::string name() const override { return "id"; }
};

// - x X on a category with products.
class ProductFunctor : public CatFunctor {
 public:
  ProductFunctor(FinCategory& c, ObjId x) : c_(c), x_(x) {}
  ObjId obj(ObjId y) override { return c_.product(y, x_).apex; }
  MorId mor(MorId m) override { return c_.product_map(m, c_.identity(x_)); }
  std::string name() const override { return "-x" + c_.object_label(x_); }

 private:
  FinCategory& c_;
  ObjId x_;
};

// g^* : C/J -> C/I for g : I -> J.
class PullbackFunctor : public CatFunctor {
 public:
  PullbackFunctor(SlicePathStructure& over_j, SlicePathStructure& over_i, MorId g)
      : sj_(over_j), si_(over_i), g_(g) {}
  ObjId obj(ObjId a) override;
  MorId mor(MorId m) override;
  std::string name() const override { return "pullback"; }
  // The pullback square used for a slice object over J.
  const PullbackData& square(ObjId a);

 private:
  SlicePathStructure& sj_;
  SlicePathStructure& si_;
  MorId g_;
};

// g_* : C/Y -> C/Z for g : Y -> Z.
class PostcompositionFunctor : public CatFunctor {
 public:
  PostcompositionFunctor(SlicePathStructure& over_y, SlicePathStructure& over_z, MorId g)
      : sy_(over_y), sz_(over_z), g_(g) {}
  ObjId obj(ObjId a) override;
  MorId mor(MorId m) override;
  std::string name() const override { return "postcompose"; }

 private:
  SlicePathStructure& sy_;
  SlicePathStructure& sz_;
  MorId g_;
};

// Everything to the terminal object of the target.
class TerminalFunctor : public CatFunctor {
 public:
  explicit TerminalFunctor(FinCategory& target) : t_(target) {}
  ObjId obj(ObjId) override { return t_.terminal(); }
  MorId mor(MorId) override { return t_.identity(t_.terminal()); }
  std::string name() const override { return "const1"; }

 private:
  FinCategory& t_;
};

class CompositeFunctor : public CatFunctor {
 public:
  CompositeFunctor(CatFunctor& g, CatFunctor& f) : g_(g), f_(f) {}
  ObjId obj(ObjId x) override { return g_.obj(f_.obj(x)); }
  MorId mor(MorId m) override { return g_.mor(f_.mor(m)); }
  std::string name() const override { return g_.name() + "." + f_.name(); }

 private:
  CatFunctor& g_;
  CatFunctor& f_;
};

// Extension of a homotopical functor F : C -> D to hom-groupoids through the
// fillers lambda_F(Y) : F(PY) -> P(FY).
class FunctorExtension {
 public:
  FunctorExtension(Enrichment& src, Enrichment& tgt, CatFunctor& f) : src_(src), tgt_(tgt), f_(f) {}

  MorId lambda(ObjId y);
  // Class of lambda F(H) in D(FX, FY) for a homotopy H : X -> PY.
  int map_homotopy(ObjId x, ObjId y, MorId h);
  // F_{X,Y} : C(X, Y) -> D(FX, FY); `laws` collects functoriality and
  // well-definedness failures.
  GroupoidFunctor on_hom(ObjId x, ObjId y, ValidationReport* laws = nullptr);

  Enrichment& source() { return src_; }
  Enrichment& target() { return tgt_; }
  CatFunctor& functor() { return f_; }

 private:
  Enrichment& src_;
  Enrichment& tgt_;
  CatFunctor& f_;
  std::map<ObjId, MorId> lambda_;
};

GroupoidFunctor extend_homotopical_functor(FunctorExtension& ext, ObjId x, ObjId y);

// (f * -) F_{X,Y} : C(X, Y) -> D(FX, Z) for f : FY -> Z, sending [H] to
// [Pf lambda F(H)] without building D(FX, FY).
GroupoidFunctor whiskered_extension(FunctorExtension& ext, ObjId x, ObjId y, MorId f,
                                    ValidationReport* laws = nullptr);

// Components alpha_Y : FY -> GY per object; verifies the strict commutation
// (alpha_Y * -) F_{X,Y} = (- * alpha_X) G_{X,Y}.
struct CommutationCertificate {
  bool commutes = true;
  std::size_t objects_checked = 0, arrows_checked = 0;
  json witnesses = json::array();
};

CommutationCertificate induced_strict_transformation(FunctorExtension& fext,
                                                     FunctorExtension& gext,
                                                     const std::map<ObjId, MorId>& alpha,
                                                     ObjId x, ObjId y);

// Law suites. Each adds one violation per failing instance and returns the
// number of instances checked.
std::size_t check_groupoid_laws(Enrichment& e, ObjId x, ObjId y, ValidationReport& rep);
std::size_t check_interchange(Enrichment& e, ObjId x, ObjId y, ObjId z, ValidationReport& rep);
std::size_t check_horizontal_formulas(Enrichment& e, ObjId x, ObjId y, ObjId z,
                                      ValidationReport& rep);
std::size_t check_horizontal_associativity(Enrichment& e, ObjId w, ObjId x, ObjId y, ObjId z,
                                           ValidationReport& rep);
std::size_t check_whisker_exchange(Enrichment& e, ObjId x, ObjId y, ObjId z, ObjId w,
                                   ValidationReport& rep);
std::size_t check_whisker_functoriality(Enrichment& e, ObjId x, ObjId y, ObjId z,
                                        ValidationReport& rep);
// For f : Y -> Z: f * - on C(X, Y) is an isofibration when f is a fibration;
// f * - and - * f (on C(Z, X)) are equivalences when f is a weak equivalence;
// homotopic f, g give naturally isomorphic whiskerings on both sides.
std::size_t check_whisker_lemmas(Enrichment& e, ObjId x, ObjId y, ObjId z, ValidationReport& rep);
// Path-object independence: an alternative path object P' = PY x_Y PY with
// r' = (r, r) yields an isomorphic hom-groupoid through the comparison fillers.
std::size_t check_path_object_independence(Enrichment& e, ObjId x, ObjId y,
                                           ValidationReport& rep);

}  // namespace pathcat
