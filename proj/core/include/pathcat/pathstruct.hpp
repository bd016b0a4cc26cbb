#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "pathcat/fincat.hpp"

namespace pathcat {

// Path object of Y over `base`, relative to the fibration Y -> base.
struct PathObjectData {
  MorId fibration{};
  ObjId base{}, object{}, P{};
  MorId r{}, s{}, t{};
  PullbackData fiber_product;  // Y x_base Y
  MorId st{};                  // (s, t) : P -> Y x_base Y
  json to_json() const;
};

struct Homotopy {
  MorId map{}, src{}, tgt{};
};

// p h = k w with w : A -> Y a weak equivalence and p : X -> Z a fibration.
// A filler is l : Y -> X with p l = k and l w homotopic to h over Z.
struct LiftingSquare {
  MorId w{}, p{}, h{}, k{};
  json to_json() const;
};

struct ExponentialCandidate {
  ObjId X{}, Y{}, E{};
  PullbackData product;  // E x X
  MorId eval{};
  json to_json() const;
};

// Pi-type for f : X -> I along g : I -> J. `pullback` is Pi x_J I, i.e. the
// pullback of `to_base` along g; eval : Pi x_J I -> X lies over I.
struct PiCandidate {
  MorId f{}, g{};
  ObjId pi{};
  MorId to_base{};
  PullbackData pullback;
  MorId eval{};
  json to_json() const;
};

struct FillerSearch {
  bool handled = false;
  std::optional<MorId> filler;
};

class PathStructure {
 public:
  virtual ~PathStructure() = default;

  virtual FinCategory& cat() = 0;
  virtual std::string name() const = 0;
  virtual bool is_fibration(MorId m) = 0;
  virtual bool is_weak_equivalence(MorId m) = 0;
  // Throws MissingSlicePathObject when none is designated or found.
  virtual PathObjectData path_object(MorId fibration) = 0;
  // Objects over which exhaustive law suites quantify.
  virtual std::vector<ObjId> fragment() = 0;

  virtual std::optional<ExponentialCandidate> exponential(ObjId, ObjId) { return std::nullopt; }
  virtual std::optional<PiCandidate> pi_type(MorId, MorId) { return std::nullopt; }
  // Consulted by is_homotopy_equivalence when hom(Y, X) is too large to scan.
  virtual std::vector<MorId> homotopy_inverse_candidates(MorId) { return {}; }
  // Provider shortcut for the least filler in canonical order.
  virtual FillerSearch least_filler(const LiftingSquare&) { return {}; }

  bool is_acyclic_fibration(MorId m) { return is_fibration(m) && is_weak_equivalence(m); }
  bool is_fibrant(ObjId y) { return is_fibration(cat().to_terminal(y)); }
  PathObjectData absolute_path_object(ObjId y) { return path_object(cat().to_terminal(y)); }
  ObjId terminal() { return cat().terminal(); }
};

// Builds the PathObjectData record for a chosen (P, r, s, t), computing the
// fibre product and the pairing.
PathObjectData make_path_object(FinCategory& c, MorId fibration, ObjId p, MorId r, MorId s,
                                MorId t);

class TablePathStructure : public PathStructure {
 public:
  struct Designation {
    ObjId base, object, P;
    MorId r, s, t;
    std::optional<MorId> fibration;
  };

  TablePathStructure(std::shared_ptr<TableCategory> cat, std::set<MorId> fibrations,
                     std::set<MorId> weak_equivalences, std::vector<Designation> path_objects,
                     std::string name = "table");

  FinCategory& cat() override { return *cat_; }
  TableCategory& table() { return *cat_; }
  std::string name() const override { return name_; }
  bool is_fibration(MorId m) override { return fibs_.count(m) > 0; }
  bool is_weak_equivalence(MorId m) override { return wes_.count(m) > 0; }
  PathObjectData path_object(MorId fibration) override;
  std::vector<ObjId> fragment() override;

  const std::set<MorId>& fibrations() const { return fibs_; }
  const std::set<MorId>& weak_equivalences() const { return wes_; }
  const std::vector<Designation>& designations() const { return designated_; }

 private:
  std::shared_ptr<TableCategory> cat_;
  std::set<MorId> fibs_, wes_;
  std::vector<Designation> designated_;
  std::string name_;
  std::map<MorId, PathObjectData> resolved_;
};

// Single-fault injection over another structure.
class MutantPathStructure : public PathStructure {
 public:
  explicit MutantPathStructure(PathStructure& base, std::string label)
      : base_(base), label_(std::move(label)) {}

  std::set<MorId> add_fibrations, remove_fibrations;
  std::set<MorId> add_weak_equivalences, remove_weak_equivalences;
  std::map<MorId, PathObjectData> path_overrides;

  FinCategory& cat() override { return base_.cat(); }
  std::string name() const override { return label_; }
  bool is_fibration(MorId m) override;
  bool is_weak_equivalence(MorId m) override;
  PathObjectData path_object(MorId fibration) override;
  std::vector<ObjId> fragment() override { return base_.fragment(); }
  // The base shortcut is sound only while the homotopy relation over p is
  // the base one.
  FillerSearch least_filler(const LiftingSquare& sq) override {
    if (path_overrides.count(sq.p)) return {};
    return base_.least_filler(sq);
  }

 private:
  PathStructure& base_;
  std::string label_;
};

// The slice C/J as a category: objects are maps into J, morphisms are maps of
// C commuting with them. Everything delegates to the base category.
class SliceCategory : public FinCategory {
 public:
  SliceCategory(FinCategory& base, ObjId j);

  ObjId intern_object(MorId structure);
  MorId intern_morphism(ObjId dom, ObjId cod, MorId base_mor);
  MorId structure(ObjId x) const { return objs_[idx(x)]; }
  MorId base_morphism(MorId m) const { return mors_[idx(m)].base; }
  ObjId base_object(ObjId x) const { return base_.dom(structure(x)); }
  ObjId over() const { return j_; }
  FinCategory& base() { return base_; }

  ProviderKind kind() const override { return ProviderKind::Computed; }
  std::size_t object_count() const override { return objs_.size(); }
  std::size_t morphism_count() const override { return mors_.size(); }
  ObjId dom(MorId m) const override { return mors_[idx(m)].dom; }
  ObjId cod(MorId m) const override { return mors_[idx(m)].cod; }
  MorId identity(ObjId x) const override;
  MorId compose(MorId g, MorId f) override;
  std::vector<MorId> hom(ObjId x, ObjId y) override;
  bool canonical_less(MorId a, MorId b) const override;
  std::vector<MorId> lifts(MorId k, MorId p) override;
  std::optional<MorId> first_lift(MorId k, MorId p) override;
  ObjId terminal() override;
  MorId to_terminal(ObjId x) override;
  const PullbackData& pullback(MorId f, MorId g) override;
  MorId mediator(const PullbackData& pb, MorId a, MorId b) override;
  std::string object_label(ObjId x) const override;

 private:
  struct Mor {
    ObjId dom, cod;
    MorId base;
  };
  FinCategory& base_;
  ObjId j_;
  std::vector<MorId> objs_;
  std::unordered_map<std::uint32_t, ObjId> obj_index_;
  std::vector<Mor> mors_;
  std::map<std::tuple<ObjId, ObjId, MorId>, MorId> mor_index_;
  std::vector<MorId> identities_;
  std::map<std::pair<MorId, MorId>, PullbackData> pullbacks_;
};

// Path structure on C/J inherited from C. With `fibrant_only` the fragment is
// the fibrations over J; otherwise every map into J from a fragment object
// (the weak path structure on all of C/J).
class SlicePathStructure : public PathStructure {
 public:
  SlicePathStructure(PathStructure& base, ObjId j, bool fibrant_only = false);

  FinCategory& cat() override { return slice_; }
  SliceCategory& slice() { return slice_; }
  PathStructure& base() { return base_; }
  std::string name() const override;
  bool is_fibration(MorId m) override { return base_.is_fibration(slice_.base_morphism(m)); }
  bool is_weak_equivalence(MorId m) override {
    return base_.is_weak_equivalence(slice_.base_morphism(m));
  }
  PathObjectData path_object(MorId fibration) override;
  std::vector<ObjId> fragment() override;
  FillerSearch least_filler(const LiftingSquare& sq) override;

  // Slice object / morphism for base data.
  ObjId object(MorId structure) { return slice_.intern_object(structure); }
  MorId morphism(ObjId dom, ObjId cod, MorId base_mor) {
    return slice_.intern_morphism(dom, cod, base_mor);
  }

 private:
  PathStructure& base_;
  SliceCategory slice_;
  bool fibrant_only_;
};

std::unique_ptr<SlicePathStructure> slice_category(PathStructure& ps, ObjId j,
                                                   bool fibrant_only = false);

ValidationReport validate_path_axioms(PathStructure& ps);

bool is_path_object(PathStructure& ps, const PathObjectData& cand);
// Explains the first failed condition, empty when cand is a path object.
std::string path_object_defect(PathStructure& ps, const PathObjectData& cand);

// Homotopies f ~ g over the codomain of `fibration` (f, g : X -> Y with
// Y = dom fibration), in canonical order.
std::vector<Homotopy> enumerate_homotopies(PathStructure& ps, MorId fibration, MorId f, MorId g);
bool homotopic_over(PathStructure& ps, MorId fibration, MorId f, MorId g);
bool homotopic(PathStructure& ps, MorId f, MorId g);

struct FillerResult {
  MorId filler{};
  std::vector<MorId> all;  // filled only in all-fillers mode
  bool pairwise_homotopic = true;
};

// Least filler in canonical order. Throws NoFiller with the square as witness.
FillerResult find_filler(PathStructure& ps, const LiftingSquare& sq, bool all_fillers = false);
MorId filler(PathStructure& ps, const LiftingSquare& sq);

struct HomotopyCategory {
  std::shared_ptr<TableCategory> cat;
  std::vector<ObjId> objects;         // Ho object -> original object
  std::vector<MorId> representative;  // Ho morphism -> least representative
  std::map<MorId, MorId> class_of;    // original morphism -> Ho morphism
};

HomotopyCategory homotopy_category(PathStructure& ps);

bool is_homotopy_equivalence(PathStructure& ps, MorId f);

}  // namespace pathcat
