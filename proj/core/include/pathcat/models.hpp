#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "pathcat/gpdcheck.hpp"
#include "pathcat/groupoid.hpp"
#include "pathcat/pathstruct.hpp"

namespace pathcat {

struct Caps {
  std::size_t budget = 200000;       // candidate evaluations per enumeration
  std::size_t seed_objects = 4;      // objects per seed groupoid
  std::size_t fragment_objects = 50; // objects the law suites quantify over
  std::size_t objects = 5000;        // groupoids interned by a computed provider
  std::size_t morphisms = 2000000;   // functors interned by a computed provider
};

// Computed provider: finite groupoids and functors, interned by structure.
// Products, pullbacks, path groupoids, functor groupoids and Pi-types are
// built on demand and memoized.
class GpdCategory : public FinCategory {
 public:
  explicit GpdCategory(Caps caps = {});

  ObjId intern(FinGroupoid g, const std::string& label = {});
  MorId intern(ObjId dom, ObjId cod, FunctorMaps maps);
  const FinGroupoid& groupoid(ObjId x) const { return *objects_[idx(x)].g; }
  std::shared_ptr<const FinGroupoid> groupoid_ptr(ObjId x) const { return objects_[idx(x)].g; }
  const FunctorMaps& maps(MorId m) const { return mors_[idx(m)].maps; }
  GroupoidFunctor functor(MorId m) const;
  Caps& caps() { return caps_; }

  ProviderKind kind() const override { return ProviderKind::Computed; }
  std::size_t object_count() const override { return objects_.size(); }
  std::size_t morphism_count() const override { return mors_.size(); }
  ObjId dom(MorId m) const override { return mors_[idx(m)].dom; }
  ObjId cod(MorId m) const override { return mors_[idx(m)].cod; }
  MorId identity(ObjId x) const override { return objects_[idx(x)].identity; }
  MorId compose(MorId g, MorId f) override;
  std::vector<MorId> hom(ObjId x, ObjId y) override;
  bool canonical_less(MorId a, MorId b) const override;
  std::vector<MorId> lifts(MorId k, MorId p) override;
  std::optional<MorId> first_lift(MorId k, MorId p) override;
  ObjId terminal() override { return terminal_; }
  MorId to_terminal(ObjId x) override;
  const PullbackData& pullback(MorId f, MorId g) override;
  MorId mediator(const PullbackData& pb, MorId a, MorId b) override;
  std::string object_label(ObjId x) const override;

  const GroupoidPullback& pullback_groupoid(const PullbackData& pb);

  struct PathRec {
    ObjId P;
    MorId r, s, t;
  };
  const PathRec& vertical_path(MorId p);
  const ExponentialCandidate& function_space(ObjId x, ObjId y);
  const PiCandidate& pi(MorId f, MorId g);

  bool isofibration(MorId m);
  bool equivalence(MorId m);
  std::optional<MorId> quasi_inverse(MorId f);

 private:
  struct ObjRec {
    std::shared_ptr<const FinGroupoid> g;
    std::string label;
    MorId identity;
  };
  struct MorRec {
    ObjId dom, cod;
    FunctorMaps maps;
    std::vector<int> key;
  };
  struct PullbackRec {
    PullbackData data;
    GroupoidPullback gp;
  };

  Caps caps_;
  ObjId terminal_{};
  std::vector<ObjRec> objects_;
  std::unordered_map<std::size_t, std::vector<ObjId>> obj_index_;
  std::vector<MorRec> mors_;
  std::unordered_map<std::size_t, std::vector<MorId>> mor_index_;
  std::unordered_map<std::uint64_t, MorId> comp_memo_;
  std::map<std::pair<ObjId, ObjId>, std::vector<MorId>> hom_memo_;
  std::map<std::pair<MorId, MorId>, std::vector<MorId>> lift_memo_;
  std::map<std::pair<MorId, MorId>, PullbackRec> pullbacks_;
  std::map<MorId, PathRec> paths_;
  std::map<std::pair<ObjId, ObjId>, ExponentialCandidate> exps_;
  std::map<std::pair<MorId, MorId>, PiCandidate> pis_;
  std::unordered_map<std::uint32_t, bool> isofib_memo_, equiv_memo_;
};

// Groupoid model: fibrations are isofibrations, weak equivalences are
// equivalences, path objects are vertical path groupoids. The discrete model
// restricts to discrete groupoids, where every map is a fibration and path
// objects are trivial.
class GpdPathStructure : public PathStructure {
 public:
  enum class Kind { Groupoid, Discrete };

  GpdPathStructure(std::shared_ptr<GpdCategory> cat, Kind kind, std::vector<ObjId> fragment,
                   std::string name);

  FinCategory& cat() override { return *cat_; }
  GpdCategory& gpd() { return *cat_; }
  std::shared_ptr<GpdCategory> gpd_ptr() { return cat_; }
  Kind model_kind() const { return kind_; }
  std::string name() const override { return name_; }
  bool is_fibration(MorId m) override;
  bool is_weak_equivalence(MorId m) override;
  PathObjectData path_object(MorId fibration) override;
  std::vector<ObjId> fragment() override { return fragment_; }
  std::optional<ExponentialCandidate> exponential(ObjId x, ObjId y) override;
  std::optional<PiCandidate> pi_type(MorId f, MorId g) override;
  std::vector<MorId> homotopy_inverse_candidates(MorId f) override;
  FillerSearch least_filler(const LiftingSquare& sq) override;

  // Named objects of the fragment (terminal, interval, seeds).
  ObjId named(const std::string& label) const;

 private:
  std::shared_ptr<GpdCategory> cat_;
  Kind kind_;
  std::vector<ObjId> fragment_;
  std::string name_;
  std::map<MorId, PathObjectData> paths_;
};

std::shared_ptr<GpdPathStructure> make_discrete_model(const std::vector<int>& sizes,
                                                      Caps caps = {});
std::shared_ptr<GpdPathStructure> make_gpd_model(
    const std::vector<std::pair<std::string, FinGroupoid>>& seeds, Caps caps = {});
std::shared_ptr<GpdPathStructure> make_gpd_model(const std::vector<std::string>& seed_names,
                                                 Caps caps = {});

std::shared_ptr<TablePathStructure> load_model(const json& doc);
std::shared_ptr<TablePathStructure> load_model_file(const std::string& path);
// Normalized document: arrays ascending, path objects keyed by fibration.
json save_model(TablePathStructure& ps);
// Materializes the closure of the fragment under path objects and fibre
// products as a table. Throws ResourceCap when the closure exceeds the caps.
json save_model(PathStructure& ps, std::size_t max_objects = 50);

}  // namespace pathcat
