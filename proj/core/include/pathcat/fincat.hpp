#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pathcat/ids.hpp"

namespace pathcat {

// The cospan A -f-> C <-g- B together with a chosen limit.
// proj1 : apex -> A, proj2 : apex -> B.
struct PullbackData {
  MorId f{}, g{};
  ObjId apex{};
  MorId proj1{}, proj2{};
};

struct Violation {
  std::string rule;
  json witness;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string rule, json witness) {
    violations.push_back({std::move(rule), std::move(witness)});
  }
  json to_json() const;
};

enum class ProviderKind { Table, Computed };

// Finite category. Query methods are non-const because providers memoize
// pullbacks and hom enumerations; one instance belongs to one thread.
class FinCategory {
 public:
  virtual ~FinCategory() = default;

  virtual ProviderKind kind() const = 0;
  // Counts of what currently exists; a computed provider grows on demand.
  virtual std::size_t object_count() const = 0;
  virtual std::size_t morphism_count() const = 0;

  virtual ObjId dom(MorId m) const = 0;
  virtual ObjId cod(MorId m) const = 0;
  virtual MorId identity(ObjId x) const = 0;
  virtual MorId compose(MorId g, MorId f) = 0;

  // Canonical order: ascending MorId for tables, enumeration order for
  // computed providers (see canonical_less).
  virtual std::vector<MorId> hom(ObjId x, ObjId y) = 0;
  virtual bool canonical_less(MorId a, MorId b) const { return a < b; }

  // All l : dom k -> dom p with p l = k, in canonical order.
  virtual std::vector<MorId> lifts(MorId k, MorId p);
  virtual std::optional<MorId> first_lift(MorId k, MorId p);

  virtual ObjId terminal() = 0;
  virtual MorId to_terminal(ObjId x);

  virtual const PullbackData& pullback(MorId f, MorId g) = 0;
  virtual MorId mediator(const PullbackData& pb, MorId a, MorId b) = 0;

  virtual std::string object_label(ObjId x) const;

  const PullbackData& product(ObjId a, ObjId b);
  // (a, b) : T -> A x B
  MorId pair(ObjId a, ObjId b, MorId fa, MorId fb);
  // a x b : A x B -> A' x B'
  MorId product_map(MorId a, MorId b);
};

MorId compose_morphisms(FinCategory& c, MorId g, MorId f);
MorId compose_all(FinCategory& c, std::initializer_list<MorId> chain);
std::vector<MorId> hom_set(FinCategory& c, ObjId x, ObjId y);
ObjId find_terminal(FinCategory& c);
const PullbackData& find_pullback(FinCategory& c, MorId f, MorId g);

class TableCategory : public FinCategory {
 public:
  struct Morphism {
    ObjId dom, cod;
  };
  using CompEntry = std::array<MorId, 3>;  // g, f, gf

  TableCategory(std::size_t objects, std::vector<Morphism> morphisms,
                std::vector<MorId> identities, const std::vector<CompEntry>& comp);

  ProviderKind kind() const override { return ProviderKind::Table; }
  std::size_t object_count() const override { return n_objects_; }
  std::size_t morphism_count() const override { return mors_.size(); }
  ObjId dom(MorId m) const override;
  ObjId cod(MorId m) const override;
  MorId identity(ObjId x) const override;
  MorId compose(MorId g, MorId f) override;
  std::vector<MorId> hom(ObjId x, ObjId y) override;
  ObjId terminal() override;
  const PullbackData& pullback(MorId f, MorId g) override;
  MorId mediator(const PullbackData& pb, MorId a, MorId b) override;

  std::optional<MorId> lookup(MorId g, MorId f) const;
  std::vector<CompEntry> comp_entries() const;
  const std::vector<MorId>& identities() const { return ids_; }

 private:
  void check_mor(MorId m) const;
  std::size_t n_objects_;
  std::vector<Morphism> mors_;
  std::vector<MorId> ids_;
  std::unordered_map<std::uint64_t, MorId> comp_;
  std::vector<std::vector<MorId>> homs_;
  std::optional<ObjId> terminal_;
  bool terminal_searched_ = false;
  std::map<std::pair<MorId, MorId>, PullbackData> pullbacks_;
  std::map<std::pair<MorId, MorId>, std::map<std::pair<MorId, MorId>, MorId>> mediators_;
};

// Exhaustive universal-property search, smallest apex first. Fills `mediators`
// with the unique factorisation of every commuting cone.
std::optional<PullbackData> search_pullback(
    FinCategory& c, MorId f, MorId g,
    std::map<std::pair<MorId, MorId>, MorId>* mediators = nullptr);

ValidationReport validate_category(FinCategory& c);
// Restricted to the full subcategory on `objects` (computed providers).
ValidationReport validate_category(FinCategory& c, const std::vector<ObjId>& objects);

struct FinFunctor {
  FinCategory* source = nullptr;
  FinCategory* target = nullptr;
  std::vector<ObjId> obj;
  std::vector<MorId> mor;
};

ValidationReport validate_functor(const FinFunctor& f);

}  // namespace pathcat
