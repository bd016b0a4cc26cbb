#pragma once

#include <optional>
#include <vector>

#include "pathcat/groupoid.hpp"

namespace pathcat {

struct FunctorProperties {
  bool ess_surjective = false;
  bool ess_injective = false;
  bool full = false;
  bool faithful = false;
  bool isofibration = false;
  bool equivalence = false;
  bool bijective_on_objects = false;

  // Strengths used for exponentials: e.s., e.s.e.i., e.s.f.
  bool es() const { return ess_surjective; }
  bool esei() const { return ess_surjective && ess_injective; }
  bool esf() const { return ess_surjective && full; }
  json to_json() const;
};

// `audit` replaces the per-component representative checks for fullness and
// faithfulness by a scan over every pair of objects.
FunctorProperties functor_properties(const FinGroupoid& a, const FinGroupoid& b,
                                     const FunctorMaps& f, bool audit = false);
FunctorProperties functor_properties(const GroupoidFunctor& f, bool audit = false);

bool is_isofibration(const FinGroupoid& a, const FinGroupoid& b, const FunctorMaps& f);
bool is_equivalence(const FinGroupoid& a, const FinGroupoid& b, const FunctorMaps& f);

// Strict fibre of g f over `alpha` mapped into the strict fibre of g.
GroupoidFunctor fiber_over_point(const GroupoidFunctor& f, const GroupoidFunctor& g, int alpha);
// Same without requiring g f to be an isofibration.
GroupoidFunctor induced_on_fibers(const GroupoidFunctor& f, const GroupoidFunctor& g, int alpha);

// Projection A x_C B -> B of the strict pullback of f along g.
GroupoidFunctor pullback_of_functor(const GroupoidFunctor& f, const GroupoidFunctor& g);

// Sub-groupoid on the objects with `keep`, with the inclusion maps.
struct SubGroupoid {
  FinGroupoid sub;
  std::vector<int> objects;  // sub object -> ambient object
  std::vector<int> arrows;   // sub arrow -> ambient arrow
};
SubGroupoid full_subgroupoid(const FinGroupoid& g, const std::vector<char>& keep);

// Objects over `alpha` and arrows over its identity.
SubGroupoid strict_fiber(const GroupoidFunctor& g, int alpha);

std::optional<std::vector<int>> natural_iso_search(const FinGroupoid& a, const FinGroupoid& b,
                                                   const FunctorMaps& f, const FunctorMaps& g);

}  // namespace pathcat
