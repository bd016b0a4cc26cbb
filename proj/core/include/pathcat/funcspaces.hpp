#pragma once

#include <optional>
#include <vector>

#include "pathcat/enrichment.hpp"

namespace pathcat {

// Properties of the induced functor for one test object (or test map T -> J).
struct TestRecord {
  ObjId T{};
  std::optional<MorId> over;  // the map T -> J for Pi-types
  FunctorProperties props;
  json to_json() const;
};

struct StrengthVerdict {
  bool weak = true, ordinary = true, strong = true;
  std::vector<TestRecord> tests;
  // First failing test per strength, null when none fails.
  json witness_weak, witness_ordinary, witness_strong;
  bool faithful() const;
  json to_json() const;
};

// The functor C(T, E) -> C(T x X, Y) assembled from the extension of - x X
// and whiskering by the evaluation.
GroupoidFunctor exponential_functor(Enrichment& e, const ExponentialCandidate& cand, ObjId t);

StrengthVerdict check_exponential(PathStructure& ps, const ExponentialCandidate& cand);
StrengthVerdict check_exponential(Enrichment& e, const ExponentialCandidate& cand);
StrengthVerdict check_pi_type(PathStructure& ps, const PiCandidate& cand);

// The trivial Pi-type of f along the identity of its base.
PiCandidate identity_pi(PathStructure& ps, MorId f);

enum class TransportPosition { DomainOfE, CodomainY, ArgumentX };

ExponentialCandidate transport_along_weak_equivalence(PathStructure& ps,
                                                      const ExponentialCandidate& cand, MorId h,
                                                      TransportPosition position);

struct ExponentialOverFibration {
  ExponentialCandidate exp;  // (Y^X, eps_Y)
  MorId p_exp{};             // p^X : Y^X -> Z^X
  PullbackData Q;            // pullback of p along eps_Z; proj1 = q, proj2 = e
  PiCandidate pi;            // Pi of q along pi_1 : Z^X x X -> Z^X
  MorId eval_q{};            // Y^X x X -> Q
  bool square_commutes = false;
  json to_json() const;
};

ExponentialOverFibration construct_exponential_over_fibration(PathStructure& ps, MorId p,
                                                              const ExponentialCandidate& base);

struct PiOverFibration {
  PiCandidate out;  // Pi_f X
  MorId pi_p{};     // Pi_f p : Pi_f X -> Pi_f Y
  PullbackData Q;
  PiCandidate inner;
  bool square_commutes = false;
  json to_json() const;
};

// f : I -> J, p : X -> Y with base_pi a Pi-type for Y -> I along f.
PiOverFibration construct_pi_over_fibration(PathStructure& ps, MorId f, MorId p,
                                            const PiCandidate& base_pi);

PiCandidate compose_pi_horizontal(PathStructure& ps, MorId f, MorId g, MorId h);

struct FunextData {
  ExponentialCandidate pair;  // (Y^X x Y^X, eps_{Y x Y})
  ExponentialOverFibration path;  // ((PY)^X, eps_PY) with p^X = (s^X, t^X)
  MorId rX{};
  MorId phi{};
  PathObjectData PE;  // path object of Y^X
  bool st_square = false;         // (s, t) eps_PY = eps_{YxY} ((s^X, t^X) x 1)
  bool r_homotopy = false;        // eps_PY (r^X x 1) ~ r eps_Y over Y x Y
  bool product_path_object = false;  // PY x PY is a path object of Y x Y
  json to_json() const;
};

FunextData build_funext_comparison(PathStructure& ps, const ExponentialCandidate& cand);

struct FunextVerdict {
  bool strong = false;
  bool phi_weak_equivalence = false;
  std::optional<bool> phi_homotopy_equivalence;  // when the scan fits the caps
  bool agree = false;
  std::optional<bool> fully_faithful;  // only when strong
  json to_json() const;
};

FunextVerdict check_funext(PathStructure& ps, const ExponentialCandidate& cand,
                           const FunextData& fd, bool exhaustive_phi = false);

struct UpgradeReport {
  bool strong = false;
  std::optional<MorId> connecting;  // h with eps (h x 1) ~ eps~
  json to_json() const;
};

UpgradeReport verify_ordinary_upgrade(PathStructure& ps, const ExponentialCandidate& strong_cand,
                                      const ExponentialCandidate& ordinary_cand);

}  // namespace pathcat
