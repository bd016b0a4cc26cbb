#pragma once

#include <optional>
#include <vector>

#include "pathcat/enrichment.hpp"

namespace pathcat {

// Path object Q of X over Y for a fibration f : X -> Y, built from
// A = Y x_{YxY} PX and the pullback of (s, t) : P_{YxY} PY along (r pi1, Pf pi2).
struct FiberwisePathObject {
  MorId f{};
  PathObjectData PX, PY, PPY;  // PPY: path object of (s, t) : PY -> Y x Y
  MorId Pf{};                  // with (s, t) Pf = (fs, ft), Pf r = r f, Pf a fibration
  PullbackData A;              // Delta against (fs, ft); proj1 : A -> Y, proj2 : A -> PX
  MorId boundary{};            // (r pi1, Pf pi2) : A -> PY x_{YxY} PY
  PullbackData Qpb;            // boundary against (s, t) of PPY; proj1 = (p1, p2)
  MorId p1{}, p2{};
  PathObjectData Q;            // r_Q, s_Q, t_Q over Y
  bool verified = false;       // is_path_object over Y
  json to_json() const;
};

// Throws NoSuitablePf when no Pf with the required properties exists.
FiberwisePathObject construct_fiberwise_path_object(PathStructure& ps, MorId f);

// J : (C/Y)(W, X) -> <h>^*(C/Z)(W, X) for g : Y -> Z, f : X -> Y and h : W -> Y.
struct SliceComparison {
  GroupoidFunctor J;
  FunctorProperties props;
  bool whole_source = false;  // the source fibre is all of (C/Y)(W, X)
  // Per arrow of the target, the reconstructed preimage ((h, H), HH) : W -> Q
  // and the class it receives in (C/Y)(W, X) through the comparison filler.
  struct Witness {
    int target_arrow;
    MorId H, HH, into_Q;
    int source_arrow;  // -1 when the reconstruction failed
  };
  std::vector<Witness> witnesses;
  bool witnesses_ok = true;
  json to_json() const;
};

SliceComparison slice_comparison(PathStructure& ps, MorId g, MorId f, MorId h);

// Pullback square in C/I: W = Y x_Z X with h = proj1 : W -> Y, f = proj2 : W -> X,
// over l : Z -> I. Needs l, k and l g to be fibrations.
struct TransposeInstance {
  MorId l{}, g{}, k{}, v{};
  // Replace the prescribed P_Y W = Y x_Z P_Z X by the default path object of h.
  bool default_path_object = false;
};

struct TransposeIso {
  GroupoidFunctor forward;   // (C/Y)(V, W) -> (C/Z)(V, X), [H] -> [pi2 H]
  GroupoidFunctor backward;  // [K] -> [(v, K)]
  bool iso = false;          // both composites are identities, functor laws hold
  bool coherence = false;    // (Pf) lambda_{(lg)*} ~ lambda_{l*} pi2 over X x_I X
  CommutationCertificate square;
  PathObjectData PW;  // the path object of W over Y in use
  json to_json() const;
};

TransposeIso transpose_hom_iso(PathStructure& ps, const TransposeInstance& in);

}  // namespace pathcat
