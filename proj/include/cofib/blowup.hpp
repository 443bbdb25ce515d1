#pragma once

// The n-blowup of a relational precubical set and checks of its
// characterising properties.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cofib/relpcs.hpp"

namespace cofib {

/// A cube of the blowup: a morphism f : B_eps -> P.
struct BlowupCube {
  BrickIndex eps;
  /// Images of the cells of B_eps, in D_eps order.
  cells::CellMap map;
};

struct BlowupResult {
  RelPCS blowup;
  /// (eps, f) |-> f(min B_eps).
  cells::CellMap beta;
  /// Indexed by blowup cell.
  std::vector<BlowupCube> provenance;
};

/// Cubes are named "<eps>:<image of each brick cell>". Throws
/// std::invalid_argument when P does not validate.
BlowupResult blowup(const RelPCS& p, std::size_t n);

/// iota_w : B_{p(w)} -> B_eps.
PcsMorphism brick_inclusion(const BrickIndex& eps, const DEpsilonElement& w);

/// The inclusions i_eps : B_eps \ {min} -> B_eps for every eps of length n,
/// named "i_<eps>".
std::vector<Generator<RelPCS>> brick_generators(std::size_t n);

struct BlowupVerification {
  bool blowup_euclidean = false;
  std::optional<CellId> non_euclidean_cube;  // in the blowup
  bool unique_lifting = false;
  std::size_t squares = 0;
  std::optional<LiftingFailure<RelPCS>> lifting_failure;
  bool input_euclidean = false;
  bool beta_isomorphism = false;

  /// (c) only applies to euclidean inputs.
  bool ok() const { return blowup_euclidean && unique_lifting && (!input_euclidean || beta_isomorphism); }
};

BlowupVerification verify_blowup(const RelPCS& p, std::size_t n);

/// B_eps \ {min} against the colimit of w |-> B_{p(w)} over D_eps \ {eps}.
bool brick_colimit_check(const BrickIndex& eps);

}  // namespace cofib
