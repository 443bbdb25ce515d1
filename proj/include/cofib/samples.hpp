#pragma once

// Random objects and arrows for both carriers, and the sampled property
// checks built on them.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cofib/appendix.hpp"
#include "cofib/automaton.hpp"
#include "cofib/relpcs.hpp"

namespace cofib {

struct RandomShape {
  std::size_t max_states = 5;
  std::size_t max_edges = 8;
  std::string alphabet = "abc";
};

/// Sources and targets are arbitrary subsets, so edges may be relational or dangling.
RelAutomaton random_automaton(std::mt19937_64& rng, const RandomShape& shape = {});

/// A quotient of a brick or of a small tensor of intervals, identifying a few
/// cubes of equal dimension and closing under composition. Always validates.
RelPCS random_pcs(std::mt19937_64& rng, std::size_t n);

/// Configurations for the codiagonal identities on both carriers.
IdentityReport appendix_identity_suite(std::uint64_t seed = 1);

struct EquivalenceSample {
  std::string carrier;
  std::string arrow;
  std::string generator;
  bool unique = false;
  bool with_codiagonal = false;
  bool agrees() const { return unique == with_codiagonal; }
};

/// unique_rlp(p, {i}) against rlp(p, {i, nabla i}) on `per_carrier` pairs per carrier.
std::vector<EquivalenceSample> unique_lift_samples(std::uint64_t seed, std::size_t per_carrier);

struct TwoOfThreeSample {
  std::string carrier;
  std::string description;
  bool f = false, g = false, gf = false;
  bool consistent() const { return !((f && g && !gf) || (gf && g && !f) || (gf && f && !g)); }
};

/// Composable pairs with membership in the class of maps with unique lifts
/// against the carrier's generators.
std::vector<TwoOfThreeSample> two_out_of_three_samples(std::uint64_t seed, std::size_t per_carrier);

}  // namespace cofib
