#pragma once

// Automata shared by the unit and acceptance tests.

#include <random>
#include <string>
#include <vector>

#include "cofib/automaton.hpp"
#include "cofib/samples.hpp"

namespace fixtures {

// One state, initial and accepting, with an a-loop and a b-loop.
inline cofib::RelAutomaton ab_loops() {
  cofib::AutomatonBuilder b("ab");
  auto v = b.state("v", true, true);
  b.edge('a', std::vector<cofib::CellId>{v}, std::vector<cofib::CellId>{v}, "a");
  b.edge('b', std::vector<cofib::CellId>{v}, std::vector<cofib::CellId>{v}, "b");
  return std::move(b).build();
}

inline cofib::RelAutomaton a_loop() {
  cofib::AutomatonBuilder b("a");
  auto v = b.state("v", true, true);
  b.edge('a', std::vector<cofib::CellId>{v}, std::vector<cofib::CellId>{v});
  return std::move(b).build();
}

using cofib::RandomShape;

inline cofib::RelAutomaton random_automaton(std::mt19937_64& rng, const RandomShape& shape = {}) {
  return cofib::random_automaton(rng, shape);
}

}  // namespace fixtures
