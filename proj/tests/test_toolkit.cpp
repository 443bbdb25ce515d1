#include "doctest.h"

#include <random>

#include "aut_fixtures.hpp"
#include "cofib/blowup.hpp"
#include "cofib/samples.hpp"
#include "pcs_fixtures.hpp"

using namespace cofib;

namespace {

std::size_t count_homs(const cells::Complex& x, const cells::Complex& y) { return cells::all_morphisms(x, y).size(); }

// Pairs (u : B -> Z, v : C -> Z) agreeing on A, counted directly.
std::size_t compatible_pairs(const AutMorphism& f, const AutMorphism& g, const RelAutomaton& z) {
  std::size_t n = 0;
  for (const auto& u : cells::all_morphisms(f.cod().complex(), z.complex()))
    for (const auto& v : cells::all_morphisms(g.cod().complex(), z.complex()))
      n += cells::compose(f.map, u) == cells::compose(g.map, v);
  return n;
}

}  // namespace

TEST_CASE("coproducts have the universal property") {
  std::mt19937_64 rng(4);
  fixtures::RandomShape small{3, 3, "ab"};
  for (int k = 0; k < 20; ++k) {
    auto x = share(fixtures::random_automaton(rng, small));
    auto y = share(fixtures::random_automaton(rng, small));
    auto z = fixtures::random_automaton(rng, small);
    auto s = coproduct(x, y);
    CHECK(s.left.valid());
    CHECK(s.right.valid());
    CHECK(count_homs(s.object->complex(), z.complex()) ==
          count_homs(x->complex(), z.complex()) * count_homs(y->complex(), z.complex()));
  }
}

TEST_CASE("pushouts have the universal property") {
  std::mt19937_64 rng(8);
  fixtures::RandomShape small{3, 3, "ab"};
  std::size_t checked = 0;
  for (const auto& gen : automata_generators("ab", 1, 1).positive) {
    for (int k = 0; k < 4; ++k) {
      auto c = share(fixtures::random_automaton(rng, small));
      auto maps = cells::all_morphisms(gen.arrow.dom().complex(), c->complex());
      if (maps.empty()) continue;
      AutMorphism g{gen.arrow.source, c, maps.front()};
      auto po = pushout(gen.arrow, g);
      REQUIRE(po.from_b.valid());
      REQUIRE(po.from_c.valid());
      CHECK(cells::compose(gen.arrow.map, po.from_b.map) == cells::compose(g.map, po.from_c.map));
      auto z = fixtures::random_automaton(rng, small);
      CHECK(count_homs(po.object->complex(), z.complex()) == compatible_pairs(gen.arrow, g, z));
      ++checked;
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("codiagonals of isomorphisms and of pcs generators") {
  auto circle = share(fixtures::circle());
  CHECK(codiagonal(identity(circle)).is_iso());
  for (const auto& g : brick_generators(2)) {
    auto nabla = codiagonal(g.arrow);
    CHECK(nabla.valid());
    // B +_A B has exactly one extra copy of the missing cube.
    CHECK(nabla.dom().size() == g.arrow.cod().size() + 1);
    CHECK(codiagonal(nabla).is_iso());
  }
}

TEST_CASE("brick inclusions") {
  for (std::size_t n : {1, 2, 3})
    for (const auto& eps : BrickIndex::all(n))
      for (const auto& w : d_epsilon(eps).elements) {
        auto i = brick_inclusion(eps, w);
        CHECK(i.valid());
        CHECK(cells::is_injective(i.map));
        CHECK(i.map.back() == d_epsilon(eps).index_of(w));
      }
}

TEST_CASE("codiagonal identities") {
  auto report = appendix_identity_suite(1);
  for (const auto& c : report.checks) CHECK_MESSAGE(c.holds, c.identity << ": " << c.sample);
  CHECK(report.checks.size() >= 50);
  for (const char* identity : {"sums", "pushouts", "compositions", "retracts", "double codiagonal"})
    CHECK_MESSAGE(report.count(identity) > 0, identity);
}

TEST_CASE("unique lifting equals lifting against i and its codiagonal") {
  auto samples = unique_lift_samples(3, 60);
  std::size_t unique = 0;
  for (const auto& s : samples) {
    CHECK_MESSAGE(s.agrees(), s.carrier << " " << s.arrow << " vs " << s.generator);
    unique += s.unique;
  }
  CHECK(unique > 0);
  CHECK(unique < samples.size());
}

TEST_CASE("two out of three on sampled composites") {
  auto samples = two_out_of_three_samples(5, 40);
  for (const auto& s : samples)
    CHECK_MESSAGE(s.consistent(), s.carrier << " " << s.description << " f=" << s.f << " g=" << s.g << " gf=" << s.gf);
}
