#include "doctest.h"

#include <random>

#include "aut_fixtures.hpp"
#include "cofib/automaton.hpp"

using namespace cofib;

namespace {

std::set<std::string> as_set(std::initializer_list<const char*> words) {
  std::set<std::string> out;
  for (const char* w : words) out.insert(w);
  return out;
}

// w is accepted iff the path automaton of w maps into A.
std::set<std::string> language_by_paths(const RelAutomaton& a, std::size_t max_length) {
  std::set<std::string> out;
  for (const auto& w : words_upto(a.alphabet(), max_length)) {
    auto path = path_automaton(w);
    bool found = false;
    cells::for_each_morphism(path.complex(), a.complex(), cells::default_domains(path.complex(), a.complex()),
                             [&](const cells::CellMap&) {
                               found = true;
                               return false;
                             });
    if (found) out.insert(w);
  }
  return out;
}

std::size_t hom_count(const RelAutomaton& x, const RelAutomaton& y) {
  return cells::all_morphisms(x.complex(), y.complex()).size();
}

std::vector<std::string> names_of(const std::vector<Generator<RelAutomaton>>& gens) {
  std::vector<std::string> out;
  for (const auto& g : gens) out.push_back(g.name);
  return out;
}

}  // namespace

TEST_CASE("language examples") {
  CHECK(language_upto(fixtures::ab_loops(), 2) == as_set({"", "a", "b", "aa", "ab", "ba", "bb"}));
  CHECK(language_upto(path_automaton("ab"), 3) == as_set({"ab"}));
  CHECK(language_upto(path_automaton(""), 3) == as_set({""}));

  AutomatonBuilder b("a");
  auto s = b.state("s", true, false);
  auto t = b.state("t", false, true);
  b.edge('a', std::vector<CellId>{}, std::vector<CellId>{t});
  (void)s;
  CHECK(language_upto(std::move(b).build(), 3).empty());
  CHECK(language_upto(RelAutomaton(), 3).empty());
}

TEST_CASE("language agrees with morphisms from path automata") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 60; ++k) {
    auto a = fixtures::random_automaton(rng);
    CHECK(language_upto(a, 4) == language_by_paths(a, 4));
  }
}

TEST_CASE("generators") {
  auto set = automata_generators("a", 1, 1);
  CHECK(names_of(set.positive) ==
        std::vector<std::string>{"i_odot", "i_oast", "i_to(a)", "i_s(a)", "i_otimes(a)", "i_{1,1}(a;a)"});
  CHECK(set.codiagonals.size() == set.positive.size());
  for (const auto& g : set.all()) CHECK_MESSAGE(g.arrow.valid(), g.name);

  CHECK(automata_generators("ab", 2, 1).positive.size() == 2 + 3 * 2 + (2 + 3) * 2);

  CHECK(codiagonal(gen_source('a').arrow).is_iso());
  CHECK(codiagonal(gen_edge('a').arrow).is_iso() == false);

  auto nabla = codiagonal(gen_accepting_target('a').arrow);
  const auto& dom = nabla.dom();
  REQUIRE(dom.edges().size() == 1);
  CHECK(dom.states().size() == 2);
  CHECK(dom.targets(dom.edges().front()).size() == 2);
  for (CellId s : dom.states()) CHECK(dom.is_accepting(s));
  CHECK(nabla.cod().states().size() == 1);
  CHECK(nabla.cod().edges().size() == 1);

  for (const auto& g : set.positive) CHECK_MESSAGE(codiagonal(codiagonal(g.arrow)).is_iso(), g.name);
}

TEST_CASE("cofibrant replacement examples") {
  auto loops = fixtures::ab_loops();
  auto r = cofibrant_replacement(loops);
  CHECK(r.object.states().size() == 4);
  CHECK(r.object.edges().size() == 2);
  for (const char* name : {"init(v)", "int(v)", "acc(a,v)", "acc(b,v)"}) CHECK(r.object.complex().find(name));
  CHECK(language_upto(r.object, 5) == language_upto(loops, 5));
  CHECK(replay(r.certificate) == r.object);

  auto path = path_automaton("a");
  CHECK(isomorphic(cofibrant_replacement(path).object, path));

  AutomatonBuilder b("a");
  auto i = b.state("i", true, false);
  auto f = b.state("f", false, true);
  b.state("lonely");
  b.edge('a', std::vector<CellId>{i}, std::vector<CellId>{f});
  auto with_isolated = std::move(b).build();
  auto ri = cofibrant_replacement(with_isolated);
  for (CellId s : ri.object.states()) CHECK(ri.beta[s] != with_isolated.at("lonely"));
}

TEST_CASE("replacement invariants on random automata") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 80; ++k) {
    auto a = fixtures::random_automaton(rng);
    Replacement r;
    REQUIRE_NOTHROW(r = cofibrant_replacement(a));
    CHECK(r.object.edges().size() == a.edges().size());

    std::size_t expected = a.initial_states().size();
    for (CellId e : a.edges())
      for (CellId v : a.targets(e)) expected += a.is_accepting(v);
    for (CellId v : a.states()) expected += !a.in_edges(v).empty() && !a.out_edges(v).empty();
    CHECK(r.object.states().size() == expected);

    CHECK(check_conditions(r.object).ok);
    CHECK(language_upto(r.object, 5) == language_upto(a, 5));
    CHECK(replay(r.certificate) == r.object);
    AutMorphism beta{share(r.object), share(a), r.beta};
    CHECK(beta.valid());
    CHECK(automata_unique_rlp(beta).holds);
    CHECK(isomorphic(cofibrant_replacement(r.object).object, r.object));
  }
}

TEST_CASE("unique lifting of identities and of a non-fibration") {
  auto loops = share(fixtures::ab_loops());
  auto id = identity(loops);
  CHECK(unique_rlp(id, automata_generators("ab", 2, 2)).holds);

  // Forgetting the int copy: the replacement minus int(v) does not lift i_{1,1}.
  auto r = cofibrant_replacement(*loops);
  std::vector<bool> keep(r.object.size(), true);
  keep[r.object.at("int(v)")] = false;
  auto part = cells::restrict_to(r.object.complex(), keep);
  AutMorphism p{share(RelAutomaton(r.object.alphabet(), part.object)), loops, cells::compose(part.inclusion, r.beta)};
  auto report = unique_rlp(p, generators_for(p));
  CHECK(!report.holds);
  REQUIRE(report.failure);
  CHECK(report.failure->generator.rfind("i_{", 0) == 0);
  CHECK(report.failure->lifts == 0);
}

TEST_CASE("the reduced star check agrees with the full generator family") {
  std::mt19937_64 rng(77);
  fixtures::RandomShape small{3, 3, "ab"};
  std::size_t compared = 0, failing = 0;
  for (int k = 0; k < 40; ++k) {
    auto x = share(fixtures::random_automaton(rng, small));
    auto y = share(fixtures::random_automaton(rng, small));
    for (auto& map : cells::all_morphisms(x->complex(), y->complex())) {
      AutMorphism p{x, y, map};
      bool reduced = automata_unique_rlp(p).holds;
      CHECK(reduced == unique_rlp(p, generators_for(p)).holds);
      ++compared;
      failing += !reduced;
      if (compared > 300) break;
    }
    auto r = cofibrant_replacement(*y, false);
    AutMorphism beta{share(r.object), y, r.beta};
    CHECK(automata_unique_rlp(beta).holds == unique_rlp(beta, generators_for(beta)).holds);
  }
  CHECK(compared > 20);
  CHECK(failing > 0);
}

TEST_CASE("deter") {
  auto path = path_automaton("ab");
  CHECK(isomorphic(deter(path), path));

  AutomatonBuilder b("ab");
  auto p = b.state("p", true, false);
  auto q = b.state("q", false, true);
  auto r = b.state("r", false, true);
  b.edge('a', std::vector<CellId>{}, std::vector<CellId>{q});
  b.edge('b', std::vector<CellId>{p}, std::vector<CellId>{q, r});
  auto rel = std::move(b).build();
  auto d = deter(rel);
  CHECK(d.states().size() == 3);
  CHECK(d.edges().size() == 2);
  CHECK(d.is_deterministic_shape());

  std::mt19937_64 rng(5);
  fixtures::RandomShape small{4, 4, "ab"};
  std::vector<RelAutomaton> relational, plain;
  for (int k = 0; k < 12; ++k) relational.push_back(fixtures::random_automaton(rng, small));
  for (int k = 0; k < 12; ++k) {
    auto h = deter(fixtures::random_automaton(rng, small));
    plain.push_back(h);
  }
  for (const auto& h : plain) {
    CHECK(h.is_deterministic_shape());
    for (const auto& g : relational) CHECK(hom_count(h, deter(g)) == hom_count(h, g));
  }
}

TEST_CASE("normalize") {
  auto n = normalize(fixtures::a_loop());
  CHECK(!n.warning);
  CHECK(language_upto(n.automaton, 3) == as_set({"", "a", "aa", "aaa"}));
  CHECK(n.automaton.initial_states().size() == 1);
  CHECK(n.automaton.is_deterministic_shape());
  CHECK(check_conditions(n.automaton).ok);

  auto path = path_automaton("ab");
  CHECK(isomorphic(normalize(path).automaton, path));

  AutomatonBuilder b("ab");
  auto i1 = b.state("i1", true, false);
  auto i2 = b.state("i2", true, false);
  auto t1 = b.state("t1", false, true);
  auto t2 = b.state("t2", false, true);
  b.edge('a', std::vector<CellId>{i1}, std::vector<CellId>{t1});
  b.edge('b', std::vector<CellId>{i2}, std::vector<CellId>{t2});
  auto two = std::move(b).build();
  auto nt = normalize(two).automaton;
  REQUIRE(nt.initial_states().size() == 1);
  CHECK(nt.out_edges(nt.initial_states().front()).size() == 2);
  CHECK(language_upto(nt, 3) == as_set({"a", "b"}));

  AutomatonBuilder none("a");
  none.state("x", false, true);
  auto lost = normalize(std::move(none).build());
  CHECK(lost.warning);
  CHECK(lost.automaton.states().size() == 1);
}

TEST_CASE("conditions") {
  auto loops = fixtures::ab_loops();
  auto report = check_conditions(loops);
  CHECK(!report.ok);
  CHECK(report.condition == 1);
  REQUIRE(report.witness);
  CHECK(report.witness->first == "v");
  CHECK(check_conditions(RelAutomaton()).ok);

  AutomatonBuilder b("a");
  auto i = b.state("i", true, false);
  auto t = b.state("t", false, true);
  b.edge('a', std::vector<CellId>{i}, std::vector<CellId>{t});
  b.edge('a', std::vector<CellId>{t}, std::vector<CellId>{t}, "loop");
  auto second = check_conditions(std::move(b).build());
  CHECK(second.condition == 2);
}
