#include "doctest.h"

#include <algorithm>
#include <set>

#include "cofib/relpcs.hpp"
#include "pcs_fixtures.hpp"

using namespace cofib;

namespace {

// Every assignment of cells, filtered by the morphism conditions.
std::size_t naive_hom_count(const RelPCS& x, const RelPCS& y) {
  std::size_t count = 0;
  cells::CellMap map(x.size(), 0);
  if (x.size() == 0) return 1;
  if (y.size() == 0) return 0;
  while (true) {
    bool ok = true;
    for (CellId c = 0; c < x.size() && ok; ++c) ok = x.dim(c) == y.dim(map[c]);
    for (const auto& [a, g, b] : x.relations()) {
      if (!ok) break;
      auto faces = y.faces(map[a], g);
      ok = std::find(faces.begin(), faces.end(), map[b]) != faces.end();
    }
    count += ok;
    std::size_t k = 0;
    while (k < map.size() && ++map[k] == y.size()) map[k++] = 0;
    if (k == map.size()) break;
  }
  return count;
}

std::vector<std::size_t> counts_of(const RelPCS& p) {
  auto c = p.counts();
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return c;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(brick(BrickIndex::parse("11"))).ok);
  CHECK(validate(fixtures::torus()).ok);

  auto broken = PcsBuilder(2)
                    .cube("a", 2)
                    .cube("b", 1)
                    .cube("c", 0)
                    .face("a", "0-", "b")
                    .face("b", "-", "c")
                    .raw();
  auto report = validate(broken);
  CHECK(!report.ok);
  REQUIRE(report.violation);
  CHECK(*report.violation == std::make_tuple(std::string("a"), std::string("--"), std::string("c")));
  CHECK(validate(saturate(broken)).ok);

  auto misgraded = PcsBuilder(1).cube("a", 1).cube("b", 1).face("a", "-", "b").raw();
  CHECK(!validate(misgraded).ok);

  CHECK_THROWS_AS(PcsBuilder(1).cube("a", 1).face("a", "0", "a"), std::invalid_argument);
  CHECK_THROWS_AS(PcsBuilder(1).cube("a", 1).face("a", "-+", "a"), std::invalid_argument);
  CHECK_THROWS_AS(PcsBuilder(1).cube("a", 1).face("a", "-", "z").raw(), std::invalid_argument);

  for (const auto& f : fixtures::corpus()) CHECK_MESSAGE(validate(f.object).ok, f.name);
}

TEST_CASE("tensor products") {
  auto square = tensor(interval_v0(), interval_v0());
  CHECK(counts_of(square) == std::vector<std::size_t>{4, 4, 1});
  CHECK(validate(square).ok);

  auto big = tensor(interval_v1(), interval_v1());
  CHECK(counts_of(big) == std::vector<std::size_t>{9, 12, 4});
  CHECK(validate(big).ok);

  CHECK(tensor(square, RelPCS()).size() == 0);

  auto corpus = fixtures::corpus();
  for (std::size_t i = 0; i < corpus.size(); i += 3)
    for (std::size_t j = 0; j < corpus.size(); j += 5)
      CHECK(validate(tensor(corpus[i].object, corpus[j].object)).ok);
}

TEST_CASE("upward neighbourhoods") {
  auto square = tensor(interval_v0(), interval_v0());
  auto top = square.cubes(2).front();
  auto up = upward(square, top);
  CHECK(up.object.size() == 1);

  auto big = tensor(interval_v1(), interval_v1());
  auto centre = big.at("(m,m)");
  auto b11 = upward(big, centre);
  CHECK(counts_of(b11.object) == std::vector<std::size_t>{1, 4, 4});
  CHECK(isomorphic(b11.object, brick(BrickIndex::parse("11"))));
  CHECK(cells::is_morphism(b11.object.complex(), big.complex(), b11.projection));

  auto c = fixtures::circle();
  auto around_v = upward(c, c.at("v"));
  CHECK(around_v.object.size() == 3);
  std::set<std::string> names;
  for (CellId k = 0; k < around_v.object.size(); ++k) names.insert(around_v.object.name(k));
  CHECK(names == std::set<std::string>{"(v,)", "(e,-)", "(e,+)"});
  CHECK(isomorphic(around_v.object, brick(BrickIndex::parse("1"))));
}

TEST_CASE("bricks") {
  CHECK(counts_of(brick(BrickIndex::parse("00"))) == std::vector<std::size_t>{0, 0, 1});
  CHECK(counts_of(brick(BrickIndex::parse("11"))) == std::vector<std::size_t>{1, 4, 4});
  CHECK(counts_of(brick(BrickIndex::parse("10"))) == std::vector<std::size_t>{0, 1, 2});
  for (std::size_t n = 0; n <= 3; ++n)
    for (const auto& eps : BrickIndex::all(n)) CHECK(brick(eps).size() == d_epsilon(eps).elements.size());
}

TEST_CASE("hom enumeration") {
  auto x = fixtures::torus();
  for (const auto& eps : BrickIndex::all(2)) CHECK(hom_enumerate(brick(eps), x).size() == 1);
  CHECK(hom_enumerate(PcsBuilder(2).cube("c", 2).closed(), RelPCS()).empty());
  CHECK(hom_enumerate(brick(BrickIndex::parse("1")), interval_v0()).empty());

  auto corpus = fixtures::corpus();
  std::size_t compared = 0;
  for (const auto& a : corpus) {
    if (a.object.size() > 6) continue;
    for (const auto& b : corpus) {
      if (b.object.size() > 6 || a.object.size() > 4) continue;
      auto homs = hom_enumerate(a.object, b.object);
      CHECK(homs.size() == naive_hom_count(a.object, b.object));
      for (const auto& h : homs) CHECK(cells::is_morphism(a.object.complex(), b.object.complex(), h));
      ++compared;
    }
  }
  CHECK(compared > 100);

  // Composites of enumerated morphisms are morphisms.
  for (const auto& a : corpus) {
    if (a.object.size() > 4) continue;
    for (const auto& b : corpus) {
      if (b.object.size() > 4) continue;
      for (const auto& c : corpus) {
        if (c.object.size() > 4) continue;
        for (const auto& f : hom_enumerate(a.object, b.object))
          for (const auto& g : hom_enumerate(b.object, c.object))
            CHECK(cells::is_morphism(a.object.complex(), c.object.complex(), cells::compose(f, g)));
      }
    }
  }
}

TEST_CASE("local embeddings") {
  for (const auto& f : fixtures::corpus())
    CHECK(is_local_embedding(f.object, f.object, cells::identity_map(f.object.size())).ok);

  // The centre 11 is the [+]-face of both -1 and 1-, so identifying them is
  // not a local embedding.
  auto b = brick(BrickIndex::parse("11"));
  auto q = cells::quotient(b.complex(), std::vector<std::pair<CellId, CellId>>{{b.at("-1"), b.at("1-")}});
  RelPCS merged = saturate(RelPCS(2, q.object));
  auto report = is_local_embedding(b, merged, q.projection);
  CHECK(!report.ok);
  REQUIRE(report.witness);
  auto [x, y, w, c] = *report.witness;
  CHECK(std::set<std::string>{b.name(x), b.name(y)} == std::set<std::string>{"-1", "1-"});
  CHECK(w.str() == "+");
  CHECK(b.name(c) == "11");
}

TEST_CASE("euclidean check") {
  auto circle = euclidean_check(fixtures::circle(), 1);
  CHECK(circle.euclidean);
  CHECK(circle.charts.size() == 2);

  auto y = fixtures::y_graph();
  auto report = euclidean_check(y, 1);
  CHECK(!report.euclidean);
  REQUIRE(report.counterexample);
  CHECK(y.name(*report.counterexample) == "v");

  for (const auto& f : fixtures::corpus()) {
    if (!f.euclidean) continue;
    CHECK_MESSAGE(euclidean_check(f.object, f.n).euclidean == *f.euclidean, f.name);
  }

  // Punctured bricks: every remaining cube has a chart.
  for (std::size_t n = 1; n <= 2; ++n) {
    for (const auto& eps : BrickIndex::all(n)) {
      auto whole = brick(eps);
      std::vector<bool> keep(whole.size(), true);
      keep.back() = false;
      RelPCS punctured(n, cells::restrict_to(whole.complex(), keep).object);
      CHECK_MESSAGE(euclidean_check(punctured, n).euclidean, eps.str());
    }
  }
}
