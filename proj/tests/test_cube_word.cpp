#include "doctest.h"

#include <set>

#include "cofib/cube_word.hpp"
#include "cofib/relpcs.hpp"

using namespace cofib;

namespace {

// A coface d^eta_{n,i}: n -> n+1, inserting eta at position i.
struct Coface {
  Sign eta;
  std::size_t i;
};

// Generator sequence of a normal-form word, in order of application.
std::vector<Coface> generators(const CubeWord& w) {
  std::vector<Coface> out;
  for (std::size_t i = 0; i < w.codomain_dim(); ++i)
    if (w.letters()[i] != Sign::zero) out.push_back({w.letters()[i], i});
  return out;
}

// Normalizes a generator sequence with the cubical identity
//   d^{eta'}_{n+1,j} o d^eta_{n,i} = d^eta_{n+1,i} o d^{eta'}_{n,j-1}   (i < j),
// read right-to-left until the positions increase strictly, then reads off the word.
CubeWord rewrite_normalize(std::vector<Coface> seq, std::size_t domain) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
      Coface first = seq[k], second = seq[k + 1];
      if (second.i <= first.i) {
        seq[k] = second;
        seq[k + 1] = {first.eta, first.i + 1};
        changed = true;
      }
    }
  }
  std::vector<Sign> letters(domain + seq.size(), Sign::zero);
  for (const auto& g : seq) letters[g.i] = g.eta;
  return CubeWord(letters);
}

std::vector<CubeWord> words_up_to(std::size_t length) {
  std::vector<CubeWord> out;
  for (std::size_t l = 0; l <= length; ++l)
    for (auto& w : words_of_length(l)) out.push_back(w);
  return out;
}

}  // namespace

TEST_CASE("cube words parse, print and number densely") {
  auto w = CubeWord::parse("+0-");
  CHECK(w.str() == "+0-");
  CHECK(w.codomain_dim() == 3);
  CHECK(w.domain_dim() == 1);
  CHECK(w.degree() == 2);
  CHECK_THROWS_AS(CubeWord::parse("+x"), std::invalid_argument);

  std::int32_t expected = 0;
  for (std::size_t l = 0; l <= 4; ++l) {
    for (const auto& v : words_of_length(l)) {
      CHECK(v.code() == expected);
      CHECK(CubeWord::from_code(expected) == v);
      ++expected;
    }
  }
}

TEST_CASE("compose_words agrees with rewriting by the cubical identity") {
  CHECK(compose_words(CubeWord::parse("+"), CubeWord::parse("0-")).str() == "+-");
  std::size_t checked = 0;
  for (const auto& u : words_up_to(4)) {
    for (const auto& v : words_up_to(4)) {
      if (v.domain_dim() != u.codomain_dim()) continue;
      auto seq = generators(u);
      for (const auto& g : generators(v)) seq.push_back(g);
      CHECK(compose_words(u, v) == rewrite_normalize(seq, u.domain_dim()));
      ++checked;
    }
  }
  CHECK(checked > 100);
  CHECK_THROWS_AS(compose_words(CubeWord::parse("0"), CubeWord::parse("+")), std::invalid_argument);
}

TEST_CASE("compose_words is associative and unital up to total length 5") {
  auto all = words_up_to(5);
  for (const auto& u : all) {
    CHECK(compose_words(CubeWord::identity(u.domain_dim()), u) == u);
    CHECK(compose_words(u, CubeWord::identity(u.codomain_dim())) == u);
    for (const auto& v : all) {
      if (v.domain_dim() != u.codomain_dim()) continue;
      for (const auto& w : all) {
        if (w.domain_dim() != v.codomain_dim()) continue;
        CHECK(compose_words(compose_words(u, v), w) == compose_words(u, compose_words(v, w)));
      }
    }
  }
}

TEST_CASE("D_eps elements and order") {
  auto d = d_epsilon(BrickIndex::parse("11"));
  std::set<std::string> names;
  for (const auto& w : d.elements) names.insert(w.str());
  CHECK(names == std::set<std::string>{"++", "+-", "-+", "--", "+1", "-1", "1+", "1-", "11"});
  CHECK(d.maximum().str() == "11");

  auto d00 = d_epsilon(BrickIndex::parse("00"));
  REQUIRE(d00.elements.size() == 1);
  CHECK(d00.maximum().str() == "00");

  auto d01 = d_epsilon(BrickIndex::parse("01"));
  names.clear();
  for (const auto& w : d01.elements) names.insert(w.str());
  CHECK(names == std::set<std::string>{"0+", "0-", "01"});
  CHECK(d01.maximum().str() == "01");

  auto eps = BrickIndex::parse("11");
  CHECK(DEpsilonElement::parse(eps, "-+").leq(DEpsilonElement::parse(eps, "-1")));
  CHECK(!DEpsilonElement::parse(eps, "-+").leq(DEpsilonElement::parse(eps, "+1")));
  CHECK_THROWS_AS(DEpsilonElement::parse(eps, "0+"), std::invalid_argument);
  CHECK(DEpsilonElement::parse(eps, "-1").projection().str() == "01");
}

TEST_CASE("g_w examples") {
  auto eps = BrickIndex::parse("11");
  CHECK(g_w(eps, DEpsilonElement::parse(eps, "-1")).str() == "+");
  CHECK(g_w(eps, DEpsilonElement::parse(eps, "11")).is_identity());
  CHECK(g_w(eps, DEpsilonElement::parse(eps, "++")).str() == "--");
  CHECK(g_w(BrickIndex::parse("10"), DEpsilonElement::parse(BrickIndex::parse("10"), "+0")).str() == "-0");
}

TEST_CASE("w ->_{g_w} eps in the brick, and these exhaust the coslice of the minimum") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& eps : BrickIndex::all(n)) {
      auto d = d_epsilon(eps);
      auto b = brick(eps);
      const CellId top = static_cast<CellId>(d.elements.size() - 1);
      CHECK(b.name(top) == eps.str());
      std::size_t incoming = 0;
      for (const auto& e : b.complex().incidences()) incoming += e.to == top;
      CHECK(incoming + 1 == d.elements.size());
      for (std::size_t k = 0; k < d.elements.size(); ++k) {
        const auto& w = d.elements[k];
        CHECK(b.name(static_cast<CellId>(k)) == w.str());
        CHECK(b.dim(static_cast<CellId>(k)) == w.cube_dim());
        if (w.is_top()) continue;
        CHECK(b.complex().has(g_w(eps, w).code(), static_cast<CellId>(k), top));
      }
    }
  }
}

TEST_CASE("iota_cell") {
  auto eps = BrickIndex::parse("11");
  auto w = DEpsilonElement::parse(eps, "-1");
  auto p = w.projection();
  CHECK(iota_cell(eps, w, DEpsilonElement::parse(p, "01")).str() == "-1");
  CHECK(iota_cell(eps, w, DEpsilonElement::parse(p, "0+")).str() == "-+");
  auto top = DEpsilonElement::top(eps);
  for (const auto& u : d_epsilon(eps).elements) CHECK(iota_cell(eps, top, u) == u);
}

TEST_CASE("iota_w is a morphism of bricks onto the cells below w") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& eps : BrickIndex::all(n)) {
      auto d = d_epsilon(eps);
      auto big = brick(eps);
      for (const auto& w : d.elements) {
        auto p = w.projection();
        auto dp = d_epsilon(p);
        CHECK(iota_cell(eps, w, dp.maximum()) == w);
        cells::CellMap map;
        std::set<std::size_t> image;
        for (const auto& u : dp.elements) {
          map.push_back(static_cast<CellId>(d.index_of(iota_cell(eps, w, u))));
          image.insert(map.back());
        }
        CHECK(image.size() == dp.elements.size());
        CHECK(cells::is_morphism(brick(p).complex(), big.complex(), map));
        // Image = the elements v <= w.
        for (std::size_t k = 0; k < d.elements.size(); ++k) CHECK(image.count(k) == d.elements[k].leq(w));
      }
    }
  }
}

TEST_CASE("images of iota: disjoint for opposite signs, intersecting in the common lower bound") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& eps : BrickIndex::all(n)) {
      auto d = d_epsilon(eps);
      auto image = [&](const DEpsilonElement& w) {
        std::set<std::string> out;
        for (const auto& u : d_epsilon(w.projection()).elements) out.insert(iota_cell(eps, w, u).str());
        return out;
      };
      for (const auto& w : d.elements) {
        for (const auto& w2 : d.elements) {
          auto a = image(w), b = image(w2);
          std::set<std::string> both;
          for (const auto& s : a)
            if (b.count(s)) both.insert(s);
          auto lower = common_lower_bound(w, w2);
          bool opposite = false;
          for (std::size_t i = 0; i < n; ++i) {
            opposite = opposite || (w[i] == Letter::plus && w2[i] == Letter::minus) ||
                       (w[i] == Letter::minus && w2[i] == Letter::plus);
          }
          CHECK(opposite == !lower.has_value());
          if (lower) CHECK(both == image(*lower));
          else CHECK(both.empty());
        }
      }
    }
  }
}
