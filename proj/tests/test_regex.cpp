#include "doctest.h"

#include "cofib/regex.hpp"

using namespace cofib;

namespace {

std::set<std::string> as_set(std::initializer_list<const char*> words) {
  std::set<std::string> out;
  for (const char* w : words) out.insert(w);
  return out;
}

std::set<std::string> compiled(std::string_view text, std::size_t max_length) {
  return language_upto(compile(parse_regex(text)), max_length);
}

}  // namespace

TEST_CASE("parsing") {
  auto r = parse_regex("(a|b)*a");
  CHECK(r->kind == Regex::Kind::concat);
  CHECK(r->left->kind == Regex::Kind::star);
  CHECK(to_string(r) == "(a|b)*a");
  CHECK(parse_regex("∅")->kind == Regex::Kind::empty);
  CHECK(parse_regex("ε")->kind == Regex::Kind::epsilon);
  CHECK(parse_regex("0", {true})->kind == Regex::Kind::empty);
  CHECK(parse_regex("()", {true})->kind == Regex::Kind::epsilon);
  CHECK(parse_regex("0")->kind == Regex::Kind::literal);
  CHECK_THROWS_AS(parse_regex("()"), std::invalid_argument);
  CHECK_THROWS_AS(parse_regex("a|"), std::invalid_argument);
  CHECK_THROWS_AS(parse_regex("(a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_regex("*"), std::invalid_argument);
  CHECK_THROWS_AS(parse_regex("a b"), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    auto x = random_regex(rng, 4, "ab");
    CHECK(to_string(parse_regex(to_string(x))) == to_string(x));
  }
}

TEST_CASE("oracle semantics") {
  CHECK(regex_lang_upto(parse_regex("a|b"), 1) == as_set({"a", "b"}));
  CHECK(regex_lang_upto(parse_regex("(ab)*"), 4) == as_set({"", "ab", "abab"}));
  CHECK(regex_lang_upto(parse_regex("(a|b)*a"), 2) == as_set({"a", "aa", "ba"}));
  CHECK(regex_lang_upto(parse_regex("∅*"), 3) == as_set({""}));
}

TEST_CASE("compilation examples") {
  CHECK(compiled("a*b*", 3) == as_set({"", "a", "b", "aa", "ab", "bb", "aaa", "aab", "abb", "bbb"}));
  CHECK(compiled("a*b*", 2).count("ba") == 0);
  CHECK(compiled("∅*", 4) == as_set({""}));
  CHECK(compiled("a", 2) == as_set({"a"}));
  CHECK(compiled("∅", 3).empty());
  CHECK(compiled("ε", 3) == as_set({""}));
  CHECK(compiled("(a*)*", 4) == regex_lang_upto(parse_regex("(a*)*"), 4));
  // Left side without a nonempty word: the concatenation is empty.
  CHECK(compiled("∅b", 3).empty());
  CHECK(compiled("εb", 3) == as_set({"b"}));
  CHECK(compiled("(ε|∅)b*", 3) == as_set({"", "b", "bb", "bbb"}));
}

TEST_CASE("compiled automata after normalization satisfy the conditions") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 60; ++k) {
    auto r = random_regex(rng, 3, "ab");
    auto n = normalize(compile(r));
    if (n.warning) continue;
    CHECK(n.automaton.initial_states().size() == 1);
    CHECK(check_conditions(n.automaton).ok);
    CHECK(language_upto(n.automaton, 5) == regex_lang_upto(r, 5));
  }
}

TEST_CASE("fuzzing small depths and a fixed seed") {
  auto shallow = kleene_fuzz(1, 50, 0, 4);
  CHECK(shallow.mismatches.empty());
  auto report = kleene_fuzz(7, 60, 4, 6);
  CHECK(report.count == 60);
  CHECK(report.mismatches.empty());
}
