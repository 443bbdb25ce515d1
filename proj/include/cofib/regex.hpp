#pragma once

// Regular expressions and their compilation into relational automata by
// coproducts, normalization and quotients.

#include <cstdint>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cofib/automaton.hpp"

namespace cofib {

struct Regex;
using RegexPtr = std::shared_ptr<const Regex>;

struct Regex {
  enum class Kind { empty, epsilon, literal, alt, concat, star };
  Kind kind;
  char symbol = 0;
  RegexPtr left, right;
};

RegexPtr rx_empty();
RegexPtr rx_epsilon();
RegexPtr rx_literal(char a);
RegexPtr rx_alt(RegexPtr r, RegexPtr s);
RegexPtr rx_concat(RegexPtr r, RegexPtr s);
RegexPtr rx_star(RegexPtr r);

struct ParseOptions {
  /// Also accept 0 for the empty language and () for the empty word.
  bool ascii = false;
};

/// Syntax: ∅, ε, single-character literals, |, juxtaposition, postfix *, and
/// parentheses. Throws std::invalid_argument with the offending position.
RegexPtr parse_regex(std::string_view text, ParseOptions options = {});

/// Fully parenthesised where needed; parse_regex(to_string(r)) has the same shape.
std::string to_string(const RegexPtr& r);
std::size_t regex_size(const RegexPtr& r);

/// The words of length at most max_length, by structural recursion.
std::set<std::string> regex_lang_upto(const RegexPtr& r, std::size_t max_length);

RelAutomaton compile(const RegexPtr& r);

struct FuzzMismatch {
  std::string regex;
  std::string word;
  bool in_compiled = false;
  std::set<std::string> compiled, expected;
};

struct FuzzReport {
  std::size_t count = 0;
  std::size_t max_states = 0;
  std::vector<FuzzMismatch> mismatches;
};

/// A random expression with nesting depth at most `depth`.
RegexPtr random_regex(std::mt19937_64& rng, std::size_t depth, const std::string& alphabet);

FuzzReport kleene_fuzz(std::uint64_t seed, std::size_t count, std::size_t depth, std::size_t max_length,
                       const std::string& alphabet = "ab");

}  // namespace cofib
