#include "cofib/regex.hpp"

#include <algorithm>
#include <stdexcept>

namespace cofib {

namespace {

constexpr std::string_view empty_symbol = "\xE2\x88\x85";    // ∅
constexpr std::string_view epsilon_symbol = "\xCE\xB5";      // ε

RegexPtr make(Regex::Kind kind, char symbol = 0, RegexPtr left = nullptr, RegexPtr right = nullptr) {
  return std::make_shared<const Regex>(Regex{kind, symbol, std::move(left), std::move(right)});
}

class Parser {
 public:
  Parser(std::string_view text, ParseOptions options) : text_(text), options_(options) {}

  RegexPtr run() {
    RegexPtr r = alternation();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("regex: " + what + " at offset " + std::to_string(pos_));
  }

  bool at(std::string_view token) const { return text_.substr(pos_, token.size()) == token; }

  bool starts_atom() const {
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c != '|' && c != ')' && c != '*';
  }

  RegexPtr alternation() {
    RegexPtr r = concatenation();
    while (pos_ < text_.size() && text_[pos_] == '|') {
      ++pos_;
      r = rx_alt(r, concatenation());
    }
    return r;
  }

  RegexPtr concatenation() {
    if (!starts_atom()) fail("expected an expression");
    RegexPtr r = postfix();
    while (starts_atom()) r = rx_concat(r, postfix());
    return r;
  }

  RegexPtr postfix() {
    RegexPtr r = atom();
    while (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      r = rx_star(r);
    }
    return r;
  }

  RegexPtr atom() {
    if (at(empty_symbol)) {
      pos_ += empty_symbol.size();
      return rx_empty();
    }
    if (at(epsilon_symbol)) {
      pos_ += epsilon_symbol.size();
      return rx_epsilon();
    }
    const char c = text_[pos_];
    if (options_.ascii && c == '0') {
      ++pos_;
      return rx_empty();
    }
    if (c == '(') {
      ++pos_;
      if (options_.ascii && pos_ < text_.size() && text_[pos_] == ')') {
        ++pos_;
        return rx_epsilon();
      }
      RegexPtr r = alternation();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return r;
    }
    if (static_cast<unsigned char>(c) >= 0x80 || c <= ' ') fail("unsupported character");
    ++pos_;
    return rx_literal(c);
  }

  std::string_view text_;
  ParseOptions options_;
  std::size_t pos_ = 0;
};

// Precedence: 0 alternation, 1 concatenation, 2 star operand.
std::string print(const RegexPtr& r, int context) {
  switch (r->kind) {
    case Regex::Kind::empty: return std::string(empty_symbol);
    case Regex::Kind::epsilon: return std::string(epsilon_symbol);
    case Regex::Kind::literal: return std::string(1, r->symbol);
    case Regex::Kind::alt: {
      std::string s = print(r->left, 0) + "|" + print(r->right, 1);
      return context > 0 ? "(" + s + ")" : s;
    }
    case Regex::Kind::concat: {
      std::string s = print(r->left, 1) + print(r->right, 2);
      return context > 1 ? "(" + s + ")" : s;
    }
    case Regex::Kind::star: return print(r->left, 3) + "*";
  }
  return {};
}

std::set<std::string> concat_upto(const std::set<std::string>& a, const std::set<std::string>& b, std::size_t max) {
  std::set<std::string> out;
  for (const auto& u : a)
    for (const auto& v : b)
      if (u.size() + v.size() <= max) out.insert(u + v);
  return out;
}

// ----------------------------------------------------------------------------
// Compilation

RelAutomaton single_state(bool initial, bool accepting) {
  AutomatonBuilder b;
  b.state("q0", initial, accepting);
  return std::move(b).build();
}

// A copy with the marks of some states changed.
RelAutomaton remarked(const RelAutomaton& a, const std::function<cells::Flags(CellId)>& flags) {
  auto b = a.complex().to_builder();
  for (CellId s : a.states()) b.set_flags(s, flags(s));
  return RelAutomaton(a.alphabet(), std::move(b).build());
}

RelAutomaton normal_form(const RelAutomaton& a) { return canonical_names(normalize(a).automaton); }

std::optional<CellId> unique_initial(const RelAutomaton& a) {
  auto inits = a.initial_states();
  if (inits.empty()) return std::nullopt;
  if (inits.size() > 1) throw std::logic_error("compile: normalized automaton has several initial states");
  return inits.front();
}

// Non-initial accepting states.
std::vector<CellId> final_states(const RelAutomaton& a) {
  std::vector<CellId> out;
  for (CellId s : a.states())
    if (a.is_accepting(s) && !a.is_initial(s)) out.push_back(s);
  return out;
}

RelAutomaton merged(const RelAutomaton& a, const std::vector<std::pair<CellId, CellId>>& pairs) {
  return canonical_names(RelAutomaton(a.alphabet(), cells::quotient(a.complex(), pairs).object));
}

RelAutomaton compile_concat(const RelAutomaton& left, const RelAutomaton& right) {
  const RelAutomaton a = normal_form(left);
  const RelAutomaton b = normal_form(right);
  const auto i = unique_initial(a);
  const auto v = unique_initial(b);
  const bool empty_word_left = i && a.is_accepting(*i);

  // A': no accepting states. B': v is no longer initial.
  RelAutomaton a_prime = remarked(a, [&](CellId s) { return a.complex().flags(s) & ~RelAutomaton::accepting_flag; });
  RelAutomaton b_prime = remarked(b, [&](CellId s) {
    return s == v ? b.complex().flags(s) & ~RelAutomaton::initial_flag : b.complex().flags(s);
  });
  auto sum = cells::coproduct(a_prime.complex(), b_prime.complex());
  RelAutomaton glued(a.alphabet() + b.alphabet(), sum.object);
  std::vector<std::pair<CellId, CellId>> pairs;
  if (v)
    for (CellId x : final_states(a)) pairs.emplace_back(sum.right[*v], sum.left[x]);
  RelAutomaton result = merged(glued, pairs);
  return empty_word_left ? automaton_sum(result, b) : result;
}

RelAutomaton compile_star(const RelAutomaton& inner) {
  const RelAutomaton a = normal_form(inner);
  const auto i = unique_initial(a);
  if (!i) return single_state(true, true);
  std::vector<std::pair<CellId, CellId>> pairs;
  for (CellId x : final_states(a)) pairs.emplace_back(*i, x);
  RelAutomaton looped = merged(a, pairs);
  // The merged class keeps the id of i, the lowest member.
  const CellId centre = *unique_initial(looped);
  return remarked(looped, [&](CellId s) {
    return s == centre ? looped.complex().flags(s) | RelAutomaton::accepting_flag : looped.complex().flags(s);
  });
}

}  // namespace

RegexPtr rx_empty() { return make(Regex::Kind::empty); }
RegexPtr rx_epsilon() { return make(Regex::Kind::epsilon); }
RegexPtr rx_literal(char a) { return make(Regex::Kind::literal, a); }
RegexPtr rx_alt(RegexPtr r, RegexPtr s) { return make(Regex::Kind::alt, 0, std::move(r), std::move(s)); }
RegexPtr rx_concat(RegexPtr r, RegexPtr s) { return make(Regex::Kind::concat, 0, std::move(r), std::move(s)); }
RegexPtr rx_star(RegexPtr r) { return make(Regex::Kind::star, 0, std::move(r)); }

RegexPtr parse_regex(std::string_view text, ParseOptions options) { return Parser(text, options).run(); }

std::string to_string(const RegexPtr& r) { return print(r, 0); }

std::size_t regex_size(const RegexPtr& r) {
  if (!r) return 0;
  return 1 + regex_size(r->left) + regex_size(r->right);
}

std::set<std::string> regex_lang_upto(const RegexPtr& r, std::size_t max_length) {
  switch (r->kind) {
    case Regex::Kind::empty: return {};
    case Regex::Kind::epsilon: return {""};
    case Regex::Kind::literal: return max_length >= 1 ? std::set<std::string>{std::string(1, r->symbol)} : std::set<std::string>{};
    case Regex::Kind::alt: {
      auto out = regex_lang_upto(r->left, max_length);
      out.merge(regex_lang_upto(r->right, max_length));
      return out;
    }
    case Regex::Kind::concat:
      return concat_upto(regex_lang_upto(r->left, max_length), regex_lang_upto(r->right, max_length), max_length);
    case Regex::Kind::star: {
      auto base = regex_lang_upto(r->left, max_length);
      base.erase("");
      std::set<std::string> out{""};
      std::set<std::string> frontier{""};
      while (!frontier.empty()) {
        std::set<std::string> next;
        for (const auto& w : concat_upto(frontier, base, max_length))
          if (out.insert(w).second) next.insert(w);
        frontier = std::move(next);
      }
      return out;
    }
  }
  return {};
}

RelAutomaton compile(const RegexPtr& r) {
  switch (r->kind) {
    case Regex::Kind::empty: return RelAutomaton();
    case Regex::Kind::epsilon: return single_state(true, true);
    case Regex::Kind::literal: return path_automaton(std::string(1, r->symbol));
    case Regex::Kind::alt: return automaton_sum(compile(r->left), compile(r->right));
    case Regex::Kind::concat: return compile_concat(compile(r->left), compile(r->right));
    case Regex::Kind::star: return compile_star(compile(r->left));
  }
  return {};
}

RegexPtr random_regex(std::mt19937_64& rng, std::size_t depth, const std::string& alphabet) {
  auto roll = [&rng](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  if (depth == 0 || roll(4) == 0) {
    int leaf = roll(8);
    if (leaf == 0) return rx_empty();
    if (leaf == 1) return rx_epsilon();
    return rx_literal(alphabet[static_cast<std::size_t>(roll(static_cast<int>(alphabet.size())))]);
  }
  switch (roll(8)) {
    case 0:
    case 1:
    case 2: return rx_alt(random_regex(rng, depth - 1, alphabet), random_regex(rng, depth - 1, alphabet));
    case 3:
    case 4:
    case 5: return rx_concat(random_regex(rng, depth - 1, alphabet), random_regex(rng, depth - 1, alphabet));
    default: return rx_star(random_regex(rng, depth - 1, alphabet));
  }
}

FuzzReport kleene_fuzz(std::uint64_t seed, std::size_t count, std::size_t depth, std::size_t max_length,
                       const std::string& alphabet) {
  std::mt19937_64 rng(seed);
  FuzzReport report;
  for (std::size_t k = 0; k < count; ++k) {
    RegexPtr r = random_regex(rng, depth, alphabet);
    RelAutomaton a = compile(r);
    report.max_states = std::max(report.max_states, a.states().size());
    auto compiled = language_upto(a, max_length);
    auto expected = regex_lang_upto(r, max_length);
    ++report.count;
    if (compiled == expected) continue;
    FuzzMismatch m{to_string(r), {}, false, compiled, expected};
    for (const auto& w : words_upto(alphabet, max_length)) {
      if (compiled.count(w) != expected.count(w)) {
        m.word = w;
        m.in_compiled = compiled.count(w) != 0;
        break;
      }
    }
    report.mismatches.push_back(std::move(m));
  }
  return report;
}

}  // namespace cofib
