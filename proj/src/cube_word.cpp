#include "cofib/cube_word.hpp"

#include <algorithm>
#include <stdexcept>

namespace cofib {

char to_char(Sign s) {
  switch (s) {
    case Sign::zero: return '0';
    case Sign::minus: return '-';
    case Sign::plus: return '+';
  }
  return '?';
}

Sign flip(Sign s) {
  if (s == Sign::minus) return Sign::plus;
  if (s == Sign::plus) return Sign::minus;
  return s;
}

CubeWord CubeWord::parse(std::string_view text) {
  std::vector<Sign> letters;
  letters.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '0': letters.push_back(Sign::zero); break;
      case '-': letters.push_back(Sign::minus); break;
      case '+': letters.push_back(Sign::plus); break;
      default:
        throw std::invalid_argument("cube word: unexpected character '" + std::string(1, c) + "' in \"" +
                                    std::string(text) + "\"");
    }
  }
  return CubeWord(std::move(letters));
}

CubeWord CubeWord::identity(std::size_t dim) { return CubeWord(std::vector<Sign>(dim, Sign::zero)); }

std::size_t CubeWord::domain_dim() const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), Sign::zero));
}

std::int32_t CubeWord::code() const {
  std::int32_t offset = 0;
  std::int32_t power = 1;
  for (std::size_t l = 0; l < letters_.size(); ++l) {
    offset += power;
    power *= 3;
  }
  std::int32_t value = 0;
  for (Sign s : letters_) value = value * 3 + static_cast<std::int32_t>(s);
  return offset + value;
}

CubeWord CubeWord::from_code(std::int32_t code) {
  if (code < 0) throw std::invalid_argument("cube word: negative code");
  std::size_t length = 0;
  std::int32_t block = 1;
  while (code >= block) {
    code -= block;
    block *= 3;
    ++length;
  }
  std::vector<Sign> letters(length, Sign::zero);
  for (std::size_t i = length; i-- > 0;) {
    letters[i] = static_cast<Sign>(code % 3);
    code /= 3;
  }
  return CubeWord(std::move(letters));
}

std::string CubeWord::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Sign s : letters_) out.push_back(to_char(s));
  return out;
}

CubeWord compose_words(const CubeWord& u, const CubeWord& v) {
  if (v.domain_dim() != u.codomain_dim()) {
    throw std::invalid_argument("compose_words: domain of " + v.str() + " does not match codomain of " + u.str());
  }
  std::vector<Sign> out = v.letters();
  std::size_t next = 0;
  for (Sign& s : out) {
    if (s == Sign::zero) s = u.letters()[next++];
  }
  return CubeWord(std::move(out));
}

std::vector<CubeWord> words_of_length(std::size_t length) {
  std::vector<CubeWord> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < length; ++i) total *= 3;
  out.reserve(total);
  for (std::size_t value = 0; value < total; ++value) {
    std::vector<Sign> letters(length);
    std::size_t rest = value;
    for (std::size_t i = length; i-- > 0;) {
      letters[i] = static_cast<Sign>(rest % 3);
      rest /= 3;
    }
    out.emplace_back(std::move(letters));
  }
  return out;
}

BrickIndex BrickIndex::parse(std::string_view text) {
  std::vector<bool> bits;
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("brick index: expected 0/1 string, got \"" + std::string(text) + "\"");
    bits.push_back(c == '1');
  }
  return BrickIndex(std::move(bits));
}

std::vector<BrickIndex> BrickIndex::all(std::size_t n) {
  std::vector<BrickIndex> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<bool> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = (mask >> (n - 1 - i)) & 1U;
    out.emplace_back(std::move(bits));
  }
  return out;
}

std::size_t BrickIndex::codimension() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::string BrickIndex::str() const {
  std::string out;
  for (bool b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

char to_char(Letter l) {
  switch (l) {
    case Letter::zero: return '0';
    case Letter::minus: return '-';
    case Letter::plus: return '+';
    case Letter::one: return '1';
  }
  return '?';
}

namespace {

bool is_sign(Letter l) { return l == Letter::minus || l == Letter::plus; }

Sign star(Letter l) {
  if (l == Letter::plus) return Sign::minus;
  if (l == Letter::minus) return Sign::plus;
  throw std::logic_error("star of a non-sign letter");
}

}  // namespace

DEpsilonElement::DEpsilonElement(BrickIndex eps, std::vector<Letter> letters)
    : eps_(std::move(eps)), letters_(std::move(letters)) {
  if (letters_.size() != eps_.ambient_dim()) {
    throw std::invalid_argument("D_eps element: length mismatch with eps=" + eps_.str());
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if ((letters_[i] == Letter::zero) != !eps_.bit(i)) {
      throw std::invalid_argument("D_eps element " + str() + " is not in D_" + eps_.str());
    }
  }
}

DEpsilonElement DEpsilonElement::parse(const BrickIndex& eps, std::string_view text) {
  std::vector<Letter> letters;
  for (char c : text) {
    switch (c) {
      case '0': letters.push_back(Letter::zero); break;
      case '-': letters.push_back(Letter::minus); break;
      case '+': letters.push_back(Letter::plus); break;
      case '1': letters.push_back(Letter::one); break;
      default: throw std::invalid_argument("D_eps element: bad character in \"" + std::string(text) + "\"");
    }
  }
  return DEpsilonElement(eps, std::move(letters));
}

DEpsilonElement DEpsilonElement::top(const BrickIndex& eps) {
  std::vector<Letter> letters;
  for (bool b : eps.bits()) letters.push_back(b ? Letter::one : Letter::zero);
  return DEpsilonElement(eps, std::move(letters));
}

std::size_t DEpsilonElement::ones() const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), Letter::one));
}

std::size_t DEpsilonElement::signs() const {
  return static_cast<std::size_t>(std::count_if(letters_.begin(), letters_.end(), is_sign));
}

BrickIndex DEpsilonElement::projection() const {
  std::vector<bool> bits;
  for (Letter l : letters_) bits.push_back(l == Letter::one);
  return BrickIndex(std::move(bits));
}

std::optional<DEpsilonElement> DEpsilonElement::meet(const BrickIndex& other) const {
  if (other.ambient_dim() != size()) return std::nullopt;
  std::vector<Letter> letters(size(), Letter::zero);
  for (std::size_t i = 0; i < size(); ++i) {
    if (!other.bit(i)) continue;
    if (letters_[i] == Letter::zero) return std::nullopt;
    letters[i] = letters_[i];
  }
  return DEpsilonElement(other, std::move(letters));
}

bool DEpsilonElement::leq(const DEpsilonElement& other) const {
  if (eps_ != other.eps_) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (letters_[i] == other.letters_[i]) continue;
    if (is_sign(letters_[i]) && other.letters_[i] == Letter::one) continue;
    return false;
  }
  return true;
}

std::string DEpsilonElement::str() const {
  std::string out;
  for (Letter l : letters_) out.push_back(to_char(l));
  return out;
}

std::size_t DEpsilon::index_of(const DEpsilonElement& w) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), w,
                             [](const DEpsilonElement& a, const DEpsilonElement& b) { return a.letters() < b.letters(); });
  if (it == elements.end() || *it != w) throw std::invalid_argument("D_eps: element " + w.str() + " not found");
  return static_cast<std::size_t>(it - elements.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> DEpsilon::strict_order() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (i != j && elements[i].leq(elements[j])) out.emplace_back(i, j);
  return out;
}

DEpsilon d_epsilon(const BrickIndex& eps) {
  DEpsilon out{eps, {}};
  std::vector<std::vector<Letter>> partial{{}};
  for (bool b : eps.bits()) {
    std::vector<std::vector<Letter>> next;
    for (const auto& prefix : partial) {
      if (!b) {
        next.push_back(prefix);
        next.back().push_back(Letter::zero);
        continue;
      }
      for (Letter l : {Letter::minus, Letter::plus, Letter::one}) {
        next.push_back(prefix);
        next.back().push_back(l);
      }
    }
    partial = std::move(next);
  }
  for (auto& letters : partial) out.elements.emplace_back(eps, std::move(letters));
  return out;
}

CubeWord g_w(const BrickIndex& eps, const DEpsilonElement& w) {
  if (w.context() != eps) throw std::invalid_argument("g_w: " + w.str() + " is not an element of D_" + eps.str());
  std::vector<Sign> letters;
  for (Letter l : w.letters()) {
    if (l == Letter::one) continue;
    letters.push_back(l == Letter::zero ? Sign::zero : star(l));
  }
  return CubeWord(std::move(letters));
}

DEpsilonElement iota_cell(const BrickIndex& eps, const DEpsilonElement& w, const DEpsilonElement& u) {
  if (w.context() != eps) throw std::invalid_argument("iota_cell: " + w.str() + " is not an element of D_" + eps.str());
  if (u.context() != w.projection()) {
    throw std::invalid_argument("iota_cell: " + u.str() + " is not an element of D_" + w.projection().str());
  }
  std::vector<Letter> letters(w.size(), Letter::zero);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (is_sign(w[i])) letters[i] = w[i];
    else if (w[i] == Letter::one) letters[i] = u[i];
  }
  return DEpsilonElement(eps, std::move(letters));
}

std::optional<DEpsilonElement> common_lower_bound(const DEpsilonElement& w, const DEpsilonElement& w2) {
  if (w.context() != w2.context()) return std::nullopt;
  std::vector<Letter> letters(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == w2[i]) letters[i] = w[i];
    else if (w[i] == Letter::one) letters[i] = w2[i];
    else if (w2[i] == Letter::one) letters[i] = w[i];
    else return std::nullopt;
  }
  return DEpsilonElement(w.context(), std::move(letters));
}

}  // namespace cofib
