#pragma once

// Normal forms for morphisms of the cube category, and the combinatorics of
// the posets D_eps indexing the cells of euclidean bricks.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cofib {

enum class Sign : std::uint8_t { zero, minus, plus };

char to_char(Sign s);
Sign flip(Sign s);

/// A morphism m -> m+k of the cube category in normal form.
///
/// Position i of the word is coordinate i of the codomain. Zero letters are the
/// coordinates that carry the domain (in order); a nonzero letter fixes that
/// coordinate to its back (minus) or front (plus) face.
class CubeWord {
 public:
  CubeWord() = default;
  explicit CubeWord(std::vector<Sign> letters) : letters_(std::move(letters)) {}

  /// Parses a string over {+,-,0}. Throws std::invalid_argument otherwise.
  static CubeWord parse(std::string_view text);
  static CubeWord identity(std::size_t dim);
  /// Inverse of code().
  static CubeWord from_code(std::int32_t code);

  const std::vector<Sign>& letters() const { return letters_; }
  std::size_t codomain_dim() const { return letters_.size(); }
  std::size_t domain_dim() const;
  std::size_t degree() const { return codomain_dim() - domain_dim(); }
  bool is_identity() const { return degree() == 0; }

  /// Dense injective numbering of all words: words of length l occupy
  /// [ (3^l - 1)/2, (3^(l+1) - 1)/2 ).
  std::int32_t code() const;
  std::string str() const;

  auto operator<=>(const CubeWord&) const = default;

 private:
  std::vector<Sign> letters_;
};

/// The composite v o u of u: m -> m+k and v: m+k -> m+k+l.
/// Throws std::invalid_argument when domain_dim(v) != codomain_dim(u).
CubeWord compose_words(const CubeWord& u, const CubeWord& v);

/// All words with the given codomain dimension, in code() order.
std::vector<CubeWord> words_of_length(std::size_t length);

class BrickIndex {
 public:
  BrickIndex() = default;
  explicit BrickIndex(std::vector<bool> bits) : bits_(std::move(bits)) {}
  /// Parses a string over {0,1}.
  static BrickIndex parse(std::string_view text);
  /// All indices of the given ambient dimension, in lexicographic order.
  static std::vector<BrickIndex> all(std::size_t n);

  std::size_t ambient_dim() const { return bits_.size(); }
  std::size_t codimension() const;
  /// Dimension n - codim of the minimal cube.
  std::size_t min_dim() const { return ambient_dim() - codimension(); }
  bool bit(std::size_t i) const { return bits_[i]; }
  const std::vector<bool>& bits() const { return bits_; }
  std::string str() const;

  auto operator<=>(const BrickIndex&) const = default;

 private:
  std::vector<bool> bits_;
};

enum class Letter : std::uint8_t { zero, minus, plus, one };

char to_char(Letter l);

/// An element w of D_eps. The ambient index is stored alongside so that
/// membership can be checked locally.
class DEpsilonElement {
 public:
  /// Throws std::invalid_argument unless letters_i == zero iff eps_i == 0.
  DEpsilonElement(BrickIndex eps, std::vector<Letter> letters);
  static DEpsilonElement parse(const BrickIndex& eps, std::string_view text);
  /// The maximum of D_eps, eps itself.
  static DEpsilonElement top(const BrickIndex& eps);

  const BrickIndex& context() const { return eps_; }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::size_t size() const { return letters_.size(); }

  /// Number of coordinates equal to one.
  std::size_t ones() const;
  /// Number of coordinates in {+,-}.
  std::size_t signs() const;
  /// Dimension of the represented cube of B_eps.
  std::size_t cube_dim() const { return size() - ones(); }
  bool is_top() const { return signs() == 0; }

  /// p(w): 0,+,- go to 0 and 1 goes to 1.
  BrickIndex projection() const;
  /// w /\ other, defined when w is nonzero wherever other is 1.
  std::optional<DEpsilonElement> meet(const BrickIndex& other) const;

  /// Pointwise order generated by 0 < +,- < 1.
  bool leq(const DEpsilonElement& other) const;

  std::string str() const;

  auto operator<=>(const DEpsilonElement&) const = default;

 private:
  BrickIndex eps_;
  std::vector<Letter> letters_;
};

/// The finite poset D_eps.
struct DEpsilon {
  BrickIndex eps;
  /// Elements in a fixed canonical order: lexicographic over letters with
  /// zero < minus < plus < one.
  std::vector<DEpsilonElement> elements;

  const DEpsilonElement& maximum() const { return elements.back(); }
  std::size_t index_of(const DEpsilonElement& w) const;
  /// Pairs (i, j) with elements[i] <= elements[j], i != j.
  std::vector<std::pair<std::size_t, std::size_t>> strict_order() const;
};

DEpsilon d_epsilon(const BrickIndex& eps);

/// The word g_w : m -> m+k with w ->_{g_w} eps in B_eps.
CubeWord g_w(const BrickIndex& eps, const DEpsilonElement& w);

/// The image of u in D_{p(w)} under iota_w : B_{p(w)} -> B_eps.
DEpsilonElement iota_cell(const BrickIndex& eps, const DEpsilonElement& w,
                          const DEpsilonElement& u);

/// Largest common lower bound of w and w2 in D_eps, if they are compatible
/// (never + against - at the same coordinate).
std::optional<DEpsilonElement> common_lower_bound(const DEpsilonElement& w,
                                                  const DEpsilonElement& w2);

}  // namespace cofib
