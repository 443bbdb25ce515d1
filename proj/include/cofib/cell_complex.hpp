#pragma once

// A finite relational structure: cells carrying a sort and marker flags,
// plus keyed binary incidences. Both carriers (precubical sets and automata)
// are views over this representation, so morphism search and colimits are
// written once here.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cofib::cells {

using CellId = std::uint32_t;
using Sort = std::int32_t;
using Kind = std::int32_t;
using Flags = std::uint32_t;

/// Images of the source cells, indexed by source CellId.
using CellMap = std::vector<CellId>;

struct Incidence {
  Kind kind;
  CellId from;
  CellId to;
  auto operator<=>(const Incidence&) const = default;
};

class Complex;

class ComplexBuilder {
 public:
  CellId add_cell(std::string name, Sort sort, Flags flags = 0);
  void add_incidence(Kind kind, CellId from, CellId to);
  void set_flags(CellId cell, Flags flags);
  std::size_t size() const { return names_.size(); }
  Complex build() &&;

 private:
  friend class Complex;
  std::vector<std::string> names_;
  std::vector<Sort> sorts_;
  std::vector<Flags> flags_;
  std::vector<Incidence> incidences_;
};

/// Immutable once built. Names are unique.
class Complex {
 public:
  Complex() = default;

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(CellId c) const { return names_[c]; }
  Sort sort(CellId c) const { return sorts_[c]; }
  Flags flags(CellId c) const { return flags_[c]; }
  std::optional<CellId> find(std::string_view name) const;
  CellId at(std::string_view name) const;

  /// Sorted, duplicate-free.
  const std::vector<Incidence>& incidences() const { return incidences_; }
  bool has(Kind kind, CellId from, CellId to) const;
  /// Targets t with (kind, from, t), sorted by id.
  std::vector<CellId> successors(Kind kind, CellId from) const;
  /// Sources s with (kind, s, to), sorted by id.
  std::vector<CellId> predecessors(Kind kind, CellId to) const;
  /// Incidences leaving / entering a cell, sorted by (kind, other).
  std::span<const std::pair<Kind, CellId>> out_edges(CellId c) const;
  std::span<const std::pair<Kind, CellId>> in_edges(CellId c) const;

  /// Cells sorted by sort descending, then name. Morphism search and every
  /// enumeration order in the library follow this.
  const std::vector<CellId>& canonical_order() const { return order_; }

  ComplexBuilder to_builder() const;

  bool operator==(const Complex& other) const;

 private:
  friend class ComplexBuilder;
  std::vector<std::string> names_;
  std::vector<Sort> sorts_;
  std::vector<Flags> flags_;
  std::vector<Incidence> incidences_;
  std::unordered_map<std::string, CellId> by_name_;
  // CSR adjacency keyed by (kind, other).
  std::vector<std::size_t> out_begin_, in_begin_;
  std::vector<std::pair<Kind, CellId>> out_, in_;
  std::vector<CellId> order_;
};

/// Checks that `map` is a morphism source -> target: sorts equal, flags
/// preserved (source flags are a subset of image flags), incidences preserved.
bool is_morphism(const Complex& source, const Complex& target, const CellMap& map);

bool is_bijective(const CellMap& map, std::size_t target_size);
bool is_injective(const CellMap& map);
bool is_surjective(const CellMap& map, std::size_t target_size);

/// A morphism whose inverse is a morphism as well.
bool is_isomorphism(const Complex& source, const Complex& target, const CellMap& map);

CellMap identity_map(std::size_t size);
/// second o first.
CellMap compose(const CellMap& first, const CellMap& second);

/// Candidate images per source cell, each list in target canonical order.
using Domains = std::vector<std::vector<CellId>>;

/// Every target cell of matching sort whose flags include the source flags.
Domains default_domains(const Complex& source, const Complex& target);

/// Enumerates morphisms source -> target whose images lie in `domains`, by
/// backtracking over source cells in canonical order. Results arrive in
/// lexicographic order of (image of cell 1, image of cell 2, ...) under the
/// target canonical order. `visit` returns false to stop early.
void for_each_morphism(const Complex& source, const Complex& target, const Domains& domains,
                       const std::function<bool(const CellMap&)>& visit);

std::vector<CellMap> all_morphisms(const Complex& source, const Complex& target);
std::vector<CellMap> all_morphisms(const Complex& source, const Complex& target, const Domains& domains);
std::size_t count_morphisms(const Complex& source, const Complex& target, const Domains& domains);

/// Some isomorphism, if one exists.
std::optional<CellMap> find_isomorphism(const Complex& a, const Complex& b);

// Colimits. These glue cells and union incidences; carrier-specific closure
// (lax transitivity for precubical sets) is applied by the caller.

struct Coproduct {
  Complex object;
  CellMap left;
  CellMap right;
};

/// Cells of `a` then cells of `b`. Names from `b` that collide get primes
/// appended until unique.
Coproduct coproduct(const Complex& a, const Complex& b);

struct Quotient {
  Complex object;
  CellMap projection;
};

/// Quotient by the equivalence relation generated by `pairs`. Each class is
/// named after its lowest-id member and ordered by that member. Throws
/// std::invalid_argument when a class mixes sorts. Flags of a class are the
/// union of its members' flags.
Quotient quotient(const Complex& object, std::span<const std::pair<CellId, CellId>> pairs);

struct Pushout {
  Complex object;
  CellMap from_b;
  CellMap from_c;
};

/// Pushout of b <-f- a -g-> c.
Pushout pushout(const Complex& a, const Complex& b, const Complex& c, const CellMap& f, const CellMap& g);

/// The subobject spanned by `keep` (in original order) and its inclusion.
struct Restriction {
  Complex object;
  CellMap inclusion;
};
Restriction restrict_to(const Complex& object, const std::vector<bool>& keep);

/// Renames cells; names must stay unique.
Complex renamed(const Complex& object, const std::vector<std::string>& names);

}  // namespace cofib::cells
