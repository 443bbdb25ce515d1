#pragma once

// Relational automata: labelled graphs whose edges have any number of
// sources and targets, with initial and accepting states.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cofib/cell_complex.hpp"
#include "cofib/toolkit.hpp"

namespace cofib {

using cells::CellId;

/// Encoding: states have sort 0 and flags initial/accepting; an edge labelled
/// a has sort 1 + a; incidence kinds link an edge to its sources and targets.
/// Labels are single characters.
class RelAutomaton {
 public:
  static constexpr cells::Flags initial_flag = 1;
  static constexpr cells::Flags accepting_flag = 2;
  static constexpr cells::Kind source_kind = 0;
  static constexpr cells::Kind target_kind = 1;

  RelAutomaton() = default;
  /// `alphabet` is sorted and deduplicated.
  RelAutomaton(std::string alphabet, cells::Complex complex);

  const std::string& alphabet() const { return alphabet_; }
  const cells::Complex& complex() const { return complex_; }
  std::size_t size() const { return complex_.size(); }
  const std::string& name(CellId c) const { return complex_.name(c); }
  CellId at(std::string_view name) const { return complex_.at(name); }

  bool is_state(CellId c) const { return complex_.sort(c) == 0; }
  bool is_edge(CellId c) const { return complex_.sort(c) != 0; }
  char label(CellId e) const { return static_cast<char>(complex_.sort(e) - 1); }
  bool is_initial(CellId s) const { return (complex_.flags(s) & initial_flag) != 0; }
  bool is_accepting(CellId s) const { return (complex_.flags(s) & accepting_flag) != 0; }

  /// States and edges in id order.
  const std::vector<CellId>& states() const { return states_; }
  const std::vector<CellId>& edges() const { return edges_; }
  std::vector<CellId> initial_states() const;
  std::vector<CellId> accepting_states() const;

  std::vector<CellId> sources(CellId e) const { return complex_.successors(source_kind, e); }
  std::vector<CellId> targets(CellId e) const { return complex_.successors(target_kind, e); }
  /// Edges having s among their sources / targets.
  std::vector<CellId> out_edges(CellId s) const { return complex_.predecessors(source_kind, s); }
  std::vector<CellId> in_edges(CellId s) const { return complex_.predecessors(target_kind, s); }

  /// Every edge has exactly one source and one target.
  bool is_deterministic_shape() const;

  /// Carrier hook: the union of the alphabets over the glued complex.
  static RelAutomaton joined(const RelAutomaton& a, const RelAutomaton& b, cells::Complex complex);

  bool operator==(const RelAutomaton&) const = default;

 private:
  std::string alphabet_;
  cells::Complex complex_;
  std::vector<CellId> states_, edges_;
};

using AutPtr = ObjectPtr<RelAutomaton>;
using AutMorphism = Morphism<RelAutomaton>;

cells::Sort edge_sort(char label);

class AutomatonBuilder {
 public:
  explicit AutomatonBuilder(std::string alphabet = {}) : alphabet_(std::move(alphabet)) {}

  CellId state(std::string name, bool initial = false, bool accepting = false);
  /// Edges are named e0, e1, ... unless a name is given. Labels outside the
  /// alphabet extend it.
  CellId edge(char label, const std::vector<CellId>& sources, const std::vector<CellId>& targets,
              std::string name = {});
  CellId edge(char label, const std::vector<std::string>& sources, const std::vector<std::string>& targets,
              std::string name = {});
  void add_source(CellId e, CellId s);
  void add_target(CellId e, CellId t);
  RelAutomaton build() &&;

 private:
  std::string alphabet_;
  cells::ComplexBuilder cells_;
  std::vector<std::string> names_;
  std::size_t edge_count_ = 0;
};

/// The automaton with one path q0 -w1-> q1 -> ... -> qL; q0 initial, qL accepting.
RelAutomaton path_automaton(std::string_view word, std::string alphabet = {});

/// Every accepted word of length at most `max_length`.
std::set<std::string> language_upto(const RelAutomaton& a, std::size_t max_length);

/// Every word of length at most `max_length` over the alphabet, shortlex order.
std::vector<std::string> words_upto(const std::string& alphabet, std::size_t max_length);

// ----------------------------------------------------------------------------
// Generating cofibrations

Generator<RelAutomaton> gen_initial();                // i_odot
Generator<RelAutomaton> gen_initial_accepting();      // i_oast
Generator<RelAutomaton> gen_edge(char a);             // i_to(a)
Generator<RelAutomaton> gen_source(char a);           // i_s(a)
Generator<RelAutomaton> gen_accepting_target(char a); // i_otimes(a)
/// i_{m,n}: m incoming and n outgoing free edges acquire a common centre.
Generator<RelAutomaton> gen_star(const std::string& in_labels, const std::string& out_labels);

/// The whole family over the alphabet, with i_{m,n} for 1 <= m <= max_m,
/// 1 <= n <= max_n and every label multiset, plus the codiagonals.
GeneratorSet<RelAutomaton> automata_generators(const std::string& alphabet, std::size_t max_m, std::size_t max_n);

/// The members of I+ that can have lifting problems against p : X -> Y. The
/// star generators are limited to label multisets of distinct X-edges lying
/// over the in/out star of a single Y-state: repeating an edge adds no new
/// condition on a lift.
std::vector<Generator<RelAutomaton>> generators_for(const AutMorphism& p);

/// unique_rlp(p, generators_for(p)), with the star squares enumerated once per
/// pair of edge sets (T, S) of X over the in/out star of a Y-state instead of
/// once per map of the generator's edges. Every square of a star generator
/// has the same lifts as the square of the generator on the image sets, so
/// the answers agree; only the square count differs.
LiftingReport<RelAutomaton> automata_unique_rlp(const AutMorphism& p);

// ----------------------------------------------------------------------------
// Cofibrant replacement

/// One pushout of a generator along an attaching map into the object built so far.
struct CertificateStep {
  Generator<RelAutomaton> generator;
  cells::CellMap attach;
  /// Names of the cells the step adds, in generator codomain order.
  std::vector<std::string> names;
};

struct CofibCertificate {
  std::string alphabet;
  std::vector<CertificateStep> steps;
};

/// Rebuilds the object from the empty automaton.
RelAutomaton replay(const CofibCertificate& certificate);

struct Replacement {
  RelAutomaton object;
  /// object -> input.
  cells::CellMap beta;
  CofibCertificate certificate;
};

/// The replacement has states init(v) for initial v, acc(e,v) for accepting
/// targets v of e, int(v) for states with an in-edge and an out-edge, and one
/// edge per input edge. With `verify`, automata_unique_rlp(beta) is checked and a failure throws std::logic_error.
Replacement cofibrant_replacement(const RelAutomaton& a, bool verify = true);

/// Edges (u, e, v) for u a source and v a target of e.
RelAutomaton deter(const RelAutomaton& a);

struct NormalizeResult {
  RelAutomaton automaton;
  std::optional<std::string> warning;
};

NormalizeResult normalize(const RelAutomaton& a);

struct ConditionReport {
  bool ok = true;
  /// 1: an initial state is a target; 2: a non-initial accepting state is a source.
  int condition = 0;
  std::optional<std::pair<std::string, std::string>> witness;  // (state, edge)
};

ConditionReport check_conditions(const RelAutomaton& a);

// ----------------------------------------------------------------------------
// Colimits used by the compiler

/// Disjoint union; cells are renamed q0.. / e0.. afterwards.
RelAutomaton automaton_sum(const RelAutomaton& a, const RelAutomaton& b);
/// Renames states q0, q1, ... and edges e0, e1, ... in id order.
RelAutomaton canonical_names(const RelAutomaton& a);

}  // namespace cofib
