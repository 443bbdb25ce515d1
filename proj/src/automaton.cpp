#include "cofib/automaton.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace cofib {

namespace {

std::string normalized_alphabet(std::string alphabet) {
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  return alphabet;
}

cells::Flags marks(bool initial, bool accepting) {
  return (initial ? RelAutomaton::initial_flag : 0) | (accepting ? RelAutomaton::accepting_flag : 0);
}

}  // namespace

cells::Sort edge_sort(char label) { return 1 + static_cast<cells::Sort>(static_cast<unsigned char>(label)); }

RelAutomaton::RelAutomaton(std::string alphabet, cells::Complex complex) : complex_(std::move(complex)) {
  for (CellId c = 0; c < complex_.size(); ++c) {
    if (is_state(c)) {
      states_.push_back(c);
    } else {
      edges_.push_back(c);
      alphabet.push_back(label(c));
    }
  }
  alphabet_ = normalized_alphabet(std::move(alphabet));
}

std::vector<CellId> RelAutomaton::initial_states() const {
  std::vector<CellId> out;
  for (CellId s : states_)
    if (is_initial(s)) out.push_back(s);
  return out;
}

std::vector<CellId> RelAutomaton::accepting_states() const {
  std::vector<CellId> out;
  for (CellId s : states_)
    if (is_accepting(s)) out.push_back(s);
  return out;
}

bool RelAutomaton::is_deterministic_shape() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [this](CellId e) { return sources(e).size() == 1 && targets(e).size() == 1; });
}

RelAutomaton RelAutomaton::joined(const RelAutomaton& a, const RelAutomaton& b, cells::Complex complex) {
  return RelAutomaton(a.alphabet() + b.alphabet(), std::move(complex));
}

CellId AutomatonBuilder::state(std::string name, bool initial, bool accepting) {
  names_.push_back(name);
  return cells_.add_cell(std::move(name), 0, marks(initial, accepting));
}

CellId AutomatonBuilder::edge(char label, const std::vector<CellId>& sources, const std::vector<CellId>& targets,
                              std::string name) {
  if (name.empty()) name = "e" + std::to_string(edge_count_);
  ++edge_count_;
  names_.push_back(name);
  alphabet_.push_back(label);
  const CellId e = cells_.add_cell(std::move(name), edge_sort(label));
  for (CellId s : sources) cells_.add_incidence(RelAutomaton::source_kind, e, s);
  for (CellId t : targets) cells_.add_incidence(RelAutomaton::target_kind, e, t);
  return e;
}

CellId AutomatonBuilder::edge(char label, const std::vector<std::string>& sources,
                              const std::vector<std::string>& targets, std::string name) {
  auto lookup = [this](const std::string& s) {
    auto it = std::find(names_.begin(), names_.end(), s);
    if (it == names_.end()) throw std::invalid_argument("unknown state \"" + s + "\"");
    return static_cast<CellId>(it - names_.begin());
  };
  std::vector<CellId> src, tgt;
  for (const auto& s : sources) src.push_back(lookup(s));
  for (const auto& t : targets) tgt.push_back(lookup(t));
  return edge(label, src, tgt, std::move(name));
}

void AutomatonBuilder::add_source(CellId e, CellId s) { cells_.add_incidence(RelAutomaton::source_kind, e, s); }
void AutomatonBuilder::add_target(CellId e, CellId t) { cells_.add_incidence(RelAutomaton::target_kind, e, t); }

RelAutomaton AutomatonBuilder::build() && { return RelAutomaton(std::move(alphabet_), std::move(cells_).build()); }

RelAutomaton path_automaton(std::string_view word, std::string alphabet) {
  AutomatonBuilder b(std::move(alphabet));
  CellId prev = b.state("q0", true, word.empty());
  for (std::size_t i = 0; i < word.size(); ++i) {
    CellId next = b.state("q" + std::to_string(i + 1), false, i + 1 == word.size());
    b.edge(word[i], std::vector<CellId>{prev}, std::vector<CellId>{next});
    prev = next;
  }
  return std::move(b).build();
}

std::set<std::string> language_upto(const RelAutomaton& a, std::size_t max_length) {
  std::set<std::string> out;
  std::vector<CellId> start = a.initial_states();
  if (start.empty()) return out;

  // Per state and label, the states reachable along one edge.
  std::map<std::pair<CellId, char>, std::vector<CellId>> step;
  for (CellId e : a.edges()) {
    auto targets = a.targets(e);
    for (CellId s : a.sources(e)) {
      auto& slot = step[{s, a.label(e)}];
      slot.insert(slot.end(), targets.begin(), targets.end());
    }
  }
  std::string word;
  std::function<void(const std::vector<bool>&)> visit = [&](const std::vector<bool>& current) {
    for (CellId s : a.states())
      if (current[s] && a.is_accepting(s)) {
        out.insert(word);
        break;
      }
    if (word.size() == max_length) return;
    for (char c : a.alphabet()) {
      std::vector<bool> next(a.size(), false);
      bool any = false;
      for (CellId s : a.states()) {
        if (!current[s]) continue;
        auto it = step.find({s, c});
        if (it == step.end()) continue;
        for (CellId t : it->second) next[t] = any = true;
      }
      if (!any) continue;
      word.push_back(c);
      visit(next);
      word.pop_back();
    }
  };
  std::vector<bool> current(a.size(), false);
  for (CellId s : start) current[s] = true;
  visit(current);
  return out;
}

std::vector<std::string> words_upto(const std::string& alphabet, std::size_t max_length) {
  std::vector<std::string> out{""};
  std::size_t begin = 0;
  for (std::size_t length = 1; length <= max_length; ++length) {
    const std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k)
      for (char c : alphabet) out.push_back(out[k] + c);
    begin = end;
  }
  return out;
}

// ----------------------------------------------------------------------------

namespace {

Generator<RelAutomaton> make_generator(std::string name, RelAutomaton source, RelAutomaton target) {
  // Generator domains are subobjects listed first in the codomain.
  cells::CellMap inclusion(source.size());
  for (CellId c = 0; c < source.size(); ++c) inclusion[c] = target.at(source.name(c));
  return {std::move(name), {share(std::move(source)), share(std::move(target)), std::move(inclusion)}};
}

// m incoming edges x1.., n outgoing edges y1.., optionally with their centre c.
RelAutomaton star_object(const std::string& in_labels, const std::string& out_labels, bool centre) {
  AutomatonBuilder b;
  std::vector<CellId> ins, outs;
  for (std::size_t i = 0; i < in_labels.size(); ++i)
    ins.push_back(b.edge(in_labels[i], std::vector<CellId>{}, std::vector<CellId>{}, "x" + std::to_string(i + 1)));
  for (std::size_t j = 0; j < out_labels.size(); ++j)
    outs.push_back(b.edge(out_labels[j], std::vector<CellId>{}, std::vector<CellId>{}, "y" + std::to_string(j + 1)));
  if (centre) {
    CellId c = b.state("c");
    for (CellId x : ins) b.add_target(x, c);
    for (CellId y : outs) b.add_source(y, c);
  }
  return std::move(b).build();
}

}  // namespace

Generator<RelAutomaton> gen_initial() {
  AutomatonBuilder b;
  b.state("s", true, false);
  return make_generator("i_odot", RelAutomaton(), std::move(b).build());
}

Generator<RelAutomaton> gen_initial_accepting() {
  AutomatonBuilder b;
  b.state("s", true, true);
  return make_generator("i_oast", RelAutomaton(), std::move(b).build());
}

Generator<RelAutomaton> gen_edge(char a) {
  AutomatonBuilder b;
  b.edge(a, std::vector<CellId>{}, std::vector<CellId>{}, "x");
  return make_generator(std::string("i_to(") + a + ")", RelAutomaton(), std::move(b).build());
}

Generator<RelAutomaton> gen_source(char a) {
  auto build = [a](bool attached) {
    AutomatonBuilder b;
    CellId s = b.state("s", true, false);
    CellId x = b.edge(a, std::vector<CellId>{}, std::vector<CellId>{}, "x");
    if (attached) b.add_source(x, s);
    return std::move(b).build();
  };
  return make_generator(std::string("i_s(") + a + ")", build(false), build(true));
}

Generator<RelAutomaton> gen_accepting_target(char a) {
  AutomatonBuilder dom, cod;
  dom.edge(a, std::vector<CellId>{}, std::vector<CellId>{}, "x");
  CellId x = cod.edge(a, std::vector<CellId>{}, std::vector<CellId>{}, "x");
  cod.add_target(x, cod.state("t", false, true));
  return make_generator(std::string("i_otimes(") + a + ")", std::move(dom).build(), std::move(cod).build());
}

Generator<RelAutomaton> gen_star(const std::string& in_labels, const std::string& out_labels) {
  std::string name = "i_{" + std::to_string(in_labels.size()) + "," + std::to_string(out_labels.size()) + "}(" +
                     in_labels + ";" + out_labels + ")";
  return make_generator(std::move(name), star_object(in_labels, out_labels, false),
                        star_object(in_labels, out_labels, true));
}

namespace {

// Sorted label strings of the given size.
void multisets(const std::string& alphabet, std::size_t size, std::size_t from, std::string& prefix,
               std::vector<std::string>& out) {
  if (prefix.size() == size) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t k = from; k < alphabet.size(); ++k) {
    prefix.push_back(alphabet[k]);
    multisets(alphabet, size, k, prefix, out);
    prefix.pop_back();
  }
}

std::vector<Generator<RelAutomaton>> basic_generators(const std::string& alphabet) {
  std::vector<Generator<RelAutomaton>> out{gen_initial(), gen_initial_accepting()};
  for (char a : alphabet) out.push_back(gen_edge(a));
  for (char a : alphabet) out.push_back(gen_source(a));
  for (char a : alphabet) out.push_back(gen_accepting_target(a));
  return out;
}

}  // namespace

GeneratorSet<RelAutomaton> automata_generators(const std::string& alphabet, std::size_t max_m, std::size_t max_n) {
  const std::string sigma = normalized_alphabet(alphabet);
  auto positive = basic_generators(sigma);
  std::vector<std::vector<std::string>> by_size(std::max(max_m, max_n) + 1);
  for (std::size_t k = 1; k < by_size.size(); ++k) {
    std::string prefix;
    multisets(sigma, k, 0, prefix, by_size[k]);
  }
  for (std::size_t m = 1; m <= max_m; ++m)
    for (std::size_t n = 1; n <= max_n; ++n)
      for (const auto& in : by_size[m])
        for (const auto& out : by_size[n]) positive.push_back(gen_star(in, out));
  return with_codiagonals(std::move(positive));
}

namespace {

std::vector<Generator<RelAutomaton>> basic_generators_for(const RelAutomaton& y) {
  std::string labels;
  for (CellId e : y.edges()) labels.push_back(y.label(e));
  return basic_generators(normalized_alphabet(labels));
}

// The X-edges over edges having v as a target / source.
std::pair<std::vector<CellId>, std::vector<CellId>> star_over(const AutMorphism& p, CellId v) {
  std::vector<CellId> ins, outs;
  for (CellId e : p.dom().edges()) {
    auto t = p.cod().targets(p.map[e]);
    auto s = p.cod().sources(p.map[e]);
    if (std::binary_search(t.begin(), t.end(), v)) ins.push_back(e);
    if (std::binary_search(s.begin(), s.end(), v)) outs.push_back(e);
  }
  return {ins, outs};
}

constexpr std::size_t max_star = 16;

}  // namespace

std::vector<Generator<RelAutomaton>> generators_for(const AutMorphism& p) {
  const RelAutomaton& x = p.dom();
  const RelAutomaton& y = p.cod();
  auto out = basic_generators_for(y);

  // Label multisets of the subsets of a list of edges.
  auto realized = [&x](const std::vector<CellId>& edges) {
    std::set<std::string> found;
    if (edges.size() > max_star) throw std::length_error("generators_for: star too large to expand");
    for (std::uint32_t mask = 1; mask < (1u << edges.size()); ++mask) {
      std::string ms;
      for (std::size_t k = 0; k < edges.size(); ++k)
        if (mask & (1u << k)) ms.push_back(x.label(edges[k]));
      std::sort(ms.begin(), ms.end());
      found.insert(ms);
    }
    return found;
  };
  std::set<std::pair<std::string, std::string>> stars;
  for (CellId v : y.states()) {
    auto [ins, outs] = star_over(p, v);
    if (ins.empty() || outs.empty()) continue;
    auto in_sets = realized(ins);
    auto out_sets = realized(outs);
    for (const auto& i : in_sets)
      for (const auto& o : out_sets) stars.emplace(i, o);
  }
  for (const auto& [i, o] : stars) out.push_back(gen_star(i, o));
  return out;
}

LiftingReport<RelAutomaton> automata_unique_rlp(const AutMorphism& p) {
  auto report = unique_rlp(p, basic_generators_for(p.cod()));
  if (!report.holds) return report;
  for (CellId v : p.cod().states()) {
    auto [ins, outs] = star_over(p, v);
    if (ins.empty() || outs.empty()) continue;
    if (ins.size() > max_star || outs.size() > max_star) throw std::length_error("automata_unique_rlp: star too large");
    for (std::uint32_t in_mask = 1; in_mask < (1u << ins.size()); ++in_mask) {
      for (std::uint32_t out_mask = 1; out_mask < (1u << outs.size()); ++out_mask) {
        std::string in_labels, out_labels;
        cells::CellMap top, bottom;
        for (std::size_t k = 0; k < ins.size(); ++k)
          if (in_mask & (1u << k)) {
            in_labels.push_back(p.dom().label(ins[k]));
            top.push_back(ins[k]);
          }
        for (std::size_t k = 0; k < outs.size(); ++k)
          if (out_mask & (1u << k)) {
            out_labels.push_back(p.dom().label(outs[k]));
            top.push_back(outs[k]);
          }
        // Codomain cells: the free edges in domain order, then the centre.
        for (CellId e : top) bottom.push_back(p.map[e]);
        bottom.push_back(v);
        auto g = gen_star(in_labels, out_labels);
        LiftingProblem<RelAutomaton> q{g.arrow, p, top, bottom};
        ++report.squares;
        const std::size_t lifts = solve_lifts(q, 2).size();
        if (lifts != 1) {
          report.holds = false;
          report.failure = LiftingFailure<RelAutomaton>{g.name, top, bottom, lifts};
          return report;
        }
      }
    }
  }
  return report;
}

// ----------------------------------------------------------------------------

RelAutomaton replay(const CofibCertificate& certificate) {
  RelAutomaton object(certificate.alphabet, cells::Complex());
  for (const auto& step : certificate.steps) {
    const auto& arrow = step.generator.arrow;
    auto po = cells::pushout(arrow.source->complex(), object.complex(), arrow.target->complex(), step.attach, arrow.map);
    const std::size_t added = po.object.size() - object.size();
    if (added != step.names.size()) throw std::logic_error("replay: step adds an unexpected number of cells");
    std::vector<std::string> names;
    for (CellId c = 0; c < po.object.size(); ++c)
      names.push_back(c < object.size() ? po.object.name(c) : step.names[c - object.size()]);
    object = RelAutomaton(certificate.alphabet, cells::renamed(po.object, names));
  }
  return object;
}

Replacement cofibrant_replacement(const RelAutomaton& a, bool verify) {
  Replacement out;
  out.certificate.alphabet = a.alphabet();
  AutomatonBuilder b(a.alphabet());
  std::map<CellId, CellId> init, internal, edge;
  auto step = [&out](Generator<RelAutomaton> g, cells::CellMap attach, std::vector<std::string> names) {
    out.certificate.steps.push_back({std::move(g), std::move(attach), std::move(names)});
  };

  for (CellId v : a.initial_states()) {
    const std::string name = "init(" + a.name(v) + ")";
    init[v] = b.state(name, true, a.is_accepting(v));
    out.beta.push_back(v);
    step(a.is_accepting(v) ? gen_initial_accepting() : gen_initial(), {}, {name});
  }
  for (CellId e : a.edges()) {
    edge[e] = b.edge(a.label(e), std::vector<CellId>{}, std::vector<CellId>{}, a.name(e));
    out.beta.push_back(e);
    step(gen_edge(a.label(e)), {}, {a.name(e)});
  }
  for (CellId e : a.edges()) {
    for (CellId u : a.sources(e)) {
      if (!a.is_initial(u)) continue;
      b.add_source(edge[e], init[u]);
      step(gen_source(a.label(e)), {init[u], edge[e]}, {});
    }
  }
  for (CellId e : a.edges()) {
    for (CellId v : a.targets(e)) {
      if (!a.is_accepting(v)) continue;
      const std::string name = "acc(" + a.name(e) + "," + a.name(v) + ")";
      b.add_target(edge[e], b.state(name, false, true));
      out.beta.push_back(v);
      step(gen_accepting_target(a.label(e)), {edge[e]}, {name});
    }
  }
  for (CellId v : a.states()) {
    auto ins = a.in_edges(v);
    auto outs = a.out_edges(v);
    if (ins.empty() || outs.empty()) continue;
    const std::string name = "int(" + a.name(v) + ")";
    CellId c = b.state(name);
    out.beta.push_back(v);
    std::string in_labels, out_labels;
    cells::CellMap attach;
    for (CellId e : ins) {
      b.add_target(edge[e], c);
      in_labels.push_back(a.label(e));
      attach.push_back(edge[e]);
    }
    for (CellId e : outs) {
      b.add_source(edge[e], c);
      out_labels.push_back(a.label(e));
      attach.push_back(edge[e]);
    }
    step(gen_star(in_labels, out_labels), std::move(attach), {name});
  }
  out.object = std::move(b).build();

  if (verify) {
    AutMorphism beta{share(out.object), share(a), out.beta};
    auto report = automata_unique_rlp(beta);
    if (!report.holds) {
      throw std::logic_error("cofibrant_replacement: beta fails unique lifting against " + report.failure->generator);
    }
  }
  return out;
}

RelAutomaton deter(const RelAutomaton& a) {
  AutomatonBuilder b(a.alphabet());
  std::map<CellId, CellId> state;
  for (CellId s : a.states()) state[s] = b.state(a.name(s), a.is_initial(s), a.is_accepting(s));
  for (CellId e : a.edges())
    for (CellId u : a.sources(e))
      for (CellId v : a.targets(e))
        b.edge(a.label(e), std::vector<CellId>{state[u]}, std::vector<CellId>{state[v]},
               "(" + a.name(u) + "," + a.name(e) + "," + a.name(v) + ")");
  return std::move(b).build();
}

NormalizeResult normalize(const RelAutomaton& a) {
  if (a.initial_states().empty()) return {a, "no initial state: the language is empty and the automaton is unchanged"};
  RelAutomaton replacement = cofibrant_replacement(a, false).object;
  auto inits = replacement.initial_states();
  std::vector<std::pair<CellId, CellId>> merge;
  for (CellId s : inits) merge.emplace_back(inits.front(), s);
  RelAutomaton merged(replacement.alphabet(), cells::quotient(replacement.complex(), merge).object);
  return {deter(merged), std::nullopt};
}

ConditionReport check_conditions(const RelAutomaton& a) {
  ConditionReport report;
  for (CellId s : a.states()) {
    if (a.is_initial(s)) {
      if (auto in = a.in_edges(s); !in.empty()) {
        report = {false, 1, std::make_pair(a.name(s), a.name(in.front()))};
        return report;
      }
    } else if (a.is_accepting(s)) {
      if (auto out = a.out_edges(s); !out.empty()) {
        report = {false, 2, std::make_pair(a.name(s), a.name(out.front()))};
        return report;
      }
    }
  }
  return report;
}

RelAutomaton canonical_names(const RelAutomaton& a) {
  std::vector<std::string> names(a.size());
  std::size_t states = 0, edges = 0;
  for (CellId c = 0; c < a.size(); ++c)
    names[c] = a.is_state(c) ? "q" + std::to_string(states++) : "e" + std::to_string(edges++);
  return RelAutomaton(a.alphabet(), cells::renamed(a.complex(), names));
}

RelAutomaton automaton_sum(const RelAutomaton& a, const RelAutomaton& b) {
  // Colliding names from b carry primes until the canonical renaming.
  auto sum = cells::coproduct(a.complex(), b.complex());
  return canonical_names(RelAutomaton(a.alphabet() + b.alphabet(), std::move(sum.object)));
}

}  // namespace cofib
