// cofib: blowups of relational precubical sets, cofibrant replacement of
// relational automata, and Kleene compilation.
//
// Exit codes: 0 success, 1 a check failed (report on stdout), 2 malformed input.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cofib/io.hpp"
#include "cofib/regex.hpp"
#include "cofib/samples.hpp"

using namespace cofib;
using io::json;

namespace {

struct Options {
  std::string input;
  std::string output;
  std::size_t n = 1;
  std::size_t length = 4;
  std::string eps;
  std::string format = "dot";
  std::string regex;
  bool ascii = false;
  bool normalized = false;
  std::uint64_t seed = 1;
  std::size_t count = 200;
  std::size_t depth = 4;
  std::string alphabet = "ab";
};

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw io::MalformedInput("cannot write " + o.output);
  out << text;
}

void emit(const Options& o, const json& j) { emit(o, j.dump(2) + "\n"); }


RelPCS load_pcs(const Options& o) { return io::pcs_from_json(io::parse_file(o.input)); }
RelAutomaton load_automaton(const Options& o) { return io::automaton_from_json(io::parse_file(o.input)); }

json validation_json(const ValidationReport& v) {
  json out{{"ok", v.ok}};
  if (v.violation) {
    const auto& [a, w, b] = *v.violation;
    out["violation"] = {a, w, b};
    out["reason"] = v.reason;
  }
  return out;
}

/// The closure of the input; exit 1 when it still fails to validate.
std::optional<RelPCS> closed_input(const Options& o) {
  RelPCS p = saturate(load_pcs(o));
  auto v = validate(p);
  if (!v.ok) {
    emit(o, validation_json(v));
    return std::nullopt;
  }
  return p;
}

json counts_json(const RelPCS& p) { return p.counts(); }

int pcs_validate(const Options& o) {
  auto v = validate(load_pcs(o));
  emit(o, validation_json(v));
  return v.ok ? 0 : 1;
}

int pcs_blowup(const Options& o) {
  auto p = closed_input(o);
  if (!p) return 1;
  auto b = blowup(*p, o.n);
  emit(o, json{{"counts", counts_json(b.blowup)},
               {"blowup", io::to_json(b.blowup)},
               {"beta", io::map_json(b.blowup.complex(), p->complex(), b.beta)},
               {"provenance", io::provenance_json(b, *p)}});
  return 0;
}

int pcs_euclid(const Options& o) {
  auto p = closed_input(o);
  if (!p) return 1;
  auto r = euclidean_check(*p, o.n);
  json charts = json::array();
  for (const auto& c : r.charts) {
    auto up = upward(*p, c.cube);
    json chart = json::object();
    auto d = d_epsilon(c.eps);
    for (std::size_t k = 0; k < c.map.size(); ++k) chart[d.elements[k].str()] = up.object.name(c.map[k]);
    charts.push_back({{"cube", p->name(c.cube)}, {"epsilon", c.eps.str()}, {"chart", chart}});
  }
  json out{{"euclidean", r.euclidean}, {"charts", charts}};
  if (r.counterexample) out["counterexample"] = p->name(*r.counterexample);
  emit(o, out);
  return r.euclidean ? 0 : 1;
}

int pcs_verify(const Options& o) {
  auto p = closed_input(o);
  if (!p) return 1;
  auto v = verify_blowup(*p, o.n);
  json out{{"ok", v.ok()},
           {"blowup_euclidean", v.blowup_euclidean},
           {"unique_lifting", v.unique_lifting},
           {"squares", v.squares},
           {"input_euclidean", v.input_euclidean},
           {"beta_isomorphism", v.beta_isomorphism}};
  if (v.lifting_failure) out["lifting_failure"] = {{"generator", v.lifting_failure->generator}, {"lifts", v.lifting_failure->lifts}};
  if (v.non_euclidean_cube) out["non_euclidean_cube"] = *v.non_euclidean_cube;
  emit(o, out);
  return v.ok() ? 0 : 1;
}

int pcs_brick(const Options& o) {
  if (o.eps.empty() || o.eps.find_first_not_of("01") != std::string::npos)
    throw io::MalformedInput("epsilon must be a nonempty string over {0,1}");
  emit(o, io::to_json(brick(BrickIndex::parse(o.eps))));
  return 0;
}

int pcs_export(const Options& o) {
  RelPCS p = saturate(load_pcs(o));
  if (o.format == "dot") {
    emit(o, io::to_dot(p));
  } else {
    if (p.dim_bound() > 2) throw io::MalformedInput("TikZ export supports dim_bound <= 2");
    emit(o, io::to_tikz(p));
  }
  return 0;
}

int aut_lang(const Options& o) {
  auto a = load_automaton(o);
  const auto accepted = language_upto(a, o.length);
  json words = json::array();
  for (const auto& w : words_upto(a.alphabet(), o.length))
    if (accepted.count(w)) words.push_back(w);
  emit(o, json{{"max_length", o.length}, {"words", words}});
  return 0;
}

int aut_cofrep(const Options& o) {
  auto a = load_automaton(o);
  auto r = cofibrant_replacement(a);
  emit(o, json{{"object", io::to_json(r.object)},
               {"beta", io::map_json(r.object.complex(), a.complex(), r.beta)},
               {"certificate", io::certificate_json(r.certificate)}});
  return 0;
}

int aut_normalize(const Options& o) {
  auto n = normalize(load_automaton(o));
  json out{{"automaton", io::to_json(n.automaton)}};
  if (n.warning) out["warning"] = *n.warning;
  emit(o, out);
  return 0;
}

json conditions_json(const ConditionReport& r) {
  json out{{"ok", r.ok}};
  if (!r.ok) out["condition"] = r.condition;
  if (r.witness) out["witness"] = {{"state", r.witness->first}, {"edge", r.witness->second}};
  return out;
}

int aut_conditions(const Options& o) {
  auto r = check_conditions(load_automaton(o));
  emit(o, conditions_json(r));
  return r.ok ? 0 : 1;
}

int aut_verify(const Options& o) {
  auto a = share(load_automaton(o));
  auto r = cofibrant_replacement(*a, false);
  AutMorphism beta{share(r.object), a, r.beta};
  auto lifting = automata_unique_rlp(beta);
  const bool language = language_upto(r.object, o.length) == language_upto(*a, o.length);
  const bool edges = r.object.edges().size() == a->edges().size();
  const auto conditions = check_conditions(r.object);
  const bool replayed = replay(r.certificate) == r.object;
  const bool ok = lifting.holds && language && edges && conditions.ok && replayed;
  json lift{{"holds", lifting.holds}, {"squares", lifting.squares}};
  if (lifting.failure) lift["failure"] = {{"generator", lifting.failure->generator}, {"lifts", lifting.failure->lifts}};
  emit(o, json{{"ok", ok},
               {"unique_lifting", lift},
               {"language_preserved", language},
               {"max_length", o.length},
               {"edges_preserved", edges},
               {"conditions", conditions_json(conditions)},
               {"certificate_replays", replayed}});
  return ok ? 0 : 1;
}

RegexPtr regex_input(const Options& o) {
  try {
    return parse_regex(o.regex, {o.ascii});
  } catch (const std::invalid_argument& e) {
    throw io::MalformedInput(e.what());
  }
}

int rx_compile(const Options& o) {
  auto a = compile(regex_input(o));
  json out;
  if (o.normalized) {
    auto n = normalize(a);
    out["automaton"] = io::to_json(n.automaton);
    if (n.warning) out["warning"] = *n.warning;
  } else {
    out["automaton"] = io::to_json(a);
  }
  emit(o, out);
  return 0;
}

int rx_fuzz(const Options& o) {
  auto r = kleene_fuzz(o.seed, o.count, o.depth, o.length, o.alphabet);
  std::ostringstream text;
  text << r.count << " expressions, " << r.mismatches.size() << " mismatches, largest automaton " << r.max_states
       << " states\n";
  for (const auto& m : r.mismatches)
    text << json{{"regex", m.regex}, {"word", m.word}, {"in_compiled", m.in_compiled}}.dump() << "\n";
  emit(o, text.str());
  return r.mismatches.empty() ? 0 : 1;
}

int toolkit_appendix(const Options& o) {
  auto report = appendix_identity_suite(o.seed);
  json counts = json::object(), failures = json::array();
  for (const auto& c : report.checks) {
    counts[c.identity] = counts.value(c.identity, 0) + 1;
    if (!c.holds) failures.push_back({{"identity", c.identity}, {"sample", c.sample}});
  }
  emit(o, json{{"configurations", report.checks.size()}, {"by_identity", counts}, {"failures", failures}});
  return report.failures() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blowups, cofibrant replacement of automata, and Kleene compilation"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&)> run;

  auto command = [&](CLI::App* parent, const char* name, const char* about, int (*fn)(const Options&)) {
    auto* sub = parent->add_subcommand(name, about);
    sub->add_option("-o,--output", o.output, "Write to a file instead of stdout");
    sub->callback([&run, fn] { run = fn; });
    return sub;
  };
  auto with_input = [&](CLI::App* sub) { sub->add_option("input", o.input, "JSON input")->required(); };

  auto* pcs = app.add_subcommand("pcs", "Relational precubical sets")->require_subcommand(1);
  with_input(command(pcs, "validate", "Check grading and closure", pcs_validate));
  auto* bl = command(pcs, "blowup", "The n-blowup, its map and provenance", pcs_blowup);
  bl->add_option("-n", o.n, "Dimension")->required();
  with_input(bl);
  auto* eu = command(pcs, "euclid", "Charts at every cube", pcs_euclid);
  eu->add_option("-n", o.n, "Dimension")->required();
  with_input(eu);
  auto* ve = command(pcs, "verify", "Euclidean blowup, unique lifting, beta iso on euclidean input", pcs_verify);
  ve->add_option("-n", o.n, "Dimension")->required();
  with_input(ve);
  command(pcs, "brick", "The brick B_eps", pcs_brick)->add_option("-e", o.eps, "Index over {0,1}")->required();
  auto* ex = command(pcs, "export", "DOT or TikZ figure", pcs_export);
  ex->add_option("--format", o.format, "dot or tikz")->check(CLI::IsMember({"dot", "tikz"}));
  with_input(ex);

  auto* aut = app.add_subcommand("aut", "Relational automata")->require_subcommand(1);
  auto* lang = command(aut, "lang", "Accepted words up to a length", aut_lang);
  lang->add_option("-L", o.length, "Maximum length")->required();
  with_input(lang);
  with_input(command(aut, "cofrep", "Cofibrant replacement with certificate", aut_cofrep));
  with_input(command(aut, "normalize", "Replacement, deterministic shape, one initial state", aut_normalize));
  with_input(command(aut, "conditions", "Initial states have no incoming, accepting states no outgoing edges", aut_conditions));
  auto* av = command(aut, "verify", "Unique lifting of beta and preservation of the language", aut_verify);
  av->add_option("-L", o.length, "Maximum word length")->capture_default_str();
  with_input(av);

  auto* rx = app.add_subcommand("rx", "Regular expressions")->require_subcommand(1);
  auto* rc = command(rx, "compile", "Compile to a relational automaton", rx_compile);
  rc->add_option("regex", o.regex, "Expression")->required();
  rc->add_flag("--ascii", o.ascii, "Accept 0 for the empty language and () for the empty word");
  rc->add_flag("--normalize", o.normalized, "Normalize the result");
  auto* fz = command(rx, "fuzz", "Compare compiled languages with the structural oracle", rx_fuzz);
  fz->add_option("--seed", o.seed)->capture_default_str();
  fz->add_option("--count", o.count)->capture_default_str();
  fz->add_option("--depth", o.depth)->capture_default_str();
  fz->add_option("-L", o.length)->capture_default_str();
  fz->add_option("--alphabet", o.alphabet)->capture_default_str();

  auto* tk = app.add_subcommand("toolkit", "Cell toolkit")->require_subcommand(1);
  command(tk, "appendix", "Codiagonal identities on sampled configurations", toolkit_appendix)
      ->add_option("--seed", o.seed)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return run(o);
  } catch (const io::MalformedInput& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
}
