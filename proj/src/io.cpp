#include "cofib/io.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace cofib::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<std::string> strings(const json& j, const char* what) {
  if (!j.is_array()) throw MalformedInput(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw MalformedInput(std::string(what) + " must be an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

char single_char(const json& j, const char* what) {
  if (!j.is_string() || j.get<std::string>().size() != 1)
    throw MalformedInput(std::string(what) + " must be a one-character string");
  return j.get<std::string>()[0];
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string tex(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '_': case '{': case '}': case '&': case '%': case '$': case '#': out += '\\'; out += c; break;
      case '\\': out += "\\textbackslash{}"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

RelPCS pcs_from_json(const json& j) {
  try {
    const json& bound = field(j, "dim_bound");
    if (!bound.is_number_unsigned() && !(bound.is_number_integer() && bound.get<long long>() >= 0))
      throw MalformedInput("dim_bound must be a natural number");
    PcsBuilder b(bound.get<std::size_t>());
    const json& cubes = field(j, "cubes");
    if (!cubes.is_object()) throw MalformedInput("cubes must map dimensions to arrays of ids");
    for (const auto& [key, ids] : cubes.items()) {
      std::size_t dim = 0;
      std::size_t used = 0;
      try {
        dim = std::stoul(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != key.size()) throw MalformedInput("cube dimension \"" + key + "\" is not a number");
      for (auto& id : strings(ids, "cubes")) b.cube(std::move(id), dim);
    }
    if (j.contains("faces")) {
      const json& faces = j.at("faces");
      if (!faces.is_array()) throw MalformedInput("faces must be an array");
      for (const auto& f : faces) {
        const json& cube = field(f, "cube");
        const json& word = field(f, "word");
        if (!cube.is_string() || !word.is_string()) throw MalformedInput("face cube and word must be strings");
        for (const auto& t : strings(field(f, "targets"), "targets"))
          b.face(cube.get<std::string>(), word.get<std::string>(), t);
      }
    }
    return b.raw();
  } catch (const MalformedInput&) {
    throw;
  } catch (const std::exception& e) {
    throw MalformedInput(e.what());
  }
}

json to_json(const RelPCS& p) {
  json out;
  out["dim_bound"] = p.dim_bound();
  json cubes = json::object();
  for (std::size_t d = 0; d <= p.dim_bound(); ++d) {
    json names = json::array();
    for (CellId c : p.cubes(d)) names.push_back(p.name(c));
    cubes[std::to_string(d)] = std::move(names);
  }
  out["cubes"] = std::move(cubes);
  std::map<std::pair<std::string, std::string>, std::set<std::string>> grouped;
  for (const auto& [a, w, b] : p.relations()) grouped[{p.name(a), w.str()}].insert(p.name(b));
  json faces = json::array();
  for (const auto& [key, targets] : grouped)
    faces.push_back({{"cube", key.first}, {"word", key.second}, {"targets", targets}});
  out["faces"] = std::move(faces);
  return out;
}

RelAutomaton automaton_from_json(const json& j) {
  try {
    std::string alphabet;
    const json& sigma = field(j, "alphabet");
    if (!sigma.is_array()) throw MalformedInput("alphabet must be an array of one-character strings");
    for (const auto& a : sigma) alphabet += single_char(a, "alphabet letters");
    AutomatonBuilder b(alphabet);
    std::set<std::string> initial, accepting;
    if (j.contains("initial"))
      for (auto& s : strings(j.at("initial"), "initial")) initial.insert(s);
    if (j.contains("accepting"))
      for (auto& s : strings(j.at("accepting"), "accepting")) accepting.insert(s);
    std::set<std::string> states;
    for (auto& s : strings(field(j, "states"), "states")) {
      states.insert(s);
      b.state(s, initial.count(s) > 0, accepting.count(s) > 0);
    }
    for (const auto& s : initial)
      if (!states.count(s)) throw MalformedInput("initial state \"" + s + "\" is not a state");
    for (const auto& s : accepting)
      if (!states.count(s)) throw MalformedInput("accepting state \"" + s + "\" is not a state");
    if (j.contains("edges")) {
      if (!j.at("edges").is_array()) throw MalformedInput("edges must be an array");
      for (const auto& e : j.at("edges")) {
        const char label = single_char(field(e, "label"), "edge labels");
        if (alphabet.find(label) == std::string::npos)
          throw MalformedInput(std::string("edge label \"") + label + "\" is not in the alphabet");
        auto check = [&states](const std::vector<std::string>& names) {
          for (const auto& s : names)
            if (!states.count(s)) throw MalformedInput("edge endpoint \"" + s + "\" is not a state");
          return names;
        };
        std::string name;
        if (e.contains("name")) {
          if (!e.at("name").is_string()) throw MalformedInput("edge names must be strings");
          name = e.at("name").get<std::string>();
        }
        b.edge(label, check(strings(field(e, "sources"), "sources")), check(strings(field(e, "targets"), "targets")),
               name);
      }
    }
    return std::move(b).build();
  } catch (const MalformedInput&) {
    throw;
  } catch (const std::exception& e) {
    throw MalformedInput(e.what());
  }
}

json to_json(const RelAutomaton& a) {
  json out;
  json sigma = json::array();
  for (char c : a.alphabet()) sigma.push_back(std::string(1, c));
  out["alphabet"] = std::move(sigma);
  json states = json::array(), initial = json::array(), accepting = json::array(), edges = json::array();
  for (CellId s : a.states()) {
    states.push_back(a.name(s));
    if (a.is_initial(s)) initial.push_back(a.name(s));
    if (a.is_accepting(s)) accepting.push_back(a.name(s));
  }
  for (CellId e : a.edges()) {
    json src = json::array(), tgt = json::array();
    for (CellId s : a.sources(e)) src.push_back(a.name(s));
    for (CellId t : a.targets(e)) tgt.push_back(a.name(t));
    edges.push_back({{"name", a.name(e)}, {"label", std::string(1, a.label(e))}, {"sources", src}, {"targets", tgt}});
  }
  out["states"] = std::move(states);
  out["initial"] = std::move(initial);
  out["accepting"] = std::move(accepting);
  out["edges"] = std::move(edges);
  return out;
}

json provenance_json(const BlowupResult& b, const RelPCS& p) {
  json out = json::array();
  for (CellId c = 0; c < b.provenance.size(); ++c) {
    const auto& cube = b.provenance[c];
    const auto d = d_epsilon(cube.eps);
    json chart = json::object();
    for (std::size_t k = 0; k < d.elements.size(); ++k) chart[d.elements[k].str()] = p.name(cube.map[k]);
    out.push_back({{"cube", b.blowup.name(c)}, {"epsilon", cube.eps.str()}, {"chart", std::move(chart)}});
  }
  return out;
}

json certificate_json(const CofibCertificate& c) {
  json steps = json::array();
  for (const auto& s : c.steps) {
    json attach = json::array();
    for (CellId x : s.attach) attach.push_back(x);
    steps.push_back({{"generator", s.generator.name}, {"attach", attach}, {"cells", s.names}});
  }
  return {{"alphabet", c.alphabet}, {"steps", steps}};
}

json map_json(const cells::Complex& source, const cells::Complex& target, const cells::CellMap& map) {
  json out = json::object();
  for (CellId c = 0; c < map.size(); ++c) out[source.name(c)] = target.name(map[c]);
  return out;
}

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw MalformedInput(path + ": " + e.what());
  }
}

std::string to_dot(const RelPCS& p) {
  std::ostringstream out;
  out << "digraph pcs {\n  rankdir=LR;\n";
  for (std::size_t d = 0; d <= p.dim_bound(); ++d) {
    out << "  // dimension " << d << ": " << p.cubes(d).size() << " cubes\n";
    for (CellId c : p.cubes(d)) {
      out << "  c" << c << " [label=" << quoted(p.name(c));
      out << (d == 0 ? ", shape=circle" : d == 1 ? ", shape=box, style=rounded" : ", shape=box, style=filled, fillcolor=gray90");
      out << "];\n";
    }
  }
  for (const auto& [a, w, b] : p.relations()) {
    if (w.degree() != 1) continue;
    if (p.dim(a) == 1) {
      // Back faces are tails and front faces heads of the hyperedge surrogate.
      const bool back = w.letters()[0] == Sign::minus;
      if (back) out << "  c" << b << " -> c" << a << " [arrowhead=none];\n";
      else out << "  c" << a << " -> c" << b << ";\n";
    } else {
      out << "  c" << a << " -> c" << b << " [style=dashed, label=" << quoted(w.str()) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const RelAutomaton& a) {
  std::ostringstream out;
  out << "digraph automaton {\n  rankdir=LR;\n";
  for (CellId s : a.states()) {
    out << "  c" << s << " [label=" << quoted(a.name(s)) << ", shape=" << (a.is_accepting(s) ? "doublecircle" : "circle")
        << "];\n";
    if (a.is_initial(s)) out << "  start" << s << " [shape=point, style=invis];\n  start" << s << " -> c" << s << ";\n";
  }
  for (CellId e : a.edges()) {
    out << "  c" << e << " [label=" << quoted(std::string(1, a.label(e))) << ", shape=plaintext];\n";
    for (CellId s : a.sources(e)) out << "  c" << s << " -> c" << e << " [arrowhead=none];\n";
    for (CellId t : a.targets(e)) out << "  c" << e << " -> c" << t << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_tikz(const RelPCS& p) {
  if (p.dim_bound() > 2) throw std::invalid_argument("TikZ export supports dim_bound <= 2");
  // Vertices on a circle; higher cubes at the barycentre of their vertices,
  // pushed outwards when that collapses onto a vertex.
  std::vector<std::pair<double, double>> at(p.size());
  const auto vertices = p.cubes(0);
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    const double angle = 2 * M_PI * static_cast<double>(k) / static_cast<double>(std::max<std::size_t>(1, vertices.size()));
    at[vertices[k]] = {2.5 * std::cos(angle), 2.5 * std::sin(angle)};
  }
  for (std::size_t d = 1; d <= p.dim_bound(); ++d) {
    const auto cubes = p.cubes(d);
    for (std::size_t k = 0; k < cubes.size(); ++k) {
      CellId c = cubes[k];
      double x = 0, y = 0, n = 0;
      for (const auto& [a, w, b] : p.relations())
        if (a == c && p.dim(b) == 0) x += at[b].first, y += at[b].second, n += 1;
      if (n > 0) x /= n, y /= n;
      const double r = std::hypot(x, y);
      bool collides = false;
      for (CellId v : vertices) collides |= std::hypot(x - at[v].first, y - at[v].second) < 0.3;
      if (collides || n == 0) {
        const double scale = r > 1e-9 ? (r + 1.0 + 0.4 * static_cast<double>(k)) / r : 1.0;
        x = r > 1e-9 ? x * scale : 0.6 * static_cast<double>(k + d);
        y = r > 1e-9 ? y * scale : 0.6 * static_cast<double>(d);
      }
      at[c] = {x, y};
    }
  }
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << "\\begin{tikzpicture}\n";
  static const char* style[] = {"circle, fill, inner sep=1.2pt", "inner sep=1pt, font=\\scriptsize",
                                "rectangle, fill=gray!20, inner sep=1pt, font=\\scriptsize"};
  for (std::size_t d = 0; d <= p.dim_bound(); ++d) {
    const auto cubes = p.cubes(d);
    out << "  % dimension " << d << ": " << cubes.size() << " cubes\n";
    for (CellId c : cubes) {
      out << "  \\node[" << style[d] << "] (c" << c << ") at (" << at[c].first << "," << at[c].second << ") {"
          << (d == 0 ? "" : "$" + tex(p.name(c)) + "$") << "};\n";
      if (d == 0) out << "  \\node[above right, font=\\scriptsize] at (c" << c << ") {$" << tex(p.name(c)) << "$};\n";
    }
  }
  out << "  % faces\n";
  for (const auto& [a, w, b] : p.relations()) {
    if (w.degree() != 1) continue;
    if (p.dim(a) == 1) {
      if (w.letters()[0] == Sign::minus) out << "  \\draw (c" << b << ") -- (c" << a << ");\n";
      else out << "  \\draw[->] (c" << a << ") -- (c" << b << ");\n";
    } else {
      out << "  \\draw[dashed, gray] (c" << a << ") -- (c" << b << ");\n";
    }
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace cofib::io
