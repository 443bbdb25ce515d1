#include "cofib/relpcs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace cofib {

namespace {

cells::Sort as_sort(std::size_t dim) { return static_cast<cells::Sort>(dim); }

cells::Complex close_relations(const cells::Complex& complex) {
  // Cells in increasing dimension: the faces of a lower cube are already
  // closed when a higher one is processed, so one pass suffices.
  std::vector<CellId> order(complex.size());
  for (CellId c = 0; c < complex.size(); ++c) order[c] = c;
  std::stable_sort(order.begin(), order.end(), [&](CellId a, CellId b) { return complex.sort(a) < complex.sort(b); });

  std::vector<std::set<std::pair<cells::Kind, CellId>>> closed(complex.size());
  for (CellId a : order) {
    auto& mine = closed[a];
    for (auto [kind, b] : complex.out_edges(a)) mine.emplace(kind, b);
    std::vector<std::pair<cells::Kind, CellId>> direct(mine.begin(), mine.end());
    for (auto [kind, b] : direct) {
      if (complex.sort(b) >= complex.sort(a)) continue;  // ill-graded, leave it to validate()
      const CubeWord g = CubeWord::from_code(kind);
      for (auto [kind2, c] : closed[b]) {
        const CubeWord g2 = CubeWord::from_code(kind2);
        if (g2.codomain_dim() != g.domain_dim()) continue;
        mine.emplace(compose_words(g2, g).code(), c);
      }
    }
  }
  auto builder = complex.to_builder();
  for (CellId a = 0; a < complex.size(); ++a)
    for (auto [kind, b] : closed[a]) builder.add_incidence(kind, a, b);
  return std::move(builder).build();
}

}  // namespace

std::vector<CellId> RelPCS::cubes(std::size_t d) const {
  std::vector<CellId> out;
  for (CellId c : complex_.canonical_order())
    if (dim(c) == d) out.push_back(c);
  return out;
}

std::vector<std::size_t> RelPCS::counts() const {
  std::vector<std::size_t> out(dim_bound_ + 1, 0);
  for (CellId c = 0; c < size(); ++c) {
    if (dim(c) >= out.size()) out.resize(dim(c) + 1, 0);
    ++out[dim(c)];
  }
  return out;
}

std::vector<CellId> RelPCS::faces(CellId c, const CubeWord& g) const { return complex_.successors(g.code(), c); }

std::vector<std::tuple<CellId, CubeWord, CellId>> RelPCS::relations() const {
  std::vector<std::tuple<CellId, CubeWord, CellId>> out;
  for (const auto& e : complex_.incidences()) out.emplace_back(e.from, CubeWord::from_code(e.kind), e.to);
  return out;
}

RelPCS RelPCS::joined(const RelPCS& a, const RelPCS& b, cells::Complex complex) {
  return RelPCS(std::max(a.dim_bound(), b.dim_bound()), close_relations(complex));
}

PcsBuilder& PcsBuilder::cube(std::string name, std::size_t dim) {
  if (dim > dim_bound_) {
    throw std::invalid_argument("cube \"" + name + "\" has dimension " + std::to_string(dim) + " above dim_bound " +
                                std::to_string(dim_bound_));
  }
  cubes_.emplace_back(std::move(name), dim);
  return *this;
}

PcsBuilder& PcsBuilder::face(const std::string& cube, std::string_view word, const std::string& target) {
  return face(cube, CubeWord::parse(word), target);
}

PcsBuilder& PcsBuilder::face(const std::string& cube, const CubeWord& word, const std::string& target) {
  if (word.is_identity()) throw std::invalid_argument("face relation of \"" + cube + "\" uses an identity word");
  if (word.codomain_dim() > dim_bound_) throw std::invalid_argument("face word " + word.str() + " exceeds dim_bound");
  faces_.emplace_back(cube, word, target);
  return *this;
}

RelPCS PcsBuilder::raw() const {
  cells::ComplexBuilder b;
  std::unordered_map<std::string, CellId> ids;
  for (const auto& [name, dim] : cubes_) ids[name] = b.add_cell(name, as_sort(dim));
  auto lookup = [&ids](const std::string& name) {
    auto it = ids.find(name);
    if (it == ids.end()) throw std::invalid_argument("face relation mentions unknown cube \"" + name + "\"");
    return it->second;
  };
  for (const auto& [cube, word, target] : faces_) b.add_incidence(word.code(), lookup(cube), lookup(target));
  return RelPCS(dim_bound_, std::move(b).build());
}

RelPCS PcsBuilder::closed() const { return saturate(raw()); }

RelPCS saturate(const RelPCS& p) { return RelPCS(p.dim_bound(), close_relations(p.complex())); }

ValidationReport validate(const RelPCS& p) {
  ValidationReport report;
  const auto& cx = p.complex();
  auto fail = [&](CellId a, const CubeWord& g, CellId b, std::string reason) {
    report.ok = false;
    report.violation = std::make_tuple(p.name(a), g.str(), p.name(b));
    report.reason = std::move(reason);
    return report;
  };
  for (CellId c = 0; c < p.size(); ++c) {
    if (p.dim(c) > p.dim_bound()) {
      report.ok = false;
      report.reason = "cube \"" + p.name(c) + "\" exceeds dim_bound";
      return report;
    }
  }
  for (const auto& e : cx.incidences()) {
    const CubeWord g = CubeWord::from_code(e.kind);
    if (g.is_identity()) return fail(e.from, g, e.to, "identity word stored");
    if (g.codomain_dim() != p.dim(e.from)) return fail(e.from, g, e.to, "word length differs from the cube dimension");
    if (g.domain_dim() != p.dim(e.to)) return fail(e.from, g, e.to, "face has the wrong dimension");
  }
  for (CellId a : cx.canonical_order()) {
    for (auto [kind, b] : cx.out_edges(a)) {
      const CubeWord g = CubeWord::from_code(kind);
      for (auto [kind2, c] : cx.out_edges(b)) {
        const CubeWord composite = compose_words(CubeWord::from_code(kind2), g);
        if (!cx.has(composite.code(), a, c)) return fail(a, composite, c, "missing composite relation");
      }
    }
  }
  return report;
}

RelPCS tensor(const RelPCS& p, const RelPCS& q) {
  cells::ComplexBuilder b;
  std::map<std::pair<CellId, CellId>, CellId> ids;
  for (CellId x = 0; x < p.size(); ++x)
    for (CellId y = 0; y < q.size(); ++y)
      ids[{x, y}] = b.add_cell("(" + p.name(x) + "," + q.name(y) + ")", as_sort(p.dim(x) + q.dim(y)));

  // Faces of x (with the identity) indexed by word.
  auto faces_with_identity = [](const RelPCS& r, CellId x) {
    std::vector<std::pair<CubeWord, CellId>> out{{CubeWord::identity(r.dim(x)), x}};
    for (auto [kind, y] : r.complex().out_edges(x)) out.emplace_back(CubeWord::from_code(kind), y);
    return out;
  };
  for (CellId x = 0; x < p.size(); ++x) {
    auto fx = faces_with_identity(p, x);
    for (CellId y = 0; y < q.size(); ++y) {
      auto fy = faces_with_identity(q, y);
      for (const auto& [gx, x2] : fx) {
        for (const auto& [gy, y2] : fy) {
          if (gx.is_identity() && gy.is_identity()) continue;
          std::vector<Sign> letters = gx.letters();
          letters.insert(letters.end(), gy.letters().begin(), gy.letters().end());
          b.add_incidence(CubeWord(std::move(letters)).code(), ids[{x, y}], ids[{x2, y2}]);
        }
      }
    }
  }
  return RelPCS(p.dim_bound() + q.dim_bound(), std::move(b).build());
}

Upward upward(const RelPCS& p, CellId c) {
  Upward out;
  const auto& cx = p.complex();
  out.pairs.emplace_back(c, CubeWord::identity(p.dim(c)));
  for (auto [kind, d] : cx.in_edges(c)) out.pairs.emplace_back(d, CubeWord::from_code(kind));

  cells::ComplexBuilder b;
  std::map<std::pair<CellId, CubeWord>, CellId> ids;
  for (const auto& [d, f] : out.pairs) {
    ids[{d, f}] = b.add_cell("(" + p.name(d) + "," + f.str() + ")", as_sort(p.dim(d)));
    out.projection.push_back(d);
  }
  // (d', f o g) ->_g (d, f) whenever d' ->_g d.
  for (const auto& [d, f] : out.pairs) {
    const CellId lower = ids.at({d, f});
    for (auto [kind, d2] : cx.in_edges(d)) {
      const CubeWord g = CubeWord::from_code(kind);
      auto it = ids.find({d2, compose_words(f, g)});
      if (it != ids.end()) b.add_incidence(kind, it->second, lower);
    }
  }
  out.object = RelPCS(p.dim_bound(), std::move(b).build());
  return out;
}

RelPCS interval_v0() {
  return PcsBuilder(1).cube("a", 0).cube("b", 0).cube("e", 1).face("e", "-", "a").face("e", "+", "b").closed();
}

RelPCS interval_v1() {
  return PcsBuilder(1)
      .cube("a", 0)
      .cube("m", 0)
      .cube("b", 0)
      .cube("e1", 1)
      .cube("e2", 1)
      .face("e1", "-", "a")
      .face("e1", "+", "m")
      .face("e2", "-", "m")
      .face("e2", "+", "b")
      .closed();
}

RelPCS tensor_unit() { return PcsBuilder(0).cube("*", 0).raw(); }

RelPCS brick(const BrickIndex& eps) {
  // Closed brick, remembering the factor components of every cube.
  RelPCS closed_brick = tensor_unit();
  std::map<std::string, std::vector<std::string>> components{{"*", {}}};
  for (bool bit : eps.bits()) {
    RelPCS factor = bit ? interval_v1() : interval_v0();
    RelPCS next = tensor(closed_brick, factor);
    std::map<std::string, std::vector<std::string>> next_components;
    for (CellId x = 0; x < closed_brick.size(); ++x) {
      for (CellId y = 0; y < factor.size(); ++y) {
        auto comps = components.at(closed_brick.name(x));
        comps.push_back(factor.name(y));
        next_components["(" + closed_brick.name(x) + "," + factor.name(y) + ")"] = std::move(comps);
      }
    }
    closed_brick = std::move(next);
    components = std::move(next_components);
  }

  // The cube c(eps): the edge of V_0 or the centre of V_1 in each factor.
  std::optional<CellId> centre;
  for (CellId x = 0; x < closed_brick.size(); ++x) {
    const auto& comps = components.at(closed_brick.name(x));
    bool match = true;
    for (std::size_t i = 0; i < comps.size(); ++i) match = match && comps[i] == (eps.bit(i) ? "m" : "e");
    if (match) centre = x;
  }
  Upward up = upward(closed_brick, *centre);

  const DEpsilon d = d_epsilon(eps);
  std::vector<CellId> slot(up.object.size());
  for (CellId cell = 0; cell < up.object.size(); ++cell) {
    const auto& comps = components.at(closed_brick.name(up.pairs[cell].first));
    std::vector<Letter> letters;
    for (const auto& comp : comps) {
      if (comp == "e") letters.push_back(Letter::zero);
      else if (comp == "m") letters.push_back(Letter::one);
      else if (comp == "e1") letters.push_back(Letter::minus);
      else if (comp == "e2") letters.push_back(Letter::plus);
      else throw std::logic_error("brick: unexpected component " + comp);
    }
    slot[cell] = static_cast<CellId>(d.index_of(DEpsilonElement(eps, std::move(letters))));
  }
  cells::ComplexBuilder b;
  for (const auto& w : d.elements) b.add_cell(w.str(), as_sort(w.cube_dim()));
  for (const auto& e : up.object.complex().incidences()) b.add_incidence(e.kind, slot[e.from], slot[e.to]);
  return RelPCS(eps.ambient_dim(), std::move(b).build());
}

std::vector<cells::CellMap> hom_enumerate(const RelPCS& x, const RelPCS& y) {
  return cells::all_morphisms(x.complex(), y.complex());
}

LocalEmbeddingReport is_local_embedding(const RelPCS& source, const RelPCS& target, const cells::CellMap& map) {
  (void)target;
  LocalEmbeddingReport report;
  const auto& cx = source.complex();
  for (CellId c : cx.canonical_order()) {
    auto incoming = cx.in_edges(c);
    for (std::size_t i = 0; i < incoming.size(); ++i) {
      for (std::size_t j = i + 1; j < incoming.size() && incoming[j].first == incoming[i].first; ++j) {
        CellId a = incoming[i].second, b = incoming[j].second;
        if (map[a] == map[b]) {
          report.ok = false;
          report.witness = std::make_tuple(a, b, CubeWord::from_code(incoming[i].first), c);
          return report;
        }
      }
    }
  }
  return report;
}

EuclideanReport euclidean_check(const RelPCS& p, std::size_t n) {
  EuclideanReport report;
  std::map<BrickIndex, RelPCS> bricks;
  for (const auto& eps : BrickIndex::all(n)) bricks.emplace(eps, brick(eps));

  for (CellId c : p.complex().canonical_order()) {
    Upward up = upward(p, c);
    std::optional<Chart> chart;
    for (const auto& [eps, b] : bricks) {
      if (eps.min_dim() != p.dim(c)) continue;
      cells::for_each_morphism(b.complex(), up.object.complex(),
                               cells::default_domains(b.complex(), up.object.complex()),
                               [&](const cells::CellMap& phi) {
                                 if (cells::is_surjective(phi, up.object.size()) &&
                                     is_local_embedding(b, up.object, phi).ok) {
                                   chart = Chart{c, eps, phi};
                                   return false;
                                 }
                                 return true;
                               });
      if (chart) break;
    }
    if (!chart) {
      report.euclidean = false;
      report.counterexample = c;
      return report;
    }
    report.charts.push_back(std::move(*chart));
  }
  return report;
}

}  // namespace cofib
