#include "cofib/blowup.hpp"

#include <map>
#include <stdexcept>

namespace cofib {

namespace {

std::string cube_name(const RelPCS& p, const BrickIndex& eps, const cells::CellMap& f) {
  std::string out = eps.str() + ":";
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k) out += ',';
    out += p.name(f[k]);
  }
  return out;
}

}  // namespace

BlowupResult blowup(const RelPCS& p, std::size_t n) {
  if (auto report = validate(p); !report.ok) throw std::invalid_argument("blowup: input does not validate: " + report.reason);

  BlowupResult out;
  cells::ComplexBuilder b;
  std::map<std::pair<BrickIndex, cells::CellMap>, CellId> ids;
  const auto indices = BrickIndex::all(n);
  for (const auto& eps : indices) {
    for (auto& f : hom_enumerate(brick(eps), p)) {
      ids[{eps, f}] = b.add_cell(cube_name(p, eps, f), static_cast<cells::Sort>(eps.min_dim()));
      out.beta.push_back(f.back());
      out.provenance.push_back({eps, std::move(f)});
    }
  }
  for (CellId cube = 0; cube < out.provenance.size(); ++cube) {
    const auto& [eps, f] = out.provenance[cube];
    for (const auto& w : d_epsilon(eps).elements) {
      if (w.is_top()) continue;
      const auto d = d_epsilon(eps);
      const BrickIndex p_w = w.projection();
      cells::CellMap restricted;
      for (const auto& u : d_epsilon(p_w).elements) restricted.push_back(f[d.index_of(iota_cell(eps, w, u))]);
      b.add_incidence(g_w(eps, w).code(), ids.at({p_w, restricted}), cube);
    }
  }
  out.blowup = saturate(RelPCS(n, std::move(b).build()));
  return out;
}

PcsMorphism brick_inclusion(const BrickIndex& eps, const DEpsilonElement& w) {
  const BrickIndex p_w = w.projection();
  auto d = d_epsilon(eps);
  auto dp = d_epsilon(p_w);
  cells::CellMap map;
  for (const auto& u : dp.elements) map.push_back(d.index_of(iota_cell(eps, w, u)));
  return {share(brick(p_w)), share(brick(eps)), std::move(map)};
}

std::vector<Generator<RelPCS>> brick_generators(std::size_t n) {
  std::vector<Generator<RelPCS>> out;
  for (const auto& eps : BrickIndex::all(n)) {
    RelPCS whole = brick(eps);
    std::vector<bool> keep(whole.size(), true);
    keep.back() = false;  // the minimum eps is last in D_eps order
    auto r = cells::restrict_to(whole.complex(), keep);
    auto source = share(RelPCS(whole.dim_bound(), std::move(r.object)));
    out.push_back({"i_" + eps.str(), {source, share(std::move(whole)), std::move(r.inclusion)}});
  }
  return out;
}

BlowupVerification verify_blowup(const RelPCS& p, std::size_t n) {
  BlowupVerification v;
  BlowupResult result = blowup(p, n);

  EuclideanReport eu = euclidean_check(result.blowup, n);
  v.blowup_euclidean = eu.euclidean;
  v.non_euclidean_cube = eu.counterexample;

  PcsMorphism beta{share(result.blowup), share(p), result.beta};
  auto lifting = unique_rlp(beta, with_codiagonals(brick_generators(n)).all());
  v.unique_lifting = lifting.holds;
  v.squares = lifting.squares;
  v.lifting_failure = lifting.failure;

  v.input_euclidean = euclidean_check(p, n).euclidean;
  v.beta_isomorphism = beta.is_iso();
  return v;
}

bool brick_colimit_check(const BrickIndex& eps) {
  const DEpsilon d = d_epsilon(eps);

  // Disjoint union of B_{p(w)} over w != eps.
  cells::ComplexBuilder b;
  std::vector<std::vector<CellId>> copy(d.elements.size());
  for (std::size_t k = 0; k < d.elements.size(); ++k) {
    const auto& w = d.elements[k];
    if (w.is_top()) continue;
    RelPCS piece = brick(w.projection());
    for (CellId c = 0; c < piece.size(); ++c)
      copy[k].push_back(b.add_cell(w.str() + "/" + piece.name(c), piece.complex().sort(c)));
    for (const auto& e : piece.complex().incidences()) b.add_incidence(e.kind, copy[k][e.from], copy[k][e.to]);
  }
  cells::Complex sum = std::move(b).build();

  // Transition maps iota_{w <= w'} = iota_{w /\ p(w')}.
  std::vector<std::pair<CellId, CellId>> glue;
  for (std::size_t i = 0; i < d.elements.size(); ++i) {
    for (std::size_t j = 0; j < d.elements.size(); ++j) {
      const auto &w = d.elements[i], &w2 = d.elements[j];
      if (i == j || w.is_top() || w2.is_top() || !w.leq(w2)) continue;
      const BrickIndex p2 = w2.projection();
      const DEpsilonElement along = *w.meet(p2);
      const DEpsilon dp = d_epsilon(w.projection());
      const DEpsilon dp2 = d_epsilon(p2);
      for (std::size_t u = 0; u < dp.elements.size(); ++u)
        glue.emplace_back(copy[i][u], copy[j][dp2.index_of(iota_cell(p2, along, dp.elements[u]))]);
    }
  }
  RelPCS colimit = saturate(RelPCS(eps.ambient_dim(), cells::quotient(sum, glue).object));

  RelPCS whole = brick(eps);
  std::vector<bool> keep(whole.size(), true);
  keep.back() = false;
  RelPCS punctured(whole.dim_bound(), cells::restrict_to(whole.complex(), keep).object);
  return isomorphic(colimit, punctured);
}

}  // namespace cofib
