#include "cofib/samples.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "cofib/blowup.hpp"

namespace cofib {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

template <class V>
const auto& choose(std::mt19937_64& rng, const V& v) {
  return v[pick(rng, 0, v.size() - 1)];
}

RelPCS closed_cube(std::mt19937_64& rng, std::size_t n) {
  RelPCS out = tensor_unit();
  for (std::size_t k = 0; k < n; ++k) out = tensor(out, pick(rng, 0, 1) ? interval_v1() : interval_v0());
  return out;
}

std::string pcs_label(const RelPCS& x) {
  std::string out;
  for (std::size_t c : x.counts()) out += (out.empty() ? "" : "/") + std::to_string(c);
  return out;
}

/// A random morphism x -> y, if any.
std::optional<cells::CellMap> random_hom(std::mt19937_64& rng, const cells::Complex& x, const cells::Complex& y) {
  auto all = cells::all_morphisms(x, y);
  if (all.empty()) return std::nullopt;
  return choose(rng, all);
}

RelAutomaton small_automaton(std::mt19937_64& rng) { return random_automaton(rng, {3, 4, "ab"}); }

}  // namespace

RelAutomaton random_automaton(std::mt19937_64& rng, const RandomShape& shape) {
  const std::size_t alphabet_size = pick(rng, 1, shape.alphabet.size());
  const std::string sigma = shape.alphabet.substr(0, alphabet_size);
  AutomatonBuilder b(sigma);
  const std::size_t states = pick(rng, 1, shape.max_states);
  std::vector<CellId> ids;
  for (std::size_t k = 0; k < states; ++k)
    ids.push_back(b.state("s" + std::to_string(k), pick(rng, 0, 2) == 0, pick(rng, 0, 2) == 0));
  const std::size_t edges = pick(rng, 0, shape.max_edges);
  for (std::size_t k = 0; k < edges; ++k) {
    std::vector<CellId> src, tgt;
    // Mostly one endpoint, sometimes none or two.
    auto endpoints = [&](std::vector<CellId>& out) {
      std::size_t r = pick(rng, 0, 9);
      std::size_t count = r == 0 ? 0 : r == 9 ? 2 : 1;
      for (std::size_t i = 0; i < count; ++i) {
        auto s = ids[pick(rng, 0, states - 1)];
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
      }
    };
    endpoints(src);
    endpoints(tgt);
    b.edge(sigma[pick(rng, 0, sigma.size() - 1)], src, tgt);
  }
  return std::move(b).build();
}

RelPCS random_pcs(std::mt19937_64& rng, std::size_t n) {
  RelPCS base = pick(rng, 0, 1) ? brick(choose(rng, BrickIndex::all(n))) : closed_cube(rng, n);
  for (std::size_t merges = pick(rng, 0, 2);; --merges) {
    std::vector<std::pair<CellId, CellId>> pairs;
    for (std::size_t k = 0; k < merges; ++k) {
      auto cubes = base.cubes(pick(rng, 0, n));
      if (cubes.size() < 2) continue;
      pairs.emplace_back(choose(rng, cubes), choose(rng, cubes));
    }
    auto q = cells::quotient(base.complex(), pairs);
    RelPCS out = saturate(RelPCS(n, std::move(q.object)));
    if (merges == 0 || validate(out).ok) return out;
  }
}

IdentityReport appendix_identity_suite(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  IdentityReport report;
  auto record = [&report](const char* identity, std::string sample, bool holds) {
    report.checks.push_back({identity, std::move(sample), holds});
  };

  // Relational precubical sets.
  std::vector<Generator<RelPCS>> pcs_gens;
  for (std::size_t n : {1, 2})
    for (auto& g : brick_generators(n)) pcs_gens.push_back(g);
  for (std::size_t a = 0; a < pcs_gens.size(); ++a)
    for (std::size_t b = a; b < pcs_gens.size(); ++b)
      if (pcs_gens[a].arrow.target->dim_bound() == pcs_gens[b].arrow.target->dim_bound())
        record("sums", pcs_gens[a].name + " + " + pcs_gens[b].name, appendix::sums(pcs_gens[a].arrow, pcs_gens[b].arrow));
  for (const auto& g : pcs_gens) {
    const std::size_t n = g.arrow.target->dim_bound();
    for (int k = 0; k < 3; ++k) {
      auto x = share(random_pcs(rng, n));
      auto f = random_hom(rng, g.arrow.source->complex(), x->complex());
      if (!f) continue;
      record("pushouts", g.name + " along a map to " + pcs_label(*x),
             appendix::pushouts(g.arrow, PcsMorphism{g.arrow.source, x, *f}));
    }
  }
  for (std::size_t n : {1, 2}) {
    std::map<std::string, Generator<RelPCS>> by_index;
    for (const auto& m : {std::size_t{0}, std::size_t{1}, std::size_t{2}})
      if (m <= n)
        for (auto& g : brick_generators(m)) by_index.emplace(g.name.substr(2), g);
    for (const auto& eps : BrickIndex::all(n)) {
      for (const auto& w : d_epsilon(eps).elements) {
        auto i2 = brick_inclusion(eps, w);
        const auto& g = by_index.at(w.projection().str());
        record("compositions", g.name + " then iota_" + w.str(), appendix::compositions(g.arrow, i2));
        record("retracts", "iota_" + w.str(), appendix::retracts(i2));
        record("double codiagonal", "iota_" + w.str(), appendix::double_codiagonal(i2));
      }
    }
  }
  for (const auto& g : pcs_gens) {
    record("retracts", g.name, appendix::retracts(g.arrow));
    record("double codiagonal", g.name, appendix::double_codiagonal(g.arrow));
  }

  // Relational automata.
  auto aut_gens = automata_generators("ab", 1, 1).positive;
  for (std::size_t a = 0; a < aut_gens.size() && a < 6; ++a)
    for (std::size_t b = a; b < aut_gens.size() && b < 6; ++b)
      record("sums", aut_gens[a].name + " + " + aut_gens[b].name, appendix::sums(aut_gens[a].arrow, aut_gens[b].arrow));
  for (const auto& g : aut_gens) {
    for (int k = 0; k < 3; ++k) {
      auto x = share(small_automaton(rng));
      auto f = random_hom(rng, g.arrow.source->complex(), x->complex());
      if (!f) continue;
      record("pushouts", g.name + " along a map to a random automaton",
             appendix::pushouts(g.arrow, AutMorphism{g.arrow.source, x, *f}));
    }
    record("retracts", g.name, appendix::retracts(g.arrow));
    record("double codiagonal", g.name, appendix::double_codiagonal(g.arrow));
  }
  // Cell attachments: a generator followed by a pushout of another one.
  for (const auto& g : aut_gens) {
    for (const auto& h : aut_gens) {
      auto f = random_hom(rng, h.arrow.source->complex(), g.arrow.target->complex());
      if (!f) continue;
      auto po = pushout(h.arrow, AutMorphism{h.arrow.source, g.arrow.target, *f});
      record("compositions", g.name + " then a pushout of " + h.name, appendix::compositions(g.arrow, po.from_c));
    }
  }
  return report;
}

std::vector<EquivalenceSample> unique_lift_samples(std::uint64_t seed, std::size_t per_carrier) {
  std::mt19937_64 rng(seed);
  std::vector<EquivalenceSample> out;
  auto run = [&out](const char* carrier, const std::string& arrow, const auto& p, const auto& gens) {
    for (const auto& i : gens) {
      const bool unique = unique_rlp(p, std::vector{i}).holds;
      std::remove_cvref_t<decltype(i)> nabla{"nabla " + i.name, codiagonal(i.arrow)};
      const bool both = rlp(p, std::vector{i, nabla}).holds;
      out.push_back({carrier, arrow, i.name, unique, both});
    }
  };

  const std::size_t start = out.size();
  for (std::size_t k = 0; out.size() - start < per_carrier; ++k) {
    const std::size_t n = 1 + k % 2;
    auto gens = brick_generators(n);
    auto x = share(random_pcs(rng, n));
    if (k % 3 == 0) {
      auto b = blowup(*x, n);
      run("pcs", "beta of " + pcs_label(*x), PcsMorphism{share(std::move(b.blowup)), x, b.beta}, gens);
    } else {
      auto y = share(random_pcs(rng, n));
      auto f = random_hom(rng, y->complex(), x->complex());
      if (f) run("pcs", pcs_label(*y) + " -> " + pcs_label(*x), PcsMorphism{y, x, *f}, gens);
    }
  }

  auto aut_gens = automata_generators("ab", 1, 1).positive;
  const std::size_t mid = out.size();
  for (std::size_t k = 0; out.size() - mid < per_carrier; ++k) {
    auto x = share(small_automaton(rng));
    if (k % 3 == 0) {
      auto r = cofibrant_replacement(*x, false);
      run("automata", "beta", AutMorphism{share(r.object), x, r.beta}, aut_gens);
    } else {
      auto y = share(small_automaton(rng));
      auto f = random_hom(rng, y->complex(), x->complex());
      if (f) run("automata", "random map", AutMorphism{y, x, *f}, aut_gens);
    }
  }
  return out;
}

std::vector<TwoOfThreeSample> two_out_of_three_samples(std::uint64_t seed, std::size_t per_carrier) {
  std::mt19937_64 rng(seed);
  std::vector<TwoOfThreeSample> out;

  for (std::size_t k = 0; out.size() < per_carrier; ++k) {
    const std::size_t n = 1 + k % 2;
    auto gens = brick_generators(n);
    auto member = [&gens](const PcsMorphism& m) { return unique_rlp(m, gens).holds; };
    auto push = [&](const char* what, const PcsMorphism& f, const PcsMorphism& g) {
      out.push_back({"pcs", what, member(f), member(g), member(then(f, g))});
    };
    auto x = share(random_pcs(rng, n));
    auto y = share(random_pcs(rng, n));
    switch (k % 3) {
      case 0: {  // f : Y -> Bl X, g = beta_X
        auto b = blowup(*x, n);
        auto bl = share(std::move(b.blowup));
        if (auto f = random_hom(rng, y->complex(), bl->complex()))
          push("map into a blowup, then beta", {y, bl, *f}, {bl, x, b.beta});
        break;
      }
      case 1: {
        auto z = share(random_pcs(rng, n));
        auto f = random_hom(rng, y->complex(), x->complex());
        auto g = random_hom(rng, x->complex(), z->complex());
        if (f && g) push("random maps", {y, x, *f}, {x, z, *g});
        break;
      }
      default: {  // f = beta_Y, g : Y -> X
        auto b = blowup(*y, n);
        if (auto g = random_hom(rng, y->complex(), x->complex()))
          push("beta, then a random map", {share(std::move(b.blowup)), y, b.beta}, {y, x, *g});
      }
    }
  }

  const std::size_t mid = out.size();
  auto member = [](const AutMorphism& m) { return automata_unique_rlp(m).holds; };
  auto push = [&](const char* what, const AutMorphism& f, const AutMorphism& g) {
    out.push_back({"automata", what, member(f), member(g), member(then(f, g))});
  };
  for (std::size_t k = 0; out.size() - mid < per_carrier; ++k) {
    auto x = share(small_automaton(rng));
    auto y = share(small_automaton(rng));
    switch (k % 3) {
      case 0: {
        auto r = cofibrant_replacement(*x, false);
        auto rx = share(r.object);
        if (auto f = random_hom(rng, y->complex(), rx->complex()))
          push("map into a replacement, then beta", {y, rx, *f}, {rx, x, r.beta});
        break;
      }
      case 1: {
        auto z = share(small_automaton(rng));
        auto f = random_hom(rng, y->complex(), x->complex());
        auto g = random_hom(rng, x->complex(), z->complex());
        if (f && g) push("random maps", {y, x, *f}, {x, z, *g});
        break;
      }
      default: {
        auto r = cofibrant_replacement(*y, false);
        if (auto g = random_hom(rng, y->complex(), x->complex()))
          push("beta, then a random map", {share(r.object), y, r.beta}, {y, x, *g});
      }
    }
  }
  return out;
}

}  // namespace cofib
