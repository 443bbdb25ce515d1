#pragma once

// Carrier-agnostic machinery: morphisms, colimits, codiagonals, lifting
// problems and (unique) right lifting property checks.
//
// A carrier is a type of finite object backed by a cells::Complex. It must be
// able to rebuild an object from a glued complex (for example precubical sets
// re-close their face relations under composition).

#include <concepts>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cofib/cell_complex.hpp"

namespace cofib {

template <class T>
concept Carrier = requires(const T& a, const T& b, cells::Complex c) {
  { a.complex() } -> std::convertible_to<const cells::Complex&>;
  { T::joined(a, b, std::move(c)) } -> std::same_as<T>;
};

template <Carrier T>
using ObjectPtr = std::shared_ptr<const T>;

template <Carrier T>
ObjectPtr<T> share(T object) {
  return std::make_shared<const T>(std::move(object));
}

/// A morphism between two shared objects, given by its cell map.
template <Carrier T>
struct Morphism {
  ObjectPtr<T> source;
  ObjectPtr<T> target;
  cells::CellMap map;

  const T& dom() const { return *source; }
  const T& cod() const { return *target; }
  bool valid() const { return cells::is_morphism(source->complex(), target->complex(), map); }
  bool is_iso() const { return cells::is_isomorphism(source->complex(), target->complex(), map); }
};

template <Carrier T>
Morphism<T> identity(const ObjectPtr<T>& object) {
  return {object, object, cells::identity_map(object->complex().size())};
}

/// second o first.
template <Carrier T>
Morphism<T> then(const Morphism<T>& first, const Morphism<T>& second) {
  if (first.target->complex().size() != second.source->complex().size()) {
    throw std::invalid_argument("then: morphisms are not composable");
  }
  return {first.source, second.target, cells::compose(first.map, second.map)};
}

template <Carrier T>
std::vector<cells::CellMap> homs(const T& source, const T& target) {
  return cells::all_morphisms(source.complex(), target.complex());
}

template <Carrier T>
bool isomorphic(const T& a, const T& b) {
  return cells::find_isomorphism(a.complex(), b.complex()).has_value();
}

// ----------------------------------------------------------------------------
// Colimits

template <Carrier T>
struct CoproductResult {
  ObjectPtr<T> object;
  Morphism<T> left;
  Morphism<T> right;
};

template <Carrier T>
CoproductResult<T> coproduct(const ObjectPtr<T>& a, const ObjectPtr<T>& b) {
  auto sum = cells::coproduct(a->complex(), b->complex());
  auto object = share(T::joined(*a, *b, std::move(sum.object)));
  return {object, {a, object, std::move(sum.left)}, {b, object, std::move(sum.right)}};
}

/// f + g : A + C -> B + D.
template <Carrier T>
Morphism<T> sum(const Morphism<T>& f, const Morphism<T>& g) {
  auto dom = coproduct(f.source, g.source);
  auto cod = coproduct(f.target, g.target);
  cells::CellMap map(dom.object->complex().size());
  for (std::size_t c = 0; c < f.map.size(); ++c) map[dom.left.map[c]] = cod.left.map[f.map[c]];
  for (std::size_t c = 0; c < g.map.size(); ++c) map[dom.right.map[c]] = cod.right.map[g.map[c]];
  return {dom.object, cod.object, std::move(map)};
}

template <Carrier T>
struct QuotientResult {
  ObjectPtr<T> object;
  Morphism<T> projection;
};

template <Carrier T>
QuotientResult<T> quotient(const ObjectPtr<T>& object, const std::vector<std::pair<cells::CellId, cells::CellId>>& pairs) {
  auto q = cells::quotient(object->complex(), pairs);
  auto result = share(T::joined(*object, *object, std::move(q.object)));
  return {result, {object, result, std::move(q.projection)}};
}

template <Carrier T>
struct PushoutResult {
  ObjectPtr<T> object;
  Morphism<T> from_b;  // b -> b +_a c
  Morphism<T> from_c;  // c -> b +_a c
};

/// Pushout of the span b <-f- a -g-> c.
template <Carrier T>
PushoutResult<T> pushout(const Morphism<T>& f, const Morphism<T>& g) {
  if (f.source->complex().size() != g.source->complex().size()) {
    throw std::invalid_argument("pushout: the span legs have different domains");
  }
  auto p = cells::pushout(f.source->complex(), f.target->complex(), g.target->complex(), f.map, g.map);
  auto object = share(T::joined(*f.target, *g.target, std::move(p.object)));
  return {object, {f.target, object, std::move(p.from_b)}, {g.target, object, std::move(p.from_c)}};
}

/// The unique map out of a pushout induced by a cocone (u on b, v on c).
template <Carrier T>
Morphism<T> copair(const PushoutResult<T>& po, const Morphism<T>& u, const Morphism<T>& v) {
  cells::CellMap map(po.object->complex().size(), static_cast<cells::CellId>(-1));
  for (std::size_t c = 0; c < u.map.size(); ++c) map[po.from_b.map[c]] = u.map[c];
  for (std::size_t c = 0; c < v.map.size(); ++c) {
    auto& slot = map[po.from_c.map[c]];
    if (slot != static_cast<cells::CellId>(-1) && slot != v.map[c]) {
      throw std::invalid_argument("copair: the maps do not form a cocone");
    }
    slot = v.map[c];
  }
  return {po.object, u.target, std::move(map)};
}

/// The codiagonal of f : c -> d, namely (id, id) : d +_c d -> d.
template <Carrier T>
Morphism<T> codiagonal(const Morphism<T>& f) {
  auto po = pushout(f, f);
  return copair(po, identity(f.target), identity(f.target));
}

/// Both legs of the self-pushout d +_c d of f, with the codiagonal.
template <Carrier T>
struct CodiagonalData {
  PushoutResult<T> pushout;
  Morphism<T> fold;
};

template <Carrier T>
CodiagonalData<T> codiagonal_data(const Morphism<T>& f) {
  auto po = pushout(f, f);
  auto fold = copair(po, identity(f.target), identity(f.target));
  return {std::move(po), std::move(fold)};
}

/// Isomorphism of arrows: isos on domains and codomains making the square commute.
template <Carrier T>
bool arrows_isomorphic(const Morphism<T>& f, const Morphism<T>& g) {
  const auto& fa = f.source->complex();
  const auto& ga = g.source->complex();
  const auto& fb = f.target->complex();
  const auto& gb = g.target->complex();
  if (fa.size() != ga.size() || fb.size() != gb.size()) return false;
  bool found = false;
  cells::for_each_morphism(fb, gb, cells::default_domains(fb, gb), [&](const cells::CellMap& psi) {
    if (!cells::is_isomorphism(fb, gb, psi)) return true;
    // The domain iso is forced pointwise on cells where g is injective; search it.
    cells::Domains d(fa.size());
    for (cells::CellId c = 0; c < fa.size(); ++c) {
      cells::CellId want = psi[f.map[c]];
      for (cells::CellId t : ga.canonical_order())
        if (g.map[t] == want) d[c].push_back(t);
    }
    cells::for_each_morphism(fa, ga, d, [&](const cells::CellMap& phi) {
      if (cells::is_isomorphism(fa, ga, phi)) found = true;
      return !found;
    });
    return !found;
  });
  return found;
}

// ----------------------------------------------------------------------------
// Generators and lifting

template <Carrier T>
struct Generator {
  std::string name;
  Morphism<T> arrow;
};

/// I+ and the codiagonals of its members. The codiagonals are computed.
template <Carrier T>
struct GeneratorSet {
  std::vector<Generator<T>> positive;
  std::vector<Generator<T>> codiagonals;

  std::vector<Generator<T>> all() const {
    std::vector<Generator<T>> out = positive;
    out.insert(out.end(), codiagonals.begin(), codiagonals.end());
    return out;
  }
};

template <Carrier T>
GeneratorSet<T> with_codiagonals(std::vector<Generator<T>> positive) {
  GeneratorSet<T> set;
  for (const auto& g : positive) set.codiagonals.push_back({"nabla " + g.name, codiagonal(g.arrow)});
  set.positive = std::move(positive);
  return set;
}

/// A commuting square p o top = bottom o i.
template <Carrier T>
struct LiftingProblem {
  Morphism<T> i;  // A -> B
  Morphism<T> p;  // X -> Y
  cells::CellMap top;     // A -> X
  cells::CellMap bottom;  // B -> Y

  bool commutes() const {
    for (std::size_t a = 0; a < top.size(); ++a)
      if (p.map[top[a]] != bottom[i.map[a]]) return false;
    return true;
  }
};

/// Every h : B -> X with h o i = top and p o h = bottom.
template <Carrier T>
std::vector<cells::CellMap> solve_lifts(const LiftingProblem<T>& q, std::size_t limit = static_cast<std::size_t>(-1)) {
  const auto& b = q.i.target->complex();
  const auto& x = q.p.source->complex();
  cells::Domains d(b.size());
  std::vector<std::optional<cells::CellId>> forced(b.size());
  for (std::size_t a = 0; a < q.top.size(); ++a) {
    auto& slot = forced[q.i.map[a]];
    if (slot && *slot != q.top[a]) return {};
    slot = q.top[a];
  }
  for (cells::CellId c = 0; c < b.size(); ++c) {
    if (forced[c]) {
      if (q.p.map[*forced[c]] == q.bottom[c]) d[c].push_back(*forced[c]);
      continue;
    }
    for (cells::CellId t : x.canonical_order())
      if (q.p.map[t] == q.bottom[c]) d[c].push_back(t);
  }
  std::vector<cells::CellMap> out;
  cells::for_each_morphism(b, x, d, [&](const cells::CellMap& h) {
    out.push_back(h);
    return out.size() < limit;
  });
  return out;
}

/// Calls visit(top, bottom) for every commuting square of p against i.
template <Carrier T>
void for_each_square(const Morphism<T>& i, const Morphism<T>& p,
                     const std::function<bool(const cells::CellMap&, const cells::CellMap&)>& visit) {
  const auto& a = i.source->complex();
  const auto& b = i.target->complex();
  const auto& x = p.source->complex();
  const auto& y = p.target->complex();
  bool stop = false;
  cells::for_each_morphism(b, y, cells::default_domains(b, y), [&](const cells::CellMap& bottom) {
    cells::Domains d(a.size());
    for (cells::CellId c = 0; c < a.size(); ++c) {
      for (cells::CellId t : x.canonical_order())
        if (p.map[t] == bottom[i.map[c]]) d[c].push_back(t);
    }
    cells::for_each_morphism(a, x, d, [&](const cells::CellMap& top) {
      stop = !visit(top, bottom);
      return !stop;
    });
    return !stop;
  });
}

template <Carrier T>
struct LiftingFailure {
  std::string generator;
  cells::CellMap top;
  cells::CellMap bottom;
  std::size_t lifts = 0;
};

template <Carrier T>
struct LiftingReport {
  bool holds = true;
  std::size_t squares = 0;
  std::optional<LiftingFailure<T>> failure;
};

namespace detail {

template <Carrier T>
LiftingReport<T> check_lifting(const Morphism<T>& p, const std::vector<Generator<T>>& generators, bool unique) {
  LiftingReport<T> report;
  for (const auto& g : generators) {
    for_each_square<T>(g.arrow, p, [&](const cells::CellMap& top, const cells::CellMap& bottom) {
      ++report.squares;
      LiftingProblem<T> q{g.arrow, p, top, bottom};
      std::size_t lifts = solve_lifts(q, 2).size();
      if (lifts == 0 || (unique && lifts > 1)) {
        report.holds = false;
        report.failure = LiftingFailure<T>{g.name, top, bottom, lifts};
        return false;
      }
      return true;
    });
    if (!report.holds) break;
  }
  return report;
}

}  // namespace detail

/// Every square of p against every member of `generators` has exactly one lift.
template <Carrier T>
LiftingReport<T> unique_rlp(const Morphism<T>& p, const std::vector<Generator<T>>& generators) {
  return detail::check_lifting(p, generators, true);
}

/// Every square of p against I+ has exactly one lift.
template <Carrier T>
LiftingReport<T> unique_rlp(const Morphism<T>& p, const GeneratorSet<T>& set) {
  return detail::check_lifting(p, set.positive, true);
}

/// Every square of p against every member of `generators` has a lift.
template <Carrier T>
LiftingReport<T> rlp(const Morphism<T>& p, const std::vector<Generator<T>>& generators) {
  return detail::check_lifting(p, generators, false);
}

}  // namespace cofib
