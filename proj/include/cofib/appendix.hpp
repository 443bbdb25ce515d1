#pragma once

// Identities satisfied by codiagonals, checked on concrete arrows by explicit
// colimit computations, plus the unique-lifting and 2-out-of-3 properties of
// the class of maps with unique lifts.

#include <functional>
#include <string>
#include <vector>

#include "cofib/toolkit.hpp"

namespace cofib {

struct IdentityCheck {
  std::string identity;
  std::string sample;
  bool holds = false;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += !c.holds;
    return n;
  }
  std::size_t count(const std::string& identity) const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.identity == identity;
    return n;
  }
};

namespace appendix {

/// The map of self-pushouts B +_A B -> B' +_{A'} B' induced by b : B -> B'
/// for a square from i to j.
template <Carrier T>
Morphism<T> induced(const CodiagonalData<T>& from, const CodiagonalData<T>& to, const Morphism<T>& b) {
  return copair(from.pushout, then(b, to.pushout.from_b), then(b, to.pushout.from_c));
}

/// A square with corners top-left `a`, legs `right` : a -> b and `down` : a -> c,
/// and closing maps u : b -> d, v : c -> d is cocartesian.
template <Carrier T>
bool cocartesian(const Morphism<T>& right, const Morphism<T>& down, const Morphism<T>& u, const Morphism<T>& v) {
  if (cells::compose(right.map, u.map) != cells::compose(down.map, v.map)) return false;
  auto po = pushout(right, down);
  try {
    return copair(po, u, v).is_iso();
  } catch (const std::invalid_argument&) {
    return false;
  }
}

/// The codiagonal of a sum is the sum of the codiagonals.
template <Carrier T>
bool sums(const Morphism<T>& f, const Morphism<T>& g) {
  return arrows_isomorphic(codiagonal(sum(f, g)), sum(codiagonal(f), codiagonal(g)));
}

/// For i' the pushout of i : A -> B along f : A -> C, the square from nabla_i
/// to nabla_{i'} is cocartesian.
template <Carrier T>
bool pushouts(const Morphism<T>& i, const Morphism<T>& f) {
  auto po = pushout(i, f);
  const Morphism<T>& i_prime = po.from_c;
  auto di = codiagonal_data(i);
  auto dj = codiagonal_data(i_prime);
  auto k = induced(di, dj, po.from_b);
  return cocartesian(di.fold, k, po.from_b, dj.fold);
}

/// nabla_{i2 o i1} is nabla_{i2} after a pushout of nabla_{i1}.
template <Carrier T>
bool compositions(const Morphism<T>& i1, const Morphism<T>& i2) {
  auto c = then(i1, i2);
  auto dc = codiagonal_data(c);
  auto d1 = codiagonal_data(i1);
  auto d2 = codiagonal_data(i2);
  // q : C +_A C -> C +_B C, the identity on both copies of C.
  auto q = copair(dc.pushout, d2.pushout.from_b, d2.pushout.from_c);
  if (then(q, d2.fold).map != dc.fold.map) return false;
  auto k = induced(d1, dc, i2);
  return cocartesian(d1.fold, k, then(i2, d2.pushout.from_b), q);
}

/// i is a retract of i + i; the codiagonal of i is then a retract of the
/// codiagonal of i + i through the induced maps.
template <Carrier T>
bool retracts(const Morphism<T>& i) {
  auto dom = coproduct(i.source, i.source);
  auto cod = coproduct(i.target, i.target);
  cells::CellMap j_map(dom.object->complex().size());
  for (std::size_t c = 0; c < i.map.size(); ++c) {
    j_map[dom.left.map[c]] = cod.left.map[i.map[c]];
    j_map[dom.right.map[c]] = cod.right.map[i.map[c]];
  }
  Morphism<T> j{dom.object, cod.object, std::move(j_map)};
  // Section B -> B + B and retraction B + B -> B.
  const Morphism<T>& section = cod.left;
  cells::CellMap fold(cod.object->complex().size());
  for (std::size_t c = 0; c < i.target->complex().size(); ++c) fold[cod.left.map[c]] = fold[cod.right.map[c]] = c;
  Morphism<T> retraction{cod.object, i.target, std::move(fold)};

  auto di = codiagonal_data(i);
  auto dj = codiagonal_data(j);
  auto s = induced(di, dj, section);
  auto r = induced(dj, di, retraction);
  bool squares = cells::compose(s.map, dj.fold.map) == cells::compose(di.fold.map, section.map) &&
                 cells::compose(r.map, di.fold.map) == cells::compose(dj.fold.map, retraction.map);
  return squares && cells::compose(s.map, r.map) == cells::identity_map(s.map.size());
}

template <Carrier T>
bool double_codiagonal(const Morphism<T>& f) {
  return codiagonal(codiagonal(f)).is_iso();
}

/// unique lifts against i  <=>  lifts against i and nabla_i.
template <Carrier T>
bool unique_lift_equivalence(const Morphism<T>& p, const Generator<T>& i) {
  const bool unique = unique_rlp(p, std::vector<Generator<T>>{i}).holds;
  const bool both = rlp(p, std::vector<Generator<T>>{i, {"nabla " + i.name, codiagonal(i.arrow)}}).holds;
  return unique == both;
}

/// The three implications of 2-out-of-3 for composable f, g under `member`.
template <Carrier T>
bool two_out_of_three(const Morphism<T>& f, const Morphism<T>& g, const std::function<bool(const Morphism<T>&)>& member) {
  const bool mf = member(f), mg = member(g), mgf = member(then(f, g));
  if (mf && mg && !mgf) return false;
  if (mgf && mg && !mf) return false;
  if (mgf && mf && !mg) return false;
  return true;
}

}  // namespace appendix

}  // namespace cofib
