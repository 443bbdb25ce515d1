#include "cofib/cell_complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace cofib::cells {

CellId ComplexBuilder::add_cell(std::string name, Sort sort, Flags flags) {
  names_.push_back(std::move(name));
  sorts_.push_back(sort);
  flags_.push_back(flags);
  return static_cast<CellId>(names_.size() - 1);
}

void ComplexBuilder::add_incidence(Kind kind, CellId from, CellId to) {
  if (from >= names_.size() || to >= names_.size()) throw std::out_of_range("add_incidence: unknown cell");
  incidences_.push_back({kind, from, to});
}

void ComplexBuilder::set_flags(CellId cell, Flags flags) { flags_.at(cell) = flags; }

Complex ComplexBuilder::build() && {
  Complex c;
  c.names_ = std::move(names_);
  c.sorts_ = std::move(sorts_);
  c.flags_ = std::move(flags_);
  c.incidences_ = std::move(incidences_);
  std::sort(c.incidences_.begin(), c.incidences_.end());
  c.incidences_.erase(std::unique(c.incidences_.begin(), c.incidences_.end()), c.incidences_.end());

  const std::size_t n = c.names_.size();
  c.by_name_.reserve(n);
  for (CellId i = 0; i < n; ++i) {
    if (!c.by_name_.emplace(c.names_[i], i).second) {
      throw std::invalid_argument("duplicate cell name \"" + c.names_[i] + "\"");
    }
  }

  auto build_csr = [n](const std::vector<Incidence>& inc, bool outgoing, std::vector<std::size_t>& begin,
                       std::vector<std::pair<Kind, CellId>>& data) {
    begin.assign(n + 1, 0);
    for (const auto& e : inc) ++begin[(outgoing ? e.from : e.to) + 1];
    std::partial_sum(begin.begin(), begin.end(), begin.begin());
    data.resize(inc.size());
    std::vector<std::size_t> fill(begin.begin(), begin.end() - 1);
    for (const auto& e : inc) {
      CellId key = outgoing ? e.from : e.to;
      data[fill[key]++] = {e.kind, outgoing ? e.to : e.from};
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::sort(data.begin() + static_cast<std::ptrdiff_t>(begin[i]), data.begin() + static_cast<std::ptrdiff_t>(begin[i + 1]));
    }
  };
  build_csr(c.incidences_, true, c.out_begin_, c.out_);
  build_csr(c.incidences_, false, c.in_begin_, c.in_);

  c.order_.resize(n);
  std::iota(c.order_.begin(), c.order_.end(), CellId{0});
  std::sort(c.order_.begin(), c.order_.end(), [&c](CellId a, CellId b) {
    if (c.sorts_[a] != c.sorts_[b]) return c.sorts_[a] > c.sorts_[b];
    return c.names_[a] < c.names_[b];
  });
  return c;
}

std::optional<CellId> Complex::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

CellId Complex::at(std::string_view name) const {
  auto id = find(name);
  if (!id) throw std::out_of_range("unknown cell \"" + std::string(name) + "\"");
  return *id;
}

bool Complex::has(Kind kind, CellId from, CellId to) const {
  auto edges = out_edges(from);
  return std::binary_search(edges.begin(), edges.end(), std::pair<Kind, CellId>{kind, to});
}

namespace {

std::vector<CellId> kind_slice(std::span<const std::pair<Kind, CellId>> edges, Kind kind) {
  auto lo = std::lower_bound(edges.begin(), edges.end(), std::pair<Kind, CellId>{kind, 0});
  auto hi = std::lower_bound(lo, edges.end(), std::pair<Kind, CellId>{kind + 1, 0});
  std::vector<CellId> out;
  for (auto it = lo; it != hi; ++it) out.push_back(it->second);
  return out;
}

}  // namespace

std::vector<CellId> Complex::successors(Kind kind, CellId from) const { return kind_slice(out_edges(from), kind); }

std::vector<CellId> Complex::predecessors(Kind kind, CellId to) const { return kind_slice(in_edges(to), kind); }

std::span<const std::pair<Kind, CellId>> Complex::out_edges(CellId c) const {
  return {out_.data() + out_begin_[c], out_begin_[c + 1] - out_begin_[c]};
}

std::span<const std::pair<Kind, CellId>> Complex::in_edges(CellId c) const {
  return {in_.data() + in_begin_[c], in_begin_[c + 1] - in_begin_[c]};
}

ComplexBuilder Complex::to_builder() const {
  ComplexBuilder b;
  b.names_ = names_;
  b.sorts_ = sorts_;
  b.flags_ = flags_;
  b.incidences_ = incidences_;
  return b;
}

bool Complex::operator==(const Complex& other) const {
  return names_ == other.names_ && sorts_ == other.sorts_ && flags_ == other.flags_ &&
         incidences_ == other.incidences_;
}

bool is_morphism(const Complex& source, const Complex& target, const CellMap& map) {
  if (map.size() != source.size()) return false;
  for (CellId c = 0; c < source.size(); ++c) {
    if (map[c] >= target.size()) return false;
    if (source.sort(c) != target.sort(map[c])) return false;
    if ((source.flags(c) & ~target.flags(map[c])) != 0) return false;
  }
  for (const auto& e : source.incidences()) {
    if (!target.has(e.kind, map[e.from], map[e.to])) return false;
  }
  return true;
}

bool is_injective(const CellMap& map) {
  std::unordered_set<CellId> seen(map.begin(), map.end());
  return seen.size() == map.size();
}

bool is_surjective(const CellMap& map, std::size_t target_size) {
  std::vector<bool> hit(target_size, false);
  for (CellId c : map)
    if (c < target_size) hit[c] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_bijective(const CellMap& map, std::size_t target_size) {
  return map.size() == target_size && is_injective(map) && is_surjective(map, target_size);
}

bool is_isomorphism(const Complex& source, const Complex& target, const CellMap& map) {
  if (!is_morphism(source, target, map) || !is_bijective(map, target.size())) return false;
  for (CellId c = 0; c < source.size(); ++c)
    if (source.flags(c) != target.flags(map[c])) return false;
  // Injective images of a preserved set have the same size iff it is reflected.
  return source.incidences().size() == target.incidences().size();
}

CellMap identity_map(std::size_t size) {
  CellMap m(size);
  std::iota(m.begin(), m.end(), CellId{0});
  return m;
}

CellMap compose(const CellMap& first, const CellMap& second) {
  CellMap out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = second.at(first[i]);
  return out;
}

Domains default_domains(const Complex& source, const Complex& target) {
  Domains d(source.size());
  for (CellId c = 0; c < source.size(); ++c) {
    for (CellId t : target.canonical_order()) {
      if (target.sort(t) == source.sort(c) && (source.flags(c) & ~target.flags(t)) == 0) d[c].push_back(t);
    }
  }
  return d;
}

namespace {

class MorphismSearch {
 public:
  MorphismSearch(const Complex& source, const Complex& target, const Domains& domains,
                 const std::function<bool(const CellMap&)>& visit)
      : source_(source), target_(target), visit_(visit), order_(source.canonical_order()) {
    rank_.assign(target.size(), 0);
    for (std::size_t i = 0; i < target.canonical_order().size(); ++i) rank_[target.canonical_order()[i]] = i;
    position_.assign(source.size(), 0);
    for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i]] = i;
    allowed_.assign(source.size(), std::vector<bool>(target.size(), false));
    for (CellId c = 0; c < source.size(); ++c) {
      for (CellId t : domains.at(c)) {
        if (target.sort(t) == source.sort(c) && (source.flags(c) & ~target.flags(t)) == 0) allowed_[c][t] = true;
      }
    }
    domains_ = &domains;
    image_.assign(source.size(), 0);
  }

  void run() { (void)descend(0); }

 private:
  bool descend(std::size_t depth) {
    if (depth == order_.size()) return visit_(image_);
    const CellId cell = order_[depth];

    // Constraints from already-assigned neighbours.
    struct Constraint {
      Kind kind;
      CellId image;
      bool outgoing;  // (kind, assigned -> cell) when false; (kind, cell -> assigned) when true
    };
    std::vector<Constraint> constraints;
    for (auto [kind, other] : source_.in_edges(cell)) {
      if (position_[other] < depth) constraints.push_back({kind, image_[other], false});
    }
    for (auto [kind, other] : source_.out_edges(cell)) {
      if (position_[other] < depth) constraints.push_back({kind, image_[other], true});
    }

    auto satisfies = [&](CellId t) {
      if (!allowed_[cell][t]) return false;
      for (const auto& k : constraints) {
        if (k.outgoing ? !target_.has(k.kind, t, k.image) : !target_.has(k.kind, k.image, t)) return false;
      }
      return true;
    };

    std::vector<CellId> candidates;
    if (constraints.empty()) {
      for (CellId t : (*domains_)[cell])
        if (satisfies(t)) candidates.push_back(t);
    } else {
      const auto& first = constraints.front();
      std::vector<CellId> pool = first.outgoing ? target_.predecessors(first.kind, first.image)
                                                : target_.successors(first.kind, first.image);
      for (CellId t : pool)
        if (satisfies(t)) candidates.push_back(t);
      std::sort(candidates.begin(), candidates.end(), [this](CellId a, CellId b) { return rank_[a] < rank_[b]; });
    }

    for (CellId t : candidates) {
      image_[cell] = t;
      if (!descend(depth + 1)) return false;
    }
    return true;
  }

  const Complex& source_;
  const Complex& target_;
  const std::function<bool(const CellMap&)>& visit_;
  const Domains* domains_ = nullptr;
  std::vector<CellId> order_;
  std::vector<std::size_t> rank_;
  std::vector<std::size_t> position_;
  std::vector<std::vector<bool>> allowed_;
  CellMap image_;
};

}  // namespace

void for_each_morphism(const Complex& source, const Complex& target, const Domains& domains,
                       const std::function<bool(const CellMap&)>& visit) {
  if (domains.size() != source.size()) throw std::invalid_argument("for_each_morphism: domains size mismatch");
  MorphismSearch(source, target, domains, visit).run();
}

std::vector<CellMap> all_morphisms(const Complex& source, const Complex& target) {
  return all_morphisms(source, target, default_domains(source, target));
}

std::vector<CellMap> all_morphisms(const Complex& source, const Complex& target, const Domains& domains) {
  std::vector<CellMap> out;
  for_each_morphism(source, target, domains, [&out](const CellMap& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::size_t count_morphisms(const Complex& source, const Complex& target, const Domains& domains) {
  std::size_t count = 0;
  for_each_morphism(source, target, domains, [&count](const CellMap&) {
    ++count;
    return true;
  });
  return count;
}

std::optional<CellMap> find_isomorphism(const Complex& a, const Complex& b) {
  if (a.size() != b.size() || a.incidences().size() != b.incidences().size()) return std::nullopt;
  Domains d(a.size());
  for (CellId c = 0; c < a.size(); ++c) {
    for (CellId t : b.canonical_order()) {
      if (a.sort(c) == b.sort(t) && a.flags(c) == b.flags(t) && a.in_edges(c).size() == b.in_edges(t).size() &&
          a.out_edges(c).size() == b.out_edges(t).size()) {
        d[c].push_back(t);
      }
    }
  }
  std::optional<CellMap> found;
  for_each_morphism(a, b, d, [&](const CellMap& m) {
    if (is_injective(m)) {
      found = m;
      return false;
    }
    return true;
  });
  if (found && !is_isomorphism(a, b, *found)) return std::nullopt;
  return found;
}

Coproduct coproduct(const Complex& a, const Complex& b) {
  ComplexBuilder builder;
  std::unordered_set<std::string> used;
  Coproduct out;
  for (CellId c = 0; c < a.size(); ++c) {
    used.insert(a.name(c));
    out.left.push_back(builder.add_cell(a.name(c), a.sort(c), a.flags(c)));
  }
  for (CellId c = 0; c < b.size(); ++c) {
    std::string name = b.name(c);
    while (used.count(name) != 0) name += '\'';
    used.insert(name);
    out.right.push_back(builder.add_cell(std::move(name), b.sort(c), b.flags(c)));
  }
  for (const auto& e : a.incidences()) builder.add_incidence(e.kind, out.left[e.from], out.left[e.to]);
  for (const auto& e : b.incidences()) builder.add_incidence(e.kind, out.right[e.from], out.right[e.to]);
  out.object = std::move(builder).build();
  return out;
}

Quotient quotient(const Complex& object, std::span<const std::pair<CellId, CellId>> pairs) {
  const std::size_t n = object.size();
  std::vector<CellId> parent(n);
  std::iota(parent.begin(), parent.end(), CellId{0});
  auto find = [&parent](CellId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (auto [x, y] : pairs) {
    CellId rx = find(x), ry = find(y);
    if (rx == ry) continue;
    if (object.sort(rx) != object.sort(ry)) {
      throw std::invalid_argument("quotient: cannot identify \"" + object.name(x) + "\" with \"" + object.name(y) +
                                  "\" (different sorts)");
    }
    // Lowest id stays the representative.
    if (ry < rx) std::swap(rx, ry);
    parent[ry] = rx;
  }

  Quotient out;
  out.projection.assign(n, 0);
  ComplexBuilder builder;
  std::vector<CellId> class_of(n, static_cast<CellId>(-1));
  for (CellId c = 0; c < n; ++c) {
    CellId r = find(c);
    if (class_of[r] == static_cast<CellId>(-1)) class_of[r] = builder.add_cell(object.name(r), object.sort(r), 0);
    out.projection[c] = class_of[r];
  }
  std::vector<Flags> flags(builder.size(), 0);
  for (CellId c = 0; c < n; ++c) flags[out.projection[c]] |= object.flags(c);
  for (CellId k = 0; k < flags.size(); ++k) builder.set_flags(k, flags[k]);
  for (const auto& e : object.incidences()) builder.add_incidence(e.kind, out.projection[e.from], out.projection[e.to]);
  out.object = std::move(builder).build();
  return out;
}

Pushout pushout(const Complex& a, const Complex& b, const Complex& c, const CellMap& f, const CellMap& g) {
  if (f.size() != a.size() || g.size() != a.size()) throw std::invalid_argument("pushout: span maps do not match apex");
  Coproduct sum = coproduct(b, c);
  std::vector<std::pair<CellId, CellId>> glue;
  glue.reserve(a.size());
  for (CellId x = 0; x < a.size(); ++x) glue.emplace_back(sum.left.at(f[x]), sum.right.at(g[x]));
  Quotient q = quotient(sum.object, glue);
  return {std::move(q.object), compose(sum.left, q.projection), compose(sum.right, q.projection)};
}

Restriction restrict_to(const Complex& object, const std::vector<bool>& keep) {
  ComplexBuilder builder;
  std::vector<CellId> index(object.size(), static_cast<CellId>(-1));
  Restriction out;
  for (CellId c = 0; c < object.size(); ++c) {
    if (!keep.at(c)) continue;
    index[c] = builder.add_cell(object.name(c), object.sort(c), object.flags(c));
    out.inclusion.push_back(c);
  }
  for (const auto& e : object.incidences()) {
    if (keep[e.from] && keep[e.to]) builder.add_incidence(e.kind, index[e.from], index[e.to]);
  }
  out.object = std::move(builder).build();
  return out;
}

Complex renamed(const Complex& object, const std::vector<std::string>& names) {
  if (names.size() != object.size()) throw std::invalid_argument("renamed: wrong number of names");
  ComplexBuilder builder;
  for (CellId c = 0; c < object.size(); ++c) builder.add_cell(names[c], object.sort(c), object.flags(c));
  for (const auto& e : object.incidences()) builder.add_incidence(e.kind, e.from, e.to);
  return std::move(builder).build();
}

}  // namespace cofib::cells
