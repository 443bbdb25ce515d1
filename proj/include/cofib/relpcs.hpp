#pragma once

// Finite relational precubical sets.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cofib/cell_complex.hpp"
#include "cofib/cube_word.hpp"
#include "cofib/toolkit.hpp"

namespace cofib {

using cells::CellId;

/// A relational precubical set. Cubes are cells whose sort is their
/// dimension; an incidence (code(g), a, b) states a ->_g b, i.e. b is a
/// g-face of a. Identity relations are implicit and never stored.
///
/// Objects are not required to be closed: validate() reports grading and
/// transitivity failures, and saturate() computes the closure.
class RelPCS {
 public:
  RelPCS() = default;
  RelPCS(std::size_t dim_bound, cells::Complex complex) : dim_bound_(dim_bound), complex_(std::move(complex)) {}

  std::size_t dim_bound() const { return dim_bound_; }
  const cells::Complex& complex() const { return complex_; }

  std::size_t size() const { return complex_.size(); }
  std::size_t dim(CellId c) const { return static_cast<std::size_t>(complex_.sort(c)); }
  const std::string& name(CellId c) const { return complex_.name(c); }
  CellId at(std::string_view name) const { return complex_.at(name); }

  /// Cubes of dimension d in name order.
  std::vector<CellId> cubes(std::size_t d) const;
  /// Number of cubes in each dimension 0..dim_bound.
  std::vector<std::size_t> counts() const;
  /// The cubes b with c ->_g b.
  std::vector<CellId> faces(CellId c, const CubeWord& g) const;
  /// Every stored relation (a, g, b).
  std::vector<std::tuple<CellId, CubeWord, CellId>> relations() const;

  /// Carrier hook: an object over the glued complex, closed under composition.
  static RelPCS joined(const RelPCS& a, const RelPCS& b, cells::Complex complex);

  bool operator==(const RelPCS&) const = default;

 private:
  std::size_t dim_bound_ = 0;
  cells::Complex complex_;
};

using PcsPtr = ObjectPtr<RelPCS>;
using PcsMorphism = Morphism<RelPCS>;

/// Builds a RelPCS from named cubes and face relations.
class PcsBuilder {
 public:
  explicit PcsBuilder(std::size_t dim_bound) : dim_bound_(dim_bound) {}

  PcsBuilder& cube(std::string name, std::size_t dim);
  /// Records `target` as the `word`-face of `cube`. Throws
  /// std::invalid_argument on unknown cubes, identity words, or words longer
  /// than dim_bound. Grading mismatches are kept so validate() can see them.
  PcsBuilder& face(const std::string& cube, std::string_view word, const std::string& target);
  PcsBuilder& face(const std::string& cube, const CubeWord& word, const std::string& target);

  /// The data exactly as given.
  RelPCS raw() const;
  /// The data closed under composition of relations.
  RelPCS closed() const;

 private:
  std::size_t dim_bound_;
  std::vector<std::pair<std::string, std::size_t>> cubes_;
  std::vector<std::tuple<std::string, CubeWord, std::string>> faces_;
};

/// Adds every composite relation forced by lax transitivity.
RelPCS saturate(const RelPCS& p);

struct ValidationReport {
  bool ok = true;
  /// A witnessing triple (a, g, b): either a grading failure of the stored
  /// relation a ->_g b, or a missing composite relation.
  std::optional<std::tuple<std::string, std::string, std::string>> violation;
  std::string reason;
};

ValidationReport validate(const RelPCS& p);

RelPCS tensor(const RelPCS& p, const RelPCS& q);

struct Upward {
  RelPCS object;
  /// The cell (d, f) for each cube, with the cube (c, id) first.
  std::vector<std::pair<CellId, CubeWord>> pairs;
  /// (d, f) -> d.
  cells::CellMap projection;
};

/// The upward neighborhood of c: pairs (d, f) with d ->_f c.
Upward upward(const RelPCS& p, CellId c);

// Standard small objects.
RelPCS interval_v0();
RelPCS interval_v1();
RelPCS tensor_unit();

/// The euclidean brick B_eps. Cell k is the k-th element of d_epsilon(eps)
/// and is named by its letters.
RelPCS brick(const BrickIndex& eps);

/// All morphisms in canonical order.
std::vector<cells::CellMap> hom_enumerate(const RelPCS& x, const RelPCS& y);

struct LocalEmbeddingReport {
  bool ok = true;
  /// (a, b, w, c): distinct a, b with a ->_w c and b ->_w c but equal images.
  std::optional<std::tuple<CellId, CellId, CubeWord, CellId>> witness;
};

LocalEmbeddingReport is_local_embedding(const RelPCS& source, const RelPCS& target, const cells::CellMap& map);

struct Chart {
  CellId cube;
  BrickIndex eps;
  /// B_eps -> upward(P, cube).
  cells::CellMap map;
};

struct EuclideanReport {
  bool euclidean = true;
  std::vector<Chart> charts;
  std::optional<CellId> counterexample;
};

/// Searches a chart at every cube. Stops at the first cube without one.
EuclideanReport euclidean_check(const RelPCS& p, std::size_t n);

}  // namespace cofib
