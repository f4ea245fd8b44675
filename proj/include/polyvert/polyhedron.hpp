// Convex polyhedra with both H- and V-representations, converted by an
// incremental double-description scheme:
//
//   * clip_generators intersects a generator set with one halfspace by
//     keeping satisfying generators and crossing all in/out pairs;
//   * reduce_generators prunes the redundancy exactly: points not on a
//     minimal face, non-extreme rays, and duplicates modulo lineality.
//
// H -> V folds clips over the halfspaces starting from all of R^d.
// V -> H goes through the polar cone of the homogenization and reuses the
// same fold, which also yields an irredundant facet list.
#pragma once

#include "polyvert/hyperplane.hpp"
#include "polyvert/linalg.hpp"
#include "polyvert/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyvert {

// { x : <normal, x> <= offset }
struct Halfspace {
  Vec normal;
  Rat offset;

  Rat slack(const Vec& x) const { return offset - dot(normal, x); }
  bool admits(const Vec& x) const { return slack(x) >= 0; }
};

// Scale so the normal is a primitive integer vector (direction preserved).
Halfspace canonical_halfspace(const Halfspace& h);

// conv(points) + cone(rays) + span(lines); empty iff `points` is empty.
struct GeneratorSet {
  std::vector<Vec> points;
  std::vector<Vec> rays;
  std::vector<Vec> lines;

  bool empty() const { return points.empty(); }
};

// One double-description step: generators of P ∩ {h}.  The result may be
// redundant; callers interleave reduce_generators.
GeneratorSet clip_generators(const GeneratorSet& g, const Halfspace& h);

// Exact pruning relative to the constraints accumulated so far.
void reduce_generators(GeneratorSet& g, const std::vector<Halfspace>& active);

// Fold over all halfspaces (empty -> R^d); nullopt means empty polyhedron.
std::optional<GeneratorSet> hrep_to_vrep(size_t dim, const std::vector<Halfspace>& hs);

// Irredundant facet description of a nonempty generator set.  Implicit
// equalities come out as pairs of opposite halfspaces.
std::vector<Halfspace> vrep_to_hrep(size_t dim, const GeneratorSet& g);

class ConvexPolyhedron {
 public:
  static ConvexPolyhedron from_halfspaces(size_t dim, std::vector<Halfspace> hs);
  static ConvexPolyhedron from_generators(size_t dim, GeneratorSet g);
  static ConvexPolyhedron empty_set(size_t dim);

  size_t dim() const { return dim_; }
  bool is_empty() const;

  const std::vector<Halfspace>& hrep() const;
  const GeneratorSet& vrep() const;
  bool has_hrep() const { return hrep_.has_value(); }
  bool has_vrep() const { return vrep_.has_value(); }

  // Fills whichever representation is missing (idempotent).
  void dual_description() const;

  bool contains(const Vec& x) const;
  bool bounded() const;
  // dim of the affine hull (-1 for the empty set)
  int affine_dim() const;

  // A relative-interior point: mean of the points plus the sum of the rays.
  Vec interior_point() const;

  // Vertices in lex order; fails if the polyhedron has nontrivial lineality.
  std::vector<Vec> vertices() const;

  // Irredundant facet halfspaces (computed from the generators).
  std::vector<Halfspace> facet_halfspaces() const;

 private:
  ConvexPolyhedron(size_t dim) : dim_(dim) {}

  size_t dim_;
  mutable bool empty_ = false;
  mutable bool empty_known_ = false;
  mutable std::optional<std::vector<Halfspace>> hrep_;
  mutable std::optional<GeneratorSet> vrep_;
};

// ---- small helpers shared across modules ----

// Sorts and deduplicates a list of points (lex order).
std::vector<Vec> sorted_unique(std::vector<Vec> pts);

std::string halfspace_to_string(const Halfspace& h);

}  // namespace polyvert
