// Finite rational combinations of polyhedral indicator functions, stored
// as a basic decomposition: the arrangement of the generating hyperplanes
// with one exact weight per full-dimensional cell.  Two functions are
// considered the same when they agree almost everywhere; all operations
// are exact and closed over this representation.
#pragma once

#include "polyvert/arrangement.hpp"
#include "polyvert/hyperplane.hpp"
#include "polyvert/polyhedron.hpp"

#include <vector>

namespace polyvert {

struct FunCell {
  std::vector<int> signs;
  Rat weight;  // nonzero
  Vec witness;
  GeneratorSet gens;
};

struct PolyhedralFunction {
  size_t dim = 0;
  std::vector<OrientedHyperplane> planes;  // canonical, sorted, unique
  std::vector<FunCell> cells;              // sorted by sign vector, weights nonzero

  bool is_zero() const { return cells.empty(); }
  bool integer_weights() const;
};

// Weight of the cell containing x, requiring x off every generating plane.
Rat weight_at_interior(const PolyhedralFunction& f, const Vec& x);

// Point evaluation.  Off the hyperplanes the value is the cell weight; on a
// measure-zero face the result is tagged and carries the weights of all
// adjacent full-dimensional cells (zeros included), sorted descending.
struct EvalResult {
  bool on_face = false;
  Rat value;                  // cell weight when !on_face
  std::vector<Rat> adjacent;  // weights of adjacent cells when on_face
};
EvalResult evaluate(const PolyhedralFunction& f, const Vec& x);

// sum_i coeff_i * [piece_i]; lower-dimensional and empty pieces vanish.
PolyhedralFunction from_weighted_union(size_t dim,
                                       const std::vector<std::pair<Rat, ConvexPolyhedron>>& pieces);

PolyhedralFunction zero_function(size_t dim);

// f + c*g over the common refinement, re-normalized.
PolyhedralFunction combine(const PolyhedralFunction& f, const PolyhedralFunction& g, const Rat& c);

PolyhedralFunction scale(const PolyhedralFunction& f, const Rat& c);

// Almost-everywhere equality (exact).
bool ae_equal(const PolyhedralFunction& f, const PolyhedralFunction& g);

// One-sided limits across an oriented hyperplane, as a function on the
// hyperplane expressed in a rational chart:
//   section(y) = lim f(y + eps*nu) - lim f(y - eps*nu),  nu oriented normal.
// The limits are evaluated exactly by lexicographic signs, no epsilon.
struct SignedSection {
  OrientedHyperplane plane;
  Chart chart;
  PolyhedralFunction section;  // lives in chart coordinates, dim d-1
};
SignedSection signed_section(const PolyhedralFunction& f, const OrientedHyperplane& h);

// Generating hyperplanes with nonzero signed section, oriented so that the
// base point lies strictly on the positive side whenever it is off the
// plane (planes through the base keep canonical orientation, flagged).
struct Facet {
  OrientedHyperplane plane;
  bool contains_base = false;
  SignedSection section;
};
std::vector<Facet> facets(const PolyhedralFunction& f, const Vec& base);

// Closures of the nonzero cells, their count of connected components
// (gluing along shared full-dimensional walls), and boundedness.
struct SupportInfo {
  std::vector<ConvexPolyhedron> cells;
  size_t components = 0;
  bool bounded = true;
};
SupportInfo support(const PolyhedralFunction& f);

// Builds the function directly from an arrangement and one weight per cell
// (zero-weight cells are dropped).
PolyhedralFunction assemble_function(const Arrangement& arr, const std::vector<Rat>& cell_weights);

}  // namespace polyvert
