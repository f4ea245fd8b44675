// Symbolic Fourier-Laplace transforms of polyhedral functions.  A
// transform is a finite sum of terms
//
//     coeff * exp(<vertex, z>) / prod_j <form_j, z>
//
// with exactly d independent forms per term.  Simplicial cones map to a
// single term; line-cones map to zero; bounded functions are triangulated
// and expanded through the vertex cones of their simplices; unbounded
// functions go cell by cell through the tangent cones at the cell
// vertices (cells with lineality contribute nothing).
#pragma once

#include "polyvert/cones.hpp"
#include "polyvert/polyfun.hpp"
#include "polyvert/triangulate.hpp"

#include <map>
#include <vector>

namespace polyvert {

struct TransformTerm {
  Rat coeff;
  Vec vertex;
  std::vector<Vec> forms;  // canonical: primitive integer, positive leading
                           // entry, lex-sorted
};

struct TransformSum {
  size_t dim = 0;
  std::vector<TransformTerm> terms;  // merged, canonically ordered

  bool trivially_zero() const { return terms.empty(); }
};

// coeff = weight * (-1)^d * |det(generators)|, adjusted by the rescaling
// that makes each generator a canonical form; vertex = apex.
TransformTerm simplicial_cone_transform(const Rat& weight, const Cone& c);

// Sorts by (vertex, forms), merges equal keys, drops zero coefficients.
TransformSum merge_terms(size_t dim, std::vector<TransformTerm> terms);

TransformSum transform(const PolyconicalFunction& g);
TransformSum transform(const PolyhedralFunction& f);

std::map<Vec, std::vector<TransformTerm>, LexLess> group_by_vertex(const TransformSum& ts);

// Exact zero test.  Vertex groups with at most `expansion_limit` terms are
// decided by common-denominator polynomial expansion (unconditional);
// larger groups by exact evaluation on the moment curve (k, k^2, ..., k^d)
// at enough non-pole integer nodes to exceed the degree bound.
inline constexpr size_t kExpansionTermLimit = 8;

bool is_zero_by_expansion(size_t dim, const std::vector<TransformTerm>& vertex_group);
bool is_zero_by_grid(size_t dim, const std::vector<TransformTerm>& vertex_group, uint64_t seed);
bool is_zero(const TransformSum& ts, uint64_t seed = 0);

// Exact evaluation at rational z: one (exponent, value) pair per class of
// equal <vertex, z>, zero classes dropped, sorted by exponent.  Throws
// ErrKind::pole when some form annihilates z.
std::vector<std::pair<Rat, Rat>> evaluate_exact(const TransformSum& ts, const Vec& z);

double evaluate_numeric(const TransformSum& ts, const Vec& z);

// Independent numeric oracle: integrates exp(<z, x>) over f by adaptive
// divided-difference quadrature on a triangulation (exact vertices, double
// accumulation).  Requires bounded support.
double quadrature_oracle(const PolyhedralFunction& f, const Vec& z);

}  // namespace polyvert
