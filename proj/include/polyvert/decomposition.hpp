// Vertex detection and the two signed decompositions:
//   * simplices: f as an integer/rational combination of simplices whose
//     vertices are exactly the algebraic vertices (pyramid recursion over
//     facet sections);
//   * cones: f as the sum of its tangent cones at the algebraic vertices
//     plus a residual list of line-cones (cell-by-cell Brianchon-Gram,
//     star reduction at the non-algebraic candidate vertices).
// Both decompositions carry a machine-checked certificate.
#pragma once

#include "polyvert/cones.hpp"
#include "polyvert/polyfun.hpp"
#include "polyvert/transform.hpp"
#include "polyvert/triangulate.hpp"

#include <vector>

namespace polyvert {

// Candidate vertices are the 0-faces of the generating arrangement; a
// candidate is algebraic when the transform of its tangent cone is nonzero.
std::vector<Vec> algebraic_vertices(const PolyhedralFunction& f, uint64_t seed = 0);

// Geometric vertices: the essential hyperplanes through the candidate (the
// ones where the support indicator of the tangent cone has a nonzero
// section) admit no common nonzero tangent direction.
std::vector<Vec> geometric_vertices(const PolyhedralFunction& f);

struct SimplexTerm {
  Rat coeff;
  Simplex simplex;
};

struct ConeTerm {
  Rat coeff;
  Cone cone;
};

struct SignedDecomposition {
  enum class Kind { simplices, cones };
  Kind kind = Kind::simplices;
  std::vector<SimplexTerm> simplices;
  std::vector<ConeTerm> cones;     // tangent-cone pieces, apex = vertex
  std::vector<ConeTerm> residual;  // line-cones
  bool certificate = false;
  bool integer_coefficients = false;
  bool residual_transform_zero = true;
};

SignedDecomposition decompose_simplices(const PolyhedralFunction& f, uint64_t seed = 0);
SignedDecomposition decompose_cones(const PolyhedralFunction& f, uint64_t seed = 0);

// The decomposition summed back up as a polyhedral function.
PolyhedralFunction decomposition_function(size_t dim, const SignedDecomposition& dec);

// The set of vertices (simplex corners / cone apexes) used by the
// decomposition equals the algebraic vertex set.
bool minimality_check(const PolyhedralFunction& f, const SignedDecomposition& dec,
                      uint64_t seed = 0);

struct SectionCheck {
  OrientedHyperplane plane;
  bool section_transform_zero = false;
};

struct SectionCriterionReport {
  bool transform_zero = false;
  std::vector<SectionCheck> sections;
  bool all_sections_zero = true;
  bool biconditional_holds = true;  // transform_zero == all_sections_zero
  bool hard_violation = false;      // transform zero but some section nonzero
};

SectionCriterionReport check_section_criterion(const PolyhedralFunction& f,
                                           const std::vector<OrientedHyperplane>& planes,
                                           uint64_t seed = 0);

}  // namespace polyvert
