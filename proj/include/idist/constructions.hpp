#ifndef IDIST_CONSTRUCTIONS_HPP
#define IDIST_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>

#include "idist/distribution.hpp"

namespace idist {

/// (q+1)-set families supported on the union of two lines.
///   TwoLinesExcl            - points split over two lines, intersection excluded
///   TwoLinesIncl            - as above with the intersection included
///   TwoLinesNucleus         - graph set on y=x and y=-x (y=0 in even
///                             characteristic) through the origin, plus (0,1,0)
///   TwoLinesParallelNucleus - graph set on the parallel lines y=0 and y=1,
///                             plus (0,1,0); realized by indicator polynomials
///   TwoLinesTwoPoints       - graph set on y=1 and y=-1 plus the origin and
///                             (0,1,0), with a prescribed 3-secant count
enum class ConstructionFamily {
  TwoLinesExcl,
  TwoLinesIncl,
  TwoLinesNucleus,
  TwoLinesParallelNucleus,
  TwoLinesTwoPoints,
};

const char* family_name(ConstructionFamily family);

struct ConstructionSpec {
  ConstructionFamily family = ConstructionFamily::TwoLinesExcl;
  int q = 0;
  int t = 0;           // balance parameter
  int c = 0;           // 3-secant count, TwoLinesTwoPoints only
  std::uint64_t seed = 0;  // resolves the free point selections

  /// Errors ParameterOutOfRange / InfeasibleParity.
  void validate() const;
};

struct BuildResult {
  PointSet points;
  std::optional<Polynomial> poly;  // present for the graph-set families
};

/// Realizes the family; free choices are drawn deterministically from a
/// generator keyed by (family, q, t, c, seed).
BuildResult build(const FieldCtxPtr& ctx, const ConstructionSpec& spec);

/// Closed-form distribution of any set built with these parameters; coinciding
/// subscripts are merged by addition. Set kind for TwoLinesExcl/Incl,
/// Poly kind for the graph-set families.
IntersectionDistribution predicted_distribution(const ConstructionSpec& spec);

/// The two monomials whose graph sets live on two lines.
enum class StructureMonomial {
  HalfPlusOne,   // x^{(q+1)/2}: (q-1)/2 points on each of y=x, y=-x
  HalfMinusOne,  // x^{(q-1)/2}: (q-1)/2 points on each of y=1, y=-1
};

struct MonomialStructure {
  Polynomial f;
  std::pair<FieldElement, FieldElement> line1, line2;  // y = slope*x + icept
  int on_line1 = 0, on_line2 = 0;  // affine graph points on each line
  long long three_secants = 0;     // v_3 of the distribution
};

/// Certifies the two-line decomposition of the monomial's graph by direct
/// incidence counting. Error EvenField when q is even.
MonomialStructure monomial_structure(const FieldCtxPtr& ctx,
                                     StructureMonomial which);

/// Near-degenerate (q+1)-sets with at least q-2 points on one line.
enum class DegenerateFamily {
  Line,                 // a full projective line
  LinePlusPoint,        // q points on a line plus one point off it
  TwoLinesNearFullIncl, // q-1 on l, two on m, l∩m in the set
  TwoLinesNearFullExcl, // q-1 on l, two on m, l∩m not in the set
  LinePlusTriangle,     // q-2 on l plus a triangle; k sides meet l in the set
};

/// Closed-form Set-kind distribution; k in 0..3 selects the triangle variant
/// and must be 0 otherwise. Error ParameterOutOfRange.
IntersectionDistribution degenerate_distribution(int q, DegenerateFamily which,
                                                 int k = 0);

/// A concrete witness set for the family over the given field.
PointSet degenerate_set(const FieldCtxPtr& ctx, DegenerateFamily which,
                        int k = 0);

}  // namespace idist

#endif
