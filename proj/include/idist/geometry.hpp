#ifndef IDIST_GEOMETRY_HPP
#define IDIST_GEOMETRY_HPP

#include <array>
#include <utility>
#include <vector>

#include "idist/poly.hpp"

namespace idist {

/// A point of PG(2,q): homogeneous triple, first nonzero coordinate 1.
struct ProjPoint {
  FieldElement x, y, z;
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend auto operator<=>(const ProjPoint& a, const ProjPoint& b) {
    return std::array{a.x.v, a.y.v, a.z.v} <=> std::array{b.x.v, b.y.v, b.z.v};
  }
};

/// A line ax+by+cz=0 of PG(2,q), normalized the same way.
struct ProjLine {
  FieldElement a, b, c;
  friend bool operator==(const ProjLine&, const ProjLine&) = default;
  friend auto operator<=>(const ProjLine& l, const ProjLine& m) {
    return std::array{l.a.v, l.b.v, l.c.v} <=> std::array{m.a.v, m.b.v, m.c.v};
  }
};

/// Normalizing constructors; error ZeroTriple if all coordinates vanish.
ProjPoint proj_point(FieldElement x, FieldElement y, FieldElement z);
ProjLine proj_line(FieldElement a, FieldElement b, FieldElement c);
ProjPoint proj_point_ints(const FieldCtxPtr& ctx, long long x, long long y,
                          long long z);
ProjLine proj_line_ints(const FieldCtxPtr& ctx, long long a, long long b,
                        long long c);

bool incident(const ProjPoint& P, const ProjLine& l);

/// Cross-product constructions; error DegenerateInput on equal arguments.
ProjLine line_through(const ProjPoint& P, const ProjPoint& Q);
ProjPoint meet(const ProjLine& l, const ProjLine& m);

/// A set of distinct points with its field context.
struct PointSet {
  FieldCtxPtr ctx;
  std::vector<ProjPoint> points;  // sorted, unique

  PointSet() = default;
  /// Sorts; error DuplicatePoint on repeats.
  PointSet(FieldCtxPtr ctx, std::vector<ProjPoint> pts);
  bool contains(const ProjPoint& P) const;
  int size() const { return (int)points.size(); }
  friend bool operator==(const PointSet&, const PointSet&) = default;
};

/// The full plane with incidence tables, built once per field and cached.
struct Plane {
  FieldCtxPtr ctx;
  std::vector<ProjPoint> points;  // sorted; q^2+q+1 of them
  std::vector<ProjLine> lines;    // sorted; q^2+q+1 of them
  std::vector<std::vector<int>> points_on_line;
  std::vector<std::vector<int>> lines_through_point;

  int point_index(const ProjPoint& P) const;
  int line_index(const ProjLine& l) const;
};

const Plane& plane(const FieldCtxPtr& ctx);

/// S_f = {(x, f(x), 1) : x in F_q} together with (0,1,0).
PointSet graph_set(const Polynomial& f);

/// Invertible 3x3 matrix up to scalars (first nonzero entry 1, row-major).
class Homography {
 public:
  using Matrix = std::array<std::array<FieldElement, 3>, 3>;

  /// Error SingularMatrix if the determinant vanishes.
  Homography(FieldCtxPtr ctx, Matrix m);
  static Homography identity(const FieldCtxPtr& ctx);
  static Homography from_ints(const FieldCtxPtr& ctx,
                              const std::array<std::array<long long, 3>, 3>& m);

  const FieldCtxPtr& ctx() const { return ctx_; }
  const Matrix& matrix() const { return m_; }
  ProjPoint apply(const ProjPoint& P) const;
  Homography inverse() const;
  Homography compose(const Homography& inner) const;  // this after inner
  friend bool operator==(const Homography&, const Homography&);

 private:
  FieldCtxPtr ctx_;
  Matrix m_;
};

/// Image of S under the homography followed by the Frobenius power
/// x -> x^{p^sigma} on coordinates (sigma taken mod s).
PointSet apply_collineation(const PointSet& S, const Homography& h, int sigma);

/// Sizes |D ∩ l| for the q+1 lines through P, sorted ascending.
std::vector<int> secant_profile(const PointSet& D, const ProjPoint& P);

/// Points of a (q+1)-set lying on one unisecant and q bisecants.
/// Error WrongCardinality unless |D| = q+1.
std::vector<ProjPoint> internal_nuclei(const PointSet& D);

/// Points off a (q+1)-set all of whose lines are unisecants.
std::vector<ProjPoint> external_nuclei(const PointSet& D);

/// A homography theta and polynomial f (deg <= q-1) with D^theta = S_f,
/// where theta sends the internal nucleus I to (0,1,0) and its unisecant
/// to z=0. Error NotAnInternalNucleus.
std::pair<Homography, Polynomial> set_to_polynomial(const PointSet& D,
                                                    const ProjPoint& I);

}  // namespace idist

#endif
