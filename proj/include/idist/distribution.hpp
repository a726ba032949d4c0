#ifndef IDIST_DISTRIBUTION_HPP
#define IDIST_DISTRIBUTION_HPP

#include <map>
#include <string>

#include "idist/geometry.hpp"

namespace idist {

/// PolyKind: v_i, i = 0..q, over the q^2 lines y = ax+b.
/// SetKind:  u_i, i = 0..q+1, over all q^2+q+1 lines of PG(2,q).
enum class DistKind { Poly, Set };

struct IntersectionDistribution {
  DistKind kind = DistKind::Poly;
  int q = 0;
  std::vector<long long> counts;  // length q+1 (Poly) or q+2 (Set)

  /// Checks shape, non-negativity and the three sum identities
  /// (Σ counts, Σ i·counts, Σ i(i-1)·counts); error InconsistentDistribution.
  void validate() const;
  /// Largest index with a positive count; error EmptyDistribution.
  int degree() const;
  long long non_hitting_index() const { return counts.empty() ? 0 : counts[0]; }

  friend bool operator==(const IntersectionDistribution&,
                         const IntersectionDistribution&) = default;
};

/// Tally of root counts of f(x)-ax-b over all q^2 pairs (a,b).
/// Bit-identical for any worker count.
IntersectionDistribution poly_distribution(const Polynomial& f,
                                           int workers = 1);

/// Tally of |D ∩ l| over all lines; error WrongCardinality unless |D|=q+1.
IntersectionDistribution set_distribution(const PointSet& D);

/// v_0=u_0, v_1=u_1-1, v_2=u_2-q, v_i=u_i (i>=3), u_{q+1}=0.
/// Converts to the opposite kind; error InconsistentDistribution if the
/// input violates its identities, has u_{q+1} != 0, or a count goes negative.
IntersectionDistribution convert(const IntersectionDistribution& dist);

/// Fills indices 0,1,2 from the counts at indices >= 3 so that all three
/// sum identities hold. Error InfeasibleTail if the fill would be negative
/// or fractional.
IntersectionDistribution complete_from_tail(
    const std::map<int, long long>& tail, int q, DistKind kind);

/// Closed-form PolyKind distribution of x^3 (or x^3 + x^2 when
/// has_x2_term is set; the distinction only matters in characteristic 3).
IntersectionDistribution cubic_distribution(int q, bool has_x2_term);

/// {"kind","q","counts","nonzero","degree","non_hitting_index"}.
std::string to_json(const IntersectionDistribution& dist);

}  // namespace idist

#endif
