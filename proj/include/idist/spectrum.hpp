#ifndef IDIST_SPECTRUM_HPP
#define IDIST_SPECTRUM_HPP

#include "idist/constructions.hpp"

namespace idist {

/// How an attained non-hitting index was certified.
enum class Provenance { ClosedForm, Construction, Exhaustive, RandomSearch };

const char* provenance_name(Provenance p);

struct AttainedValue {
  long long u0 = 0;
  Provenance provenance = Provenance::Construction;
  PointSet witness;  // a (q+1)-set whose recomputed u_0 equals the value
};

struct SpectrumResult {
  int q = 0;
  std::vector<AttainedValue> attained;  // sorted by u0, one entry per value
  long long trials = 0;
  std::uint64_t seed = 0;
  double mean_u0 = 0;  // statistic over random trials (0 when trials == 0)
};

/// The guaranteed initial entries of the non-hitting spectrum with witnesses:
/// 0, q-1, 2q-4, 2q-3, 3q-9 for q >= 7, extended by 3q-8, 3q-7, 3q-6, 4q-16
/// for q >= 16. Error TooSmallForClaim when q < 7.
std::vector<AttainedValue> lower_entries(const FieldCtxPtr& ctx);

/// Every non-hitting index produced by the two-line construction families
/// and the near-degenerate families over their full parameter ranges, each
/// certified by one built witness.
std::vector<AttainedValue> construction_values(const FieldCtxPtr& ctx);

/// Exact spectrum by enumeration of all (q+1)-subsets of the plane.
/// Error TooLarge when q > 5.
SpectrumResult exhaustive_spectrum(const FieldCtxPtr& ctx);

/// Seeded random (q+1)-set sampling (optionally through the fundamental
/// quadrangle), merged with lower_entries (q >= 7) and construction_values.
/// Bit-identical for any worker count.
SpectrumResult random_search(const FieldCtxPtr& ctx, long long trials,
                             std::uint64_t seed, bool fix_quadrangle = true,
                             int workers = 1);

/// Closed-form checks for sets of degree at most 3 or 4: the u_1, u_2 and
/// u_3/u_4 expressions in terms of u_0, and the non-hitting lower bounds.
/// Sets come from a conic plus seeded random sampling; any violation fails.
struct DegreeBoundReport {
  int q = 0;
  long long sets_sampled = 0;
  long long degree3_checked = 0;
  long long degree4_checked = 0;
};
DegreeBoundReport degree_bound_checks(const FieldCtxPtr& ctx,
                                      long long samples = 2000,
                                      std::uint64_t seed = 0);

/// 8-arc representatives of PG(2,9), one per secant-profile fingerprint:
/// a conic minus two of its points, plus complete 8-arcs found by seeded
/// randomized greedy growth.
std::vector<PointSet> find_arc_representatives(const FieldCtxPtr& ctx,
                                               std::uint64_t seed = 0,
                                               long long budget = 20000);

/// For each supplied 8-arc of PG(2,9), tries all ways of adding two points
/// and certifies that no resulting 10-set has non-hitting index 34.
/// Errors: ParameterOutOfRange (q != 9), MissingArcRepresentatives (empty
/// list), DegenerateInput (a supplied set is not an 8-arc).
struct MaxProbeResult {
  int arcs = 0;
  long long extensions_tested = 0;
  bool no_u0_34 = false;
};
MaxProbeResult max_value_probe(const FieldCtxPtr& ctx,
                               const std::vector<PointSet>& representatives);

}  // namespace idist

#endif
