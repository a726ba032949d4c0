#ifndef IDIST_MONOMIAL_HPP
#define IDIST_MONOMIAL_HPP

#include <optional>

#include "idist/distribution.hpp"

namespace idist {

/// Provenance of a bound or exact value for deg(S_{x^d}).
enum class BoundRule {
  DegBound,    // roots of a degree-d polynomial: <= d
  Ubound,      // reciprocal-polynomial cap q-d+1 (2 < d < q-1)
  QminusPi,    // d = q-p^i, i|s, i<s: <= p^i
  HorizGcd,    // gcd(d, q-1) analysis of lines y=b
  OriginGcd,   // gcd(d-1, q-1) analysis of lines y=ax
  DivisorCase, // exact values at d in {q-1, e, e+1, q-e} for e | q-1 proper
  Lacunary,    // cyclotomic root partition caps for lines y=ax+b, a,b != 0
  Trace,       // q = p^2, d = q-p: exact p via the trace line y=-x-1
  KelleyOwen,  // trinomial root cap floor(1/2 + sqrt(q-1))
  Combined,    // max over line types with the best a,b != 0 cap
  BruteForce,  // exhaustive computation
};

const char* bound_rule_name(BoundRule r);

struct BoundValue {
  long long value = 0;
  BoundRule rule = BoundRule::BruteForce;
  friend bool operator==(const BoundValue&, const BoundValue&) = default;
};

struct BoundReport {
  int q = 0;
  int d = 0;
  BoundValue lower;
  BoundValue upper;  // the binding (smallest) upper bound
  std::vector<BoundValue> upper_candidates;
  std::optional<BoundValue> exact;
  // present in degree_table output: brute-force degree and the first line
  // y=ax+b attaining it, (a,b) ordered with 0 before increasing powers of
  // the primitive element
  std::optional<int> brute_degree;
  std::optional<std::pair<FieldElement, FieldElement>> sample_line;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// Lines y=b meeting y=x^d: m = gcd(d, q-1); the (q-1)/m values b in the
/// subgroup generated by alpha^m are hit m times, all other nonzero b are
/// missed, and y=0 meets only at the origin. Counts certified by evaluation.
struct HorizontalAnalysis {
  int m = 0;
  std::vector<FieldElement> full_lines;  // the b values with m hits
};
HorizontalAnalysis horizontal_analysis(const FieldCtxPtr& ctx, int d);

/// Lines y=ax through the origin: m' = gcd(d-1, q-1); the slopes in the
/// subgroup generated by alpha^{m'} are hit in m'+1 points (origin included),
/// all others only at the origin. Counts certified by evaluation.
struct OriginAnalysis {
  int m_prime = 0;
  std::vector<FieldElement> slopes;  // the a values with m'+1 hits
};
OriginAnalysis origin_analysis(const FieldCtxPtr& ctx, int d);

/// max(gcd(d,q-1), gcd(d-1,q-1)+1) with attribution; 2 <= d <= q-1.
BoundValue lower_bound(const FieldCtxPtr& ctx, int d);

/// All applicable upper-bound candidates for deg(S_{x^d}) and the binding
/// minimum; inapplicable rules are omitted.
std::vector<BoundValue> upper_bounds(const FieldCtxPtr& ctx, int d);

/// Exact degree when a closed-form case applies (divisor cases, saturated
/// gcd bounds, the q=p^2 trace case, q=2^s d=q-2, or a dominated
/// square-root cap); absent otherwise.
std::optional<BoundValue> exact_divisor_cases(const FieldCtxPtr& ctx, int d);

/// Per-cyclotomic-class root reduction of the trinomial h = x^n + a*x + b
/// (a, b nonzero): returns cls polynomials k_i, one per class of order cls,
/// whose roots within class i are exactly the roots of h there.
/// Error ShapeMismatch when h is not of the handled shape or cls does not
/// divide q-1.
std::vector<Polynomial> lacunary_partition(const FieldCtxPtr& ctx,
                                           const Polynomial& h, int cls);

/// For q = p^2: the line y=-x-1 and the p nonzero roots of x^{q-p}+x+1
/// (inverses of the trace -1 elements), certified by evaluation.
struct TraceWitness {
  FieldElement slope, intercept;  // the line y = slope*x + intercept
  std::vector<FieldElement> roots;
};
TraceWitness trace_witness(const FieldCtxPtr& ctx);
TraceWitness trace_witness(int p);  // builds the default GF(p^2)

/// Reports for d = 2..q-1 with brute-force degrees and sample lines.
/// Bounds always sandwich the brute-force value.
std::vector<BoundReport> degree_table(const FieldCtxPtr& ctx,
                                      int workers = 1);

}  // namespace idist

#endif
