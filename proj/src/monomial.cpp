#include "idist/monomial.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <thread>

namespace idist {

const char* bound_rule_name(BoundRule r) {
  switch (r) {
    case BoundRule::DegBound: return "DegBound";
    case BoundRule::Ubound: return "Ubound";
    case BoundRule::QminusPi: return "QminusPi";
    case BoundRule::HorizGcd: return "HorizGcd";
    case BoundRule::OriginGcd: return "OriginGcd";
    case BoundRule::DivisorCase: return "DivisorCase";
    case BoundRule::Lacunary: return "Lacunary";
    case BoundRule::Trace: return "Trace";
    case BoundRule::KelleyOwen: return "KelleyOwen";
    case BoundRule::Combined: return "Combined";
    case BoundRule::BruteForce: return "BruteForce";
  }
  return "?";
}

namespace {

void check_degree_range(const FieldCtxPtr& ctx, int d, int lo) {
  if (d < lo || d > ctx->q() - 1)
    fail("DegreeOutOfRange", "exponent outside the supported range");
}

// #{x in F_q : x^d = rhs(x)}, by evaluation
int root_count(const FieldCtxPtr& ctx, int d,
               const std::function<FieldElement(FieldElement)>& rhs) {
  int n = 0;
  for (auto x : ctx->elements())
    if (ctx->pow(x, d) == rhs(x)) ++n;
  return n;
}

// the subgroup of F_q^* generated by alpha^gen_exp, for gen_exp | q-1
std::vector<FieldElement> subgroup(const FieldCtxPtr& ctx, int gen_exp) {
  int order = (ctx->q() - 1) / gen_exp;
  std::vector<FieldElement> out;
  out.reserve((size_t)order);
  for (int j = 0; j < order; ++j)
    out.push_back(ctx->alpha_pow((long long)j * gen_exp));
  return out;
}

// floor(1/2 + sqrt(q-1)): the largest r with (2r-1)^2 <= 4(q-1)
long long sqrt_cap(int q) {
  auto r = (long long)std::floor(0.5 + std::sqrt((double)(q - 1)));
  while ((2 * r - 1) * (2 * r - 1) > 4LL * (q - 1)) --r;
  while ((2 * r + 1) * (2 * r + 1) <= 4LL * (q - 1)) ++r;
  return r;
}

}  // namespace

HorizontalAnalysis horizontal_analysis(const FieldCtxPtr& ctx, int d) {
  check_degree_range(ctx, d, 1);
  int q = ctx->q();
  HorizontalAnalysis rep;
  rep.m = (int)std::gcd((long long)d, (long long)q - 1);
  rep.full_lines = subgroup(ctx, rep.m);
  // certify against direct counting
  for (auto b : ctx->elements()) {
    int n = root_count(ctx, d, [&](FieldElement) { return b; });
    bool full = std::find(rep.full_lines.begin(), rep.full_lines.end(), b) !=
                rep.full_lines.end();
    int want = b.is_zero() ? 1 : (full ? rep.m : 0);
    if (n != want) fail("InternalError", "horizontal count mismatch");
  }
  return rep;
}

OriginAnalysis origin_analysis(const FieldCtxPtr& ctx, int d) {
  check_degree_range(ctx, d, 2);
  int q = ctx->q();
  OriginAnalysis rep;
  rep.m_prime = (int)std::gcd((long long)d - 1, (long long)q - 1);
  rep.slopes = subgroup(ctx, rep.m_prime);
  for (auto a : ctx->elements()) {
    int n = root_count(ctx, d, [&](FieldElement x) { return ctx->mul(a, x); });
    bool full = std::find(rep.slopes.begin(), rep.slopes.end(), a) !=
                rep.slopes.end();
    int want = full ? rep.m_prime + 1 : 1;
    if (n != want) fail("InternalError", "origin-line count mismatch");
  }
  return rep;
}

BoundValue lower_bound(const FieldCtxPtr& ctx, int d) {
  check_degree_range(ctx, d, 2);
  long long q1 = ctx->q() - 1;
  long long m = std::gcd((long long)d, q1);
  long long mp = std::gcd((long long)d - 1, q1) + 1;
  return m >= mp ? BoundValue{m, BoundRule::HorizGcd}
                 : BoundValue{mp, BoundRule::OriginGcd};
}

namespace {

// best cap on intersections with lines y=ax+b, a,b both nonzero
long long best_ab_cap(const FieldCtxPtr& ctx, int d) {
  int q = ctx->q();
  long long best = sqrt_cap(q);  // Kelley-Owen, always applicable
  if (2 < d && d < q - 1) best = std::min(best, (long long)q - d);
  for (int e = 1; e <= q - 1; ++e) {
    if ((q - 1) % e != 0) continue;
    if (d >= 2 && d <= e)  // d = e - l with l >= 0
      best = std::min(best, (long long)(e - d + 1) * (q - 1) / e);
    if (d > e)  // d = e + m with m >= 1
      best = std::min(best, (long long)(d - e) * (q - 1) / e);
  }
  return best;
}

}  // namespace

std::vector<BoundValue> upper_bounds(const FieldCtxPtr& ctx, int d) {
  check_degree_range(ctx, d, 2);
  int q = ctx->q(), p = ctx->p(), s = ctx->s();
  long long q1 = q - 1;
  long long m = std::gcd((long long)d, q1);
  long long mp = std::gcd((long long)d - 1, q1);

  std::vector<BoundValue> out;
  out.push_back({(long long)d, BoundRule::DegBound});
  if (2 < d && d < q - 1) out.push_back({(long long)q - d + 1, BoundRule::Ubound});
  if (s > 1) {
    long long pi = p;
    for (int i = 1; i < s; ++i, pi *= p)
      if (s % i == 0 && q - pi == d) out.push_back({pi, BoundRule::QminusPi});
  }
  out.push_back(
      {std::max({m, mp + 1, sqrt_cap(q)}), BoundRule::KelleyOwen});

  // per-line-type combination: horizontals give m, origin lines m'+1,
  // and the remaining lines at most the best available cap
  long long lac_best = std::numeric_limits<long long>::max();
  for (int e = 1; e <= q - 1; ++e) {
    if (q1 % e != 0) continue;
    if (d <= e) lac_best = std::min(lac_best, (long long)(e - d + 1) * q1 / e);
    if (d > e) lac_best = std::min(lac_best, (long long)(d - e) * q1 / e);
  }
  if (lac_best != std::numeric_limits<long long>::max())
    out.push_back({std::max({m, mp + 1, lac_best}), BoundRule::Lacunary});
  out.push_back(
      {std::max({m, mp + 1, best_ab_cap(ctx, d)}), BoundRule::Combined});
  return out;
}

std::optional<BoundValue> exact_divisor_cases(const FieldCtxPtr& ctx, int d) {
  check_degree_range(ctx, d, 2);
  int q = ctx->q(), p = ctx->p(), s = ctx->s();
  long long q1 = q - 1;
  long long m = std::gcd((long long)d, q1);
  long long mp = std::gcd((long long)d - 1, q1);

  std::vector<BoundValue> hits;
  if (d == q - 1) hits.push_back({q1, BoundRule::DivisorCase});
  if (d < q - 1 && q1 % d == 0) hits.push_back({(long long)d, BoundRule::DivisorCase});
  if (d >= 2 && d - 1 < q - 1 && q1 % (d - 1) == 0)
    hits.push_back({(long long)d, BoundRule::DivisorCase});
  if (q - d >= 2 && q1 % (q - d) == 0)
    hits.push_back({(long long)(q - d) + 1, BoundRule::DivisorCase});
  if (m * (m - 1) >= q1) hits.push_back({m, BoundRule::HorizGcd});
  if (mp * (mp + 1) >= q1) hits.push_back({mp + 1, BoundRule::OriginGcd});
  if (s == 2 && d == q - p) hits.push_back({(long long)p, BoundRule::Trace});
  if (p == 2 && s > 1 && d == q - 2) hits.push_back({2, BoundRule::QminusPi});
  if (sqrt_cap(q) <= std::max(m, mp + 1))
    hits.push_back({std::max(m, mp + 1), BoundRule::KelleyOwen});

  if (hits.empty()) return std::nullopt;
  for (auto& h : hits)
    if (h.value != hits.front().value)
      fail("InternalError", "conflicting exact-degree rules");
  return hits.front();
}

std::vector<Polynomial> lacunary_partition(const FieldCtxPtr& ctx,
                                           const Polynomial& h, int cls) {
  int q = ctx->q();
  if (cls < 1 || (q - 1) % cls != 0)
    fail("ShapeMismatch", "class count must divide q-1");
  int n = h.degree();
  // h must be x^n + a*x + b with a, b nonzero and n >= 2
  bool shape = n >= 2 && h.coeff(n) == ctx->one() && !h.coeff(0).is_zero() &&
               !h.coeff(1).is_zero();
  for (int i = 2; i < n && shape; ++i)
    if (!h.coeff(i).is_zero()) shape = false;
  if (!shape)
    fail("ShapeMismatch", "expected a trinomial x^n + a*x + b, a,b nonzero");

  int e = (q - 1) / cls;  // subgroup order; classes have this cardinality
  FieldElement a = h.coeff(1), b = h.coeff(0);
  std::vector<Polynomial> ks;
  for (int i = 0; i < cls; ++i) {
    FieldElement unit = ctx->alpha_pow((long long)i * e);
    if (n <= e) {
      // x^{e-l} shape: k_i = a*x^{l+1} + b*x^l + alpha^{ie}
      int l = e - n;
      std::vector<FieldElement> cs((size_t)l + 2, ctx->zero());
      cs[0] = unit;
      cs[(size_t)l] = ctx->add(cs[(size_t)l], b);
      cs[(size_t)l + 1] = ctx->add(cs[(size_t)l + 1], a);
      ks.emplace_back(ctx, std::move(cs));
    } else {
      // x^{e+m} shape: k_i = alpha^{ie}*x^m + a*x + b
      int mdeg = n - e;
      std::vector<FieldElement> cs((size_t)mdeg + 1, ctx->zero());
      cs[0] = b;
      cs[1] = ctx->add(cs[1], a);
      cs[(size_t)mdeg] = ctx->add(cs[(size_t)mdeg], unit);
      ks.emplace_back(ctx, std::move(cs));
    }
  }

  // certify: roots of h in class i = roots of k_i in class i
  auto classes = ctx->cyclotomic_classes(cls);
  for (int i = 0; i < cls; ++i)
    for (auto x : classes[(size_t)i].members) {
      bool hr = h.evaluate(x).is_zero();
      bool kr = ks[(size_t)i].evaluate(x).is_zero();
      if (hr != kr) fail("InternalError", "class root reduction mismatch");
    }
  return ks;
}

TraceWitness trace_witness(const FieldCtxPtr& ctx) {
  if (ctx->s() != 2) fail("NotASquareField", "needs q = p^2");
  int q = ctx->q(), p = ctx->p();
  TraceWitness w;
  w.slope = ctx->from_prime(-1);
  w.intercept = ctx->from_prime(-1);
  Polynomial h = Polynomial::monomial(ctx, q - p) +
                 Polynomial::from_ints(ctx, {1, 1});
  for (auto x : ctx->elements())
    if (h.evaluate(x).is_zero()) w.roots.push_back(x);
  if ((int)w.roots.size() != p)
    fail("InternalError", "trace witness root count is off");
  for (auto r : w.roots) {
    // roots are inverses of the trace -1 elements
    if (ctx->trace_to_prime(ctx->inv(r)) != ctx->from_prime(-1))
      fail("InternalError", "trace witness root has wrong trace");
  }
  return w;
}

TraceWitness trace_witness(int p) { return trace_witness(build_field(p, 2)); }

namespace {

// 0 sorts first; nonzero elements by discrete log
long long order_key(const FieldCtxPtr& ctx, FieldElement x) {
  return x.is_zero() ? 0 : 1 + ctx->dlog(x);
}

BoundReport analyze_one(const FieldCtxPtr& ctx, int d) {
  BoundReport rep;
  rep.q = ctx->q();
  rep.d = d;
  rep.lower = lower_bound(ctx, d);
  rep.upper_candidates = upper_bounds(ctx, d);
  rep.upper = *std::min_element(
      rep.upper_candidates.begin(), rep.upper_candidates.end(),
      [](const BoundValue& a, const BoundValue& b) { return a.value < b.value; });
  rep.exact = exact_divisor_cases(ctx, d);

  // brute force: scan lines y = ax + b in (a, b) order
  std::vector<FieldElement> order = ctx->elements();
  std::sort(order.begin(), order.end(),
            [&](FieldElement u, FieldElement v) {
              return order_key(ctx, u) < order_key(ctx, v);
            });
  int q = ctx->q();
  std::vector<std::uint32_t> xd((size_t)q);
  for (std::uint32_t x = 0; x < (std::uint32_t)q; ++x)
    xd[x] = ctx->pow(ctx->from_index(x), d).v;
  int best = -1;
  for (auto a : order)
    for (auto b : order) {
      int n = 0;
      for (std::uint32_t x = 0; x < (std::uint32_t)q; ++x)
        if (xd[x] == ctx->add_raw(ctx->mul_raw(a.v, x), b.v)) ++n;
      if (n > best) {
        best = n;
        rep.sample_line = {a, b};
      }
    }
  rep.brute_degree = best;

  if (best < rep.lower.value || best > rep.upper.value ||
      (rep.exact && rep.exact->value != best))
    fail("InternalError", "bounds fail to sandwich the brute-force degree");
  return rep;
}

}  // namespace

std::vector<BoundReport> degree_table(const FieldCtxPtr& ctx, int workers) {
  int q = ctx->q();
  std::vector<BoundReport> table((size_t)std::max(0, q - 2));
  if (workers < 1) workers = 1;
  auto run = [&](int w) {
    for (int d = 2 + w; d <= q - 1; d += workers)
      table[(size_t)(d - 2)] = analyze_one(ctx, d);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  return table;
}

}  // namespace idist
