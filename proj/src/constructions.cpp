#include "idist/constructions.hpp"

#include <algorithm>

namespace idist {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic stream keyed by the full parameter tuple.
struct ChoiceStream {
  std::uint64_t state;

  explicit ChoiceStream(const ConstructionSpec& spec) {
    state = spec.seed;
    for (std::uint64_t k :
         {(std::uint64_t)spec.family, (std::uint64_t)spec.q,
          (std::uint64_t)spec.t, (std::uint64_t)spec.c})
      state = splitmix64(state) ^ k;
  }
  std::uint64_t next() { return splitmix64(state); }
  std::size_t below(std::size_t n) { return (std::size_t)(next() % n); }
  bool coin() { return (next() & 1) != 0; }

  /// First k entries of a partial Fisher-Yates shuffle of v.
  template <class T>
  std::vector<T> choose(std::vector<T> v, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i)
      std::swap(v[i], v[i + below(v.size() - i)]);
    v.resize(k);
    return v;
  }
};

long long floor_half(long long n) { return n / 2; }
long long ceil_half(long long n) { return n - n / 2; }

/// Line sizes (points of S on each of the two carrier lines).
std::pair<long long, long long> line_sizes(const ConstructionSpec& s) {
  long long q = s.q, t = s.t;
  switch (s.family) {
    case ConstructionFamily::TwoLinesExcl:
      return {ceil_half(q + 1) + t, floor_half(q + 1) - t};
    case ConstructionFamily::TwoLinesIncl:
      return {ceil_half(q) + t, floor_half(q) - t};
    case ConstructionFamily::TwoLinesNucleus:
      return {ceil_half(q - 1) + t, floor_half(q - 1) - t};
    case ConstructionFamily::TwoLinesParallelNucleus:
      return {ceil_half(q) + t, floor_half(q) - t};
    case ConstructionFamily::TwoLinesTwoPoints:
      return {ceil_half(q - 1) + t, floor_half(q - 1) - t};
  }
  fail("InternalError", "unknown construction family");
}

/// Completes a distribution from entries placed at arbitrary indices using
/// the three sum identities; coinciding subscripts have already been added.
IntersectionDistribution complete_merged(const std::map<int, long long>& placed,
                                         int q, DistKind kind) {
  long long Q = q;
  long long t0 = kind == DistKind::Poly ? Q * Q : Q * Q + Q + 1;
  long long t1 = kind == DistKind::Poly ? Q * Q : (Q + 1) * (Q + 1);
  long long t2 = kind == DistKind::Poly ? Q * (Q - 1) : Q * (Q + 1);
  long long s0 = 0, s1 = 0, s2 = 0;
  for (auto [i, n] : placed) {
    s0 += n;
    s1 += (long long)i * n;
    s2 += (long long)i * (i - 1) * n;
  }
  long long c2 = (t2 - s2) / 2;
  long long c1 = t1 - s1 - 2 * c2;
  long long c0 = t0 - s0 - c1 - c2;
  IntersectionDistribution dist;
  dist.kind = kind;
  dist.q = q;
  dist.counts.assign((size_t)(kind == DistKind::Poly ? q + 1 : q + 2), 0);
  for (auto [i, n] : placed) dist.counts[(size_t)i] += n;
  dist.counts[2] += c2;
  dist.counts[1] += c1;
  dist.counts[0] += c0;
  dist.validate();
  return dist;
}

}  // namespace

const char* family_name(ConstructionFamily family) {
  switch (family) {
    case ConstructionFamily::TwoLinesExcl: return "TwoLinesExcl";
    case ConstructionFamily::TwoLinesIncl: return "TwoLinesIncl";
    case ConstructionFamily::TwoLinesNucleus: return "TwoLinesNucleus";
    case ConstructionFamily::TwoLinesParallelNucleus:
      return "TwoLinesParallelNucleus";
    case ConstructionFamily::TwoLinesTwoPoints: return "TwoLinesTwoPoints";
  }
  fail("InternalError", "unknown construction family");
}

void ConstructionSpec::validate() const {
  if (q < 3) fail("ParameterOutOfRange", "q must be at least 3");
  long long t_max = 0;
  switch (family) {
    case ConstructionFamily::TwoLinesExcl:
      t_max = floor_half(q + 1) - 2;
      break;
    case ConstructionFamily::TwoLinesIncl:
      t_max = floor_half(q) - 1;
      break;
    case ConstructionFamily::TwoLinesNucleus:
      t_max = floor_half(q - 1) - 1;
      break;
    case ConstructionFamily::TwoLinesParallelNucleus:
      t_max = floor_half(q) - 2;
      break;
    case ConstructionFamily::TwoLinesTwoPoints:
      t_max = floor_half(q - 1) - 2;
      break;
  }
  if (t < 0 || t > t_max)
    fail("ParameterOutOfRange",
         "t=" + std::to_string(t) + " outside 0.." + std::to_string(t_max) +
             " for " + family_name(family));
  if (family == ConstructionFamily::TwoLinesTwoPoints) {
    if (q % 2 == 0)
      fail("ParameterOutOfRange", "TwoLinesTwoPoints needs odd q");
    long long c_max = floor_half(q - 1) - t;
    if (c < 0 || c > c_max)
      fail("ParameterOutOfRange",
           "c=" + std::to_string(c) + " outside 0.." + std::to_string(c_max));
    if ((ceil_half(q - 1) + t - c) % 2 != 0)
      fail("InfeasibleParity",
           "need (q-1)/2 + t - c even, got q=" + std::to_string(q) +
               " t=" + std::to_string(t) + " c=" + std::to_string(c));
  } else if (c != 0) {
    fail("ParameterOutOfRange", "c applies to TwoLinesTwoPoints only");
  }
}

BuildResult build(const FieldCtxPtr& ctx, const ConstructionSpec& spec) {
  spec.validate();
  if (ctx->q() != spec.q)
    fail("ParameterOutOfRange", "field size does not match spec.q");
  auto F = ctx;
  const int q = spec.q;
  auto [A, B] = line_sizes(spec);
  ChoiceStream rng(spec);

  auto nonzero = F->elements();
  nonzero.erase(nonzero.begin());  // elements() lists 0 first

  auto graph_result = [&](const std::vector<std::pair<FieldElement,
                                                      FieldElement>>& pairs) {
    auto f = interpolate(F, pairs);
    return BuildResult{graph_set(f), f};
  };

  switch (spec.family) {
    case ConstructionFamily::TwoLinesExcl:
    case ConstructionFamily::TwoLinesIncl: {
      // l: y=0 with l \ {l∩m} = {(1,0,c)}; m: x=0 with m \ {l∩m} = {(0,1,c)}
      std::vector<ProjPoint> pts;
      if (spec.family == ConstructionFamily::TwoLinesIncl)
        pts.push_back(proj_point_ints(F, 0, 0, 1));
      for (auto c : rng.choose(F->elements(), (size_t)A))
        pts.push_back(proj_point(F->one(), F->zero(), c));
      for (auto c : rng.choose(F->elements(), (size_t)B))
        pts.push_back(proj_point(F->zero(), F->one(), c));
      return {PointSet(F, std::move(pts)), std::nullopt};
    }

    case ConstructionFamily::TwoLinesNucleus: {
      // f(a) = a on A chosen nonzero points, f(a) = -a (or 0 in even
      // characteristic, where y=-x is not a second line) elsewhere; f(0)=0.
      auto on_ell = rng.choose(nonzero, (size_t)A);
      std::vector<std::pair<FieldElement, FieldElement>> pairs;
      pairs.emplace_back(F->zero(), F->zero());
      for (auto a : nonzero) {
        bool fixed =
            std::find(on_ell.begin(), on_ell.end(), a) != on_ell.end();
        auto other = F->p() == 2 ? F->zero() : F->neg(a);
        pairs.emplace_back(a, fixed ? a : other);
      }
      return graph_result(pairs);
    }

    case ConstructionFamily::TwoLinesParallelNucleus: {
      auto T = rng.choose(F->elements(), (size_t)A);
      auto f = indicator_polynomial(F, T);
      return BuildResult{graph_set(f), f};
    }

    case ConstructionFamily::TwoLinesTwoPoints: {
      // Partition F_q^* into Q+ / Q- with -x in Q- iff x in Q+; with seed 0
      // and -1 a non-square this is the square/non-square split.
      std::vector<FieldElement> q_plus;
      if (spec.seed == 0 && q % 4 == 3) {
        for (auto x : nonzero)
          if (F->is_square(x)) q_plus.push_back(x);
      } else {
        std::vector<char> taken((size_t)q, 0);
        for (auto x : nonzero) {
          if (taken[x.v]) continue;
          auto y = F->neg(x);
          taken[x.v] = taken[y.v] = 1;
          q_plus.push_back(rng.coin() ? x : y);
        }
      }
      auto order = rng.choose(q_plus, q_plus.size());
      std::vector<std::pair<FieldElement, FieldElement>> pairs;
      pairs.emplace_back(F->zero(), F->zero());
      auto minus_one = F->from_prime(-1);
      size_t pos = 0;
      for (int i = 0; i < spec.c; ++i, ++pos) {  // a matched +/- pair
        pairs.emplace_back(order[pos], F->one());
        pairs.emplace_back(F->neg(order[pos]), minus_one);
      }
      for (long long i = 0; i < (A - spec.c) / 2; ++i, ++pos) {
        pairs.emplace_back(order[pos], F->one());
        pairs.emplace_back(F->neg(order[pos]), F->one());
      }
      for (; pos < order.size(); ++pos) {  // the remaining (B-c)/2 elements
        pairs.emplace_back(order[pos], minus_one);
        pairs.emplace_back(F->neg(order[pos]), minus_one);
      }
      return graph_result(pairs);
    }
  }
  fail("InternalError", "unknown construction family");
}

IntersectionDistribution predicted_distribution(const ConstructionSpec& spec) {
  spec.validate();
  auto [A, B] = line_sizes(spec);
  std::map<int, long long> placed;
  switch (spec.family) {
    case ConstructionFamily::TwoLinesExcl:
      placed[(int)A] += 1;
      placed[(int)B] += 1;
      return complete_merged(placed, spec.q, DistKind::Set);
    case ConstructionFamily::TwoLinesIncl:
      placed[(int)A + 1] += 1;
      placed[(int)B + 1] += 1;
      return complete_merged(placed, spec.q, DistKind::Set);
    case ConstructionFamily::TwoLinesNucleus:
      placed[(int)A + 1] += 1;
      placed[(int)B + 1] += 1;
      return complete_merged(placed, spec.q, DistKind::Poly);
    case ConstructionFamily::TwoLinesParallelNucleus:
      placed[(int)A] += 1;
      placed[(int)B] += 1;
      return complete_merged(placed, spec.q, DistKind::Poly);
    case ConstructionFamily::TwoLinesTwoPoints:
      placed[(int)A] += 1;
      placed[(int)B] += 1;
      placed[3] += spec.c;
      return complete_merged(placed, spec.q, DistKind::Poly);
  }
  fail("InternalError", "unknown construction family");
}

MonomialStructure monomial_structure(const FieldCtxPtr& ctx,
                                     StructureMonomial which) {
  const int q = ctx->q();
  if (q % 2 == 0) fail("EvenField", "monomial structure needs odd q");
  MonomialStructure rep;
  int d = which == StructureMonomial::HalfPlusOne ? (q + 1) / 2 : (q - 1) / 2;
  rep.f = Polynomial::monomial(ctx, d);
  auto minus_one = ctx->from_prime(-1);
  if (which == StructureMonomial::HalfPlusOne) {
    rep.line1 = {ctx->one(), ctx->zero()};   // y = x
    rep.line2 = {minus_one, ctx->zero()};    // y = -x
  } else {
    rep.line1 = {ctx->zero(), ctx->one()};   // y = 1
    rep.line2 = {ctx->zero(), minus_one};    // y = -1
  }
  for (auto x : ctx->elements()) {
    auto y = rep.f.evaluate(x);
    if (y == rep.line1.first * x + rep.line1.second) ++rep.on_line1;
    if (y == rep.line2.first * x + rep.line2.second) ++rep.on_line2;
  }
  int expect = which == StructureMonomial::HalfPlusOne
                   ? (q + 1) / 2   // (q-1)/2 points plus the shared origin
                   : (q - 1) / 2;
  if (rep.on_line1 != expect || rep.on_line2 != expect)
    fail("InternalError", "two-line decomposition count mismatch");
  rep.three_secants = poly_distribution(rep.f).counts[3];
  return rep;
}

IntersectionDistribution degenerate_distribution(int q, DegenerateFamily which,
                                                 int k) {
  if (q < 4) fail("ParameterOutOfRange", "q must be at least 4");
  bool triangle = which == DegenerateFamily::LinePlusTriangle;
  if (k != 0 && !triangle)
    fail("ParameterOutOfRange", "k applies to LinePlusTriangle only");
  if (triangle && (k < 0 || k > 3 || k > q - 2))
    fail("ParameterOutOfRange", "k must be in 0..3 with at most q-2 feet");
  std::map<int, long long> placed;
  switch (which) {
    case DegenerateFamily::Line: placed[q + 1] = 1; break;
    case DegenerateFamily::LinePlusPoint: placed[q] = 1; break;
    case DegenerateFamily::TwoLinesNearFullIncl:
      placed[q - 1] += 1;
      placed[3] += 1;
      break;
    case DegenerateFamily::TwoLinesNearFullExcl: placed[q - 1] = 1; break;
    case DegenerateFamily::LinePlusTriangle:
      placed[q - 2] = 1;
      placed[3] += k;
      break;
  }
  return complete_merged(placed, q, DistKind::Set);
}

PointSet degenerate_set(const FieldCtxPtr& ctx, DegenerateFamily which,
                        int k) {
  degenerate_distribution(ctx->q(), which, k);  // parameter validation
  auto F = ctx;
  // l is the line z=0: the point (0,1,0) plus (1,t,0) for t in F_q.
  std::vector<ProjPoint> ell{proj_point_ints(F, 0, 1, 0)};
  for (auto t : F->elements()) ell.push_back(proj_point(F->one(), t, F->zero()));

  std::vector<ProjPoint> pts;
  switch (which) {
    case DegenerateFamily::Line:
      pts = ell;
      break;
    case DegenerateFamily::LinePlusPoint:
      pts.assign(ell.begin() + 1, ell.end());
      pts.push_back(proj_point_ints(F, 0, 0, 1));
      break;
    case DegenerateFamily::TwoLinesNearFullIncl:
      // q-1 points of l including l∩m = (0,1,0), two more on m: x=0
      pts.assign(ell.begin(), ell.end() - 2);
      pts.push_back(proj_point_ints(F, 0, 1, 1));
      pts.push_back(proj_point_ints(F, 0, 0, 1));
      break;
    case DegenerateFamily::TwoLinesNearFullExcl:
      pts.assign(ell.begin() + 1, ell.end() - 1);
      pts.push_back(proj_point_ints(F, 0, 1, 1));
      pts.push_back(proj_point_ints(F, 0, 0, 1));
      break;
    case DegenerateFamily::LinePlusTriangle: {
      // triangle (1,0,1),(0,1,1),(1,1,1); its sides meet l in the three
      // distinct feet below, of which exactly k join the set
      pts.push_back(proj_point_ints(F, 1, 0, 1));
      pts.push_back(proj_point_ints(F, 0, 1, 1));
      pts.push_back(proj_point_ints(F, 1, 1, 1));
      std::vector<ProjPoint> feet{proj_point_ints(F, 1, -1, 0),
                                  proj_point_ints(F, 0, 1, 0),
                                  proj_point_ints(F, 1, 0, 0)};
      for (int i = 0; i < k; ++i) pts.push_back(feet[(size_t)i]);
      int need = ctx->q() - 2 - k;
      for (auto& P : ell) {
        if (need == 0) break;
        if (std::find(feet.begin(), feet.end(), P) != feet.end()) continue;
        pts.push_back(P);
        --need;
      }
      break;
    }
  }
  return PointSet(F, std::move(pts));
}

}  // namespace idist
