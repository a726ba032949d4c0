#include "idist/spectrum.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace idist {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t s) : state(s) { splitmix64(state); }
  std::uint64_t next() { return splitmix64(state); }
  std::size_t below(std::size_t n) { return (std::size_t)(next() % n); }
};

/// Per-line point-membership bitmasks over the plane's point indices.
struct LineMasks {
  int n = 0;          // number of points (= number of lines)
  int words = 0;      // 64-bit words per mask
  std::vector<std::uint64_t> bits;  // n * words

  explicit LineMasks(const Plane& pl) {
    n = (int)pl.points.size();
    words = (n + 63) / 64;
    bits.assign((size_t)n * (size_t)words, 0);
    for (int li = 0; li < n; ++li)
      for (int pi : pl.points_on_line[(size_t)li])
        bits[(size_t)li * (size_t)words + (size_t)(pi / 64)] |=
            1ULL << (pi % 64);
  }

  long long u0(const std::uint64_t* set) const {
    long long out = 0;
    for (int li = 0; li < n; ++li) {
      const std::uint64_t* l = &bits[(size_t)li * (size_t)words];
      bool hit = false;
      for (int w = 0; w < words; ++w)
        if (l[w] & set[w]) { hit = true; break; }
      if (!hit) ++out;
    }
    return out;
  }
};

PointSet set_from_indices(const Plane& pl, const std::vector<int>& idx) {
  std::vector<ProjPoint> pts;
  for (int i : idx) pts.push_back(pl.points[(size_t)i]);
  return PointSet(pl.ctx, std::move(pts));
}

AttainedValue certified(long long u0, Provenance prov, PointSet witness) {
  if (set_distribution(witness).non_hitting_index() != u0)
    fail("InternalError", "witness does not attain the claimed index");
  return {u0, prov, std::move(witness)};
}

void merge_value(std::map<long long, AttainedValue>& into, AttainedValue v) {
  auto it = into.find(v.u0);
  if (it == into.end()) into.emplace(v.u0, std::move(v));
}

std::vector<int> quadrangle_indices(const Plane& pl) {
  auto F = pl.ctx;
  std::vector<int> out;
  for (auto [x, y, z] : std::initializer_list<std::array<long long, 3>>{
           {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}})
    out.push_back(pl.point_index(proj_point_ints(F, x, y, z)));
  return out;
}

/// The set of point indices drawn by one search trial; deterministic in
/// (seed, trial) so worker partitioning is invisible.
void sample_trial(const Plane& pl, std::uint64_t seed, long long trial,
                  bool fix_quadrangle, std::vector<int>& pool,
                  std::vector<int>& out) {
  std::uint64_t s = seed;
  splitmix64(s);
  s ^= (std::uint64_t)trial;
  Rng rng(s);
  int k = pl.ctx->q() + 1;
  out.clear();
  if (fix_quadrangle) {
    out = quadrangle_indices(pl);
    k -= (int)out.size();
  }
  pool.clear();
  for (int i = 0; i < (int)pl.points.size(); ++i)
    if (std::find(out.begin(), out.end(), i) == out.end()) pool.push_back(i);
  for (int i = 0; i < k; ++i) {
    std::swap(pool[(size_t)i], pool[i + rng.below(pool.size() - (size_t)i)]);
    out.push_back(pool[(size_t)i]);
  }
}

bool collinear(const ProjPoint& A, const ProjPoint& B, const ProjPoint& C) {
  return incident(C, line_through(A, B));
}

/// Histogram over external points of the number of secants through each;
/// a projective invariant of the arc.
std::vector<int> secant_fingerprint(const Plane& pl, const PointSet& arc) {
  std::vector<int> hist(arc.points.size() + 1, 0);
  for (const auto& P : pl.points) {
    if (arc.contains(P)) continue;
    int secants = 0;
    int pi = pl.point_index(P);
    for (int li : pl.lines_through_point[(size_t)pi]) {
      int on = 0;
      for (int qi : pl.points_on_line[(size_t)li])
        if (arc.contains(pl.points[(size_t)qi])) ++on;
      if (on >= 2) ++secants;
    }
    ++hist[(size_t)secants];
  }
  return hist;
}

}  // namespace

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::ClosedForm: return "closed-form";
    case Provenance::Construction: return "construction";
    case Provenance::Exhaustive: return "exhaustive";
    case Provenance::RandomSearch: return "random-search";
  }
  fail("InternalError", "unknown provenance");
}

std::vector<AttainedValue> lower_entries(const FieldCtxPtr& ctx) {
  const long long q = ctx->q();
  if (q < 7)
    fail("TooSmallForClaim", "initial-entry list needs q >= 7");
  std::vector<AttainedValue> out;
  out.push_back(certified(0, Provenance::ClosedForm,
                          degenerate_set(ctx, DegenerateFamily::Line)));
  out.push_back(
      certified(q - 1, Provenance::ClosedForm,
                degenerate_set(ctx, DegenerateFamily::LinePlusPoint)));
  out.push_back(
      certified(2 * q - 4, Provenance::ClosedForm,
                degenerate_set(ctx, DegenerateFamily::TwoLinesNearFullIncl)));
  out.push_back(
      certified(2 * q - 3, Provenance::ClosedForm,
                degenerate_set(ctx, DegenerateFamily::TwoLinesNearFullExcl)));
  out.push_back(
      certified(3 * q - 9, Provenance::ClosedForm,
                degenerate_set(ctx, DegenerateFamily::LinePlusTriangle, 3)));
  if (q >= 16) {
    for (int k : {2, 1, 0})
      out.push_back(certified(
          3 * q - 6 - k, Provenance::ClosedForm,
          degenerate_set(ctx, DegenerateFamily::LinePlusTriangle, k)));
    // two lines carrying q-3 and 4 points, intersection included
    ConstructionSpec spec{ConstructionFamily::TwoLinesIncl, (int)q,
                          (int)(q - 4 - (q - q / 2)), 0, 0};
    out.push_back(certified(4 * q - 16, Provenance::ClosedForm,
                            build(ctx, spec).points));
  }
  return out;
}

std::vector<AttainedValue> construction_values(const FieldCtxPtr& ctx) {
  const int q = ctx->q();
  std::map<long long, AttainedValue> values;

  auto add_spec = [&](const ConstructionSpec& spec) {
    auto predicted = predicted_distribution(spec);
    long long u0 = predicted.non_hitting_index();
    if (values.count(u0)) return;
    auto r = build(ctx, spec);
    auto computed = predicted.kind == DistKind::Set
                        ? set_distribution(r.points)
                        : convert(set_distribution(r.points));
    if (computed != predicted)
      fail("InternalError", "built set disagrees with its predicted"
                            " distribution");
    merge_value(values, {u0, Provenance::Construction, r.points});
  };

  auto fh = [](int n) { return n / 2; };
  auto ch = [](int n) { return n - n / 2; };
  for (int t = 0; t <= fh(q + 1) - 2; ++t)
    add_spec({ConstructionFamily::TwoLinesExcl, q, t, 0, 0});
  for (int t = 0; t <= fh(q) - 1; ++t)
    add_spec({ConstructionFamily::TwoLinesIncl, q, t, 0, 0});
  for (int t = 0; t <= fh(q - 1) - 1; ++t)
    add_spec({ConstructionFamily::TwoLinesNucleus, q, t, 0, 0});
  for (int t = 0; t <= fh(q) - 2; ++t)
    add_spec({ConstructionFamily::TwoLinesParallelNucleus, q, t, 0, 0});
  if (q % 2 == 1)
    for (int t = 0; t <= fh(q - 1) - 2; ++t)
      for (int c = 0; c <= fh(q - 1) - t; ++c)
        if ((ch(q - 1) + t - c) % 2 == 0)
          add_spec({ConstructionFamily::TwoLinesTwoPoints, q, t, c, 0});

  auto add_degenerate = [&](DegenerateFamily fam, int k) {
    long long u0 =
        degenerate_distribution(q, fam, k).non_hitting_index();
    if (values.count(u0)) return;
    merge_value(values, certified(u0, Provenance::Construction,
                                  degenerate_set(ctx, fam, k)));
  };
  add_degenerate(DegenerateFamily::Line, 0);
  add_degenerate(DegenerateFamily::LinePlusPoint, 0);
  add_degenerate(DegenerateFamily::TwoLinesNearFullIncl, 0);
  add_degenerate(DegenerateFamily::TwoLinesNearFullExcl, 0);
  for (int k = 0; k <= std::min(3, q - 2); ++k)
    add_degenerate(DegenerateFamily::LinePlusTriangle, k);

  std::vector<AttainedValue> out;
  for (auto& [u0, v] : values) out.push_back(std::move(v));
  return out;
}

SpectrumResult exhaustive_spectrum(const FieldCtxPtr& ctx) {
  const int q = ctx->q();
  if (q > 5) fail("TooLarge", "exhaustive enumeration supports q <= 5");
  const auto& pl = plane(ctx);
  LineMasks masks(pl);
  const int n = masks.n, k = q + 1;

  std::map<long long, std::vector<int>> first;
  std::vector<int> c((size_t)k);
  for (int i = 0; i < k; ++i) c[(size_t)i] = i;
  std::uint64_t set_mask[1];
  while (true) {
    set_mask[0] = 0;
    for (int i : c) set_mask[0] |= 1ULL << i;
    long long u0 = masks.u0(set_mask);
    if (!first.count(u0)) first.emplace(u0, c);
    // next lexicographic combination
    int i = k - 1;
    while (i >= 0 && c[(size_t)i] == n - k + i) --i;
    if (i < 0) break;
    ++c[(size_t)i];
    for (int j = i + 1; j < k; ++j) c[(size_t)j] = c[(size_t)j - 1] + 1;
  }

  SpectrumResult out;
  out.q = q;
  for (auto& [u0, idx] : first)
    out.attained.push_back(
        certified(u0, Provenance::Exhaustive, set_from_indices(pl, idx)));
  return out;
}

SpectrumResult random_search(const FieldCtxPtr& ctx, long long trials,
                             std::uint64_t seed, bool fix_quadrangle,
                             int workers) {
  const int q = ctx->q();
  const auto& pl = plane(ctx);
  LineMasks masks(pl);
  if (workers < 1) workers = 1;

  struct WorkerOut {
    std::map<long long, long long> first_trial;  // u0 -> earliest trial
    long long sum = 0;
  };
  std::vector<WorkerOut> results((size_t)workers);
  auto run = [&](int w) {
    auto& res = results[(size_t)w];
    std::vector<int> pool, idx;
    std::vector<std::uint64_t> set_mask((size_t)masks.words);
    for (long long trial = w; trial < trials; trial += workers) {
      sample_trial(pl, seed, trial, fix_quadrangle, pool, idx);
      std::fill(set_mask.begin(), set_mask.end(), 0);
      for (int i : idx) set_mask[(size_t)(i / 64)] |= 1ULL << (i % 64);
      long long u0 = masks.u0(set_mask.data());
      res.sum += u0;
      auto it = res.first_trial.find(u0);
      if (it == res.first_trial.end()) res.first_trial.emplace(u0, trial);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool_threads;
    for (int w = 0; w < workers; ++w) pool_threads.emplace_back(run, w);
    for (auto& th : pool_threads) th.join();
  }

  std::map<long long, long long> first_trial;
  long long sum = 0;
  for (auto& res : results) {
    sum += res.sum;
    for (auto [u0, trial] : res.first_trial) {
      auto it = first_trial.find(u0);
      if (it == first_trial.end() || trial < it->second)
        first_trial[u0] = trial;
    }
  }

  std::map<long long, AttainedValue> values;
  if (q >= 7)
    for (auto& v : lower_entries(ctx)) merge_value(values, std::move(v));
  for (auto& v : construction_values(ctx)) merge_value(values, std::move(v));
  std::vector<int> pool, idx;
  for (auto [u0, trial] : first_trial) {
    if (values.count(u0)) continue;
    sample_trial(pl, seed, trial, fix_quadrangle, pool, idx);
    merge_value(values, certified(u0, Provenance::RandomSearch,
                                  set_from_indices(pl, idx)));
  }

  SpectrumResult out;
  out.q = q;
  out.trials = trials;
  out.seed = seed;
  out.mean_u0 = trials > 0 ? (double)sum / (double)trials : 0.0;
  for (auto& [u0, v] : values) out.attained.push_back(std::move(v));
  return out;
}

DegreeBoundReport degree_bound_checks(const FieldCtxPtr& ctx,
                                      long long samples, std::uint64_t seed) {
  const long long q = ctx->q();
  const auto& pl = plane(ctx);
  DegreeBoundReport rep;
  rep.q = (int)q;

  auto check_set = [&](const PointSet& S) {
    auto dist = set_distribution(S);
    int deg = dist.degree();
    const auto& u = dist.counts;
    if (deg <= 3) {
      ++rep.degree3_checked;
      if (2 * u[1] != 3 * q * q - q + 2 - 6 * u[0] ||
          u[2] != 3 * u[0] - q * (q - 2) ||
          u[3] != q * (q - 1) / 2 - u[0] || 3 * u[0] < q * (q - 2))
        fail("InternalError", "degree-3 closed forms violated");
    }
    if (deg <= 4) {
      ++rep.degree4_checked;
      long long c = u[3];
      if (3 * u[1] != 4 * q * q - q + 3 + c - 8 * u[0] ||
          2 * u[2] != 4 * u[0] - 2 * c - q * (q - 3) ||
          3 * u[4] != q * (q - 1) / 2 - c - u[0] ||
          4 * u[0] < q * q - 3 * q + 2 * c)
        fail("InternalError", "degree-4 closed forms violated");
    }
  };

  // the conic y = x^2 has degree 2 in every characteristic
  check_set(graph_set(Polynomial::monomial(ctx, 2)));

  std::vector<int> pool, idx;
  for (long long trial = 0; trial < samples; ++trial) {
    sample_trial(pl, seed, trial, false, pool, idx);
    check_set(set_from_indices(pl, idx));
    ++rep.sets_sampled;
  }
  return rep;
}

std::vector<PointSet> find_arc_representatives(const FieldCtxPtr& ctx,
                                               std::uint64_t seed,
                                               long long budget) {
  if (ctx->q() != 9)
    fail("ParameterOutOfRange", "arc representatives are computed for q = 9");
  const auto& pl = plane(ctx);
  const int n = (int)pl.points.size();
  std::map<std::vector<int>, PointSet> classes;

  // the conic-contained class: a conic minus two of its points
  auto conic = graph_set(Polynomial::monomial(ctx, 2));
  PointSet truncated(ctx, std::vector<ProjPoint>(conic.points.begin() + 2,
                                                 conic.points.end()));
  classes.emplace(secant_fingerprint(pl, truncated), truncated);

  std::uint64_t s = seed;
  splitmix64(s);
  for (long long iter = 0; iter < budget; ++iter) {
    if (classes.size() >= 2 && iter >= 200) break;
    Rng rng(s ^ (std::uint64_t)iter);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[(size_t)i] = i;
    for (int i = 0; i < n - 1; ++i)
      std::swap(order[(size_t)i],
                order[(size_t)i + rng.below((size_t)(n - i))]);
    std::vector<ProjPoint> arc;
    for (int i : order) {
      const auto& P = pl.points[(size_t)i];
      bool ok = true;
      for (size_t a = 0; ok && a + 1 < arc.size(); ++a)
        for (size_t b = a + 1; ok && b < arc.size(); ++b)
          if (collinear(arc[a], arc[b], P)) ok = false;
      if (ok) arc.push_back(P);
    }
    // greedy growth over a full point order always ends at a complete arc
    if (arc.size() != 8) continue;
    PointSet S(ctx, std::move(arc));
    classes.emplace(secant_fingerprint(pl, S), std::move(S));
  }

  std::vector<PointSet> out;
  for (auto& [fp, S] : classes) out.push_back(std::move(S));
  return out;
}

MaxProbeResult max_value_probe(const FieldCtxPtr& ctx,
                               const std::vector<PointSet>& representatives) {
  if (ctx->q() != 9)
    fail("ParameterOutOfRange", "the probe applies to q = 9");
  if (representatives.empty())
    fail("MissingArcRepresentatives", "no 8-arc representatives supplied");
  const auto& pl = plane(ctx);
  LineMasks masks(pl);

  MaxProbeResult rep;
  rep.no_u0_34 = true;
  for (const auto& arc : representatives) {
    if (arc.size() != 8)
      fail("DegenerateInput", "representative is not an 8-point set");
    for (size_t a = 0; a < 8; ++a)
      for (size_t b = a + 1; b < 8; ++b)
        for (size_t c = b + 1; c < 8; ++c)
          if (collinear(arc.points[a], arc.points[b], arc.points[c]))
            fail("DegenerateInput", "representative has three collinear"
                                    " points");
    ++rep.arcs;
    std::vector<int> outside;
    for (int i = 0; i < masks.n; ++i)
      if (!arc.contains(pl.points[(size_t)i])) outside.push_back(i);
    std::vector<std::uint64_t> base((size_t)masks.words, 0);
    for (const auto& P : arc.points) {
      int i = pl.point_index(P);
      base[(size_t)(i / 64)] |= 1ULL << (i % 64);
    }
    std::vector<std::uint64_t> set_mask((size_t)masks.words);
    for (size_t a = 0; a < outside.size(); ++a)
      for (size_t b = a + 1; b < outside.size(); ++b) {
        set_mask = base;
        set_mask[(size_t)(outside[a] / 64)] |= 1ULL << (outside[a] % 64);
        set_mask[(size_t)(outside[b] / 64)] |= 1ULL << (outside[b] % 64);
        ++rep.extensions_tested;
        if (masks.u0(set_mask.data()) == 34) rep.no_u0_34 = false;
      }
  }
  return rep;
}

}  // namespace idist
