#include "idist/distribution.hpp"

#include <algorithm>
#include <thread>

#include "json.hpp"

namespace idist {

namespace {

struct Sums {
  long long s0 = 0, s1 = 0, s2 = 0;
};

Sums sum_up(const std::vector<long long>& counts) {
  Sums s;
  for (size_t i = 0; i < counts.size(); ++i) {
    s.s0 += counts[i];
    s.s1 += (long long)i * counts[i];
    s.s2 += (long long)i * ((long long)i - 1) * counts[i];
  }
  return s;
}

void expected_sums(DistKind kind, long long q, Sums& e) {
  if (kind == DistKind::Poly) {
    e = {q * q, q * q, q * (q - 1)};
  } else {
    e = {q * q + q + 1, (q + 1) * (q + 1), q * (q + 1)};
  }
}

}  // namespace

void IntersectionDistribution::validate() const {
  size_t want = (size_t)q + (kind == DistKind::Poly ? 1 : 2);
  if (q < 2 || counts.size() != want)
    fail("InconsistentDistribution", "wrong length for the given q and kind");
  for (auto c : counts)
    if (c < 0) fail("InconsistentDistribution", "negative count");
  Sums got = sum_up(counts), want_s;
  expected_sums(kind, q, want_s);
  if (got.s0 != want_s.s0 || got.s1 != want_s.s1 || got.s2 != want_s.s2)
    fail("InconsistentDistribution", "sum identities violated");
}

int IntersectionDistribution::degree() const {
  for (int i = (int)counts.size() - 1; i >= 0; --i)
    if (counts[i] > 0) return i;
  fail("EmptyDistribution", "all counts are zero");
}

IntersectionDistribution poly_distribution(const Polynomial& f, int workers) {
  auto ctx = f.ctx();
  int q = ctx->q();
  auto values = f.value_table();  // values[x] = f(x), indexed by element index

  if (workers < 1) workers = 1;
  workers = std::min(workers, q);
  std::vector<std::vector<long long>> partial(
      (size_t)workers, std::vector<long long>((size_t)q + 1, 0));

  auto run = [&](int w) {
    std::vector<int> bucket((size_t)q, 0);
    auto& tally = partial[(size_t)w];
    for (std::uint32_t a = (std::uint32_t)w; a < (std::uint32_t)q;
         a += (std::uint32_t)workers) {
      std::fill(bucket.begin(), bucket.end(), 0);
      for (std::uint32_t x = 0; x < (std::uint32_t)q; ++x) {
        // b = f(x) - a*x; x then solves f - ax - b
        std::uint32_t b =
            ctx->add_raw(values[x].v, ctx->neg_raw(ctx->mul_raw(a, x)));
        ++bucket[b];
      }
      for (std::uint32_t b = 0; b < (std::uint32_t)q; ++b)
        ++tally[(size_t)bucket[b]];
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }

  IntersectionDistribution dist{DistKind::Poly, q,
                                std::vector<long long>((size_t)q + 1, 0)};
  for (auto& part : partial)
    for (size_t i = 0; i <= (size_t)q; ++i) dist.counts[i] += part[i];
  dist.validate();
  return dist;
}

IntersectionDistribution set_distribution(const PointSet& D) {
  int q = D.ctx->q();
  if (D.size() != q + 1)
    fail("WrongCardinality", "set distribution requires exactly q+1 points");
  auto& pl = plane(D.ctx);
  std::vector<char> member(pl.points.size(), 0);
  for (auto& P : D.points) member[(size_t)pl.point_index(P)] = 1;

  IntersectionDistribution dist{DistKind::Set, q,
                                std::vector<long long>((size_t)q + 2, 0)};
  for (auto& on : pl.points_on_line) {
    int c = 0;
    for (int pi : on) c += member[(size_t)pi];
    ++dist.counts[(size_t)c];
  }
  dist.validate();
  return dist;
}

IntersectionDistribution convert(const IntersectionDistribution& dist) {
  dist.validate();
  int q = dist.q;
  IntersectionDistribution out;
  out.q = q;
  if (dist.kind == DistKind::Set) {
    if (dist.counts[(size_t)q + 1] != 0)
      fail("InconsistentDistribution",
           "a set containing a full line has no polynomial counterpart");
    out.kind = DistKind::Poly;
    out.counts.assign(dist.counts.begin(), dist.counts.end() - 1);
    out.counts[1] -= 1;
    out.counts[2] -= q;
  } else {
    out.kind = DistKind::Set;
    out.counts = dist.counts;
    out.counts[1] += 1;
    out.counts[2] += q;
    out.counts.push_back(0);
  }
  out.validate();
  return out;
}

IntersectionDistribution complete_from_tail(
    const std::map<int, long long>& tail, int q, DistKind kind) {
  int top = kind == DistKind::Poly ? q : q + 1;
  IntersectionDistribution out{kind, q,
                               std::vector<long long>((size_t)top + 1, 0)};
  for (auto [i, c] : tail) {
    if (i < 3 || i > top)
      fail("InfeasibleTail", "tail indices must lie in 3..degree range");
    if (c < 0) fail("InfeasibleTail", "negative tail count");
    out.counts[(size_t)i] = c;
  }
  Sums s = sum_up(out.counts), want;
  expected_sums(kind, q, want);
  long long c2_twice = want.s2 - s.s2;
  if (c2_twice < 0 || c2_twice % 2 != 0)
    fail("InfeasibleTail", "index-2 fill is negative or fractional");
  out.counts[2] = c2_twice / 2;
  out.counts[1] = want.s1 - s.s1 - 2 * out.counts[2];
  if (out.counts[1] < 0) fail("InfeasibleTail", "index-1 fill is negative");
  out.counts[0] = want.s0 - s.s0 - out.counts[1] - out.counts[2];
  if (out.counts[0] < 0) fail("InfeasibleTail", "index-0 fill is negative");
  out.validate();
  return out;
}

IntersectionDistribution cubic_distribution(int q, bool has_x2_term) {
  // q must be a prime power; find its characteristic
  int p = 0;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q;
  int t = q;
  while (t % p == 0) t /= p;
  if (t != 1 || q < 2) fail("NonPrimePower", "q must be a prime power");

  // index-2 count from the inflection analysis; index-3 count then follows
  // from the second sum identity, and completion fills the rest
  long long v2 = p != 3 ? q - 1 : (has_x2_term ? q : 0);
  long long v3 = ((long long)q * (q - 1) - 2 * v2) / 6;
  return complete_from_tail({{3, v3}}, q, DistKind::Poly);
}

std::string to_json(const IntersectionDistribution& dist) {
  nlohmann::json j;
  j["kind"] = dist.kind == DistKind::Poly ? "v" : "u";
  j["q"] = dist.q;
  j["counts"] = dist.counts;
  nlohmann::json nz = nlohmann::json::object();
  for (size_t i = 0; i < dist.counts.size(); ++i)
    if (dist.counts[i] != 0) nz[std::to_string(i)] = dist.counts[i];
  j["nonzero"] = nz;
  j["degree"] = dist.degree();
  j["non_hitting_index"] = dist.non_hitting_index();
  return j.dump();
}

}  // namespace idist
