#include "idist/geometry.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

namespace idist {

namespace {

std::array<FieldElement, 3> normalize3(FieldElement a, FieldElement b,
                                       FieldElement c) {
  const FieldCtx* F = a.ctx;
  F->check_same(b);
  F->check_same(c);
  for (FieldElement lead : {a, b, c}) {
    if (lead.is_zero()) continue;
    FieldElement inv = F->inv(lead);
    return {F->mul(a, inv), F->mul(b, inv), F->mul(c, inv)};
  }
  fail("ZeroTriple", "homogeneous triple must not be all zero");
}

std::array<FieldElement, 3> cross(const std::array<FieldElement, 3>& u,
                                  const std::array<FieldElement, 3>& v) {
  const FieldCtx* F = u[0].ctx;
  auto det2 = [&](FieldElement a, FieldElement b, FieldElement c,
                  FieldElement d) { return F->sub(F->mul(a, d), F->mul(b, c)); };
  return {det2(u[1], u[2], v[1], v[2]), det2(u[2], u[0], v[2], v[0]),
          det2(u[0], u[1], v[0], v[1])};
}

}  // namespace

ProjPoint proj_point(FieldElement x, FieldElement y, FieldElement z) {
  auto n = normalize3(x, y, z);
  return {n[0], n[1], n[2]};
}

ProjLine proj_line(FieldElement a, FieldElement b, FieldElement c) {
  auto n = normalize3(a, b, c);
  return {n[0], n[1], n[2]};
}

ProjPoint proj_point_ints(const FieldCtxPtr& ctx, long long x, long long y,
                          long long z) {
  return proj_point(ctx->from_prime(x), ctx->from_prime(y), ctx->from_prime(z));
}

ProjLine proj_line_ints(const FieldCtxPtr& ctx, long long a, long long b,
                        long long c) {
  return proj_line(ctx->from_prime(a), ctx->from_prime(b), ctx->from_prime(c));
}

bool incident(const ProjPoint& P, const ProjLine& l) {
  const FieldCtx* F = P.x.ctx;
  F->check_same(l.a);
  FieldElement s = F->add(F->add(F->mul(l.a, P.x), F->mul(l.b, P.y)),
                          F->mul(l.c, P.z));
  return s.is_zero();
}

ProjLine line_through(const ProjPoint& P, const ProjPoint& Q) {
  if (P == Q) fail("DegenerateInput", "line through a single point");
  auto c = cross({P.x, P.y, P.z}, {Q.x, Q.y, Q.z});
  return proj_line(c[0], c[1], c[2]);
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  if (l == m) fail("DegenerateInput", "meet of a line with itself");
  auto c = cross({l.a, l.b, l.c}, {m.a, m.b, m.c});
  return proj_point(c[0], c[1], c[2]);
}

PointSet::PointSet(FieldCtxPtr ctx_in, std::vector<ProjPoint> pts)
    : ctx(std::move(ctx_in)), points(std::move(pts)) {
  for (auto& P : points) ctx->check_same(P.x);
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end())
    fail("DuplicatePoint", "point set contains a repeated point");
}

bool PointSet::contains(const ProjPoint& P) const {
  return std::binary_search(points.begin(), points.end(), P);
}

namespace {

std::uint64_t triple_key(int q, std::uint32_t a, std::uint32_t b,
                         std::uint32_t c) {
  return ((std::uint64_t)a * q + b) * q + c;
}

std::shared_ptr<const Plane> build_plane(const FieldCtxPtr& ctx) {
  auto pl = std::make_shared<Plane>();
  pl->ctx = ctx;
  auto one = ctx->one(), zero = ctx->zero();
  // canonical representatives: (1,y,z), (0,1,z), (0,0,1)
  for (auto y : ctx->elements())
    for (auto z : ctx->elements()) pl->points.push_back({one, y, z});
  for (auto z : ctx->elements()) pl->points.push_back({zero, one, z});
  pl->points.push_back({zero, zero, one});
  std::sort(pl->points.begin(), pl->points.end());
  for (auto& P : pl->points)
    pl->lines.push_back({P.x, P.y, P.z});  // self-duality

  int n = (int)pl->points.size();
  pl->points_on_line.assign(n, {});
  pl->lines_through_point.assign(n, {});
  for (int li = 0; li < n; ++li)
    for (int pi = 0; pi < n; ++pi)
      if (incident(pl->points[pi], pl->lines[li])) {
        pl->points_on_line[li].push_back(pi);
        pl->lines_through_point[pi].push_back(li);
      }
  return pl;
}

std::mutex plane_cache_mutex;
std::map<std::pair<std::string, std::uint32_t>, std::shared_ptr<const Plane>>
    plane_cache;

}  // namespace

const Plane& plane(const FieldCtxPtr& ctx) {
  std::scoped_lock lock(plane_cache_mutex);
  auto key = std::make_pair(ctx->spec_string(), ctx->alpha().v);
  auto it = plane_cache.find(key);
  if (it == plane_cache.end())
    it = plane_cache.emplace(key, build_plane(ctx)).first;
  return *it->second;
}

int Plane::point_index(const ProjPoint& P) const {
  auto it = std::lower_bound(points.begin(), points.end(), P);
  if (it == points.end() || !(*it == P))
    fail("InternalError", "point not in plane table");
  return (int)(it - points.begin());
}

int Plane::line_index(const ProjLine& l) const {
  ProjPoint dual{l.a, l.b, l.c};
  return point_index(dual);  // same sorted order by construction
}

PointSet graph_set(const Polynomial& f) {
  auto ctx = f.ctx();
  std::vector<ProjPoint> pts;
  for (auto x : ctx->elements())
    pts.push_back(proj_point(x, f.evaluate(x), ctx->one()));
  pts.push_back(proj_point(ctx->zero(), ctx->one(), ctx->zero()));
  return PointSet(ctx, std::move(pts));
}

Homography::Homography(FieldCtxPtr ctx, Matrix m)
    : ctx_(std::move(ctx)), m_(m) {
  for (auto& row : m_)
    for (auto& e : row) ctx_->check_same(e);
  auto F = ctx_.get();
  // det by cofactor expansion along the first row
  FieldElement det = F->zero();
  auto minor2 = [&](int r0, int r1, int c0, int c1) {
    return F->sub(F->mul(m_[r0][c0], m_[r1][c1]),
                  F->mul(m_[r0][c1], m_[r1][c0]));
  };
  det = F->add(det, F->mul(m_[0][0], minor2(1, 2, 1, 2)));
  det = F->sub(det, F->mul(m_[0][1], minor2(1, 2, 0, 2)));
  det = F->add(det, F->mul(m_[0][2], minor2(1, 2, 0, 1)));
  if (det.is_zero()) fail("SingularMatrix", "homography matrix is singular");
  // canonical scaling: first nonzero entry in row-major order equals 1
  for (auto& row : m_)
    for (auto& e : row)
      if (!e.is_zero()) {
        FieldElement inv = F->inv(e);
        for (auto& r2 : m_)
          for (auto& e2 : r2) e2 = F->mul(e2, inv);
        return;
      }
}

Homography Homography::identity(const FieldCtxPtr& ctx) {
  auto o = ctx->one(), z = ctx->zero();
  return Homography(ctx, {{{o, z, z}, {z, o, z}, {z, z, o}}});
}

Homography Homography::from_ints(
    const FieldCtxPtr& ctx, const std::array<std::array<long long, 3>, 3>& m) {
  Matrix mm;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) mm[i][j] = ctx->from_prime(m[i][j]);
  return Homography(ctx, mm);
}

ProjPoint Homography::apply(const ProjPoint& P) const {
  auto F = ctx_.get();
  std::array<FieldElement, 3> in{P.x, P.y, P.z}, out;
  for (int i = 0; i < 3; ++i) {
    out[i] = F->zero();
    for (int j = 0; j < 3; ++j)
      out[i] = F->add(out[i], F->mul(m_[i][j], in[j]));
  }
  return proj_point(out[0], out[1], out[2]);
}

Homography Homography::inverse() const {
  auto F = ctx_.get();
  auto minor2 = [&](int r0, int r1, int c0, int c1) {
    return F->sub(F->mul(m_[r0][c0], m_[r1][c1]),
                  F->mul(m_[r0][c1], m_[r1][c0]));
  };
  Matrix adj;  // adjugate; scalar factor is irrelevant projectively
  int rows[3][2] = {{1, 2}, {0, 2}, {0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      FieldElement c = minor2(rows[j][0], rows[j][1], rows[i][0], rows[i][1]);
      adj[i][j] = ((i + j) % 2 == 0) ? c : F->neg(c);
    }
  return Homography(ctx_, adj);
}

Homography Homography::compose(const Homography& inner) const {
  auto F = ctx_.get();
  Matrix out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      out[i][j] = F->zero();
      for (int k = 0; k < 3; ++k)
        out[i][j] = F->add(out[i][j], F->mul(m_[i][k], inner.m_[k][j]));
    }
  return Homography(ctx_, out);
}

bool operator==(const Homography& a, const Homography& b) {
  return a.m_ == b.m_;
}

PointSet apply_collineation(const PointSet& S, const Homography& h,
                            int sigma) {
  auto& ctx = S.ctx;
  int s = ctx->s();
  sigma = ((sigma % s) + s) % s;
  std::vector<ProjPoint> out;
  out.reserve(S.points.size());
  for (auto& P : S.points) {
    ProjPoint Q = h.apply(P);
    out.push_back(proj_point(ctx->frobenius(Q.x, sigma),
                             ctx->frobenius(Q.y, sigma),
                             ctx->frobenius(Q.z, sigma)));
  }
  return PointSet(ctx, std::move(out));
}

std::vector<int> secant_profile(const PointSet& D, const ProjPoint& P) {
  auto& pl = plane(D.ctx);
  std::vector<int> counts;
  for (int li : pl.lines_through_point[pl.point_index(P)]) {
    int c = 0;
    for (int pi : pl.points_on_line[li])
      if (D.contains(pl.points[pi])) ++c;
    counts.push_back(c);
  }
  std::sort(counts.begin(), counts.end());
  return counts;
}

namespace {

void require_qp1(const PointSet& D) {
  if (D.size() != D.ctx->q() + 1)
    fail("WrongCardinality", "operation requires exactly q+1 points");
}

}  // namespace

std::vector<ProjPoint> internal_nuclei(const PointSet& D) {
  require_qp1(D);
  std::vector<ProjPoint> out;
  for (auto& P : D.points) {
    auto prof = secant_profile(D, P);
    // one unisecant, q bisecants (every other line meets D in exactly 2)
    if (prof.front() == 1 && prof[1] == 2 && prof.back() == 2)
      out.push_back(P);
  }
  return out;
}

std::vector<ProjPoint> external_nuclei(const PointSet& D) {
  require_qp1(D);
  std::vector<ProjPoint> out;
  for (auto& P : plane(D.ctx).points) {
    if (D.contains(P)) continue;
    auto prof = secant_profile(D, P);
    if (prof.back() == 1) out.push_back(P);
  }
  return out;
}

std::pair<Homography, Polynomial> set_to_polynomial(const PointSet& D,
                                                    const ProjPoint& I) {
  auto nuclei = internal_nuclei(D);
  if (std::find(nuclei.begin(), nuclei.end(), I) == nuclei.end())
    fail("NotAnInternalNucleus", "given point is not an internal nucleus");
  auto& ctx = D.ctx;
  auto& pl = plane(ctx);

  // the unique unisecant of D through I
  ProjLine unisecant{};
  bool found = false;
  for (int li : pl.lines_through_point[pl.point_index(I)]) {
    int c = 0;
    for (int pi : pl.points_on_line[li])
      if (D.contains(pl.points[pi])) ++c;
    if (c == 1) {
      unisecant = pl.lines[li];
      found = true;
    }
  }
  if (!found) fail("InternalError", "internal nucleus without unisecant");

  ProjPoint inf = proj_point_ints(ctx, 0, 1, 0);
  ProjLine zline = proj_line_ints(ctx, 0, 0, 1);
  Homography theta = Homography::identity(ctx);
  if (!(I == inf && unisecant == zline)) {
    // columns (P, I, R) map (1,0,0),(0,1,0),(0,0,1) to P, I, R;
    // invert to send I -> (0,1,0) and the unisecant (through P and I) -> z=0
    ProjPoint P{}, R{};
    bool have_p = false, have_r = false;
    for (int pi : pl.points_on_line[pl.line_index(unisecant)]) {
      if (!(pl.points[pi] == I)) {
        P = pl.points[pi];
        have_p = true;
        break;
      }
    }
    for (auto& cand : pl.points)
      if (!incident(cand, unisecant)) {
        R = cand;
        have_r = true;
        break;
      }
    if (!have_p || !have_r) fail("InternalError", "frame construction failed");
    Homography::Matrix cols{{{P.x, I.x, R.x}, {P.y, I.y, R.y}, {P.z, I.z, R.z}}};
    theta = Homography(ctx, cols).inverse();
  }

  PointSet image = apply_collineation(D, theta, 0);
  std::vector<std::pair<FieldElement, FieldElement>> pairs;
  for (auto& Q : image.points) {
    if (Q == inf) continue;
    if (Q.z.is_zero())
      fail("InternalError", "image point off the affine chart");
    // normalized points with z != 0 have the form (x, y, 1) after rescaling
    FieldElement zinv = ctx->inv(Q.z);
    pairs.emplace_back(ctx->mul(Q.x, zinv), ctx->mul(Q.y, zinv));
  }
  Polynomial f = interpolate(ctx, pairs);
  return {theta, f};
}

}  // namespace idist
