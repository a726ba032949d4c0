#include "idist/equivalence.hpp"

#include <algorithm>

namespace idist {

EquivTransform EquivTransform::identity(const FieldCtxPtr& ctx) {
  return {ctx->one(), ctx->zero(), ctx->zero(), ctx->zero(), ctx->one(), 0};
}

Polynomial transform(const Polynomial& f, const EquivTransform& t) {
  auto ctx = f.ctx();
  ctx->check_same(t.a);
  ctx->check_same(t.b);
  ctx->check_same(t.c);
  ctx->check_same(t.d);
  ctx->check_same(t.e);
  if (t.a.is_zero() || t.e.is_zero())
    fail("InvalidTransform", "parameters a and e must be nonzero");
  if (t.sigma < 0 || t.sigma >= ctx->s())
    fail("InvalidTransform", "sigma must lie in 0..s-1");

  // Horner composition of the Frobenius image of f with a*x + b
  Polynomial axb(ctx, {t.b, t.a});
  Polynomial g = Polynomial::zero(ctx);
  for (int i = f.degree(); i >= 0; --i) {
    g = g * axb +
        Polynomial::constant(ctx, ctx->frobenius(f.coeff(i), t.sigma));
  }
  g = g.scaled(t.e) + Polynomial(ctx, {t.d, t.c});
  if (g.degree() >= ctx->q()) g = g.reduced_mod_field();
  return g;
}

namespace {

// N must be affine; returns its (a, b) with N = (a, b, 1).
std::pair<FieldElement, FieldElement> affine_coords(const FieldCtxPtr& ctx,
                                                    const ProjPoint& N) {
  if (N.z.is_zero())
    fail("PointAtInfinity", "nucleus normalization needs an affine point");
  FieldElement zi = ctx->inv(N.z);
  return {ctx->mul(N.x, zi), ctx->mul(N.y, zi)};
}

}  // namespace

Polynomial normalize_nucleus(const Polynomial& f, const ProjPoint& N) {
  auto ctx = f.ctx();
  auto [na, nb] = affine_coords(ctx, N);
  auto S = graph_set(f);
  auto nuclei = internal_nuclei(S);
  if (std::find(nuclei.begin(), nuclei.end(), N) == nuclei.end())
    fail("NotAnInternalNucleus", "given point is not an internal nucleus");

  // the unisecant through N; it is neither vertical nor at infinity, so it
  // reads y = lambda*x + mu
  auto& pl = plane(ctx);
  FieldElement lambda = ctx->zero(), mu = ctx->zero();
  bool found = false;
  for (int li : pl.lines_through_point[pl.point_index(N)]) {
    int c = 0;
    for (int pi : pl.points_on_line[li])
      if (S.contains(pl.points[pi])) ++c;
    if (c == 1) {
      auto& l = pl.lines[li];
      if (l.b.is_zero())
        fail("InternalError", "unisecant through an affine nucleus of a "
                              "graph set cannot be vertical");
      FieldElement bi = ctx->inv(l.b);
      lambda = ctx->neg(ctx->mul(l.a, bi));
      mu = ctx->neg(ctx->mul(l.c, bi));
      found = true;
      break;
    }
  }
  if (!found) fail("InternalError", "internal nucleus without unisecant");

  // g(x) = f(x + a) - lambda*x - (lambda*a + mu): shifts N to the origin
  // and the unisecant to y = 0
  EquivTransform t{ctx->one(), na, ctx->neg(lambda),
                   ctx->neg(ctx->add(ctx->mul(lambda, na), mu)), ctx->one(),
                   0};
  return transform(f, t);
}

Polynomial xg_decompose(const Polynomial& f) {
  auto ctx = f.ctx();
  auto origin = proj_point_ints(ctx, 0, 0, 1);
  auto nuclei = internal_nuclei(graph_set(f));
  if (std::find(nuclei.begin(), nuclei.end(), origin) == nuclei.end())
    fail("NucleusMissing", "(0,0,1) is not an internal nucleus of the graph");

  // g(x) = f(x)/x on nonzero x; it misses exactly one slope lambda0,
  // the slope of the unisecant through the origin
  std::vector<std::pair<FieldElement, FieldElement>> pairs;
  std::vector<char> hit((size_t)ctx->q(), 0);
  for (auto x : ctx->elements()) {
    if (x.is_zero()) continue;
    FieldElement gx = ctx->div(f.evaluate(x), x);
    if (hit[gx.v]) fail("NotDecomposable", "f(x)/x is not injective");
    hit[gx.v] = 1;
    pairs.emplace_back(x, gx);
  }
  FieldElement lambda0 = ctx->zero();
  int missing = 0;
  for (std::uint32_t v = 0; v < (std::uint32_t)ctx->q(); ++v)
    if (!hit[v]) {
      lambda0 = ctx->from_index(v);
      ++missing;
    }
  if (missing != 1) fail("NotDecomposable", "f(x)/x misses more than one value");

  // absorb the unisecant slope so that g(0) = 0
  if (!lambda0.is_zero())
    for (auto& pr : pairs) pr.second = ctx->sub(pr.second, lambda0);
  pairs.emplace_back(ctx->zero(), ctx->zero());
  Polynomial g = interpolate(ctx, pairs);
  if (!is_permutation(g)) fail("NotDecomposable", "derived g not a permutation");
  return g;
}

Polynomial nucleus_swap(const Polynomial& f) {
  auto ctx = f.ctx();
  Polynomial g = xg_decompose(f);
  Polynomial ginv = perm_inverse(g);
  std::vector<std::pair<FieldElement, FieldElement>> pairs;
  pairs.emplace_back(ctx->zero(), ctx->zero());
  for (auto x : ctx->elements()) {
    if (x.is_zero()) continue;
    FieldElement hx = ctx->inv(ginv.evaluate(ctx->inv(x)));
    pairs.emplace_back(x, ctx->mul(x, hx));  // directly tabulate x*h(x)
  }
  return interpolate(ctx, pairs);
}

InverseComparison inverse_comparison(const Polynomial& f) {
  InverseComparison rep;
  rep.dist_f = poly_distribution(f);
  rep.dist_inverse = poly_distribution(perm_inverse(f));
  rep.equal = rep.dist_f == rep.dist_inverse;
  return rep;
}

}  // namespace idist
