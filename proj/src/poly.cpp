#include "idist/poly.hpp"

#include <algorithm>

namespace idist {

namespace {

std::vector<FieldElement> trimmed(std::vector<FieldElement> cs) {
  while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
  return cs;
}

}  // namespace

Polynomial::Polynomial(FieldCtxPtr ctx, std::vector<FieldElement> coeffs)
    : ctx_(std::move(ctx)), coeffs_(trimmed(std::move(coeffs))) {
  for (auto& c : coeffs_) ctx_->check_same(c);
}

Polynomial Polynomial::constant(FieldCtxPtr ctx, FieldElement c) {
  return Polynomial(std::move(ctx), {c});
}

Polynomial Polynomial::monomial(FieldCtxPtr ctx, int d) {
  FieldElement one = ctx->one();
  return monomial(std::move(ctx), d, one);
}

Polynomial Polynomial::monomial(FieldCtxPtr ctx, int d, FieldElement coeff) {
  if (d < 0) fail("NegativeDegree", "monomial degree must be >= 0");
  std::vector<FieldElement> cs((size_t)d + 1, ctx->zero());
  cs[(size_t)d] = coeff;
  return Polynomial(std::move(ctx), std::move(cs));
}

Polynomial Polynomial::from_ints(FieldCtxPtr ctx,
                                 const std::vector<long long>& cs) {
  std::vector<FieldElement> out;
  out.reserve(cs.size());
  for (auto c : cs) out.push_back(ctx->from_prime(c));
  return Polynomial(std::move(ctx), std::move(out));
}

FieldElement Polynomial::coeff(int i) const {
  if (i < 0 || (size_t)i >= coeffs_.size()) return ctx_->zero();
  return coeffs_[(size_t)i];
}

FieldElement Polynomial::evaluate(FieldElement x) const {
  ctx_->check_same(x);
  FieldElement acc = ctx_->zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = ctx_->add(ctx_->mul(acc, x), *it);
  return acc;
}

std::vector<FieldElement> Polynomial::value_table() const {
  std::vector<FieldElement> vals;
  vals.reserve((size_t)ctx_->q());
  for (auto x : ctx_->elements()) vals.push_back(evaluate(x));
  return vals;
}

void Polynomial::check_ctx(const Polynomial& o) const {
  if (!ctx_->same_field(*o.ctx_))
    fail("MixedFields", "polynomials over different fields");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ctx(o);
  std::vector<FieldElement> cs(std::max(coeffs_.size(), o.coeffs_.size()),
                               ctx_->zero());
  for (size_t i = 0; i < cs.size(); ++i)
    cs[i] = ctx_->add(coeff((int)i), o.coeff((int)i));
  return Polynomial(ctx_, std::move(cs));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator-() const {
  std::vector<FieldElement> cs = coeffs_;
  for (auto& c : cs) c = ctx_->neg(c);
  return Polynomial(ctx_, std::move(cs));
}

Polynomial Polynomial::scaled(FieldElement c) const {
  ctx_->check_same(c);
  std::vector<FieldElement> cs = coeffs_;
  for (auto& x : cs) x = ctx_->mul(x, c);
  return Polynomial(ctx_, std::move(cs));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ctx(o);
  if (is_zero() || o.is_zero()) return zero(ctx_);
  std::vector<FieldElement> cs(coeffs_.size() + o.coeffs_.size() - 1,
                               ctx_->zero());
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      cs[i + j] = ctx_->add(cs[i + j], ctx_->mul(coeffs_[i], o.coeffs_[j]));
  return Polynomial(ctx_, std::move(cs));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ctx_->inv(coeffs_.back()));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(
    const Polynomial& divisor) const {
  check_ctx(divisor);
  if (divisor.is_zero()) fail("DivisionByZero", "polynomial division by zero");
  std::vector<FieldElement> rem = coeffs_;
  int dd = divisor.degree();
  if (degree() < dd) return {zero(ctx_), *this};
  std::vector<FieldElement> quot((size_t)(degree() - dd) + 1, ctx_->zero());
  FieldElement lead_inv = ctx_->inv(divisor.coeffs_.back());
  for (int i = degree(); i >= dd; --i) {
    FieldElement c = ctx_->mul(rem[(size_t)i], lead_inv);
    if (c.is_zero()) continue;
    quot[(size_t)(i - dd)] = c;
    for (int j = 0; j <= dd; ++j)
      rem[(size_t)(i - dd + j)] =
          ctx_->sub(rem[(size_t)(i - dd + j)],
                    ctx_->mul(c, divisor.coeffs_[(size_t)j]));
  }
  return {Polynomial(ctx_, std::move(quot)), Polynomial(ctx_, std::move(rem))};
}

Polynomial Polynomial::reduced_mod_field() const {
  int q = ctx_->q();
  std::vector<FieldElement> cs((size_t)q, ctx_->zero());
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    // x^k = x^{((k-1) mod (q-1)) + 1} as a function, for k >= 1
    size_t e = k == 0 ? 0 : (k - 1) % (size_t)(q - 1) + 1;
    cs[e] = ctx_->add(cs[e], coeffs_[k]);
  }
  return Polynomial(ctx_, std::move(cs));
}

bool Polynomial::same_function(const Polynomial& o) const {
  check_ctx(o);
  return reduced_mod_field() == o.reduced_mod_field();
}

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
  Polynomial a = f, b = g;
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = b;
    b = r;
  }
  return a.monic();
}

namespace {

// h^e mod f by square-and-multiply on polynomials.
Polynomial powmod(Polynomial h, long long e, const Polynomial& f) {
  Polynomial acc = Polynomial::constant(h.ctx(), h.ctx()->one());
  h = h.divmod(f).second;
  while (e > 0) {
    if (e & 1) acc = (acc * h).divmod(f).second;
    h = (h * h).divmod(f).second;
    e >>= 1;
  }
  return acc;
}

}  // namespace

RootReport distinct_roots(const Polynomial& f) {
  if (f.is_zero()) fail("ZeroPolynomial", "roots of the zero polynomial");
  auto ctx = f.ctx();
  RootReport rep;
  for (auto x : ctx->elements())
    if (f.evaluate(x).is_zero()) rep.roots.push_back(x);
  rep.count = (int)rep.roots.size();

  if (f.degree() >= 1) {
    // cross-check: number of distinct roots = deg gcd(f, x^q - x)
    Polynomial x = Polynomial::monomial(ctx, 1);
    Polynomial xq = powmod(x, ctx->q(), f);
    int gdeg = poly_gcd(f, xq - x).degree();
    if (gdeg != rep.count)
      fail("InternalError", "root count disagrees with gcd degree");
  }
  return rep;
}

Polynomial interpolate(
    const FieldCtxPtr& ctx,
    const std::vector<std::pair<FieldElement, FieldElement>>& pairs) {
  for (size_t i = 0; i < pairs.size(); ++i)
    for (size_t j = i + 1; j < pairs.size(); ++j)
      if (pairs[i].first == pairs[j].first)
        fail("DuplicateAbscissa", "repeated x-value in interpolation data");

  Polynomial result = Polynomial::zero(ctx);
  for (size_t i = 0; i < pairs.size(); ++i) {
    Polynomial basis = Polynomial::constant(ctx, ctx->one());
    FieldElement denom = ctx->one();
    for (size_t j = 0; j < pairs.size(); ++j) {
      if (j == i) continue;
      basis = basis * Polynomial(ctx, {ctx->neg(pairs[j].first), ctx->one()});
      denom = ctx->mul(denom, ctx->sub(pairs[i].first, pairs[j].first));
    }
    result = result + basis.scaled(ctx->div(pairs[i].second, denom));
  }
  return result;
}

bool is_permutation(const Polynomial& f) {
  std::vector<bool> seen((size_t)f.ctx()->q(), false);
  for (auto v : f.value_table()) {
    if (seen[v.v]) return false;
    seen[v.v] = true;
  }
  return true;
}

Polynomial perm_inverse(const Polynomial& f) {
  auto ctx = f.ctx();
  if (!is_permutation(f))
    fail("NotAPermutation", "polynomial does not permute the field");
  std::vector<std::pair<FieldElement, FieldElement>> pairs;
  pairs.reserve((size_t)ctx->q());
  auto elems = ctx->elements();
  for (auto x : elems) pairs.emplace_back(f.evaluate(x), x);
  Polynomial inv = interpolate(ctx, pairs);

  // fast path for x^d: inverse is x^e with d*e = 1 mod q-1; must agree
  if (f.degree() >= 1 && f.coeffs().back() == ctx->one() &&
      std::count_if(f.coeffs().begin(), f.coeffs().end(),
                    [](FieldElement c) { return !c.is_zero(); }) == 1) {
    long long d = f.degree() % (ctx->q() - 1);
    for (long long e = 1; e < ctx->q() - 1; ++e)
      if (d * e % (ctx->q() - 1) == 1) {
        if (!(inv.same_function(Polynomial::monomial(ctx, (int)e))))
          fail("InternalError", "monomial inverse mismatch");
        break;
      }
  }
  return inv;
}

Polynomial indicator_polynomial(const FieldCtxPtr& ctx,
                                const std::vector<FieldElement>& T) {
  Polynomial sum = Polynomial::zero(ctx);
  Polynomial one = Polynomial::constant(ctx, ctx->one());
  for (auto t : T) {
    ctx->check_same(t);
    // 1 - (x - t)^{q-1}
    Polynomial xt(ctx, {ctx->neg(t), ctx->one()});
    Polynomial pw = Polynomial::constant(ctx, ctx->one());
    for (int i = 0; i < ctx->q() - 1; ++i) pw = pw * xt;
    sum = sum + (one - pw);
  }
  return sum;
}

long long count_irreducible_cubics_fixed_trace(const FieldCtxPtr& ctx,
                                               FieldElement gamma) {
  ctx->check_same(gamma);
  long long q = ctx->q();
  if (ctx->p() != 3) return (q * q - 1) / 3;
  // characteristic 3: the trace map x -> x^q + x^{q^... } degenerates
  return gamma.is_zero() ? q * (q - 1) / 3 : q * q / 3;
}

}  // namespace idist
