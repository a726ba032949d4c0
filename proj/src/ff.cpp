#include "idist/ff.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace idist {
namespace {

constexpr std::uint32_t kMaxQ = 1u << 16;

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; (long long)d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> fs;
  for (int d = 2; (long long)d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

long long mod_pow(long long b, long long e, long long m) {
  long long r = 1 % m;
  b %= m;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
  }
  return r;
}

// ---- GF(p)[x] arithmetic on int coefficient vectors, constant term first ----

using PPoly = std::vector<int>;

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, int p) {
  if (a.empty() || b.empty()) return {};
  PPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  ptrim(c);
  return c;
}

// a mod m (m monic-normalizable), in place semantics via copy
PPoly pmod(PPoly a, const PPoly& m, int p) {
  ptrim(a);
  int dm = (int)m.size() - 1;
  int lead_inv = (int)mod_pow(m[dm], p - 2, p);
  while ((int)a.size() - 1 >= dm) {
    int k = (int)a.size() - 1 - dm;
    int c = a.back() * lead_inv % p;
    for (int i = 0; i <= dm; ++i)
      a[k + i] = ((a[k + i] - c * m[i]) % p + p) % p;
    ptrim(a);
  }
  return a;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& m, int p) {
  return pmod(pmul(a, b, p), m, p);
}

PPoly ppowmod(PPoly base, long long e, const PPoly& m, int p) {
  PPoly r = {1};
  base = pmod(std::move(base), m, p);
  for (; e > 0; e >>= 1) {
    if (e & 1) r = pmulmod(r, base, m, p);
    base = pmulmod(base, base, m, p);
  }
  return r;
}

PPoly pgcd(PPoly a, PPoly b, int p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    PPoly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

PPoly psub(PPoly a, const PPoly& b, int p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
  ptrim(a);
  return a;
}

bool is_irreducible(const PPoly& f, int p) {
  int s = (int)f.size() - 1;
  if (s < 1) return false;
  if (s == 1) return true;
  PPoly x = {0, 1};
  // x^{p^s} == x mod f
  PPoly h = x;
  for (int i = 0; i < s; ++i) h = ppowmod(h, p, f, p);
  if (psub(h, x, p) != PPoly{}) return false;
  for (int r : prime_factors(s)) {
    PPoly g = x;
    for (int i = 0; i < s / r; ++i) g = ppowmod(g, p, f, p);
    PPoly d = pgcd(f, psub(g, x, p), p);
    if ((int)d.size() - 1 != 0) return false;
  }
  return true;
}

}  // namespace

FieldElement FieldCtx::from_index(std::uint32_t v) const {
  if (v >= (std::uint32_t)q_) fail("ParseError", "element index out of range");
  return {this, v};
}

FieldElement FieldCtx::from_prime(long long c) const {
  c %= p_;
  if (c < 0) c += p_;
  return {this, (std::uint32_t)c};
}

FieldElement FieldCtx::from_digits(const std::vector<int>& ds) const {
  if ((int)ds.size() > s_) fail("ParseError", "too many digits for field");
  std::uint32_t v = 0;
  for (int i = (int)ds.size() - 1; i >= 0; --i) {
    int d = ((ds[i] % p_) + p_) % p_;
    v = v * p_ + d;
  }
  return {this, v};
}

std::vector<int> FieldCtx::digits(FieldElement x) const {
  std::vector<int> ds(s_);
  std::uint32_t v = x.v;
  for (int i = 0; i < s_; ++i) {
    ds[i] = v % p_;
    v /= p_;
  }
  return ds;
}

FieldElement FieldCtx::alpha_pow(long long k) const {
  long long m = q_ - 1;
  k %= m;
  if (k < 0) k += m;
  return {this, exp_[k]};
}

int FieldCtx::dlog(FieldElement x) const {
  if (x.v == 0) fail("DivisionByZero", "discrete log of zero");
  return log_[x.v];
}

std::uint32_t FieldCtx::add_raw(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t r = 0;
  for (int i = 0; i < s_; ++i) {
    std::uint32_t d = (a % p_ + b % p_) % p_;
    r += d * pow_p_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

std::uint32_t FieldCtx::neg_raw(std::uint32_t a) const {
  std::uint32_t r = 0;
  for (int i = 0; i < s_; ++i) {
    std::uint32_t d = (p_ - a % p_) % p_;
    r += d * pow_p_[i];
    a /= p_;
  }
  return r;
}

std::uint32_t FieldCtx::mul_raw(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

FieldElement FieldCtx::add(FieldElement a, FieldElement b) const {
  return {this, add_raw(a.v, b.v)};
}
FieldElement FieldCtx::sub(FieldElement a, FieldElement b) const {
  return {this, add_raw(a.v, neg_raw(b.v))};
}
FieldElement FieldCtx::mul(FieldElement a, FieldElement b) const {
  return {this, mul_raw(a.v, b.v)};
}
FieldElement FieldCtx::neg(FieldElement a) const { return {this, neg_raw(a.v)}; }

FieldElement FieldCtx::inv(FieldElement a) const {
  if (a.v == 0) fail("DivisionByZero", "inverse of zero");
  return {this, exp_[(q_ - 1 - log_[a.v]) % (q_ - 1)]};
}

FieldElement FieldCtx::div(FieldElement a, FieldElement b) const {
  return mul(a, inv(b));
}

FieldElement FieldCtx::pow(FieldElement a, long long e) const {
  if (a.v == 0) {
    if (e > 0) return zero();
    if (e == 0) return one();
    fail("DivisionByZero", "zero to a negative power");
  }
  long long m = q_ - 1;
  long long k = ((long long)log_[a.v] % m) * (e % m) % m;
  if (k < 0) k += m;
  return {this, exp_[k]};
}

FieldElement FieldCtx::trace_to_prime(FieldElement x) const {
  FieldElement acc = x;
  FieldElement t = x;
  for (int i = 1; i < s_; ++i) {
    t = pow(t, p_);
    acc = add(acc, t);
  }
  return acc;
}

int FieldCtx::trace_int(FieldElement x) const {
  return (int)trace_to_prime(x).v;
}

FieldElement FieldCtx::frobenius(FieldElement x, int k) const {
  long long e = 1;
  for (int i = 0; i < k % s_; ++i) e *= p_;
  return pow(x, e);
}

int FieldCtx::multiplicative_order(FieldElement x) const {
  if (x.v == 0) fail("DivisionByZero", "order of zero");
  int g = std::gcd(q_ - 1, log_[x.v]);
  return (q_ - 1) / g;
}

bool FieldCtx::is_square(FieldElement x) const {
  if (x.v == 0) return true;
  if (q_ % 2 == 0) return true;
  return log_[x.v] % 2 == 0;
}

std::vector<CyclotomicClass> FieldCtx::cyclotomic_classes(int e) const {
  if (e <= 0 || (q_ - 1) % e != 0)
    fail("NotADivisor", "e must divide q-1");
  int size = (q_ - 1) / e;
  std::vector<CyclotomicClass> classes(e);
  for (int i = 0; i < e; ++i) {
    classes[i].e = e;
    classes[i].index = i;
    classes[i].members.reserve(size);
    for (int k = 0; k < size; ++k)
      classes[i].members.push_back({this, exp_[(std::size_t)(k * e + i) % (q_ - 1)]});
  }
  return classes;
}

std::vector<FieldElement> FieldCtx::elements() const {
  std::vector<FieldElement> es;
  es.reserve(q_);
  for (int v = 0; v < q_; ++v) es.push_back({this, (std::uint32_t)v});
  return es;
}

std::uint64_t FieldCtx::lex_key(std::uint32_t v) const {
  std::uint64_t key = 0;
  for (int i = 0; i < s_; ++i) {
    key = key * p_ + v % p_;
    v /= p_;
  }
  return key;
}

std::string FieldCtx::spec_string() const {
  std::ostringstream os;
  os << p_;
  if (s_ > 1) {
    os << "^" << s_ << ":";
    for (size_t i = 0; i < modulus_.size(); ++i) {
      if (i) os << ",";
      os << modulus_[i];
    }
  }
  return os.str();
}

bool FieldCtx::same_field(const FieldCtx& other) const {
  return p_ == other.p_ && s_ == other.s_ && modulus_ == other.modulus_ &&
         alpha_ == other.alpha_;
}

void FieldCtx::check_same(const FieldElement& x) const {
  if (x.ctx == this) return;
  if (x.ctx == nullptr || !same_field(*x.ctx))
    fail("MixedFields", "elements belong to different fields");
}

FieldCtxPtr FieldCtx::build(int p, int s, std::optional<std::vector<int>> modulus,
                            std::optional<std::vector<int>> primitive) {
  if (!is_prime(p)) fail("NonPrime", "p = " + std::to_string(p) + " is not prime");
  if (s < 1) fail("ParseError", "exponent must be positive");
  long long q = 1;
  for (int i = 0; i < s; ++i) {
    q *= p;
    if (q > kMaxQ) fail("FieldTooLarge", "q exceeds 2^16");
  }

  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  ctx->s_ = s;
  ctx->q_ = (int)q;
  ctx->pow_p_.resize(s + 1);
  ctx->pow_p_[0] = 1;
  for (int i = 1; i <= s; ++i) ctx->pow_p_[i] = ctx->pow_p_[i - 1] * p;

  // raw multiply in the polynomial basis; valid before the log tables exist
  auto raw_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (s == 1) return (std::uint32_t)((std::uint64_t)a * b % p);
    PPoly pa, pb;
    for (std::uint32_t t = a; t; t /= p) pa.push_back(t % p);
    for (std::uint32_t t = b; t; t /= p) pb.push_back(t % p);
    PPoly r = pmod(pmul(pa, pb, p), ctx->modulus_, p);
    std::uint32_t v = 0;
    for (int i = (int)r.size() - 1; i >= 0; --i) v = v * p + r[i];
    return v;
  };

  if (s == 1) {
    ctx->modulus_ = {0, 1};
  } else if (modulus) {
    PPoly m = *modulus;
    for (int& c : m) c = ((c % p) + p) % p;
    ptrim(m);
    if ((int)m.size() - 1 != s || m.back() != 1)
      fail("ReducibleModulus", "modulus must be monic of degree s");
    if (!is_irreducible(m, p))
      fail("ReducibleModulus", "modulus is reducible over GF(p)");
    ctx->modulus_ = m;
  } else {
    // lexicographically smallest (constant term first) monic primitive poly
    bool found = false;
    long long count = 1;
    for (int i = 0; i < s; ++i) count *= p;
    for (long long key = 0; key < count && !found; ++key) {
      // decode key so that c0 varies slowest: lex order low-to-high
      PPoly m(s + 1, 0);
      long long t = key;
      for (int i = s - 1; i >= 0; --i) {
        m[i] = t % p;
        t /= p;
      }
      m[s] = 1;
      if (!is_irreducible(m, p)) continue;
      ctx->modulus_ = m;
      // require x to be primitive so alpha is a root of the modulus
      std::uint32_t x = (std::uint32_t)p;  // the element "x"
      std::uint32_t acc = x;
      int ord = 1;
      while (acc != 1) {
        acc = raw_mul(acc, x);
        ++ord;
        if (ord > (int)q) break;
      }
      if (ord == (int)q - 1) found = true;
    }
    if (!found) fail("NotPrimitive", "no primitive default modulus found");
  }

  // order via raw multiplication (tables not built yet)
  auto raw_order = [&](std::uint32_t x) -> int {
    if (x == 0) return 0;
    std::uint32_t acc = x;
    int ord = 1;
    while (acc != 1) {
      acc = raw_mul(acc, x);
      ++ord;
      if (ord > (int)q) return -1;
    }
    return ord;
  };

  std::uint32_t a = 0;
  if (primitive) {
    a = ctx->from_digits(*primitive).v;
    if (raw_order(a) != (int)q - 1)
      fail("NotPrimitive", "designated primitive element has wrong order");
  } else if (s > 1 && raw_order((std::uint32_t)p) == (int)q - 1) {
    a = (std::uint32_t)p;  // root of the modulus
  } else {
    // smallest element (coefficients compared low-to-high) of order q-1
    std::vector<std::uint32_t> order_by_key((std::size_t)q);
    for (std::uint32_t v = 0; v < (std::uint32_t)q; ++v) order_by_key[v] = v;
    std::sort(order_by_key.begin(), order_by_key.end(),
              [&](std::uint32_t x, std::uint32_t y) {
                return ctx->lex_key(x) < ctx->lex_key(y);
              });
    for (std::uint32_t v : order_by_key) {
      if (v != 0 && raw_order(v) == (int)q - 1) {
        a = v;
        break;
      }
    }
    if (a == 0) fail("NotPrimitive", "no primitive element found");
  }
  ctx->alpha_ = a;

  ctx->exp_.resize(q - 1);
  ctx->log_.assign(q, -1);
  std::uint32_t acc = 1;
  for (int k = 0; k < (int)q - 1; ++k) {
    ctx->exp_[k] = acc;
    if (ctx->log_[acc] != -1) fail("NotPrimitive", "primitive element repeats early");
    ctx->log_[acc] = k;
    acc = raw_mul(acc, a);
  }
  if (acc != 1) fail("NotPrimitive", "primitive element order check failed");
  return ctx;
}

FieldCtxPtr build_field(int p, int s, std::optional<std::vector<int>> modulus,
                        std::optional<std::vector<int>> primitive) {
  return FieldCtx::build(p, s, std::move(modulus), std::move(primitive));
}

FieldCtxPtr parse_field_spec(const std::string& spec) {
  std::string base = spec, coeffs;
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    base = spec.substr(0, colon);
    coeffs = spec.substr(colon + 1);
  }
  int p = 0, s = 1;
  auto caret = base.find('^');
  try {
    if (caret != std::string::npos) {
      p = std::stoi(base.substr(0, caret));
      s = std::stoi(base.substr(caret + 1));
    } else {
      p = std::stoi(base);
    }
  } catch (const std::exception&) {
    fail("ParseError", "bad field spec '" + spec + "'");
  }
  std::optional<std::vector<int>> modulus;
  if (!coeffs.empty()) {
    std::vector<int> cs;
    std::istringstream is(coeffs);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        cs.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        fail("ParseError", "bad modulus coefficient '" + tok + "'");
      }
    }
    modulus = cs;
  }
  return build_field(p, s, modulus);
}

}  // namespace idist
