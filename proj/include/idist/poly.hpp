#ifndef IDIST_POLY_HPP
#define IDIST_POLY_HPP

#include <utility>
#include <vector>

#include "idist/ff.hpp"

namespace idist {

/// Dense univariate polynomial over a FieldCtx, constant term first.
/// The zero polynomial has an empty coefficient vector and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(FieldCtxPtr ctx, std::vector<FieldElement> coeffs);

  static Polynomial zero(FieldCtxPtr ctx) { return Polynomial(std::move(ctx), {}); }
  static Polynomial constant(FieldCtxPtr ctx, FieldElement c);
  static Polynomial monomial(FieldCtxPtr ctx, int d);
  static Polynomial monomial(FieldCtxPtr ctx, int d, FieldElement coeff);
  /// Coefficients given as integers mod p (prime-subfield values).
  static Polynomial from_ints(FieldCtxPtr ctx, const std::vector<long long>& cs);

  const FieldCtxPtr& ctx() const { return ctx_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  int degree() const { return (int)coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  FieldElement coeff(int i) const;

  FieldElement evaluate(FieldElement x) const;
  /// Values at all q elements, indexed by element index.
  std::vector<FieldElement> value_table() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(FieldElement c) const;
  Polynomial monic() const;
  /// Quotient and remainder; error DivisionByZero if divisor is zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  /// The unique polynomial of degree < q inducing the same function
  /// (exponent folding via x^q = x).
  Polynomial reduced_mod_field() const;
  bool same_function(const Polynomial& o) const;

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

 private:
  void check_ctx(const Polynomial& o) const;
  FieldCtxPtr ctx_;
  std::vector<FieldElement> coeffs_;
};

struct RootReport {
  std::vector<FieldElement> roots;  // distinct roots, sorted by index
  int count = 0;
};

/// Monic gcd via Euclid; gcd(f, 0) = monic(f).
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

/// Distinct roots in F_q, listed by exhaustive evaluation and cross-checked
/// against deg gcd(f, x^q - x). Error ZeroPolynomial on zero input.
RootReport distinct_roots(const Polynomial& f);

/// Lagrange interpolation through pairs with distinct x-values.
Polynomial interpolate(const FieldCtxPtr& ctx,
                       const std::vector<std::pair<FieldElement, FieldElement>>& pairs);

bool is_permutation(const Polynomial& f);

/// Compositional inverse of a permutation polynomial (degree < q).
Polynomial perm_inverse(const Polynomial& f);

/// f_T with f_T = 1 on T and 0 elsewhere.
Polynomial indicator_polynomial(const FieldCtxPtr& ctx,
                                const std::vector<FieldElement>& T);

/// Number of monic irreducible cubics over F_q whose roots sum to gamma
/// (equivalently, with x^2-coefficient -gamma). Closed form; distinguishes
/// gamma = 0 only in characteristic 3.
long long count_irreducible_cubics_fixed_trace(const FieldCtxPtr& ctx,
                                               FieldElement gamma);

}  // namespace idist

#endif
