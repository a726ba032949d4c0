#ifndef IDIST_EQUIVALENCE_HPP
#define IDIST_EQUIVALENCE_HPP

#include "idist/distribution.hpp"

namespace idist {

/// Parameters of the distribution-preserving family
/// g = e * f^sigma(a*x + b) + c*x + d, with a, e nonzero and
/// f^sigma applying the Frobenius power p^sigma to the coefficients of f.
struct EquivTransform {
  FieldElement a, b, c, d, e;
  int sigma = 0;

  static EquivTransform identity(const FieldCtxPtr& ctx);
};

/// Error InvalidTransform if a or e is zero or sigma is out of 0..s-1.
Polynomial transform(const Polynomial& f, const EquivTransform& t);

/// Given an affine internal nucleus N of S_f, shift the nucleus to the
/// origin: returns g with g(0) = 0, (0,0,1) an internal nucleus of S_g and
/// y=0 a unisecant of S_g. Errors NotAnInternalNucleus, PointAtInfinity.
Polynomial normalize_nucleus(const Polynomial& f, const ProjPoint& N);

/// The permutation part g of f = x*g, valid when (0,0,1) is an internal
/// nucleus of S_f (error NucleusMissing). g is a permutation with g(0) = 0;
/// when the unisecant through the origin is y = cx rather than y = 0, the
/// linear term cx is absorbed first, so f - cx = x*g exactly.
/// NotDecomposable signals an internal inconsistency.
Polynomial xg_decompose(const Polynomial& f);

/// With f = x*g as above, returns x*h where h(0) = 0 and
/// h(x) = g^{-1}(x^{-1})^{-1} for x != 0; the output has the same
/// intersection distribution as f. Error NucleusMissing.
Polynomial nucleus_swap(const Polynomial& f);

struct InverseComparison {
  IntersectionDistribution dist_f;
  IntersectionDistribution dist_inverse;
  bool equal = false;
};

/// Distributions of a permutation polynomial and of its compositional
/// inverse; they always agree. Error NotAPermutation.
InverseComparison inverse_comparison(const Polynomial& f);

}  // namespace idist

#endif
