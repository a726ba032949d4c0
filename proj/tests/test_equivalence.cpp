#include <numeric>
#include <random>

#include "doctest.h"
#include "idist/equivalence.hpp"

using namespace idist;

static FieldCtxPtr field_of(int q) {
  switch (q) {
    case 4: return build_field(2, 2);
    case 8: return build_field(2, 3);
    case 9: return build_field(3, 2);
    case 16: return build_field(2, 4);
    case 25: return build_field(5, 2, {{2, 4, 1}});
    case 27: return build_field(3, 3);
    default: return build_field(q, 1);
  }
}

static Polynomial random_poly(const FieldCtxPtr& F, int max_deg,
                              std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> val(0, (std::uint32_t)F->q() - 1);
  std::vector<FieldElement> cs;
  for (int i = 0; i <= max_deg; ++i) cs.push_back(F->from_index(val(rng)));
  return Polynomial(F, cs);
}

static EquivTransform random_transform(const FieldCtxPtr& F,
                                       std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> val(0, (std::uint32_t)F->q() - 1);
  std::uniform_int_distribution<std::uint32_t> nz(1, (std::uint32_t)F->q() - 1);
  std::uniform_int_distribution<int> sig(0, F->s() - 1);
  return {F->from_index(nz(rng)), F->from_index(val(rng)),
          F->from_index(val(rng)), F->from_index(val(rng)),
          F->from_index(nz(rng)), sig(rng)};
}

// x * (a random permutation g with g(0)=0), as a polynomial
static Polynomial random_xg(const FieldCtxPtr& F, std::mt19937& rng) {
  auto elems = F->elements();
  std::shuffle(elems.begin() + 1, elems.end(), rng);
  std::vector<std::pair<FieldElement, FieldElement>> pairs;
  pairs.emplace_back(F->zero(), F->zero());
  for (int i = 1; i < F->q(); ++i)
    pairs.emplace_back(F->from_index((std::uint32_t)i), elems[(size_t)i]);
  auto g = interpolate(F, pairs);
  return (Polynomial::monomial(F, 1) * g).reduced_mod_field();
}

TEST_CASE("transform basics") {
  auto F = build_field(7, 1);
  auto f = Polynomial::from_ints(F, {3, 0, 1, 5});
  CHECK(transform(f, EquivTransform::identity(F)) == f);

  auto F9 = build_field(3, 2);
  auto sq = Polynomial::monomial(F9, 2);
  EquivTransform frob = EquivTransform::identity(F9);
  frob.sigma = 1;
  CHECK(transform(sq, frob) == sq);  // coefficients lie in GF(3)

  EquivTransform bad = EquivTransform::identity(F);
  bad.a = F->zero();
  CHECK_THROWS_WITH_AS(transform(f, bad), doctest::Contains("InvalidTransform"),
                       Error);
  bad = EquivTransform::identity(F);
  bad.e = F->zero();
  CHECK_THROWS_WITH_AS(transform(f, bad), doctest::Contains("InvalidTransform"),
                       Error);
  bad = EquivTransform::identity(F);
  bad.sigma = 1;
  CHECK_THROWS_WITH_AS(transform(f, bad), doctest::Contains("InvalidTransform"),
                       Error);
}

TEST_CASE("transform preserves the distribution") {
  std::mt19937 rng(41);
  for (int q : {4, 5, 7, 8, 9}) {
    auto F = field_of(q);
    for (int t = 0; t < 25; ++t) {
      auto f = random_poly(F, q - 1, rng);
      auto tr = random_transform(F, rng);
      CHECK(poly_distribution(transform(f, tr)) == poly_distribution(f));
    }
  }
}

TEST_CASE("sigma-free transforms compose into one transform") {
  std::mt19937 rng(43);
  for (int q : {5, 7, 9}) {
    auto F = field_of(q);
    for (int t = 0; t < 20; ++t) {
      auto f = random_poly(F, q - 2, rng);
      auto t1 = random_transform(F, rng), t2 = random_transform(F, rng);
      t1.sigma = t2.sigma = 0;
      EquivTransform comp{
          t1.a * t2.a,
          t2.b * t1.a + t1.b,
          t2.e * t1.c * t2.a + t2.c,
          t2.e * (t1.c * t2.b + t1.d) + t2.d,
          t1.e * t2.e,
          0};
      CHECK(transform(transform(f, t1), t2).same_function(transform(f, comp)));
    }
  }
}

TEST_CASE("transform preserves the internal-nucleus count") {
  std::mt19937 rng(47);
  for (int q : {5, 7, 8, 9}) {
    auto F = field_of(q);
    for (int t = 0; t < 10; ++t) {
      auto f = random_poly(F, q - 1, rng);
      if (f.degree() <= 1) continue;
      auto tr = random_transform(F, rng);
      auto g = transform(f, tr);
      if (g.degree() <= 1) continue;
      CHECK(internal_nuclei(graph_set(g)).size() ==
            internal_nuclei(graph_set(f)).size());
    }
  }
}

TEST_CASE("nucleus normalization") {
  auto F = build_field(11, 1);
  auto f4 = Polynomial::monomial(F, 4);
  auto origin = proj_point_ints(F, 0, 0, 1);
  CHECK(normalize_nucleus(f4, origin) == f4);  // already in normal form

  CHECK_THROWS_WITH_AS(normalize_nucleus(f4, proj_point_ints(F, 0, 1, 0)),
                       doctest::Contains("PointAtInfinity"), Error);
  CHECK_THROWS_WITH_AS(normalize_nucleus(f4, proj_point_ints(F, 1, 2, 1)),
                       doctest::Contains("NotAnInternalNucleus"), Error);

  SUBCASE("random transported nuclei land back at the origin") {
    std::mt19937 rng(53);
    for (int q : {5, 7, 9, 11}) {
      auto Fq = field_of(q);
      for (int t = 0; t < 10; ++t) {
        // start from f with an origin nucleus, translate it away
        auto f0 = random_xg(Fq, rng);
        EquivTransform tr = random_transform(Fq, rng);
        tr.sigma = 0;
        auto f = transform(f0, tr);
        // pick an affine internal nucleus of S_f
        ProjPoint N{};
        bool have = false;
        for (auto& cand : internal_nuclei(graph_set(f)))
          if (!cand.z.is_zero()) {
            N = cand;
            have = true;
            break;
          }
        if (!have) continue;
        auto g = normalize_nucleus(f, N);
        CHECK(g.evaluate(Fq->zero()).is_zero());
        auto nuc = internal_nuclei(graph_set(g));
        CHECK(std::find(nuc.begin(), nuc.end(),
                        proj_point_ints(Fq, 0, 0, 1)) != nuc.end());
        // y=0 is a unisecant: g vanishes only at 0
        int zeros = 0;
        for (auto x : Fq->elements())
          if (g.evaluate(x).is_zero()) ++zeros;
        CHECK(zeros == 1);
        CHECK(poly_distribution(g) == poly_distribution(f));
      }
    }
  }
}

TEST_CASE("x*g decomposition") {
  auto F = build_field(11, 1);
  CHECK(xg_decompose(Polynomial::monomial(F, 4))
            .same_function(Polynomial::monomial(F, 3)));
  // x^3/x = x^2 is not a permutation, so the origin is not a nucleus
  CHECK_THROWS_WITH_AS(xg_decompose(Polynomial::monomial(F, 3)),
                       doctest::Contains("NucleusMissing"), Error);

  auto F8 = build_field(2, 3);
  CHECK(xg_decompose(Polynomial::monomial(F8, 2))
            .same_function(Polynomial::monomial(F8, 1)));

  SUBCASE("random f = x*g round-trips") {
    std::mt19937 rng(59);
    for (int q : {5, 7, 8, 9}) {
      auto Fq = field_of(q);
      for (int t = 0; t < 10; ++t) {
        auto f = random_xg(Fq, rng);
        auto g = xg_decompose(f);
        CHECK(is_permutation(g));
        CHECK(g.evaluate(Fq->zero()).is_zero());
        CHECK((Polynomial::monomial(Fq, 1) * g).same_function(f));
      }
    }
  }
}

TEST_CASE("nucleus swap") {
  auto F = build_field(11, 1);
  CHECK(nucleus_swap(Polynomial::monomial(F, 4))
            .same_function(Polynomial::monomial(F, 8)));

  auto F8 = build_field(2, 3);
  CHECK(nucleus_swap(Polynomial::monomial(F8, 3))
            .same_function(Polynomial::monomial(F8, 5)));
  auto F16 = build_field(2, 4);
  CHECK(nucleus_swap(Polynomial::monomial(F16, 3))
            .same_function(Polynomial::monomial(F16, 9)));

  CHECK_THROWS_WITH_AS(nucleus_swap(Polynomial::monomial(F, 3)),
                       doctest::Contains("NucleusMissing"), Error);

  SUBCASE("involution and distribution preservation") {
    std::mt19937 rng(61);
    for (int q : {5, 7, 8, 9, 11, 13}) {
      auto Fq = field_of(q);
      for (int t = 0; t < 8; ++t) {
        auto f = random_xg(Fq, rng);
        auto s = nucleus_swap(f);
        CHECK(poly_distribution(s) == poly_distribution(f));
        CHECK(nucleus_swap(s).same_function(f));
      }
    }
  }

  SUBCASE("monomials x^d with gcd(d-1, q-1) = 1, all q <= 13") {
    for (int q : {4, 5, 7, 8, 9, 11, 13}) {
      auto Fq = field_of(q);
      for (int d = 2; d <= q - 1; ++d) {
        if (std::gcd(d - 1, q - 1) != 1) continue;
        auto f = Polynomial::monomial(Fq, d);
        CHECK(poly_distribution(nucleus_swap(f)) == poly_distribution(f));
      }
    }
  }
}

TEST_CASE("inverse comparison") {
  auto F = build_field(11, 1);
  auto rep = inverse_comparison(Polynomial::monomial(F, 3));
  CHECK(rep.equal);
  CHECK(rep.dist_f == rep.dist_inverse);

  auto F7 = build_field(7, 1);
  CHECK(inverse_comparison(Polynomial::monomial(F7, 1)).equal);
  auto F13 = build_field(13, 1);
  CHECK(inverse_comparison(Polynomial::monomial(F13, 5)).equal);

  CHECK_THROWS_WITH_AS(inverse_comparison(Polynomial::monomial(F7, 2)),
                       doctest::Contains("NotAPermutation"), Error);

  SUBCASE("all permutation monomials, q <= 13") {
    for (int q : {4, 5, 7, 8, 9, 11, 13}) {
      auto Fq = field_of(q);
      for (int d = 1; d <= q - 1; ++d) {
        if (std::gcd(d, q - 1) != 1) continue;
        CHECK(inverse_comparison(Polynomial::monomial(Fq, d)).equal);
      }
    }
  }
}
