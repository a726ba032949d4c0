#include <random>
#include <set>

#include "doctest.h"
#include "idist/poly.hpp"

using namespace idist;

static FieldCtxPtr gf25() { return build_field(5, 2, {{2, 4, 1}}); }

static Polynomial random_poly(const FieldCtxPtr& F, int max_deg,
                              std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<std::uint32_t> val(0, (std::uint32_t)F->q() - 1);
  std::vector<FieldElement> cs;
  int d = deg(rng);
  for (int i = 0; i <= d; ++i) cs.push_back(F->from_index(val(rng)));
  return Polynomial(F, std::move(cs));
}

TEST_CASE("evaluation and arithmetic basics") {
  auto F = build_field(7, 1);
  auto f = Polynomial::from_ints(F, {1, 0, 1});  // x^2 + 1
  CHECK(f.degree() == 2);
  CHECK(f.evaluate(F->from_prime(3)) == F->from_prime(3));  // 9+1 = 10 = 3
  CHECK(f.evaluate(F->zero()) == F->one());

  auto g = Polynomial::from_ints(F, {6, 1});  // x + 6 = x - 1
  auto prod = f * g;                          // (x^2+1)(x-1) = x^3 - x^2 + x - 1
  CHECK(prod == Polynomial::from_ints(F, {6, 1, 6, 1}));
  CHECK((f + g) - g == f);
  CHECK((f - f).is_zero());
  CHECK(Polynomial::from_ints(F, {0, 0, 0}).degree() == -1);
}

TEST_CASE("divmod invariant on random polynomials") {
  std::mt19937 rng(12345);
  for (int q_case = 0; q_case < 3; ++q_case) {
    auto F = q_case == 0   ? build_field(2, 3)
             : q_case == 1 ? build_field(13, 1)
                           : gf25();
    for (int trial = 0; trial < 200; ++trial) {
      auto a = random_poly(F, 8, rng);
      auto b = random_poly(F, 5, rng);
      if (b.is_zero()) {
        CHECK_THROWS_WITH_AS(a.divmod(b), doctest::Contains("DivisionByZero"),
                             Error);
        continue;
      }
      auto [quot, rem] = a.divmod(b);
      CHECK(quot * b + rem == a);
      CHECK(rem.degree() < b.degree());
    }
  }
}

TEST_CASE("gcd") {
  auto F = build_field(7, 1);
  // (x-1)(x+1) and (x-1)^2 share x-1
  auto f = Polynomial::from_ints(F, {6, 0, 1});
  auto g = Polynomial::from_ints(F, {1, 5, 1});  // (x-1)^2 = x^2 - 2x + 1
  CHECK(poly_gcd(f, g) == Polynomial::from_ints(F, {6, 1}));
  CHECK(poly_gcd(f, Polynomial::zero(F)) == f.monic());
  // coprime pair
  CHECK(poly_gcd(Polynomial::from_ints(F, {1, 1}),
                 Polynomial::from_ints(F, {2, 1}))
            .degree() == 0);
}

TEST_CASE("distinct roots of x^20 + x + 1 over GF(25)") {
  auto F = gf25();
  auto f = Polynomial::monomial(F, 20) + Polynomial::from_ints(F, {1, 1});
  auto rep = distinct_roots(f);
  std::set<int> logs;
  for (auto r : rep.roots) logs.insert(F->dlog(r));
  CHECK(rep.count == 5);
  CHECK(logs == std::set<int>{7, 8, 11, 16, 18});

  CHECK_THROWS_WITH_AS(distinct_roots(Polynomial::zero(F)),
                       doctest::Contains("ZeroPolynomial"), Error);
  // squarefull input still reports distinct roots once
  auto g = Polynomial::from_ints(F, {1, 3, 3, 1});  // (x+1)^3
  auto grep = distinct_roots(g);
  CHECK(grep.count == 1);
  CHECK(grep.roots[0] == F->from_prime(-1));
}

TEST_CASE("interpolation") {
  auto F = build_field(7, 1);
  std::vector<std::pair<FieldElement, FieldElement>> pts;
  for (auto x : F->elements()) pts.emplace_back(x, F->mul(x, x));
  CHECK(interpolate(F, pts) == Polynomial::from_ints(F, {0, 0, 1}));

  // three points determine a quadratic
  auto f = Polynomial::from_ints(F, {3, 1, 2});
  std::vector<std::pair<FieldElement, FieldElement>> three;
  for (int x : {0, 2, 5})
    three.emplace_back(F->from_prime(x), f.evaluate(F->from_prime(x)));
  CHECK(interpolate(F, three) == f);

  three.emplace_back(F->from_prime(2), F->zero());
  CHECK_THROWS_WITH_AS(interpolate(F, three),
                       doctest::Contains("DuplicateAbscissa"), Error);
}

TEST_CASE("permutation polynomials and inverses") {
  auto F11 = build_field(11, 1);
  auto cube = Polynomial::monomial(F11, 3);
  CHECK(is_permutation(cube));
  CHECK(!is_permutation(Polynomial::monomial(F11, 2)));
  CHECK(perm_inverse(cube).same_function(Polynomial::monomial(F11, 7)));

  auto F13 = build_field(13, 1);
  auto f5 = Polynomial::monomial(F13, 5);
  CHECK(perm_inverse(f5).same_function(f5));  // 5*5 = 25 = 1 mod 12

  CHECK_THROWS_WITH_AS(perm_inverse(Polynomial::monomial(F13, 2)),
                       doctest::Contains("NotAPermutation"), Error);

  SUBCASE("inverse composes to identity on every element") {
    std::mt19937 rng(7);
    auto F = build_field(3, 2);
    int found = 0;
    while (found < 5) {
      auto f = random_poly(F, 6, rng);
      if (f.is_zero() || !is_permutation(f)) continue;
      ++found;
      auto g = perm_inverse(f);
      for (auto x : F->elements()) CHECK(g.evaluate(f.evaluate(x)) == x);
    }
  }
}

TEST_CASE("indicator polynomials") {
  auto F = build_field(3, 2);  // GF(9)
  std::vector<FieldElement> T = {F->zero(), F->alpha(), F->from_prime(2)};
  auto ind = indicator_polynomial(F, T);
  for (auto x : F->elements()) {
    bool in = std::find(T.begin(), T.end(), x) != T.end();
    CHECK(ind.evaluate(x) == (in ? F->one() : F->zero()));
  }
  CHECK(indicator_polynomial(F, {}).is_zero());
}

TEST_CASE("reduction mod the field equation") {
  auto F = build_field(5, 1);
  auto f = Polynomial::monomial(F, 9);  // x^9 acts as x on GF(5)
  auto r = f.reduced_mod_field();
  CHECK(r.degree() < 5);
  for (auto x : F->elements()) CHECK(r.evaluate(x) == f.evaluate(x));
  CHECK(f.same_function(r));
  CHECK(!f.same_function(Polynomial::monomial(F, 2)));
}

TEST_CASE("irreducible cubic counts match brute force") {
  for (auto [p, s] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {3, 2},
                      {11, 1}, {13, 1}}) {
    auto F = build_field(p, s);
    int q = F->q();
    for (auto gamma : F->elements()) {
      long long brute = 0;
      // monic cubic is irreducible iff it has no root
      for (auto b : F->elements())
        for (auto c : F->elements()) {
          auto f = Polynomial(
              F, {c, b, F->neg(gamma), F->one()});  // x^3 - g*x^2 + b*x + c
          if (distinct_roots(f).count == 0) ++brute;
        }
      CAPTURE(q);
      CHECK(brute == count_irreducible_cubics_fixed_trace(F, gamma));
    }
  }
}
