#include <algorithm>
#include <map>

#include "doctest.h"
#include "idist/constructions.hpp"

using namespace idist;

static FieldCtxPtr field_of(int q) {
  switch (q) {
    case 4: return build_field(2, 2);
    case 8: return build_field(2, 3);
    case 9: return build_field(3, 2);
    case 16: return build_field(2, 4);
    case 27: return build_field(3, 3);
    default: return build_field(q, 1);
  }
}

static const std::vector<int> kSmallQ{3, 4, 5, 7, 8, 9, 11, 13};

static std::map<int, long long> nonzero_counts(
    const IntersectionDistribution& d) {
  std::map<int, long long> out;
  for (size_t i = 0; i < d.counts.size(); ++i)
    if (d.counts[i] != 0) out[(int)i] = d.counts[i];
  return out;
}

TEST_CASE("predicted distributions: known rows") {
  ConstructionSpec excl{ConstructionFamily::TwoLinesExcl, 7, 0, 0, 0};
  CHECK(nonzero_counts(predicted_distribution(excl)) ==
        std::map<int, long long>{{4, 2}, {2, 16}, {1, 24}, {0, 15}});

  ConstructionSpec incl{ConstructionFamily::TwoLinesIncl, 8, 0, 0, 0};
  CHECK(nonzero_counts(predicted_distribution(incl)) ==
        std::map<int, long long>{{5, 2}, {2, 16}, {1, 39}, {0, 16}});

  ConstructionSpec nuc{ConstructionFamily::TwoLinesNucleus, 7, 0, 0, 0};
  CHECK(nonzero_counts(predicted_distribution(nuc)) ==
        std::map<int, long long>{{4, 2}, {2, 9}, {1, 23}, {0, 15}});

  // with three 3-secants at q=7 the carrier-line entries merge into v_3
  ConstructionSpec twp{ConstructionFamily::TwoLinesTwoPoints, 7, 0, 3, 0};
  CHECK(nonzero_counts(predicted_distribution(twp)) ==
        std::map<int, long long>{{3, 5}, {2, 6}, {1, 22}, {0, 16}});
}

TEST_CASE("predicted distributions: monomial matches") {
  for (int q : {5, 7, 9, 11, 13}) {
    auto F = field_of(q);
    ConstructionSpec nuc{ConstructionFamily::TwoLinesNucleus, q, 0, 0, 0};
    CHECK(predicted_distribution(nuc) ==
          poly_distribution(Polynomial::monomial(F, (q + 1) / 2)));
    // x^{(q-1)/2} realizes TwoLinesTwoPoints with c = 0 or (q-1)/2
    int c = q % 4 == 1 ? 0 : (q - 1) / 2;
    ConstructionSpec twp{ConstructionFamily::TwoLinesTwoPoints, q, 0, c, 0};
    CHECK(predicted_distribution(twp) ==
          poly_distribution(Polynomial::monomial(F, (q - 1) / 2)));
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_WITH_AS(
      predicted_distribution({ConstructionFamily::TwoLinesExcl, 7, 3, 0, 0}),
      doctest::Contains("ParameterOutOfRange"), Error);
  CHECK_THROWS_WITH_AS(
      predicted_distribution({ConstructionFamily::TwoLinesIncl, 7, -1, 0, 0}),
      doctest::Contains("ParameterOutOfRange"), Error);
  CHECK_THROWS_WITH_AS(
      predicted_distribution({ConstructionFamily::TwoLinesIncl, 7, 0, 1, 0}),
      doctest::Contains("ParameterOutOfRange"), Error);
  CHECK_THROWS_WITH_AS(
      predicted_distribution(
          {ConstructionFamily::TwoLinesTwoPoints, 8, 0, 0, 0}),
      doctest::Contains("ParameterOutOfRange"), Error);
  CHECK_THROWS_WITH_AS(
      predicted_distribution(
          {ConstructionFamily::TwoLinesTwoPoints, 7, 0, 4, 0}),
      doctest::Contains("ParameterOutOfRange"), Error);
  CHECK_THROWS_WITH_AS(
      predicted_distribution(
          {ConstructionFamily::TwoLinesTwoPoints, 7, 0, 2, 0}),
      doctest::Contains("InfeasibleParity"), Error);
  auto F = field_of(7);
  CHECK_THROWS_WITH_AS(
      build(F, {ConstructionFamily::TwoLinesExcl, 9, 0, 0, 0}),
      doctest::Contains("ParameterOutOfRange"), Error);
}

static std::vector<ConstructionSpec> valid_specs(int q, std::uint64_t seed) {
  std::vector<ConstructionSpec> out;
  auto fh = [](int n) { return n / 2; };
  auto ch = [](int n) { return n - n / 2; };
  for (int t = 0; t <= fh(q + 1) - 2; ++t)
    out.push_back({ConstructionFamily::TwoLinesExcl, q, t, 0, seed});
  for (int t = 0; t <= fh(q) - 1; ++t)
    out.push_back({ConstructionFamily::TwoLinesIncl, q, t, 0, seed});
  for (int t = 0; t <= fh(q - 1) - 1; ++t)
    out.push_back({ConstructionFamily::TwoLinesNucleus, q, t, 0, seed});
  for (int t = 0; t <= fh(q) - 2; ++t)
    out.push_back({ConstructionFamily::TwoLinesParallelNucleus, q, t, 0, seed});
  if (q % 2 == 1)
    for (int t = 0; t <= fh(q - 1) - 2; ++t)
      for (int c = 0; c <= fh(q - 1) - t; ++c)
        if ((ch(q - 1) + t - c) % 2 == 0)
          out.push_back({ConstructionFamily::TwoLinesTwoPoints, q, t, c, seed});
  return out;
}

TEST_CASE("built sets match the predicted distribution") {
  for (int q : kSmallQ) {
    auto F = field_of(q);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      for (const auto& spec : valid_specs(q, seed)) {
        CAPTURE(family_name(spec.family));
        CAPTURE(q);
        CAPTURE(spec.t);
        CAPTURE(spec.c);
        auto predicted = predicted_distribution(spec);
        auto r = build(F, spec);
        REQUIRE(r.points.size() == q + 1);
        if (predicted.kind == DistKind::Set) {
          CHECK(!r.poly.has_value());
          CHECK(set_distribution(r.points) == predicted);
        } else {
          REQUIRE(r.poly.has_value());
          CHECK(graph_set(*r.poly) == r.points);
          CHECK(poly_distribution(*r.poly) == predicted);
          CHECK(convert(set_distribution(r.points)) == predicted);
        }
      }
    }
  }
}

TEST_CASE("TwoLinesTwoPoints: exact 3-secant count off the carrier lines") {
  for (int q : {5, 7, 9, 11, 13}) {
    auto F = field_of(q);
    for (const auto& spec : valid_specs(q, 2)) {
      if (spec.family != ConstructionFamily::TwoLinesTwoPoints) continue;
      auto r = build(F, spec);
      auto one = F->one(), minus_one = F->from_prime(-1);
      const auto& pl = plane(F);
      int found = 0;
      for (size_t li = 0; li < pl.lines.size(); ++li) {
        const auto& l = pl.lines[li];
        // skip y=1 and y=-1 (lines y - b z = 0)
        if (l == proj_line(F->zero(), one, -one) ||
            l == proj_line(F->zero(), one, one))
          continue;
        int hits = 0;
        for (int pi : pl.points_on_line[li])
          if (r.points.contains(pl.points[(size_t)pi])) ++hits;
        if (hits == 3) ++found;
      }
      CAPTURE(q);
      CAPTURE(spec.t);
      CHECK(found == spec.c);
    }
  }
}

TEST_CASE("monomial structure reports") {
  auto s13 = monomial_structure(field_of(13), StructureMonomial::HalfPlusOne);
  CHECK(s13.on_line1 == 7);
  CHECK(s13.on_line2 == 7);
  CHECK(s13.f == Polynomial::monomial(field_of(13), 7));

  CHECK(monomial_structure(field_of(11), StructureMonomial::HalfMinusOne)
            .three_secants == 5);
  CHECK(monomial_structure(field_of(7), StructureMonomial::HalfMinusOne)
            .three_secants == 5);  // (q-1)/2 + 2 at q=7
  CHECK(monomial_structure(field_of(13), StructureMonomial::HalfMinusOne)
            .three_secants == 0);
  CHECK(monomial_structure(field_of(9), StructureMonomial::HalfMinusOne)
            .three_secants == 0);

  CHECK_THROWS_WITH_AS(
      monomial_structure(field_of(8), StructureMonomial::HalfPlusOne),
      doctest::Contains("EvenField"), Error);
}

TEST_CASE("degenerate families: closed forms and witnesses") {
  for (int q : kSmallQ) {
    if (q < 4) continue;
    auto F = field_of(q);
    long long Q = q;

    auto line = degenerate_distribution(q, DegenerateFamily::Line);
    CHECK(nonzero_counts(line) ==
          std::map<int, long long>{{q + 1, 1}, {1, Q * Q + Q}});

    auto lp = degenerate_distribution(q, DegenerateFamily::LinePlusPoint);
    CHECK(nonzero_counts(lp) ==
          std::map<int, long long>{
              {q, 1}, {2, Q}, {1, Q * Q - Q + 1}, {0, Q - 1}});

    auto incl =
        degenerate_distribution(q, DegenerateFamily::TwoLinesNearFullIncl);
    CHECK(incl.non_hitting_index() == 2 * Q - 4);
    auto excl =
        degenerate_distribution(q, DegenerateFamily::TwoLinesNearFullExcl);
    CHECK(nonzero_counts(excl) ==
          std::map<int, long long>{
              {q - 1, 1}, {2, 2 * Q - 1}, {1, Q * Q - 3 * Q + 4}, {0, 2 * Q - 3}});

    for (DegenerateFamily fam :
         {DegenerateFamily::Line, DegenerateFamily::LinePlusPoint,
          DegenerateFamily::TwoLinesNearFullIncl,
          DegenerateFamily::TwoLinesNearFullExcl})
      CHECK(set_distribution(degenerate_set(F, fam)) ==
            degenerate_distribution(q, fam));

    for (int k = 0; k <= std::min(3, q - 2); ++k) {
      auto tri =
          degenerate_distribution(q, DegenerateFamily::LinePlusTriangle, k);
      CHECK(tri.non_hitting_index() == 3 * Q - 6 - k);
      CHECK(set_distribution(
                degenerate_set(F, DegenerateFamily::LinePlusTriangle, k)) ==
            tri);
    }
  }

  // the two polynomial-representable families agree with brute force
  auto F7 = field_of(7);
  CHECK(convert(degenerate_distribution(7, DegenerateFamily::LinePlusPoint)) ==
        poly_distribution(Polynomial::monomial(F7, 1)));
  CHECK(convert(
            degenerate_distribution(7, DegenerateFamily::TwoLinesNearFullExcl)) ==
        poly_distribution(Polynomial::monomial(F7, 6)));

  CHECK_THROWS_WITH_AS(
      degenerate_distribution(7, DegenerateFamily::LinePlusTriangle, 4),
      doctest::Contains("ParameterOutOfRange"), Error);
  CHECK_THROWS_WITH_AS(degenerate_distribution(7, DegenerateFamily::Line, 1),
                       doctest::Contains("ParameterOutOfRange"), Error);
}

TEST_CASE("builds are reproducible and seed-sensitive") {
  auto F = field_of(9);
  ConstructionSpec spec{ConstructionFamily::TwoLinesExcl, 9, 1, 0, 3};
  CHECK(build(F, spec).points == build(F, spec).points);
  ConstructionSpec other = spec;
  other.seed = 4;
  CHECK(build(F, other).points.size() == 10);
  CHECK(set_distribution(build(F, other).points) ==
        set_distribution(build(F, spec).points));
}
