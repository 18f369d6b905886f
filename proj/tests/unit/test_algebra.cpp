#include <doctest.h>

#include <random>

#include "obb/algebra.hpp"
#include "obb/error.hpp"

using namespace obb;

TEST_CASE("deg_w adds the grading image and the shift") {
  const DegreeMatrix std3 = DegreeMatrix::standard(3);
  const ShiftVector zero{MultiDegree{0}};
  CHECK(deg_w({Term{3, 0, 2}, 0}, std3, zero) == MultiDegree{5});
  CHECK(deg_w({Term{0, 0, 0}, 0}, std3, zero) == MultiDegree{0});

  const DegreeMatrix w({{1, 1}, {0, 1}});
  CHECK(deg_w({Term{1, 2}, 0}, w, {MultiDegree{0, 0}}) == MultiDegree{3, 2});
  CHECK(deg_w({Term{1, 2}, 1}, w, {MultiDegree{0, 0}, MultiDegree{4, -1}}) ==
        MultiDegree{7, 1});
  CHECK_THROWS_AS(deg_w({Term{1, 2, 3}, 0}, w, {MultiDegree{0, 0}}), DimensionError);
}

TEST_CASE("positive gradings") {
  CHECK(is_positive_grading(DegreeMatrix::standard(3)));
  CHECK(is_positive_grading(DegreeMatrix({{0, 1}, {1, 0}})));
  CHECK_FALSE(is_positive_grading(DegreeMatrix({{1, -1}})));
  CHECK_FALSE(is_positive_grading(DegreeMatrix({{1, 0}})));          // zero column
  CHECK_FALSE(is_positive_grading(DegreeMatrix({{1, 1}, {2, 2}})));  // rank 1
}

TEST_CASE("homogeneity") {
  const auto ctx = ModuleContext::standard(3);
  const ModuleVector v(ctx, {{{Term{3, 0, 2}, 0}, 1}, {{Term{2, 2, 1}, 0}, 1}});
  const auto d = is_homogeneous(v);
  REQUIRE(d);
  CHECK_FALSE(d->any_degree);
  CHECK(d->value == MultiDegree{5});

  const ModuleVector w(ctx, {{{Term{1, 0, 0}, 0}, 1}, {{Term{0, 2, 0}, 0}, 1}});
  CHECK_FALSE(is_homogeneous(w));

  const auto z = is_homogeneous(ModuleVector(ctx));
  REQUIRE(z);
  CHECK(z->any_degree);
}

TEST_CASE("term arithmetic") {
  const Term a{3, 0, 2};
  const Term b{3, 4, 0};
  CHECK(lcm(a, b) == Term{3, 4, 2});
  CHECK(gcd(a, b) == Term{3, 0, 0});
  CHECK(divides(a, a));
  CHECK_FALSE(properly_divides(a, a));
  CHECK(quotient(a, a).is_one());
  CHECK(coprime(Term{3, 0, 0}, Term{0, 1, 1}));
  CHECK_FALSE(coprime(a, b));
  CHECK_THROWS_AS(quotient(a, b), InvalidArgument);
}

TEST_CASE("lex comparison of multidegrees") {
  CHECK(lex_compare(MultiDegree{1, 5}, MultiDegree{2, 0}) < 0);
  CHECK(lex_compare(MultiDegree{3}, MultiDegree{3}) == 0);
  CHECK(lex_compare(MultiDegree{2, 1}, MultiDegree{2, 0}) > 0);
  CHECK_THROWS_AS(lex_compare(MultiDegree{1}, MultiDegree{1, 0}), DimensionError);
}

TEST_CASE("module vectors combine terms and drop zeros") {
  const auto ctx = ModuleContext::standard(2);
  const ModuleVector v(ctx, {{{Term{1, 0}, 0}, Coefficient(1, 2)},
                             {{Term{1, 0}, 0}, Coefficient(-1, 2)},
                             {{Term{0, 1}, 0}, Coefficient(2, 4)}});
  REQUIRE(v.size() == 1);
  CHECK(v.terms()[0].coeff == Coefficient(1, 2));
  CHECK((v - v).is_zero());
  CHECK_THROWS_AS(ModuleVector(ctx, {{{Term{1, 0, 0}, 0}, 1}}), DimensionError);
}

TEST_CASE("lcm and degree properties on random terms") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<Exponent> e(0, 6);
  std::uniform_int_distribution<std::int64_t> entry(-3, 3);
  auto random_term = [&](std::size_t n) {
    Term t(n);
    for (std::size_t k = 0; k < n; ++k) t.set(k, e(rng));
    return t;
  };
  for (int trial = 0; trial < 500; ++trial) {
    const Term t = random_term(4);
    const Term u = random_term(4);
    const Term l = lcm(t, u);
    CHECK(divides(t, l));
    CHECK(divides(u, l));
    CHECK(lcm(u, t) == l);
    CHECK(lcm(t, t) == t);
    CHECK(quotient(l, t) * t == l);
    CHECK(quotient(l, u) * u == l);
    CHECK(coprime(t, u) == gcd(t, u).is_one());
  }
  int positive_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::vector<std::int64_t>> rows(2, std::vector<std::int64_t>(3));
    for (auto& row : rows) {
      for (auto& x : row) x = entry(rng);
    }
    const DegreeMatrix w(rows);
    const ShiftVector shifts{MultiDegree{1, -2}};
    const Term t = random_term(3);
    const Term u = random_term(3);
    const MultiDegree du = w.degree(u);
    CHECK(deg_w({t * u, 0}, w, shifts) == deg_w({t, 0}, w, shifts) + du);
    if (!is_positive_grading(w)) continue;
    ++positive_seen;
    if (!t.is_one()) CHECK(lex_compare(w.degree(t), MultiDegree(2)) > 0);
  }
  CHECK(positive_seen > 0);
}
