#include <random>

#include "doctest.h"
#include "dwbc/exact/residue.hpp"

using namespace dwbc;

namespace {

Rational R(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

ExactPoly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return ExactPoly(v);
}

}  // namespace

TEST_CASE("rational string round trip") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    long p = static_cast<long>(rng() % 2001) - 1000;
    long q = static_cast<long>(rng() % 999) + 1;
    Rational r = R(p, q);
    CHECK(parse_rational(to_string(r)) == r);
  }
  CHECK(to_string(R(6, 3)) == "2");
  CHECK(to_string(R(-2, 4)) == "-1/2");
  CHECK(parse_rational("0.25") == R(1, 4));
  CHECK(parse_rational("-3/6") == R(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("series_expand basics") {
  auto g = series_expand({P({1}), P({1, -1})}, 0, 0, 3);
  CHECK(g.coeffs() == std::vector<Rational>{1, 1, 1, 1});
  CHECK(coefficient_of(g, 2) == 1);
  CHECK_THROWS_AS(coefficient_of(g, 5), Error);

  auto z = series_expand({P({1}), P({0, 1})}, 0, -1, 0);
  CHECK(z.coeffs() == std::vector<Rational>{1, 0});

  // (t^2 z - 2 Delta t + 1)/(t^2 (z - 1)) at Delta = 0, t = 1 around z = 1
  auto u = series_expand({P({1, 1}), P({-1, 1})}, 1, -1, 2);
  CHECK(coefficient_of(u, -1) == 2);
  CHECK(coefficient_of(u, 0) == 1);
  CHECK(coefficient_of(u, 1) == 0);

  auto sq = series_expand({P({0, 0, 1}), P({1})}, 0, 0, 3);
  CHECK(coefficient_of(sq, 1) == 0);

  CHECK_THROWS_AS(series_expand({P({1}), P({0, 0, 1})}, 0, -1, 2), Error);
  CHECK_THROWS_AS(series_expand({P({1}), ExactPoly()}, 0, 0, 2), Error);
}

TEST_CASE("series_expand is multiplicative") {
  std::mt19937_64 rng(11);
  auto rp = [&](int d) {
    std::vector<Rational> c;
    for (int i = 0; i <= d; ++i) c.emplace_back(static_cast<long>(rng() % 9) - 4);
    c[0] = static_cast<long>(rng() % 5) + 1;
    return ExactPoly(c);
  };
  for (int trial = 0; trial < 20; ++trial) {
    RationalFunction f{rp(2), rp(2)}, g{rp(3), rp(1)};
    RationalFunction fg{f.num * g.num, f.den * g.den};
    auto a = series_expand(f, 0, 0, 6), b = series_expand(g, 0, 0, 6), c = series_expand(fg, 0, 0, 6);
    for (int k = 0; k <= 6; ++k) {
      Rational s = 0;
      for (int i = 0; i <= k; ++i) s += coefficient_of(a, i) * coefficient_of(b, k - i);
      CHECK(s == coefficient_of(c, k));
    }
  }
}

TEST_CASE("joint residues") {
  ExactExpr z1 = ExactExpr::var(0), z2 = ExactExpr::var(1);
  CHECK(joint_residue<Rational>(ExactExpr(1) / (z1 * z2), {0, 0}, {1, 1}) == 1);
  CHECK(joint_residue<Rational>(z1 / pow(z1 - ExactExpr(1), 2), {1}, {2}) == 1);
  CHECK_THROWS_AS(joint_residue<Rational>(ExactExpr(1) / pow(z1, 3), {0}, {2}), Error);

  // 1/((z1 - z2 - 2) z1^2 z2) : coefficient of z1 z2^0 in 1/(z1 - z2 - 2)
  ExactExpr F = ExactExpr(1) / ((z1 - z2 - ExactExpr(2)) * pow(z1, 2) * z2);
  CHECK(joint_residue<Rational>(F, {0, 0}, {2, 1}) == R(-1, 4));

  // symmetric integrand is invariant under relabelling of variables
  ExactExpr G = (z1 + ExactExpr(3) * z2) * (z2 + ExactExpr(3) * z1) /
                (pow(z1, 2) * pow(z2, 2) * (ExactExpr(1) - z1 * z2 - z1 - z2));
  ExactExpr Gs = (z2 + ExactExpr(3) * z1) * (z1 + ExactExpr(3) * z2) /
                 (pow(z2, 2) * pow(z1, 2) * (ExactExpr(1) - z2 * z1 - z2 - z1));
  CHECK(joint_residue<Rational>(G, {0, 0}, {2, 2}) == joint_residue<Rational>(Gs, {0, 0}, {2, 2}));
}

TEST_CASE("separable multivariate polynomial evaluation matches the generic path") {
  ExactMultiPoly p(2);
  p.add_term({0, 0}, 2);
  p.add_term({1, 2}, -3);
  p.add_term({2, 1}, R(1, 2));
  ExactExpr z1 = ExactExpr::var(0), z2 = ExactExpr::var(1);
  ExactExpr u1 = (z1 + ExactExpr(1)) / (ExactExpr(2) * z1 - ExactExpr(3));
  ExactExpr u2 = z2 / (z2 - ExactExpr(1));
  // separable: arguments are functions of distinct single variables
  ExactExpr A = ExactExpr::apply(p, {u1, u2}) / (pow(z1, 3) * pow(z2 - ExactExpr(1), 3));
  // generic path: hand-expanded polynomial
  ExactExpr B = (ExactExpr(2) - ExactExpr(3) * u1 * u2 * u2 + ExactExpr(R(1, 2)) * u1 * u1 * u2) /
                (pow(z1, 3) * pow(z2 - ExactExpr(1), 3));
  CHECK(joint_residue<Rational>(A, {0, 1}, {3, 5}) == joint_residue<Rational>(B, {0, 1}, {3, 5}));
}

TEST_CASE("divided differences reproduce Vandermonde division") {
  ExactPoly f = P({1, -2, 0, 5, 1});
  ExactMultiPoly d = divided_difference<Rational>(3, {0, 1, 2}, f);
  std::vector<Rational> x{2, R(1, 3), -5};
  Rational direct = f(x[0]) / ((x[0] - x[1]) * (x[0] - x[2])) + f(x[1]) / ((x[1] - x[0]) * (x[1] - x[2])) +
                    f(x[2]) / ((x[2] - x[0]) * (x[2] - x[1]));
  CHECK(d(x) == direct);
}
