#include <random>

#include "doctest.h"
#include "dwbc/identities/identities.hpp"

using namespace dwbc;

namespace {

Rational R(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

TrigParams point(int nl, int nn, double shift = 0) {
  TrigParams p;
  p.eta = Complex(0.41, 0.03);
  for (int j = 0; j < nl; ++j) p.lambdas.emplace_back(1.0 + 0.31 * j + shift, 0.05 * j);
  for (int k = 0; k < nn; ++k) p.nus.emplace_back(-0.25 + 0.19 * k, 0.02 * k);
  return p;
}

}  // namespace

TEST_CASE("kmst: trivial case, small s, and the printed sign") {
  auto one = check_kmst(point(1, 1));
  CHECK(std::abs(one.lhs - 1.0) < 1e-14);
  CHECK(std::abs(one.rhs - 1.0) < 1e-14);
  for (int s = 2; s <= 4; ++s) {
    CHECK(check_kmst(point(s, s)).residual <= 1e-8);
    auto printed = check_kmst(point(s, s), true);
    const bool odd = (s * (s - 1) / 2) % 2;
    CHECK(std::abs(printed.lhs - (odd ? -printed.rhs : printed.rhs)) <= 1e-10 * std::abs(printed.rhs));
  }
  CHECK_THROWS_AS(check_kmst(point(2, 1)), Error);
}

TEST_CASE("cantini: s = 1 and the worked s = 2 point") {
  auto c1 = check_cantini(R(1, 3), {R(2)}, {R(1, 5)});
  CHECK(c1.holds());
  // 1 / (1 - 2/5)
  CHECK(c1.lhs == R(5, 3));
  auto c2 = check_cantini(R(1, 2), {R(2), R(3)}, {R(1, 5), R(1, 7)});
  CHECK(c2.holds());
  CHECK(!is_zero(c2.lhs));
}

TEST_CASE("cantini: random exact draws up to s = 4") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-64, 64), den(1, 64);
  auto draw = [&] {
    long p = 0;
    while (p == 0) p = num(rng);
    return R(p, den(rng));
  };
  for (int s = 1; s <= 4; ++s)
    for (int t = 0; t < 20; ++t) {
      std::vector<Rational> x, y;
      for (int j = 0; j < s; ++j) {
        x.push_back(draw());
        y.push_back(draw());
      }
      try {
        CHECK(check_cantini(draw(), x, y).holds());
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SamplePoleHit);
      }
    }
}

TEST_CASE("W_s numerator is a polynomial of degree s - 1 in each variable") {
  const Rational delta = R(3, 7);
  std::vector<Rational> xs{R(2, 3), R(-5, 4), R(7, 9), R(11, 5)}, ys{R(3, 8), R(-2, 7), R(9, 10), R(-13, 6)};
  for (int s = 1; s <= 4; ++s) {
    std::vector<Rational> x(xs.begin(), xs.begin() + s), y(ys.begin(), ys.begin() + s);
    CHECK(cantini_p_max_degree(delta, x, y) == s - 1);
    if (s <= 3) {
      // against the symbolic numerator built independently
      std::vector<Rational> pt = x;
      pt.insert(pt.end(), y.begin(), y.end());
      CHECK(cantini_poly(s, delta)(pt) == cantini_p_value(delta, x, y));
    }
  }
}

TEST_CASE("psxx and whom") {
  CHECK(check_psxx(R(1, 2), {R(3)}).holds());
  CHECK(check_psxx(R(1, 2), {R(3)}).lhs == 1);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> num(1, 64), den(1, 64);
  for (int s = 2; s <= 4; ++s)
    for (int t = 0; t < 5; ++t) {
      std::vector<Rational> xs;
      for (int j = 0; j < s; ++j) xs.push_back(R(num(rng), den(rng)));
      CHECK(check_psxx(R(num(rng) - 32, 17), xs).holds());
    }
  WeightTriple w(R(1), R(2), R(2));
  CHECK(u_of_z(w, R(1)) == 0);
  CHECK(check_whom(w, {R(3, 5), R(-2, 7)}).holds());
  CHECK(check_whom(w, {R(4, 3)}).holds());
  CHECK(check_whom(WeightTriple(R(3, 2), R(2, 3), R(1, 2)), {R(1, 9), R(5, 2), R(-3, 4)}).holds());
}

TEST_CASE("big identity, its s = 1 case, C4 and the tangent relation") {
  CHECK(check_bigid({2}, point(3, 1)).residual <= 1e-8);
  for (int r = 1; r <= 5; ++r) CHECK(check_bigid({r}, point(5, 1)).residual <= 1e-8);
  CHECK(check_bigid({1, 3}, point(4, 2)).residual <= 1e-8);
  CHECK(check_bigid({2, 3, 5}, point(5, 3)).residual <= 1e-8);
  auto c4 = check_c4(point(2, 2));
  CHECK(c4.residual <= 1e-8);
  CHECK(std::abs(c4.rhs - ik_determinant(point(2, 2))) <= 1e-12 * std::abs(c4.rhs));
  CHECK(check_c4(point(3, 3, 0.1)).residual <= 1e-8);
  CHECK(check_tangent(3, point(3, 2)).residual <= 1e-8);
  CHECK(check_tangent(4, point(5, 3)).residual <= 1e-8);
  CHECK(check_tangent(2, point(2, 1)).residual <= 1e-8);
  CHECK_THROWS_AS(check_bigid({3, 2}, point(4, 2)), Error);
  CHECK_THROWS_AS(check_tangent(1, point(3, 2)), Error);
}

TEST_CASE("first-derivative hierarchy") {
  CHECK(check_hierarchy(2, WeightTriple()).holds());
  CHECK(check_hierarchy(5, WeightTriple()).holds());
  CHECK(check_hierarchy(8, WeightTriple(R(2), R(3), R(4))).holds());
  for (int n = 2; n <= 10; ++n) CHECK(check_hierarchy(n, WeightTriple(R(3, 2), R(2, 3), R(1, 2))).holds());
  for (int n = 3; n <= 5; ++n) CHECK(check_hierarchy_second(n, WeightTriple(R(2), R(3), R(4))).holds());
  CHECK_THROWS_AS(check_hierarchy(1, WeightTriple()), Error);
}

TEST_CASE("identity suites: all pass and are reproducible") {
  SuiteOptions o;
  o.trials = 20;
  auto a = run_identity_suite("all", o), b = run_identity_suite("all", o);
  REQUIRE(a.size() == b.size());
  int failures = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].pass) ++failures;
    CHECK(a[i].lhs == b[i].lhs);
  }
  CHECK(failures == 0);
  o.seed = 7;
  auto c = run_identity_suite("cantini", o);
  for (const auto& r : c) CHECK(r.pass);
  CHECK_THROWS_AS(run_identity_suite("nope", o), Error);
}
