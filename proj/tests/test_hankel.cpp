#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "doctest.h"
#include "dwbc/hankel/hankel.hpp"

using namespace dwbc;

namespace {

bool close(double x, double y, double rel) { return std::abs(x - y) <= rel * std::max(1.0, std::abs(y)); }

double fact(int n) { return n <= 1 ? 1.0 : n * fact(n - 1); }

struct Point {
  double lambda, eta;
};
// disordered regime points: |Delta| < 1 with lambda in (eta, pi - eta)
const std::vector<Point> kPoints{{1.1, 0.35}, {0.9, 0.5}, {1.6, 0.3}, {2.0, 0.45}};

}  // namespace

TEST_CASE("moments and the first polynomial") {
  for (auto [l, e] : kPoints) {
    auto fam = build_ortho_family(4, l, e);
    double phi = std::sin(2 * e) / (std::sin(l - e) * std::sin(l + e));
    CHECK(close(fam.phi, phi, 1e-14));
    CHECK(close(fam.moments.c[0], phi, 1e-14));
    CHECK(fam.P[0] == std::vector<double>{1.0});
    CHECK(close(fam.h[0], fam.moments.c[0], 1e-14));
    CHECK(close(fam.K[0][0], 1.0, 1e-14));
    // first derivative by central difference
    const double d = 1e-5;
    double fd = (std::sin(2 * e) / (std::sin(l + d - e) * std::sin(l + d + e)) -
                 std::sin(2 * e) / (std::sin(l - d - e) * std::sin(l - d + e))) /
                (2 * d);
    CHECK(close(fam.moments.c[1], fd, 1e-7));
  }
}

TEST_CASE("Hankel determinant is the product of norms") {
  for (auto [l, e] : kPoints)
    for (int n = 1; n <= 6; ++n) {
      auto fam = build_ortho_family(n, l, e);
      double prod = 1;
      for (double h : fam.h) prod *= h;
      CHECK(close(fam.moments.hankel_det(n), prod, 1e-8));
    }
}

TEST_CASE("orthogonality and the bordered-determinant form") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> U(-1.5, 1.5);
  for (auto [l, e] : kPoints) {
    auto fam = build_ortho_family(6, l, e);
    const auto& c = fam.moments.c;
    for (int n = 0; n < 6; ++n)
      for (int m = 0; m < n; ++m) {
        double ip = 0, scale = 0;
        for (int j = 0; j <= n; ++j) {
          ip += fam.P[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(j + m)];
          scale += std::abs(fam.P[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(j + m)]);
        }
        CHECK(std::abs(ip) <= 1e-9 * std::max(1.0, scale));
      }
    // N x N matrix: N - s moment columns, then s columns of powers of x_j
    const int n = 5;
    for (int s = 1; s <= 3; ++s)
      for (int rep = 0; rep < 3; ++rep) {
        std::vector<double> x;
        for (int j = 0; j < s; ++j) x.push_back(U(rng));
        Eigen::MatrixXd M(n, n);
        for (int i = 0; i < n; ++i) {
          for (int q = 0; q < n - s; ++q) M(i, q) = c[static_cast<std::size_t>(i + q)];
          for (int j = 0; j < s; ++j) M(i, n - s + j) = std::pow(x[static_cast<std::size_t>(j)], i);
        }
        Eigen::MatrixXd A(s, s);
        for (int i = 0; i < s; ++i)
          for (int j = 0; j < s; ++j)
            A(i, j) = eval_poly(fam.P[static_cast<std::size_t>(n - s + i)], x[static_cast<std::size_t>(j)]);
        double norms = 1;
        for (int k = 0; k < n - s; ++k) norms *= fam.h[static_cast<std::size_t>(k)];
        CHECK(close(M.determinant(), norms * A.determinant(), 1e-7));
      }
  }
}

TEST_CASE("K normalization") {
  for (auto [l, e] : kPoints) {
    auto fam = build_ortho_family(6, l, e);
    for (int n = 0; n < 6; ++n) {
      const auto& K = fam.K[static_cast<std::size_t>(n)];
      CHECK(K.size() == static_cast<std::size_t>(n + 1));
      CHECK(close(K.back(), fact(n) * std::pow(fam.phi, n + 1) / fam.h[static_cast<std::size_t>(n)], 1e-12));
    }
  }
}

TEST_CASE("omega series and the tilde relation") {
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> U(-0.2, 0.2);
  for (auto [l, e] : kPoints) {
    auto w = exact_weights(l, e);
    const double a = w.a.get_d(), b = w.b.get_d(), c = w.c.get_d();
    const double t = b / a, delta = (a * a + b * b - c * c) / (2 * a * b);
    for (int k = 0; k < 5; ++k) {
      double eps = U(rng);
      double om = omega(eps, l, e), ot = omega_tilde(eps, l, e);
      CHECK(close(ot, t * t * om / (2 * delta * t * om - 1), 1e-12));
    }
    // Taylor coefficients reproduce the function near 0
    std::vector<int> caps{12};
    auto S = omega_series(caps, 0, l, e);
    auto T = omega_tilde_series(caps, 0, l, e);
    const double eps = 0.03;
    double sv = 0, tv = 0;
    for (const auto& [ex, v] : S.terms()) sv += v * std::pow(eps, ex[0]);
    for (const auto& [ex, v] : T.terms()) tv += v * std::pow(eps, ex[0]);
    CHECK(close(sv, omega(eps, l, e), 1e-12));
    CHECK(close(tv, omega_tilde(eps, l, e), 1e-12));
  }
}

TEST_CASE("K operator against the generating function") {
  for (auto [l, e] : kPoints)
    for (int n = 1; n <= 6; ++n) {
      std::vector<Poly<double>> fs{Poly<double>({1.0}), Poly<double>({0.0, 1.0}), Poly<double>({0.5, -1.0, 2.0}),
                                   Poly<double>({0.0, 0.0, 0.0, 1.0, -0.25}), Poly<double>({1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0})};
      for (const auto& f : fs) {
        auto ch = verify_claim(n, l, e, f);
        CHECK(ch.residual <= 1e-7 * std::max(1.0, std::abs(ch.rhs)));
      }
    }
  // N = 1: K_0 = 1, so both sides are f(0)
  auto one = verify_claim(1, 1.1, 0.35, Poly<double>({0.7, 3.0}));
  CHECK(close(one.lhs, 0.7, 1e-12));
  CHECK(close(one.rhs, 0.7, 1e-12));
}

TEST_CASE("boundary correlator through K_{N-1}") {
  for (auto [l, e] : kPoints) {
    auto w = exact_weights(l, e);
    for (int n = 1; n <= 6; ++n) {
      ExactPoly h = boundary_generating_poly(n, w);
      for (int r = 1; r <= n; ++r) CHECK(close(boundary_correlator_ortho(n, r, l, e), h.coeff(r - 1).get_d(), 1e-7));
    }
  }
}

TEST_CASE("EFP through the K-determinant") {
  {
    auto w = exact_weights(1.1, 0.35);
    CHECK(close(efp_ortho(EfpQuery{3, 2, 2}, 1.1, 0.35), efp_oracle(3, 2, 2, w).get_d(), 1e-6));
  }
  for (auto [l, e] : kPoints) {
    auto w = exact_weights(l, e);
    BoundaryGenFamily fam(w, 5);
    for (int n = 1; n <= 5; ++n)
      for (int s = 1; s <= std::min(n, 3); ++s)
        for (int r = s; r <= n; ++r) {
          EfpQuery q{n, r, s};
          CHECK(close(efp_ortho(q, l, e), efp_mir_s(q, fam).get_d(), 1e-6));
        }
  }
}

TEST_CASE("row wavefunctions through the K-determinant") {
  for (auto [l, e] : kPoints) {
    auto w = exact_weights(l, e);
    for (int n = 1; n <= 5; ++n)
      for (int s = 0; s <= n; ++s)
        for (auto& cfg : all_row_configs(n, s)) {
          if (s <= 3) CHECK(close(psi_bot_ortho(cfg, l, e), psi_bot(cfg, w).get_d(), 1e-7));
          if (n - s <= 3) CHECK(close(psi_top_ortho(cfg, l, e), psi_top(cfg, w).get_d(), 1e-7));
        }
  }
}

TEST_CASE("crossing of the K coefficients") {
  const double pi = std::acos(-1.0);
  for (auto [l, e] : kPoints) {
    auto f = build_ortho_family(6, l, e), g = build_ortho_family(6, pi - l, e);
    for (int n = 0; n < 6; ++n)
      for (int m = 0; m <= n; ++m) {
        double x = f.K[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
        double y = g.K[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
        CHECK(std::abs(y - ((n + m) % 2 ? -x : x)) <= 1e-9 * std::max(1.0, std::abs(x)));
      }
  }
}

TEST_CASE("hankel argument errors") {
  CHECK_THROWS_AS(build_ortho_family(0, 1.1, 0.35), Error);
  CHECK_THROWS_AS(efp_ortho(EfpQuery{5, 4, 4}, 1.1, 0.35), Error);
  CHECK_THROWS_AS(boundary_correlator_ortho(3, 4, 1.1, 0.35), Error);
}
