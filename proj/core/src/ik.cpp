#include <mutex>

#include <Eigen/Dense>

#include "dwbc/ik/ik.hpp"

namespace dwbc {

Complex ik_determinant(const TrigParams& p) {
  const int n = p.size();
  if (n < 1 || static_cast<int>(p.nus.size()) != n) fail(ErrorKind::InvalidConfig, "need N lambdas and N nus");
  Trig tr{p.eta};
  Complex pre(1.0, 0.0);
  for (int al = 0; al < n; ++al)
    for (int be = al + 1; be < n; ++be) {
      Complex d = tr.d(p.lambdas[static_cast<std::size_t>(be)], p.lambdas[static_cast<std::size_t>(al)]);
      if (std::abs(d) < kNearDegenerate) fail(ErrorKind::NearDegenerate, "two lambdas collide");
      pre /= d;
    }
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      Complex d = tr.d(p.nus[static_cast<std::size_t>(j)], p.nus[static_cast<std::size_t>(k)]);
      if (std::abs(d) < kNearDegenerate) fail(ErrorKind::NearDegenerate, "two nus collide");
      pre /= d;
    }
  Eigen::MatrixXcd m(n, n);
  for (int al = 0; al < n; ++al)
    for (int k = 0; k < n; ++k) {
      Complex l = p.lambdas[static_cast<std::size_t>(al)], v = p.nus[static_cast<std::size_t>(k)];
      Complex ab = tr.a(l, v) * tr.b(l, v);
      if (std::abs(ab) < 1e-300) fail(ErrorKind::Singular, "a or b vanishes at a site");
      pre *= ab;
      m(al, k) = tr.c() / ab;
    }
  return pre * m.determinant();
}

const ExactPoly& cot_derivative_poly(int k) {
  static std::mutex mu;
  static std::vector<ExactPoly> cache{ExactPoly::x()};
  std::lock_guard<std::mutex> lock(mu);
  const ExactPoly one_plus_x2({Rational(1), Rational(0), Rational(1)});
  while (static_cast<int>(cache.size()) <= k) cache.push_back(Rational(-1) * (one_plus_x2 * cache.back().derivative()));
  return cache[static_cast<std::size_t>(k)];
}

namespace {

Complex eval_numeric(const ExactPoly& p, Complex x) {
  Complex acc(0.0, 0.0);
  for (int k = p.degree(); k >= 0; --k) acc = acc * x + p.coeff(k).get_d();
  return acc;
}

}  // namespace

Complex phi_derivative(int k, Complex lambda, Complex eta) {
  Complex sm = std::sin(lambda - eta), sp = std::sin(lambda + eta);
  if (std::abs(sm) < 1e-12 || std::abs(sp) < 1e-12) fail(ErrorKind::Singular, "lambda = +-eta (mod pi)");
  const ExactPoly& P = cot_derivative_poly(k);
  return eval_numeric(P, std::cos(lambda - eta) / sm) - eval_numeric(P, std::cos(lambda + eta) / sp);
}

Complex ik_homogeneous(int n, Complex lambda, Complex eta) {
  if (n < 1) fail(ErrorKind::InvalidConfig, "N must be positive");
  Complex ab = std::sin(lambda - eta) * std::sin(lambda + eta);
  std::vector<Complex> der(static_cast<std::size_t>(2 * n - 1));
  for (int k = 0; k < 2 * n - 1; ++k) der[static_cast<std::size_t>(k)] = phi_derivative(k, lambda, eta);
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = der[static_cast<std::size_t>(i + j)];
  Complex pre = std::pow(ab, n * n);
  double fact = 1.0;
  for (int k = 1; k < n; ++k) {
    fact *= k;
    pre /= fact * fact;
  }
  return pre * m.determinant();
}

NumericWeights homogeneous_weights(Complex lambda, Complex eta) {
  return {std::sin(lambda + eta), std::sin(lambda - eta), std::sin(2.0 * eta)};
}

namespace detail {
void check_hns_args(int have, int n, int s) {
  if (s < 1 || s > n) fail(ErrorKind::InvalidConfig, "h_{N,s} needs 1 <= s <= N");
  if (have < n) fail(ErrorKind::OutOfRange, "boundary polynomial family too short for h_{N,s}");
}
}  // namespace detail

namespace {
std::vector<ExactPoly> family_polys(const BoundaryGenFamily& fam, int n) {
  std::vector<ExactPoly> h;
  for (int m = 1; m <= n; ++m) h.push_back(fam.h(m));
  return h;
}
}  // namespace

Rational build_hNs(const BoundaryGenFamily& fam, int n, int s, const std::vector<Rational>& z) {
  detail::check_hns_args(fam.max_size(), n, s);
  return hns_eval(family_polys(fam, n), n, s, z);
}

ExactMultiPoly build_hNs_poly(const BoundaryGenFamily& fam, int n, int s) {
  detail::check_hns_args(fam.max_size(), n, s);
  return hns_poly(family_polys(fam, n), n, s);
}

Complex gamma_map(Complex xi, Complex lambda, Complex eta) {
  Complex a0 = std::sin(lambda + eta), b0 = std::sin(lambda - eta);
  Complex a1 = std::sin(lambda + xi + eta), b1 = std::sin(lambda + xi - eta);
  if (std::abs(b0) < 1e-300 || std::abs(a1) < 1e-300) fail(ErrorKind::Singular, "gamma: vanishing weight");
  return a0 * b1 / (b0 * a1);
}

Complex partially_inhomogeneous_Z(const std::vector<Complex>& lambdas, Complex lambda0, Complex eta) {
  const int n = static_cast<int>(lambdas.size());
  if (n < 1) fail(ErrorKind::InvalidConfig, "need at least one lambda");
  NumericWeights w = homogeneous_weights(lambda0, eta);
  auto h = boundary_polys<Complex>(w.a, w.b, w.c, n);
  std::vector<Complex> g;
  Complex pre = ik_homogeneous(n, lambda0, eta);
  for (Complex l : lambdas) {
    g.push_back(gamma_map(l - lambda0, lambda0, eta));
    pre *= std::pow(std::sin(l + eta) / w.a, n - 1);
  }
  double sep = 1.0;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) sep = std::min(sep, std::abs(g[static_cast<std::size_t>(j)] - g[static_cast<std::size_t>(k)]));
  if (sep > 1e-3) return pre * hns_eval(h, n, n, g);
  if (n > 6) fail(ErrorKind::SizeLimit, "coincident points need the polynomial form, limited to N <= 6");
  return pre * hns_poly(h, n, n)(g);
}

}  // namespace dwbc
