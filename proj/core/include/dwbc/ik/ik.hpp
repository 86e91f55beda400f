#pragma once

#include <vector>

#include "dwbc/exact/linalg.hpp"
#include "dwbc/exact/multipoly.hpp"
#include "dwbc/lattice/oracle.hpp"

namespace dwbc {

// Trigonometric weight functions at fixed eta.
struct Trig {
  Complex eta;

  Complex a(Complex l, Complex n) const { return std::sin(l - n + eta); }
  Complex b(Complex l, Complex n) const { return std::sin(l - n - eta); }
  Complex c() const { return std::sin(2.0 * eta); }
  Complex d(Complex l, Complex lp) const { return std::sin(l - lp); }
  Complex e(Complex l, Complex lp) const { return std::sin(l - lp + 2.0 * eta); }
  Complex f(Complex lp, Complex l) const { return e(l, lp) / d(l, lp); }
  Complex g(Complex lp, Complex l) const { return c() / d(l, lp); }
  Complex phi(Complex l, Complex n) const { return c() / (a(l, n) * b(l, n)); }
};

inline constexpr double kNearDegenerate = 1e-8;

// Inhomogeneous partition function as a determinant.
Complex ik_determinant(const TrigParams& p);

// P_k with d^k/dx^k cot(x) = P_k(cot x); P_0 = X, P_{k+1} = -(1 + X^2) P_k'.
const ExactPoly& cot_derivative_poly(int k);

// d^k/dlambda^k of sin(2 eta) / (sin(lambda - eta) sin(lambda + eta))
Complex phi_derivative(int k, Complex lambda, Complex eta);

// Homogeneous limit (all lambdas equal, nus = 0) through the Hankel determinant of phi-derivatives.
Complex ik_homogeneous(int n, Complex lambda, Complex eta);

// Weights a = sin(lambda + eta), b = sin(lambda - eta), c = sin(2 eta).
struct NumericWeights {
  Complex a, b, c;
};
NumericWeights homogeneous_weights(Complex lambda, Complex eta);

// h_1 .. h_n with generic scalar weights, via the transfer backend.
template <class S>
std::vector<Poly<S>> boundary_polys(const S& a, const S& b, const S& c, int n_max) {
  std::vector<Poly<S>> out;
  for (int n = 1; n <= n_max; ++n) {
    auto w = uniform_weights<S>(n, a, b, c);
    S z = partition_function(w, Backend::Transfer);
    std::vector<S> co;
    for (int r = 1; r <= n; ++r) {
      RowConfig cfg(n, {r});
      co.push_back(psi_top(cfg, w, Backend::Transfer) * psi_bot(cfg, w, Backend::Transfer) / z);
    }
    out.emplace_back(co);
  }
  return out;
}

namespace detail {
template <class T>
Poly<T> hns_row_function(const std::vector<Poly<T>>& h, int n, int s, int i) {
  // z^{s-i} (z-1)^{i-1} h_{n-s+i}(z), i = 1..s
  Poly<T> f = Poly<T>::monomial(Field<T>::one(), s - i) * Poly<T>::shifted_power(Field<T>::one(), i - 1);
  return f * h[static_cast<std::size_t>(n - s + i - 1)];
}
void check_hns_args(int have, int n, int s);
}  // namespace detail

// h_{N,s} at pairwise distinct points; h[m-1] holds h_m.
template <class T>
T hns_eval(const std::vector<Poly<T>>& h, int n, int s, const std::vector<T>& z) {
  detail::check_hns_args(static_cast<int>(h.size()), n, s);
  if (static_cast<int>(z.size()) != s) fail(ErrorKind::InvalidConfig, "h_{N,s} needs s points");
  Matrix<T> m(static_cast<std::size_t>(s), std::vector<T>(static_cast<std::size_t>(s)));
  T vand = Field<T>::one();
  for (int j = 0; j < s; ++j)
    for (int k = j + 1; k < s; ++k) vand *= z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)];
  if (Field<T>::is_zero(vand)) fail(ErrorKind::DegeneratePoints, "h_{N,s}: evaluation points coincide");
  for (int i = 1; i <= s; ++i) {
    Poly<T> f = detail::hns_row_function(h, n, s, i);
    for (int j = 0; j < s; ++j) m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] = f(z[static_cast<std::size_t>(j)]);
  }
  return determinant(m) / vand;
}

// h_{N,s} as a polynomial in s variables: the Vandermonde is divided out by
// replacing column j with the divided difference over z_1..z_j.
template <class T>
MultiPoly<T> hns_poly(const std::vector<Poly<T>>& h, int n, int s) {
  detail::check_hns_args(static_cast<int>(h.size()), n, s);
  std::vector<std::vector<MultiPoly<T>>> m(static_cast<std::size_t>(s));
  for (int i = 1; i <= s; ++i) {
    Poly<T> f = detail::hns_row_function(h, n, s, i);
    std::vector<int> vars;
    for (int j = 0; j < s; ++j) {
      vars.push_back(j);
      m[static_cast<std::size_t>(i - 1)].push_back(divided_difference<T>(s, vars, f));
    }
  }
  return multipoly_det(m, s);
}

Rational build_hNs(const BoundaryGenFamily& fam, int n, int s, const std::vector<Rational>& z);
ExactMultiPoly build_hNs_poly(const BoundaryGenFamily& fam, int n, int s);

// gamma(xi; lambda) = a(lambda) b(lambda + xi) / (b(lambda) a(lambda + xi)) with nu = 0
Complex gamma_map(Complex xi, Complex lambda, Complex eta);

// Z_N(lambda_1..lambda_N; 0..0) through h_{N,N} at gamma(lambda_j - lambda0).
Complex partially_inhomogeneous_Z(const std::vector<Complex>& lambdas, Complex lambda0, Complex eta);

}  // namespace dwbc
