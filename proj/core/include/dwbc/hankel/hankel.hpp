#pragma once

#include <vector>

#include "dwbc/efp/efp.hpp"

namespace dwbc {

// c_n = d^n/dlambda^n phi(lambda), phi = sin 2eta / (sin(lambda - eta) sin(lambda + eta))
struct MomentTable {
  double lambda = 0, eta = 0;
  std::vector<double> c;
  static MomentTable build(int count, double lambda, double eta);
  // n x n leading Hankel determinant; n = 0 gives 1
  double hankel_det(int n) const;
};

// Monic P_0..P_{N-1}, norms h_n, and K_n = n! phi^{n+1} / h_n P_n.  Coefficients low to high.
struct OrthoFamily {
  MomentTable moments;
  double phi = 0;
  std::vector<std::vector<double>> P, K;
  std::vector<double> h;
  int size() const { return static_cast<int>(P.size()); }
};

// DegenerateHankel when a leading minor vanishes
OrthoFamily build_ortho_family(int n, double lambda, double eta);

double eval_poly(const std::vector<double>& coeffs, double x);

// Truncated Taylor series in eps_0..eps_{m-1}
using NumericTaylor = Series<double>;

double omega(double eps, double lambda, double eta);
double omega_tilde(double eps, double lambda, double eta);
NumericTaylor omega_series(const std::vector<int>& caps, int j, double lambda, double eta);
NumericTaylor omega_tilde_series(const std::vector<int>& caps, int j, double lambda, double eta);

// det[K_{first + i}(d/deps_j)]_{i,j < m} applied to G at eps = 0, m = G.nvars()
double apply_K_det(const OrthoFamily& fam, int first, const NumericTaylor& G);

struct ClaimCheck {
  double lhs = 0, rhs = 0, residual = 0;
};
// K_{N-1}(d/deps) f(omega(eps)) at 0 against the coefficient of z^{N-1} in (z-1)^{N-1} h_N(z) f(z)
ClaimCheck verify_claim(int n, double lambda, double eta, const Poly<double>& f);

// H_N^{(r)} through K_{N-1}
double boundary_correlator_ortho(int n, int r, double lambda, double eta);

// s <= 3 (N - s <= 3 for psi_top), N <= 6
double efp_ortho(const EfpQuery& q, double lambda, double eta);
double psi_bot_ortho(const RowConfig& cfg, double lambda, double eta);
double psi_top_ortho(const RowConfig& cfg, double lambda, double eta);

// the triple (sin(lambda + eta), sin(lambda - eta), sin 2 eta) as exact dyadic rationals
WeightTriple exact_weights(double lambda, double eta);

}  // namespace dwbc
