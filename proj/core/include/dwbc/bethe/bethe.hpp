#pragma once

#include <vector>

#include "dwbc/ik/ik.hpp"

namespace dwbc {

// Visits every alpha_1..alpha_s with 1 <= alpha_j <= bounds[j] and pairwise distinct entries.
template <class F>
void for_each_nested(const std::vector<int>& bounds, F&& f) {
  const std::size_t s = bounds.size();
  std::vector<int> alpha(s);
  auto rec = [&](auto&& self, std::size_t j, std::uint64_t used) -> void {
    if (j == s) {
      f(alpha);
      return;
    }
    for (int a = 1; a <= bounds[j]; ++a) {
      if (used & (std::uint64_t{1} << a)) continue;
      alpha[j] = a;
      self(self, j + 1, used | (std::uint64_t{1} << a));
    }
  };
  rec(rec, 0, 0);
}

// Visits every permutation of 0..s-1 with its sign.
template <class F>
void for_each_permutation(int s, F&& f) {
  std::vector<int> p(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) p[static_cast<std::size_t>(i)] = i;
  do {
    int inv = 0;
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j)
        if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inv;
    f(p, inv % 2 ? -1 : 1);
  } while (std::next_permutation(p.begin(), p.end()));
}

// ---- multiple sums, inhomogeneous, numeric ----

// psi_bot by commuting A through B (minors of the Izergin-Korepin matrix)
Complex psi_bot_sum(const RowConfig& cfg, const TrigParams& p);
// psi_top by commuting B through D; the inner Z_s is the determinant formula
Complex psi_top_sum(const RowConfig& cfg, const TrigParams& p);
// psi_top by commuting D through B; depends on the down-arrow positions
Complex psi_top_dual_sum(const RowConfig& cfg, const TrigParams& p);
// coordinate Bethe ansatz wavefunction, all spectral parameters free
Complex psi_top_coordinate(const RowConfig& cfg, const TrigParams& p);
// same with lambda_alpha = lambda for all alpha (only nu_1..nu_s enter)
Complex psi_top_coordinate_hom(const RowConfig& cfg, Complex lambda, const std::vector<Complex>& nus, Complex eta);

// Residues at the a-function poles zeta = nu_l - eta in closed form (lambda homogeneous).
Complex psi_top_other_poles(const RowConfig& cfg, Complex lambda, const std::vector<Complex>& nus, Complex eta);
// The same by trapezoid quadrature on clockwise circles around nu_l - eta; s <= 3.
Complex psi_top_other_poles_quadrature(const RowConfig& cfg, Complex lambda, const std::vector<Complex>& nus,
                                       Complex eta, int nodes = 64, double radius = 0.08);

// ---- multiple integrals, homogeneous, exact ----

// The family must hold h_1..h_N.
Rational psi_bot_mir(const RowConfig& cfg, const BoundaryGenFamily& fam);
// residues at w = 1 of the coordinate form; optional symmetric multiplier in s variables
Rational psi_top_mir_coordinate(const RowConfig& cfg, const WeightTriple& w, const ExactMultiPoly* multiplier = nullptr);
// residues at w = 1 with h_{s,s}
Rational psi_top_mir_new(const RowConfig& cfg, const BoundaryGenFamily& fam);
// (N-s)-fold, at z = 0, in the down-arrow positions, with the reversed family
Rational psi_top_mir_dual(const RowConfig& cfg, const BoundaryGenFamily& fam);
// (N-s)-fold, at w = 1, in the down-arrow positions; the leading factor is Z_{N-s}
Rational psi_bot_mir_dual(const RowConfig& cfg, const BoundaryGenFamily& fam);
// as above with the leading factor Z_s as printed; kept to document the discrepancy
Rational psi_bot_mir_dual_as_printed(const RowConfig& cfg, const BoundaryGenFamily& fam);

// h~_1..h~_n, h~_m(z) = z^{m-1} h_m(1/z)
std::vector<ExactPoly> reversed_family(const BoundaryGenFamily& fam, int n);

}  // namespace dwbc
