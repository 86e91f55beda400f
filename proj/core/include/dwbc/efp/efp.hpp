#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dwbc/bethe/bethe.hpp"
#include "dwbc/exact/residue.hpp"

namespace dwbc {

// F_N^{(r,s)}; n = r - s counts diagonals away from the antidiagonal
struct EfpQuery {
  int N = 1, r = 1, s = 1;
  int n() const { return r - s; }
  // InvalidRegion unless 1 <= s <= r <= N
  void validate() const;
};

enum class EfpIntegral { Mir1, Mir2 };
enum class EfpSum { Efp, Efpn };
enum class HSource { Lattice, Integral };

// s-fold residues at 0; the family must hold h_1..h_N
Rational efp_mir_s(const EfpQuery& q, const BoundaryGenFamily& fam, EfpIntegral variant = EfpIntegral::Mir2);
// (r-s)-fold residues at z = 1
Rational efp_mir_n(const EfpQuery& q, const BoundaryGenFamily& fam);
// same integrand, every finite pole kept: residues at infinity
Rational efp_mir_n_all_poles(const EfpQuery& q, const BoundaryGenFamily& fam);
// sum of row configuration probabilities; Integral takes them from the exact integral forms
Rational efp_by_summation(const EfpQuery& q, const BoundaryGenFamily& fam, EfpSum route,
                          HSource source = HSource::Lattice);

// P_s(x_1..x_s; y_1..y_s) with x at indices 0..s-1 and y at s..2s-1
const ExactMultiPoly& cantini_poly(int s, const Rational& delta);

struct TraceStep {
  std::string label;
  std::optional<Rational> value;  // empty when the step exceeds the size limits
};

struct EfpTrace {
  EfpQuery query;
  std::vector<TraceStep> s_chain;  // efp -> ... -> efpMIR1
  std::vector<TraceStep> n_chain;  // efpn -> ... -> nefp_final
  // first step differing from the chain head, as "chain:label"
  std::optional<std::string> first_break;
};

// N <= 4.  Throws ChainBreak on the first mismatch when strict.
EfpTrace efp_double_contour_trace(const EfpQuery& q, const BoundaryGenFamily& fam, bool strict = true);

// integrand pieces exposed for the pole analysis; z holds n arguments, w is fixed
namespace efp_detail {
// nefp2 integrand in z for fixed numeric w, without the prefactor.  If skip_pair = (j, k)
// the factor 1/(z_j z_k - 2 Delta z_j + 1) is left out.
ExactExpr nefp2_z_integrand(const EfpQuery& q, const BoundaryGenFamily& fam, const std::vector<Rational>& w,
                            const std::vector<ExactExpr>& z, std::optional<std::pair<int, int>> skip_pair = {});
// residues at z_j = 1/w_k with the given orientation; empty when n > 3
std::optional<Rational> nefp2bis(const EfpQuery& q, const BoundaryGenFamily& fam, bool clockwise);
}  // namespace efp_detail

}  // namespace dwbc
