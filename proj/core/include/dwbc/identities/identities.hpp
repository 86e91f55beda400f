#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dwbc/bethe/bethe.hpp"
#include "dwbc/efp/efp.hpp"

namespace dwbc {

struct ExactCheck {
  Rational lhs, rhs;
  bool holds() const { return lhs == rhs; }
};

struct NumericCheck {
  Complex lhs, rhs;
  // |lhs - rhs| / max(|lhs|, |rhs|)
  double residual = 0;
};

// Antisymmetrization over the lambdas against prod_{j<k} d(lambda_j, lambda_k) / prod e times Z_s; s <= 4.
// as_printed flips the sine product to d(lambda_k, lambda_j), which is off by (-1)^{s(s-1)/2}.
NumericCheck check_kmst(const TrigParams& p, bool as_printed = false);

// Double antisymmetrization in xs and ys against prod (x + y - 2 Delta x y) det psi(x_j, y_k).
ExactCheck check_cantini(const Rational& delta, const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// prod (1 - x_j y_k) W_s(x; y), all sets distinct
Rational cantini_p_value(const Rational& delta, const std::vector<Rational>& xs, const std::vector<Rational>& ys);
// Same, polynomial continuation: y_k -> y_k + eps k then eps -> 0 by exact interpolation; ys may coincide or hit 1/x.
Rational cantini_p_limit(const Rational& delta, const std::vector<Rational>& xs, const std::vector<Rational>& ys);
// Highest degree of prod (1 - x y) W_s in any single variable, by exact interpolation through 2s + 1 nodes around the sample.
int cantini_p_max_degree(const Rational& delta, const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// P_s(x; 1/x) against the product over j != k of (x_j x_k - 2 Delta x_j + 1) / x_j^{s-1}
ExactCheck check_psxx(const Rational& delta, const std::vector<Rational>& xs);
// W_s(t z; 1/t, ..., 1/t) against Z_s h_{s,s}(u(z)) with its prefactor
ExactCheck check_whom(const WeightTriple& w, const std::vector<Rational>& zs);
// u(z) = -(z - 1) / ((t^2 - 2 Delta t) z + 1)
Rational u_of_z(const WeightTriple& w, const Rational& z);

// positions r_1 < ... < r_s; p.lambdas must reach r_s, p.nus has s entries
NumericCheck check_bigid(const std::vector<int>& r, const TrigParams& p);
// s lambdas, s nus; the right side is Z_s
NumericCheck check_c4(const TrigParams& p);
// r_j = j for j < s, r_s = r >= s; s = p.nus.size()
NumericCheck check_tangent(int r, const TrigParams& p);

// h_N'(0) = [t^2 + (1 - 2 Delta t + t^2) h_{N-1}'(1)] h_N(0), N >= 2
ExactCheck check_hierarchy(int n, const WeightTriple& w);
// F_N^{(3,2)} by the s-fold and the n-fold integrals; equal values pin the second-order relation, N >= 3
ExactCheck check_hierarchy_second(int n, const WeightTriple& w);

// ---- randomized suites ----

struct IdentityResult {
  std::string name;
  bool exact = true;
  int N = 0, s = 0, n = 0;
  std::string lhs, rhs;
  double residual = 0;
  bool pass = false;
  std::string error;  // set when the case raised
};

struct SuiteOptions {
  int trials = 20;
  std::uint64_t seed = 42;
  double tolerance = 1e-8;
};

// suite: kmst | cantini | bigid | c4 | tangent | hierarchy | crossing | claim | all
std::vector<IdentityResult> run_identity_suite(const std::string& suite, const SuiteOptions& opt);
const std::vector<std::string>& identity_suite_names();

}  // namespace dwbc
