#include "dwbc/exact/residue.hpp"

namespace dwbc {

namespace detail {
void order_exceeded(int var, int lo, int bound) {
  fail(ErrorKind::OrderExceeded, "pole of order " + std::to_string(-lo) + " in variable " + std::to_string(var) +
                                     " exceeds the bound " + std::to_string(bound));
}
}  // namespace detail

Laurent series_expand(const RationalFunction& f, const Rational& center, int lo, int hi) {
  if (hi < lo) fail(ErrorKind::OutOfRange, "series_expand: hi < lo");
  if (f.den.is_zero()) fail(ErrorKind::ZeroDenominator, "series_expand: zero denominator");
  ExactExpr z = ExactExpr::var(0);
  ExactExpr F = ExactExpr::apply(f.num, z) / ExactExpr::apply(f.den, z);
  std::vector<int> caps{std::max(hi, 0)};
  ExactSeries S;
  for (int attempt = 0;; ++attempt) {
    S = F.expand({center}, caps);
    if (S.prec(0) >= hi) break;
    caps[0] += hi - S.prec(0);
    if (attempt >= 8) fail(ErrorKind::TruncationInsufficient, "series_expand: precision did not converge");
  }
  if (!S.is_zero() && S.lo(0) < lo) detail::order_exceeded(0, S.lo(0), -lo);
  std::vector<Rational> c;
  for (int k = lo; k <= hi; ++k) c.push_back(S.coeff({k}));
  return Laurent(lo, std::move(c));
}

Rational coefficient_of(const Laurent& s, int k) {
  if (k < s.lo() || k > s.hi())
    fail(ErrorKind::OutOfRange, "coefficient_of: exponent " + std::to_string(k) + " outside [" +
                                    std::to_string(s.lo()) + ", " + std::to_string(s.hi()) + "]");
  return s.coeffs()[static_cast<std::size_t>(k - s.lo())];
}

ExactPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  ExactPoly acc;
  for (std::size_t i = 0; i < n; ++i) {
    ExactPoly basis = ExactPoly::constant(1);
    Rational den = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      basis = basis * ExactPoly(std::vector<Rational>{Rational(-xs[j]), Rational(1)});
      den *= xs[i] - xs[j];
    }
    if (is_zero(den)) fail(ErrorKind::DegeneratePoints, "interpolate: repeated nodes");
    Rational scale = ys[i] / den;
    acc = acc + scale * basis;
  }
  return acc;
}

}  // namespace dwbc
