#pragma once

#include <string>
#include <vector>

#include "dwbc/exact/expr.hpp"

namespace dwbc {

struct RationalFunction {
  ExactPoly num;
  ExactPoly den;
};

// Univariate truncated Laurent expansion: coeffs[i] sits at exponent lo + i, i.e. lo..hi.
class Laurent {
 public:
  Laurent(int lo, std::vector<Rational> coeffs) : lo_(lo), c_(std::move(coeffs)) {}
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }

 private:
  int lo_;
  std::vector<Rational> c_;
};

Laurent series_expand(const RationalFunction& f, const Rational& center, int lo, int hi);

Rational coefficient_of(const Laurent& s, int k);

namespace detail {
[[noreturn]] void order_exceeded(int var, int lo, int bound);
}

// Iterated residue at the given centers: the coefficient of prod (z_j - c_j)^{-1}.
// orders[j] bounds the pole order in variable j.  Expansion precision starts at the
// bound and is extended only by the deficit reported by the precision bookkeeping.
template <class T>
T joint_residue(const Expr<T>& F, const std::vector<T>& centers, const std::vector<int>& orders) {
  const std::size_t n = centers.size();
  if (orders.size() != n) fail(ErrorKind::InvalidConfig, "joint_residue: orders/centers size mismatch");
  if (n == 0) return F.eval({});
  std::vector<int> caps(n);
  for (std::size_t j = 0; j < n; ++j) caps[j] = std::max(orders[j] - 1, 0);
  Series<T> S;
  for (int attempt = 0;; ++attempt) {
    S = F.expand(centers, caps);
    bool short_fall = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (S.prec(static_cast<int>(j)) < -1) {
        caps[j] += -1 - S.prec(static_cast<int>(j));
        short_fall = true;
      }
    }
    if (!short_fall) break;
    if (attempt >= 8) fail(ErrorKind::TruncationInsufficient, "joint_residue: precision bookkeeping did not converge");
  }
  if (!S.is_zero())
    for (std::size_t j = 0; j < n; ++j)
      if (S.lo(static_cast<int>(j)) < -orders[j]) detail::order_exceeded(static_cast<int>(j), S.lo(static_cast<int>(j)), orders[j]);
  for (std::size_t j = n; j-- > 0;) S = S.extract(static_cast<int>(j), -1);
  return S.coeff(std::vector<int>(n, 0));
}

}  // namespace dwbc
