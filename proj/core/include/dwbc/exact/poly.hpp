#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "dwbc/exact/rational.hpp"

namespace dwbc {

// Dense univariate polynomial, coefficients indexed by degree.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
  static Poly monomial(const T& v, int d) {
    std::vector<T> c(static_cast<std::size_t>(d) + 1, Field<T>::zero());
    c.back() = v;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(Field<T>::one(), 1); }
  // (x - r)^k
  static Poly shifted_power(const T& r, int k) {
    Poly p = constant(Field<T>::one());
    Poly f(std::vector<T>{T(-r), Field<T>::one()});
    for (int i = 0; i < k; ++i) p = p * f;
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int k) const {
    if (k < 0 || k > degree()) return Field<T>::zero();
    return c_[static_cast<std::size_t>(k)];
  }

  T operator()(const T& x) const {
    T acc = Field<T>::zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Field<T>::from_int(static_cast<long>(k));
    return Poly(std::move(d));
  }

  // z^n p(1/z); n must be >= degree
  Poly reversed(int n) const {
    std::vector<T> r(static_cast<std::size_t>(n) + 1, Field<T>::zero());
    for (int k = 0; k <= degree(); ++k) r[static_cast<std::size_t>(n - k)] = c_[static_cast<std::size_t>(k)];
    return Poly(std::move(r));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), Field<T>::zero());
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<T> r(a.c_);
    for (auto& v : r) v = -v;
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, Field<T>::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (Field<T>::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(const T& s, const Poly& a) {
    std::vector<T> r(a.c_);
    for (auto& v : r) v = s * v;
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && Field<T>::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

using ExactPoly = Poly<Rational>;

// Exact Lagrange interpolation through (xs[i], ys[i]); xs pairwise distinct.
ExactPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace dwbc
