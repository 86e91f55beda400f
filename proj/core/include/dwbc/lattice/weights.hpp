#pragma once

#include <vector>

#include "dwbc/error.hpp"
#include "dwbc/exact/rational.hpp"

namespace dwbc {

// Homogeneous exact Boltzmann weights.
struct WeightTriple {
  Rational a, b, c;

  WeightTriple() : a(1), b(1), c(1) {}
  WeightTriple(Rational a_, Rational b_, Rational c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (sgn(a) <= 0 || sgn(b) <= 0 || sgn(c) <= 0)
      fail(ErrorKind::InvalidConfig, "weights must be strictly positive");
  }

  Rational delta() const { return Rational((a * a + b * b - c * c) / (2 * a * b)); }
  Rational t() const { return Rational(b / a); }
  // a <-> b
  WeightTriple swapped() const { return WeightTriple(b, a, c); }
};

// Spectral parameters of the inhomogeneous model.
struct TrigParams {
  std::vector<Complex> lambdas;
  std::vector<Complex> nus;
  Complex eta;

  int size() const { return static_cast<int>(lambdas.size()); }
};

// Site weights a_{alpha k}, b_{alpha k} and c, indices 1-based (alpha: vertical line, k: horizontal line).
template <class S>
struct VertexWeights {
  int n = 0;
  std::vector<S> a_, b_;
  S c{};

  const S& a(int alpha, int k) const { return a_[static_cast<std::size_t>((alpha - 1) * n + (k - 1))]; }
  const S& b(int alpha, int k) const { return b_[static_cast<std::size_t>((alpha - 1) * n + (k - 1))]; }
};

template <class S>
VertexWeights<S> uniform_weights(int n, const S& a, const S& b, const S& c) {
  VertexWeights<S> w;
  w.n = n;
  w.a_.assign(static_cast<std::size_t>(n * n), a);
  w.b_.assign(static_cast<std::size_t>(n * n), b);
  w.c = c;
  return w;
}

inline VertexWeights<Rational> homogeneous(int n, const WeightTriple& t) {
  return uniform_weights<Rational>(n, t.a, t.b, t.c);
}

// a = sin(lambda_alpha - nu_k + eta), b = sin(lambda_alpha - nu_k - eta), c = sin(2 eta)
VertexWeights<Complex> weight_matrix(const TrigParams& p);

}  // namespace dwbc
