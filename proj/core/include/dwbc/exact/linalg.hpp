#pragma once

#include <vector>

#include "dwbc/error.hpp"
#include "dwbc/exact/rational.hpp"

namespace dwbc {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Gaussian elimination; any nonzero pivot for exact T, largest magnitude otherwise.
template <class T>
T determinant(Matrix<T> m) {
  const std::size_t n = m.size();
  T det = Field<T>::one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = Field<T>::pivot_score(m[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      double sc = Field<T>::pivot_score(m[r][col]);
      if (sc > best) {
        best = sc;
        piv = r;
      }
    }
    if (best == 0.0) return Field<T>::zero();
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (Field<T>::is_zero(m[r][col])) continue;
      T f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

// Solve m x = rhs; Singular when m has no inverse.
template <class T>
std::vector<T> solve(Matrix<T> m, std::vector<T> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = Field<T>::pivot_score(m[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      double sc = Field<T>::pivot_score(m[r][col]);
      if (sc > best) {
        best = sc;
        piv = r;
      }
    }
    if (best == 0.0) fail(ErrorKind::Singular, "singular linear system");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || Field<T>::is_zero(m[r][col])) continue;
      T f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return rhs;
}

}  // namespace dwbc
