#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "dwbc/error.hpp"
#include "dwbc/exact/poly.hpp"

namespace dwbc {

// Sparse multivariate polynomial; keys are exponent vectors of length nvars.
template <class T>
class MultiPoly {
 public:
  using Exps = std::vector<int>;

  explicit MultiPoly(int nvars = 0) : n_(nvars) {}

  static MultiPoly constant(int nvars, const T& c) {
    MultiPoly p(nvars);
    p.add_term(Exps(static_cast<std::size_t>(nvars), 0), c);
    return p;
  }
  static MultiPoly variable(int nvars, int j) {
    MultiPoly p(nvars);
    Exps e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(j)] = 1;
    p.add_term(e, Field<T>::one());
    return p;
  }
  static MultiPoly from_univariate(int nvars, int j, const Poly<T>& u) {
    MultiPoly p(nvars);
    Exps e(static_cast<std::size_t>(nvars), 0);
    for (int k = 0; k <= u.degree(); ++k) {
      e[static_cast<std::size_t>(j)] = k;
      p.add_term(e, u.coeff(k));
    }
    return p;
  }

  int nvars() const { return n_; }
  const std::map<Exps, T>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add_term(const Exps& e, const T& c) {
    if (Field<T>::is_zero(c)) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(e, c);
    } else {
      it->second += c;
      if (Field<T>::is_zero(it->second)) t_.erase(it);
    }
  }

  T coeff(const Exps& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Field<T>::zero() : it->second;
  }

  int degree_in(int j) const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e[static_cast<std::size_t>(j)]);
    return d;
  }

  T operator()(const std::vector<T>& pt) const {
    std::vector<std::vector<T>> pw(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) {
      int d = std::max(0, degree_in(j));
      auto& v = pw[static_cast<std::size_t>(j)];
      v.assign(static_cast<std::size_t>(d) + 1, Field<T>::one());
      for (int k = 1; k <= d; ++k) v[static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(k - 1)] * pt[static_cast<std::size_t>(j)];
    }
    T acc = Field<T>::zero();
    for (const auto& [e, c] : t_) {
      T m = c;
      for (int j = 0; j < n_; ++j) m *= pw[static_cast<std::size_t>(j)][static_cast<std::size_t>(e[static_cast<std::size_t>(j)])];
      acc += m;
    }
    return acc;
  }

  // fix variable j to v; the result keeps nvars with exponent 0 in j
  MultiPoly substitute(int j, const T& v) const {
    MultiPoly r(n_);
    for (const auto& [e, c] : t_) {
      Exps f = e;
      T m = c;
      for (int k = 0; k < e[static_cast<std::size_t>(j)]; ++k) m *= v;
      f[static_cast<std::size_t>(j)] = 0;
      r.add_term(f, m);
    }
    return r;
  }

  // drop trailing variables (which must not occur) down to m variables
  MultiPoly truncated_vars(int m) const {
    MultiPoly r(m);
    for (const auto& [e, c] : t_) {
      for (int k = m; k < n_; ++k)
        if (e[static_cast<std::size_t>(k)] != 0) fail(ErrorKind::InvalidConfig, "truncated_vars: variable still present");
      r.add_term(Exps(e.begin(), e.begin() + m), c);
    }
    return r;
  }

  // variable j of the result is variable perm[j] of *this
  MultiPoly permuted(const std::vector<int>& perm) const {
    MultiPoly r(n_);
    for (const auto& [e, c] : t_) {
      Exps f(static_cast<std::size_t>(n_));
      for (int j = 0; j < n_; ++j) f[static_cast<std::size_t>(j)] = e[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
      r.add_term(f, c);
    }
    return r;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [e, c] : b.t_) r.add_term(e, c);
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r(a.n_);
    for (const auto& [e, c] : a.t_) r.t_.emplace(e, T(-c));
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.n_);
    Exps e(static_cast<std::size_t>(a.n_));
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) {
        for (int j = 0; j < a.n_; ++j) e[static_cast<std::size_t>(j)] = ea[static_cast<std::size_t>(j)] + eb[static_cast<std::size_t>(j)];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend MultiPoly operator*(const T& s, const MultiPoly& a) {
    MultiPoly r(a.n_);
    for (const auto& [e, c] : a.t_) r.add_term(e, s * c);
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

 private:
  int n_;
  std::map<Exps, T> t_;
};

using ExactMultiPoly = MultiPoly<Rational>;

// complete homogeneous symmetric polynomial of degree d in the listed variables
template <class T>
MultiPoly<T> complete_homogeneous(int nvars, const std::vector<int>& vars, int d) {
  MultiPoly<T> r(nvars);
  if (d < 0) return r;
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  const int m = static_cast<int>(vars.size());
  if (m == 0) {
    if (d == 0) r.add_term(e, Field<T>::one());
    return r;
  }
  // enumerate compositions of d into m parts
  auto rec = [&](auto&& self, int idx, int left) -> void {
    int v = vars[static_cast<std::size_t>(idx)];
    if (idx == m - 1) {
      e[static_cast<std::size_t>(v)] = left;
      r.add_term(e, Field<T>::one());
      e[static_cast<std::size_t>(v)] = 0;
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(v)] = k;
      self(self, idx + 1, left - k);
    }
    e[static_cast<std::size_t>(v)] = 0;
  };
  rec(rec, 0, d);
  return r;
}

// Divided difference f[x_{vars[0]}, ..., x_{vars[m-1]}] of a univariate polynomial.
template <class T>
MultiPoly<T> divided_difference(int nvars, const std::vector<int>& vars, const Poly<T>& f) {
  MultiPoly<T> r(nvars);
  const int m = static_cast<int>(vars.size());
  for (int k = m - 1; k <= f.degree(); ++k) {
    if (Field<T>::is_zero(f.coeff(k))) continue;
    r = r + f.coeff(k) * complete_homogeneous<T>(nvars, vars, k - m + 1);
  }
  return r;
}

// Determinant of a small square matrix of multivariate polynomials (Laplace expansion).
template <class T>
MultiPoly<T> multipoly_det(const std::vector<std::vector<MultiPoly<T>>>& m, int nvars) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return MultiPoly<T>::constant(nvars, Field<T>::one());
  std::vector<int> cols(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) cols[static_cast<std::size_t>(j)] = j;
  auto rec = [&](auto&& self, int row, std::vector<int>& avail) -> MultiPoly<T> {
    if (row == n) return MultiPoly<T>::constant(nvars, Field<T>::one());
    MultiPoly<T> acc(nvars);
    for (std::size_t i = 0; i < avail.size(); ++i) {
      const auto& entry = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(avail[i])];
      if (entry.is_zero()) continue;
      int col = avail[i];
      avail.erase(avail.begin() + static_cast<long>(i));
      MultiPoly<T> minor = self(self, row + 1, avail);
      avail.insert(avail.begin() + static_cast<long>(i), col);
      MultiPoly<T> term = entry * minor;
      acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  return rec(rec, 0, cols);
}

// exact quotient of p by (x_k - x_j); a nonzero remainder raises NonInvertible
template <class T>
MultiPoly<T> divide_by_difference(const MultiPoly<T>& p, int k, int j) {
  const int n = p.nvars();
  if (p.is_zero()) return p;
  const int deg = p.degree_in(k);
  std::vector<MultiPoly<T>> c(static_cast<std::size_t>(deg + 1), MultiPoly<T>(n));
  for (const auto& [e, v] : p.terms()) {
    auto f = e;
    f[static_cast<std::size_t>(k)] = 0;
    c[static_cast<std::size_t>(e[static_cast<std::size_t>(k)])].add_term(f, v);
  }
  const auto xj = MultiPoly<T>::variable(n, j);
  std::vector<MultiPoly<T>> q(static_cast<std::size_t>(std::max(deg, 1)), MultiPoly<T>(n));
  if (deg == 0) fail(ErrorKind::NonInvertible, "divide_by_difference: nonzero remainder");
  q[static_cast<std::size_t>(deg - 1)] = c[static_cast<std::size_t>(deg)];
  for (int d = deg - 1; d >= 1; --d) q[static_cast<std::size_t>(d - 1)] = c[static_cast<std::size_t>(d)] + xj * q[static_cast<std::size_t>(d)];
  if (!(c[0] + xj * q[0]).is_zero()) fail(ErrorKind::NonInvertible, "divide_by_difference: nonzero remainder");
  MultiPoly<T> out(n);
  for (int d = 0; d < deg; ++d)
    for (const auto& [e, v] : q[static_cast<std::size_t>(d)].terms()) {
      auto f = e;
      f[static_cast<std::size_t>(k)] += d;
      out.add_term(f, v);
    }
  return out;
}

}  // namespace dwbc
