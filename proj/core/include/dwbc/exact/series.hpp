#pragma once

#include <algorithm>
#include <limits>
#include <utility>
#include <vector>

#include "dwbc/error.hpp"
#include "dwbc/exact/rational.hpp"

namespace dwbc {

// Precision value meaning "known to all orders" (the series is a Laurent polynomial in that variable).
inline constexpr int kExact = 1 << 28;

inline int sat_add(int a, int b) {
  if (a >= kExact / 2 || b >= kExact / 2) return kExact;
  return a + b;
}

// Truncated multivariate Laurent series in eps_0..eps_{n-1}.
//
// Storage is a dense box [lo_j, top_j] per variable.  prec_j is the largest exponent
// in variable j up to which coefficients are known; coefficients in (top_j, prec_j]
// are zero.  caps_ bounds the precision of every inexact result.
template <class T>
class Series {
 public:
  using Exps = std::vector<int>;

  Series() = default;

  static Series zero(const std::vector<int>& caps) {
    Series s;
    s.caps_ = caps;
    const std::size_t n = caps.size();
    s.lo_.assign(n, kExact);
    s.top_.assign(n, kExact - 1);
    s.prec_.assign(n, kExact);
    return s;
  }

  static Series monomial(const std::vector<int>& caps, const Exps& e, const T& c) {
    if (Field<T>::is_zero(c)) return zero(caps);
    Series s;
    s.caps_ = caps;
    s.lo_ = e;
    s.top_ = e;
    s.prec_.assign(caps.size(), kExact);
    s.data_.assign(1, c);
    return s;
  }

  static Series constant(const std::vector<int>& caps, const T& c) {
    return monomial(caps, Exps(caps.size(), 0), c);
  }

  // center + eps_j
  static Series variable(const std::vector<int>& caps, int j, const T& center) {
    Exps e(caps.size(), 0);
    Series a = constant(caps, center);
    e[static_cast<std::size_t>(j)] = 1;
    return a + monomial(caps, e, Field<T>::one());
  }

  // Univariate series in variable j: coefficients c[k] at exponent lo + k, known up to prec.
  static Series univariate(const std::vector<int>& caps, int j, int lo, const std::vector<T>& c, int prec) {
    Series s = zero(caps);
    const std::size_t n = caps.size();
    s.lo_.assign(n, 0);
    s.top_.assign(n, 0);
    s.prec_.assign(n, kExact);
    s.lo_[static_cast<std::size_t>(j)] = lo;
    s.top_[static_cast<std::size_t>(j)] = lo + static_cast<int>(c.size()) - 1;
    s.prec_[static_cast<std::size_t>(j)] = prec;
    if (prec < kExact) s.top_[static_cast<std::size_t>(j)] = std::min(s.top_[static_cast<std::size_t>(j)], prec);
    int cnt = s.top_[static_cast<std::size_t>(j)] - lo + 1;
    if (cnt <= 0) return zero_with_prec(caps, s.prec_);
    s.data_.assign(c.begin(), c.begin() + cnt);
    s.normalize();
    return s;
  }

  // Series with the given nonzero terms and per-variable precision; terms beyond prec are dropped.
  static Series from_terms(const std::vector<int>& caps, const std::vector<std::pair<Exps, T>>& terms,
                           const std::vector<int>& prec) {
    const std::size_t n = caps.size();
    std::vector<int> mn(n, kExact), mx(n, -kExact);
    std::size_t kept = 0;
    for (const auto& [e, c] : terms) {
      bool ok = !Field<T>::is_zero(c);
      for (std::size_t j = 0; j < n && ok; ++j) ok = e[j] <= prec[j];
      if (!ok) continue;
      ++kept;
      for (std::size_t j = 0; j < n; ++j) {
        mn[j] = std::min(mn[j], e[j]);
        mx[j] = std::max(mx[j], e[j]);
      }
    }
    if (kept == 0) return zero_with_prec(caps, prec);
    Series s;
    s.caps_ = caps;
    s.prec_ = prec;
    s.lo_ = mn;
    s.top_ = mx;
    s.data_.assign(s.box_size(), Field<T>::zero());
    for (const auto& [e, c] : terms) {
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) ok = e[j] <= prec[j];
      if (ok) s.data_[s.flat(e)] += c;
    }
    s.normalize();
    return s;
  }

  int nvars() const { return static_cast<int>(caps_.size()); }
  const std::vector<int>& caps() const { return caps_; }
  bool is_zero() const { return data_.empty(); }
  int lo(int j) const { return lo_[static_cast<std::size_t>(j)]; }
  int top(int j) const { return top_[static_cast<std::size_t>(j)]; }
  int prec(int j) const { return prec_[static_cast<std::size_t>(j)]; }
  bool exact() const {
    return std::all_of(prec_.begin(), prec_.end(), [](int p) { return p >= kExact; });
  }

  T coeff(const Exps& e) const {
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] > prec_[j])
        fail(ErrorKind::TruncationInsufficient, "coefficient requested beyond known precision");
    if (data_.empty()) return Field<T>::zero();
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] < lo_[j] || e[j] > top_[j]) return Field<T>::zero();
    return data_[flat(e)];
  }

  // Nonzero terms as (exponents, coefficient).
  std::vector<std::pair<Exps, T>> terms() const {
    std::vector<std::pair<Exps, T>> out;
    if (data_.empty()) return out;
    Exps e = lo_;
    for (std::size_t idx = 0; idx < data_.size(); ++idx) {
      if (!Field<T>::is_zero(data_[idx])) out.emplace_back(e, data_[idx]);
      advance(e);
    }
    return out;
  }

  friend Series operator+(const Series& a, const Series& b) {
    const std::size_t n = a.caps_.size();
    std::vector<int> prec(n);
    for (std::size_t j = 0; j < n; ++j) prec[j] = std::min(a.prec_[j], b.prec_[j]);
    if (a.is_zero() && b.is_zero()) return zero_with_prec(a.caps_, prec);
    Series r;
    r.caps_ = a.caps_;
    r.prec_ = prec;
    r.lo_.resize(n);
    r.top_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      int lo = std::min(a.is_zero() ? kExact : a.lo_[j], b.is_zero() ? kExact : b.lo_[j]);
      int top = std::max(a.is_zero() ? -kExact : a.top_[j], b.is_zero() ? -kExact : b.top_[j]);
      r.lo_[j] = lo;
      r.top_[j] = std::min(top, prec[j]);
      if (r.top_[j] < r.lo_[j]) return zero_with_prec(a.caps_, prec);
    }
    r.data_.assign(r.box_size(), Field<T>::zero());
    r.accumulate(a);
    r.accumulate(b);
    r.normalize();
    return r;
  }

  friend Series operator-(const Series& a) {
    Series r = a;
    for (auto& v : r.data_) v = -v;
    return r;
  }
  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

  friend Series operator*(const Series& a, const Series& b) {
    const std::size_t n = a.caps_.size();
    std::vector<int> prec(n);
    for (std::size_t j = 0; j < n; ++j) {
      bool ea = a.prec_[j] >= kExact, eb = b.prec_[j] >= kExact;
      if (ea && eb) {
        prec[j] = kExact;
      } else {
        int loa = a.is_zero() ? a.prec_[j] + 1 : a.lo_[j];
        int lob = b.is_zero() ? b.prec_[j] + 1 : b.lo_[j];
        int p = kExact;
        if (!ea) p = std::min(p, sat_add(a.prec_[j], lob));
        if (!eb) p = std::min(p, sat_add(b.prec_[j], loa));
        prec[j] = std::min(p, a.caps_[j]);
      }
    }
    if (a.is_zero() || b.is_zero()) return zero_with_prec(a.caps_, prec);
    Series r;
    r.caps_ = a.caps_;
    r.prec_ = prec;
    r.lo_.resize(n);
    r.top_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      r.lo_[j] = a.lo_[j] + b.lo_[j];
      r.top_[j] = std::min(a.top_[j] + b.top_[j], prec[j]);
      if (r.top_[j] < r.lo_[j]) return zero_with_prec(a.caps_, prec);
    }
    r.data_.assign(r.box_size(), Field<T>::zero());
    auto ta = a.terms();
    auto tb = b.terms();
    Exps e(n);
    for (const auto& [ea, ca] : ta) {
      for (const auto& [eb, cb] : tb) {
        bool ok = true;
        for (std::size_t j = 0; j < n; ++j) {
          e[j] = ea[j] + eb[j];
          if (e[j] > r.top_[j]) {
            ok = false;
            break;
          }
        }
        if (ok) r.data_[r.flat(e)] += ca * cb;
      }
    }
    r.normalize();
    return r;
  }

  friend Series operator*(const T& s, const Series& a) {
    if (Field<T>::is_zero(s)) return zero_with_prec(a.caps_, a.prec_);
    Series r = a;
    for (auto& v : r.data_) v = s * v;
    return r;
  }

  // Inverse of eps^lo * (u0 + ...), u0 the coefficient at the lowest corner.
  Series inverse() const {
    const std::size_t n = caps_.size();
    if (data_.empty()) fail(ErrorKind::NonInvertible, "inverse of a zero series");
    const T& u0 = data_[0];
    if (Field<T>::is_zero(u0))
      fail(ErrorKind::NonInvertible, "series is not a monomial times a unit at its lowest corner");
    auto tu = terms();
    Series r;
    r.caps_ = caps_;
    r.prec_.resize(n);
    r.lo_.resize(n);
    r.top_.resize(n);
    if (tu.size() == 1) {
      Exps e(n);
      for (std::size_t j = 0; j < n; ++j) e[j] = -lo_[j];
      Series m = monomial(caps_, e, Field<T>::one() / u0);
      m.prec_ = prec_;
      for (std::size_t j = 0; j < n; ++j)
        if (prec_[j] < kExact) m.prec_[j] = std::min(caps_[j], prec_[j] - 2 * lo_[j]);
      return m;
    }
    std::vector<int> rel(n);
    for (std::size_t j = 0; j < n; ++j) {
      int p = prec_[j] >= kExact ? caps_[j] : std::min(caps_[j], prec_[j] - 2 * lo_[j]);
      r.prec_[j] = p;
      r.lo_[j] = -lo_[j];
      r.top_[j] = p;
      rel[j] = p - r.lo_[j];
      if (rel[j] < 0) return zero_with_prec(caps_, r.prec_);
    }
    r.data_.assign(r.box_size(), Field<T>::zero());
    // unit part: exponents relative to the corner, skipping the corner itself
    std::vector<std::pair<Exps, T>> unit;
    for (auto& [e, c] : tu) {
      Exps d(n);
      bool inside = true, corner = true;
      for (std::size_t j = 0; j < n; ++j) {
        d[j] = e[j] - lo_[j];
        if (d[j] > rel[j]) inside = false;
        if (d[j] != 0) corner = false;
      }
      if (inside && !corner) unit.emplace_back(std::move(d), c);
    }
    const T inv0 = Field<T>::one() / u0;
    Exps k(n, 0), src(n);
    const std::size_t total = r.data_.size();
    // lexicographic order over the relative box matches the storage order
    for (std::size_t idx = 0; idx < total; ++idx) {
      T acc = (idx == 0) ? Field<T>::one() : Field<T>::zero();
      for (const auto& [d, c] : unit) {
        bool ok = true;
        for (std::size_t j = 0; j < n; ++j) {
          src[j] = k[j] - d[j];
          if (src[j] < 0) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        std::size_t fi = 0;
        for (std::size_t j = 0; j < n; ++j) fi = fi * static_cast<std::size_t>(rel[j] + 1) + static_cast<std::size_t>(src[j]);
        acc -= c * r.data_[fi];
      }
      r.data_[idx] = acc * inv0;
      for (std::size_t j = n; j-- > 0;) {
        if (++k[j] <= rel[j]) break;
        k[j] = 0;
      }
    }
    r.normalize();
    return r;
  }

  Series pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    Series result = constant(caps_, Field<T>::one());
    Series base = *this;
    while (k) {
      if (k & 1) result = result * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return result;
  }

  // Coefficient of eps_j^k as a series in the remaining variables (exponent of j set to 0).
  Series extract(int j, int k) const {
    if (k > prec_[static_cast<std::size_t>(j)])
      fail(ErrorKind::TruncationInsufficient, "coefficient requested beyond known precision");
    std::vector<int> prec = prec_;
    prec[static_cast<std::size_t>(j)] = kExact;
    Series r = zero_with_prec(caps_, prec);
    if (data_.empty() || k < lo(j) || k > top(j)) return r;
    Series out;
    out.caps_ = caps_;
    out.prec_ = prec;
    out.lo_ = lo_;
    out.top_ = top_;
    out.lo_[static_cast<std::size_t>(j)] = 0;
    out.top_[static_cast<std::size_t>(j)] = 0;
    out.data_.assign(out.box_size(), Field<T>::zero());
    Exps e = lo_;
    for (std::size_t idx = 0; idx < data_.size(); ++idx) {
      if (e[static_cast<std::size_t>(j)] == k && !Field<T>::is_zero(data_[idx])) {
        Exps f = e;
        f[static_cast<std::size_t>(j)] = 0;
        out.data_[out.flat(f)] = data_[idx];
      }
      advance(e);
    }
    out.normalize();
    return out;
  }

 private:
  static Series zero_with_prec(const std::vector<int>& caps, const std::vector<int>& prec) {
    Series s = zero(caps);
    s.prec_ = prec;
    for (std::size_t j = 0; j < caps.size(); ++j) {
      s.lo_[j] = prec[j] >= kExact ? kExact : prec[j] + 1;
      s.top_[j] = s.lo_[j] - 1;
    }
    return s;
  }

  std::size_t box_size() const {
    std::size_t sz = 1;
    for (std::size_t j = 0; j < lo_.size(); ++j) sz *= static_cast<std::size_t>(top_[j] - lo_[j] + 1);
    return sz;
  }

  // last variable fastest
  std::size_t flat(const Exps& e) const {
    std::size_t fi = 0;
    for (std::size_t j = 0; j < lo_.size(); ++j)
      fi = fi * static_cast<std::size_t>(top_[j] - lo_[j] + 1) + static_cast<std::size_t>(e[j] - lo_[j]);
    return fi;
  }

  void advance(Exps& e) const {
    for (std::size_t j = e.size(); j-- > 0;) {
      if (++e[j] <= top_[j]) return;
      e[j] = lo_[j];
    }
  }

  void accumulate(const Series& a) {
    if (a.data_.empty()) return;
    Exps e = a.lo_;
    for (std::size_t idx = 0; idx < a.data_.size(); ++idx) {
      if (!Field<T>::is_zero(a.data_[idx])) {
        bool inside = true;
        for (std::size_t j = 0; j < e.size(); ++j)
          if (e[j] > top_[j]) inside = false;
        if (inside) data_[flat(e)] += a.data_[idx];
      }
      a.advance(e);
    }
  }

  // shrink the box to the nonzero support
  void normalize() {
    const std::size_t n = lo_.size();
    std::vector<int> mn(n, kExact), mx(n, -kExact);
    bool any = false;
    Exps e = lo_;
    for (std::size_t idx = 0; idx < data_.size(); ++idx) {
      if (!Field<T>::is_zero(data_[idx])) {
        any = true;
        for (std::size_t j = 0; j < n; ++j) {
          mn[j] = std::min(mn[j], e[j]);
          mx[j] = std::max(mx[j], e[j]);
        }
      }
      advance(e);
    }
    if (!any) {
      *this = zero_with_prec(caps_, prec_);
      return;
    }
    if (mn == lo_ && mx == top_) return;
    Series r;
    r.caps_ = caps_;
    r.prec_ = prec_;
    r.lo_ = mn;
    r.top_ = mx;
    r.data_.assign(r.box_size(), Field<T>::zero());
    e = lo_;
    for (std::size_t idx = 0; idx < data_.size(); ++idx) {
      if (!Field<T>::is_zero(data_[idx])) r.data_[r.flat(e)] = data_[idx];
      advance(e);
    }
    *this = std::move(r);
  }

  std::vector<int> caps_, lo_, top_, prec_;
  std::vector<T> data_;
};

using ExactSeries = Series<Rational>;

}  // namespace dwbc
