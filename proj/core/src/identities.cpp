#include "dwbc/identities/identities.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "dwbc/hankel/hankel.hpp"

namespace dwbc {

namespace {

std::size_t u(int j) { return static_cast<std::size_t>(j); }

void guard(const Rational& d, const char* what) {
  if (is_zero(d)) fail(ErrorKind::SamplePoleHit, what);
}

void near(Complex d, const char* what) {
  if (std::abs(d) < kNearDegenerate) fail(ErrorKind::NearDegenerate, what);
}

NumericCheck numeric(Complex l, Complex r) {
  NumericCheck out{l, r, 0.0};
  const double scale = std::max(std::abs(l), std::abs(r));
  out.residual = scale == 0 ? 0.0 : std::abs(l - r) / scale;
  return out;
}

Complex z_of(std::vector<Complex> lambdas, std::vector<Complex> nus, Complex eta) {
  if (lambdas.empty()) return 1.0;
  return ik_determinant(TrigParams{std::move(lambdas), std::move(nus), eta});
}

Rational vandermonde(const std::vector<Rational>& v) {
  Rational p(1);
  for (std::size_t j = 0; j < v.size(); ++j)
    for (std::size_t k = j + 1; k < v.size(); ++k) p *= v[k] - v[j];
  return p;
}

// Newton divided differences; returns the coefficients
std::vector<Rational> newton(const std::vector<Rational>& x, std::vector<Rational> y) {
  const std::size_t n = x.size();
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) y[i] = Rational((y[i] - y[i - 1]) / (x[i] - x[i - k]));
  return y;
}

Rational lagrange_at_zero(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  Rational total(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rational w(1);
    for (std::size_t j = 0; j < x.size(); ++j)
      if (j != i) w *= Rational(-x[j] / (x[i] - x[j]));
    total += w * y[i];
  }
  return total;
}

}  // namespace

NumericCheck check_kmst(const TrigParams& p, bool as_printed) {
  const int s = p.size();
  if (s < 1 || s > 4 || static_cast<int>(p.nus.size()) != s) fail(ErrorKind::OutOfRange, "kmst needs 1 <= s <= 4 lambdas and nus");
  Trig tr{p.eta};
  for (int j = 0; j < s; ++j)
    for (int k = j + 1; k < s; ++k) {
      near(tr.d(p.lambdas[u(k)], p.lambdas[u(j)]), "coincident lambdas");
      near(tr.d(p.nus[u(k)], p.nus[u(j)]), "coincident nus");
    }
  Complex lhs = 0;
  for_each_permutation(s, [&](const std::vector<int>& sg, int sign) {
    auto L = [&](int j) { return p.lambdas[u(sg[u(j)])]; };
    Complex term = static_cast<double>(sign);
    for (int j = 0; j < s; ++j) {
      for (int k = 0; k < j; ++k) term *= tr.a(L(j), p.nus[u(k)]);
      for (int k = j + 1; k < s; ++k) term *= tr.b(L(j), p.nus[u(k)]);
      for (int k = j + 1; k < s; ++k) term /= tr.e(L(k), L(j));
    }
    lhs += term;
  });
  Complex rhs = z_of(p.lambdas, p.nus, p.eta);
  for (int j = 0; j < s; ++j)
    for (int k = 0; k < s; ++k) {
      if (j < k) rhs *= as_printed ? tr.d(p.lambdas[u(k)], p.lambdas[u(j)]) : tr.d(p.lambdas[u(j)], p.lambdas[u(k)]);
      rhs /= tr.e(p.lambdas[u(k)], p.lambdas[u(j)]);
    }
  return numeric(lhs, rhs);
}

ExactCheck check_cantini(const Rational& delta, const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const int s = static_cast<int>(xs.size());
  if (s < 1 || s > 4 || ys.size() != xs.size()) fail(ErrorKind::OutOfRange, "cantini needs 1 <= s <= 4 and equal set sizes");
  auto ice = [&](const Rational& p, const Rational& q) { return Rational(p * q - 2 * delta * q + 1); };
  Rational lhs(0);
  for_each_permutation(s, [&](const std::vector<int>& sx, int gx) {
    for_each_permutation(s, [&](const std::vector<int>& sy, int gy) {
      auto X = [&](int j) -> const Rational& { return xs[u(sx[u(j)])]; };
      auto Y = [&](int j) -> const Rational& { return ys[u(sy[u(j)])]; };
      Rational term(gx * gy), run(1);
      for (int j = 0; j < s; ++j) {
        run *= X(j) * Y(j);
        Rational den = 1 - run;
        guard(den, "1 - prod x y vanishes");
        term *= pow(Rational(X(j) * Y(j)), s - 1 - j) / den;
        for (int k = j + 1; k < s; ++k) term *= ice(X(j), X(k)) * ice(Y(j), Y(k));
      }
      lhs += term;
    });
  });
  Matrix<Rational> psi(u(s), std::vector<Rational>(u(s)));
  Rational pre(1);
  for (int j = 0; j < s; ++j)
    for (int k = 0; k < s; ++k) {
      Rational one_minus = 1 - xs[u(j)] * ys[u(k)];
      Rational lin = xs[u(j)] + ys[u(k)] - 2 * delta * xs[u(j)] * ys[u(k)];
      guard(one_minus, "x y = 1");
      guard(lin, "x + y - 2 Delta x y = 0");
      psi[u(j)][u(k)] = Rational(1 / (one_minus * lin));
      pre *= lin;
    }
  return {lhs, Rational(pre * determinant(psi))};
}

Rational cantini_p_value(const Rational& delta, const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const int s = static_cast<int>(xs.size());
  Matrix<Rational> psi(u(s), std::vector<Rational>(u(s)));
  Rational num(1), den = vandermonde(xs) * vandermonde(ys);
  guard(den, "coincident points");
  for (int j = 0; j < s; ++j)
    for (int k = 0; k < s; ++k) {
      Rational one_minus = 1 - xs[u(j)] * ys[u(k)];
      Rational lin = xs[u(j)] + ys[u(k)] - 2 * delta * xs[u(j)] * ys[u(k)];
      guard(one_minus, "x y = 1");
      guard(lin, "x + y - 2 Delta x y = 0");
      psi[u(j)][u(k)] = Rational(1 / (one_minus * lin));
      num *= lin * one_minus;
    }
  return Rational(num * determinant(psi) / den);
}

Rational cantini_p_limit(const Rational& delta, const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const int s = static_cast<int>(xs.size());
  const std::size_t need = u(s * (s - 1) + 1);
  std::vector<Rational> nodes, vals;
  for (int i = 1; nodes.size() < need; ++i) {
    if (i > 50 * static_cast<int>(need)) fail(ErrorKind::SamplePoleHit, "no regular interpolation nodes");
    Rational eps(i, 211);
    eps.canonicalize();
    std::vector<Rational> y = ys;
    for (int k = 0; k < s; ++k) y[u(k)] += eps * (k + 1);
    try {
      vals.push_back(cantini_p_value(delta, xs, y));
      nodes.push_back(eps);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SamplePoleHit) throw;
    }
  }
  return lagrange_at_zero(nodes, vals);
}

int cantini_p_max_degree(const Rational& delta, const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const int s = static_cast<int>(xs.size());
  int worst = -1;
  for (int v = 0; v < 2 * s; ++v) {
    std::vector<Rational> nodes, vals;
    for (int i = 0; nodes.size() < u(2 * s + 1); ++i) {
      if (i > 40 * s) fail(ErrorKind::SamplePoleHit, "no regular interpolation nodes");
      std::vector<Rational> x = xs, y = ys;
      Rational& slot = v < s ? x[u(v)] : y[u(v - s)];
      slot += Rational(i);
      try {
        vals.push_back(cantini_p_value(delta, x, y));
        nodes.push_back(slot);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::SamplePoleHit) throw;
      }
    }
    auto co = newton(nodes, vals);
    int deg = -1;
    for (int k = 0; k < static_cast<int>(co.size()); ++k)
      if (!is_zero(co[u(k)])) deg = k;
    worst = std::max(worst, deg);
  }
  return worst;
}

ExactCheck check_psxx(const Rational& delta, const std::vector<Rational>& xs) {
  const int s = static_cast<int>(xs.size());
  std::vector<Rational> ys;
  for (const auto& x : xs) {
    guard(x, "x = 0");
    ys.emplace_back(1 / x);
  }
  Rational rhs(1);
  for (int j = 0; j < s; ++j) {
    rhs /= pow(xs[u(j)], s - 1);
    for (int k = 0; k < s; ++k)
      if (k != j) rhs *= xs[u(j)] * xs[u(k)] - 2 * delta * xs[u(j)] + 1;
  }
  return {cantini_p_limit(delta, xs, ys), rhs};
}

Rational u_of_z(const WeightTriple& w, const Rational& z) {
  const Rational t = w.t(), delta = w.delta();
  Rational den = (t * t - 2 * delta * t) * z + 1;
  guard(den, "u(z) has a pole");
  return Rational(-(z - 1) / den);
}

ExactCheck check_whom(const WeightTriple& w, const std::vector<Rational>& zs) {
  const int s = static_cast<int>(zs.size());
  if (s < 1) fail(ErrorKind::OutOfRange, "whom needs s >= 1");
  const Rational t = w.t();
  std::vector<Rational> xs, ys(u(s), Rational(1 / t)), us;
  Rational lhs_den(1);
  for (const auto& z : zs) {
    guard(z - 1, "z = 1");
    xs.emplace_back(t * z);
    us.push_back(u_of_z(w, z));
    guard(us.back(), "u = 0");
    lhs_den *= pow(Rational(1 - z), s);
  }
  Rational lhs = cantini_p_limit(w.delta(), xs, ys) / lhs_den;
  BoundaryGenFamily fam(w, s);
  Rational rhs = fam.Z(s) / (pow(w.c, s) * pow(w.b, s * (s - 1)));
  if (s % 2) rhs = -rhs;
  for (int j = 0; j < s; ++j) rhs /= (zs[u(j)] - 1) * pow(us[u(j)], s - 1);
  rhs *= build_hNs(fam, s, s, us);
  return {lhs, rhs};
}

NumericCheck check_bigid(const std::vector<int>& r, const TrigParams& p) {
  const int s = static_cast<int>(r.size());
  if (s < 1 || static_cast<int>(p.nus.size()) != s) fail(ErrorKind::OutOfRange, "bigid needs s nus");
  for (int j = 0; j < s; ++j)
    if (r[u(j)] < 1 || (j > 0 && r[u(j)] <= r[u(j - 1)])) fail(ErrorKind::InvalidConfig, "positions must increase from 1");
  if (r.back() > p.size()) fail(ErrorKind::OutOfRange, "not enough lambdas");
  Trig tr{p.eta};
  auto Lm = [&](int beta) { return p.lambdas[u(beta - 1)]; };  // 1-based
  for (int j = 1; j <= r.back(); ++j)
    for (int k = j + 1; k <= r.back(); ++k) near(tr.d(Lm(j), Lm(k)), "coincident lambdas");
  for (int j = 0; j < s; ++j)
    for (int k = j + 1; k < s; ++k) near(tr.d(p.nus[u(j)], p.nus[u(k)]), "coincident nus");

  Complex lhs = 0;
  for_each_permutation(s, [&](const std::vector<int>& sg, int sign) {
    auto Nu = [&](int j) { return p.nus[u(sg[u(j)])]; };
    Complex term = static_cast<double>(sign);
    for (int j = 0; j < s; ++j) {
      for (int beta = 1; beta < r[u(j)]; ++beta) term *= tr.b(Lm(beta), Nu(j)) / tr.a(Lm(beta), Nu(j));
      term /= tr.a(Lm(r[u(j)]), Nu(j));
      for (int k = j + 1; k < s; ++k) term *= tr.e(Nu(j), Nu(k));
    }
    lhs += term;
  });
  lhs *= std::pow(tr.c(), s);
  for (int j = 0; j < s; ++j)
    for (int k = j + 1; k < s; ++k) lhs /= tr.d(p.nus[u(j)], p.nus[u(k)]);

  Complex rhs = 0;
  for_each_nested(r, [&](const std::vector<int>& al) {
    std::vector<Complex> ls;
    for (int a : al) ls.push_back(Lm(a));
    Complex term = z_of(ls, p.nus, p.eta);
    for (int j = 0; j < s; ++j) {
      for (int k = 0; k < s; ++k) term /= tr.a(Lm(al[u(j)]), p.nus[u(k)]);
      for (int beta = 1; beta <= r[u(j)]; ++beta) {
        if (std::find(al.begin(), al.begin() + j + 1, beta) != al.begin() + j + 1) continue;
        term /= tr.d(Lm(al[u(j)]), Lm(beta));
      }
      for (int beta = 1; beta < r[u(j)]; ++beta) term *= tr.e(Lm(al[u(j)]), Lm(beta));
      for (int k = j + 1; k < s; ++k) term /= tr.e(Lm(al[u(k)]), Lm(al[u(j)]));
    }
    rhs += term;
  });
  return numeric(lhs, rhs);
}

NumericCheck check_c4(const TrigParams& p) {
  const int s = p.size();
  if (s < 1 || static_cast<int>(p.nus.size()) != s) fail(ErrorKind::OutOfRange, "c4 needs s lambdas and s nus");
  Trig tr{p.eta};
  for (int j = 0; j < s; ++j)
    for (int k = j + 1; k < s; ++k) near(tr.d(p.nus[u(j)], p.nus[u(k)]), "coincident nus");
  Complex lhs = 0;
  for_each_permutation(s, [&](const std::vector<int>& sg, int sign) {
    auto Nu = [&](int j) { return p.nus[u(sg[u(j)])]; };
    Complex term = static_cast<double>(sign);
    for (int j = 0; j < s; ++j)
      for (int k = j + 1; k < s; ++k)
        term *= tr.a(p.lambdas[u(k)], Nu(j)) * tr.b(p.lambdas[u(j)], Nu(k)) * tr.e(Nu(j), Nu(k));
    lhs += term;
  });
  lhs *= std::pow(tr.c(), s);
  for (int j = 0; j < s; ++j)
    for (int k = j + 1; k < s; ++k) lhs /= tr.d(p.nus[u(j)], p.nus[u(k)]);
  return numeric(lhs, z_of(p.lambdas, p.nus, p.eta));
}

NumericCheck check_tangent(int r, const TrigParams& p) {
  const int s = static_cast<int>(p.nus.size());
  if (s < 1 || r < s || p.size() < r) fail(ErrorKind::OutOfRange, "tangent needs s <= r <= number of lambdas");
  Trig tr{p.eta};
  auto Lm = [&](int beta) { return p.lambdas[u(beta - 1)]; };
  auto Nu = [&](int l) { return p.nus[u(l - 1)]; };
  for (int j = 1; j <= r; ++j)
    for (int k = j + 1; k <= r; ++k) near(tr.d(Lm(j), Lm(k)), "coincident lambdas");
  for (int j = 1; j <= s; ++j)
    for (int k = j + 1; k <= s; ++k) near(tr.d(Nu(j), Nu(k)), "coincident nus");

  Complex lhs = 0;
  for (int l = 1; l <= s; ++l) {
    Complex term = 1;
    for (int j = 1; j <= s; ++j)
      if (j != l) term *= tr.e(Nu(j), Nu(l)) / tr.d(Nu(j), Nu(l));
    for (int k = 1; k <= s; ++k)
      if (k != l) term *= tr.a(Lm(s), Nu(k));
    for (int beta = 1; beta < r; ++beta) term *= tr.b(Lm(beta), Nu(l));
    for (int beta = s + 1; beta <= r; ++beta) term /= tr.a(Lm(beta), Nu(l));
    // Z_{s-1} with lambda_s and nu_l removed
    std::vector<Complex> ls(p.lambdas.begin(), p.lambdas.begin() + s - 1), ns;
    for (int k = 1; k <= s; ++k)
      if (k != l) ns.push_back(Nu(k));
    lhs += term * z_of(ls, ns, p.eta);
  }

  Complex rhs = 0;
  for (int al = s; al <= r; ++al) {
    Complex term = 1;
    for (int k = 1; k <= s; ++k) term *= tr.a(Lm(s), Nu(k)) / tr.a(Lm(al), Nu(k));
    for (int beta = s; beta <= r; ++beta)
      if (beta != al) term *= tr.e(Lm(al), Lm(beta)) / tr.d(Lm(al), Lm(beta));
    term /= tr.e(Lm(al), Lm(r));
    std::vector<Complex> ls(p.lambdas.begin(), p.lambdas.begin() + s - 1);
    ls.push_back(Lm(al));
    rhs += term * z_of(ls, p.nus, p.eta);
  }
  return numeric(lhs, rhs);
}

ExactCheck check_hierarchy(int n, const WeightTriple& w) {
  if (n < 2) fail(ErrorKind::OutOfRange, "hierarchy needs N >= 2");
  BoundaryGenFamily fam(w, n);
  const Rational t = w.t(), delta = w.delta();
  const ExactPoly& hn = fam.h(n);
  Rational prev = fam.h(n - 1).derivative()(Rational(1));
  return {hn.coeff(1), Rational((t * t + (1 - 2 * delta * t + t * t) * prev) * hn.coeff(0))};
}

ExactCheck check_hierarchy_second(int n, const WeightTriple& w) {
  if (n < 3) fail(ErrorKind::OutOfRange, "second-order hierarchy needs N >= 3");
  BoundaryGenFamily fam(w, n);
  EfpQuery q{n, 3, 2};
  return {efp_mir_s(q, fam), efp_mir_n(q, fam)};
}

// ---- suites ----

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(Complex v) {
  if (v.imag() == 0) return fmt(v.real());
  return fmt(v.real()) + (v.imag() < 0 ? "" : "+") + fmt(v.imag()) + "i";
}

struct Sampler {
  std::mt19937_64 rng;

  Rational rational(bool allow_negative = true) {
    std::uniform_int_distribution<long> num(allow_negative ? -64 : 1, 64), den(1, 64);
    long p = 0;
    while (p == 0) p = num(rng);
    Rational q(p, den(rng));
    q.canonicalize();
    return q;
  }

  std::vector<Rational> rationals(int n) {
    std::vector<Rational> v;
    for (int i = 0; i < n; ++i) v.push_back(rational());
    return v;
  }

  WeightTriple weights() {
    // any positive triple; c kept below a + b so that |Delta| stays moderate
    return WeightTriple(rational(false), rational(false), rational(false));
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

  // real parameters with pairwise separation >= 0.05 within each set
  std::vector<Complex> separated(int n, double lo, double hi) {
    for (;;) {
      std::vector<double> v;
      for (int i = 0; i < n; ++i) v.push_back(uniform(lo, hi));
      auto w = v;
      std::sort(w.begin(), w.end());
      bool ok = true;
      for (std::size_t i = 1; i < w.size(); ++i) ok = ok && w[i] - w[i - 1] >= 0.05;
      if (ok) return {v.begin(), v.end()};
    }
  }

  TrigParams params(int nl, int nn) {
    TrigParams p;
    p.eta = uniform(0.25, 0.6);
    p.lambdas = separated(nl, 0.9, 2.4);
    p.nus = separated(nn, -0.4, 0.4);
    return p;
  }
};

IdentityResult tag(std::string name, bool exact, int N, int s = 0, int n = 0) {
  IdentityResult r;
  r.name = std::move(name);
  r.exact = exact;
  r.N = N;
  r.s = s;
  r.n = n;
  return r;
}

template <class F>
void attempt(std::vector<IdentityResult>& out, IdentityResult base, F&& body) {
  try {
    body(base);
  } catch (const Error& e) {
    base.pass = false;
    base.error = std::string(e.name()) + ": " + e.what();
  }
  out.push_back(std::move(base));
}

void record(IdentityResult& r, const ExactCheck& c) {
  r.exact = true;
  r.lhs = to_string(c.lhs);
  r.rhs = to_string(c.rhs);
  r.residual = c.holds() ? 0.0 : 1.0;
  r.pass = c.holds();
}

void record(IdentityResult& r, const NumericCheck& c, double tol) {
  r.exact = false;
  r.lhs = fmt(c.lhs);
  r.rhs = fmt(c.rhs);
  r.residual = c.residual;
  r.pass = c.residual <= tol;
}

// retry draws that land on a removable pole
template <class Draw>
auto redraw(Draw&& draw) {
  for (int i = 0;; ++i) {
    try {
      return draw();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SamplePoleHit && e.kind() != ErrorKind::NearDegenerate) throw;
      if (i > 100) throw;
    }
  }
}

void suite_kmst(std::vector<IdentityResult>& out, Sampler& S, const SuiteOptions& o) {
  for (int s = 1; s <= 4; ++s)
    for (int t = 0; t < o.trials; ++t)
      attempt(out, tag("kmst", false, 0, s), [&](IdentityResult& r) {
        record(r, redraw([&] { return check_kmst(S.params(s, s)); }), o.tolerance);
      });
}

void suite_cantini(std::vector<IdentityResult>& out, Sampler& S, const SuiteOptions& o) {
  for (int s = 1; s <= 4; ++s)
    for (int t = 0; t < o.trials; ++t) {
      attempt(out, tag("cantini", true, 0, s), [&](IdentityResult& r) {
        record(r, redraw([&] { return check_cantini(S.rational(), S.rationals(s), S.rationals(s)); }));
      });
      attempt(out, tag("psxx", true, 0, s), [&](IdentityResult& r) {
        record(r, redraw([&] { return check_psxx(S.rational(), S.rationals(s)); }));
      });
    }
  for (int s = 1; s <= 4; ++s)
    for (int t = 0; t < std::min(o.trials, 3); ++t)
      attempt(out, tag("wpoly_degree", true, 0, s), [&](IdentityResult& r) {
        int deg = redraw([&] { return cantini_p_max_degree(S.rational(), S.rationals(s), S.rationals(s)); });
        r.lhs = std::to_string(deg);
        r.rhs = "<= " + std::to_string(s - 1);
        r.pass = deg <= s - 1;
        r.residual = r.pass ? 0.0 : 1.0;
      });
  for (int s = 1; s <= 3; ++s)
    for (int t = 0; t < o.trials; ++t)
      attempt(out, tag("whom", true, 0, s), [&](IdentityResult& r) {
        record(r, redraw([&] { return check_whom(S.weights(), S.rationals(s)); }));
      });
}

std::vector<int> random_positions(Sampler& S, int s, int top) {
  std::vector<int> all;
  for (int i = 1; i <= top; ++i) all.push_back(i);
  std::shuffle(all.begin(), all.end(), S.rng);
  std::vector<int> r(all.begin(), all.begin() + s);
  std::sort(r.begin(), r.end());
  return r;
}

void suite_bigid(std::vector<IdentityResult>& out, Sampler& S, const SuiteOptions& o) {
  for (int s = 1; s <= 3; ++s)
    for (int t = 0; t < o.trials; ++t) {
      auto r = random_positions(S, s, s + 3);
      attempt(out, tag("bigid", false, r.back(), s), [&](IdentityResult& res) {
        record(res, redraw([&] { return check_bigid(r, S.params(r.back(), s)); }), o.tolerance);
      });
    }
}

void suite_c4(std::vector<IdentityResult>& out, Sampler& S, const SuiteOptions& o) {
  for (int s = 1; s <= 3; ++s)
    for (int t = 0; t < o.trials; ++t)
      attempt(out, tag("c4", false, 0, s), [&](IdentityResult& r) {
        record(r, redraw([&] { return check_c4(S.params(s, s)); }), o.tolerance);
      });
}

void suite_tangent(std::vector<IdentityResult>& out, Sampler& S, const SuiteOptions& o) {
  for (int s = 1; s <= 3; ++s)
    for (int t = 0; t < o.trials; ++t) {
      const int r = s + t % 4;
      attempt(out, tag("tangent", false, r, s), [&](IdentityResult& res) {
        record(res, redraw([&] { return check_tangent(r, S.params(r, s)); }), o.tolerance);
      });
    }
}

void suite_hierarchy(std::vector<IdentityResult>& out, Sampler& S, const SuiteOptions& o) {
  std::vector<WeightTriple> ws{WeightTriple(), WeightTriple(Rational(2), Rational(3), Rational(4))};
  for (int t = 0; t < std::min(o.trials, 2); ++t) ws.push_back(S.weights());
  for (const auto& w : ws) {
    for (int n = 2; n <= 10; ++n)
      attempt(out, tag("hierarchy_first", true, n), [&](IdentityResult& r) { record(r, check_hierarchy(n, w)); });
    for (int n = 3; n <= 6; ++n)
      attempt(out, tag("hierarchy_second", true, n, 2, 1), [&](IdentityResult& r) { record(r, check_hierarchy_second(n, w)); });
  }
}

void suite_crossing(std::vector<IdentityResult>& out, Sampler& S, const SuiteOptions& o) {
  for (int t = 0; t < std::min(o.trials, 3); ++t) {
    const WeightTriple w = S.weights();
    for (int n = 1; n <= 4; ++n)
      for (int s = 0; s <= n; ++s)
        for (auto& cfg : all_row_configs(n, s))
          attempt(out, tag("crossing_psi", true, n, s), [&](IdentityResult& r) {
            record(r, ExactCheck{psi_top(cfg, w), psi_bot(cfg.complement_config(), w.swapped())});
          });
  }
  const double pi = std::acos(-1.0);
  for (int t = 0; t < o.trials; ++t) {
    const double lambda = S.uniform(0.8, 2.3), eta = S.uniform(0.25, 0.6);
    attempt(out, tag("crossing_K", false, 6), [&](IdentityResult& r) {
      auto f = build_ortho_family(6, lambda, eta), g = build_ortho_family(6, pi - lambda, eta);
      double worst = 0;
      for (int n = 0; n < 6; ++n)
        for (int m = 0; m <= n; ++m) {
          const double x = f.K[u(n)][u(m)], y = g.K[u(n)][u(m)];
          worst = std::max(worst, std::abs(y - ((n + m) % 2 ? -x : x)) / std::max(1.0, std::abs(x)));
        }
      r.lhs = fmt(lambda);
      r.rhs = fmt(eta);
      r.residual = worst;
      r.pass = worst <= 1e-9;
    });
  }
}

void suite_claim(std::vector<IdentityResult>& out, Sampler& S, const SuiteOptions& o) {
  for (int n = 1; n <= 6; ++n)
    for (int t = 0; t < o.trials; ++t) {
      const double lambda = S.uniform(0.8, 2.3), eta = S.uniform(0.25, 0.6);
      std::vector<double> co;
      const int deg = t % 4;
      for (int k = 0; k <= deg; ++k) co.push_back(S.uniform(-1.0, 1.0));
      attempt(out, tag("claim", false, n), [&](IdentityResult& r) {
        auto c = verify_claim(n, lambda, eta, Poly<double>(co));
        r.lhs = fmt(c.lhs);
        r.rhs = fmt(c.rhs);
        r.residual = c.residual / std::max(1.0, std::abs(c.rhs));
        r.pass = r.residual <= 1e-7;
      });
    }
}

}  // namespace

const std::vector<std::string>& identity_suite_names() {
  static const std::vector<std::string> names{"kmst", "cantini", "bigid", "c4", "tangent", "hierarchy", "crossing", "claim"};
  return names;
}

std::vector<IdentityResult> run_identity_suite(const std::string& suite, const SuiteOptions& opt) {
  if (opt.trials < 1) fail(ErrorKind::OutOfRange, "trials must be positive");
  std::vector<IdentityResult> out;
  auto one = [&](const std::string& name) {
    // each suite gets its own stream so results do not depend on which suites run
    Sampler S{std::mt19937_64(opt.seed ^ std::hash<std::string>{}(name))};
    if (name == "kmst") suite_kmst(out, S, opt);
    else if (name == "cantini") suite_cantini(out, S, opt);
    else if (name == "bigid") suite_bigid(out, S, opt);
    else if (name == "c4") suite_c4(out, S, opt);
    else if (name == "tangent") suite_tangent(out, S, opt);
    else if (name == "hierarchy") suite_hierarchy(out, S, opt);
    else if (name == "crossing") suite_crossing(out, S, opt);
    else if (name == "claim") suite_claim(out, S, opt);
    else fail(ErrorKind::InvalidConfig, "unknown suite '" + name + "'");
  };
  if (suite == "all")
    for (const auto& n : identity_suite_names()) one(n);
  else
    one(suite);
  return out;
}

}  // namespace dwbc
