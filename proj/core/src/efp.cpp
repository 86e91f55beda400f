#include "dwbc/efp/efp.hpp"

#include <map>
#include <mutex>

namespace dwbc {

void EfpQuery::validate() const {
  if (s < 1 || s > r || r > N) fail(ErrorKind::InvalidRegion, "efp query needs 1 <= s <= r <= N");
}

namespace {

using Vars = std::vector<ExactExpr>;

Rational factorial(int n) {
  Rational f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Rational sign(int k) { return Rational(k % 2 ? -1 : 1); }

ExactExpr C(const Rational& x) { return ExactExpr(x); }

Vars variables(int from, int m) {
  Vars v;
  for (int j = 0; j < m; ++j) v.push_back(ExactExpr::var(from + j));
  return v;
}

std::size_t u(int j) { return static_cast<std::size_t>(j); }

struct Ctx {
  const BoundaryGenFamily& fam;
  EfpQuery q;
  Rational a, b, c, t, delta;
  std::vector<ExactPoly> h;

  Ctx(const EfpQuery& query, const BoundaryGenFamily& f) : fam(f), q(query) {
    q.validate();
    if (fam.max_size() < q.N) fail(ErrorKind::OutOfRange, "boundary family shorter than N");
    const auto& w = fam.weights();
    a = w.a;
    b = w.b;
    c = w.c;
    t = w.t();
    delta = w.delta();
    if (is_zero(Rational(t * t - 2 * delta * t + 1)))
      fail(ErrorKind::PoleCollision, "t^2 - 2 Delta t + 1 = 0 places a cross pole on the integration point");
    for (int m = 1; m <= q.N; ++m) h.push_back(fam.h(m));
  }

  // x_j x_k - 2 Delta x_j + 1
  ExactExpr ice(const ExactExpr& xj, const ExactExpr& xk) const { return xj * xk - C(2 * delta) * xj + 1; }
  // t^2 z_j z_k - 2 Delta t z_j + 1
  ExactExpr cross(const ExactExpr& zj, const ExactExpr& zk) const {
    return C(t * t) * zj * zk - C(2 * delta * t) * zj + 1;
  }
  ExactExpr hns(int m, int k, const Vars& args) const {
    if (k == 0) return ExactExpr(1);
    return ExactExpr::apply(hns_poly(h, m, k), args);
  }
  Vars scaled(const Vars& x, const Rational& f) const {
    Vars out;
    for (const auto& e : x) out.push_back(C(f) * e);
    return out;
  }
  // ((2 Delta t - 1) w - t) / (t (t w - 1))
  Vars v_of_w(const Vars& w) const {
    Vars out;
    for (const auto& e : w) out.push_back((C(2 * delta * t - 1) * e - C(t)) / (C(t) * (C(t) * e - 1)));
    return out;
  }
  // (t^2 z - 2 Delta t + 1) / (t^2 (z - 1))
  Vars v_of_z(const Vars& z) const {
    Vars out;
    for (const auto& e : z) out.push_back((C(t * t) * e - C(2 * delta * t - 1)) / (C(t * t) * (e - 1)));
    return out;
  }
  ExactExpr cantini(const Vars& x, const Vars& y) const {
    Vars args = x;
    args.insert(args.end(), y.begin(), y.end());
    return ExactExpr::apply(cantini_poly(static_cast<int>(x.size()), delta), args);
  }
  // Z_{s+n} Z_{N-s} a^{2s(N-s-n)} / (Z_N c^n a^{n(n-1)})
  Rational n_prefactor() const {
    const int N = q.N, s = q.s, n = q.n();
    return Rational(fam.Z(s + n) * fam.Z(N - s) * pow(a, 2L * s * (N - s - n)) /
                    (fam.Z(N) * pow(c, n) * pow(a, static_cast<long>(n) * (n - 1))));
  }
};

Rational residue_at(const ExactExpr& F, int nv, const Rational& center, int order) {
  return joint_residue(F, std::vector<Rational>(u(nv), center), std::vector<int>(u(nv), order));
}

Rational residue_at(const ExactExpr& F, const std::vector<Rational>& centers, const std::vector<int>& orders) {
  return joint_residue(F, centers, orders);
}

// ---- s-fold forms ----

Rational mir1(const Ctx& X) {
  const int s = X.q.s, r = X.q.r;
  auto z = variables(0, s);
  const Rational lin(X.t * X.t - 2 * X.delta * X.t);
  ExactExpr F = X.hns(X.q.N, s, z);
  for (int j = 0; j < s; ++j) {
    F = F * pow(C(lin) * z[u(j)] + 1, s - j - 1) / (pow(z[u(j)], r) * pow(z[u(j)] - 1, s - j));
    for (int k = j + 1; k < s; ++k) F = F * (z[u(j)] - z[u(k)]) / X.cross(z[u(j)], z[u(k)]);
  }
  return Rational(sign(s) * residue_at(F, s, Rational(0), r));
}

Rational mir2(const Ctx& X) {
  const int s = X.q.s, r = X.q.r;
  auto z = variables(0, s);
  const Rational lin(X.t * X.t - 2 * X.delta * X.t);
  Vars uz;
  for (const auto& e : z) uz.push_back(-(e - 1) / (C(lin) * e + 1));
  ExactExpr F = X.hns(X.q.N, s, z) * X.hns(s, s, uz);
  for (int j = 0; j < s; ++j) {
    F = F * pow(C(lin) * z[u(j)] + 1, s - 1) / (pow(z[u(j)], r) * pow(z[u(j)] - 1, s));
    for (int k = 0; k < s; ++k)
      if (k != j) F = F * (z[u(k)] - z[u(j)]) / X.cross(z[u(j)], z[u(k)]);
  }
  Rational pre = sign(s) * X.fam.Z(s) / (factorial(s) * pow(X.a, static_cast<long>(s) * (s - 1)) * pow(X.c, s));
  return Rational(pre * residue_at(F, s, Rational(0), r));
}

// ---- n-fold forms ----

ExactExpr final_integrand(const Ctx& X, const Vars& z) {
  const int n = X.q.n();
  ExactExpr F = X.hns(X.q.N - X.q.s, n, z) * X.hns(X.q.r, n, X.v_of_z(z));
  for (int j = 0; j < n; ++j) {
    F = F / (z[u(j)] - 1);
    for (int k = 0; k < n; ++k)
      if (k != j) F = F * (z[u(j)] - z[u(k)]) / X.cross(z[u(j)], z[u(k)]);
  }
  return F;
}

Rational final_scale(const Ctx& X) {
  const int n = X.q.n();
  return Rational(X.n_prefactor() * pow(X.t, static_cast<long>(n) * (n - 1)) / factorial(n));
}

Rational nfinal(const Ctx& X) {
  const int n = X.q.n();
  if (n == 0) return X.n_prefactor();
  auto z = variables(0, n);
  return Rational(final_scale(X) * residue_at(final_integrand(X, z), n, Rational(1), X.q.r));
}

Rational nfinal_all(const Ctx& X) {
  const int n = X.q.n();
  if (n == 0) return X.n_prefactor();
  auto xi = variables(0, n);
  Vars z;
  for (const auto& e : xi) z.push_back(1 / e);
  ExactExpr F = final_integrand(X, z);
  for (const auto& e : xi) F = F / (e * e);
  // the integrand grows like z^{N-s-1} per variable
  return Rational(final_scale(X) * residue_at(F, n, Rational(0), X.q.N - X.q.s + 1));
}

// z-dependent part of nefp2; w may be symbolic or constant
ExactExpr nefp2_z_part(const Ctx& X, const Vars& w, const Vars& z, std::optional<std::pair<int, int>> skip) {
  const int n = X.q.n(), m = X.q.N - X.q.s;
  ExactExpr F = X.hns(m, n, X.scaled(z, Rational(1) / X.t)) * X.cantini(w, z);
  for (int j = 0; j < n; ++j) {
    F = F / pow(z[u(j)], m);
    for (int k = 0; k < n; ++k) {
      F = F / (1 - w[u(j)] * z[u(k)]);
      if (k == j) continue;
      F = F * (z[u(k)] - z[u(j)]);
      if (!(skip && skip->first == j && skip->second == k)) F = F / X.ice(z[u(j)], z[u(k)]);
    }
  }
  return F;
}

// w-only part shared by nefp2 and nefp2bis
ExactExpr nefp2_w_part(const Ctx& X, const Vars& w) {
  const int n = X.q.n(), m = X.q.N - X.q.s;
  ExactExpr F = X.hns(X.q.r, n, X.v_of_w(w));
  for (int j = 0; j < n; ++j) {
    F = F / ((1 - C(X.t) * w[u(j)]) * pow(w[u(j)], m));
    for (int k = 0; k < n; ++k)
      if (k != j) F = F * (w[u(k)] - w[u(j)]) / X.ice(w[u(j)], w[u(k)]);
  }
  return F;
}

}  // namespace

// ---------------------------------------------------------------------------

const ExactMultiPoly& cantini_poly(int s, const Rational& delta) {
  static std::mutex mu;
  static std::map<std::pair<int, std::string>, ExactMultiPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(s, delta.get_str());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (s < 1) fail(ErrorKind::OutOfRange, "cantini_poly needs s >= 1");
  if (s > 4) fail(ErrorKind::SizeLimit, "cantini_poly limited to s <= 4");
  const int nv = 2 * s;
  auto x = [&](int j) { return ExactMultiPoly::variable(nv, j); };
  auto y = [&](int k) { return ExactMultiPoly::variable(nv, s + k); };
  const auto one = ExactMultiPoly::constant(nv, Rational(1));
  // row j with column m removed: prod_{k != m} (1 - x_j y_k)(x_j + y_k - 2 Delta x_j y_k)
  std::vector<std::vector<ExactMultiPoly>> row(u(s), std::vector<ExactMultiPoly>(u(s), one));
  for (int j = 0; j < s; ++j)
    for (int m = 0; m < s; ++m)
      for (int k = 0; k < s; ++k)
        if (k != m) row[u(j)][u(m)] = row[u(j)][u(m)] * (one - x(j) * y(k)) * (x(j) + y(k) - Rational(2 * delta) * x(j) * y(k));
  ExactMultiPoly num(nv);
  for_each_permutation(s, [&](const std::vector<int>& p, int sg) {
    ExactMultiPoly term = ExactMultiPoly::constant(nv, Rational(sg));
    for (int j = 0; j < s; ++j) term = term * row[u(j)][u(p[u(j)])];
    num = num + term;
  });
  for (int j = 0; j < s; ++j)
    for (int k = j + 1; k < s; ++k) {
      num = divide_by_difference(num, k, j);
      num = divide_by_difference(num, s + k, s + j);
    }
  return cache.emplace(key, std::move(num)).first->second;
}

Rational efp_mir_s(const EfpQuery& q, const BoundaryGenFamily& fam, EfpIntegral variant) {
  Ctx X(q, fam);
  return variant == EfpIntegral::Mir1 ? mir1(X) : mir2(X);
}

Rational efp_mir_n(const EfpQuery& q, const BoundaryGenFamily& fam) { return nfinal(Ctx(q, fam)); }

Rational efp_mir_n_all_poles(const EfpQuery& q, const BoundaryGenFamily& fam) { return nfinal_all(Ctx(q, fam)); }

Rational efp_by_summation(const EfpQuery& q, const BoundaryGenFamily& fam, EfpSum route, HSource source) {
  q.validate();
  if (fam.max_size() < q.N) fail(ErrorKind::OutOfRange, "boundary family shorter than N");
  auto H = [&](const RowConfig& cfg) -> Rational {
    if (source == HSource::Lattice) return row_config_probability(cfg, fam.weights());
    return Rational(psi_top_mir_new(cfg, fam) * psi_bot_mir(cfg, fam) / fam.Z(q.N));
  };
  Rational total(0);
  if (route == EfpSum::Efp) {
    for (auto& pos : combinations(1, q.r, q.s)) total += H(RowConfig(q.N, pos));
  } else {
    for (auto& tail : combinations(q.s + 1, q.N, q.n())) {
      std::vector<int> pos;
      for (int j = 1; j <= q.s; ++j) pos.push_back(j);
      pos.insert(pos.end(), tail.begin(), tail.end());
      total += H(RowConfig(q.N, pos));
    }
  }
  return total;
}

namespace efp_detail {
ExactExpr nefp2_z_integrand(const EfpQuery& q, const BoundaryGenFamily& fam, const std::vector<Rational>& w,
                            const std::vector<ExactExpr>& z, std::optional<std::pair<int, int>> skip_pair) {
  Ctx X(q, fam);
  if (static_cast<int>(w.size()) != q.n() || static_cast<int>(z.size()) != q.n())
    fail(ErrorKind::InvalidConfig, "nefp2 integrand needs n = r - s arguments");
  Vars wc;
  for (const auto& x : w) wc.push_back(C(x));
  return nefp2_z_part(X, wc, z, skip_pair);
}
}  // namespace efp_detail

// ---------------------------------------------------------------------------

namespace {

constexpr int kTraceMaxN = 4;
constexpr int kTraceMaxFold = 3;  // doubled integrals use 2 x this many variables

std::optional<Rational> s_double(const Ctx& X) {
  const int s = X.q.s, r = X.q.r;
  auto y = variables(0, s);
  auto x = variables(0, s);
  ExactExpr Y(1), Xp = X.hns(X.q.N, s, X.scaled(x, Rational(1) / X.t));
  for (int j = 0; j < s; ++j) {
    Y = Y / (pow(y[u(j)], s - 1) * pow(C(X.t) * y[u(j)] - 1, s));
    for (int k = j + 1; k < s; ++k) {
      Y = Y * (y[u(k)] - y[u(j)]) * X.ice(y[u(k)], y[u(j)]);
      Xp = Xp * (x[u(k)] - x[u(j)]) / X.ice(x[u(j)], x[u(k)]);
    }
  }
  Rational total(0);
  for (auto& rs : combinations(1, r, s)) {
    ExactExpr Fy = Y, Fx = Xp;
    for (int j = 0; j < s; ++j) {
      Fy = Fy / pow(y[u(j)], rs[u(j)]);
      Fx = Fx / pow(x[u(j)], rs[u(j)]);
    }
    total += residue_at(Fy, s, Rational(1) / X.t, s) * residue_at(Fx, std::vector<Rational>(u(s), Rational(0)), rs);
  }
  return total;
}

// y at indices 0..s-1 around 1/t, x at s..2s-1 around 0
std::pair<std::vector<Rational>, std::vector<int>> yx_points(const Ctx& X, const std::vector<int>& x_orders) {
  const int s = X.q.s;
  std::vector<Rational> centers(u(s), Rational(1) / X.t);
  centers.resize(u(2 * s), Rational(0));
  std::vector<int> orders(u(s), s);
  orders.insert(orders.end(), x_orders.begin(), x_orders.end());
  return {centers, orders};
}

std::optional<Rational> s_double_summed(const Ctx& X) {
  const int s = X.q.s, r = X.q.r;
  if (s > kTraceMaxFold) return std::nullopt;
  auto y = variables(0, s);
  auto x = variables(s, s);
  ExactExpr F = X.hns(X.q.N, s, X.scaled(x, Rational(1) / X.t));
  ExactExpr partial(1);
  std::vector<int> xo;
  for (int j = 0; j < s; ++j) {
    partial = partial * x[u(j)] * y[u(j)];
    F = F / (pow(C(X.t) * y[u(j)] - 1, s) * pow(y[u(j)], r + j) * pow(x[u(j)], r - s + j + 1) * (1 - partial));
    xo.push_back(r - s + j + 1);
    for (int k = j + 1; k < s; ++k)
      F = F * (y[u(k)] - y[u(j)]) * X.ice(y[u(k)], y[u(j)]) * (x[u(k)] - x[u(j)]) / X.ice(x[u(j)], x[u(k)]);
  }
  auto [centers, orders] = yx_points(X, xo);
  return residue_at(F, centers, orders);
}

std::optional<Rational> s_double_symmetrized(const Ctx& X) {
  const int s = X.q.s, r = X.q.r;
  if (s > kTraceMaxFold) return std::nullopt;
  auto y = variables(0, s);
  auto x = variables(s, s);
  ExactExpr F = X.hns(X.q.N, s, X.scaled(x, Rational(1) / X.t)) * X.cantini(x, y);
  for (int j = 0; j < s; ++j) {
    F = F / (pow(x[u(j)], r) * pow(C(X.t) * y[u(j)] - 1, s) * pow(y[u(j)], r + s - 1));
    for (int k = 0; k < s; ++k) F = F / (1 - x[u(j)] * y[u(k)]);
    for (int k = j + 1; k < s; ++k)
      F = F * pow(x[u(k)] - x[u(j)], 2) * pow(y[u(k)] - y[u(j)], 2) /
          (X.ice(x[u(j)], x[u(k)]) * X.ice(x[u(k)], x[u(j)]));
  }
  auto [centers, orders] = yx_points(X, std::vector<int>(u(s), r));
  Rational f = factorial(s);
  return Rational(residue_at(F, centers, orders) / (f * f));
}

std::optional<Rational> s_recovered(const Ctx& X) {
  const int s = X.q.s, r = X.q.r;
  if (s > kTraceMaxFold) return std::nullopt;
  auto x = variables(0, s);
  Vars yt(u(s), C(Rational(1) / X.t));
  ExactExpr F = X.hns(X.q.N, s, X.scaled(x, Rational(1) / X.t)) * X.cantini(x, yt);
  for (int j = 0; j < s; ++j) {
    F = F / (pow(x[u(j)], r) * pow(1 - C(Rational(1) / X.t) * x[u(j)], s));
    for (int k = 0; k < s; ++k)
      if (k != j) F = F * (x[u(j)] - x[u(k)]) / X.ice(x[u(j)], x[u(k)]);
  }
  Rational pre = pow(X.t, static_cast<long>(s) * (r - 1)) / factorial(s);
  return Rational(pre * residue_at(F, s, Rational(0), r));
}

std::optional<Rational> n_first(const Ctx& X) {
  const int n = X.q.n(), m = X.q.N - X.q.s;
  if (n == 0) return X.n_prefactor();
  if (n > kTraceMaxFold) return std::nullopt;
  auto w = variables(0, n);
  auto z = variables(n, n);
  ExactExpr F = X.hns(X.q.r, n, X.v_of_w(w)) * X.hns(m, n, X.scaled(z, Rational(1) / X.t));
  ExactExpr partial(1);
  std::vector<int> orders(u(2 * n));
  for (int j = 0; j < n; ++j) {
    partial = partial * w[u(j)] * z[u(j)];
    const int e = m - n + j + 1;
    F = F / ((1 - C(X.t) * w[u(j)]) * pow(w[u(j)] * z[u(j)], e) * (1 - partial));
    orders[u(j)] = orders[u(n + j)] = e;
    for (int k = j + 1; k < n; ++k)
      F = F * (w[u(k)] - w[u(j)]) * (z[u(k)] - z[u(j)]) / (X.ice(w[u(j)], w[u(k)]) * X.ice(z[u(j)], z[u(k)]));
  }
  return Rational(X.n_prefactor() * residue_at(F, std::vector<Rational>(u(2 * n), Rational(0)), orders));
}

std::optional<Rational> n_symmetrized(const Ctx& X) {
  const int n = X.q.n(), m = X.q.N - X.q.s;
  if (n == 0) return X.n_prefactor();
  if (n > kTraceMaxFold) return std::nullopt;
  auto w = variables(0, n);
  auto z = variables(n, n);
  ExactExpr F = nefp2_w_part(X, w) * nefp2_z_part(X, w, z, std::nullopt);
  Rational f = factorial(n);
  return Rational(X.n_prefactor() * residue_at(F, 2 * n, Rational(0), m) / (f * f));
}

// z_j taken at the simple poles 1/w_{sigma(j)}.  Each factor (z_k - z_j) of the double
// product is paired with 1 - w_{sigma(k)} z_j; the pair reduces to 1 / w_{sigma(k)}.
// The deformed contours come out clockwise: small circle at 0 plus them bounds no pole.
std::optional<Rational> n_deformed(const Ctx& X, bool clockwise = true) {
  const int n = X.q.n(), m = X.q.N - X.q.s;
  if (n == 0) return X.n_prefactor();
  if (n > kTraceMaxFold) return std::nullopt;
  auto w = variables(0, n);
  ExactExpr wpart = nefp2_w_part(X, w);
  Rational total(0);
  for_each_permutation(n, [&](const std::vector<int>& sg, int) {
    Vars z;
    for (int j = 0; j < n; ++j) z.push_back(1 / w[u(sg[u(j)])]);
    ExactExpr F = wpart * X.hns(m, n, X.scaled(z, Rational(1) / X.t)) * X.cantini(w, z);
    for (int j = 0; j < n; ++j) {
      F = F * (-1 / w[u(sg[u(j)])]) / pow(z[u(j)], m);
      for (int k = 0; k < n; ++k)
        if (k != j) F = F / (w[u(sg[u(k)])] * X.ice(z[u(j)], z[u(k)]));
    }
    total += residue_at(F, n, Rational(0), m + n);
  });
  Rational f = factorial(n);
  if (clockwise) total *= sign(n);
  return Rational(X.n_prefactor() * total / (f * f));
}

std::optional<Rational> n_after_symmint(const Ctx& X) {
  const int n = X.q.n(), m = X.q.N - X.q.s;
  if (n == 0) return X.n_prefactor();
  if (n > kTraceMaxFold) return std::nullopt;
  auto w = variables(0, n);
  Vars winv, tw;
  for (const auto& e : w) {
    winv.push_back(1 / e);
    tw.push_back(1 / (C(X.t) * e));
  }
  ExactExpr F = X.hns(X.q.r, n, X.v_of_w(w)) * X.cantini(w, winv) * X.hns(m, n, tw);
  for (int j = 0; j < n; ++j) {
    F = F * pow(w[u(j)], n - 2) / (1 - C(X.t) * w[u(j)]);
    for (int k = 0; k < n; ++k)
      if (k != j) F = F * (w[u(k)] - w[u(j)]) / pow(X.ice(w[u(j)], w[u(k)]), 2);
  }
  return Rational(X.n_prefactor() * residue_at(F, n, Rational(0), m + n) / factorial(n));
}

std::optional<Rational> n_reduced(const Ctx& X) {
  const int n = X.q.n(), m = X.q.N - X.q.s;
  if (n == 0) return X.n_prefactor();
  auto w = variables(0, n);
  Vars tw;
  for (const auto& e : w) tw.push_back(1 / (C(X.t) * e));
  ExactExpr F = X.hns(X.q.r, n, X.v_of_w(w)) * X.hns(m, n, tw);
  for (int j = 0; j < n; ++j) {
    F = F / (w[u(j)] * (1 - C(X.t) * w[u(j)]));
    for (int k = 0; k < n; ++k)
      if (k != j) F = F * (w[u(k)] - w[u(j)]) / X.ice(w[u(j)], w[u(k)]);
  }
  return Rational(X.n_prefactor() * residue_at(F, n, Rational(0), m + 1) / factorial(n));
}

void record(std::vector<TraceStep>& chain, const std::string& label, std::optional<Rational> v) {
  chain.push_back({label, std::move(v)});
}

}  // namespace

EfpTrace efp_double_contour_trace(const EfpQuery& q, const BoundaryGenFamily& fam, bool strict) {
  Ctx X(q, fam);
  if (q.N > kTraceMaxN) fail(ErrorKind::SizeLimit, "efp trace is limited to N <= 4");
  EfpTrace tr;
  tr.query = q;
  record(tr.s_chain, "efp", efp_by_summation(q, fam, EfpSum::Efp));
  record(tr.s_chain, "efpdoubleMIR", s_double(X));
  record(tr.s_chain, "efpdoubleMIR2", s_double_summed(X));
  record(tr.s_chain, "efpdoubleMIR3", s_double_symmetrized(X));
  record(tr.s_chain, "efpMIR2recovered", s_recovered(X));
  record(tr.s_chain, "efpMIR2", mir2(X));
  record(tr.s_chain, "efpMIR1", mir1(X));

  record(tr.n_chain, "efpn", efp_by_summation(q, fam, EfpSum::Efpn));
  record(tr.n_chain, "nefp1", n_first(X));
  record(tr.n_chain, "nefp2", n_symmetrized(X));
  record(tr.n_chain, "nefp2bis", n_deformed(X));
  record(tr.n_chain, "nefp3", n_after_symmint(X));
  record(tr.n_chain, "nefp3_reduced", n_reduced(X));
  record(tr.n_chain, "nefp_final_all_poles", nfinal_all(X));
  record(tr.n_chain, "nefp_final", nfinal(X));

  const Rational head = *tr.s_chain.front().value;
  auto scan = [&](const std::vector<TraceStep>& chain, const char* name) {
    for (const auto& st : chain)
      if (st.value && *st.value != head && !tr.first_break) tr.first_break = std::string(name) + ":" + st.label;
  };
  scan(tr.s_chain, "s");
  scan(tr.n_chain, "n");
  if (strict && tr.first_break) fail(ErrorKind::ChainBreak, "derivation chain breaks at " + *tr.first_break);
  return tr;
}

namespace efp_detail {
std::optional<Rational> nefp2bis(const EfpQuery& q, const BoundaryGenFamily& fam, bool clockwise) {
  return n_deformed(Ctx(q, fam), clockwise);
}
}  // namespace efp_detail

}  // namespace dwbc
