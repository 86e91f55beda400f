#include <numeric>

#include <Eigen/Dense>

#include "dwbc/bethe/bethe.hpp"
#include "dwbc/exact/residue.hpp"

namespace dwbc {

namespace {

Complex minor_det(const TrigParams& p, const std::vector<int>& removed_rows, int col_lo, int col_hi) {
  const int n = p.size();
  Trig tr{p.eta};
  std::vector<int> rows;
  for (int al = 1; al <= n; ++al)
    if (std::find(removed_rows.begin(), removed_rows.end(), al) == removed_rows.end()) rows.push_back(al);
  const int m = static_cast<int>(rows.size());
  if (m != col_hi - col_lo + 1) fail(ErrorKind::InvalidConfig, "minor is not square");
  if (m == 0) return Complex(1.0, 0.0);
  Eigen::MatrixXcd M(m, m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k)
      M(i, k) = tr.phi(p.lambdas[static_cast<std::size_t>(rows[static_cast<std::size_t>(i)] - 1)],
                       p.nus[static_cast<std::size_t>(col_lo + k - 1)]);
  return M.determinant();
}

void check_distinct(const TrigParams& p) {
  Trig tr{p.eta};
  const int n = p.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(tr.d(p.lambdas[static_cast<std::size_t>(i)], p.lambdas[static_cast<std::size_t>(j)])) < kNearDegenerate)
        fail(ErrorKind::NearDegenerate, "two lambdas collide");
      if (std::abs(tr.d(p.nus[static_cast<std::size_t>(i)], p.nus[static_cast<std::size_t>(j)])) < kNearDegenerate)
        fail(ErrorKind::NearDegenerate, "two nus collide");
    }
}

Complex lam(const TrigParams& p, int alpha) { return p.lambdas[static_cast<std::size_t>(alpha - 1)]; }
Complex nu(const TrigParams& p, int k) { return p.nus[static_cast<std::size_t>(k - 1)]; }

}  // namespace

Complex psi_bot_sum(const RowConfig& cfg, const TrigParams& p) {
  const int n = p.size(), s = cfg.s();
  if (cfg.n() != n) fail(ErrorKind::InvalidConfig, "configuration and parameters differ in N");
  check_distinct(p);
  Trig tr{p.eta};
  Complex pre(1.0, 0.0);
  for (int al = 1; al <= n; ++al)
    for (int k = s + 1; k <= n; ++k) pre *= tr.a(lam(p, al), nu(p, k)) * tr.b(lam(p, al), nu(p, k));
  for (int al = 1; al <= n; ++al)
    for (int be = al + 1; be <= n; ++be) pre /= tr.d(lam(p, be), lam(p, al));
  for (int j = s + 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) pre /= tr.d(nu(p, j), nu(p, k));

  auto v = [&](int r, Complex x) {
    Complex num(1.0, 0.0);
    for (int al = r + 1; al <= n; ++al) num *= tr.d(lam(p, al), x);
    for (int al = 1; al < r; ++al) num *= tr.e(lam(p, al), x);
    for (int k = s + 1; k <= n; ++k) num /= tr.b(x, nu(p, k));
    return num;
  };
  Complex acc(0.0, 0.0);
  for_each_nested(cfg.positions(), [&](const std::vector<int>& a) {
    int expo = 0;
    Complex term(1.0, 0.0);
    for (int j = 0; j < s; ++j) {
      expo += a[static_cast<std::size_t>(j)] - 1;
      term *= v(cfg[j], lam(p, a[static_cast<std::size_t>(j)]));
      for (int k = j + 1; k < s; ++k) {
        if (a[static_cast<std::size_t>(k)] > a[static_cast<std::size_t>(j)]) --expo;
        term /= tr.e(lam(p, a[static_cast<std::size_t>(j)]), lam(p, a[static_cast<std::size_t>(k)]));
      }
    }
    term *= minor_det(p, a, s + 1, n);
    acc += (std::abs(expo) % 2 ? -term : term);
  });
  return pre * acc;
}

namespace {

TrigParams sub_params(const TrigParams& p, const std::vector<int>& alphas, int k_lo, int k_hi) {
  TrigParams q;
  q.eta = p.eta;
  for (int a : alphas) q.lambdas.push_back(lam(p, a));
  for (int k = k_lo; k <= k_hi; ++k) q.nus.push_back(nu(p, k));
  return q;
}

}  // namespace

Complex psi_top_sum(const RowConfig& cfg, const TrigParams& p) {
  const int n = p.size(), s = cfg.s();
  if (cfg.n() != n) fail(ErrorKind::InvalidConfig, "configuration and parameters differ in N");
  check_distinct(p);
  Trig tr{p.eta};
  Complex acc(0.0, 0.0);
  for_each_nested(cfg.positions(), [&](const std::vector<int>& a) {
    std::vector<bool> in(static_cast<std::size_t>(n + 1), false);
    for (int x : a) in[static_cast<std::size_t>(x)] = true;
    Complex term(1.0, 0.0);
    for (int be = 1; be <= n; ++be)
      if (!in[static_cast<std::size_t>(be)])
        for (int k = 1; k <= s; ++k) term *= tr.a(lam(p, be), nu(p, k));
    std::vector<bool> excl(static_cast<std::size_t>(n + 1), false);
    for (int j = 0; j < s; ++j) {
      const int aj = a[static_cast<std::size_t>(j)];
      excl[static_cast<std::size_t>(aj)] = true;
      // g/f(lambda_r, lambda_alpha) = c / e(lambda_alpha, lambda_r)
      term *= tr.c() / tr.e(lam(p, aj), lam(p, cfg[j]));
      for (int be = 1; be <= cfg[j]; ++be)
        if (!excl[static_cast<std::size_t>(be)]) term *= tr.f(lam(p, be), lam(p, aj));
    }
    term *= s == 0 ? Complex(1.0, 0.0) : ik_determinant(sub_params(p, a, 1, s));
    acc += term;
  });
  return acc;
}

Complex psi_top_dual_sum(const RowConfig& cfg, const TrigParams& p) {
  const int n = p.size(), s = cfg.s();
  if (cfg.n() != n) fail(ErrorKind::InvalidConfig, "configuration and parameters differ in N");
  check_distinct(p);
  Trig tr{p.eta};
  const std::vector<int> rb = cfg.complement();
  const int m = n - s;
  Complex pre(1.0, 0.0);
  for (int al = 1; al <= n; ++al)
    for (int k = 1; k <= s; ++k) pre *= tr.a(lam(p, al), nu(p, k)) * tr.b(lam(p, al), nu(p, k));
  for (int al = 1; al <= n; ++al)
    for (int be = al + 1; be <= n; ++be) pre /= tr.d(lam(p, be), lam(p, al));
  for (int j = 1; j <= s; ++j)
    for (int k = j + 1; k <= s; ++k) pre /= tr.d(nu(p, j), nu(p, k));

  auto vt = [&](int r, Complex x) {
    Complex num(1.0, 0.0);
    for (int al = r + 1; al <= n; ++al) num *= tr.d(x, lam(p, al));
    for (int al = 1; al < r; ++al) num *= tr.e(x, lam(p, al));
    for (int k = 1; k <= s; ++k) num /= tr.a(x, nu(p, k));
    return num;
  };
  Complex acc(0.0, 0.0);
  for_each_nested(rb, [&](const std::vector<int>& a) {
    int expo = 0;
    Complex term(1.0, 0.0);
    for (int j = 0; j < m; ++j) {
      const int aj = a[static_cast<std::size_t>(j)];
      expo += n - aj;
      term *= vt(rb[static_cast<std::size_t>(j)], lam(p, aj));
      for (int k = j + 1; k < m; ++k) {
        // chi(alpha_j, alpha_k) = 1 unless alpha_j < alpha_k
        if (!(aj < a[static_cast<std::size_t>(k)])) --expo;
        term /= tr.e(lam(p, a[static_cast<std::size_t>(k)]), lam(p, aj));
      }
    }
    term *= minor_det(p, a, 1, s);
    acc += (std::abs(expo) % 2 ? -term : term);
  });
  return pre * acc;
}

Complex psi_top_coordinate(const RowConfig& cfg, const TrigParams& p) {
  const int n = p.size(), s = cfg.s();
  if (cfg.n() != n) fail(ErrorKind::InvalidConfig, "configuration and parameters differ in N");
  check_distinct(p);
  Trig tr{p.eta};
  Complex pre = std::pow(tr.c(), s);
  for (int be = 1; be <= n; ++be)
    for (int k = 1; k <= s; ++k) pre *= tr.a(lam(p, be), nu(p, k));
  for (int j = 1; j <= s; ++j)
    for (int k = j + 1; k <= s; ++k) pre /= tr.d(nu(p, j), nu(p, k));
  Complex acc(0.0, 0.0);
  for_each_permutation(s, [&](const std::vector<int>& sg, int sign) {
    Complex term(static_cast<double>(sign), 0.0);
    for (int j = 0; j < s; ++j) {
      const Complex v = nu(p, sg[static_cast<std::size_t>(j)] + 1);
      for (int be = 1; be < cfg[j]; ++be) term *= tr.b(lam(p, be), v) / tr.a(lam(p, be), v);
      term /= tr.a(lam(p, cfg[j]), v);
      for (int k = j + 1; k < s; ++k) term *= tr.e(v, nu(p, sg[static_cast<std::size_t>(k)] + 1));
    }
    acc += term;
  });
  return pre * acc;
}

Complex psi_top_coordinate_hom(const RowConfig& cfg, Complex lambda, const std::vector<Complex>& nus, Complex eta) {
  const int n = cfg.n(), s = cfg.s();
  if (static_cast<int>(nus.size()) < s) fail(ErrorKind::InvalidConfig, "need nu_1..nu_s");
  Trig tr{eta};
  const Complex delta = std::cos(2.0 * eta);
  std::vector<Complex> t(static_cast<std::size_t>(s));
  Complex pre = std::pow(tr.c(), s);
  for (int k = 0; k < s; ++k) {
    Complex a = tr.a(lambda, nus[static_cast<std::size_t>(k)]);
    t[static_cast<std::size_t>(k)] = tr.b(lambda, nus[static_cast<std::size_t>(k)]) / a;
    pre *= std::pow(a, n - 1);
  }
  for (int j = 0; j < s; ++j)
    for (int k = j + 1; k < s; ++k) {
      Complex dt = t[static_cast<std::size_t>(k)] - t[static_cast<std::size_t>(j)];
      if (std::abs(dt) < kNearDegenerate) fail(ErrorKind::NearDegenerate, "two t_k collide");
      pre /= dt;
    }
  Complex acc(0.0, 0.0);
  for_each_permutation(s, [&](const std::vector<int>& sg, int sign) {
    Complex term(static_cast<double>(sign), 0.0);
    for (int j = 0; j < s; ++j) {
      const Complex tj = t[static_cast<std::size_t>(sg[static_cast<std::size_t>(j)])];
      term *= std::pow(tj, cfg[j] - 1);
      for (int k = j + 1; k < s; ++k) term *= tj * t[static_cast<std::size_t>(sg[static_cast<std::size_t>(k)])] - 2.0 * delta * tj + 1.0;
    }
    acc += term;
  });
  return pre * acc;
}

Complex psi_top_other_poles(const RowConfig& cfg, Complex lambda, const std::vector<Complex>& nus, Complex eta) {
  const int n = cfg.n(), s = cfg.s();
  Trig tr{eta};
  Complex pre(1.0, 0.0);
  std::vector<Complex> t(static_cast<std::size_t>(s));
  for (int k = 0; k < s; ++k) {
    Complex a = tr.a(lambda, nus[static_cast<std::size_t>(k)]);
    t[static_cast<std::size_t>(k)] = tr.b(lambda, nus[static_cast<std::size_t>(k)]) / a;
    pre *= std::pow(a, n - 1);
  }
  for (int j = 0; j < s; ++j)
    for (int k = j + 1; k < s; ++k) pre /= tr.d(nus[static_cast<std::size_t>(j)], nus[static_cast<std::size_t>(k)]);
  // Z_s(nu - eta; nu) in product form
  Complex zs = std::pow(tr.c(), s);
  for (int j = 0; j < s; ++j)
    for (int k = 0; k < s; ++k)
      if (j != k) zs *= tr.e(nus[static_cast<std::size_t>(j)], nus[static_cast<std::size_t>(k)]);
  Complex acc(0.0, 0.0);
  for_each_permutation(s, [&](const std::vector<int>& sg, int sign) {
    Complex term(static_cast<double>(sign), 0.0);
    for (int j = 0; j < s; ++j) {
      term *= std::pow(t[static_cast<std::size_t>(sg[static_cast<std::size_t>(j)])], cfg[j] - 1);
      for (int k = j + 1; k < s; ++k)
        term /= tr.e(nus[static_cast<std::size_t>(sg[static_cast<std::size_t>(k)])], nus[static_cast<std::size_t>(sg[static_cast<std::size_t>(j)])]);
    }
    acc += term;
  });
  return pre * zs * acc;
}

Complex psi_top_other_poles_quadrature(const RowConfig& cfg, Complex lambda, const std::vector<Complex>& nus,
                                       Complex eta, int nodes, double radius) {
  const int n = cfg.n(), s = cfg.s();
  if (s > 3) fail(ErrorKind::SizeLimit, "quadrature check limited to s <= 3");
  Trig tr{eta};
  const double pi = std::acos(-1.0);
  // node list per variable: every circle, clockwise, radius staggered per variable
  std::vector<std::vector<std::pair<Complex, Complex>>> pts(static_cast<std::size_t>(s));
  for (int j = 0; j < s; ++j) {
    const double rho = radius * (1.0 + 0.15 * j);
    for (int l = 0; l < s; ++l) {
      const Complex c0 = nus[static_cast<std::size_t>(l)] - eta;
      for (int m = 0; m < nodes; ++m) {
        const double th = 2.0 * pi * (m + 0.5 * j / std::max(1, s)) / nodes;
        const Complex e = std::exp(Complex(0.0, -th));
        // (1/2 pi i) dzeta with dzeta = -i rho e dtheta
        pts[static_cast<std::size_t>(j)].emplace_back(c0 + rho * e, -rho * e / static_cast<double>(nodes));
      }
    }
  }
  Complex pre(1.0, 0.0);
  for (int k = 0; k < s; ++k) pre *= std::pow(tr.a(lambda, nus[static_cast<std::size_t>(k)]), n);
  std::vector<Complex> z(static_cast<std::size_t>(s));
  Complex acc(0.0, 0.0);
  auto rec = [&](auto&& self, int j, Complex wt) -> void {
    if (j == s) {
      Complex f = wt;
      for (int i = 0; i < s; ++i) {
        const Complex zi = z[static_cast<std::size_t>(i)];
        f *= std::pow(tr.e(zi, lambda), cfg[i] - 1) / std::pow(tr.d(zi, lambda), cfg[i]);
        for (int k = i + 1; k < s; ++k) f *= tr.d(z[static_cast<std::size_t>(k)], zi) / tr.e(z[static_cast<std::size_t>(k)], zi);
        for (int k = 0; k < s; ++k) f /= tr.a(zi, nus[static_cast<std::size_t>(k)]);
      }
      TrigParams q;
      q.eta = eta;
      q.lambdas = z;
      q.nus.assign(nus.begin(), nus.begin() + s);
      acc += f * partition_function(weight_matrix(q), Backend::Enumerate);
      return;
    }
    for (const auto& [pt, dw] : pts[static_cast<std::size_t>(j)]) {
      z[static_cast<std::size_t>(j)] = pt;
      self(self, j + 1, wt * dw);
    }
  };
  rec(rec, 0, Complex(1.0, 0.0));
  return pre * acc;
}

// ---------------------------------------------------------------------------

std::vector<ExactPoly> reversed_family(const BoundaryGenFamily& fam, int n) {
  std::vector<ExactPoly> out;
  for (int m = 1; m <= n; ++m) out.push_back(fam.h_tilde(m));
  return out;
}

namespace {

struct Params {
  Rational a, b, c, t, delta;
  explicit Params(const WeightTriple& w) : a(w.a), b(w.b), c(w.c), t(w.t()), delta(w.delta()) {}
};

std::vector<ExactExpr> variables(int m) {
  std::vector<ExactExpr> z;
  for (int j = 0; j < m; ++j) z.push_back(ExactExpr::var(j));
  return z;
}

std::vector<ExactPoly> family_upto(const BoundaryGenFamily& fam, int n) {
  std::vector<ExactPoly> h;
  for (int m = 1; m <= n; ++m) h.push_back(fam.h(m));
  return h;
}

void check_family(const BoundaryGenFamily& fam, int n) {
  if (fam.max_size() < n) fail(ErrorKind::OutOfRange, "boundary family shorter than N");
}

void check_collision(const Params& P) {
  if (is_zero(Rational(P.t * P.t - 2 * P.delta * P.t + 1)))
    fail(ErrorKind::PoleCollision, "t^2 - 2 Delta t + 1 = 0 places a cross pole on w = 1");
}

}  // namespace

Rational psi_bot_mir(const RowConfig& cfg, const BoundaryGenFamily& fam) {
  const int n = cfg.n(), s = cfg.s();
  check_family(fam, n);
  Params P(fam.weights());
  if (s == 0) return fam.Z(n);
  auto z = variables(s);
  ExactExpr F = ExactExpr::apply(hns_poly(family_upto(fam, n), n, s), z);
  const Rational t2(P.t * P.t), dt2(2 * P.delta * P.t);
  for (int j = 0; j < s; ++j)
    for (int k = j + 1; k < s; ++k)
      F = F * (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]) /
          (ExactExpr(t2) * z[static_cast<std::size_t>(j)] * z[static_cast<std::size_t>(k)] - ExactExpr(dt2) * z[static_cast<std::size_t>(j)] + 1);
  std::vector<int> orders;
  for (int j = 0; j < s; ++j) {
    F = F / pow(z[static_cast<std::size_t>(j)], cfg[j]);
    orders.push_back(cfg[j]);
  }
  Rational res = joint_residue(F, std::vector<Rational>(static_cast<std::size_t>(s), Rational(0)), orders);
  Rational pre = fam.Z(n) / (pow(P.a, static_cast<long>(s) * (n - 1)) * pow(P.c, s));
  for (int j = 1; j <= s; ++j) pre *= pow(P.t, j - cfg[j - 1]);
  return Rational(pre * res);
}

Rational psi_top_mir_coordinate(const RowConfig& cfg, const WeightTriple& w, const ExactMultiPoly* multiplier) {
  const int n = cfg.n(), s = cfg.s();
  Params P(w);
  if (s == 0) return Rational(1);
  auto z = variables(s);
  const Rational t2(P.t * P.t), dt2(2 * P.delta * P.t);
  ExactExpr F(1);
  for (int j = 0; j < s; ++j) {
    F = F * pow(z[static_cast<std::size_t>(j)], cfg[j] - 1) / pow(z[static_cast<std::size_t>(j)] - 1, s);
    for (int k = j + 1; k < s; ++k)
      F = F * (z[static_cast<std::size_t>(j)] - z[static_cast<std::size_t>(k)]) *
          (ExactExpr(t2) * z[static_cast<std::size_t>(j)] * z[static_cast<std::size_t>(k)] - ExactExpr(dt2) * z[static_cast<std::size_t>(j)] + 1);
  }
  Rational scale(1);
  if (multiplier) {
    if (multiplier->nvars() != s) fail(ErrorKind::InvalidConfig, "multiplier must have s variables");
    F = F * ExactExpr::apply(*multiplier, z);
    scale = (*multiplier)(std::vector<Rational>(static_cast<std::size_t>(s), Rational(1)));
    if (is_zero(scale)) fail(ErrorKind::InvalidConfig, "multiplier vanishes at w = 1");
  }
  Rational res = joint_residue(F, std::vector<Rational>(static_cast<std::size_t>(s), Rational(1)),
                               std::vector<int>(static_cast<std::size_t>(s), s));
  Rational pre = pow(P.c, s) * pow(P.a, static_cast<long>(s) * (n - 1));
  for (int j = 1; j <= s; ++j) pre *= pow(P.t, cfg[j - 1] - j);
  return Rational(pre * res / scale);
}

Rational psi_top_mir_new(const RowConfig& cfg, const BoundaryGenFamily& fam) {
  const int n = cfg.n(), s = cfg.s();
  Params P(fam.weights());
  if (s == 0) return Rational(1);
  check_family(fam, s);
  check_collision(P);
  auto z = variables(s);
  const Rational t2(P.t * P.t), dt2(2 * P.delta * P.t), shift(1 - 2 * P.delta * P.t);
  ExactExpr F = ExactExpr::apply(hns_poly(family_upto(fam, s), s, s), z);
  for (int j = 0; j < s; ++j) {
    const auto& zj = z[static_cast<std::size_t>(j)];
    F = F * pow(ExactExpr(t2) * zj + ExactExpr(shift), cfg[j] - 1) / pow(zj - 1, cfg[j]);
    for (int k = j + 1; k < s; ++k)
      F = F * (z[static_cast<std::size_t>(k)] - zj) / (ExactExpr(t2) * zj * z[static_cast<std::size_t>(k)] - ExactExpr(dt2) * zj + 1);
  }
  Rational res = joint_residue(F, std::vector<Rational>(static_cast<std::size_t>(s), Rational(1)), cfg.positions());
  Rational pre = fam.Z(s) * pow(P.a, static_cast<long>(s) * (n - s));
  for (int j = 1; j <= s; ++j) pre *= pow(P.t, j - cfg[j - 1]);
  return Rational(pre * res);
}

Rational psi_top_mir_dual(const RowConfig& cfg, const BoundaryGenFamily& fam) {
  const int n = cfg.n(), s = cfg.s(), m = n - s;
  check_family(fam, n);
  Params P(fam.weights());
  if (m == 0) return fam.Z(n);
  const std::vector<int> rb = cfg.complement();
  auto z = variables(m);
  const Rational t2(P.t * P.t), dt(2 * P.delta * P.t);
  ExactExpr F = ExactExpr::apply(hns_poly(reversed_family(fam, n), n, m), z);
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k)
      F = F * ExactExpr(t2) * (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]) /
          (z[static_cast<std::size_t>(j)] * z[static_cast<std::size_t>(k)] - ExactExpr(dt) * z[static_cast<std::size_t>(j)] + ExactExpr(t2));
  for (int j = 0; j < m; ++j) F = F / pow(z[static_cast<std::size_t>(j)], rb[static_cast<std::size_t>(j)]);
  Rational res = joint_residue(F, std::vector<Rational>(static_cast<std::size_t>(m), Rational(0)), rb);
  Rational pre = fam.Z(n) / (pow(P.b, static_cast<long>(m) * (n - 1)) * pow(P.c, m));
  for (int j = 1; j <= m; ++j) pre *= pow(P.t, rb[static_cast<std::size_t>(j - 1)] - j);
  return Rational(pre * res);
}

namespace {

// the (N-s)-fold integral of the crossed representation, without the leading partition function
Rational bot_dual_core(const RowConfig& cfg, const BoundaryGenFamily& fam) {
  const int n = cfg.n(), s = cfg.s(), m = n - s;
  Params P(fam.weights());
  if (m == 0) return Rational(1);
  check_family(fam, m);
  check_collision(P);
  const std::vector<int> rb = cfg.complement();
  auto z = variables(m);
  const Rational t2(P.t * P.t), dt(2 * P.delta * P.t), shift(t2 - dt);
  ExactExpr F = ExactExpr::apply(hns_poly(reversed_family(fam, m), m, m), z);
  for (int j = 0; j < m; ++j) {
    const auto& zj = z[static_cast<std::size_t>(j)];
    F = F * pow(zj + ExactExpr(shift), rb[static_cast<std::size_t>(j)] - 1) / pow(zj - 1, rb[static_cast<std::size_t>(j)]);
    for (int k = j + 1; k < m; ++k)
      F = F * (z[static_cast<std::size_t>(k)] - zj) / (zj * z[static_cast<std::size_t>(k)] - ExactExpr(dt) * zj + ExactExpr(t2));
  }
  Rational res = joint_residue(F, std::vector<Rational>(static_cast<std::size_t>(m), Rational(1)), rb);
  Rational pre = pow(P.b, static_cast<long>(s) * m);
  for (int j = 1; j <= m; ++j) pre *= pow(P.t, j - rb[static_cast<std::size_t>(j - 1)]);
  return Rational(pre * res);
}

}  // namespace

Rational psi_bot_mir_dual(const RowConfig& cfg, const BoundaryGenFamily& fam) {
  const int m = cfg.n() - cfg.s();
  check_family(fam, m);
  return Rational(fam.Z(m) * bot_dual_core(cfg, fam));
}

Rational psi_bot_mir_dual_as_printed(const RowConfig& cfg, const BoundaryGenFamily& fam) {
  check_family(fam, cfg.s());
  return Rational(fam.Z(cfg.s()) * bot_dual_core(cfg, fam));
}

}  // namespace dwbc
