#include "dwbc/hankel/hankel.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace dwbc {

namespace {

std::size_t u(int j) { return static_cast<std::size_t>(j); }

double factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// sin(x0 + eps_j) to order caps[j]
NumericTaylor sin_shift(const std::vector<int>& caps, int j, double x0) {
  const double half_pi = std::acos(-1.0) / 2;
  std::vector<double> c;
  for (int k = 0; k <= caps[u(j)]; ++k) c.push_back(std::sin(x0 + k * half_pi) / factorial(k));
  return NumericTaylor::univariate(caps, j, 0, c, caps[u(j)]);
}

double ratio(double lambda, double eta) { return std::sin(lambda + eta) / std::sin(lambda - eta); }

struct Numeric {
  double a, b, c;
  Numeric(double lambda, double eta) : a(std::sin(lambda + eta)), b(std::sin(lambda - eta)), c(std::sin(2 * eta)) {}
};

double partition(int n, double lambda, double eta) {
  return ik_homogeneous(n, Complex(lambda), Complex(eta)).real();
}

// evaluate at Taylor order `order` and at order + 2; the two must agree
template <class F>
double stable(F&& build, int order) {
  const double v = build(order), w = build(order + 2);
  if (std::abs(v - w) > 1e-9 * std::max(1.0, std::abs(w)))
    fail(ErrorKind::TruncationInsufficient, "Taylor order too low for the K-determinant");
  return v;
}

NumericTaylor one(const std::vector<int>& caps) { return NumericTaylor::constant(caps, 1.0); }

}  // namespace

MomentTable MomentTable::build(int count, double lambda, double eta) {
  MomentTable m;
  m.lambda = lambda;
  m.eta = eta;
  for (int k = 0; k < count; ++k) m.c.push_back(phi_derivative(k, Complex(lambda), Complex(eta)).real());
  return m;
}

double MomentTable::hankel_det(int n) const {
  if (n == 0) return 1.0;
  if (2 * n - 1 > static_cast<int>(c.size())) fail(ErrorKind::OutOfRange, "moment table too short");
  Eigen::MatrixXd H(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) H(i, j) = c[u(i + j)];
  return H.determinant();
}

OrthoFamily build_ortho_family(int n, double lambda, double eta) {
  if (n < 1) fail(ErrorKind::OutOfRange, "family size must be positive");
  OrthoFamily f;
  f.moments = MomentTable::build(2 * n - 1, lambda, eta);
  const auto& c = f.moments.c;
  f.phi = c[0];
  for (int k = 0; k < n; ++k) {
    std::vector<double> p(u(k + 1), 0.0);
    p[u(k)] = 1.0;
    if (k > 0) {
      Eigen::MatrixXd H(k, k);
      Eigen::VectorXd rhs(k);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) H(i, j) = c[u(i + j)];
        rhs(i) = -c[u(i + k)];
      }
      Eigen::FullPivLU<Eigen::MatrixXd> lu(H);
      if (lu.rank() < k) fail(ErrorKind::DegenerateHankel, "Hankel minor is singular");
      Eigen::VectorXd x = lu.solve(rhs);
      for (int j = 0; j < k; ++j) p[u(j)] = x(j);
    }
    double hk = 0, scale = 0;
    for (int j = 0; j <= k; ++j) {
      hk += p[u(j)] * c[u(k + j)];
      scale = std::max(scale, std::abs(p[u(j)] * c[u(k + j)]));
    }
    if (!std::isfinite(hk) || std::abs(hk) <= 1e-13 * scale)
      fail(ErrorKind::DegenerateHankel, "orthogonal polynomial norm vanishes");
    const double kappa = factorial(k) * std::pow(f.phi, k + 1) / hk;
    std::vector<double> K;
    for (double v : p) K.push_back(kappa * v);
    f.P.push_back(std::move(p));
    f.K.push_back(std::move(K));
    f.h.push_back(hk);
  }
  return f;
}

double eval_poly(const std::vector<double>& coeffs, double x) {
  double acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double omega(double eps, double lambda, double eta) {
  return ratio(lambda, eta) * std::sin(eps) / std::sin(eps - 2 * eta);
}

double omega_tilde(double eps, double lambda, double eta) {
  return std::sin(eps) / (ratio(lambda, eta) * std::sin(eps + 2 * eta));
}

NumericTaylor omega_series(const std::vector<int>& caps, int j, double lambda, double eta) {
  return ratio(lambda, eta) * (sin_shift(caps, j, 0.0) * sin_shift(caps, j, -2 * eta).inverse());
}

NumericTaylor omega_tilde_series(const std::vector<int>& caps, int j, double lambda, double eta) {
  return (1.0 / ratio(lambda, eta)) * (sin_shift(caps, j, 0.0) * sin_shift(caps, j, 2 * eta).inverse());
}

double apply_K_det(const OrthoFamily& fam, int first, const NumericTaylor& G) {
  const int m = G.nvars();
  if (first < 0 || first + m > fam.size()) fail(ErrorKind::OutOfRange, "K index outside the family");
  const int top = first + m - 1;
  for (int j = 0; j < m; ++j)
    if (G.prec(j) < top) fail(ErrorKind::TruncationInsufficient, "Taylor order below the K degree");
  double total = 0;
  for (const auto& [e, v] : G.terms()) {
    bool skip = false;
    for (int j = 0; j < m; ++j) {
      if (e[u(j)] < 0) fail(ErrorKind::InvalidConfig, "K-determinant needs a series regular at 0");
      if (e[u(j)] > top) skip = true;
    }
    if (skip) continue;
    // Leibniz over det[K_{first+i} coefficient at e_j times e_j!]
    double det = 0;
    for_each_permutation(m, [&](const std::vector<int>& p, int sg) {
      double prod = sg;
      for (int j = 0; j < m && prod != 0; ++j) {
        const auto& K = fam.K[u(first + p[u(j)])];
        const int d = e[u(j)];
        prod *= d < static_cast<int>(K.size()) ? K[u(d)] * factorial(d) : 0.0;
      }
      det += prod;
    });
    total += v * det;
  }
  return total;
}

ClaimCheck verify_claim(int n, double lambda, double eta, const Poly<double>& f) {
  const OrthoFamily fam = build_ortho_family(n, lambda, eta);
  ClaimCheck out;
  out.lhs = stable(
      [&](int order) {
        std::vector<int> caps{order};
        auto W = omega_series(caps, 0, lambda, eta);
        NumericTaylor F = NumericTaylor::zero(caps);
        const auto& co = f.coeffs();
        for (auto it = co.rbegin(); it != co.rend(); ++it) F = F * W + NumericTaylor::constant(caps, *it);
        return apply_K_det(fam, n - 1, F);
      },
      n - 1);
  Numeric w(lambda, eta);
  const Poly<double> hN = boundary_polys<double>(w.a, w.b, w.c, n).back();
  Poly<double> g = hN * f;
  for (int k = 0; k < n - 1; ++k) g = g * Poly<double>({-1.0, 1.0});
  out.rhs = g.coeff(n - 1);
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

double boundary_correlator_ortho(int n, int r, double lambda, double eta) {
  if (r < 1 || r > n) fail(ErrorKind::InvalidConfig, "r outside 1..N");
  const OrthoFamily fam = build_ortho_family(n, lambda, eta);
  return stable(
      [&](int order) {
        std::vector<int> caps{order};
        auto W = omega_series(caps, 0, lambda, eta);
        NumericTaylor G = W.pow(n - r) * (W - one(caps)).pow(-(n - 1));
        return apply_K_det(fam, n - 1, G);
      },
      n - 1);
}

double efp_ortho(const EfpQuery& q, double lambda, double eta) {
  q.validate();
  const int n = q.N, s = q.s, r = q.r;
  if (s > 3 || n > 6) fail(ErrorKind::SizeLimit, "orthogonal-polynomial EFP limited to s <= 3, N <= 6");
  const OrthoFamily fam = build_ortho_family(n, lambda, eta);
  double v = stable(
      [&](int order) {
        std::vector<int> caps(u(s), order);
        std::vector<NumericTaylor> W, T;
        for (int j = 0; j < s; ++j) {
          W.push_back(omega_series(caps, j, lambda, eta));
          T.push_back(omega_tilde_series(caps, j, lambda, eta));
        }
        NumericTaylor G = one(caps);
        for (int j = 0; j < s; ++j) {
          G = G * W[u(j)].pow(n - r) * (W[u(j)] - one(caps)).pow(-n);
          for (int k = j + 1; k < s; ++k)
            G = G * (one(caps) - T[u(j)]) * (W[u(k)] - one(caps)) * (T[u(j)] * W[u(k)] - one(caps)).inverse();
        }
        return apply_K_det(fam, n - s, G);
      },
      n - 1);
  return s % 2 ? -v : v;
}

double psi_bot_ortho(const RowConfig& cfg, double lambda, double eta) {
  const int n = cfg.n(), s = cfg.s();
  if (s > 3 || n > 6) fail(ErrorKind::SizeLimit, "orthogonal-polynomial psi_bot limited to s <= 3, N <= 6");
  const double zn = partition(n, lambda, eta);
  if (s == 0) return zn;
  Numeric w(lambda, eta);
  const OrthoFamily fam = build_ortho_family(n, lambda, eta);
  double v = stable(
      [&](int order) {
        std::vector<int> caps(u(s), order);
        std::vector<NumericTaylor> W, T;
        for (int j = 0; j < s; ++j) {
          W.push_back(omega_series(caps, j, lambda, eta));
          T.push_back(omega_tilde_series(caps, j, lambda, eta));
        }
        NumericTaylor G = one(caps);
        for (int j = 1; j <= s; ++j) {
          const auto& Wj = W[u(j - 1)];
          G = G * Wj.pow(n - cfg[j - 1] - s + j) * T[u(j - 1)].pow(s - j) * (Wj - one(caps)).pow(-(n - s));
          for (int k = j + 1; k <= s; ++k) G = G * (T[u(j - 1)] * W[u(k - 1)] - one(caps)).inverse();
        }
        return apply_K_det(fam, n - s, G);
      },
      n - 1);
  double pre = zn / (std::pow(w.a, s * (2 * n - s + 1) / 2) * std::pow(w.b, s * (s - 3) / 2) * std::pow(w.c, s));
  for (int j = 0; j < s; ++j) pre *= std::pow(w.a / w.b, cfg[j]);
  return pre * v;
}

double psi_top_ortho(const RowConfig& cfg, double lambda, double eta) {
  const int n = cfg.n(), s = cfg.s(), m = n - s;
  if (m > 3 || n > 6) fail(ErrorKind::SizeLimit, "orthogonal-polynomial psi_top limited to N - s <= 3, N <= 6");
  const double zn = partition(n, lambda, eta);
  if (m == 0) return zn;
  Numeric w(lambda, eta);
  const std::vector<int> rb = cfg.complement();
  const OrthoFamily fam = build_ortho_family(n, lambda, eta);
  double v = stable(
      [&](int order) {
        std::vector<int> caps(u(m), order);
        std::vector<NumericTaylor> W, T;
        for (int j = 0; j < m; ++j) {
          W.push_back(omega_series(caps, j, lambda, eta));
          T.push_back(omega_tilde_series(caps, j, lambda, eta));
        }
        NumericTaylor G = one(caps);
        for (int j = 1; j <= m; ++j) {
          const auto& Tj = T[u(j - 1)];
          G = G * Tj.pow(n - rb[u(j - 1)]) * (one(caps) - Tj).pow(-s) * (W[u(j - 1)] * Tj.inverse()).pow(m - j);
          for (int k = j + 1; k <= m; ++k) G = G * (one(caps) - T[u(k - 1)] * W[u(j - 1)]).inverse();
        }
        return apply_K_det(fam, s, G);
      },
      n);  // omega-tilde starts at eps^1, so one extra order
  double pre = zn / (std::pow(w.a, m * (m - 3) / 2) * std::pow(w.b, m * (n + s + 1) / 2) * std::pow(w.c, m));
  for (int j = 0; j < m; ++j) pre *= std::pow(w.b / w.a, rb[u(j)]);
  return pre * v;
}

WeightTriple exact_weights(double lambda, double eta) {
  Numeric w(lambda, eta);
  return WeightTriple(Rational(w.a), Rational(w.b), Rational(w.c));
}

}  // namespace dwbc
