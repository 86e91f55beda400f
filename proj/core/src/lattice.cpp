#include <cmath>
#include <cstdlib>
#include <string>

#include "dwbc/lattice/oracle.hpp"

namespace dwbc {

VertexWeights<Complex> weight_matrix(const TrigParams& p) {
  const int n = p.size();
  if (static_cast<int>(p.nus.size()) != n) fail(ErrorKind::InvalidConfig, "lambdas and nus differ in length");
  VertexWeights<Complex> w;
  w.n = n;
  w.a_.resize(static_cast<std::size_t>(n * n));
  w.b_.resize(static_cast<std::size_t>(n * n));
  for (int alpha = 1; alpha <= n; ++alpha)
    for (int k = 1; k <= n; ++k) {
      const Complex x = p.lambdas[static_cast<std::size_t>(alpha - 1)] - p.nus[static_cast<std::size_t>(k - 1)];
      w.a_[static_cast<std::size_t>((alpha - 1) * n + (k - 1))] = std::sin(x + p.eta);
      w.b_[static_cast<std::size_t>((alpha - 1) * n + (k - 1))] = std::sin(x - p.eta);
    }
  w.c = std::sin(2.0 * p.eta);
  return w;
}

std::vector<std::vector<int>> combinations(int lo, int hi, int s) {
  std::vector<std::vector<int>> out;
  if (s < 0 || s > hi - lo + 1) return out;
  std::vector<int> cur(static_cast<std::size_t>(s));
  for (int j = 0; j < s; ++j) cur[static_cast<std::size_t>(j)] = lo + j;
  for (;;) {
    out.push_back(cur);
    int j = s - 1;
    while (j >= 0 && cur[static_cast<std::size_t>(j)] == hi - (s - 1 - j)) --j;
    if (j < 0) break;
    ++cur[static_cast<std::size_t>(j)];
    for (int i = j + 1; i < s; ++i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)] + 1;
  }
  return out;
}

SizeLimits SizeLimits::from_env() {
  SizeLimits lim;
  if (const char* v = std::getenv("DWBC_MAX_N")) {
    try {
      int m = std::stoi(v);
      if (m > 0) lim.enumeration = lim.transfer = m;
    } catch (const std::exception&) {
    }
  }
  return lim;
}

namespace detail {
void check_size(int n, int m, Backend b, const SizeLimits& lim) {
  const int bound = b == Backend::Enumerate ? lim.enumeration : lim.transfer;
  if (n > bound)
    fail(ErrorKind::SizeLimit, "N=" + std::to_string(n) + " exceeds the " +
                                   (b == Backend::Enumerate ? "enumeration" : "transfer") + " bound " +
                                   std::to_string(bound));
  if (b == Backend::Transfer && m > 20) fail(ErrorKind::SizeLimit, "transfer state space too large");
}
}  // namespace detail

Rational enumerate_Z(int n, const WeightTriple& w, Backend b) {
  if (n < 1) fail(ErrorKind::InvalidConfig, "N must be positive");
  return partition_function(homogeneous(n, w), b);
}

Complex enumerate_Z(const VertexWeights<Complex>& w) { return partition_function(w, Backend::Enumerate); }

Rational psi_top(const RowConfig& cfg, const WeightTriple& w, Backend b) {
  return psi_top(cfg, homogeneous(cfg.n(), w), b);
}

Rational psi_bot(const RowConfig& cfg, const WeightTriple& w, Backend b) {
  return psi_bot(cfg, homogeneous(cfg.n(), w), b);
}

Rational row_config_probability(const RowConfig& cfg, const WeightTriple& w, Backend b) {
  const auto vw = homogeneous(cfg.n(), w);
  Rational z = partition_function(vw, b);
  return Rational(psi_top(cfg, vw, b) * psi_bot(cfg, vw, b) / z);
}

namespace {

void check_region(int n, int r, int s) {
  if (n < 1 || s < 1 || s > n || r < 1 || r > n)
    fail(ErrorKind::InvalidRegion, "need 1 <= s <= N and 1 <= r <= N");
}

}  // namespace

Rational efp_oracle(int n, int r, int s, const WeightTriple& w, EfpRoute route, Backend b) {
  check_region(n, r, s);
  if (s > r) return Rational(0);
  const auto vw = homogeneous(n, w);
  Rational acc(0);
  switch (route) {
    case EfpRoute::Efp: {
      Rational z = partition_function(vw, b);
      for (auto& pos : combinations(1, r, s)) {
        RowConfig cfg(n, pos);
        acc += psi_top(cfg, vw, b) * psi_bot(cfg, vw, b);
      }
      return Rational(acc / z);
    }
    case EfpRoute::Efpn: {
      const int m = r - s;
      Rational z = partition_function(vw, b);
      for (auto& tail : combinations(s + 1, n, m)) {
        std::vector<int> pos;
        for (int j = 1; j <= s; ++j) pos.push_back(j);
        pos.insert(pos.end(), tail.begin(), tail.end());
        RowConfig cfg(n, pos);
        acc += psi_top(cfg, vw, b) * psi_bot(cfg, vw, b);
      }
      return Rational(acc / z);
    }
    case EfpRoute::Direct: {
      detail::check_size(n, n, Backend::Enumerate, SizeLimits::from_env());
      Rational total(0);
      const std::uint32_t forbidden = full_mask(n) & ~full_mask(r);
      enumerate_sublattice(vw, 1, n, 0u, full_mask(n), [&](const Rational& wt, const std::vector<std::uint32_t>& rows) {
        total += wt;
        if ((rows[static_cast<std::size_t>(s - 1)] & forbidden) == 0) acc += wt;
      });
      return Rational(acc / total);
    }
  }
  return acc;
}

Rational polarization_oracle(int n, int r, int s, const WeightTriple& w, bool direct) {
  check_region(n, r, s);
  const auto vw = homogeneous(n, w);
  Rational acc(0);
  if (direct) {
    detail::check_size(n, n, Backend::Enumerate, SizeLimits::from_env());
    Rational total(0);
    const std::uint32_t bit = std::uint32_t{1} << (r - 1);
    enumerate_sublattice(vw, 1, n, 0u, full_mask(n), [&](const Rational& wt, const std::vector<std::uint32_t>& rows) {
      total += wt;
      if (rows[static_cast<std::size_t>(s - 1)] & bit) acc += wt;
    });
    return Rational(acc / total);
  }
  Rational z = partition_function(vw, Backend::Transfer);
  for (int l = 1; l <= s; ++l)
    for (auto& right : combinations(1, r - 1, l - 1))
      for (auto& left : combinations(r + 1, n, s - l)) {
        std::vector<int> pos = right;
        pos.push_back(r);
        pos.insert(pos.end(), left.begin(), left.end());
        RowConfig cfg(n, pos);
        acc += psi_top(cfg, vw, Backend::Transfer) * psi_bot(cfg, vw, Backend::Transfer);
      }
  return Rational(acc / z);
}

ExactPoly boundary_generating_poly(int n, const WeightTriple& w, Backend b) {
  if (n < 1) fail(ErrorKind::InvalidConfig, "N must be positive");
  const auto vw = homogeneous(n, w);
  Rational z = partition_function(vw, b);
  std::vector<Rational> coeffs;
  for (int r = 1; r <= n; ++r) {
    RowConfig cfg(n, {r});
    coeffs.push_back(Rational(psi_top(cfg, vw, b) * psi_bot(cfg, vw, b) / z));
  }
  return ExactPoly(coeffs);
}

BoundaryGenFamily::BoundaryGenFamily(const WeightTriple& w, int n_max) : w_(w) {
  if (n_max < 1) fail(ErrorKind::InvalidConfig, "family size must be positive");
  z_.push_back(Rational(1));
  for (int m = 1; m <= n_max; ++m) {
    h_.push_back(boundary_generating_poly(m, w));
    z_.push_back(enumerate_Z(m, w));
  }
}

const ExactPoly& BoundaryGenFamily::h(int m) const {
  if (m < 1 || m > max_size()) fail(ErrorKind::OutOfRange, "h_M requested outside the built family");
  return h_[static_cast<std::size_t>(m - 1)];
}

const Rational& BoundaryGenFamily::Z(int m) const {
  if (m < 0 || m > max_size()) fail(ErrorKind::OutOfRange, "Z_M requested outside the built family");
  return z_[static_cast<std::size_t>(m)];
}

}  // namespace dwbc
