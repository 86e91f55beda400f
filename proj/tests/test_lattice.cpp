#include <bit>
#include <random>

#include "doctest.h"
#include "dwbc/lattice/oracle.hpp"

using namespace dwbc;

namespace {

Rational R(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

WeightTriple random_triple(std::mt19937_64& rng) {
  auto pick = [&] { return R(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 5) + 1); };
  return WeightTriple(pick(), pick(), pick());
}

VertexWeights<Rational> random_site_weights(std::mt19937_64& rng, int n) {
  VertexWeights<Rational> w = uniform_weights<Rational>(n, R(1), R(1), R(1));
  for (auto& x : w.a_) x = R(static_cast<long>(rng() % 7) + 1, static_cast<long>(rng() % 3) + 1);
  for (auto& x : w.b_) x = R(static_cast<long>(rng() % 7) + 1, static_cast<long>(rng() % 3) + 1);
  w.c = R(static_cast<long>(rng() % 5) + 1, 2);
  return w;
}

Rational Z(int n, const WeightTriple& w) { return n == 0 ? Rational(1) : enumerate_Z(n, w); }

}  // namespace

TEST_CASE("ice point partition functions") {
  const WeightTriple ice;
  const long asm_counts[] = {1, 2, 7, 42, 429, 7436};
  for (int n = 1; n <= 6; ++n) {
    CHECK(enumerate_Z(n, ice, Backend::Transfer) == asm_counts[n - 1]);
    CHECK(enumerate_Z(n, ice, Backend::Enumerate) == asm_counts[n - 1]);
  }
  CHECK(enumerate_Z(1, WeightTriple(R(2), R(3), R(5))) == 5);
}

TEST_CASE("size limits") {
  CHECK_THROWS_AS(enumerate_Z(7, WeightTriple(), Backend::Enumerate), Error);
  CHECK_THROWS_AS(enumerate_Z(15, WeightTriple(), Backend::Transfer), Error);
  try {
    enumerate_Z(15, WeightTriple());
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeLimit);
  }
}

TEST_CASE("backends agree on site-dependent weights") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 5; ++n)
    for (int rep = 0; rep < 3; ++rep) {
      auto w = random_site_weights(rng, n);
      CHECK(partition_function(w, Backend::Enumerate) == partition_function(w, Backend::Transfer));
      for (int s = 1; s < n; ++s)
        for (auto& cfg : all_row_configs(n, s)) {
          CHECK(psi_top(cfg, w, Backend::Enumerate) == psi_top(cfg, w, Backend::Transfer));
          CHECK(psi_bot(cfg, w, Backend::Enumerate) == psi_bot(cfg, w, Backend::Transfer));
        }
    }
}

TEST_CASE("row decomposition sums to Z and popcount grows by one per row") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 5; ++n) {
    auto w = random_site_weights(rng, n);
    Rational z = partition_function(w, Backend::Transfer);
    for (int s = 1; s < n; ++s) {
      Rational acc(0);
      for (auto& cfg : all_row_configs(n, s)) acc += psi_top(cfg, w, Backend::Transfer) * psi_bot(cfg, w, Backend::Transfer);
      CHECK(acc == z);
    }
    bool ok = true;
    enumerate_sublattice(w, 1, n, 0u, full_mask(n), [&](const Rational&, const std::vector<std::uint32_t>& rows) {
      for (std::size_t i = 0; i < rows.size(); ++i) ok = ok && std::popcount(rows[i]) == static_cast<int>(i + 1);
    });
    CHECK(ok);
  }
}

TEST_CASE("psi_top with one row") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 5; ++rep) {
    auto w = random_triple(rng);
    for (int n = 1; n <= 6; ++n)
      for (int r = 1; r <= n; ++r) {
        Rational expect = pow(w.a, n - r) * pow(w.b, r - 1) * w.c;
        CHECK(psi_top(RowConfig(n, {r}), w) == expect);
      }
  }
  CHECK(psi_bot(RowConfig(2, {1}), WeightTriple()) == 1);
}

TEST_CASE("row configuration probabilities") {
  const WeightTriple ice;
  CHECK(row_config_probability(RowConfig(1, {1}), ice) == 1);
  CHECK(row_config_probability(RowConfig(3, {1}), ice) == R(2, 7));
  CHECK(row_config_probability(RowConfig(3, {2}), ice) == R(3, 7));
  CHECK(row_config_probability(RowConfig(3, {3}), ice) == R(2, 7));
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 3; ++rep) {
    auto w = random_triple(rng);
    for (int n = 1; n <= 6; ++n)
      for (int s = 1; s <= n; ++s) {
        Rational acc(0);
        for (auto& cfg : all_row_configs(n, s)) {
          Rational h = row_config_probability(cfg, w);
          CHECK(sgn(h) >= 0);
          CHECK(h <= 1);
          acc += h;
        }
        CHECK(acc == 1);
      }
  }
}

TEST_CASE("boundary generating polynomial") {
  const WeightTriple ice;
  CHECK(boundary_generating_poly(1, ice) == ExactPoly::constant(R(1)));
  CHECK(boundary_generating_poly(3, ice) == ExactPoly({R(2, 7), R(3, 7), R(2, 7)}));
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 4; ++rep) {
    auto w = random_triple(rng);
    BoundaryGenFamily fam(w, 7);
    for (int n = 1; n <= 7; ++n) {
      const ExactPoly& h = fam.h(n);
      CHECK(h.degree() == n - 1);
      CHECK(h(R(1)) == 1);
      // value at the origin carries the 1/Z_N normalization
      CHECK(h(R(0)) == pow(w.a, 2 * (n - 1)) * w.c * fam.Z(n - 1) / fam.Z(n));
      if (n <= 5) CHECK(boundary_generating_poly(n, w, Backend::Enumerate) == h);
    }
  }
}

TEST_CASE("emptiness formation probability routes") {
  const WeightTriple ice;
  CHECK(efp_oracle(3, 2, 1, ice) == R(5, 7));
  CHECK(efp_oracle(3, 1, 2, ice) == 0);
  CHECK_THROWS_AS(efp_oracle(3, 4, 1, ice), Error);
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 3; ++rep) {
    auto w = random_triple(rng);
    for (int n = 1; n <= 6; ++n)
      for (int s = 1; s <= n; ++s) {
        CHECK(efp_oracle(n, n, s, w) == 1);
        Rational diag = efp_oracle(n, s, s, w);
        CHECK(diag == Z(s, w) * Z(n - s, w) * pow(w.a, 2 * s * (n - s)) / Z(n, w));
        for (int r = s; r <= n; ++r) {
          Rational f = efp_oracle(n, r, s, w);
          CHECK(f == efp_oracle(n, r, s, w, EfpRoute::Efpn));
          if (n <= 5) CHECK(f == efp_oracle(n, r, s, w, EfpRoute::Direct));
        }
      }
  }
}

TEST_CASE("polarization by summation matches the enumerated marginal") {
  std::mt19937_64 rng(17);
  auto w = random_triple(rng);
  for (int n = 1; n <= 5; ++n)
    for (int s = 1; s <= n; ++s)
      for (int r = 1; r <= n; ++r) CHECK(polarization_oracle(n, r, s, w) == polarization_oracle(n, r, s, w, true));
}

TEST_CASE("crossing relation between psi_top and psi_bot") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> U(-0.4, 0.4);
  for (int n = 2; n <= 5; ++n)
    for (int s = 1; s < n; ++s) {
      TrigParams p, q;
      p.eta = Complex(0.6 + U(rng), 0.1 * U(rng));
      q.eta = p.eta;
      for (int i = 0; i < n; ++i) {
        p.lambdas.emplace_back(1.1 + U(rng), U(rng));
        p.nus.emplace_back(U(rng), U(rng));
      }
      const double pi = std::acos(-1.0);
      for (auto& l : p.lambdas) q.lambdas.push_back(pi - l);
      // rows of the bottom sublattice carry -nu_1..-nu_s; the remaining rows are unused
      q.nus.assign(static_cast<std::size_t>(n), Complex(0.3, 0.0));
      for (int k = 0; k < s; ++k) q.nus[static_cast<std::size_t>(n - s + k)] = -p.nus[static_cast<std::size_t>(k)];
      auto wp = weight_matrix(p);
      auto wq = weight_matrix(q);
      for (auto& cfg : all_row_configs(n, s)) {
        Complex top = psi_top(cfg, wp, Backend::Enumerate);
        Complex bot = psi_bot(cfg.complement_config(), wq, Backend::Enumerate);
        CHECK(std::abs(top - bot) <= 1e-9 * (1.0 + std::abs(top)));
      }
    }
}
