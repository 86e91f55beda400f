#include <map>
#include <random>

#include "doctest.h"
#include "dwbc/efp/efp.hpp"

using namespace dwbc;

namespace {

Rational R(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

WeightTriple random_triple(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 9), den(1, 5);
  return WeightTriple(R(num(rng), den(rng)), R(num(rng), den(rng)), R(num(rng), den(rng)));
}

Rational Z(const BoundaryGenFamily& fam, int m) { return m == 0 ? Rational(1) : fam.Z(m); }

}  // namespace

TEST_CASE("divide_by_difference") {
  auto x = ExactMultiPoly::variable(2, 0), y = ExactMultiPoly::variable(2, 1);
  auto q = x * x * y + R(3) * y + ExactMultiPoly::constant(2, R(1, 2));
  CHECK(divide_by_difference((x - y) * q, 0, 1) == q);
  CHECK(divide_by_difference((y - x) * q, 1, 0) == q);
  CHECK_THROWS_AS(divide_by_difference(q, 0, 1), Error);
}

TEST_CASE("efp query validation") {
  WeightTriple w;
  BoundaryGenFamily fam(w, 3);
  for (EfpQuery q : {EfpQuery{3, 2, 0}, EfpQuery{3, 1, 2}, EfpQuery{3, 4, 1}}) {
    try {
      efp_mir_n(q, fam);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidRegion);
    }
  }
  CHECK_THROWS_AS(efp_mir_s(EfpQuery{4, 2, 1}, fam), Error);
}

TEST_CASE("emptiness formation probability: worked values") {
  WeightTriple ice;
  BoundaryGenFamily f3(ice, 3);
  const EfpQuery q{3, 2, 1};
  CHECK(efp_mir_s(q, f3, EfpIntegral::Mir1) == R(5, 7));
  CHECK(efp_mir_s(q, f3, EfpIntegral::Mir2) == R(5, 7));
  CHECK(efp_mir_n(q, f3) == R(5, 7));
  CHECK(efp_by_summation(q, f3, EfpSum::Efp) == R(5, 7));

  WeightTriple w(R(1), R(2), R(2));
  BoundaryGenFamily f4(w, 4);
  const Rational want = efp_oracle(4, 3, 2, w, EfpRoute::Direct);
  CHECK(efp_mir_s(EfpQuery{4, 3, 2}, f4) == want);
  CHECK(efp_mir_n(EfpQuery{4, 3, 2}, f4) == want);

  std::mt19937_64 rng(101);
  for (int rep = 0; rep < 3; ++rep) {
    WeightTriple v = random_triple(rng);
    BoundaryGenFamily fam(v, 4);
    for (int s = 1; s <= 4; ++s) {
      CHECK(efp_mir_s(EfpQuery{4, 4, s}, fam) == 1);
      CHECK(efp_mir_n(EfpQuery{4, 4, s}, fam) == 1);
      // empty integral
      const Rational diag = Z(fam, s) * Z(fam, 4 - s) * pow(v.a, 2L * s * (4 - s)) / fam.Z(4);
      CHECK(efp_mir_n(EfpQuery{4, s, s}, fam) == diag);
    }
  }
}

TEST_CASE("all routes agree exactly for N <= 4") {
  std::mt19937_64 rng(103);
  std::vector<WeightTriple> ws{WeightTriple(R(3, 2), R(2, 3), R(1, 2))};
  for (int i = 0; i < 3; ++i) ws.push_back(random_triple(rng));
  for (const auto& w : ws) {
    BoundaryGenFamily fam(w, 4);
    for (int n = 1; n <= 4; ++n)
      for (int s = 1; s <= n; ++s)
        for (int r = s; r <= n; ++r) {
          const EfpQuery q{n, r, s};
          const Rational ref = efp_oracle(n, r, s, w, EfpRoute::Direct);
          CHECK(efp_by_summation(q, fam, EfpSum::Efp) == ref);
          CHECK(efp_by_summation(q, fam, EfpSum::Efpn) == ref);
          CHECK(efp_by_summation(q, fam, EfpSum::Efp, HSource::Integral) == ref);
          CHECK(efp_by_summation(q, fam, EfpSum::Efpn, HSource::Integral) == ref);
          CHECK(efp_mir_s(q, fam, EfpIntegral::Mir1) == ref);
          CHECK(efp_mir_s(q, fam, EfpIntegral::Mir2) == ref);
          CHECK(efp_mir_n(q, fam) == ref);
          CHECK(efp_mir_n_all_poles(q, fam) == ref);
          CHECK(ref >= 0);
          CHECK(ref <= 1);
          if (r > s) CHECK(ref >= efp_mir_n(EfpQuery{n, r - 1, s}, fam));
        }
  }
}

TEST_CASE("n-fold form beyond the trace sizes") {
  WeightTriple w(R(5, 4), R(3, 5), R(2, 3));
  BoundaryGenFamily fam(w, 5);
  for (int s = 1; s <= 4; ++s)
    for (int r = s; r <= 5; ++r) {
      const Rational ref = efp_oracle(5, r, s, w, EfpRoute::Efp);
      CHECK(efp_mir_n(EfpQuery{5, r, s}, fam) == ref);
      CHECK(efp_mir_s(EfpQuery{5, r, s}, fam) == ref);
    }
}

TEST_CASE("derivation chains are constant") {
  WeightTriple ice;
  BoundaryGenFamily f3(ice, 3);
  auto tr = efp_double_contour_trace(EfpQuery{3, 2, 1}, f3);
  CHECK(tr.s_chain.size() == 7);
  CHECK(tr.n_chain.size() == 8);
  for (auto* chain : {&tr.s_chain, &tr.n_chain})
    for (const auto& st : *chain) {
      REQUIRE(st.value);
      CHECK(*st.value == R(5, 7));
    }

  WeightTriple w(R(3, 2), R(2, 3), R(1, 2));
  BoundaryGenFamily f4(w, 4);
  for (int n = 1; n <= 4; ++n)
    for (int s = 1; s <= n; ++s)
      for (int r = s; r <= n; ++r) {
        const EfpQuery q{n, r, s};
        EfpTrace t;
        CHECK_NOTHROW(t = efp_double_contour_trace(q, f4));
        CHECK_FALSE(t.first_break);
        int skipped = 0;
        for (const auto& st : t.s_chain) skipped += !st.value;
        CHECK(skipped == (s == 4 ? 3 : 0));
        // counterclockwise contours around 1/w_k flip the sign of every odd-n instance
        auto ccw = efp_detail::nefp2bis(q, f4, false);
        auto cw = efp_detail::nefp2bis(q, f4, true);
        REQUIRE(cw);
        CHECK(*ccw == Rational(((r - s) % 2 ? -1 : 1) * *cw));
      }
  CHECK_THROWS_AS(efp_double_contour_trace(EfpQuery{5, 3, 2}, BoundaryGenFamily(w, 5)), Error);
}

TEST_CASE("geometric multisum closed form") {
  // sum over -inf < r_1 < r_2 <= r of p_1^{-r_1} p_2^{-r_2}, truncated at depth 30
  const int r = 3, depth = 30;
  std::map<std::pair<int, int>, Rational> direct;
  for (int r2 = r - depth; r2 <= r; ++r2)
    for (int r1 = r - depth; r1 < r2; ++r1) direct[{-r1, -r2}] += 1;
  auto p1 = ExactExpr::var(0), p2 = ExactExpr::var(1);
  ExactExpr closed = 1 / (pow(p1, r - 1) * (1 - p1) * pow(p2, r) * (1 - p1 * p2));
  auto S = closed.expand({R(0), R(0)}, {depth, depth});
  int compared = 0;
  // exponents reachable without truncation: both at most -r + depth
  for (int e1 = -r; e1 <= depth - r - 1; ++e1)
    for (int e2 = -r; e2 <= depth - r; ++e2) {
      auto it = direct.find({e1, e2});
      CHECK(S.coeff({e1, e2}) == (it == direct.end() ? Rational(0) : it->second));
      ++compared;
    }
  CHECK(compared > 100);
}

TEST_CASE("symmetric residue identity at s = 2") {
  const std::vector<Rational> w{R(1, 3), R(-2, 5)};
  auto y0 = ExactExpr::var(0), y1 = ExactExpr::var(1);
  std::vector<std::pair<ExactExpr, Rational>> phis{
      {y0 + y1, w[0] + w[1]}, {y0 * y1, w[0] * w[1]}, {ExactExpr(1) + y0 * y1 * (y0 + y1), 1 + w[0] * w[1] * (w[0] + w[1])}};
  for (const auto& [phi, at] : phis) {
    ExactExpr F = (y0 - y1) * (y1 - y0) * phi;
    for (const auto& y : {y0, y1})
      for (const auto& wk : w) F = F / (y - ExactExpr(wk));
    Rational total(0);
    // each contour encloses both points
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) total += joint_residue(F, {w[static_cast<std::size_t>(a)], w[static_cast<std::size_t>(b)]}, {2, 2});
    CHECK(total == 2 * at);
  }
}

TEST_CASE("poles of the double product do not contribute") {
  WeightTriple w(R(3, 2), R(2, 3), R(1, 2));
  BoundaryGenFamily fam(w, 4);
  const Rational delta = w.delta(), t = w.t();
  const std::vector<Rational> wv{R(1, 5), R(2, 7), R(-3, 11)};
  for (int n = 2; n <= 3; ++n) {
    const EfpQuery q{4, 1 + n, 1};
    std::vector<Rational> ws(wv.begin(), wv.begin() + n);
    auto z1 = ExactExpr::var(0);

    // residue at z_n = (2 Delta z_1 - 1) / z_1 stays bounded as z_1 -> 0
    std::vector<ExactExpr> z{z1};
    for (int j = 1; j < n - 1; ++j) z.emplace_back(R(3, 7));
    z.push_back((ExactExpr(2 * delta) * z1 - 1) / z1);
    ExactExpr res = efp_detail::nefp2_z_integrand(q, fam, ws, z, std::make_pair(0, n - 1)) / z1;
    auto S = res.expand({R(0)}, {4});
    CHECK(S.lo(0) >= 0);

    // h_{N,n}(z / t) on the same locus is O(z_1)
    std::vector<ExactExpr> zt;
    for (const auto& e : z) zt.push_back(e / ExactExpr(t));
    std::vector<ExactPoly> h;
    for (int m = 1; m <= 4; ++m) h.push_back(fam.h(m));
    auto Hs = ExactExpr::apply(hns_poly(h, 4, n), zt).expand({R(0)}, {4});
    CHECK(Hs.lo(0) >= 1);

    // P_n vanishes at z_1 = 1/w_k on z_n = 1 / (2 Delta - z_1)
    const auto& P = cantini_poly(n, delta);
    for (int k = 0; k < n; ++k) {
      std::vector<Rational> pt(ws);
      const Rational zk = 1 / ws[static_cast<std::size_t>(k)];
      pt.push_back(zk);
      for (int j = 1; j < n - 1; ++j) pt.push_back(R(3, 7));
      pt.push_back(Rational(1 / (2 * delta - zk)));
      CHECK(is_zero(P(pt)));
    }

    // decay like z_n^{-2} at infinity
    auto xi = ExactExpr::var(0);
    std::vector<ExactExpr> zl;
    for (int j = 0; j < n - 1; ++j) zl.emplace_back(R(2 + j, 9));
    zl.push_back(1 / xi);
    auto D = efp_detail::nefp2_z_integrand(q, fam, ws, zl).expand({R(0)}, {6});
    CHECK(D.lo(0) >= 2);
  }
}

TEST_CASE("cantini polynomial structure") {
  const Rational delta(R(-7, 12));
  CHECK(cantini_poly(1, delta) == ExactMultiPoly::constant(2, R(1)));
  for (int s = 2; s <= 3; ++s) {
    const auto& P = cantini_poly(s, delta);
    CHECK(P.nvars() == 2 * s);
    for (int j = 0; j < 2 * s; ++j) CHECK(P.degree_in(j) == s - 1);
    std::vector<int> perm(static_cast<std::size_t>(2 * s));
    for (int j = 0; j < 2 * s; ++j) perm[static_cast<std::size_t>(j)] = j;
    std::swap(perm[0], perm[1]);
    CHECK(P.permuted(perm) == P);
    std::swap(perm[0], perm[1]);
    std::swap(perm[static_cast<std::size_t>(s)], perm[static_cast<std::size_t>(2 * s - 1)]);
    CHECK(P.permuted(perm) == P);
  }
}
