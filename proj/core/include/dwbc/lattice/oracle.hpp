#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "dwbc/exact/poly.hpp"
#include "dwbc/lattice/row_config.hpp"
#include "dwbc/lattice/weights.hpp"

namespace dwbc {

enum class Backend { Enumerate, Transfer };

struct SizeLimits {
  int enumeration = 6;
  int transfer = 14;
  // DWBC_MAX_N, when set, replaces both bounds
  static SizeLimits from_env();
};

// Weight of the vertex at (alpha, k) with the given arrows (1 = up/right); nullptr if the ice rule fails.
template <class S>
const S* vertex_weight(const VertexWeights<S>& w, int alpha, int k, int left, int right, int top, int bottom) {
  if (left + bottom != right + top) return nullptr;
  if (left == right) return left == top ? &w.a(alpha, k) : &w.b(alpha, k);
  return &w.c;
}

// Sublattice of horizontal lines k0..k1 with the given vertical arrows above and below,
// DWBC on the left and right.  Column operators are applied from alpha = 1 (rightmost)
// to alpha = n on the 2^(k1-k0+1) space of horizontal arrows.
template <class S>
S sublattice_transfer(const VertexWeights<S>& w, int k0, int k1, std::uint32_t top, std::uint32_t bottom) {
  const int m = k1 - k0 + 1;
  const std::size_t dim = std::size_t{1} << m;
  std::vector<S> v(dim, Field<S>::zero());
  v[dim - 1] = Field<S>::one();
  std::array<std::vector<S>, 2> cur, nxt;
  for (int alpha = 1; alpha <= w.n; ++alpha) {
    const int vt = static_cast<int>((top >> (alpha - 1)) & 1u);
    const int vb_end = static_cast<int>((bottom >> (alpha - 1)) & 1u);
    cur[0].assign(dim, Field<S>::zero());
    cur[1].assign(dim, Field<S>::zero());
    cur[static_cast<std::size_t>(vt)] = v;
    for (int i = 0; i < m; ++i) {
      const int k = k0 + i;
      nxt[0].assign(dim, Field<S>::zero());
      nxt[1].assign(dim, Field<S>::zero());
      for (int vs = 0; vs < 2; ++vs) {
        for (std::size_t st = 0; st < dim; ++st) {
          const S& amp = cur[static_cast<std::size_t>(vs)][st];
          if (Field<S>::is_zero(amp)) continue;
          const int h = static_cast<int>((st >> i) & 1u);
          for (int hl = 0; hl < 2; ++hl) {
            const int vb = h + vs - hl;
            if (vb < 0 || vb > 1) continue;
            const S* wt = vertex_weight(w, alpha, k, hl, h, vs, vb);
            if (!wt) continue;
            std::size_t ns = (st & ~(std::size_t{1} << i)) | (static_cast<std::size_t>(hl) << i);
            nxt[static_cast<std::size_t>(vb)][ns] += amp * *wt;
          }
        }
      }
      std::swap(cur, nxt);
    }
    v = cur[static_cast<std::size_t>(vb_end)];
  }
  return v[0];
}

// Depth-first enumeration of every configuration of the sublattice k0..k1.
// vis(weight, rows) receives the product weight and the vertical-arrow mask below each row.
template <class S, class Visitor>
void enumerate_sublattice(const VertexWeights<S>& w, int k0, int k1, std::uint32_t top, std::uint32_t bottom,
                          Visitor&& vis) {
  const int m = k1 - k0 + 1;
  const int n = w.n;
  std::vector<std::uint32_t> rows;
  if (m <= 0) {
    if (top == bottom) vis(Field<S>::one(), rows);
    return;
  }
  auto rec = [&](auto&& self, int i, int alpha, int hleft, std::uint32_t above, std::uint32_t below,
                 const S& weight) -> void {
    if (alpha == 0) {
      if (hleft != 1) return;
      rows.push_back(below);
      if (i == m - 1) {
        if (below == bottom) vis(weight, rows);
      } else {
        self(self, i + 1, n, 0, below, 0u, weight);
      }
      rows.pop_back();
      return;
    }
    const int vt = static_cast<int>((above >> (alpha - 1)) & 1u);
    for (int vb = 0; vb < 2; ++vb) {
      const int h = hleft + vb - vt;
      if (h < 0 || h > 1) continue;
      const S* wt = vertex_weight(w, alpha, k0 + i, hleft, h, vt, vb);
      if (!wt) continue;
      S nw = weight * *wt;
      self(self, i, alpha - 1, h, above, below | (static_cast<std::uint32_t>(vb) << (alpha - 1)), nw);
    }
  };
  rec(rec, 0, n, 0, top, 0u, Field<S>::one());
}

inline std::uint32_t full_mask(int n) { return n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1u); }

namespace detail {
void check_size(int n, int m, Backend b, const SizeLimits& lim);
}

template <class S>
S sublattice(const VertexWeights<S>& w, int k0, int k1, std::uint32_t top, std::uint32_t bottom, Backend b,
             const SizeLimits& lim) {
  detail::check_size(w.n, k1 - k0 + 1, b, lim);
  if (b == Backend::Transfer) return sublattice_transfer(w, k0, k1, top, bottom);
  S acc = Field<S>::zero();
  enumerate_sublattice(w, k0, k1, top, bottom, [&](const S& wt, const std::vector<std::uint32_t>&) { acc += wt; });
  return acc;
}

template <class S>
S partition_function(const VertexWeights<S>& w, Backend b, const SizeLimits& lim = SizeLimits::from_env()) {
  return sublattice(w, 1, w.n, 0u, full_mask(w.n), b, lim);
}

template <class S>
S psi_top(const RowConfig& cfg, const VertexWeights<S>& w, Backend b, const SizeLimits& lim = SizeLimits::from_env()) {
  return sublattice(w, 1, cfg.s(), 0u, cfg.mask(), b, lim);
}

template <class S>
S psi_bot(const RowConfig& cfg, const VertexWeights<S>& w, Backend b, const SizeLimits& lim = SizeLimits::from_env()) {
  return sublattice(w, cfg.s() + 1, w.n, cfg.mask(), full_mask(w.n), b, lim);
}

Rational enumerate_Z(int n, const WeightTriple& w, Backend b = Backend::Transfer);
Complex enumerate_Z(const VertexWeights<Complex>& w);

Rational psi_top(const RowConfig& cfg, const WeightTriple& w, Backend b = Backend::Transfer);
Rational psi_bot(const RowConfig& cfg, const WeightTriple& w, Backend b = Backend::Transfer);

// H = psi_top psi_bot / Z
Rational row_config_probability(const RowConfig& cfg, const WeightTriple& w, Backend b = Backend::Transfer);

enum class EfpRoute { Efp, Efpn, Direct };

// Emptiness formation probability F_N^{(r,s)}.
Rational efp_oracle(int n, int r, int s, const WeightTriple& w, EfpRoute route = EfpRoute::Efp,
                    Backend b = Backend::Transfer);

// Probability of an up arrow on vertical line r of row s: by summing H, or (Direct) as an enumerated marginal.
Rational polarization_oracle(int n, int r, int s, const WeightTriple& w, bool direct = false);

// h_N(z) = sum_r H_N^{(r)} z^{r-1}
ExactPoly boundary_generating_poly(int n, const WeightTriple& w, Backend b = Backend::Transfer);

// h_1 .. h_N at fixed weights, built once.
class BoundaryGenFamily {
 public:
  BoundaryGenFamily(const WeightTriple& w, int n_max);
  const WeightTriple& weights() const { return w_; }
  int max_size() const { return static_cast<int>(h_.size()); }
  const ExactPoly& h(int m) const;
  // z^{M-1} h_M(1/z), i.e. the family at swapped weights
  ExactPoly h_tilde(int m) const { return h(m).reversed(m - 1); }
  // Z_M for M = 0..N (Z_0 = 1)
  const Rational& Z(int m) const;

 private:
  WeightTriple w_;
  std::vector<ExactPoly> h_;
  std::vector<Rational> z_;
};

}  // namespace dwbc
