#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dwbc/error.hpp"

namespace dwbc {

// Up-arrow positions r_1 < ... < r_s on the row between horizontal lines s and s+1.
// Positions count vertical lines from the right, 1..n.
class RowConfig {
 public:
  RowConfig(int n, std::vector<int> positions) : n_(n), r_(std::move(positions)) {
    if (n_ < 1) fail(ErrorKind::InvalidConfig, "lattice size must be positive");
    for (std::size_t j = 0; j < r_.size(); ++j) {
      if (r_[j] < 1 || r_[j] > n_) fail(ErrorKind::InvalidConfig, "position out of range");
      if (j > 0 && r_[j] <= r_[j - 1]) fail(ErrorKind::InvalidConfig, "positions must be strictly increasing");
    }
  }

  int n() const { return n_; }
  int s() const { return static_cast<int>(r_.size()); }
  const std::vector<int>& positions() const { return r_; }
  int operator[](int j) const { return r_[static_cast<std::size_t>(j)]; }  // 0-based j

  std::vector<int> complement() const {
    std::vector<int> c;
    std::size_t j = 0;
    for (int p = 1; p <= n_; ++p) {
      if (j < r_.size() && r_[j] == p) {
        ++j;
        continue;
      }
      c.push_back(p);
    }
    return c;
  }

  RowConfig complement_config() const { return RowConfig(n_, complement()); }

  // bit (alpha - 1) set for an up arrow on vertical line alpha
  std::uint32_t mask() const {
    std::uint32_t m = 0;
    for (int p : r_) m |= std::uint32_t{1} << (p - 1);
    return m;
  }

  std::string str() const {
    std::string out = "(";
    for (std::size_t j = 0; j < r_.size(); ++j) out += (j ? "," : "") + std::to_string(r_[j]);
    return out + ")";
  }

  friend bool operator==(const RowConfig& x, const RowConfig& y) { return x.n_ == y.n_ && x.r_ == y.r_; }

 private:
  int n_;
  std::vector<int> r_;
};

// All row configurations with s up arrows among positions lo..hi (inclusive), lexicographic.
std::vector<std::vector<int>> combinations(int lo, int hi, int s);

inline std::vector<RowConfig> all_row_configs(int n, int s) {
  std::vector<RowConfig> out;
  for (auto& c : combinations(1, n, s)) out.emplace_back(n, c);
  return out;
}

}  // namespace dwbc
