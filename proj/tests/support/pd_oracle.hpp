#pragma once

// Independent Jones polynomial from planar diagram codes: X[i, j, k, l] lists
// the four arc labels counterclockwise starting from the incoming under arc.
// A-smoothing joins (i, j)(k, l), B joins (i, l)(j, k). Used only as a test oracle.

#include <array>
#include <map>
#include <numeric>
#include <vector>

#include "apexis/spatial/gauss_code.hpp"

namespace oracle {

using Pd = std::vector<std::array<int, 4>>;

inline int pd_sign(const std::array<int, 4>& x, int arcs) {
  const int j = x[1];
  const int l = x[3];
  return (j - l + arcs) % arcs == 1 ? 1 : -1;
}

// Bracket as exponent -> coefficient in A.
inline std::map<int, long long> pd_bracket(const Pd& pd) {
  const int n = static_cast<int>(pd.size());
  const int arcs = 2 * n;
  std::map<int, long long> total;
  for (int state = 0; state < (1 << n); ++state) {
    std::vector<int> parent(arcs + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    int a_count = 0;
    for (int c = 0; c < n; ++c) {
      const auto& x = pd[c];
      if ((state >> c) & 1) {
        unite(x[0], x[3]);
        unite(x[1], x[2]);
      } else {
        ++a_count;
        unite(x[0], x[1]);
        unite(x[2], x[3]);
      }
    }
    int loops = 0;
    for (int a = 1; a <= arcs; ++a) loops += find(a) == a;
    // A^(a-b) * (-A^2 - A^-2)^(loops-1), expanded binomially.
    const int shift = a_count - (n - a_count);
    const int m = loops - 1;
    long long binom = 1;
    for (int r = 0; r <= m; ++r) {
      const long long coeff = (m % 2 == 0 ? 1 : -1) * binom;
      total[shift + 2 * (m - r) - 2 * r] += coeff;
      binom = binom * (m - r) / (r + 1);
    }
  }
  for (auto it = total.begin(); it != total.end();) it = it->second == 0 ? total.erase(it) : std::next(it);
  return total;
}

// Jones in t as exponent -> coefficient.
inline std::map<int, long long> pd_jones(const Pd& pd) {
  const int arcs = 2 * static_cast<int>(pd.size());
  int w = 0;
  for (const auto& x : pd) w += pd_sign(x, arcs);
  std::map<int, long long> out;
  for (auto [e, c] : pd_bracket(pd)) {
    const int a_exp = e - 3 * w;
    const long long coeff = (w % 2 == 0 ? 1 : -1) * c;
    out[-a_exp / 4] += coeff;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Gauss code read off a PD code by following arc labels.
inline apexis::SignedGaussCode pd_to_gauss(const Pd& pd) {
  const int arcs = 2 * static_cast<int>(pd.size());
  apexis::SignedGaussCode code;
  for (int arc = 1; arc <= arcs; ++arc) {
    for (int c = 0; c < static_cast<int>(pd.size()); ++c) {
      const auto& x = pd[c];
      const int sign = pd_sign(x, arcs);
      const int over_in = sign > 0 ? x[3] : x[1];
      if (x[0] == arc) code.entries.push_back({c + 1, false, sign});
      if (over_in == arc) code.entries.push_back({c + 1, true, sign});
    }
  }
  return code;
}

inline std::map<int, long long> as_map(const apexis::LaurentPolynomial& p) {
  return {p.terms().begin(), p.terms().end()};
}

}  // namespace oracle
