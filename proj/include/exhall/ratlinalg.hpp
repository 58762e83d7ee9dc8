#pragma once

#include <cstdlib>
#include <numeric>
#include <optional>
#include <vector>

#include "exhall/rational.hpp"

namespace exhall {

using RatMat = std::vector<std::vector<Rat>>;

// Rank over the rationals (exact Gaussian elimination).
inline int rational_rank(RatMat m) {
  if (m.empty()) return 0;
  const int rows = int(m.size()), cols = int(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int sel = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != Rat{0}) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[sel], m[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == Rat{0}) continue;
      const Rat f = m[r][col] / m[rank][col];
      for (int c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

inline int rational_rank_rows(const std::vector<std::vector<long long>>& rows) {
  RatMat m;
  for (const auto& r : rows) {
    std::vector<Rat> row;
    row.reserve(r.size());
    for (long long v : r) row.emplace_back(v);
    m.push_back(std::move(row));
  }
  return rational_rank(std::move(m));
}

// Unique solution of a square nonsingular system; nullopt when singular.
inline std::optional<std::vector<Rat>> solve_square(RatMat a, std::vector<Rat> b) {
  const int n = int(a.size());
  for (int col = 0; col < n; ++col) {
    int sel = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != Rat{0}) {
        sel = r;
        break;
      }
    if (sel < 0) return std::nullopt;
    std::swap(a[sel], a[col]);
    std::swap(b[sel], b[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == Rat{0}) continue;
      const Rat f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rat> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Smith normal form diagonal (nonzero invariant factors, each dividing the
// next) of an integer matrix. Row/column operations only; entries stay small
// for the near-unimodular relation matrices this library produces.
inline std::vector<long long> smith_invariant_factors(std::vector<std::vector<long long>> m) {
  std::vector<long long> out;
  if (m.empty() || m[0].empty()) return out;
  int rows = int(m.size()), cols = int(m[0].size());
  int top = 0, left = 0;
  while (top < rows && left < cols) {
    // find a nonzero pivot with minimal absolute value
    int pr = -1, pc = -1;
    long long best = 0;
    for (int r = top; r < rows; ++r)
      for (int c = left; c < cols; ++c)
        if (m[r][c] != 0 && (best == 0 || std::abs(m[r][c]) < best)) {
          best = std::abs(m[r][c]);
          pr = r;
          pc = c;
        }
    if (pr < 0) break;
    std::swap(m[pr], m[top]);
    for (int r = top; r < rows; ++r) std::swap(m[r][pc], m[r][left]);

    bool again = true;
    while (again) {
      again = false;
      for (int r = top + 1; r < rows; ++r) {
        if (m[r][left] == 0) continue;
        const long long f = m[r][left] / m[top][left];
        for (int c = left; c < cols; ++c) m[r][c] -= f * m[top][c];
        if (m[r][left] != 0) {
          std::swap(m[r], m[top]);
          again = true;
        }
      }
      for (int c = left + 1; c < cols; ++c) {
        if (m[top][c] == 0) continue;
        const long long f = m[top][c] / m[top][left];
        for (int r = top; r < rows; ++r) m[r][c] -= f * m[r][left];
        if (m[top][c] != 0) {
          for (int r = top; r < rows; ++r) std::swap(m[r][c], m[r][left]);
          again = true;
        }
      }
    }
    out.push_back(std::abs(m[top][left]));
    ++top;
    ++left;
  }
  // enforce the divisibility chain d_i | d_{i+1}
  for (size_t i = 0; i + 1 < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j) {
      if (out[j] % out[i] == 0) continue;
      const long long g = std::gcd(out[i], out[j]);
      out[j] = out[i] / g * out[j];
      out[i] = g;
    }
  return out;
}

}  // namespace exhall
