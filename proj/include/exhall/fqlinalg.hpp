#pragma once

#include <cassert>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "exhall/errors.hpp"

namespace exhall::fq {

// Primes accepted at runtime. Other prime powers are reached only through the
// interpolated coefficient polynomials, never by direct matrix arithmetic.
inline bool is_supported_prime(int p) {
  return p == 2 || p == 3 || p == 5 || p == 7 || p == 11 || p == 13;
}

inline int norm(long long x, int p) {
  long long r = x % p;
  return int(r < 0 ? r + p : r);
}

inline int inv_mod(int x, int p) {
  // p is a small prime, x != 0 mod p
  int out = 1;
  long long base = norm(x, p);
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) out = int(out * base % p);
    base = base * base % p;
  }
  return out;
}

// Dense matrix over F_p, row-major; entries are always kept in [0, p).
struct Mat {
  int rows = 0, cols = 0;
  std::vector<int> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c), 0) {}

  int& at(int r, int c) { return a[size_t(r) * cols + c]; }
  int at(int r, int c) const { return a[size_t(r) * cols + c]; }
  bool operator==(const Mat&) const = default;
};

inline Mat transpose(const Mat& m) {
  Mat out(m.cols, m.rows);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) out.at(c, r) = m.at(r, c);
  return out;
}

inline Mat mul(const Mat& x, const Mat& y, int p) {
  assert(x.cols == y.rows);
  Mat out(x.rows, y.cols);
  for (int r = 0; r < x.rows; ++r)
    for (int k = 0; k < x.cols; ++k) {
      const long long v = x.at(r, k);
      if (v == 0) continue;
      for (int c = 0; c < y.cols; ++c)
        out.at(r, c) = norm(out.at(r, c) + v * y.at(k, c), p);
    }
  return out;
}

inline std::vector<int> apply(const Mat& m, const std::vector<int>& v, int p) {
  assert(int(v.size()) == m.cols);
  std::vector<int> out(m.rows, 0);
  for (int r = 0; r < m.rows; ++r) {
    long long acc = 0;
    for (int c = 0; c < m.cols; ++c) acc += (long long)m.at(r, c) * v[c];
    out[r] = norm(acc, p);
  }
  return out;
}

// In-place reduced row echelon form; returns the pivot columns in order.
inline std::vector<int> rref(Mat& m, int p) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int sel = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
    const int inv = inv_mod(m.at(row, col), p);
    for (int c = 0; c < m.cols; ++c) m.at(row, c) = norm((long long)m.at(row, c) * inv, p);
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const long long f = m.at(r, col);
      for (int c = 0; c < m.cols; ++c)
        m.at(r, c) = norm(m.at(r, c) - f * m.at(row, c), p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int rank(Mat m, int p) { return int(rref(m, p).size()); }

inline bool invertible(const Mat& m, int p) {
  return m.rows == m.cols && rank(m, p) == m.rows;
}

// Basis of {x : m·x = 0}, returned as the columns of a (cols × nullity) matrix.
inline Mat kernel_basis(Mat m, int p) {
  const std::vector<int> pivots = rref(m, p);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  Mat out(m.cols, m.cols - int(pivots.size()));
  int k = 0;
  for (int fc = 0; fc < m.cols; ++fc) {
    if (is_pivot[fc]) continue;
    out.at(fc, k) = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      out.at(pivots[r], k) = norm(-m.at(int(r), fc), p);
    ++k;
  }
  return out;
}

// One solution of m·x = b (free coordinates zero), or nullopt if inconsistent.
inline std::optional<std::vector<int>> solve(const Mat& m, const std::vector<int>& b, int p) {
  assert(int(b.size()) == m.rows);
  Mat aug(m.rows, m.cols + 1);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols) = norm(b[r], p);
  }
  std::vector<int> pivots = rref(aug, p);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  std::vector<int> x(m.cols, 0);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(int(r), m.cols);
  return x;
}

// Number of k-dimensional subspaces of F_p^d. Saturates at `cap` (so callers can
// budget-check without overflow); cap defaults high enough for all exact uses here.
inline unsigned long long gaussian_binomial(int d, int k, int p,
                                            unsigned long long cap = 1ull << 62) {
  if (k < 0 || k > d) return 0;
  // [d,k] = [d-1,k-1] + p^k [d-1,k]; integer-only, no divisions
  std::vector<std::vector<unsigned long long>> t(d + 1,
                                                 std::vector<unsigned long long>(k + 1, 0));
  for (int i = 0; i <= d; ++i) t[i][0] = 1;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= std::min(i, k); ++j) {
      const unsigned long long lo = t[i - 1][j - 1];
      const unsigned long long hi = t[i - 1][j];
      unsigned long long pk = 1;
      bool over = lo > cap || hi > cap;
      for (int e = 0; e < j && !over; ++e) {
        if (pk > cap / (unsigned long long)p) over = true;
        else pk *= (unsigned long long)p;
      }
      if (!over && hi != 0 && pk > cap / hi) over = true;
      if (!over && pk * hi > cap - lo) over = true;
      t[i][j] = over ? cap + 1 : lo + pk * hi;
    }
  return t[d][k];
}

// Visit every k-dimensional subspace of F_p^d exactly once, presented as a k×d
// reduced row-echelon basis (rows span the subspace). Throws BudgetExceeded when
// the subspace count is larger than max_count.
inline void for_each_subspace(int d, int k, int p, unsigned long long max_count,
                              const std::function<void(const Mat&)>& fn) {
  assert(0 <= k && k <= d);
  if (gaussian_binomial(d, k, p, max_count) > max_count)
    throw BudgetExceeded("subspace enumeration over budget: [" + std::to_string(d) + "," +
                         std::to_string(k) + "]_" + std::to_string(p) + " > " +
                         std::to_string(max_count));
  if (k == 0) {
    fn(Mat(0, d));
    return;
  }
  std::vector<int> piv(k);
  for (int i = 0; i < k; ++i) piv[i] = i;
  for (;;) {
    // free cells: row i, column j with j > piv[i] and j not a pivot column
    std::vector<bool> is_pivot(d, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<std::pair<int, int>> free_cells;
    for (int i = 0; i < k; ++i)
      for (int j = piv[i] + 1; j < d; ++j)
        if (!is_pivot[j]) free_cells.emplace_back(i, j);

    Mat m(k, d);
    for (int i = 0; i < k; ++i) m.at(i, piv[i]) = 1;
    std::vector<int> odo(free_cells.size(), 0);
    for (;;) {
      fn(m);
      size_t pos = 0;
      while (pos < odo.size()) {
        odo[pos] = (odo[pos] + 1) % p;
        m.at(free_cells[pos].first, free_cells[pos].second) = odo[pos];
        if (odo[pos] != 0) break;
        ++pos;
      }
      if (pos == odo.size()) break;
    }

    // next pivot combination in lexicographic order
    int i = k - 1;
    while (i >= 0 && piv[i] == d - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
}

// Visit all p^len vectors in odometer order.
inline void for_each_vector(int len, int p,
                            const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> v(len, 0);
  for (;;) {
    fn(v);
    int pos = 0;
    while (pos < len) {
      v[pos] = (v[pos] + 1) % p;
      if (v[pos] != 0) break;
      ++pos;
    }
    if (pos == len) break;
  }
}

}  // namespace exhall::fq
