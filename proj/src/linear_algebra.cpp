#include "germforge/linear_algebra.hpp"

#include "germforge/errors.hpp"

namespace germforge {

std::size_t matrix_rank(RationalMatrix m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  for (const auto& row : m)
    if (row.size() != cols) throw DomainError("matrix_rank: ragged matrix");
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Rational>> nonnegative_solution(const RationalMatrix& a, const std::vector<Rational>& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw DomainError("nonnegative_solution: dimension mismatch");
  const std::size_t n = m == 0 ? 0 : a.front().size();
  if (m == 0) return std::vector<Rational>(n);
  for (const auto& row : a)
    if (row.size() != n) throw DomainError("nonnegative_solution: ragged matrix");

  // Tableau: n structural columns, m artificial columns, right-hand side.
  const std::size_t width = n + m + 1;
  const std::size_t rhs = n + m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t[i][n + i] = 1;
    t[i][rhs] = flip ? Rational(-b[i]) : b[i];
    basis[i] = n + i;
  }
  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<Rational> z(width);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) z[j] -= t[i][j];
    z[rhs] -= t[i][rhs];
  }

  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < rhs; ++j)
      if (z[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen for phase one
    const Rational p = t[leave][enter];
    for (auto& v : t[leave]) v /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t k = 0; k < width; ++k) t[i][k] -= f * t[leave][k];
    }
    const Rational f = z[enter];
    for (std::size_t k = 0; k < width; ++k) z[k] -= f * t[leave][k];
    basis[leave] = enter;
  }
  if (z[rhs] != 0) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][rhs];
  return x;
}

}  // namespace germforge
