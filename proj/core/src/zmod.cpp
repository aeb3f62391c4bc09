#include "twistk/zmod.hpp"

#include <numeric>

namespace twistk::detail {

namespace {

std::int64_t norm(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

// modular inverse of a mod m, gcd(a,m)=1
std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t t = 0, newt = 1, r = m, newr = norm(a, m);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  return norm(t, m);
}

}  // namespace

std::optional<std::vector<std::int64_t>> solve_mod(
    std::vector<std::vector<std::int64_t>> A, std::vector<std::int64_t> b,
    std::int64_t m) {
  const int rows = static_cast<int>(A.size());
  const int cols = rows ? static_cast<int>(A[0].size()) : 0;
  for (auto& row : A)
    for (auto& v : row) v = norm(v, m);
  for (auto& v : b) v = norm(v, m);

  std::vector<std::pair<int, int>> pivots;  // (row, col)
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // gcd elimination: reduce the column below r to a single nonzero entry
    while (true) {
      int best = -1;
      for (int i = r; i < rows; ++i)
        if (A[i][c] != 0 && (best < 0 || A[i][c] < A[best][c])) best = i;
      if (best < 0) break;
      bool others = false;
      for (int i = r; i < rows; ++i) {
        if (i == best || A[i][c] == 0) continue;
        others = true;
        std::int64_t q = A[i][c] / A[best][c];
        for (int j = 0; j < cols; ++j)
          A[i][j] = norm(A[i][j] - q * A[best][j], m);
        b[i] = norm(b[i] - q * b[best], m);
      }
      if (!others) {
        std::swap(A[best], A[r]);
        std::swap(b[best], b[r]);
        pivots.emplace_back(r, c);
        ++r;
        break;
      }
    }
  }
  // consistency of the remaining zero rows
  for (int i = r; i < rows; ++i) {
    bool zero = true;
    for (int j = 0; j < cols; ++j) zero = zero && A[i][j] == 0;
    if (zero && b[i] != 0) return std::nullopt;
  }

  std::vector<std::int64_t> x(cols, 0);
  for (int p = static_cast<int>(pivots.size()) - 1; p >= 0; --p) {
    auto [i, c] = pivots[p];
    std::int64_t rhs = b[i];
    for (int j = c + 1; j < cols; ++j)
      rhs = norm(rhs - A[i][j] * x[j], m);
    std::int64_t a = A[i][c];
    std::int64_t d = std::gcd(a, m);
    if (rhs % d != 0) return std::nullopt;
    std::int64_t mm = m / d;
    x[c] = norm((rhs / d) % mm * inv_mod(a / d, mm), mm);
  }
  return x;
}

}  // namespace twistk::detail
