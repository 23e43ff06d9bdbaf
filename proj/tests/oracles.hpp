#pragma once

// Brute-force references used to check the closed formulas. None of these
// call into the library's decomposition routines.

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

// Peels highest weights off the weight multiset of V_a (x) V_b.
inline std::vector<int> sl2_by_characters(int a, int b) {
  std::map<int, int> weights;
  for (int i = 0; i <= a; ++i)
    for (int j = 0; j <= b; ++j) ++weights[(a - 2 * i) + (b - 2 * j)];
  std::vector<int> out;
  while (!weights.empty()) {
    const int top = weights.rbegin()->first;
    out.push_back(top);
    for (int w = top; w >= -top; w -= 2)
      if (--weights[w] == 0) weights.erase(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Same with the graded character of osp(1|2): V_n^e has weights n, n-1, ..., -n
// (in units of the odd root) with parities e, e+1, ...
inline std::vector<std::pair<int, int>> osp_by_characters(int n1, int e1, int n2, int e2) {
  std::map<std::pair<int, int>, int> weights;
  for (int i = 0; i <= 2 * n1; ++i)
    for (int j = 0; j <= 2 * n2; ++j) ++weights[{(n1 - i) + (n2 - j), (e1 + i + e2 + j) % 2}];
  std::vector<std::pair<int, int>> out;
  while (!weights.empty()) {
    auto it = std::max_element(weights.begin(), weights.end(),
                               [](const auto& x, const auto& y) { return x.first.first < y.first.first; });
    const auto [top, parity] = it->first;
    out.push_back({top, parity});
    for (int i = 0; i <= 2 * top; ++i) {
      const std::pair<int, int> key{top - i, (parity + i) % 2};
      auto found = weights.find(key);
      if (found == weights.end()) throw std::logic_error("graded character is not a sum of irreducibles");
      if (--found->second == 0) weights.erase(found);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Verlinde formula for sl2 at level kmax, in floating point.
inline int verlinde_sl2(int a, int b, int c, int kmax) {
  const double h = kmax + 2;
  const auto S = [&](int x, int y) { return std::sqrt(2.0 / h) * std::sin(std::numbers::pi * (x + 1) * (y + 1) / h); };
  double total = 0;
  for (int m = 0; m <= kmax; ++m) total += S(a, m) * S(b, m) * S(c, m) / S(0, m);
  const long rounded = std::lround(total);
  if (std::abs(total - static_cast<double>(rounded)) > 1e-9) throw std::logic_error("Verlinde sum is not an integer");
  return static_cast<int>(rounded);
}

using IntMatrix = std::vector<std::vector<long long>>;

inline IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix out(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline long long trace(const IntMatrix& m) {
  long long t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

}  // namespace oracle
