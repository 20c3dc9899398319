#pragma once

// Slow reference implementations for cross-checking. Nothing here touches the
// library's exterior engine: monomials are plain label lists and linear
// algebra is dense Gaussian elimination.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Labels = std::vector<int>;  // 0-based, frozen order a1,b1,a2,b2,...
using Element = std::map<Labels, mpq_class>;

inline int omega(int i, int j) {
  if (i / 2 != j / 2 || i == j) return 0;
  return i % 2 == 0 ? 1 : -1;
}

/// Sign of the sorting permutation by inversion count; 0 on repeats.
inline int parity(const Labels& l) {
  int inv = 0;
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j) {
      if (l[i] == l[j]) return 0;
      if (l[i] > l[j]) ++inv;
    }
  return inv % 2 ? -1 : 1;
}

inline void add(Element& e, Labels l, const mpq_class& c) {
  int s = parity(l);
  if (s == 0 || c == 0) return;
  std::sort(l.begin(), l.end());
  e[l] += s * c;
  if (e[l] == 0) e.erase(l);
}

/// Term-by-term contraction with positions counted from 1.
inline Element contract(const Element& x) {
  Element out;
  for (const auto& [l, c] : x) {
    const int k = static_cast<int>(l.size());
    for (int j = 1; j <= k; ++j)
      for (int m = j + 1; m <= k; ++m) {
        int w = omega(l[j - 1], l[m - 1]);
        if (!w) continue;
        Labels rest;
        for (int t = 1; t <= k; ++t)
          if (t != j && t != m) rest.push_back(l[t - 1]);
        int sign = (j + m + 1) % 2 ? -1 : 1;
        add(out, rest, sign * w * c);
      }
  }
  return out;
}

inline Element wedge(const Element& x, const Element& y) {
  Element out;
  for (const auto& [p, c] : x)
    for (const auto& [q, d] : y) {
      Labels l = p;
      l.insert(l.end(), q.begin(), q.end());
      add(out, l, c * d);
    }
  return out;
}

inline std::size_t rank(std::vector<std::vector<mpq_class>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      mpq_class f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

/// All strictly increasing label lists of size k from 0..n-1.
inline std::vector<Labels> subsets(int n, int k) {
  std::vector<Labels> out;
  Labels cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Nullity of C_k on ^k Q^{2g}, from the dense matrix of the contraction.
inline std::size_t contraction_nullity(int g, int k) {
  auto cols = subsets(2 * g, k);
  if (k < 2) return cols.size();
  auto targets = subsets(2 * g, k - 2);
  std::map<Labels, std::size_t> row_of;
  for (std::size_t i = 0; i < targets.size(); ++i) row_of[targets[i]] = i;
  // Transposed: one row per column monomial; rank is the same.
  std::vector<std::vector<mpq_class>> m(cols.size(), std::vector<mpq_class>(targets.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [l, c] : contract(Element{{cols[j], 1}})) m[j][row_of.at(l)] = c;
  return cols.size() - rank(m);
}

}  // namespace oracle
