#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the generators or maps it is used to check.

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Grid = std::vector<std::vector<int>>;

/// Direct check of the textbook definition: every line sums to 1 and its
/// nonzero entries alternate, starting and ending with +1.
inline bool is_asm(const Grid& g) {
  const std::size_t n = g.size();
  auto line_ok = [](const std::vector<int>& line) {
    int expected = 1;
    int sum = 0;
    int last = 0;
    for (int v : line) {
      if (v < -1 || v > 1) return false;
      if (v == 0) continue;
      if (v != expected) return false;
      expected = -expected;
      last = v;
      sum += v;
    }
    return sum == 1 && last == 1;
  };
  for (const auto& row : g)
    if (row.size() != n || !line_ok(row)) return false;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<int> col;
    for (std::size_t r = 0; r < n; ++r) col.push_back(g[r][c]);
    if (!line_ok(col)) return false;
  }
  return true;
}

/// All 3^(n*n) sign matrices filtered by is_asm. Only sensible for n <= 3.
inline std::set<Grid> brute_force_asms(int n) {
  std::set<Grid> out;
  const int cells = n * n;
  std::vector<int> digits(static_cast<std::size_t>(cells), -1);
  while (true) {
    Grid g(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < cells; ++i) g[static_cast<std::size_t>(i / n)][static_cast<std::size_t>(i % n)] = digits[static_cast<std::size_t>(i)];
    if (is_asm(g)) out.insert(g);
    int i = 0;
    while (i < cells && digits[static_cast<std::size_t>(i)] == 1) digits[static_cast<std::size_t>(i++)] = -1;
    if (i == cells) break;
    ++digits[static_cast<std::size_t>(i)];
  }
  return out;
}

/// ASMs via monotone triangles: row k of the triangle lists the columns whose
/// partial sum over the first k rows equals 1; strictly increasing rows with
/// the interlacing condition a[k+1][i] <= a[k][i] <= a[k+1][i+1].
inline std::set<Grid> monotone_triangle_asms(int n) {
  std::set<Grid> out;
  std::vector<std::vector<int>> tri(static_cast<std::size_t>(n));
  tri[static_cast<std::size_t>(n - 1)].resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) tri[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i)] = i + 1;

  std::function<void(int, int)> fill = [&](int k, int i) {
    // Filling row k (0-based, length k+1) at position i, from row k+1 below.
    if (k < 0) {
      Grid g(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
      for (int r = 0; r < n; ++r) {
        for (int c : tri[static_cast<std::size_t>(r)]) g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] += 1;
        if (r > 0)
          for (int c : tri[static_cast<std::size_t>(r - 1)]) g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] -= 1;
      }
      out.insert(g);
      return;
    }
    auto& row = tri[static_cast<std::size_t>(k)];
    const auto& below = tri[static_cast<std::size_t>(k + 1)];
    if (i == 0) row.assign(static_cast<std::size_t>(k + 1), 0);
    if (i > k) {
      fill(k - 1, 0);
      return;
    }
    const int lo = std::max(below[static_cast<std::size_t>(i)], i > 0 ? row[static_cast<std::size_t>(i - 1)] + 1 : 1);
    const int hi = below[static_cast<std::size_t>(i + 1)];
    for (int v = lo; v <= hi; ++v) {
      row[static_cast<std::size_t>(i)] = v;
      fill(k, i + 1);
    }
  };
  if (n == 1) {
    out.insert(Grid{{1}});
    return out;
  }
  fill(n - 2, 0);
  return out;
}

/// Catalan numbers from the ballot recursion on lattice points.
inline std::uint64_t catalan(int n) {
  std::vector<std::vector<std::uint64_t>> ways(static_cast<std::size_t>(n + 1),
                                               std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1), 0));
  ways[0][0] = 1;
  for (int e = 0; e <= n; ++e)
    for (int s = 0; s <= e; ++s) {
      if (e == 0 && s == 0) continue;
      std::uint64_t w = 0;
      if (e > 0 && s <= e - 1) w += ways[static_cast<std::size_t>(e - 1)][static_cast<std::size_t>(s)];
      if (s > 0) w += ways[static_cast<std::size_t>(e)][static_cast<std::size_t>(s - 1)];
      ways[static_cast<std::size_t>(e)][static_cast<std::size_t>(s)] = w;
    }
  return ways[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)];
}

/// Every E/S word of length 2n that is a Dyck path, found by filtering all
/// 2^(2n) words.
inline std::vector<std::string> brute_force_dyck_words(int n) {
  std::vector<std::string> out;
  const int len = 2 * n;
  for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
    std::string w;
    int h = 0;
    bool ok = true;
    for (int i = len - 1; i >= 0; --i) {
      const bool east = ((bits >> i) & 1u) == 0;  // E sorts before S
      w += east ? 'E' : 'S';
      h += east ? 1 : -1;
      if (h < 0) ok = false;
    }
    if (ok && h == 0) out.push_back(w);
  }
  return out;
}

/// x_k = sum over i + j = k + 1, written out index by index.
inline std::vector<int> xray(const Grid& g) {
  const int n = static_cast<int>(g.size());
  std::vector<int> x;
  for (int k = 1; k <= 2 * n - 1; ++k) {
    int s = 0;
    for (int i = 1; i <= n; ++i) {
      const int j = k + 1 - i;
      if (j >= 1 && j <= n) s += g[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }
    x.push_back(s);
  }
  return x;
}

/// Figure 1: the image of EEEESEESSESESSSS.
inline const Grid& figure1() {
  static const Grid g = {
      {0, 0, 0, 1, 0, 0, 0, 0},   //
      {0, 0, 1, -1, 0, 1, 0, 0},  //
      {0, 1, -1, 0, 1, 0, 0, 0},  //
      {1, -1, 0, 1, 0, -1, 1, 0}, //
      {0, 0, 1, 0, -1, 1, -1, 1}, //
      {0, 1, 0, -1, 1, -1, 1, 0}, //
      {0, 0, 0, 1, -1, 1, 0, 0},  //
      {0, 0, 0, 0, 1, 0, 0, 0},   //
  };
  return g;
}

/// Figure 2, left: a diagonally symmetric ASM with the same shadow path as
/// figure1() that is not in the image.
inline const Grid& figure2_left() {
  static const Grid g = {
      {0, 0, 0, 1, 0, 0, 0, 0},   //
      {0, 1, 0, -1, 0, 1, 0, 0},  //
      {0, 0, 0, 0, 1, 0, 0, 0},   //
      {1, -1, 0, 0, 0, 0, 1, 0},  //
      {0, 0, 1, 0, 0, 0, -1, 1},  //
      {0, 1, 0, 0, 0, -1, 1, 0},  //
      {0, 0, 0, 1, -1, 1, 0, 0},  //
      {0, 0, 0, 0, 1, 0, 0, 0},   //
  };
  return g;
}

/// Figure 2, right: the image of figure2_left(); the inserted pair is the -1
/// at (4,6) and the +1 at (7,3).
inline const Grid& figure2_right() {
  static const Grid g = {
      {0, 0, 0, 1, 0, 0, 0, 0},   //
      {0, 0, 1, -1, 0, 1, 0, 0},  //
      {1, 0, -1, 0, 1, 0, 0, 0},  //
      {0, 0, 0, 1, 0, -1, 1, 0},  //
      {0, 0, 0, 0, 0, 1, -1, 1},  //
      {0, 1, 0, 0, 0, -1, 1, 0},  //
      {0, 0, 1, 0, -1, 1, 0, 0},  //
      {0, 0, 0, 0, 1, 0, 0, 0},   //
  };
  return g;
}

}  // namespace oracle
