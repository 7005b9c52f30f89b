#pragma once

// Exhaustive nonnegative search, independent of the library solver.
// Equations are sum a[j][i] x_i = b[j] over int64.

#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

struct System {
  int n = 0;
  std::vector<std::vector<std::int64_t>> a;
  std::vector<std::int64_t> b;
};

namespace detail {

struct Search {
  const System& s;
  std::int64_t bound;
  std::vector<int> last;  // last unknown with a nonzero coefficient, per equation
  std::vector<std::int64_t> partial;
  std::vector<std::int64_t> x;

  bool assign(int k, std::int64_t v) {
    x[k] = v;
    for (std::size_t j = 0; j < s.a.size(); ++j) partial[j] += s.a[j][k] * v;
    return true;
  }
  void unassign(int k) {
    for (std::size_t j = 0; j < s.a.size(); ++j) partial[j] -= s.a[j][k] * x[k];
    x[k] = 0;
  }

  bool dfs(int k) {
    if (k == s.n) return true;
    // An equation whose last unknown is x_k pins its value.
    std::optional<std::int64_t> pinned;
    for (std::size_t j = 0; j < s.a.size(); ++j) {
      if (last[j] != k) continue;
      const std::int64_t rest = s.b[j] - partial[j];
      if (rest % s.a[j][k] != 0) return false;
      const std::int64_t v = rest / s.a[j][k];
      if (v < 0 || v > bound) return false;
      if (pinned && *pinned != v) return false;
      pinned = v;
    }
    const std::int64_t lo = pinned ? *pinned : 0;
    const std::int64_t hi = pinned ? *pinned : bound;
    for (std::int64_t v = lo; v <= hi; ++v) {
      assign(k, v);
      if (dfs(k + 1)) return true;
      unassign(k);
    }
    return false;
  }
};

}  // namespace detail

/// A solution with every unknown in [0, bound], or std::nullopt.
inline std::optional<std::vector<std::int64_t>> brute_force(const System& s, std::int64_t bound) {
  detail::Search search{s, bound, {}, std::vector<std::int64_t>(s.a.size(), 0), std::vector<std::int64_t>(s.n, 0)};
  for (std::size_t j = 0; j < s.a.size(); ++j) {
    int l = -1;
    for (int i = 0; i < s.n; ++i)
      if (s.a[j][i] != 0) l = i;
    if (l < 0 && s.b[j] != 0) return std::nullopt;
    search.last.push_back(l);
  }
  if (search.dfs(0)) return search.x;
  return std::nullopt;
}

inline bool satisfies(const System& s, const std::vector<std::int64_t>& x) {
  for (std::size_t j = 0; j < s.a.size(); ++j) {
    std::int64_t lhs = 0;
    for (int i = 0; i < s.n; ++i) lhs += s.a[j][i] * x[i];
    if (lhs != s.b[j]) return false;
  }
  for (auto v : x)
    if (v < 0) return false;
  return true;
}

}  // namespace oracle
