#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "clustertilt/cluster.hpp"

namespace oracle {

/// Diagonals of a polygon with n + 3 vertices; their crossing numbers are Ext^1 in type A_n.
struct Polygon {
  int corners = 0;
  std::vector<std::pair<int, int>> diagonals;

  explicit Polygon(int rank) : corners(rank + 3) {
    for (int a = 0; a < corners; ++a)
      for (int b = a + 2; b < corners; ++b)
        if (!(a == 0 && b == corners - 1)) diagonals.emplace_back(a, b);
  }

  std::optional<int> index(int a, int b) const {
    a = ((a % corners) + corners) % corners;
    b = ((b % corners) + corners) % corners;
    if (a > b) std::swap(a, b);
    auto it = std::find(diagonals.begin(), diagonals.end(), std::make_pair(a, b));
    if (it == diagonals.end()) return std::nullopt;
    return static_cast<int>(it - diagonals.begin());
  }

  std::vector<int> successors(int d) const {
    std::vector<int> out;
    auto [a, b] = diagonals[static_cast<std::size_t>(d)];
    if (auto x = index(a, b + 1)) out.push_back(*x);
    if (auto x = index(a + 1, b)) out.push_back(*x);
    return out;
  }

  int rotate_back(int d) const {
    auto [a, b] = diagonals[static_cast<std::size_t>(d)];
    return *index(a - 1, b - 1);
  }

  bool cross(int d, int e) const {
    auto [a, b] = diagonals[static_cast<std::size_t>(d)];
    auto [c, f] = diagonals[static_cast<std::size_t>(e)];
    return (a < c && c < b && b < f) || (c < a && a < f && f < b);
  }
};

/// A bijection cid -> diagonal preserving arrows and tau, found by backtracking.
inline std::optional<std::vector<int>> match_polygon(const clustertilt::ClusterCategory& cc, const Polygon& p) {
  const int n = cc.size();
  if (n != static_cast<int>(p.diagonals.size())) return std::nullopt;
  auto arrows = [](const std::vector<int>& succ, int w) { return std::count(succ.begin(), succ.end(), w); };
  // breadth first through arrows and tau, so every vertex meets mapped neighbours early
  std::vector<int> order;
  std::vector<bool> queued(static_cast<std::size_t>(n), false);
  for (int root = 0; root < n; ++root) {
    if (queued[static_cast<std::size_t>(root)]) continue;
    queued[static_cast<std::size_t>(root)] = true;
    order.push_back(root);
    for (std::size_t k = order.size() - 1; k < order.size(); ++k) {
      std::vector<int> next = cc.successors(order[k]);
      next.insert(next.end(), cc.predecessors(order[k]).begin(), cc.predecessors(order[k]).end());
      next.push_back(cc.tau(order[k]));
      for (int w : next)
        if (!queued[static_cast<std::size_t>(w)]) {
          queued[static_cast<std::size_t>(w)] = true;
          order.push_back(w);
        }
    }
  }
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<bool(std::size_t)> extend = [&](std::size_t k) {
    if (k == order.size()) return true;
    const int v = order[k];
    for (int d = 0; d < n; ++d) {
      if (used[static_cast<std::size_t>(d)]) continue;
      bool ok = true;
      for (std::size_t m = 0; m < k && ok; ++m) {
        const int u = order[m];
        const int e = image[static_cast<std::size_t>(u)];
        ok = arrows(cc.successors(v), u) == arrows(p.successors(d), e) &&
             arrows(cc.successors(u), v) == arrows(p.successors(e), d) &&
             (cc.tau(v) == u) == (p.rotate_back(d) == e) && (cc.tau(u) == v) == (p.rotate_back(e) == d);
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = d;
      used[static_cast<std::size_t>(d)] = true;
      if (extend(k + 1)) return true;
      used[static_cast<std::size_t>(d)] = false;
    }
    image[static_cast<std::size_t>(v)] = -1;
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

/// Number of n-element sets of indecomposables with pairwise vanishing Ext^1, by plain subset search.
inline int count_rigid_sets(const clustertilt::ClusterCategory& cc) {
  const int n = cc.rank();
  const int size = cc.size();
  std::vector<int> chosen;
  int count = 0;
  std::function<void(int)> walk = [&](int start) {
    if (static_cast<int>(chosen.size()) == n) {
      ++count;
      return;
    }
    for (int x = start; x < size; ++x) {
      if (size - x < n - static_cast<int>(chosen.size())) break;
      chosen.push_back(x);
      bool rigid = true;
      for (int y : chosen) rigid = rigid && cc.ext_dim(x, y) == 0 && cc.ext_dim(y, x) == 0;
      if (rigid) walk(x + 1);
      chosen.pop_back();
    }
  };
  walk(0);
  return count;
}

}  // namespace oracle
