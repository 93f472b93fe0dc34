#pragma once

// Test-side oracles, kept independent of the library code paths they check.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "caykit/multigraph.hpp"

namespace caykit::testing {

// All-pairs distances by Floyd-Warshall (the library uses BFS).
inline std::vector<std::vector<int>> floyd_distances(const Multigraph& g) {
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(g.n, std::vector<int>(g.n, inf));
  for (int v = 0; v < g.n; ++v) d[v][v] = 0;
  for (const auto& [e, m] : g.edges)
    if (e.first != e.second) d[e.first][e.second] = d[e.second][e.first] = 1;
  for (int k = 0; k < g.n; ++k)
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Maximum bipartite matching by Dinic max-flow over a unit network.
inline int dinic_matching(const std::vector<std::vector<int>>& left_adj,
                          int right_size) {
  int nl = static_cast<int>(left_adj.size());
  int s = nl + right_size, t = s + 1, n = t + 1;
  struct E {
    int to, cap, rev;
  };
  std::vector<std::vector<E>> adj(n);
  auto add = [&](int a, int b) {
    adj[a].push_back({b, 1, static_cast<int>(adj[b].size())});
    adj[b].push_back({a, 0, static_cast<int>(adj[a].size()) - 1});
  };
  for (int l = 0; l < nl; ++l) {
    add(s, l);
    for (int r : left_adj[l]) add(l, nl + r);
  }
  for (int r = 0; r < right_size; ++r) add(nl + r, t);

  int flow = 0;
  while (true) {
    std::vector<int> level(n, -1);
    std::vector<int> q{s};
    level[s] = 0;
    for (size_t h = 0; h < q.size(); ++h)
      for (const auto& e : adj[q[h]])
        if (e.cap > 0 && level[e.to] == -1) {
          level[e.to] = level[q[h]] + 1;
          q.push_back(e.to);
        }
    if (level[t] == -1) break;
    std::vector<int> it(n, 0);
    std::function<int(int, int)> dfs = [&](int v, int f) -> int {
      if (v == t) return f;
      for (int& i = it[v]; i < static_cast<int>(adj[v].size()); ++i) {
        E& e = adj[v][i];
        if (e.cap > 0 && level[e.to] == level[v] + 1) {
          int got = dfs(e.to, std::min(f, e.cap));
          if (got > 0) {
            e.cap -= got;
            adj[e.to][e.rev].cap += got;
            return got;
          }
        }
      }
      return 0;
    };
    int f;
    while ((f = dfs(s, 1 << 28)) > 0) flow += f;
  }
  return flow;
}

// Every closed walk that traverses each edge slot exactly once, by brute
// force over edge orders; feasibility oracle for tiny multigraphs.
inline bool has_closed_euler_walk(const Multigraph& g, int edge_budget = 12) {
  std::vector<std::pair<int, int>> slots;
  for (const auto& [e, m] : g.edges)
    for (int i = 0; i < m; ++i) slots.emplace_back(e.first, e.second);
  if (static_cast<int>(slots.size()) > edge_budget) return false;
  int start = -1;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) > 0) {
      start = v;
      break;
    }
  if (start == -1) return false;
  std::vector<char> used(slots.size(), 0);
  std::function<bool(int, size_t)> go = [&](int at, size_t placed) -> bool {
    if (placed == slots.size()) return at == start;
    for (size_t i = 0; i < slots.size(); ++i) {
      if (used[i]) continue;
      auto [a, b] = slots[i];
      int nxt = -1;
      if (a == at) nxt = b;
      else if (b == at) nxt = a;
      else continue;
      used[i] = 1;
      if (go(nxt, placed + 1)) return true;
      used[i] = 0;
    }
    return false;
  };
  return go(start, 0);
}

// Exact cover of `targets` by sets, naive backtracking on the first
// uncovered target; counts full covers with pairwise-disjoint chosen sets.
inline long long naive_exact_cover_count(const std::vector<std::set<int>>& sets,
                                         const std::set<int>& targets) {
  std::function<long long(std::set<int>, std::set<int>, size_t)> go =
      [&](std::set<int> remaining, std::set<int> blocked, size_t) -> long long {
    if (remaining.empty()) return 1;
    int pivot = *remaining.begin();
    long long total = 0;
    for (size_t i = 0; i < sets.size(); ++i) {
      if (!sets[i].count(pivot)) continue;
      bool clash = false;
      for (int x : sets[i])
        if (blocked.count(x)) {
          clash = true;
          break;
        }
      if (clash) continue;
      std::set<int> rem2 = remaining, blk2 = blocked;
      for (int x : sets[i]) {
        rem2.erase(x);
        blk2.insert(x);
      }
      total += go(std::move(rem2), std::move(blk2), i);
    }
    return total;
  };
  return go(targets, {}, 0);
}

}  // namespace caykit::testing
