#include "caykit/euler.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace caykit {

namespace {

EdgeKey norm(int u, int v) { return u <= v ? EdgeKey{u, v} : EdgeKey{v, u}; }

// Hierholzer from a fixed start vertex; assumes feasibility was checked
// (all even for a circuit, or exactly two odd vertices with start odd).
std::vector<int> hierholzer(const Multigraph& g, int start) {
  std::vector<std::map<int, int>> rem(g.n);  // neighbor -> remaining copies
  for (const auto& [e, m] : g.edges) {
    rem[e.first][e.second] += m;
    if (e.first != e.second) rem[e.second][e.first] += m;
  }
  std::vector<int> stack{start};
  std::vector<int> walk;
  while (!stack.empty()) {
    int v = stack.back();
    auto& nb = rem[v];
    while (!nb.empty() && nb.begin()->second == 0) nb.erase(nb.begin());
    if (nb.empty()) {
      walk.push_back(v);
      stack.pop_back();
    } else {
      int w = nb.begin()->first;  // smallest available edge
      nb.begin()->second--;
      if (w != v) rem[w][v]--;
      stack.push_back(w);
    }
  }
  std::reverse(walk.begin(), walk.end());
  return walk;
}

std::vector<int> components(const Multigraph& g, const std::set<EdgeKey>& removed) {
  std::vector<std::vector<int>> adj(g.n);
  for (const auto& [e, m] : g.edges) {
    if (removed.count(e)) continue;
    if (e.first == e.second) continue;
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<int> comp(g.n, -1);
  int c = 0;
  for (int v = 0; v < g.n; ++v) {
    if (comp[v] != -1) continue;
    std::deque<int> q{v};
    comp[v] = c;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : adj[x])
        if (comp[y] == -1) {
          comp[y] = c;
          q.push_back(y);
        }
    }
    ++c;
  }
  return comp;
}

int unique_component(const std::vector<int>& comp, const std::vector<int>& side,
                     const char* what) {
  if (side.empty()) throw Error(std::string("empty side: ") + what);
  int c = comp[side[0]];
  for (int v : side)
    if (comp[v] != c) throw Error(std::string("side spans several components: ") + what);
  return c;
}

}  // namespace

PathSeq eulerian_circuit(const Multigraph& g) {
  if (g.edge_count() == 0) throw Error("empty graph");
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) % 2 != 0) throw Error("not even");
  if (!g.connected()) throw Error("not connected");
  int start = 0;
  while (g.degree(start) == 0) ++start;
  PathSeq p;
  p.verts = hierholzer(g, start);
  p.kind = PathSeq::Kind::eulerian;
  return p;
}

std::vector<EdgeKey> refine_separator(const Multigraph& g,
                                      const std::set<EdgeKey>& f,
                                      const std::vector<int>& side_a,
                                      const std::vector<int>& side_b) {
  for (const auto& e : f)
    if (!g.edges.count(norm(e.first, e.second)))
      throw Error("separator edge not in graph");
  auto comp_f = components(g, f);
  int ca = unique_component(comp_f, side_a, "A");
  int cb = unique_component(comp_f, side_b, "B");
  if (ca == cb) throw Error("edge set does not separate the sides");

  // Keep only separator edges touching side A's component.
  std::set<EdgeKey> f1;
  for (const auto& e : f)
    if (comp_f[e.first] == ca || comp_f[e.second] == ca) f1.insert(e);

  auto comp_f1 = components(g, f1);
  int ca1 = unique_component(comp_f1, side_a, "A");
  int cb1 = unique_component(comp_f1, side_b, "B");
  if (ca1 == cb1) throw Error("refinement merged the sides");

  // Keep only the edges that actually join the two marked components.
  std::vector<EdgeKey> result;
  for (const auto& e : f1) {
    bool cross = (comp_f1[e.first] == ca1 && comp_f1[e.second] == cb1) ||
                 (comp_f1[e.first] == cb1 && comp_f1[e.second] == ca1);
    if (cross) result.push_back(e);
  }

  std::set<EdgeKey> res_set(result.begin(), result.end());
  auto comp_e = components(g, res_set);
  int fa = unique_component(comp_e, side_a, "A");
  int fb = unique_component(comp_e, side_b, "B");
  if (fa == fb) throw Error("internal: refined set does not separate");
  for (int v = 0; v < g.n; ++v)
    if (comp_e[v] != fa && comp_e[v] != fb)
      throw Error("internal: component stranded away from both sides");
  return result;
}

PathSeq double_cover_walk(const Multigraph& g) {
  if (g.n == 0 || g.edge_count() == 0) throw Error("empty graph");
  PathSeq p = eulerian_circuit(double_edges(g));
  p.kind = PathSeq::Kind::walk;
  return p;
}

PathSeq two_end_cover_walk(const Multigraph& g, const std::set<EdgeKey>& f,
                           const std::vector<int>& side_a,
                           const std::vector<int>& side_b) {
  auto e_ref = refine_separator(g, f, side_a, side_b);
  std::set<EdgeKey> e_set(e_ref.begin(), e_ref.end());
  auto comp = components(g, e_set);
  int ca = comp[side_a[0]];
  int cb = comp[side_b[0]];

  auto adj = g.simple_adj();
  int contact = -1;
  for (int v = 0; v < g.n && contact == -1; ++v) {
    if (comp[v] != ca) continue;
    for (int w : adj[v])
      if (comp[w] == cb) {
        contact = v;
        break;
      }
  }
  if (contact == -1) throw Error("internal: no contact vertex");

  // halves[0] = side A component, halves[1] = side B component plus contact.
  std::vector<char> in_half[2];
  in_half[0].assign(g.n, 0);
  in_half[1].assign(g.n, 0);
  for (int v = 0; v < g.n; ++v) {
    if (comp[v] == ca) in_half[0][v] = 1;
    if (comp[v] == cb) in_half[1][v] = 1;
  }
  in_half[1][contact] = 1;

  Multigraph merged = Multigraph::with_vertices(g.n);
  merged.label = g.label;
  int ray_end[2];
  for (int h = 0; h < 2; ++h) {
    // BFS ray from the contact vertex toward the far edge of the marked side.
    std::vector<int> dist(g.n, -1), par(g.n, -1);
    std::deque<int> q{contact};
    dist[contact] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : adj[v]) {
        if (!in_half[h][w] || !in_half[h][v]) continue;
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          par[w] = v;
          q.push_back(w);
        }
      }
    }
    const auto& side = h == 0 ? side_a : side_b;
    int target = -1;
    for (int v : side)
      if (dist[v] >= 0 && (target == -1 || dist[v] > dist[target] ||
                           (dist[v] == dist[target] && v < target)))
        target = v;
    if (target == -1 || target == contact)
      throw Error("marked side unreachable or touching the contact vertex");
    ray_end[h] = target;
    std::set<EdgeKey> ray_edges;
    for (int v = target; v != contact; v = par[v])
      ray_edges.insert(norm(v, par[v]));
    // Induced half, with every edge off the ray doubled.
    for (const auto& [e, m] : g.edges) {
      if (e.first == e.second) continue;
      if (!in_half[h][e.first] || !in_half[h][e.second]) continue;
      merged.add_edge(e.first, e.second, ray_edges.count(e) ? 1 : 2);
    }
  }

  int odd = 0;
  for (int v = 0; v < g.n; ++v)
    if (merged.degree(v) % 2) ++odd;
  if (odd != 2) throw Error("internal: spliced halves are not path-even");
  if (!merged.connected()) throw Error("internal: spliced halves disconnected");

  PathSeq p;
  p.verts = hierholzer(merged, std::min(ray_end[0], ray_end[1]));
  p.kind = PathSeq::Kind::walk;
  return p;
}

}  // namespace caykit
