#include "caykit/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace caykit {

namespace {
EdgeKey norm(int u, int v) { return u <= v ? EdgeKey{u, v} : EdgeKey{v, u}; }
}  // namespace

Multigraph Multigraph::with_vertices(int n) {
  Multigraph g;
  g.n = n;
  g.interior.assign(n, 1);
  return g;
}

int Multigraph::add_vertex(const std::string& lbl) {
  if (!lbl.empty() || !label.empty()) label.resize(n + 1);
  if (!lbl.empty()) label[n] = lbl;
  interior.push_back(1);
  return n++;
}

void Multigraph::add_edge(int u, int v, int mult) {
  if (u < 0 || u >= n || v < 0 || v >= n) throw Error("edge endpoint out of range");
  if (mult <= 0) throw Error("edge multiplicity must be positive");
  edges[norm(u, v)] += mult;
}

void Multigraph::set_all_interior() { interior.assign(n, 1); }

int Multigraph::degree(int v) const {
  int d = 0;
  for (const auto& [e, m] : edges) {
    if (e.first == v) d += m;
    if (e.second == v) d += m;  // loops contribute twice
  }
  return d;
}

long long Multigraph::edge_count() const {
  long long c = 0;
  for (const auto& [e, m] : edges) c += m;
  return c;
}

int Multigraph::max_degree() const {
  std::vector<int> deg(n, 0);
  for (const auto& [e, m] : edges) {
    deg[e.first] += m;
    deg[e.second] += m;
  }
  int d = 0;
  for (int v : deg) d = std::max(d, v);
  return d;
}

std::vector<std::vector<int>> Multigraph::simple_adj() const {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [e, m] : edges) {
    if (e.first == e.second) continue;
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return adj;
}

std::vector<int> Multigraph::bfs_dist(int src) const {
  return bfs_dist(std::vector<int>{src});
}

std::vector<int> Multigraph::bfs_dist(const std::vector<int>& srcs) const {
  auto adj = simple_adj();
  std::vector<int> dist(n, -1);
  std::deque<int> q;
  for (int s : srcs) {
    if (s < 0 || s >= n) throw Error("bfs source out of range");
    if (dist[s] == -1) {
      dist[s] = 0;
      q.push_back(s);
    }
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : adj[v])
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

bool Multigraph::connected() const {
  if (n == 0) return true;
  auto d = bfs_dist(0);
  return std::find(d.begin(), d.end(), -1) == d.end();
}

std::vector<int> Multigraph::interior_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (v < static_cast<int>(interior.size()) && interior[v]) out.push_back(v);
  return out;
}

std::string Multigraph::vertex_name(int v) const {
  if (v < static_cast<int>(label.size()) && !label[v].empty()) return label[v];
  return std::to_string(v);
}

Multigraph simple_support(const Multigraph& g) {
  Multigraph s = g;
  s.edges.clear();
  for (const auto& [e, m] : g.edges)
    if (e.first != e.second) s.edges[e] = 1;
  return s;
}

Multigraph double_edges(const Multigraph& g) {
  Multigraph d = g;
  for (auto& [e, m] : d.edges) m *= 2;
  return d;
}

Multigraph power_graph(const Multigraph& g, int k) {
  if (k < 1) throw Error("power must be at least 1");
  Multigraph p = Multigraph::with_vertices(g.n);
  p.label = g.label;
  p.interior = g.interior;
  for (int v = 0; v < g.n; ++v) {
    auto dist = g.bfs_dist(v);
    for (int w = v + 1; w < g.n; ++w)
      if (dist[w] >= 1 && dist[w] <= k) p.add_edge(v, w);
  }
  return p;
}

std::vector<int> neighborhood(const Multigraph& g, const std::vector<int>& a, int k) {
  if (a.empty()) return {};
  auto dist = g.bfs_dist(a);
  std::vector<int> out;
  for (int v = 0; v < g.n; ++v)
    if (dist[v] >= 0 && dist[v] <= k) out.push_back(v);
  return out;
}

bool is_walk(const Multigraph& g, const PathSeq& p) {
  if (p.verts.empty()) return false;
  for (int v : p.verts)
    if (v < 0 || v >= g.n) return false;
  for (size_t i = 0; i + 1 < p.verts.size(); ++i) {
    EdgeKey e = norm(p.verts[i], p.verts[i + 1]);
    if (!g.edges.count(e)) return false;
  }
  return true;
}

bool is_eulerian_circuit(const Multigraph& g, const PathSeq& p) {
  if (!is_walk(g, p)) return false;
  if (p.verts.front() != p.verts.back()) return false;
  auto counts = traversal_counts(p);
  if (counts.size() != g.edges.size()) return false;
  for (const auto& [e, m] : g.edges) {
    auto it = counts.find(e);
    if (it == counts.end() || it->second != m) return false;
  }
  // Every vertex with positive degree must be visited.
  std::vector<char> seen(g.n, 0);
  for (int v : p.verts) seen[v] = 1;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) > 0 && !seen[v]) return false;
  return true;
}

bool is_hamiltonian_path(const Multigraph& g, const PathSeq& p) {
  if (!is_walk(g, p)) return false;
  if (static_cast<int>(p.verts.size()) != g.n) return false;
  std::vector<char> seen(g.n, 0);
  for (int v : p.verts) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::map<EdgeKey, int> traversal_counts(const PathSeq& p) {
  std::map<EdgeKey, int> counts;
  for (size_t i = 0; i + 1 < p.verts.size(); ++i)
    counts[norm(p.verts[i], p.verts[i + 1])]++;
  return counts;
}

std::string to_dot(const Multigraph& g) {
  std::ostringstream out;
  out << "graph {\n";
  for (int v = 0; v < g.n; ++v) {
    out << "  " << v << " [label=\"" << g.vertex_name(v) << "\"";
    if (v < static_cast<int>(g.interior.size()) && !g.interior[v])
      out << " style=dashed";
    out << "];\n";
  }
  for (const auto& [e, m] : g.edges)
    for (int i = 0; i < m; ++i)
      out << "  " << e.first << " -- " << e.second << ";\n";
  out << "}\n";
  return out.str();
}

Multigraph make_path(int n) {
  Multigraph g = Multigraph::with_vertices(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Multigraph make_cycle(int n) {
  Multigraph g = make_path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Multigraph make_complete(int n) {
  Multigraph g = Multigraph::with_vertices(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Multigraph make_star(int leaves) {
  Multigraph g = Multigraph::with_vertices(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Multigraph make_grid(int w, int h) {
  Multigraph g = Multigraph::with_vertices(w * h);
  auto id = [&](int x, int y) { return y * w + x; };
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      if (x + 1 < w) g.add_edge(id(x, y), id(x + 1, y));
      if (y + 1 < h) g.add_edge(id(x, y), id(x, y + 1));
    }
  return g;
}

}  // namespace caykit
