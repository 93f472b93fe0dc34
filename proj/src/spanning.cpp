#include "caykit/spanning.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "caykit/cayley.hpp"

namespace caykit {

namespace {
EdgeKey norm(int u, int v) { return u <= v ? EdgeKey{u, v} : EdgeKey{v, u}; }

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};
}  // namespace

OrbitPartition OrbitPartition::from_blocks(int n, std::vector<std::vector<int>> blocks) {
  OrbitPartition p;
  p.blocks = std::move(blocks);
  p.block_of.assign(n, -1);
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    std::sort(p.blocks[b].begin(), p.blocks[b].end());
    for (int v : p.blocks[b]) {
      if (v < 0 || v >= n || p.block_of[v] != -1)
        throw Error("blocks do not partition the vertex set");
      p.block_of[v] = static_cast<int>(b);
    }
  }
  for (int v = 0; v < n; ++v)
    if (p.block_of[v] == -1) throw Error("blocks do not cover the vertex set");
  return p;
}

Multigraph orbit_quotient(const Multigraph& g, const OrbitPartition& parts) {
  if (static_cast<int>(parts.block_of.size()) != g.n)
    throw Error("partition size mismatch");
  Multigraph q = Multigraph::with_vertices(static_cast<int>(parts.blocks.size()));
  for (const auto& [e, m] : g.edges) {
    int a = parts.block_of[e.first], b = parts.block_of[e.second];
    if (a != b && !q.edges.count(norm(a, b))) q.add_edge(a, b);
  }
  return q;
}

int SpanningTreeCert::tree_degree(int v) const {
  int d = 0;
  for (const auto& e : edges) d += (e.first == v) + (e.second == v);
  return d;
}

bool SpanningTreeCert::acyclic_connected() const {
  Dsu dsu(host_n);
  for (const auto& e : edges)
    if (!dsu.join(e.first, e.second)) return false;  // cycle
  int root = -1;
  for (int v = 0; v < host_n; ++v) {
    if (v >= static_cast<int>(in_tree.size()) || !in_tree[v]) continue;
    if (root == -1) root = dsu.find(v);
    if (dsu.find(v) != root) return false;
  }
  return true;
}

SpanningTreeCert bfs_spanning_tree(const Multigraph& g, int root) {
  if (!g.connected()) throw Error("not connected");
  auto adj = g.simple_adj();
  SpanningTreeCert cert;
  cert.host_n = g.n;
  cert.in_tree.assign(g.n, 0);
  std::vector<int> parent(g.n, -1);
  std::deque<int> q{root};
  cert.in_tree[root] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : adj[v])  // sorted: smallest-id parent wins
      if (!cert.in_tree[w]) {
        cert.in_tree[w] = 1;
        parent[w] = v;
        q.push_back(w);
      }
  }
  for (int v = 0; v < g.n; ++v)
    if (parent[v] != -1) cert.edges.push_back(norm(v, parent[v]));
  std::sort(cert.edges.begin(), cert.edges.end());
  return cert;
}

SpanningTreeCert lift_spanning_tree(const Multigraph& g, const OrbitPartition& parts,
                                    const std::vector<SpanningTreeCert>& block_trees,
                                    const SpanningTreeCert& quotient_tree) {
  if (block_trees.size() != parts.blocks.size())
    throw Error("one spanning tree per block required");
  SpanningTreeCert cert;
  cert.host_n = g.n;
  cert.in_tree.assign(g.n, 1);
  for (size_t b = 0; b < parts.blocks.size(); ++b) {
    // Block tree must span exactly its block.
    long long spanned = 0;
    for (int v = 0; v < block_trees[b].host_n; ++v)
      if (v < static_cast<int>(block_trees[b].in_tree.size()) &&
          block_trees[b].in_tree[v]) {
        ++spanned;
        if (parts.block_of[v] != static_cast<int>(b))
          throw Error("block tree leaves its block");
      }
    if (spanned != static_cast<long long>(parts.blocks[b].size()))
      throw Error("block tree does not span its block");
    cert.edges.insert(cert.edges.end(), block_trees[b].edges.begin(),
                      block_trees[b].edges.end());
  }
  for (const auto& qe : quotient_tree.edges) {
    // Witness: lexicographically smallest host edge joining the two blocks.
    // g.edges is key-sorted, so the first hit is the witness.
    bool found = false;
    for (const auto& [e, m] : g.edges) {
      int a = parts.block_of[e.first], b = parts.block_of[e.second];
      if ((a == qe.first && b == qe.second) || (a == qe.second && b == qe.first)) {
        cert.edges.push_back(e);
        found = true;
        break;
      }
    }
    if (!found) throw Error("internal: quotient edge without a witness");
  }
  std::sort(cert.edges.begin(), cert.edges.end());
  if (static_cast<long long>(cert.edges.size()) != g.n - 1)
    throw Error("lifted edge count is not |V| - 1");
  if (!cert.acyclic_connected()) throw Error("lifted edge set is not a tree");
  return cert;
}

namespace {

// Truncated BFS: vertices within `cap` of v, sorted by (distance, id).
std::vector<std::pair<int, int>> near(const std::vector<std::vector<int>>& adj,
                                      int v, int cap) {
  std::map<int, int> dist{{v, 0}};
  std::deque<int> q{v};
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    if (dist[x] == cap) continue;
    for (int y : adj[x])
      if (!dist.count(y)) {
        dist[y] = dist[x] + 1;
        q.push_back(y);
      }
  }
  std::vector<std::pair<int, int>> out;
  for (const auto& [u, d] : dist)
    if (d > 0) out.emplace_back(d, u);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SpanningTreeCert regular_spanning_tree_window(const Multigraph& g, int k,
                                              int stretch_cap, int root,
                                              RegularTreeReport* report) {
  if (k < 2) throw Error("tree degree must be at least 2");
  auto adj = g.simple_adj();
  int n = g.n;
  std::vector<std::vector<std::pair<int, int>>> reach(n);
  for (int v = 0; v < n; ++v) reach[v] = near(adj, v, stretch_cap);

  std::vector<int> parent(n, -1), deg(n, 0), kids(n, 0);
  std::vector<char> in_tree(n, 0);
  std::map<EdgeKey, int> stretch_of;
  in_tree[root] = 1;

  auto child_cap = [&](int v) { return v == root ? k : k - 1; };
  auto attach = [&](int child, int to, int dist) {
    parent[child] = to;
    in_tree[child] = 1;
    ++kids[to];
    ++deg[to];
    ++deg[child];
    stretch_of[norm(child, to)] = dist;
  };

  // Layered spanning: sweep outward from the root, attaching each vertex to
  // the nearest tree vertex with a free child slot (ties to the lighter and
  // then smaller one). Vertices that find no parent wait for later passes,
  // when deeper vertices have joined and can adopt them.
  auto root_dist = g.bfs_dist(root);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return root_dist[a] < root_dist[b]; });
  bool progress = true;
  while (progress) {
    progress = false;
    for (int u : order) {
      if (in_tree[u]) continue;
      int best = -1, best_d = 0;
      for (const auto& [d, w] : reach[u]) {
        if (!in_tree[w] || kids[w] >= child_cap(w)) continue;
        if (best == -1 || d < best_d ||
            (d == best_d && (kids[w] < kids[best] ||
                             (kids[w] == kids[best] && w < best)))) {
          best = w;
          best_d = d;
        }
      }
      if (best != -1) {
        attach(u, best, best_d);
        progress = true;
      }
    }
  }

  // Exactness repair: interior vertices short of k pull a pendant vertex off
  // a non-interior donor nearby. Donor degrees only drop, so no new deficit.
  auto is_interior = [&](int v) {
    return v < static_cast<int>(g.interior.size()) && g.interior[v];
  };
  auto in_subtree = [&](int who, int of) {
    for (int x = who; x != -1; x = parent[x])
      if (x == of) return true;
    return false;
  };
  progress = true;
  while (progress) {
    progress = false;
    for (int v = 0; v < n; ++v) {
      if (!is_interior(v) || !in_tree[v] || deg[v] >= k) continue;
      for (const auto& [d, w] : reach[v]) {
        if (!in_tree[w] || w == v || parent[w] == -1 || parent[w] == v) continue;
        int donor = parent[w];
        if (is_interior(donor)) continue;
        if (in_subtree(v, w)) continue;  // re-rooting w above v would cycle
        --deg[donor];
        --kids[donor];
        stretch_of.erase(norm(w, donor));
        parent[w] = v;
        ++deg[v];
        ++kids[v];
        stretch_of[norm(w, v)] = d;
        progress = true;
        break;
      }
    }
  }

  SpanningTreeCert cert;
  cert.host_n = n;
  cert.in_tree = in_tree;
  cert.regular_degree = k;
  for (int v = 0; v < n; ++v)
    if (parent[v] != -1) cert.edges.push_back(norm(v, parent[v]));
  std::sort(cert.edges.begin(), cert.edges.end());

  if (report) {
    RegularTreeReport rep;
    for (const auto& [e, d] : stretch_of) rep.stretch = std::max(rep.stretch, d);
    for (int v = 0; v < n; ++v) {
      if (!is_interior(v)) continue;
      if (!in_tree[v]) ++rep.unspanned_interior;
      else if (deg[v] != k) ++rep.interior_deficit;
    }
    bool shape = cert.acyclic_connected();
    bool caps = true;
    for (int v = 0; v < n; ++v) caps = caps && deg[v] <= k;
    rep.ok = shape && caps && rep.unspanned_interior == 0 && rep.interior_deficit == 0;
    std::ostringstream msg;
    msg << (rep.ok ? "interior-regular spanning structure built"
                   : "construction incomplete")
        << "; stretch " << rep.stretch << ", deficits " << rep.interior_deficit
        << ", unspanned interior " << rep.unspanned_interior;
    rep.message = msg.str();
    *report = rep;
  }
  return cert;
}

std::vector<std::vector<EdgeKey>> enumerate_spanning_trees(const Multigraph& g,
                                                           long long cap) {
  Multigraph s = simple_support(g);
  std::vector<EdgeKey> all;
  for (const auto& [e, m] : s.edges) all.push_back(e);
  int need = g.n - 1;
  std::vector<std::vector<EdgeKey>> found;
  if (need < 0 || need > static_cast<int>(all.size())) return found;

  std::vector<int> pick(need);
  std::iota(pick.begin(), pick.end(), 0);
  long long visited = 0;
  while (true) {
    if (++visited > cap) throw CapExceeded("spanning tree enumeration cap", visited);
    Dsu dsu(g.n);
    bool tree = true;
    for (int i : pick)
      if (!dsu.join(all[i].first, all[i].second)) {
        tree = false;
        break;
      }
    if (tree) {
      int root = dsu.find(0);
      for (int v = 1; v < g.n && tree; ++v) tree = dsu.find(v) == root;
      if (tree) {
        std::vector<EdgeKey> t;
        for (int i : pick) t.push_back(all[i]);
        found.push_back(std::move(t));
      }
    }
    // next combination
    int i = need - 1;
    while (i >= 0 && pick[i] == static_cast<int>(all.size()) - need + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
  }
  return found;
}

Zz3Report z_z3_no_regular_tree_check(int radius, int enumeration_vertex_cap) {
  if (radius < 2) throw Error("window radius must be at least 2");
  Group g(GroupSpec::free_product_z_z3());
  GeneratingSet s = g.default_generators();
  Ball ball;
  Multigraph window = cayley_ball_graph(g, s, radius, 1, &ball);

  auto by_gen = cayley_edge_generators(g, s, ball);
  std::set<EdgeKey> t_edges, u_edges;
  for (const auto& [e, gens] : by_gen)
    for (int gi : gens) (gi == 0 ? t_edges : u_edges).insert(e);

  Zz3Report rep;
  // u-cosets: blocks {x, xu, xu^2} clipped to the window.
  Element u = g.generator(1);
  std::map<Element, int> coset_id;
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < ball.size(); ++i) {
    Element x = ball.elements[i];
    Element xu = g.multiply(x, u);
    Element rep_elem = std::min({x, xu, g.multiply(xu, u)});
    auto [it, fresh] = coset_id.emplace(rep_elem, static_cast<int>(blocks.size()));
    if (fresh) blocks.emplace_back();
    blocks[it->second].push_back(i);
  }
  OrbitPartition parts = OrbitPartition::from_blocks(window.n, std::move(blocks));
  Multigraph contracted = orbit_quotient(window, parts);
  // The contraction must be a tree; every cross edge is then a bridge.
  rep.contraction_is_tree = contracted.connected() &&
                            contracted.edge_count() == contracted.n - 1;
  rep.all_t_edges_bridges = rep.contraction_is_tree;

  // Interior triangles: all three vertices carry both of their t-edges.
  for (const auto& blk : parts.blocks) {
    if (blk.size() != 3) continue;
    bool interior = true;
    for (int v : blk) {
      int tdeg = 0;
      for (const auto& e : t_edges) tdeg += (e.first == v) + (e.second == v);
      interior = interior && tdeg == 2 && window.interior[v];
    }
    if (!interior) continue;
    ++rep.interior_triangles;
    // Keeping any 2 of the 3 cycle edges leaves degrees (4, 3, 3): edge j
    // joins blk[j] and blk[(j+1)%3], and the two forced t-edges add 2 each.
    for (int drop = 0; drop < 3; ++drop) {
      int degs[3] = {2, 2, 2};
      for (int j = 0; j < 3; ++j) {
        if (j == drop) continue;
        degs[j] += 1;
        degs[(j + 1) % 3] += 1;
      }
      std::sort(degs, degs + 3);
      if (!(degs[0] == 3 && degs[1] == 3 && degs[2] == 4))
        rep.degree_pattern_ok = false;
    }
  }

  if (window.n <= enumeration_vertex_cap) {
    rep.exhaustive = true;
    auto trees = enumerate_spanning_trees(window);
    rep.spanning_trees_checked = static_cast<long long>(trees.size());
    for (const auto& t : trees) {
      SpanningTreeCert cert;
      cert.host_n = window.n;
      cert.edges = t;
      cert.in_tree.assign(window.n, 1);
      int want = -1;
      bool regular = true;
      for (int v = 0; v < window.n; ++v) {
        if (!window.interior[v]) continue;
        int d = cert.tree_degree(v);
        if (want == -1) want = d;
        regular = regular && d == want;
      }
      if (regular) ++rep.interior_regular_trees;
    }
  }
  std::ostringstream msg;
  msg << "triangle contraction " << (rep.contraction_is_tree ? "is" : "is not")
      << " a tree; " << rep.interior_triangles << " interior triangles";
  if (rep.exhaustive)
    msg << "; " << rep.interior_regular_trees << " interior-regular among "
        << rep.spanning_trees_checked << " spanning trees";
  rep.message = msg.str();
  return rep;
}

}  // namespace caykit
