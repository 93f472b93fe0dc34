#include "caykit/hamilton.hpp"

#include <algorithm>
#include <set>

#include "caykit/euler.hpp"

namespace caykit {

BlockBipartite build_block_bipartite(const PathSeq& walk, int m) {
  if (m < 1) throw Error("block length must be positive");
  BlockBipartite b;
  b.m = m;
  // The closed walk repeats its first vertex; index range [0, L).
  int usable = static_cast<int>(walk.verts.size());
  if (usable >= 2 && walk.verts.front() == walk.verts.back()) --usable;
  b.block_count = usable / m;
  b.adj.resize(b.block_count);
  for (int k = 0; k < b.block_count; ++k) {
    for (int i = 0; i < m; ++i) b.adj[k].push_back(walk.verts[k * m + i]);
    std::sort(b.adj[k].begin(), b.adj[k].end());
    b.adj[k].erase(std::unique(b.adj[k].begin(), b.adj[k].end()), b.adj[k].end());
  }
  return b;
}

std::vector<int> saturating_matching(const BlockBipartite& b, int right_size,
                                     HallViolation* violation) {
  std::vector<int> match_block(b.block_count, -1);   // block -> vertex
  std::vector<int> match_vertex(right_size, -1);     // vertex -> block
  std::vector<char> visited(right_size, 0);

  auto augment = [&](auto&& self, int k) -> bool {
    for (int v : b.adj[k]) {
      if (visited[v]) continue;
      visited[v] = 1;
      if (match_vertex[v] == -1 || self(self, match_vertex[v])) {
        match_vertex[v] = k;
        match_block[k] = v;
        return true;
      }
    }
    return false;
  };

  for (int k = 0; k < b.block_count; ++k) {
    std::fill(visited.begin(), visited.end(), 0);
    if (augment(augment, k)) continue;
    if (violation) {
      // Alternating reachability from the failed block yields T with
      // |N(T)| < |T|.
      std::set<int> t{k}, boundary;
      std::vector<int> frontier{k};
      while (!frontier.empty()) {
        int blk = frontier.back();
        frontier.pop_back();
        for (int v : b.adj[blk]) {
          if (boundary.insert(v).second && match_vertex[v] != -1)
            if (t.insert(match_vertex[v]).second)
              frontier.push_back(match_vertex[v]);
        }
      }
      violation->blocks.assign(t.begin(), t.end());
      violation->boundary.assign(boundary.begin(), boundary.end());
    }
    return {};
  }
  return match_block;
}

HallSelection hall_select(const Multigraph& host, const PathSeq& walk, int d_bound) {
  if (!is_walk(host, walk)) throw Error("not a walk on the host graph");
  auto counts = traversal_counts(walk);
  for (const auto& [e, c] : counts)
    if (c > 2) throw Error("walk traverses an edge more than twice");
  std::vector<char> seen(host.n, 0);
  for (int v : walk.verts) seen[v] = 1;
  for (int v = 0; v < host.n; ++v)
    if (!seen[v]) throw Error("walk misses a vertex");

  int d = d_bound > 0 ? d_bound : simple_support(host).max_degree();
  int m = d + 1;

  HallSelection sel;
  sel.m = m;
  BlockBipartite bip = build_block_bipartite(walk, m);
  sel.block_count = bip.block_count;

  HallViolation violation;
  auto match = saturating_matching(bip, host.n, &violation);
  if (match.empty() && bip.block_count > 0) throw HallInfeasible(violation);

  sel.phi.resize(bip.block_count);
  sel.matched.resize(bip.block_count);
  std::vector<char> picked(host.n, 0);
  std::set<int> select;
  for (int k = 0; k < bip.block_count; ++k) {
    int v = match[k];
    sel.matched[k] = v;
    picked[v] = 1;
    int off = -1;
    for (int i = 0; i < m; ++i)
      if (walk.verts[k * m + i] == v) {
        off = i;
        break;
      }
    sel.phi[k] = off;
    select.insert(k * m + off);
  }
  // First visit index of each vertex the matching did not pick.
  for (size_t i = 0; i < walk.verts.size(); ++i) {
    int v = walk.verts[i];
    if (!picked[v]) {
      picked[v] = 1;
      select.insert(static_cast<int>(i));
    }
  }
  sel.select.assign(select.begin(), select.end());
  return sel;
}

HamiltonResult hamiltonian_from_walk(const Multigraph& g, const PathSeq& walk) {
  Multigraph support = simple_support(g);
  HamiltonResult r;
  r.cover_walk = walk;
  r.d = support.max_degree();
  r.m = r.d + 1;
  r.power_k = 2 * r.m - 1;
  r.hall = hall_select(support, walk);
  r.order.kind = PathSeq::Kind::hamiltonian;
  for (int idx : r.hall.select) r.order.verts.push_back(walk.verts[idx]);
  return r;
}

HamiltonResult hamiltonian_in_power(const Multigraph& g) {
  Multigraph support = simple_support(g);
  if (!support.connected()) throw Error("not connected");
  if (support.n == 1) {
    HamiltonResult r;
    r.cover_walk.verts = {0};
    r.order.verts = {0};
    r.order.kind = PathSeq::Kind::hamiltonian;
    r.d = 0;
    r.m = 1;
    r.power_k = 1;
    return r;
  }
  return hamiltonian_from_walk(support, double_cover_walk(support));
}

}  // namespace caykit
