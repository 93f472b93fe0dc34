// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <deque>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "caykit/action.hpp"
#include "caykit/cayley.hpp"
#include "caykit/cli.hpp"
#include "caykit/euler.hpp"
#include "caykit/hamilton.hpp"
#include "caykit/perimeter.hpp"
#include "caykit/spanning.hpp"
#include "caykit/tiling.hpp"
#include "caykit/tree_map.hpp"

using namespace caykit;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------- criterion 1

void criterion_perimeters(Outcome& out) {
  int built = 0;
  for (uint64_t seed = 1; built < 500; ++seed) {
    int r = 3 + static_cast<int>(seed % 8);           // 3..10
    int max_root = std::min(r - 1, 6);
    int root_children = 2 + static_cast<int>((seed / 8) % (max_root - 1));
    RootedTree t = RootedTree::random_window(seed, root_children, 2, 5, 40);
    Perimeter p = perimeter_decompose(t, r);
    ++built;

    long long d_sum = 0;
    std::set<int> members;
    for (const auto& [v, d] : p.entries) {
      members.insert(v);
      d_sum += d;
      if (d < 1 || d > t.child_count(v)) {
        out.pass = false;
        out.detail << "d-bound violated (seed " << seed << "); ";
        return;
      }
    }
    if (d_sum != r) {
      out.pass = false;
      out.detail << "sum " << d_sum << " != " << r << " (seed " << seed << "); ";
      return;
    }
    for (int a : members)
      for (int b : members) {
        if (a == b) continue;
        int x = b;
        while (x != -1 && x != a) x = t.parent(x);
        if (x == a) {
          out.pass = false;
          out.detail << "antichain violated (seed " << seed << "); ";
          return;
        }
      }
    // covering with radius <= r, walked exhaustively and pruned at members
    int deepest_uncovered = 0;
    std::deque<int> q{t.root()};
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      if (members.count(x)) continue;
      deepest_uncovered = std::max(deepest_uncovered, t.depth(x));
      if (t.depth(x) > r || t.truncated(x)) {
        out.pass = false;
        out.detail << "covering violated (seed " << seed << "); ";
        return;
      }
      for (int c : t.children(x)) q.push_back(c);
    }
    if (deepest_uncovered + 1 > r) {
      out.pass = false;
      out.detail << "radius above r (seed " << seed << "); ";
      return;
    }
  }
  out.detail << built << " trees, all axioms hold";
}

// ---------------------------------------------------------------- criterion 2

// Connected graphs up to isomorphism as upper-triangle bitmasks.
struct GraphEnum {
  static int bit(int i, int j, int n) {  // i < j
    int idx = 0;
    for (int a = 0; a < i; ++a) idx += n - 1 - a;
    return idx + (j - i - 1);
  }

  static uint32_t canonical(uint32_t mask, int n) {
    std::vector<int> deg(n, 0);
    auto has = [&](int i, int j) {
      return (mask >> bit(std::min(i, j), std::max(i, j), n)) & 1u;
    };
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (has(i, j)) {
          ++deg[i];
          ++deg[j];
        }
    // color refinement: degree, then the sorted neighbor degrees
    std::vector<std::vector<int>> key(n);
    for (int i = 0; i < n; ++i) {
      key[i].push_back(deg[i]);
      std::vector<int> nb;
      for (int j = 0; j < n; ++j)
        if (j != i && has(i, j)) nb.push_back(deg[j]);
      std::sort(nb.begin(), nb.end());
      key[i].insert(key[i].end(), nb.begin(), nb.end());
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return key[a] < key[b] || (key[a] == key[b] && a < b); });
    // class boundaries
    std::vector<std::pair<int, int>> classes;
    for (int i = 0; i < n;) {
      int j = i;
      while (j < n && key[order[j]] == key[order[i]]) ++j;
      classes.emplace_back(i, j);
      i = j;
    }
    uint32_t best = ~0u;
    std::vector<int> perm = order;
    std::function<void(size_t)> rec = [&](size_t c) {
      if (c == classes.size()) {
        // position p gets original vertex perm[p]
        std::vector<int> pos(n);
        for (int p = 0; p < n; ++p) pos[perm[p]] = p;
        uint32_t m = 0;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j)
            if (has(i, j)) {
              int a = pos[i], b = pos[j];
              m |= 1u << bit(std::min(a, b), std::max(a, b), n);
            }
        best = std::min(best, m);
        return;
      }
      auto [lo, hi] = classes[c];
      std::sort(perm.begin() + lo, perm.begin() + hi);
      do {
        rec(c + 1);
      } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
    };
    rec(0);
    return best;
  }

  // all connected graphs on exactly n vertices, canonical masks
  static std::vector<std::set<uint32_t>> connected_up_to(int max_n) {
    std::vector<std::set<uint32_t>> byn(max_n + 1);
    byn[1].insert(0);
    for (int n = 2; n <= max_n; ++n) {
      for (uint32_t g : byn[n - 1]) {
        // re-expand the (n-1)-vertex mask into the n-vertex indexing
        for (uint32_t nb = 1; nb < (1u << (n - 1)); ++nb) {
          uint32_t m = 0;
          for (int i = 0; i < n - 1; ++i)
            for (int j = i + 1; j < n - 1; ++j)
              if ((g >> bit(i, j, n - 1)) & 1u) m |= 1u << bit(i, j, n);
          for (int i = 0; i < n - 1; ++i)
            if ((nb >> i) & 1u) m |= 1u << bit(i, n - 1, n);
          byn[n].insert(canonical(m, n));
        }
      }
    }
    return byn;
  }

  static Multigraph to_graph(uint32_t mask, int n) {
    Multigraph g = Multigraph::with_vertices(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((mask >> bit(i, j, n)) & 1u) g.add_edge(i, j);
    return g;
  }
};

// Distances recomputed here rather than through the library: Floyd-Warshall
// for small hosts, a local breadth-first search per step for windows.
std::vector<int> local_bfs(const Multigraph& g, int src) {
  std::vector<std::vector<int>> adj(g.n);
  for (const auto& [e, m] : g.edges)
    if (e.first != e.second) {
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
    }
  std::vector<int> dist(g.n, -1);
  std::deque<int> q{src};
  dist[src] = 0;
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

bool validate_order(const Multigraph& g, const HamiltonResult& r,
                    std::string* why) {
  if (static_cast<int>(r.order.verts.size()) != g.n) {
    *why = "length mismatch";
    return false;
  }
  std::set<int> seen(r.order.verts.begin(), r.order.verts.end());
  if (static_cast<int>(seen.size()) != g.n) {
    *why = "revisit";
    return false;
  }
  if (g.n <= 64) {
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(g.n, std::vector<int>(g.n, inf));
    for (int v = 0; v < g.n; ++v) d[v][v] = 0;
    for (const auto& [e, m] : g.edges)
      if (e.first != e.second) d[e.first][e.second] = d[e.second][e.first] = 1;
    for (int k = 0; k < g.n; ++k)
      for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
          d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    for (size_t i = 0; i + 1 < r.order.verts.size(); ++i)
      if (d[r.order.verts[i]][r.order.verts[i + 1]] > r.power_k) {
        *why = "step exceeds 2D+1";
        return false;
      }
    return true;
  }
  for (size_t i = 0; i + 1 < r.order.verts.size(); ++i) {
    auto dist = local_bfs(g, r.order.verts[i]);
    if (dist[r.order.verts[i + 1]] > r.power_k || dist[r.order.verts[i + 1]] < 0) {
      *why = "step exceeds 2D+1";
      return false;
    }
  }
  return true;
}

void criterion_hamilton(Outcome& out) {
  auto families = GraphEnum::connected_up_to(8);
  const std::vector<size_t> expected{0, 1, 1, 2, 6, 21, 112, 853, 11117};
  long long graphs = 0;
  for (int n = 1; n <= 8; ++n) {
    if (families[n].size() != expected[n]) {
      out.pass = false;
      out.detail << "enumeration off at n=" << n << " (" << families[n].size()
                 << " classes); ";
      return;
    }
    for (uint32_t mask : families[n]) {
      Multigraph g = GraphEnum::to_graph(mask, n);
      HamiltonResult r = hamiltonian_in_power(g);
      std::string why;
      if (!validate_order(g, r, &why)) {
        out.pass = false;
        out.detail << "graph n=" << n << " mask=" << mask << ": " << why << "; ";
        return;
      }
      ++graphs;
    }
  }

  struct WindowCase {
    GroupSpec spec;
    std::string name;
    int expect_power;  // 0 = no pin
  };
  std::vector<WindowCase> cases{
      {GroupSpec::free_abelian(2), "Z^2", 9},
      {GroupSpec::free(2), "F_2", 0},
      {GroupSpec::free_product_z_z3(), "Z*Z_3", 0},
  };
  for (const auto& wc : cases) {
    Group g(wc.spec);
    for (int radius = 1; radius <= 6; ++radius) {
      Multigraph window = cayley_ball_graph(g, g.default_generators(), radius, 0);
      HamiltonResult r = hamiltonian_in_power(window);
      if (wc.expect_power && r.power_k != wc.expect_power) {
        out.pass = false;
        out.detail << wc.name << " radius " << radius << ": power "
                   << r.power_k << " != " << wc.expect_power << "; ";
        return;
      }
      std::string why;
      if (!validate_order(window, r, &why)) {
        out.pass = false;
        out.detail << wc.name << " radius " << radius << ": " << why << "; ";
        return;
      }
      ++graphs;
    }
  }
  out.detail << graphs << " graphs and windows ordered and validated";
}

// ---------------------------------------------------------------- criterion 3

void criterion_hall(Outcome& out) {
  long long instances = 0, subsets = 0;
  std::mt19937_64 rng(2024);

  auto check_instance = [&](const Multigraph& g) {
    Multigraph support = simple_support(g);
    if (support.n < 2 || support.edge_count() == 0 || !support.connected()) return;
    PathSeq walk = double_cover_walk(support);
    int m = support.max_degree() + 1;
    BlockBipartite b = build_block_bipartite(walk, m);
    HallViolation viol;
    auto match = saturating_matching(b, support.n, &viol);
    if (match.empty() && b.block_count > 0) {
      out.pass = false;
      out.detail << "matching failed to saturate; ";
      return;
    }
    auto examine = [&](uint64_t mask_bits, const std::vector<int>& chosen) {
      (void)mask_bits;
      std::set<int> boundary;
      std::set<EdgeKey> phi;
      for (int k : chosen) {
        for (int v : b.adj[k]) boundary.insert(v);
        for (int i = 0; i + 1 < m; ++i) {
          int u = walk.verts[k * m + i], v = walk.verts[k * m + i + 1];
          phi.insert({std::min(u, v), std::max(u, v)});
        }
      }
      ++subsets;
      if (static_cast<long long>(boundary.size()) <
          static_cast<long long>(chosen.size())) {
        out.pass = false;
        out.detail << "hall inequality violated; ";
      }
      if (2 * static_cast<long long>(phi.size()) <
          static_cast<long long>(chosen.size()) * (m - 1)) {
        out.pass = false;
        out.detail << "phi edge bound violated; ";
      }
    };
    if (b.block_count <= 12) {
      for (uint64_t mask = 1; mask < (1ull << b.block_count); ++mask) {
        std::vector<int> chosen;
        for (int k = 0; k < b.block_count; ++k)
          if (mask & (1ull << k)) chosen.push_back(k);
        examine(mask, chosen);
        if (!out.pass) return;
      }
    } else {
      // all singletons and pairs, then random larger subsets
      for (int i = 0; i < b.block_count; ++i) {
        examine(0, {i});
        if (!out.pass) return;
        for (int j = i + 1; j < b.block_count; ++j) {
          examine(0, {i, j});
          if (!out.pass) return;
        }
      }
      for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> chosen;
        for (int k = 0; k < b.block_count; ++k)
          if (rng() % 3 == 0) chosen.push_back(k);
        if (chosen.empty()) continue;
        examine(0, chosen);
        if (!out.pass) return;
      }
    }
    ++instances;
  };

  auto families = GraphEnum::connected_up_to(6);
  for (int n = 2; n <= 6; ++n)
    for (uint32_t mask : families[n]) {
      check_instance(GraphEnum::to_graph(mask, n));
      if (!out.pass) return;
    }
  for (GroupSpec spec : {GroupSpec::free_abelian(2), GroupSpec::free(2),
                         GroupSpec::free_product_z_z3()}) {
    Group g(spec);
    check_instance(cayley_ball_graph(g, g.default_generators(), 4, 0));
    if (!out.pass) return;
  }
  check_instance(make_grid(5, 5));
  out.detail << instances << " instances, " << subsets
             << " block subsets, zero violations";
}

// ---------------------------------------------------------------- criterion 4

void criterion_tree_map(Outcome& out) {
  struct TargetCase {
    uint64_t seed;
    int root_children, min_c, max_c;
  };
  // degrees in [3,5]: rooted child counts in [2,4]
  std::vector<TargetCase> targets{{1, 3, 2, 2}, {5, 3, 2, 4}, {9, 4, 2, 4}};
  long long pairs = 0;
  for (const auto& tc : targets) {
    RootedTree source = RootedTree::regular(6, 6);
    RootedTree target =
        RootedTree::random_window(tc.seed, tc.root_children, tc.min_c, tc.max_c, 60);
    TreeMap fm = build_tree_map(source, target, 5);
    ClauseReport clauses = verify_tree_map_clauses(source, target, fm);
    if (!clauses.all()) {
      out.pass = false;
      out.detail << "clause failure (seed " << tc.seed << "): "
                 << (clauses.notes.empty() ? "?" : clauses.notes[0]) << "; ";
      return;
    }
    QiReport qi = verify_quasi_isometry(source, target, fm);
    pairs += qi.pairs_checked;
    if (!qi.upper_ok || !qi.lower_ok) {
      out.pass = false;
      out.detail << "distortion bound failed (seed " << tc.seed << "); ";
      return;
    }
    if (!qi.density_ok || qi.worst_density > 6) {
      out.pass = false;
      out.detail << "density above 6 (seed " << tc.seed << "); ";
      return;
    }
  }
  out.detail << targets.size() << " targets at depth 5, " << pairs
             << " pairs within rho <= 6d and d - 7 <= rho";
}

// ---------------------------------------------------------------- criterion 5

void criterion_lift(Outcome& out) {
  std::mt19937_64 rng(77);
  int done = 0;
  for (int trial = 0; trial < 50; ++trial) {
    Multigraph g;
    if (trial % 3 == 0) {
      g = make_grid(5, 5);
    } else if (trial % 3 == 1) {
      g = make_grid(6, 4);
    } else {
      Group f2(GroupSpec::free(2));
      g = cayley_ball_graph(f2, f2.default_generators(), 3, 0);
    }
    // random connected blocks: spanning tree minus a random edge subset
    SpanningTreeCert base = bfs_spanning_tree(g, 0);
    std::vector<std::vector<int>> adj(g.n);
    for (const auto& e : base.edges) {
      if (rng() % 3 == 0) continue;  // cut here
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
    }
    std::vector<int> block_of(g.n, -1);
    std::vector<std::vector<int>> blocks;
    for (int v = 0; v < g.n; ++v) {
      if (block_of[v] != -1) continue;
      std::vector<int> q{v};
      block_of[v] = static_cast<int>(blocks.size());
      for (size_t h = 0; h < q.size(); ++h)
        for (int w : adj[q[h]])
          if (block_of[w] == -1) {
            block_of[w] = static_cast<int>(blocks.size());
            q.push_back(w);
          }
      std::sort(q.begin(), q.end());
      blocks.push_back(q);
    }
    OrbitPartition parts = OrbitPartition::from_blocks(g.n, blocks);
    std::vector<SpanningTreeCert> block_trees;
    auto gadj = g.simple_adj();
    for (const auto& blk : parts.blocks) {
      SpanningTreeCert cert;
      cert.host_n = g.n;
      cert.in_tree.assign(g.n, 0);
      std::vector<int> q{blk[0]};
      cert.in_tree[blk[0]] = 1;
      for (size_t h = 0; h < q.size(); ++h)
        for (int w : gadj[q[h]]) {
          if (parts.block_of[w] != parts.block_of[blk[0]] || cert.in_tree[w])
            continue;
          cert.in_tree[w] = 1;
          cert.edges.emplace_back(std::min(q[h], w), std::max(q[h], w));
          q.push_back(w);
        }
      block_trees.push_back(std::move(cert));
    }
    SpanningTreeCert quot = bfs_spanning_tree(orbit_quotient(g, parts), 0);
    SpanningTreeCert lift = lift_spanning_tree(g, parts, block_trees, quot);
    if (static_cast<long long>(lift.edges.size()) != g.n - 1 ||
        !lift.acyclic_connected()) {
      out.pass = false;
      out.detail << "lift invariant failed at trial " << trial << "; ";
      return;
    }
    ++done;
  }
  out.detail << done << " lifted partitions, all |E| = |V|-1, connected, acyclic";
}

// ---------------------------------------------------------------- criterion 6

void criterion_regular_trees(Outcome& out) {
  for (int rank : {2, 3}) {
    Group g(GroupSpec::free(rank));
    Ball ball;
    Multigraph w = cayley_ball_graph(g, g.default_generators(), 5, 2, &ball);
    RegularTreeReport rep;
    SpanningTreeCert cert = regular_spanning_tree_window(
        w, 3, 3, ball.index_of(g.identity()), &rep);
    if (!rep.ok) {
      out.pass = false;
      out.detail << "F_" << rank << ": " << rep.message << "; ";
      return;
    }
    for (int v = 0; v < w.n; ++v)
      if (w.interior[v] && cert.tree_degree(v) != 3) {
        out.pass = false;
        out.detail << "F_" << rank << ": interior degree != 3; ";
        return;
      }
  }
  Zz3Report rep = z_z3_no_regular_tree_check(2, 20);
  if (!rep.exhaustive || rep.interior_regular_trees != 0 ||
      !rep.contraction_is_tree || !rep.degree_pattern_ok) {
    out.pass = false;
    out.detail << "zz3 window: " << rep.message << "; ";
    return;
  }
  out.detail << "degree-3 interior trees on F_2 and F_3; zz3 window has none ("
             << rep.spanning_trees_checked << " trees enumerated)";
}

// ---------------------------------------------------------------- criterion 7

void criterion_tilings(Outcome& out) {
  cli::RunConfig cfg;
  cfg.box = 12;
  Json t = cli::run_pipeline("tiling", cfg);
  if (!t["ok"].get<bool>()) {
    out.pass = false;
    out.detail << "tiling pipeline failed; ";
    return;
  }
  for (const auto& level : t["levels"]) {
    if (!level["coverage_ok"].get<bool>() || !level["oracle_agrees"].get<bool>()) {
      out.pass = false;
      out.detail << "pushforward level failed; ";
      return;
    }
  }
  if (!t["ccc"]["centered"].get<bool>() || !t["ccc"]["cofinal"].get<bool>() ||
      !t["ccc"]["coherent"].get<bool>()) {
    out.pass = false;
    out.detail << "ccc check failed; ";
    return;
  }
  for (long long n = 2; n <= 16; ++n) {
    SizedTileResult r =
        sized_fair_polytile(GroupSpec::free_abelian(2), {"e", "a b"}, n);
    if (!is_fair(r.tile) || r.tile.tiles[0].size() != static_cast<size_t>(n) ||
        !std::binary_search(r.tile.tiles[0].begin(), r.tile.tiles[0].end(),
                            r.group->parse("a b")) ||
        !verify_polytiling(*r.group, r.tiling, r.window).ok) {
      out.pass = false;
      out.detail << "sized tile failed at n = " << n << "; ";
      return;
    }
  }
  bool refused = false;
  try {
    sized_fair_polytile(GroupSpec::finite_cyclic(6), {"e"}, 4);
  } catch (const Error&) {
    refused = true;
  }
  if (!refused) {
    out.pass = false;
    out.detail << "non-divisor size was not refused; ";
    return;
  }
  out.detail << "pushforward chain exact with agreeing oracles; sized tiles "
                "honored for n in [2,16]; divisor rule enforced";
}

// ---------------------------------------------------------------- criterion 8

void criterion_determinism(Outcome& out) {
  struct Run {
    std::string name;
    cli::RunConfig cfg;
  };
  std::vector<Run> runs;
  {
    cli::RunConfig c;
    c.group_json = Json::parse(R"({"family":"free_abelian","params":{"dim":2}})");
    c.radius = 4;
    runs.push_back({"burnside", c});
  }
  {
    cli::RunConfig c;
    c.group_json = Json::parse(R"({"family":"free","params":{"rank":2}})");
    c.radius = 4;
    c.k = 3;
    runs.push_back({"vonneumann", c});
  }
  {
    cli::RunConfig c;
    runs.push_back({"tiling", c});
  }
  {
    cli::RunConfig c;
    c.depth = 3;
    runs.push_back({"treemap", c});
  }
  {
    cli::RunConfig c;
    c.radius = 2;
    runs.push_back({"zz3", c});
  }
  for (const auto& r : runs) {
    std::string a = cli::run_pipeline(r.name, r.cfg).dump(2);
    std::string b = cli::run_pipeline(r.name, r.cfg).dump(2);
    if (a != b) {
      out.pass = false;
      out.detail << r.name << " differed across reruns; ";
      return;
    }
  }
  out.detail << runs.size() << " pipelines byte-identical across reruns";
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    void (*fn)(Outcome&);
    double budget;  // seconds
  };
  const Entry entries[] = {
      {1, "perimeter lemma suite", criterion_perimeters, 5.0},
      {2, "hamiltonian-in-power", criterion_hamilton, 30.0},
      {3, "hall feasibility", criterion_hall, 60.0},
      {4, "tree-map quasi-isometry", criterion_tree_map, 60.0},
      {5, "spanning-tree lift", criterion_lift, 60.0},
      {6, "regular spanning trees", criterion_regular_trees, 60.0},
      {7, "tilings", criterion_tilings, 30.0},
      {8, "determinism", criterion_determinism, 60.0},
  };
  bool all = true;
  for (const auto& e : entries) {
    Outcome out;
    auto t0 = Clock::now();
    try {
      e.fn(out);
    } catch (const std::exception& ex) {
      out.pass = false;
      out.detail << "exception: " << ex.what();
    }
    double dt = seconds_since(t0);
    if (dt > e.budget) {
      out.pass = false;
      out.detail << " [over budget " << e.budget << "s]";
    }
    std::printf("criterion %d (%s): %s (%.2fs) %s\n", e.id, e.name,
                out.pass ? "PASS" : "FAIL", dt, out.detail.str().c_str());
    all = all && out.pass;
  }
  return all ? 0 : 1;
}
