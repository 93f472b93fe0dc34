#pragma once

#include <optional>
#include <set>
#include <string>

#include "caykit/group.hpp"
#include "caykit/multigraph.hpp"

namespace caykit {

struct OrbitPartition {
  std::vector<std::vector<int>> blocks;  // partition of [0, n)
  std::vector<int> block_of;             // size n

  static OrbitPartition from_blocks(int n, std::vector<std::vector<int>> blocks);
};

// One vertex per block; a single edge between blocks joined by any cross edge.
Multigraph orbit_quotient(const Multigraph& g, const OrbitPartition& parts);

struct SpanningTreeCert {
  std::vector<EdgeKey> edges;
  int host_n = 0;
  std::vector<char> in_tree;  // spanned vertices
  std::optional<int> regular_degree;

  int tree_degree(int v) const;
  bool acyclic_connected() const;  // on the spanned set
};

// Breadth-first parents with smallest-id tie break; tree distance from the
// root equals graph distance.
SpanningTreeCert bfs_spanning_tree(const Multigraph& g, int root);

// Union of per-block spanning trees with one witness cross edge per quotient
// tree edge (the lexicographically smallest endpoint pair).
SpanningTreeCert lift_spanning_tree(const Multigraph& g, const OrbitPartition& parts,
                                    const std::vector<SpanningTreeCert>& block_trees,
                                    const SpanningTreeCert& quotient_tree);

struct RegularTreeReport {
  bool ok = false;
  int stretch = 0;               // max host distance across a tree edge
  int interior_deficit = 0;      // interior vertices short of degree k
  int unspanned_interior = 0;
  std::string message;
};

// Degree-k spanning structure on a window: every interior vertex gets tree
// degree exactly k, every vertex at most k, edges join vertices at host
// distance <= stretch_cap. Grown root-out with a slot queue, then repaired;
// the report carries the verified certificate facts.
SpanningTreeCert regular_spanning_tree_window(const Multigraph& g, int k,
                                              int stretch_cap, int root,
                                              RegularTreeReport* report);

// All spanning trees of a small connected graph (simple support).
std::vector<std::vector<EdgeKey>> enumerate_spanning_trees(const Multigraph& g,
                                                           long long cap = 1'000'000);

struct Zz3Report {
  bool all_t_edges_bridges = true;   // after contracting the u-triangles
  bool contraction_is_tree = true;
  int interior_triangles = 0;
  bool degree_pattern_ok = true;     // each kept pair forces pattern (4,3,3)
  long long spanning_trees_checked = 0;
  long long interior_regular_trees = 0;
  bool exhaustive = false;
  std::string message;
};

// The local obstruction on a Z*Z_3 window: collapse triangles, check the
// t-edges are forced, and (on small windows) enumerate every spanning tree
// and confirm none has constant interior degree.
Zz3Report z_z3_no_regular_tree_check(int radius, int enumeration_vertex_cap = 20);

}  // namespace caykit
