#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "caykit/error.hpp"

namespace caykit {

using EdgeKey = std::pair<int, int>;  // normalized u <= v

// Finite multigraph: edge multiset with multiplicity counters, loops allowed,
// plus an interior vertex marking for window semantics.
struct Multigraph {
  int n = 0;
  std::vector<std::string> label;   // optional, size n when present
  std::map<EdgeKey, int> edges;     // multiplicity >= 1
  std::vector<char> interior;      // size n; 1 = interior vertex

  static Multigraph with_vertices(int n);

  int add_vertex(const std::string& lbl = "");
  void add_edge(int u, int v, int mult = 1);
  void set_all_interior();

  int degree(int v) const;          // loops count twice
  long long edge_count() const;     // sum of multiplicities
  int max_degree() const;

  // Sorted unique neighbors over the simple support, loops dropped.
  std::vector<std::vector<int>> simple_adj() const;

  std::vector<int> bfs_dist(int src) const;                    // -1 unreachable
  std::vector<int> bfs_dist(const std::vector<int>& srcs) const;
  bool connected() const;

  std::vector<int> interior_vertices() const;
  std::string vertex_name(int v) const;
};

Multigraph simple_support(const Multigraph& g);   // multiplicities to 1, loops dropped
Multigraph double_edges(const Multigraph& g);

// Same vertices; a single edge wherever the path distance in g lies in [1, k].
Multigraph power_graph(const Multigraph& g, int k);

// A together with every vertex within distance k of A.
std::vector<int> neighborhood(const Multigraph& g, const std::vector<int>& a, int k);

struct PathSeq {
  enum class Kind { walk, eulerian, hamiltonian };
  std::vector<int> verts;
  Kind kind = Kind::walk;
};

bool is_walk(const Multigraph& g, const PathSeq& p);
// Closed walk using every edge slot exactly once.
bool is_eulerian_circuit(const Multigraph& g, const PathSeq& p);
// Visits every vertex exactly once.
bool is_hamiltonian_path(const Multigraph& g, const PathSeq& p);
// Count of traversals per edge of the simple support.
std::map<EdgeKey, int> traversal_counts(const PathSeq& p);

std::string to_dot(const Multigraph& g);

// Small builders used by pipelines and tests.
Multigraph make_path(int n);
Multigraph make_cycle(int n);
Multigraph make_complete(int n);
Multigraph make_star(int leaves);
Multigraph make_grid(int w, int h);

}  // namespace caykit
