#pragma once

#include "caykit/multigraph.hpp"

namespace caykit {

// Bipartite incidence between M-length index blocks of a walk and the
// vertices those blocks visit.
struct BlockBipartite {
  int m = 0;                          // block length, D + 1
  int block_count = 0;                // full blocks only
  std::vector<std::vector<int>> adj;  // per block: sorted distinct vertices
};

BlockBipartite build_block_bipartite(const PathSeq& walk, int m);

struct HallViolation {
  std::vector<int> blocks;  // T with |N(T)| < |T|
  std::vector<int> boundary;
};

// Thrown only if the matching cannot saturate the blocks; carries the
// violating block set as a certificate.
struct HallInfeasible : Error {
  HallInfeasible(HallViolation v)
      : Error("hall matching infeasible"), violation(std::move(v)) {}
  HallViolation violation;
};

struct HallSelection {
  int m = 0;
  int block_count = 0;
  std::vector<int> phi;      // per block: offset with matched = walk[k*m+phi]
  std::vector<int> matched;  // per block: matched vertex
  std::vector<int> select;   // S, sorted walk indices, one per host vertex
};

// Matches every block to a distinct vertex it visits, then closes the
// selection with the first visit index of every unmatched vertex.
// Consecutive members of the selection differ by at most 2M-1.
HallSelection hall_select(const Multigraph& host, const PathSeq& walk, int d_bound = 0);

// Greedy augmenting-path matching saturating the left side, or a violation.
std::vector<int> saturating_matching(const BlockBipartite& b, int right_size,
                                     HallViolation* violation);

struct HamiltonResult {
  PathSeq cover_walk;   // every vertex >= once, every edge <= twice
  PathSeq order;        // each vertex exactly once
  int d = 0;            // max degree of the simple support
  int m = 0;            // D + 1
  int power_k = 0;      // 2M - 1 = 2D + 1; order is Hamiltonian in g^power_k
  HallSelection hall;
};

// Double cover -> blockwise matching -> increasing reindex. The returned
// order visits every vertex once with consecutive host distance <= 2D+1.
HamiltonResult hamiltonian_in_power(const Multigraph& g);

// Same extraction applied to a caller-supplied cover walk (e.g. the two-ended
// one); the walk must visit every vertex and use each support edge <= twice.
HamiltonResult hamiltonian_from_walk(const Multigraph& g, const PathSeq& walk);

}  // namespace caykit
