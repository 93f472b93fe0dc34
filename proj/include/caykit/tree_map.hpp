#pragma once

#include <string>
#include <vector>

#include "caykit/perimeter.hpp"
#include "caykit/rooted_tree.hpp"

namespace caykit {

// Level-by-level map from the (r+1)-regular tree onto a bounded-degree tree,
// seeded and extended through perimeter decompositions.
struct TreeMap {
  std::vector<int> f;  // source vertex -> target vertex, -1 where unbuilt
  int depth = 0;       // defined on the source ball of this radius
  int r = 0;           // source tree is (r+1)-regular
};

// `source` must be regular of degree r+1; every target vertex it touches must
// have unrooted degree in [3, r]. Throws WindowExhausted if either window is
// too shallow for the recursion.
TreeMap build_tree_map(RootedTree& source, RootedTree& target, int depth);

struct ClauseReport {
  bool root_fixed = true;        // (i)
  bool fiber_shape = true;       // (ii) same level, diameter <= 2
  bool edge_bound = true;        // (iii) images of edges move <= r+1
  bool order_monotone = true;    // (iv)
  bool fiber_witness = true;     // (v)
  bool fiber_size = true;        // (vi) |fiber| <= deg - 1
  bool level_incomparable = true;  // (vii)
  bool level_perimeter = true;     // (viii)
  std::vector<std::string> notes;

  bool all() const {
    return root_fixed && fiber_shape && edge_bound && order_monotone &&
           fiber_witness && fiber_size && level_incomparable && level_perimeter;
  }
};

// Recomputes all eight clause certificates from the map alone.
ClauseReport verify_tree_map_clauses(RootedTree& source, RootedTree& target,
                                     const TreeMap& fm);

struct QiReport {
  bool upper_ok = true;     // rho(F u, F v) <= (r+1) d(u,v)
  bool lower_ok = true;     // d(u,v) - (r+2) <= rho(F u, F v)
  bool density_ok = true;   // interior target within r+1 of the image
  int worst_upper_excess = 0;   // max rho - (r+1) d over pairs (<= 0 when ok)
  int worst_lower_excess = 0;   // max d - (r+2) - rho over pairs (<= 0 when ok)
  int worst_density = 0;        // max distance from interior target to image
  long long pairs_checked = 0;
  long long interior_checked = 0;
};

// Exhaustive pair scan; "interior" targets are the vertices lying on or above
// an image point, the region where the image has already passed.
QiReport verify_quasi_isometry(RootedTree& source, RootedTree& target,
                               const TreeMap& fm);

struct ExpansionReport {
  bool ok = true;
  long long subsets_checked = 0;
  std::vector<std::vector<int>> violations;  // connected S with |N1(S)| < 2|S|
};

// |N1(S)| >= 2 |S| over connected sets of non-truncated vertices: exhaustive
// when the interior is small, deterministic balls plus seeded samples beyond.
ExpansionReport tree_nonamenability_check(RootedTree& t, int exhaustive_cap = 12,
                                          int samples = 2000, uint64_t seed = 1);

}  // namespace caykit
