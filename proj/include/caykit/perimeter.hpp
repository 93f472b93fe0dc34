#pragma once

#include <string>
#include <utility>
#include <vector>

#include "caykit/rooted_tree.hpp"

namespace caykit {

// An antichain below a subroot together with multiplicities, covering every
// deep enough vertex from above.
struct Perimeter {
  std::vector<std::pair<int, int>> entries;  // (vertex, d), sorted by vertex
  int radius = 0;                            // smallest covering radius
  long long d_sum() const;
};

// Recursive decomposition from the subroot: splits the budget r over the
// children by Euclidean division and recurses where a child cannot absorb its
// share. Requires r >= 3, 2 <= #children(subroot) <= r-1, and rooted child
// counts >= 2 everywhere else it touches.
// Every entry satisfies 1 <= d(p) <= child_count(p) and the d's sum to r.
Perimeter perimeter_decompose(RootedTree& t, int r, int subroot = 0);

// Same, with the subroot's child set replaced by a subset.
Perimeter perimeter_decompose_restricted(RootedTree& t, int r, int subroot,
                                         const std::vector<int>& child_subset);

struct PerimeterCheck {
  bool not_root_only = true;
  bool below_root = true;
  bool antichain = true;
  bool covering = true;
  bool d_bounds = true;
  long long d_sum = 0;
  int radius = -1;
  std::vector<std::string> notes;

  bool ok() const {
    return not_root_only && below_root && antichain && covering && d_bounds;
  }
};

// Recomputes every perimeter axiom from scratch by pruned depth-first search.
// check_d = false skips the multiplicity bounds (for bare vertex sets).
PerimeterCheck verify_perimeter(RootedTree& t, int subroot,
                                const std::vector<std::pair<int, int>>& entries,
                                bool check_d = true);

}  // namespace caykit
