#pragma once

#include <set>

#include "caykit/multigraph.hpp"

namespace caykit {

// Closed walk traversing every edge slot exactly once (Hierholzer). Ties are
// broken toward the smallest available (neighbor, copy) so the output is a
// function of the input alone.
// Throws: "not even" on an odd-degree vertex, "not connected", "empty graph".
PathSeq eulerian_circuit(const Multigraph& g);

// Shrinks a separating edge set F in two steps so that g - E has exactly the
// two components marked by the sides and nothing stranded away from both.
std::vector<EdgeKey> refine_separator(const Multigraph& g,
                                      const std::set<EdgeKey>& f,
                                      const std::vector<int>& side_a,
                                      const std::vector<int>& side_b);

// Eulerian circuit of the doubled graph, read as a closed walk on g: every
// vertex visited at least once, every edge traversed exactly twice.
PathSeq double_cover_walk(const Multigraph& g);

// Two-sided variant: split g along the refined separator, walk each half with
// the edges off the marked rays doubled, and splice at the contact vertex.
// The result visits every vertex and traverses every edge of the two induced
// halves once or twice; separator edges away from the contact vertex are not
// traversed.
PathSeq two_end_cover_walk(const Multigraph& g, const std::set<EdgeKey>& f,
                           const std::vector<int>& side_a,
                           const std::vector<int>& side_b);

}  // namespace caykit
