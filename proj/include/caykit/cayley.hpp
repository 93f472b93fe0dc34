#pragma once

#include "caykit/group.hpp"
#include "caykit/multigraph.hpp"

namespace caykit {

// Window of Cay(G; S): vertices are the ball elements, edges come from right
// multiplication by S u S^-1 inside the ball, interior is the radius-k-eroded
// sub-ball. Vertex labels are canonical words.
Multigraph cayley_ball_graph(const Group& g, const GeneratingSet& s, int radius,
                             int interior_collar, Ball* out_ball = nullptr,
                             long long cap = 2'000'000);

// Edge classification by the generator that produced it (index into the
// symmetric closure order of primitive generators).
std::map<EdgeKey, std::vector<int>> cayley_edge_generators(
    const Group& g, const GeneratingSet& s, const Ball& ball);

}  // namespace caykit
