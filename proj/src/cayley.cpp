#include "caykit/cayley.hpp"

#include <algorithm>

namespace caykit {

Multigraph cayley_ball_graph(const Group& g, const GeneratingSet& s, int radius,
                             int interior_collar, Ball* out_ball, long long cap) {
  if (interior_collar < 0 || interior_collar > radius)
    throw Error("interior collar must lie in [0, radius]");
  Ball ball = enumerate_ball(g, s, radius, cap);
  ball.interior_radius = radius - interior_collar;

  Multigraph mg = Multigraph::with_vertices(ball.size());
  mg.label.resize(ball.size());
  for (int i = 0; i < ball.size(); ++i) {
    mg.label[i] = g.to_string(ball.elements[i]);
    mg.interior[i] = ball.distance[i] <= ball.interior_radius ? 1 : 0;
  }
  auto sym = s.symmetric_closure(g);
  for (int i = 0; i < ball.size(); ++i)
    for (const auto& x : sym) {
      Element h = g.multiply(ball.elements[i], x);
      int j = ball.index_of(h);
      if (j > i) mg.add_edge(i, j);  // edge set, not multiset
    }
  if (out_ball) *out_ball = std::move(ball);
  return mg;
}

std::map<EdgeKey, std::vector<int>> cayley_edge_generators(
    const Group& g, const GeneratingSet& s, const Ball& ball) {
  std::map<EdgeKey, std::vector<int>> out;
  for (size_t gi = 0; gi < s.gens.size(); ++gi) {
    for (const Element& x : {s.gens[gi], g.inverse(s.gens[gi])}) {
      for (int i = 0; i < ball.size(); ++i) {
        Element h = g.multiply(ball.elements[i], x);
        int j = ball.index_of(h);
        if (j < 0 || j == i) continue;
        EdgeKey e = i < j ? EdgeKey{i, j} : EdgeKey{j, i};
        auto& v = out[e];
        if (std::find(v.begin(), v.end(), static_cast<int>(gi)) == v.end())
          v.push_back(static_cast<int>(gi));
      }
    }
  }
  return out;
}

}  // namespace caykit
