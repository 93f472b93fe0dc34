#include "caykit/rooted_tree.hpp"

#include <algorithm>

namespace caykit {

RootedTree::RootedTree(int cutoff_depth,
                       std::function<int(const RootedTree&, int)> child_count)
    : cutoff_(cutoff_depth), count_fn_(std::move(child_count)) {
  parent_.push_back(-1);
  depth_.push_back(0);
  kids_.emplace_back();
  expanded_.push_back(0);
  trunc_.push_back(cutoff_ == 0);
}

RootedTree RootedTree::regular(int degree, int cutoff_depth) {
  if (degree < 2) throw Error("regular degree must be at least 2");
  return RootedTree(cutoff_depth, [degree](const RootedTree&, int v) {
    return v == 0 ? degree : degree - 1;
  });
}

namespace {
// splitmix64; per-vertex draws must not depend on expansion order, so the
// stream is keyed on the vertex's root path.
uint64_t mix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace

RootedTree RootedTree::random_window(uint64_t seed, int root_children,
                                     int min_children, int max_children,
                                     int cutoff_depth) {
  if (min_children < 0 || max_children < min_children)
    throw Error("bad child count range");
  auto draw = [seed, root_children, min_children, max_children](
                  const RootedTree& t, int v) -> int {
    if (v == 0) return root_children;
    uint64_t h = seed;
    for (int u = v; u != -1; u = t.parent(u)) h = mix(h ^ static_cast<uint64_t>(u));
    int span = max_children - min_children + 1;
    return min_children + static_cast<int>(h % static_cast<uint64_t>(span));
  };
  return RootedTree(cutoff_depth, draw);
}

RootedTree RootedTree::from_parents(const std::vector<int>& parent,
                                    const std::vector<char>* truncated) {
  if (parent.empty() || parent[0] != -1) throw Error("vertex 0 must be the root");
  RootedTree t(1 << 30, nullptr);
  t.parent_ = parent;
  int n = static_cast<int>(parent.size());
  t.kids_.assign(n, {});
  t.depth_.assign(n, 0);
  t.expanded_.assign(n, 1);
  t.trunc_.assign(n, 0);
  for (int v = 1; v < n; ++v) {
    if (parent[v] < 0 || parent[v] >= v)
      throw Error("parents must precede children");
    t.kids_[parent[v]].push_back(v);
    t.depth_[v] = t.depth_[parent[v]] + 1;
  }
  for (int v = 0; v < n; ++v) {
    std::sort(t.kids_[v].begin(), t.kids_[v].end());
    // A leaf of the window stands for a truncation point by default.
    bool trunc = truncated ? (*truncated)[v] != 0 : t.kids_[v].empty();
    t.trunc_[v] = trunc;
    if (trunc && !t.kids_[v].empty())
      throw Error("truncated vertex cannot have children");
  }
  return t;
}

int RootedTree::add_child(int parent) {
  int v = static_cast<int>(parent_.size());
  parent_.push_back(parent);
  depth_.push_back(depth_[parent] + 1);
  kids_.emplace_back();
  expanded_.push_back(0);
  trunc_.push_back(depth_.back() >= cutoff_);
  kids_[parent].push_back(v);
  return v;
}

void RootedTree::expand(int v) {
  if (expanded_[v]) return;
  if (trunc_[v]) throw WindowExhausted("insufficient depth");
  if (!count_fn_) throw Error("tree has no expansion rule");
  int c = count_fn_(*this, v);
  for (int i = 0; i < c; ++i) add_child(v);
  expanded_[v] = 1;
}

const std::vector<int>& RootedTree::children(int v) {
  expand(v);
  return kids_[v];
}

int RootedTree::child_count(int v) {
  expand(v);
  return static_cast<int>(kids_[v].size());
}

bool RootedTree::is_ancestor(int a, int b) const {
  while (b != -1 && depth_[b] > depth_[a]) b = parent_[b];
  return a == b;
}

int RootedTree::lca(int a, int b) const {
  while (depth_[a] > depth_[b]) a = parent_[a];
  while (depth_[b] > depth_[a]) b = parent_[b];
  while (a != b) {
    a = parent_[a];
    b = parent_[b];
  }
  return a;
}

int RootedTree::distance(int a, int b) const {
  int w = lca(a, b);
  return depth_[a] + depth_[b] - 2 * depth_[w];
}

}  // namespace caykit
