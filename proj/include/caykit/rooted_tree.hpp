#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "caykit/error.hpp"

namespace caykit {

// Rooted tree window, expanded lazily so deep balls of branching trees stay
// cheap: a vertex's children exist only once something asks for them.
// Vertices at the cutoff depth stay truncated; asking for their children or
// degree throws WindowExhausted ("insufficient depth").
class RootedTree {
 public:
  // child_count(v) is consulted on first expansion of v.
  RootedTree(int cutoff_depth, std::function<int(const RootedTree&, int)> child_count);

  static RootedTree regular(int degree, int cutoff_depth);
  // Every non-root vertex draws its child count from [min_children,
  // max_children] with a per-vertex deterministic draw from the seed.
  static RootedTree random_window(uint64_t seed, int root_children,
                                  int min_children, int max_children,
                                  int cutoff_depth);
  // Fully materialized tree; leaves are truncation points unless the flag
  // vector says otherwise.
  static RootedTree from_parents(const std::vector<int>& parent,
                                 const std::vector<char>* truncated = nullptr);

  int root() const { return 0; }
  int parent(int v) const { return parent_[v]; }
  int depth(int v) const { return depth_[v]; }
  bool truncated(int v) const { return trunc_[v]; }
  int size() const { return static_cast<int>(parent_.size()); }  // materialized

  const std::vector<int>& children(int v);  // expands on demand
  // Rooted degree: number of children (the parent edge is not counted).
  // For a non-root v this is deg(v) - 1 in the unrooted sense.
  int child_count(int v);
  bool is_materialized(int v) const { return expanded_[v]; }

  // Walks toward the root; true also when a == b.
  bool is_ancestor(int a, int b) const;
  int lca(int a, int b) const;
  int distance(int a, int b) const;

 private:
  int add_child(int parent);
  void expand(int v);

  std::vector<int> parent_, depth_;
  std::vector<std::vector<int>> kids_;
  std::vector<char> expanded_, trunc_;
  int cutoff_;
  std::function<int(const RootedTree&, int)> count_fn_;
};

}  // namespace caykit
