#include "caykit/perimeter.hpp"

#include <algorithm>
#include <set>

namespace caykit {

long long Perimeter::d_sum() const {
  long long s = 0;
  for (const auto& [v, d] : entries) s += d;
  return s;
}

namespace {

struct RecResult {
  std::vector<std::pair<int, int>> entries;
  int radius = 0;  // relative to the local root
};

RecResult decompose_rec(RootedTree& t, std::vector<int> kids, int r) {
  int deg = static_cast<int>(kids.size());
  if (r < 3) throw Error("budget below 3");
  if (deg < 2 || deg > r - 1) throw Error("root degree outside [2, r-1]");

  RecResult out;
  if (r == 3) {
    // deg is forced to 2; the larger share goes to the first child.
    for (int i = 0; i < 2; ++i) {
      int c = kids[i];
      if (t.child_count(c) < 2)
        throw Error("internal vertex of degree below 3");
      out.entries.emplace_back(c, 2 - i);
    }
    out.radius = 1;
    return out;
  }

  int q = r / deg;
  int s = r % deg;
  // First deg-s children take share q, the rest q+1.
  out.radius = 1;
  for (int i = 0; i < deg; ++i) {
    int share = i < deg - s ? q : q + 1;
    int c = kids[i];
    int cc = t.child_count(c);
    if (cc < 2) throw Error("internal vertex of degree below 3");
    if (share <= cc) {
      out.entries.emplace_back(c, share);
    } else {
      RecResult sub = decompose_rec(t, t.children(c), share);
      out.entries.insert(out.entries.end(), sub.entries.begin(), sub.entries.end());
      out.radius = std::max(out.radius, sub.radius + 1);
    }
  }
  if (out.radius > r) throw Error("internal: radius bound violated");
  return out;
}

Perimeter finish(RecResult rec) {
  std::sort(rec.entries.begin(), rec.entries.end());
  Perimeter p;
  p.entries = std::move(rec.entries);
  p.radius = rec.radius;
  return p;
}

}  // namespace

Perimeter perimeter_decompose(RootedTree& t, int r, int subroot) {
  return finish(decompose_rec(t, t.children(subroot), r));
}

Perimeter perimeter_decompose_restricted(RootedTree& t, int r, int subroot,
                                         const std::vector<int>& child_subset) {
  std::vector<int> kids = child_subset;
  std::sort(kids.begin(), kids.end());
  const auto& all = t.children(subroot);
  for (int c : kids)
    if (!std::binary_search(all.begin(), all.end(), c))
      throw Error("restricted child not a child of the subroot");
  return finish(decompose_rec(t, kids, r));
}

PerimeterCheck verify_perimeter(RootedTree& t, int subroot,
                                const std::vector<std::pair<int, int>>& entries,
                                bool check_d) {
  PerimeterCheck chk;
  std::set<int> members;
  for (const auto& [v, d] : entries) members.insert(v);

  if (members.empty() || (members.size() == 1 && *members.begin() == subroot)) {
    chk.not_root_only = false;
    chk.notes.push_back("perimeter must differ from { root }");
  }
  for (const auto& [v, d] : entries) {
    if (v == subroot || !t.is_ancestor(subroot, v)) {
      chk.below_root = false;
      chk.notes.push_back("entry not strictly below the subroot");
    }
    if (check_d) {
      chk.d_sum += d;
      if (d < 1 || d > t.child_count(v)) {
        chk.d_bounds = false;
        chk.notes.push_back("multiplicity outside [1, deg-1]");
      }
    }
  }
  // Antichain: no member may appear on another member's root path.
  for (int v : members)
    for (int u = t.parent(v); u != -1 && t.depth(u) > t.depth(subroot); u = t.parent(u))
      if (members.count(u)) {
        chk.antichain = false;
        chk.notes.push_back("comparable pair in perimeter");
      }

  // Covering radius: depth-first from the subroot, pruned at members. Any
  // truncated vertex with no member above it leaves the radius unbounded.
  int deepest_uncovered = 0;  // the subroot itself is uncovered
  std::vector<int> stack{subroot};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (members.count(v)) continue;  // covered from here down
    if (v != subroot)
      deepest_uncovered = std::max(deepest_uncovered, t.depth(v) - t.depth(subroot));
    if (t.truncated(v)) {
      chk.covering = false;
      chk.notes.push_back("uncovered truncated vertex: covering unverifiable");
      continue;
    }
    for (int c : t.children(v)) stack.push_back(c);
  }
  if (chk.covering) chk.radius = deepest_uncovered + 1;
  return chk;
}

}  // namespace caykit
