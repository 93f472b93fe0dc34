#include "caykit/tree_map.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace caykit {

namespace {

void set_image(std::vector<int>& f, int v, int y) {
  if (v >= static_cast<int>(f.size())) f.resize(v + 1, -1);
  f[v] = y;
}

void check_target_degree(RootedTree& tgt, int y, int r) {
  int unrooted = tgt.child_count(y) + (y == tgt.root() ? 0 : 1);
  if (unrooted < 3 || unrooted > r)
    throw Error("target degree outside [3, r]");
}

}  // namespace

TreeMap build_tree_map(RootedTree& src, RootedTree& tgt, int depth) {
  if (depth < 1) throw Error("depth must be at least 1");
  int rp1 = src.child_count(src.root());
  int r = rp1 - 1;
  if (r < 3) throw Error("source regular degree must be at least 4");
  check_target_degree(tgt, tgt.root(), r);

  TreeMap fm;
  fm.r = r;
  fm.depth = depth;
  set_image(fm.f, src.root(), tgt.root());

  // Level 1: perimeter of budget r+1 absorbs the root's r+1 children.
  std::vector<int> level = src.children(src.root());
  if (static_cast<int>(level.size()) != r + 1)
    throw Error("source tree is not (r+1)-regular at the root");
  {
    Perimeter p = perimeter_decompose(tgt, r + 1);
    if (p.d_sum() != r + 1) throw Error("internal: perimeter sum mismatch");
    size_t at = 0;
    for (const auto& [y, d] : p.entries)
      for (int i = 0; i < d; ++i) set_image(fm.f, level[at++], y);
  }

  for (int m = 2; m <= depth; ++m) {
    // Group the previous level by image; each group hands the image vertex's
    // remaining child budget to its own perimeter.
    std::map<int, std::vector<int>> groups;
    for (int v : level) groups[fm.f[v]].push_back(v);

    std::vector<int> next_level;
    for (auto& [y, u] : groups) {
      std::sort(u.begin(), u.end());
      check_target_degree(tgt, y, r);
      int budget = tgt.child_count(y);  // deg(y) - 1 for the non-root y
      int usize = static_cast<int>(u.size());
      if (usize > budget) throw Error("internal: fiber exceeds deg - 1");

      // Copy: recursion below expands the tree and may reallocate child lists.
      std::vector<int> ykids = tgt.children(y);
      int base = budget / usize, rem = budget % usize, consumed = 0;
      for (int i = 0; i < usize; ++i) {
        int share = base + (i < rem ? 1 : 0);
        std::vector<int> slice(ykids.begin() + consumed,
                               ykids.begin() + consumed + share);
        consumed += share;

        Perimeter pv = share >= 2
                           ? perimeter_decompose_restricted(tgt, r, y, slice)
                           : perimeter_decompose(tgt, r, slice[0]);
        if (pv.d_sum() != r) throw Error("internal: perimeter sum mismatch");

        std::vector<int> vkids = src.children(u[i]);
        if (static_cast<int>(vkids.size()) != r)
          throw Error("source tree is not (r+1)-regular");
        size_t at = 0;
        for (const auto& [p, d] : pv.entries)
          for (int j = 0; j < d; ++j) set_image(fm.f, vkids[at++], p);
        next_level.insert(next_level.end(), vkids.begin(), vkids.end());
      }
      if (consumed != static_cast<int>(ykids.size()))
        throw Error("internal: child partition incomplete");
    }
    level = std::move(next_level);
  }
  if (static_cast<int>(fm.f.size()) < src.size()) fm.f.resize(src.size(), -1);
  return fm;
}

ClauseReport verify_tree_map_clauses(RootedTree& src, RootedTree& tgt,
                                     const TreeMap& fm) {
  ClauseReport rep;
  std::vector<int> mapped;
  for (int v = 0; v < static_cast<int>(fm.f.size()); ++v)
    if (fm.f[v] != -1) mapped.push_back(v);

  auto note = [&rep](bool& flag, const std::string& msg) {
    flag = false;
    rep.notes.push_back(msg);
  };

  // (i)
  if (fm.f[src.root()] != tgt.root()) note(rep.root_fixed, "root not fixed");

  std::map<int, std::vector<int>> fiber;
  for (int v : mapped) fiber[fm.f[v]].push_back(v);

  // (ii) fibers live in one level with diameter at most 2.
  for (const auto& [y, vs] : fiber)
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = i + 1; j < vs.size(); ++j) {
        if (src.depth(vs[i]) != src.depth(vs[j]))
          note(rep.fiber_shape, "fiber spans levels");
        else if (src.distance(vs[i], vs[j]) > 2)
          note(rep.fiber_shape, "fiber diameter above 2");
      }

  // (iii) edges move at most r+1.
  for (int v : mapped) {
    int p = src.parent(v);
    if (p != -1 && fm.f[p] != -1 &&
        tgt.distance(fm.f[p], fm.f[v]) > fm.r + 1)
      note(rep.edge_bound, "edge image moved farther than r+1");
  }

  // (iv) order monotone along every root path.
  for (int v : mapped)
    for (int u = src.parent(v); u != -1; u = src.parent(u))
      if (fm.f[u] != -1 && !tgt.is_ancestor(fm.f[u], fm.f[v]))
        note(rep.order_monotone, "ancestor order not preserved");

  // (v) if F(u) < F(v), some member of F(u)'s fiber lies above v.
  for (int v : mapped) {
    for (int z = fm.f[v]; z != -1; z = tgt.parent(z)) {
      auto it = fiber.find(z);
      if (it == fiber.end()) continue;
      bool witness = false;
      for (int w : it->second)
        if (src.is_ancestor(w, v)) {
          witness = true;
          break;
        }
      if (!witness) note(rep.fiber_witness, "no fiber witness above");
    }
  }

  // (vi)
  for (const auto& [y, vs] : fiber) {
    int bound = tgt.child_count(y) + (y == tgt.root() ? -1 : 0);
    if (static_cast<int>(vs.size()) > bound)
      note(rep.fiber_size, "fiber larger than deg - 1");
  }

  // (vii) and (viii) per level.
  int max_depth = 0;
  for (int v : mapped) max_depth = std::max(max_depth, src.depth(v));
  for (int lvl = 1; lvl <= max_depth; ++lvl) {
    std::map<int, int> image_mult;  // target vertex -> fiber size at lvl
    for (int v : mapped)
      if (src.depth(v) == lvl) image_mult[fm.f[v]]++;
    std::set<int> image;
    for (const auto& [y, c] : image_mult) image.insert(y);
    for (int y : image)
      for (int a = tgt.parent(y); a != -1; a = tgt.parent(a))
        if (image.count(a))
          note(rep.level_incomparable, "comparable images inside one level");

    std::vector<std::pair<int, int>> entries(image_mult.begin(), image_mult.end());
    PerimeterCheck pc = verify_perimeter(tgt, tgt.root(), entries, true);
    if (!pc.ok()) {
      note(rep.level_perimeter, "level image fails the perimeter axioms");
      for (const auto& n : pc.notes) rep.notes.push_back("  " + n);
    }
  }
  return rep;
}

QiReport verify_quasi_isometry(RootedTree& src, RootedTree& tgt,
                               const TreeMap& fm) {
  QiReport rep;
  int r = fm.r;
  std::vector<int> mapped;
  for (int v = 0; v < static_cast<int>(fm.f.size()); ++v)
    if (fm.f[v] != -1) mapped.push_back(v);

  for (size_t i = 0; i < mapped.size(); ++i)
    for (size_t j = i + 1; j < mapped.size(); ++j) {
      int u = mapped[i], v = mapped[j];
      int d = src.distance(u, v);
      int rho = tgt.distance(fm.f[u], fm.f[v]);
      rep.worst_upper_excess = std::max(rep.worst_upper_excess, rho - (r + 1) * d);
      rep.worst_lower_excess = std::max(rep.worst_lower_excess, d - (r + 2) - rho);
      ++rep.pairs_checked;
    }
  rep.upper_ok = rep.worst_upper_excess <= 0;
  rep.lower_ok = rep.worst_lower_excess <= 0;

  // Distance to the image over the stored part of the target, two passes.
  int tn = tgt.size();
  const int inf = 1 << 28;
  std::vector<int> down(tn, inf);
  for (int v : mapped) down[fm.f[v]] = 0;
  for (int y = tn - 1; y >= 1; --y)  // children have larger ids than parents
    if (down[y] + 1 < down[tgt.parent(y)]) down[tgt.parent(y)] = down[y] + 1;
  std::vector<int> best = down;
  for (int y = 1; y < tn; ++y)
    best[y] = std::min(best[y], best[tgt.parent(y)] + 1);

  std::vector<char> interior(tn, 0);
  for (int v : mapped)
    for (int y = fm.f[v]; y != -1 && !interior[y]; y = tgt.parent(y))
      interior[y] = 1;
  for (int y = 0; y < tn; ++y)
    if (interior[y]) {
      rep.worst_density = std::max(rep.worst_density, best[y]);
      ++rep.interior_checked;
    }
  rep.density_ok = rep.worst_density <= r + 1;
  return rep;
}

namespace {

uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

ExpansionReport tree_nonamenability_check(RootedTree& t, int exhaustive_cap,
                                          int samples, uint64_t seed) {
  // Materialize the window first so vertex ids are stable below.
  std::vector<int> order{t.root()};
  for (size_t i = 0; i < order.size(); ++i) {
    if (t.truncated(order[i])) continue;
    for (int c : t.children(order[i])) order.push_back(c);
  }
  int n = t.size();
  std::vector<std::vector<int>> adj(n);
  for (int v = 1; v < n; ++v) {
    adj[v].push_back(t.parent(v));
    adj[t.parent(v)].push_back(v);
  }
  std::vector<int> interior;
  for (int v = 0; v < n; ++v)
    if (!t.truncated(v)) interior.push_back(v);

  ExpansionReport rep;
  auto check_set = [&](const std::vector<int>& s) {
    std::set<int> nb(s.begin(), s.end());
    for (int v : s)
      for (int w : adj[v]) nb.insert(w);
    ++rep.subsets_checked;
    if (static_cast<long long>(nb.size()) < 2LL * static_cast<long long>(s.size())) {
      rep.ok = false;
      rep.violations.push_back(s);
    }
  };
  auto connected = [&](const std::vector<int>& s) {
    if (s.empty()) return false;
    std::set<int> in(s.begin(), s.end());
    std::vector<int> stack{s[0]};
    std::set<int> seen{s[0]};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (in.count(w) && seen.insert(w).second) stack.push_back(w);
    }
    return seen.size() == in.size();
  };

  if (static_cast<int>(interior.size()) <= exhaustive_cap) {
    int k = static_cast<int>(interior.size());
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) s.push_back(interior[i]);
      if (connected(s)) check_set(s);
    }
    return rep;
  }

  // Deterministic balls around every interior vertex, then sampled growths.
  for (int v : interior)
    for (int rad = 1; rad <= 3; ++rad) {
      std::vector<int> dist(n, -1), s;
      std::vector<int> q{v};
      dist[v] = 0;
      for (size_t h = 0; h < q.size(); ++h) {
        int x = q[h];
        if (t.truncated(x)) continue;
        if (dist[x] == rad) continue;
        for (int w : adj[x])
          if (dist[w] == -1) {
            dist[w] = dist[x] + 1;
            q.push_back(w);
          }
      }
      for (int x : q)
        if (!t.truncated(x)) s.push_back(x);
      check_set(s);
    }
  uint64_t state = seed;
  for (int it = 0; it < samples; ++it) {
    state = mix64(state);
    std::vector<int> s{interior[state % interior.size()]};
    std::set<int> in(s.begin(), s.end());
    int want = 1 + static_cast<int>(mix64(state ^ 0x5bd1e995) % 23);
    while (static_cast<int>(s.size()) < want) {
      state = mix64(state);
      int v = s[state % s.size()];
      std::vector<int> cand;
      for (int w : adj[v])
        if (!in.count(w) && !t.truncated(w)) cand.push_back(w);
      if (cand.empty()) break;
      state = mix64(state);
      int w = cand[state % cand.size()];
      s.push_back(w);
      in.insert(w);
    }
    std::sort(s.begin(), s.end());
    check_set(s);
  }
  return rep;
}

}  // namespace caykit
