#include <doctest.h>

#include <deque>
#include <map>
#include <set>

#include "caykit/perimeter.hpp"
#include "caykit/tree_map.hpp"

using namespace caykit;

namespace {

// Test-side axiom oracle, written independently of the library checker:
// materializes the region it needs and verifies each axiom by brute force.
struct OracleVerdict {
  bool antichain = true, covering = true, d_ok = true;
  long long d_sum = 0;
  int radius = 0;
};

OracleVerdict perimeter_oracle(RootedTree& t, const Perimeter& p, int r) {
  OracleVerdict v;
  std::set<int> members;
  for (const auto& [vert, d] : p.entries) {
    members.insert(vert);
    v.d_sum += d;
    if (d < 1 || d > t.child_count(vert)) v.d_ok = false;
  }
  // antichain: collect full root paths
  for (int a : members)
    for (int b : members) {
      if (a == b) continue;
      int x = b;
      while (x != -1 && x != a) x = t.parent(x);
      if (x == a) v.antichain = false;
    }
  // covering: walk the whole materialized region under the root, breadth
  // first, expanding until every branch hits a member or exceeds depth r
  std::deque<int> q{t.root()};
  int deepest_uncovered = 0;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    if (members.count(x)) continue;
    deepest_uncovered = std::max(deepest_uncovered, t.depth(x));
    if (t.depth(x) > r) {
      v.covering = false;
      continue;
    }
    if (t.truncated(x)) {
      v.covering = false;
      continue;
    }
    for (int c : t.children(x)) q.push_back(c);
  }
  v.radius = deepest_uncovered + 1;
  return v;
}

}  // namespace

TEST_CASE("perimeter decomposition base and recursion") {
  SUBCASE("r = 3 takes the two children with shares 2 and 1") {
    RootedTree t = RootedTree::random_window(7, 2, 2, 4, 12);
    Perimeter p = perimeter_decompose(t, 3);
    REQUIRE(p.entries.size() == 2);
    CHECK(p.entries[0] == std::pair<int, int>{1, 2});
    CHECK(p.entries[1] == std::pair<int, int>{2, 1});
    CHECK(p.radius == 1);
  }
  SUBCASE("r = 4 on the binary tree stops at the children") {
    RootedTree t = RootedTree::random_window(1, 2, 2, 2, 12);
    Perimeter p = perimeter_decompose(t, 4);
    REQUIRE(p.entries.size() == 2);
    CHECK(p.entries[0] == std::pair<int, int>{1, 2});
    CHECK(p.entries[1] == std::pair<int, int>{2, 2});
  }
  SUBCASE("r = 5 on the binary tree recurses under the second child") {
    RootedTree t = RootedTree::random_window(1, 2, 2, 2, 12);
    Perimeter p = perimeter_decompose(t, 5);
    REQUIRE(p.entries.size() == 3);
    CHECK(p.entries[0] == std::pair<int, int>{1, 2});
    CHECK(p.entries[1] == std::pair<int, int>{5, 2});
    CHECK(p.entries[2] == std::pair<int, int>{6, 1});
    CHECK(p.radius == 2);
    auto verdict = perimeter_oracle(t, p, 5);
    CHECK(verdict.covering);
    CHECK(verdict.d_sum == 5);
  }
  SUBCASE("axioms hold on seeded windows across budgets") {
    for (uint64_t seed = 1; seed <= 40; ++seed)
      for (int r = 3; r <= 10; ++r) {
        int root_deg = 2 + static_cast<int>(seed % (r - 2 ? r - 2 : 1));
        if (root_deg > r - 1) root_deg = r - 1;
        RootedTree t = RootedTree::random_window(seed, root_deg, 2, 5, 40);
        Perimeter p = perimeter_decompose(t, r);
        auto verdict = perimeter_oracle(t, p, r);
        CHECK(verdict.antichain);
        CHECK(verdict.covering);
        CHECK(verdict.d_ok);
        CHECK(verdict.d_sum == r);
        CHECK(verdict.radius <= r);
        CHECK(p.radius == verdict.radius);
        // the library checker agrees with the oracle
        PerimeterCheck chk = verify_perimeter(t, t.root(), p.entries);
        CHECK(chk.ok());
        CHECK(chk.radius == verdict.radius);
      }
  }
  SUBCASE("root degree outside [2, r-1] is rejected") {
    RootedTree t5 = RootedTree::regular(5, 10);  // root has 5 children
    CHECK_THROWS_AS(perimeter_decompose(t5, 4), Error);
    RootedTree t3 = RootedTree::random_window(1, 3, 2, 2, 10);
    CHECK_THROWS_AS(perimeter_decompose(t3, 3), Error);  // needs degree 2
  }
  SUBCASE("shallow windows fail loudly") {
    RootedTree t = RootedTree::regular(3, 2);
    CHECK_THROWS_AS(perimeter_decompose(t, 9), WindowExhausted);
  }
}

TEST_CASE("tree map construction") {
  SUBCASE("level-1 fibers absorb all r+1 children") {
    RootedTree source = RootedTree::regular(6, 2);
    RootedTree target = RootedTree::random_window(3, 3, 2, 4, 20);
    TreeMap fm = build_tree_map(source, target, 1);
    int mapped = 0;
    for (int v : source.children(source.root())) {
      CHECK(fm.f[v] != -1);
      ++mapped;
    }
    CHECK(mapped == 6);
    ClauseReport rep = verify_tree_map_clauses(source, target, fm);
    CHECK(rep.all());
  }
  SUBCASE("depth 4 onto the 3-regular tree: all eight clauses") {
    RootedTree source = RootedTree::regular(6, 5);
    RootedTree target = RootedTree::random_window(1, 3, 2, 2, 40);
    TreeMap fm = build_tree_map(source, target, 4);
    ClauseReport rep = verify_tree_map_clauses(source, target, fm);
    for (const auto& note : rep.notes) INFO(note);
    CHECK(rep.all());
    // fibers on a 3-regular target never exceed deg - 1 = 2
    std::map<int, int> fiber;
    for (int v = 0; v < static_cast<int>(fm.f.size()); ++v)
      if (fm.f[v] != -1) fiber[fm.f[v]]++;
    for (const auto& [y, c] : fiber) CHECK(c <= 2);
  }
  SUBCASE("quasi-isometry bounds at depth 4") {
    RootedTree source = RootedTree::regular(6, 5);
    RootedTree target = RootedTree::random_window(9, 4, 2, 4, 40);
    TreeMap fm = build_tree_map(source, target, 4);
    QiReport qi = verify_quasi_isometry(source, target, fm);
    CHECK(qi.upper_ok);   // rho <= 6 d
    CHECK(qi.lower_ok);   // d - 7 <= rho
    CHECK(qi.density_ok);
    CHECK(qi.worst_density <= 6);
    CHECK(qi.pairs_checked > 0);

    // independent density oracle: BFS over the materialized target
    std::vector<std::vector<int>> adj(target.size());
    for (int v = 1; v < target.size(); ++v) {
      adj[v].push_back(target.parent(v));
      adj[target.parent(v)].push_back(v);
    }
    std::vector<int> dist(target.size(), -1);
    std::deque<int> q;
    for (int v = 0; v < static_cast<int>(fm.f.size()); ++v)
      if (fm.f[v] != -1 && dist[fm.f[v]] == -1) {
        dist[fm.f[v]] = 0;
        q.push_back(fm.f[v]);
      }
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : adj[x])
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          q.push_back(y);
        }
    }
    std::vector<char> interior(target.size(), 0);
    for (int v = 0; v < static_cast<int>(fm.f.size()); ++v)
      if (fm.f[v] != -1)
        for (int y = fm.f[v]; y != -1 && !interior[y]; y = target.parent(y))
          interior[y] = 1;
    int worst = 0;
    for (int y = 0; y < target.size(); ++y)
      if (interior[y]) worst = std::max(worst, dist[y]);
    CHECK(worst == qi.worst_density);
  }
  SUBCASE("trivial pair bound") {
    RootedTree source = RootedTree::regular(5, 3);
    RootedTree target = RootedTree::random_window(2, 3, 2, 3, 30);
    TreeMap fm = build_tree_map(source, target, 2);
    QiReport qi = verify_quasi_isometry(source, target, fm);
    CHECK(qi.upper_ok);
    CHECK(qi.lower_ok);
  }
  SUBCASE("target degrees outside [3, r] are rejected") {
    RootedTree source = RootedTree::regular(4, 4);  // r = 3
    RootedTree target = RootedTree::random_window(5, 4, 2, 4, 20);  // root degree 4 > r
    CHECK_THROWS_AS(build_tree_map(source, target, 2), Error);
  }
}

TEST_CASE("the verifiers flag corrupted inputs") {
  SUBCASE("perimeter checker") {
    RootedTree t = RootedTree::random_window(1, 2, 2, 2, 12);
    Perimeter p = perimeter_decompose(t, 5);
    // comparable pair: add an ancestor of an existing entry
    auto bad = p.entries;
    bad.emplace_back(t.parent(bad[1].first), 1);
    PerimeterCheck chk = verify_perimeter(t, t.root(), bad);
    CHECK_FALSE(chk.antichain);
    // drop an entry: the uncovered branch below it is found
    auto missing = p.entries;
    missing.erase(missing.begin());
    chk = verify_perimeter(t, t.root(), missing);
    CHECK_FALSE(chk.covering);
    // inflated multiplicity
    auto heavy = p.entries;
    heavy[0].second = 99;
    chk = verify_perimeter(t, t.root(), heavy);
    CHECK_FALSE(chk.d_bounds);
    // the root alone is not a perimeter
    chk = verify_perimeter(t, t.root(), {{t.root(), 1}});
    CHECK_FALSE(chk.not_root_only);
  }
  SUBCASE("clause certificates") {
    RootedTree source = RootedTree::regular(6, 3);
    RootedTree target = RootedTree::random_window(4, 3, 2, 4, 30);
    TreeMap fm = build_tree_map(source, target, 2);
    REQUIRE(verify_tree_map_clauses(source, target, fm).all());

    TreeMap broken = fm;
    broken.f[source.root()] = target.children(target.root())[0];
    CHECK_FALSE(verify_tree_map_clauses(source, target, broken).root_fixed);

    // remap one level-2 vertex onto the root's image: order monotonicity and
    // the level structure both break
    broken = fm;
    int deep = -1;
    for (int v = 0; v < static_cast<int>(fm.f.size()); ++v)
      if (fm.f[v] != -1 && source.depth(v) == 2) deep = v;
    REQUIRE(deep != -1);
    broken.f[deep] = target.root();
    ClauseReport rep = verify_tree_map_clauses(source, target, broken);
    CHECK_FALSE(rep.all());

    // collapsing two far vertices violates the additive lower bound: the
    // slack is r + 2 = 7, so the pair must sit at distance 8
    RootedTree deep_source = RootedTree::regular(6, 5);
    RootedTree deep_target = RootedTree::random_window(4, 3, 2, 4, 60);
    TreeMap collapse = build_tree_map(deep_source, deep_target, 4);
    int first_leaf = -1, last_leaf = -1;
    for (int v = 0; v < static_cast<int>(collapse.f.size()); ++v)
      if (collapse.f[v] != -1 && deep_source.depth(v) == 4) {
        if (first_leaf == -1) first_leaf = v;
        last_leaf = v;
      }
    REQUIRE(deep_source.distance(first_leaf, last_leaf) == 8);
    collapse.f[last_leaf] = collapse.f[first_leaf];
    QiReport qi = verify_quasi_isometry(deep_source, deep_target, collapse);
    CHECK_FALSE(qi.lower_ok);
  }
}

TEST_CASE("tree expansion check") {
  SUBCASE("3-regular windows expand") {
    RootedTree t = RootedTree::regular(3, 3);
    ExpansionReport rep = tree_nonamenability_check(t);
    CHECK(rep.ok);
    CHECK(rep.subsets_checked > 0);
  }
  SUBCASE("deeper window with sampling") {
    RootedTree t = RootedTree::regular(3, 6);
    ExpansionReport rep = tree_nonamenability_check(t, 12, 500, 11);
    CHECK(rep.ok);
  }
  SUBCASE("a path fails") {
    RootedTree t = RootedTree::random_window(1, 1, 1, 1, 8);
    ExpansionReport rep = tree_nonamenability_check(t);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.violations.empty());
  }
}
