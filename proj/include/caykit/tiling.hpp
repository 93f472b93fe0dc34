#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "caykit/group.hpp"

namespace caykit {

using ElementSet = std::vector<Element>;  // sorted, unique

ElementSet make_set(std::vector<Element> v);

// A finite piece of the group with an interior on which exactness is judged;
// translates may overflow into the collar.
struct Window {
  const Group* group = nullptr;
  std::vector<Element> elements;  // sorted
  std::vector<char> interior;

  int index_of(const Element& e) const;
  int size() const { return static_cast<int>(elements.size()); }

  static Window from_ball(const Group& g, const Ball& b);
  // Axis box for Z^d with an interior shrunk by `margin` on every side.
  static Window box(const Group& zd,
                    const std::vector<std::pair<long long, long long>>& ranges,
                    int margin);
};

struct Polytile {
  std::vector<ElementSet> tiles;
  void validate(const Group& g) const;  // identity in every tile
};

bool is_fair(const Polytile& p);

struct Polytiling {
  std::vector<ElementSet> deltas;  // aligned with tiles
  Polytile tiles;
};

struct CoverageCert {
  bool ok = true;
  std::vector<int> counts;               // per window element
  std::vector<Element> uncovered;        // interior misses
  std::vector<Element> doubly_covered;   // interior hits > 1
};

// Every interior element must be hit exactly once by the translates.
CoverageCert verify_polytiling(const Group& g, const Polytiling& p, const Window& w);

// T^j = [0, sizes[j]), Delta^j = the multiples of sizes[j] whose translate
// stays inside the window. Rejects a non-divisible size chain.
std::vector<Polytiling> interval_monotilings_Z(const Group& z,
                                               const std::vector<long long>& sizes,
                                               const Window& w);

struct Bijection {
  std::map<Element, Element> fwd;
  std::map<Element, Element> inv;

  void insert(const Element& a, const Element& b);
  std::optional<Element> apply(const Element& a) const;
  std::optional<Element> apply_inv(const Element& b) const;
};

struct PushforwardResult {
  Polytiling tiling;
  int shape_classes = 0;
  long long dropped_deltas = 0;  // translates that left the window
  long long max_tile_norm = 0;   // max word norm over the source tile
};

// Transports a source monotiling through phi: shape classes are the sets
// phi(delta)^-1 phi(delta T), indexed by first occurrence along increasing
// phi(delta), with the class of the source identity forced first. When
// lipschitz_c > 0 the shape-class count is checked against the ball bound.
PushforwardResult pushforward_polytiling(const Group& src, const Group& dst,
                                         const Bijection& phi, const Polytiling& mono,
                                         const Window& dst_window,
                                         int lipschitz_c = 0);

struct CccReport {
  bool centered = true;
  bool cofinal = true;   // nesting of the first tiles
  bool coherent = true;  // each partition refines the next on the interior
  long long tile_union_size = 0;  // diagnostic: |union of first tiles|
  std::vector<std::string> witnesses;

  bool all() const { return centered && cofinal && coherent; }
};

CccReport ccc_check(const Group& g, const std::vector<Polytiling>& seq,
                    const Window& w);

// Replaces each Delta_i by D Delta_i after checking D is a transversal of the
// subgroup window: no two representatives in one coset, every window element
// reached. Tiles are unchanged.
Polytiling coset_extend(const Group& g, const Polytiling& p, const ElementSet& reps,
                        const ElementSet& subgroup_window, const Window& w);

enum class CoverMode { find, count };

struct CoverResult {
  bool satisfiable = false;
  long long count = 0;
  std::vector<std::pair<int, Element>> placements;  // (tile index, delta)
};

// Exact cover over placements delta T_i inside the window that touch the
// interior: interior cells exactly once, collar cells at most once. Optional
// restriction limits the deltas per tile (the cross-check against
// verify_polytiling).
CoverResult tile_search_exact_cover(const Group& g, const Window& w,
                                    const Polytile& tiles, CoverMode mode,
                                    const std::vector<ElementSet>* restrict_deltas = nullptr,
                                    long long count_cap = 1'000'000);

struct SizedTileResult {
  Polytile tile;
  Polytiling tiling;
  Window window;
  std::string route;
  std::shared_ptr<Group> group;  // keeps window.group alive
};

// Fair polytile with F inside the first tile and |T_1| = n, realized on a
// window: interval route for one- or two-ended families, connected subtrees
// with searched deltas for free groups, exact arithmetic for finite cyclic
// groups, and the Z-factor coset route for Z*Z_3.
SizedTileResult sized_fair_polytile(const GroupSpec& spec, const std::vector<std::string>& f_words,
                                    long long n, int window_radius = 0);

bool super_poly_mt_check(const Group& g, const Polytile& p, const ElementSet& f);

struct SuperCccReport {
  bool nested = true;    // intersections increase
  bool exhausts = true;  // union of intersections covers the interior
};

SuperCccReport super_poly_ccc_check(const Group& g,
                                    const std::vector<Polytiling>& seq,
                                    const Window& w);

// Serpentine order over a full box window of Z^2; step length 1, starts at
// the box corner that is the window's smallest element.
std::vector<Element> boustrophedon_order(const Group& z2, const Window& box);

}  // namespace caykit
