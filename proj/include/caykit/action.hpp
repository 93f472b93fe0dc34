#pragma once

#include <optional>

#include "caykit/group.hpp"
#include "caykit/multigraph.hpp"

namespace caykit {

// A partial right action on a window: one partial bijection per acting-group
// generator, -1 where the window runs out.
struct ActionTable {
  GroupSpec acting;
  int domain_size = 0;
  std::vector<std::vector<int>> gen_map;      // per generator
  std::vector<std::vector<int>> gen_inv_map;  // inverse direction

  int apply(int v, int gen, bool inverse = false) const;  // -1 if undefined
};

// v * n = P(n + P^-1(v)) for an injective path P enumerating the window.
// Throws WindowExhausted when the index leaves the path's domain.
int act_along_path(const PathSeq& p, int v, long long n);

// The Z-action generated by one step along the path.
ActionTable z_action_from_path(const PathSeq& p, int domain_size);

// Pull an action back through a bijection phi: domain' -> domain.
ActionTable conjugate_action(const std::vector<int>& phi, const ActionTable& act);

struct TranslationReport {
  bool free_ok = true;
  std::vector<std::pair<int, std::string>> fixed_points;  // (vertex, word)
  std::vector<int> max_displacement;                      // per generator
  int lipschitz_c = 0;                                    // max over gens
  bool orbit_injective = true;
  bool orbit_lipschitz_ok = true;
};

// Checks freeness on short words, measures per-generator displacement in the
// host metric, and validates the orbit maps h -> x*h against C = max c_u.
TranslationReport verify_translation_like(const ActionTable& act,
                                          const Multigraph& host,
                                          int word_length_cap = 4);

}  // namespace caykit
