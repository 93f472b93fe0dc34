#include "caykit/action.hpp"

#include <algorithm>

namespace caykit {

int ActionTable::apply(int v, int gen, bool inverse) const {
  const auto& maps = inverse ? gen_inv_map : gen_map;
  if (gen < 0 || gen >= static_cast<int>(maps.size())) throw Error("bad generator");
  if (v < 0 || v >= domain_size) throw Error("vertex out of domain");
  return maps[gen][v];
}

int act_along_path(const PathSeq& p, int v, long long n) {
  auto it = std::find(p.verts.begin(), p.verts.end(), v);
  if (it == p.verts.end()) throw Error("vertex not on path");
  long long idx = (it - p.verts.begin()) + n;
  if (idx < 0 || idx >= static_cast<long long>(p.verts.size()))
    throw WindowExhausted("window exhausted");
  return p.verts[static_cast<size_t>(idx)];
}

ActionTable z_action_from_path(const PathSeq& p, int domain_size) {
  std::vector<char> seen(domain_size, 0);
  for (int v : p.verts) {
    if (v < 0 || v >= domain_size) throw Error("path vertex out of domain");
    if (seen[v]) throw Error("path is not injective");
    seen[v] = 1;
  }
  ActionTable a;
  a.acting = GroupSpec::free_abelian(1);
  a.domain_size = domain_size;
  a.gen_map.assign(1, std::vector<int>(domain_size, -1));
  a.gen_inv_map.assign(1, std::vector<int>(domain_size, -1));
  for (size_t i = 0; i + 1 < p.verts.size(); ++i) {
    a.gen_map[0][p.verts[i]] = p.verts[i + 1];
    a.gen_inv_map[0][p.verts[i + 1]] = p.verts[i];
  }
  return a;
}

ActionTable conjugate_action(const std::vector<int>& phi, const ActionTable& act) {
  int n = static_cast<int>(phi.size());
  std::vector<int> inv(act.domain_size, -1);
  for (int v = 0; v < n; ++v) {
    if (phi[v] < 0 || phi[v] >= act.domain_size || inv[phi[v]] != -1)
      throw Error("phi is not a bijection onto the action domain");
    inv[phi[v]] = v;
  }
  if (n != act.domain_size) throw Error("phi is not a bijection onto the action domain");

  ActionTable out;
  out.acting = act.acting;
  out.domain_size = n;
  out.gen_map.assign(act.gen_map.size(), std::vector<int>(n, -1));
  out.gen_inv_map.assign(act.gen_map.size(), std::vector<int>(n, -1));
  for (size_t g = 0; g < act.gen_map.size(); ++g)
    for (int v = 0; v < n; ++v) {
      int w = act.gen_map[g][phi[v]];
      if (w != -1) out.gen_map[g][v] = inv[w];
      int wi = act.gen_inv_map[g][phi[v]];
      if (wi != -1) out.gen_inv_map[g][v] = inv[wi];
    }
  return out;
}

namespace {

// Applies a generator word; -1 once the window runs out.
int apply_word(const ActionTable& act, int v, const std::vector<std::pair<int, bool>>& word) {
  int cur = v;
  for (const auto& [g, inv] : word) {
    cur = act.apply(cur, g, inv);
    if (cur == -1) return -1;
  }
  return cur;
}

}  // namespace

TranslationReport verify_translation_like(const ActionTable& act,
                                          const Multigraph& host,
                                          int word_length_cap) {
  if (host.n != act.domain_size) throw Error("host/action size mismatch");
  TranslationReport rep;

  Group acting(act.acting);
  if (static_cast<int>(act.gen_map.size()) != acting.generator_count())
    throw Error("action table does not match acting group generators");

  // Shortest generator word per acting-group element within the cap.
  struct Node {
    Element e;
    std::vector<std::pair<int, bool>> word;
  };
  std::vector<Node> elems{{acting.identity(), {}}};
  std::map<Element, int> index{{acting.identity(), 0}};
  for (size_t head = 0; head < elems.size(); ++head) {
    Node cur = elems[head];
    if (static_cast<int>(cur.word.size()) >= word_length_cap) continue;
    for (int gi = 0; gi < acting.generator_count(); ++gi)
      for (bool inv : {false, true}) {
        Element g = acting.generator(gi);
        if (inv) g = acting.inverse(g);
        Element nxt = acting.multiply(cur.e, g);
        if (index.count(nxt)) continue;
        index[nxt] = static_cast<int>(elems.size());
        Node node{nxt, cur.word};
        node.word.emplace_back(gi, inv);
        elems.push_back(std::move(node));
      }
  }

  // Distances in the host metric, one BFS per vertex.
  std::vector<std::vector<int>> dist(host.n);
  for (int v = 0; v < host.n; ++v) dist[v] = host.bfs_dist(v);

  rep.max_displacement.assign(acting.generator_count(), 0);
  for (int gi = 0; gi < acting.generator_count(); ++gi)
    for (int v = 0; v < host.n; ++v) {
      int w = act.gen_map[gi][v];
      if (w == -1) continue;
      if (dist[v][w] < 0) throw Error("action leaves the host component");
      rep.max_displacement[gi] = std::max(rep.max_displacement[gi], dist[v][w]);
      int wb = act.gen_inv_map[gi][v];
      if (wb != -1 && dist[v][wb] >= 0)
        rep.max_displacement[gi] = std::max(rep.max_displacement[gi], dist[v][wb]);
    }
  rep.lipschitz_c = 0;
  for (int d : rep.max_displacement) rep.lipschitz_c = std::max(rep.lipschitz_c, d);

  // Freeness on all nontrivial words up to the cap, where defined.
  for (const auto& node : elems) {
    if (acting.is_identity(node.e)) continue;
    for (int v = 0; v < host.n; ++v) {
      int w = apply_word(act, v, node.word);
      if (w == v) {
        rep.free_ok = false;
        rep.fixed_points.emplace_back(v, acting.to_string(node.e));
      }
    }
  }

  // Orbit maps h -> x*h: injective and C-lipschitz where defined.
  for (int v = 0; v < host.n; ++v) {
    std::map<int, Element> seen;
    for (const auto& node : elems) {
      int w = apply_word(act, v, node.word);
      if (w == -1) continue;
      auto [it, fresh] = seen.emplace(w, node.e);
      if (!fresh && it->second != node.e) rep.orbit_injective = false;
    }
    for (auto i = seen.begin(); i != seen.end(); ++i)
      for (auto j = std::next(i); j != seen.end(); ++j) {
        Element diff = acting.multiply(acting.inverse(i->second), j->second);
        long long rho = default_word_norm(acting, diff);
        if (dist[i->first][j->first] > rep.lipschitz_c * rho)
          rep.orbit_lipschitz_ok = false;
      }
  }
  return rep;
}

}  // namespace caykit
