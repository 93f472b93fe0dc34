#include "caykit/tiling.hpp"

#include <algorithm>
#include <sstream>

#include "caykit/cayley.hpp"
#include "caykit/exact_cover.hpp"
#include "caykit/hamilton.hpp"

namespace caykit {

ElementSet make_set(std::vector<Element> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

int Window::index_of(const Element& e) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), e);
  if (it == elements.end() || *it != e) return -1;
  return static_cast<int>(it - elements.begin());
}

Window Window::from_ball(const Group& g, const Ball& b) {
  Window w;
  w.group = &g;
  w.elements = b.elements;
  w.interior.resize(b.size());
  for (int i = 0; i < b.size(); ++i) w.interior[i] = b.is_interior(i) ? 1 : 0;
  return w;
}

Window Window::box(const Group& zd,
                   const std::vector<std::pair<long long, long long>>& ranges,
                   int margin) {
  if (zd.spec().family != Family::FreeAbelian ||
      static_cast<int>(ranges.size()) != zd.spec().param)
    throw Error("box windows exist for Z^d only");
  Window w;
  w.group = &zd;
  std::vector<long long> point;
  for (const auto& [lo, hi] : ranges) {
    if (lo > hi) throw Error("empty box range");
    point.push_back(lo);
  }
  while (true) {
    w.elements.push_back(Element{point});
    int i = static_cast<int>(point.size()) - 1;
    while (i >= 0 && point[i] == ranges[i].second) {
      point[i] = ranges[i].first;
      --i;
    }
    if (i < 0) break;
    ++point[i];
  }
  std::sort(w.elements.begin(), w.elements.end());
  w.interior.resize(w.elements.size());
  for (size_t i = 0; i < w.elements.size(); ++i) {
    bool in = true;
    for (size_t d = 0; d < ranges.size(); ++d) {
      long long x = w.elements[i].data[d];
      in = in && x >= ranges[d].first + margin && x <= ranges[d].second - margin;
    }
    w.interior[i] = in ? 1 : 0;
  }
  return w;
}

void Polytile::validate(const Group& g) const {
  if (tiles.empty()) throw Error("empty polytile");
  Element id = g.identity();
  for (const auto& t : tiles) {
    if (t.empty()) throw Error("empty tile");
    if (!std::binary_search(t.begin(), t.end(), id))
      throw Error("tile does not contain the identity");
  }
}

bool is_fair(const Polytile& p) {
  for (const auto& t : p.tiles)
    if (t.size() != p.tiles[0].size()) return false;
  return true;
}

CoverageCert verify_polytiling(const Group& g, const Polytiling& p, const Window& w) {
  p.tiles.validate(g);
  if (p.deltas.size() != p.tiles.tiles.size())
    throw Error("delta/tile arity mismatch");
  CoverageCert cert;
  cert.counts.assign(w.size(), 0);
  for (size_t i = 0; i < p.deltas.size(); ++i)
    for (const auto& d : p.deltas[i])
      for (const auto& t : p.tiles.tiles[i]) {
        int idx = w.index_of(g.multiply(d, t));
        if (idx >= 0) ++cert.counts[idx];
      }
  for (int i = 0; i < w.size(); ++i) {
    if (!w.interior[i]) continue;
    if (cert.counts[i] == 0) cert.uncovered.push_back(w.elements[i]);
    if (cert.counts[i] > 1) cert.doubly_covered.push_back(w.elements[i]);
  }
  cert.ok = cert.uncovered.empty() && cert.doubly_covered.empty();
  return cert;
}

std::vector<Polytiling> interval_monotilings_Z(const Group& z,
                                               const std::vector<long long>& sizes,
                                               const Window& w) {
  if (z.spec().family != Family::FreeAbelian || z.spec().param != 1)
    throw Error("interval monotilings live on Z");
  for (size_t j = 0; j + 1 < sizes.size(); ++j)
    if (sizes[j] <= 0 || sizes[j + 1] % sizes[j] != 0)
      throw Error("sizes must each divide the next");
  if (w.size() == 0) throw Error("empty window");
  long long lo = w.elements.front().data[0];
  long long hi = w.elements.back().data[0];

  std::vector<Polytiling> seq;
  for (long long n : sizes) {
    Polytiling p;
    ElementSet tile;
    for (long long t = 0; t < n; ++t) tile.push_back(Element{{t}});
    ElementSet delta;
    for (long long m = lo / n - 2; m * n <= hi; ++m) {
      if (m * n < lo || m * n + n - 1 > hi) continue;
      delta.push_back(Element{{m * n}});
    }
    p.tiles.tiles.push_back(std::move(tile));
    p.deltas.push_back(make_set(std::move(delta)));
    seq.push_back(std::move(p));
  }
  return seq;
}

void Bijection::insert(const Element& a, const Element& b) {
  if (fwd.count(a) || inv.count(b)) throw Error("bijection pair collides");
  fwd[a] = b;
  inv[b] = a;
}

std::optional<Element> Bijection::apply(const Element& a) const {
  auto it = fwd.find(a);
  if (it == fwd.end()) return std::nullopt;
  return it->second;
}

std::optional<Element> Bijection::apply_inv(const Element& b) const {
  auto it = inv.find(b);
  if (it == inv.end()) return std::nullopt;
  return it->second;
}

PushforwardResult pushforward_polytiling(const Group& src, const Group& dst,
                                         const Bijection& phi, const Polytiling& mono,
                                         const Window& dst_window, int lipschitz_c) {
  if (mono.tiles.tiles.size() != 1) throw Error("pushforward expects a monotiling");
  mono.tiles.validate(src);
  const ElementSet& t = mono.tiles.tiles[0];

  PushforwardResult out;
  for (const auto& x : t)
    out.max_tile_norm = std::max(out.max_tile_norm, default_word_norm(src, x));

  // Image deltas sorted by phi(delta); the source identity's class leads.
  std::vector<std::pair<Element, Element>> images;  // (phi(delta), delta)
  for (const auto& d : mono.deltas[0]) {
    auto pd = phi.apply(d);
    if (!pd) {
      ++out.dropped_deltas;
      continue;
    }
    images.emplace_back(*pd, d);
  }
  std::sort(images.begin(), images.end());
  std::stable_partition(images.begin(), images.end(),
                        [&](const auto& pr) { return src.is_identity(pr.second); });

  std::map<ElementSet, int> class_of;
  std::vector<ElementSet> classes;
  std::vector<ElementSet> deltas;
  for (const auto& [pd, d] : images) {
    ElementSet shape;
    bool complete = true;
    Element pd_inv = dst.inverse(pd);
    for (const auto& x : t) {
      auto img = phi.apply(src.multiply(d, x));
      if (!img) {
        complete = false;
        break;
      }
      shape.push_back(dst.multiply(pd_inv, *img));
    }
    if (!complete) {
      ++out.dropped_deltas;
      continue;
    }
    shape = make_set(std::move(shape));
    if (shape.size() != t.size()) throw Error("pushforward image not injective");
    auto [it, fresh] = class_of.emplace(shape, static_cast<int>(classes.size()));
    if (fresh) {
      classes.push_back(shape);
      deltas.emplace_back();
    }
    deltas[it->second].push_back(pd);
  }
  if (classes.empty()) throw Error("no translate fits the window");

  out.shape_classes = static_cast<int>(classes.size());
  if (lipschitz_c > 0) {
    // Finitely many shapes: all lie in the ball of radius c * max |t|.
    GeneratingSet s = dst.default_generators();
    Ball bound = enumerate_ball(
        dst, s, static_cast<int>(lipschitz_c * out.max_tile_norm));
    if (out.shape_classes > bound.size())
      throw Error("shape class count exceeds the lipschitz ball bound");
  }
  for (size_t i = 0; i < classes.size(); ++i) {
    out.tiling.tiles.tiles.push_back(classes[i]);
    out.tiling.deltas.push_back(make_set(std::move(deltas[i])));
  }
  out.tiling.tiles.validate(dst);
  if (!is_fair(out.tiling.tiles)) throw Error("pushforward produced unfair tiles");
  (void)dst_window;
  return out;
}

namespace {

// Class id of each covered window element, -1 where uncovered or ambiguous.
std::vector<int> partition_classes(const Group& g, const Polytiling& p,
                                   const Window& w, int* next_id,
                                   std::map<std::string, int>* ids) {
  std::vector<int> cls(w.size(), -1);
  for (size_t i = 0; i < p.deltas.size(); ++i)
    for (const auto& d : p.deltas[i]) {
      std::ostringstream key;
      key << i << '|' << g.to_string(d);
      int id = -1;
      for (const auto& t : p.tiles.tiles[i]) {
        int idx = w.index_of(g.multiply(d, t));
        if (idx < 0) continue;
        if (id == -1) {
          auto [it, fresh] = ids->emplace(key.str(), *next_id);
          if (fresh) ++*next_id;
          id = it->second;
        }
        cls[idx] = cls[idx] == -1 ? id : -2;  // -2 marks double cover
      }
    }
  return cls;
}

}  // namespace

CccReport ccc_check(const Group& g, const std::vector<Polytiling>& seq,
                    const Window& w) {
  CccReport rep;
  Element id = g.identity();
  ElementSet tile_union;
  for (size_t n = 0; n < seq.size(); ++n) {
    const auto& p = seq[n];
    if (p.deltas.empty() ||
        !std::binary_search(p.deltas[0].begin(), p.deltas[0].end(), id)) {
      rep.centered = false;
      rep.witnesses.push_back("level " + std::to_string(n) +
                              ": identity not in the first delta set");
    }
    const auto& t1 = p.tiles.tiles[0];
    tile_union.insert(tile_union.end(), t1.begin(), t1.end());
    if (n + 1 < seq.size()) {
      const auto& t2 = seq[n + 1].tiles.tiles[0];
      if (!std::includes(t2.begin(), t2.end(), t1.begin(), t1.end())) {
        rep.cofinal = false;
        rep.witnesses.push_back("level " + std::to_string(n) +
                                ": first tile not contained in the next");
      }
    }
  }
  tile_union = make_set(std::move(tile_union));
  rep.tile_union_size = static_cast<long long>(tile_union.size());

  // Refinement, block by block on the interior.
  int next_id = 0;
  std::map<std::string, int> ids;
  std::vector<std::vector<int>> cls;
  for (const auto& p : seq) cls.push_back(partition_classes(g, p, w, &next_id, &ids));
  for (size_t n = 0; n + 1 < seq.size(); ++n) {
    std::map<int, int> image;  // class at level n -> class at level n+1
    for (int i = 0; i < w.size(); ++i) {
      if (!w.interior[i]) continue;
      int a = cls[n][i], b = cls[n + 1][i];
      if (a < 0 || b < 0) continue;
      auto [it, fresh] = image.emplace(a, b);
      if (!fresh && it->second != b) {
        rep.coherent = false;
        rep.witnesses.push_back(
            "level " + std::to_string(n) + ": block split across classes at " +
            g.to_string(w.elements[i]));
      }
    }
  }
  return rep;
}

Polytiling coset_extend(const Group& g, const Polytiling& p, const ElementSet& reps,
                        const ElementSet& subgroup_window, const Window& w) {
  if (reps.empty()) throw Error("empty transversal");
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = i + 1; j < reps.size(); ++j) {
      Element q = g.multiply(g.inverse(reps[i]), reps[j]);
      if (std::binary_search(subgroup_window.begin(), subgroup_window.end(), q))
        throw Error("transversal pair " + g.to_string(reps[i]) + ", " +
                    g.to_string(reps[j]) + " shares a coset");
    }
  for (int i = 0; i < w.size(); ++i) {
    if (!w.interior[i]) continue;
    bool reached = false;
    for (const auto& d : reps) {
      Element q = g.multiply(g.inverse(d), w.elements[i]);
      if (std::binary_search(subgroup_window.begin(), subgroup_window.end(), q)) {
        reached = true;
        break;
      }
    }
    if (!reached)
      throw Error("transversal misses " + g.to_string(w.elements[i]));
  }

  Polytiling out;
  out.tiles = p.tiles;
  for (const auto& delta : p.deltas) {
    ElementSet scaled;
    for (const auto& d : reps)
      for (const auto& x : delta) scaled.push_back(g.multiply(d, x));
    out.deltas.push_back(make_set(std::move(scaled)));
  }
  return out;
}

CoverResult tile_search_exact_cover(const Group& g, const Window& w,
                                    const Polytile& tiles, CoverMode mode,
                                    const std::vector<ElementSet>* restrict_deltas,
                                    long long count_cap) {
  tiles.validate(g);
  if (restrict_deltas && restrict_deltas->size() != tiles.tiles.size())
    throw Error("restriction arity mismatch");

  // Columns: interior cells first (primary), collar cells after (secondary).
  std::vector<int> col_of(w.size(), -1);
  int primary = 0;
  for (int i = 0; i < w.size(); ++i)
    if (w.interior[i]) col_of[i] = primary++;
  int secondary = 0;
  for (int i = 0; i < w.size(); ++i)
    if (!w.interior[i]) col_of[i] = primary + secondary++;

  ExactCover dlx(primary, secondary);
  std::vector<std::pair<int, Element>> row_info;
  for (size_t i = 0; i < tiles.tiles.size(); ++i) {
    const ElementSet& deltas = restrict_deltas ? (*restrict_deltas)[i] : w.elements;
    for (const auto& d : deltas) {
      std::vector<int> cols;
      bool inside = true, touches = false;
      for (const auto& t : tiles.tiles[i]) {
        int idx = w.index_of(g.multiply(d, t));
        if (idx < 0) {
          inside = false;
          break;
        }
        touches = touches || w.interior[idx];
        cols.push_back(col_of[idx]);
      }
      if (!inside || !touches) continue;
      dlx.add_row(cols);
      row_info.emplace_back(static_cast<int>(i), d);
    }
  }

  CoverResult res;
  if (mode == CoverMode::find) {
    auto sol = dlx.find();
    res.satisfiable = sol.has_value();
    res.count = res.satisfiable ? 1 : 0;
    if (sol)
      for (int r : *sol) res.placements.push_back(row_info[r]);
    std::sort(res.placements.begin(), res.placements.end());
  } else {
    res.count = dlx.count(count_cap);
    res.satisfiable = res.count > 0;
  }
  return res;
}

bool super_poly_mt_check(const Group& g, const Polytile& p, const ElementSet& f) {
  p.validate(g);
  ElementSet meet = p.tiles[0];
  for (const auto& t : p.tiles) {
    ElementSet next;
    std::set_intersection(meet.begin(), meet.end(), t.begin(), t.end(),
                          std::back_inserter(next));
    meet = std::move(next);
  }
  return std::includes(meet.begin(), meet.end(), f.begin(), f.end());
}

SuperCccReport super_poly_ccc_check(const Group& g,
                                    const std::vector<Polytiling>& seq,
                                    const Window& w) {
  SuperCccReport rep;
  std::vector<ElementSet> meets;
  for (const auto& p : seq) {
    ElementSet meet = p.tiles.tiles[0];
    for (const auto& t : p.tiles.tiles) {
      ElementSet next;
      std::set_intersection(meet.begin(), meet.end(), t.begin(), t.end(),
                            std::back_inserter(next));
      meet = std::move(next);
    }
    meets.push_back(std::move(meet));
  }
  ElementSet all;
  for (size_t n = 0; n < meets.size(); ++n) {
    if (n + 1 < meets.size() &&
        !std::includes(meets[n + 1].begin(), meets[n + 1].end(), meets[n].begin(),
                       meets[n].end()))
      rep.nested = false;
    all.insert(all.end(), meets[n].begin(), meets[n].end());
  }
  all = make_set(std::move(all));
  for (int i = 0; i < w.size(); ++i)
    if (w.interior[i] &&
        !std::binary_search(all.begin(), all.end(), w.elements[i]))
      rep.exhausts = false;
  (void)g;
  return rep;
}

std::vector<Element> boustrophedon_order(const Group& z2, const Window& box) {
  if (z2.spec().family != Family::FreeAbelian || z2.spec().param != 2)
    throw Error("boustrophedon order lives on Z^2");
  long long xlo = box.elements.front().data[0], xhi = xlo;
  long long ylo = box.elements.front().data[1], yhi = ylo;
  for (const auto& e : box.elements) {
    xlo = std::min(xlo, e.data[0]);
    xhi = std::max(xhi, e.data[0]);
    ylo = std::min(ylo, e.data[1]);
    yhi = std::max(yhi, e.data[1]);
  }
  if (static_cast<long long>(box.elements.size()) !=
      (xhi - xlo + 1) * (yhi - ylo + 1))
    throw Error("window is not a full box");
  std::vector<Element> order;
  for (long long y = ylo; y <= yhi; ++y) {
    bool flip = (y - ylo) % 2 != 0;
    for (long long i = 0; i <= xhi - xlo; ++i) {
      long long x = flip ? xhi - i : xlo + i;
      order.push_back(Element{{x, y}});
    }
  }
  return order;
}

namespace {

// Two-row bands, zigzagged with steps of length at most 2; the first four
// entries are (0,0), (1,1), (0,1), (1,0), so the diagonal pair sits in every
// prefix of size two or more.
std::vector<Element> band_zigzag_order(long long w, long long h) {
  std::vector<Element> order;
  auto push = [&order](long long x, long long y) {
    order.push_back(Element{{x, y}});
  };
  long long y = 0;
  bool rightward = true;
  for (; y + 1 < h; y += 2) {
    if (rightward) {
      push(0, y);
      push(1, y + 1);
      push(0, y + 1);
      push(1, y);
      for (long long x = 2; x < w; ++x) {
        if (x % 2 == 0) {
          push(x, y);
          push(x, y + 1);
        } else {
          push(x, y + 1);
          push(x, y);
        }
      }
    } else {
      for (long long x = w - 1; x >= 0; --x) {
        if ((w - 1 - x) % 2 == 0) {
          push(x, y);
          push(x, y + 1);
        } else {
          push(x, y + 1);
          push(x, y);
        }
      }
    }
    rightward = !rightward;
  }
  if (y < h) {
    if (rightward)
      for (long long x = 0; x < w; ++x) push(x, y);
    else
      for (long long x = w - 1; x >= 0; --x) push(x, y);
  }
  return order;
}

SizedTileResult sized_via_path_order(std::shared_ptr<Group> gptr,
                                     const std::vector<Element>& f, long long n,
                                     int radius) {
  const Group& g = *gptr;
  GeneratingSet s = g.default_generators();
  Ball ball;
  Group z(GroupSpec::free_abelian(1));
  Bijection phi;
  int id_pos = -1, len = 0;

  bool z1 = g.spec().family == Family::FreeAbelian && g.spec().param == 1;
  bool z2 = g.spec().family == Family::FreeAbelian && g.spec().param == 2;
  if (z1) {
    // The line orders itself.
    ball = enumerate_ball(g, s, radius);
    len = ball.size();
    for (int i = 0; i < len; ++i)
      if (g.is_identity(ball.elements[i])) id_pos = i;
    for (int i = 0; i < len; ++i)
      phi.insert(Element{{static_cast<long long>(i - id_pos)}}, ball.elements[i]);
  } else if (z2) {
    // Square band window fronted by the diagonal pair at the origin.
    long long side = std::max<long long>(4, radius);
    auto order = band_zigzag_order(side, side);
    ball.center = g.identity();
    ball.radius = static_cast<int>(2 * side);
    ball.interior_radius = ball.radius;
    std::vector<std::pair<Element, int>> elems;
    for (const auto& e : order)
      elems.emplace_back(e, static_cast<int>(std::llabs(e.data[0]) +
                                             std::llabs(e.data[1])));
    std::sort(elems.begin(), elems.end());
    for (auto& [e, d] : elems) {
      ball.elements.push_back(e);
      ball.distance.push_back(d);
    }
    len = static_cast<int>(order.size());
    for (int i = 0; i < len; ++i) {
      if (g.is_identity(order[i])) id_pos = i;
    }
    for (int i = 0; i < len; ++i)
      phi.insert(Element{{static_cast<long long>(i - id_pos)}}, order[i]);
  } else {
    Multigraph window = cayley_ball_graph(g, s, radius, 0, &ball);
    HamiltonResult ham = hamiltonian_in_power(window);
    int id_vertex = ball.index_of(g.identity());
    for (size_t i = 0; i < ham.order.verts.size(); ++i)
      if (ham.order.verts[i] == id_vertex) id_pos = static_cast<int>(i);
    len = static_cast<int>(ham.order.verts.size());
    for (int i = 0; i < len; ++i)
      phi.insert(Element{{static_cast<long long>(i - id_pos)}},
                 ball.elements[ham.order.verts[i]]);
  }

  long long lo = 0, hi = 0;
  for (const auto& x : f) {
    auto src = phi.apply_inv(x);
    if (!src)
      throw Error("window too small to reach " + g.to_string(x) +
                  "; enlarge the radius");
    lo = std::min(lo, src->data[0]);
    hi = std::max(hi, src->data[0]);
  }
  long long span = hi - lo + 1;
  if (n < span)
    throw Error("size below the least admissible n0 = " + std::to_string(span));

  ElementSet tile;
  for (long long t = lo; t < lo + n; ++t) tile.push_back(Element{{t}});
  ElementSet delta;
  long long src_lo = -id_pos, src_hi = len - 1 - id_pos;
  for (long long m = src_lo / n - 2; m * n + lo <= src_hi; ++m) {
    if (m * n + lo < src_lo || m * n + lo + n - 1 > src_hi) continue;
    delta.push_back(Element{{m * n}});
  }
  Polytiling mono;
  mono.tiles.tiles.push_back(tile);
  mono.deltas.push_back(make_set(std::move(delta)));

  Window dst = Window::from_ball(g, ball);
  PushforwardResult push = pushforward_polytiling(z, g, phi, mono, dst);

  // Interior: elements inside a completed tile, away from the outer shell.
  std::fill(dst.interior.begin(), dst.interior.end(), 0);
  for (const auto& d : mono.deltas[0])
    for (const auto& t : mono.tiles.tiles[0]) {
      auto img = phi.apply(z.multiply(d, t));
      if (!img) continue;
      int idx = dst.index_of(*img);
      if (idx >= 0 && ball.distance[idx] <= radius - 1) dst.interior[idx] = 1;
    }

  SizedTileResult out;
  out.group = std::move(gptr);
  out.tile = push.tiling.tiles;
  out.tiling = std::move(push.tiling);
  out.window = std::move(dst);
  out.window.group = out.group.get();
  out.route = "hamiltonian-interval";
  return out;
}

SizedTileResult sized_free_subtree(std::shared_ptr<Group> gptr,
                                   const std::vector<Element>& f, long long n,
                                   int radius) {
  const Group& g = *gptr;
  // Hull: all prefixes of the required words, then grow to size n by the
  // smallest adjacent elements.
  ElementSet tile{g.identity()};
  for (const auto& x : f) {
    Element prefix = g.identity();
    for (size_t i = 0; i + 1 < x.data.size(); i += 2) {
      long long gen = x.data[i], exp = x.data[i + 1];
      long long step = exp > 0 ? 1 : -1;
      for (long long k = 0; k != exp; k += step) {
        Element letter{{gen, step}};
        prefix = g.multiply(prefix, letter);
        tile.push_back(prefix);
      }
    }
  }
  tile = make_set(std::move(tile));
  if (static_cast<long long>(tile.size()) > n)
    throw Error("size below the least admissible n0 = " +
                std::to_string(tile.size()));
  GeneratingSet s = g.default_generators();
  auto sym = s.symmetric_closure(g);
  while (static_cast<long long>(tile.size()) < n) {
    Element best;
    bool have = false;
    for (const auto& x : tile)
      for (const auto& gen : sym) {
        Element y = g.multiply(x, gen);
        if (std::binary_search(tile.begin(), tile.end(), y)) continue;
        if (!have || y < best) {
          best = y;
          have = true;
        }
      }
    if (!have) throw Error("internal: cannot grow tile");
    tile = make_set([&] {
      auto t = tile;
      t.push_back(best);
      return t;
    }());
  }

  long long maxnorm = 0;
  for (const auto& x : tile) maxnorm = std::max(maxnorm, default_word_norm(g, x));
  int r = radius > 0 ? radius : static_cast<int>(maxnorm) + 3;
  Ball ball = enumerate_ball(g, s, r);
  ball.interior_radius = r - static_cast<int>(maxnorm) - 1;
  if (ball.interior_radius < 1)
    throw Error("window radius too small for this tile");
  Window w = Window::from_ball(g, ball);

  Polytile pt;
  pt.tiles.push_back(tile);
  CoverResult cover = tile_search_exact_cover(g, w, pt, CoverMode::find);
  if (!cover.satisfiable)
    throw Error("no tiling on this window (window artifact, not a disproof)");

  SizedTileResult out;
  out.group = std::move(gptr);
  out.tile = pt;
  out.tiling.tiles = pt;
  ElementSet delta;
  for (const auto& [i, d] : cover.placements) delta.push_back(d);
  out.tiling.deltas.push_back(make_set(std::move(delta)));
  out.window = std::move(w);
  out.window.group = out.group.get();
  out.route = "free-subtree-cover";
  return out;
}

SizedTileResult sized_zz3_coset(std::shared_ptr<Group> gptr,
                                const std::vector<Element>& f, long long n,
                                int radius) {
  const Group& g = *gptr;
  long long lo = 0, hi = 0;
  for (const auto& x : f) {
    bool t_power = x.data.empty() || (x.data.size() == 2 && x.data[0] == 0);
    if (!t_power)
      throw Error("window-scale sized tiles for Z*Z_3 need F inside the t-line");
    if (!x.data.empty()) {
      lo = std::min(lo, x.data[1]);
      hi = std::max(hi, x.data[1]);
    }
  }
  if (n < hi - lo + 1)
    throw Error("size below the least admissible n0 = " +
                std::to_string(hi - lo + 1));
  int r = radius > 0 ? radius : static_cast<int>(n + std::max(-lo, hi)) + 3;

  ElementSet tile;
  for (long long t = lo; t < lo + n; ++t)
    tile.push_back(t == 0 ? g.identity() : Element{{0, t}});
  tile = make_set(std::move(tile));

  GeneratingSet s = g.default_generators();
  Ball ball = enumerate_ball(g, s, r);
  ball.interior_radius = r - 1;
  Window w = Window::from_ball(g, ball);

  // Subgroup window: the t-line, long enough to certify the transversal.
  ElementSet h_window;
  for (long long j = -2 * r - n; j <= 2 * r + n; ++j)
    h_window.push_back(j == 0 ? g.identity() : Element{{0, j}});
  h_window = make_set(std::move(h_window));
  // Coset representatives: normal forms with no trailing t-run.
  ElementSet reps;
  for (const auto& x : ball.elements)
    if (x.data.empty() || x.data[x.data.size() - 2] == 1) reps.push_back(x);

  ElementSet delta;
  for (long long m = (-r - n) / n - 2; m * n + lo <= r + n; ++m)
    delta.push_back(m == 0 ? g.identity() : Element{{0, m * n}});
  Polytiling h_tiling;
  h_tiling.tiles.tiles.push_back(tile);
  h_tiling.deltas.push_back(make_set(std::move(delta)));

  Polytiling ext = coset_extend(g, h_tiling, reps, h_window, w);

  SizedTileResult out;
  out.group = std::move(gptr);
  out.tile = ext.tiles;
  out.tiling = std::move(ext);
  out.window = std::move(w);
  out.window.group = out.group.get();
  out.route = "coset-extend-z-line";
  return out;
}

}  // namespace

SizedTileResult sized_fair_polytile(const GroupSpec& spec,
                                    const std::vector<std::string>& f_words,
                                    long long n, int window_radius) {
  if (n < 1) throw Error("tile size must be positive");
  auto gptr = std::make_shared<Group>(spec);
  const Group& g = *gptr;
  std::vector<Element> f;
  for (const auto& word : f_words) f.push_back(g.parse(word));

  if (spec.family == Family::FiniteCyclic) {
    long long q = spec.param;
    if (q % n != 0)
      throw Error("refused: |T1| = " + std::to_string(n) +
                  " does not divide the group order " + std::to_string(q));
    for (const auto& x : f)
      if (x.data[0] >= n)
        throw Error("F does not fit inside the aligned interval tile");
    SizedTileResult out;
    out.group = gptr;
    ElementSet tile, delta;
    for (long long t = 0; t < n; ++t) tile.push_back(Element{{t}});
    for (long long m = 0; m < q; m += n) delta.push_back(Element{{m}});
    out.tile.tiles.push_back(tile);
    out.tiling.tiles = out.tile;
    out.tiling.deltas.push_back(delta);
    out.window.group = out.group.get();
    for (long long v = 0; v < q; ++v) out.window.elements.push_back(Element{{v}});
    out.window.interior.assign(static_cast<size_t>(q), 1);
    out.route = "finite-cyclic";
    return out;
  }
  if (spec.family == Family::FreeProductZZ3)
    return sized_zz3_coset(gptr, f, n, window_radius);
  if (spec.family == Family::Free && spec.param >= 2)
    return sized_free_subtree(gptr, f, n, window_radius);
  if (spec.declared_ends == 1 || spec.declared_ends == 2) {
    int r = window_radius;
    if (r <= 0) {
      r = 6;
      if (spec.family == Family::FreeAbelian && spec.param == 1)
        r = static_cast<int>(2 * n) + 4;
    }
    return sized_via_path_order(gptr, f, n, r);
  }
  throw Error("sized fair polytiles are not implemented for this family");
}

}  // namespace caykit
