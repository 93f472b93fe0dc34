#include "caykit/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "caykit/action.hpp"
#include "caykit/cayley.hpp"
#include "caykit/euler.hpp"
#include "caykit/hamilton.hpp"
#include "caykit/perimeter.hpp"
#include "caykit/spanning.hpp"
#include "caykit/tree_map.hpp"

namespace caykit::cli {

namespace {

long long effective_cap(long long cfg_cap) {
  if (const char* env = std::getenv("CAYKIT_CAP")) {
    long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return cfg_cap;
}

Json stamp(const RunConfig& cfg) {
  Json j;
  j["schema"] = 1;
  j["seed"] = cfg.seed;
  j["cap"] = effective_cap(cfg.cap);
  return j;
}

struct GroupContext {
  std::shared_ptr<Group> group;
  GeneratingSet gens;
};

GroupContext make_group(const Json& group_json) {
  GroupContext ctx;
  ctx.group = std::make_shared<Group>(group_spec_from_json(group_json));
  ctx.gens = generators_from_json(*ctx.group, group_json);
  return ctx;
}

int max_step_distance(const Multigraph& g, const PathSeq& order) {
  int worst = 0;
  for (size_t i = 0; i + 1 < order.verts.size(); ++i) {
    auto dist = g.bfs_dist(order.verts[i]);
    int d = dist[order.verts[i + 1]];
    if (d < 0) throw Error("order step leaves the component");
    worst = std::max(worst, d);
  }
  return worst;
}

Json burnside_pipeline(const RunConfig& cfg) {
  GroupContext ctx = make_group(cfg.group_json);
  Ball ball;
  Multigraph window = cayley_ball_graph(*ctx.group, ctx.gens, cfg.radius, 0,
                                        &ball, effective_cap(cfg.cap));
  HamiltonResult ham = hamiltonian_in_power(window);

  int step_bound = max_step_distance(window, ham.order);
  bool visits_once = is_hamiltonian_path(power_graph(window, ham.power_k), ham.order);

  ActionTable action = z_action_from_path(ham.order, window.n);
  TranslationReport rep = verify_translation_like(action, window);

  Json j = stamp(cfg);
  j["pipeline"] = "burnside";
  j["group"] = group_spec_to_json(ctx.group->spec());
  j["radius"] = cfg.radius;
  j["vertices"] = window.n;
  j["sequence"] = path_to_json(*ctx.group, ball, ham.order);
  j["power_k"] = ham.power_k;
  j["step_bound"] = step_bound;
  j["checks"] = {
      {"hamiltonian_in_power", visits_once},
      {"step_bound_ok", step_bound <= ham.power_k},
      {"action_free", rep.free_ok},
      {"orbit_injective", rep.orbit_injective},
      {"orbit_lipschitz", rep.orbit_lipschitz_ok},
      {"lipschitz_c", rep.lipschitz_c},
  };
  j["ok"] = visits_once && step_bound <= ham.power_k && rep.free_ok &&
            rep.orbit_injective && rep.orbit_lipschitz_ok;
  return j;
}

Json vonneumann_pipeline(const RunConfig& cfg) {
  GroupContext ctx = make_group(cfg.group_json);
  const Group& g = *ctx.group;
  if (g.spec().declared_amenable)
    throw Error("vonneumann pipeline needs a group declared non-amenable");

  Ball ball;
  Multigraph window = cayley_ball_graph(g, ctx.gens, cfg.radius, cfg.collar,
                                        &ball, effective_cap(cfg.cap));
  auto by_gen = cayley_edge_generators(g, g.default_generators(), ball);

  // Orbits of the free-factor action: cosets of the embedded free group.
  int free_factor = -1;
  int gen_lo = 0, gen_hi = g.generator_count();
  if (g.spec().family == Family::DirectProduct) {
    int off = 0;
    for (int i = 0; i < g.factor_count(); ++i) {
      const auto& fs = g.factor(i).spec();
      if (free_factor == -1 && fs.family == Family::Free && fs.param >= 2) {
        free_factor = i;
        gen_lo = off;
        gen_hi = off + g.factor(i).generator_count();
      }
      off += g.factor(i).generator_count();
    }
    if (free_factor == -1)
      throw Error("vonneumann pipeline needs a free direct factor");
  } else if (g.spec().family != Family::Free || g.spec().param < 2) {
    throw Error("vonneumann pipeline supports free groups and products with a free factor");
  }

  std::map<Element, std::vector<int>> orbit_of;
  for (int i = 0; i < ball.size(); ++i) {
    Element key = g.identity();
    if (free_factor != -1) {
      auto comps = g.product_components(ball.elements[i]);
      comps[free_factor] = g.factor(free_factor).identity();
      for (int f = 0; f < g.factor_count(); ++f)
        key = g.multiply(key, g.product_embed(f, comps[f]));
    }
    orbit_of[key].push_back(i);
  }
  std::vector<std::vector<int>> blocks;
  for (auto& [key, vs] : orbit_of) blocks.push_back(vs);
  OrbitPartition parts = OrbitPartition::from_blocks(window.n, blocks);

  // Free-factor edges only, for the per-block trees.
  std::vector<std::vector<int>> free_adj(window.n);
  for (const auto& [e, gens] : by_gen)
    for (int gi : gens)
      if (gi >= gen_lo && gi < gen_hi) {
        free_adj[e.first].push_back(e.second);
        free_adj[e.second].push_back(e.first);
        break;
      }
  for (auto& nb : free_adj) std::sort(nb.begin(), nb.end());

  std::vector<SpanningTreeCert> block_trees;
  for (const auto& blk : parts.blocks) {
    SpanningTreeCert cert;
    cert.host_n = window.n;
    cert.in_tree.assign(window.n, 0);
    std::vector<int> q{blk[0]};
    cert.in_tree[blk[0]] = 1;
    for (size_t h = 0; h < q.size(); ++h)
      for (int w : free_adj[q[h]])
        if (!cert.in_tree[w]) {
          cert.in_tree[w] = 1;
          cert.edges.emplace_back(std::min(q[h], w), std::max(q[h], w));
          q.push_back(w);
        }
    if (q.size() != blk.size())
      throw Error("free-factor orbit is not connected inside the window");
    std::sort(cert.edges.begin(), cert.edges.end());
    block_trees.push_back(std::move(cert));
  }

  Multigraph quotient = orbit_quotient(window, parts);
  int id_block = parts.block_of[ball.index_of(g.identity())];
  SpanningTreeCert quot_tree = bfs_spanning_tree(quotient, id_block);
  SpanningTreeCert lifted = lift_spanning_tree(window, parts, block_trees, quot_tree);

  RegularTreeReport reg_report;
  SpanningTreeCert regular = regular_spanning_tree_window(
      window, cfg.k, cfg.stretch_cap, ball.index_of(g.identity()), &reg_report);
  (void)regular;

  Json j = stamp(cfg);
  j["pipeline"] = "vonneumann";
  j["group"] = group_spec_to_json(g.spec());
  j["radius"] = cfg.radius;
  j["orbit_blocks"] = static_cast<int>(parts.blocks.size());
  j["lift"] = {
      {"edges", static_cast<long long>(lifted.edges.size())},
      {"vertices", window.n},
      {"tree_ok", lifted.acyclic_connected()},
  };
  j["regular"] = {
      {"k", cfg.k},
      {"stretch", reg_report.stretch},
      {"ok", reg_report.ok},
      {"message", reg_report.message},
  };
  j["ok"] = lifted.acyclic_connected() && reg_report.ok;
  return j;
}

Json tiling_pipeline(const RunConfig& cfg) {
  auto z2 = std::make_shared<Group>(GroupSpec::free_abelian(2));
  int side = cfg.box;
  Window box = Window::box(*z2, {{0, side - 1}, {0, side - 1}}, 0);
  auto order = boustrophedon_order(*z2, box);

  Group z(GroupSpec::free_abelian(1));
  Bijection phi;
  for (size_t i = 0; i < order.size(); ++i)
    phi.insert(Element{{static_cast<long long>(i)}}, order[i]);

  Window zwin;
  zwin.group = &z;
  for (size_t i = 0; i < order.size(); ++i)
    zwin.elements.push_back(Element{{static_cast<long long>(i)}});
  zwin.interior.assign(order.size(), 1);

  std::vector<long long> sizes{2, 4, 8};
  auto mono_seq = interval_monotilings_Z(z, sizes, zwin);

  std::vector<Polytiling> pushed;
  Json levels = Json::array();
  bool all_ok = true;
  for (size_t i = 0; i < mono_seq.size(); ++i) {
    PushforwardResult pf = pushforward_polytiling(z, *z2, phi, mono_seq[i], box);
    CoverageCert cert = verify_polytiling(*z2, pf.tiling, box);
    // Cross-check: the exact-cover oracle restricted to these deltas must
    // see exactly one solution.
    CoverResult oracle = tile_search_exact_cover(*z2, box, pf.tiling.tiles,
                                                 CoverMode::count, &pf.tiling.deltas);
    bool agree = cert.ok == (oracle.count == 1);
    all_ok = all_ok && cert.ok && agree;
    levels.push_back({{"size", sizes[i]},
                      {"shape_classes", pf.shape_classes},
                      {"coverage_ok", cert.ok},
                      {"oracle_count", oracle.count},
                      {"oracle_agrees", agree}});
    pushed.push_back(std::move(pf.tiling));
  }
  CccReport ccc = ccc_check(*z2, pushed, box);
  all_ok = all_ok && ccc.all();

  SizedTileResult sized = sized_fair_polytile(z2->spec(), {"e", "a b"}, 6);
  CoverageCert sized_cert =
      verify_polytiling(*sized.group, sized.tiling, sized.window);
  all_ok = all_ok && sized_cert.ok && is_fair(sized.tile) &&
           sized.tile.tiles[0].size() == 6;

  Json j = stamp(cfg);
  j["pipeline"] = "tiling";
  j["box"] = side;
  j["levels"] = levels;
  j["ccc"] = {{"centered", ccc.centered},
              {"cofinal", ccc.cofinal},
              {"coherent", ccc.coherent}};
  j["sized"] = {{"n", 6},
                {"route", sized.route},
                {"ok", sized_cert.ok},
                {"fair", is_fair(sized.tile)}};
  j["ok"] = all_ok;
  return j;
}

Json treemap_pipeline(const RunConfig& cfg) {
  int r = cfg.source_degree - 1;
  RootedTree source = RootedTree::regular(cfg.source_degree, cfg.depth + 1);
  RootedTree target = RootedTree::random_window(
      cfg.seed, 3, 2, r - 1, cfg.depth * (r + 1) + r + 2);
  TreeMap fm = build_tree_map(source, target, cfg.depth);
  ClauseReport clauses = verify_tree_map_clauses(source, target, fm);
  QiReport qi = verify_quasi_isometry(source, target, fm);

  Json j = stamp(cfg);
  j["pipeline"] = "treemap";
  j["source_degree"] = cfg.source_degree;
  j["depth"] = cfg.depth;
  j["clauses"] = {clauses.root_fixed,      clauses.fiber_shape,
                  clauses.edge_bound,      clauses.order_monotone,
                  clauses.fiber_witness,   clauses.fiber_size,
                  clauses.level_incomparable, clauses.level_perimeter};
  j["qi"] = {{"upper_ok", qi.upper_ok},
             {"lower_ok", qi.lower_ok},
             {"density_ok", qi.density_ok},
             {"worst_density", qi.worst_density},
             {"pairs", qi.pairs_checked}};
  j["ok"] = clauses.all() && qi.upper_ok && qi.lower_ok && qi.density_ok;
  return j;
}

Json zz3_pipeline(const RunConfig& cfg) {
  Zz3Report rep = z_z3_no_regular_tree_check(cfg.radius);
  Json j = stamp(cfg);
  j["pipeline"] = "zz3";
  j["radius"] = cfg.radius;
  j["contraction_is_tree"] = rep.contraction_is_tree;
  j["interior_triangles"] = rep.interior_triangles;
  j["degree_pattern_ok"] = rep.degree_pattern_ok;
  j["exhaustive"] = rep.exhaustive;
  j["spanning_trees_checked"] = rep.spanning_trees_checked;
  j["interior_regular_trees"] = rep.interior_regular_trees;
  j["message"] = rep.message;
  j["ok"] = rep.contraction_is_tree && rep.degree_pattern_ok &&
            rep.interior_triangles > 0 &&
            (!rep.exhaustive || rep.interior_regular_trees == 0);
  return j;
}

void emit_result(const Json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
}

}  // namespace

Json run_pipeline(const std::string& name, const RunConfig& cfg) {
  if (name == "burnside") return burnside_pipeline(cfg);
  if (name == "vonneumann") return vonneumann_pipeline(cfg);
  if (name == "tiling") return tiling_pipeline(cfg);
  if (name == "treemap") return treemap_pipeline(cfg);
  if (name == "zz3") return zz3_pipeline(cfg);
  throw Error("unknown pipeline: " + name);
}

int run(int argc, char** argv) {
  CLI::App app{"caykit: constructive checks on Cayley-graph windows"};
  app.require_subcommand(1);

  std::string group_path, out_path, emit = "json", tree_path, tiles_path, mode = "find";
  std::string pipeline_name, f_csv = "e", sizes_csv = "2,4,8";
  RunConfig cfg;
  int r_budget = 4, target_regular = 0;
  long long n_size = 4;
  uint64_t tree_seed = 0;
  int root_children = 3, min_children = 2, max_children = 4;

  auto add_group = [&](CLI::App* cmd, bool required = true) {
    auto* opt = cmd->add_option("--group", group_path, "group spec JSON file");
    if (required) opt->required();
  };
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "output file (stdout when absent)");
    cmd->add_option("--emit", emit, "json|dot");
    cmd->add_option("--seed", cfg.seed, "seed recorded in artifacts");
    cmd->add_option("--cap", cfg.cap, "ball size cap (CAYKIT_CAP overrides)");
    cmd->add_option("--jobs", cfg.jobs, "worker bound")->check(CLI::PositiveNumber);
  };

  auto* ball_cmd = app.add_subcommand("ball", "enumerate a Cayley ball window");
  add_group(ball_cmd);
  ball_cmd->add_option("--radius", cfg.radius)->required();
  ball_cmd->add_option("--collar", cfg.collar);
  add_common(ball_cmd);

  auto* ham_cmd = app.add_subcommand("hampath", "Hamiltonian order in a power graph");
  add_group(ham_cmd);
  ham_cmd->add_option("--radius", cfg.radius)->required();
  add_common(ham_cmd);

  auto* act_cmd = app.add_subcommand("action-verify", "translation-like action report");
  add_group(act_cmd);
  act_cmd->add_option("--radius", cfg.radius)->required();
  add_common(act_cmd);

  auto* peri_cmd = app.add_subcommand("perimeter", "perimeter decomposition of a tree");
  peri_cmd->add_option("--tree", tree_path, "tree JSON file");
  peri_cmd->add_option("--regular-degree", target_regular, "regular tree degree");
  peri_cmd->add_option("--random-seed", tree_seed, "random tree window seed");
  peri_cmd->add_option("--root-children", root_children);
  peri_cmd->add_option("--min-children", min_children);
  peri_cmd->add_option("--max-children", max_children);
  peri_cmd->add_option("--r", r_budget, "budget")->required();
  add_common(peri_cmd);

  auto* tm_cmd = app.add_subcommand("treemap", "map a regular tree onto a target tree");
  tm_cmd->add_option("--source-degree", cfg.source_degree);
  tm_cmd->add_option("--target", tree_path, "target tree JSON file");
  tm_cmd->add_option("--target-random", tree_seed, "random target window seed");
  tm_cmd->add_option("--depth", cfg.depth)->required();
  add_common(tm_cmd);

  auto* span_cmd = app.add_subcommand("spantree", "interior-regular spanning tree");
  add_group(span_cmd);
  span_cmd->add_option("--k", cfg.k)->required();
  span_cmd->add_option("--radius", cfg.radius)->required();
  span_cmd->add_option("--stretch", cfg.stretch_cap);
  span_cmd->add_option("--collar", cfg.collar);
  add_common(span_cmd);

  auto* zz3_cmd = app.add_subcommand("zz3check", "Z*Z_3 regular-spanning-tree obstruction");
  zz3_cmd->add_option("--radius", cfg.radius)->required();
  add_common(zz3_cmd);

  auto* tile_cmd = app.add_subcommand("tile", "polytile and polytiling operations");
  tile_cmd->require_subcommand(1);
  auto* tv = tile_cmd->add_subcommand("verify", "verify a polytiling on a window");
  add_group(tv);
  tv->add_option("--window", cfg.radius)->required();
  tv->add_option("--collar", cfg.collar);
  tv->add_option("--tiling", tiles_path, "tiling JSON with deltas")->required();
  add_common(tv);
  auto* ts = tile_cmd->add_subcommand("search", "exact-cover search for deltas");
  add_group(ts);
  ts->add_option("--window", cfg.radius)->required();
  ts->add_option("--collar", cfg.collar);
  ts->add_option("--tiles", tiles_path)->required();
  ts->add_option("--mode", mode, "find|count");
  add_common(ts);
  auto* tp = tile_cmd->add_subcommand("push", "boustrophedon interval pushforward");
  tp->add_option("--box", cfg.box);
  tp->add_option("--sizes", sizes_csv, "comma separated divisor chain");
  add_common(tp);
  auto* tc = tile_cmd->add_subcommand("ccc", "ccc report for the pushforward chain");
  tc->add_option("--box", cfg.box);
  tc->add_option("--sizes", sizes_csv);
  add_common(tc);
  auto* tz = tile_cmd->add_subcommand("sized", "fair polytile with |T1| = n");
  add_group(tz);
  tz->add_option("--n", n_size)->required();
  tz->add_option("--f", f_csv, "comma separated member words");
  tz->add_option("--radius", cfg.radius);
  add_common(tz);

  auto* pipe_cmd = app.add_subcommand("pipeline", "composed pipeline run");
  pipe_cmd->add_option("name", pipeline_name, "burnside|vonneumann|tiling|treemap|zz3")
      ->required();
  add_group(pipe_cmd, false);
  pipe_cmd->add_option("--radius", cfg.radius);
  pipe_cmd->add_option("--collar", cfg.collar);
  pipe_cmd->add_option("--k", cfg.k);
  pipe_cmd->add_option("--stretch", cfg.stretch_cap);
  pipe_cmd->add_option("--depth", cfg.depth);
  pipe_cmd->add_option("--source-degree", cfg.source_degree);
  pipe_cmd->add_option("--box", cfg.box);
  add_common(pipe_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    auto split_csv = [](const std::string& csv) {
      std::vector<std::string> out;
      std::string cur;
      for (char c : csv) {
        if (c == ',') {
          out.push_back(cur);
          cur.clear();
        } else {
          cur.push_back(c);
        }
      }
      out.push_back(cur);
      return out;
    };

    if (!group_path.empty()) cfg.group_json = Json::parse(read_text_file(group_path));

    if (app.got_subcommand(ball_cmd)) {
      GroupContext ctx = make_group(cfg.group_json);
      Ball ball;
      Multigraph window = cayley_ball_graph(*ctx.group, ctx.gens, cfg.radius,
                                            cfg.collar, &ball, effective_cap(cfg.cap));
      if (emit == "dot") {
        if (out_path.empty())
          std::cout << to_dot(window);
        else
          write_text_file(out_path, to_dot(window));
        return 0;
      }
      Json j = stamp(cfg);
      j["group"] = group_spec_to_json(ctx.group->spec());
      j["radius"] = cfg.radius;
      j["size"] = ball.size();
      j["interior_radius"] = ball.interior_radius;
      j["graph"] = multigraph_to_json(window);
      emit_result(j, out_path);
      return 0;
    }
    if (app.got_subcommand(ham_cmd)) {
      RunConfig c = cfg;
      Json j = burnside_pipeline(c);
      if (emit == "dot") {
        GroupContext ctx = make_group(cfg.group_json);
        Ball ball;
        Multigraph window = cayley_ball_graph(*ctx.group, ctx.gens, cfg.radius, 0,
                                              &ball, effective_cap(cfg.cap));
        HamiltonResult ham = hamiltonian_in_power(window);
        Multigraph pg = power_graph(window, ham.power_k);
        if (out_path.empty())
          std::cout << to_dot(pg);
        else
          write_text_file(out_path, to_dot(pg));
        return j["ok"].get<bool>() ? 0 : 1;
      }
      emit_result(j, out_path);
      return j["ok"].get<bool>() ? 0 : 1;
    }
    if (app.got_subcommand(act_cmd)) {
      Json j = burnside_pipeline(cfg);
      Json out = stamp(cfg);
      out["group"] = j["group"];
      out["checks"] = j["checks"];
      out["ok"] = j["ok"];
      emit_result(out, out_path);
      return out["ok"].get<bool>() ? 0 : 1;
    }
    if (app.got_subcommand(peri_cmd)) {
      std::optional<RootedTree> tree;
      if (!tree_path.empty())
        tree = rooted_tree_from_json(Json::parse(read_text_file(tree_path)));
      else if (target_regular > 0)
        tree = RootedTree::regular(target_regular, r_budget + 4);
      else
        tree = RootedTree::random_window(tree_seed, root_children, min_children,
                                         max_children, r_budget + 4);
      Perimeter p = perimeter_decompose(*tree, r_budget);
      PerimeterCheck chk = verify_perimeter(*tree, tree->root(), p.entries);
      Json j = stamp(cfg);
      Json entries = Json::array();
      for (const auto& [v, d] : p.entries) entries.push_back({{"vertex", v}, {"d", d}});
      j["r"] = r_budget;
      j["entries"] = entries;
      j["radius"] = chk.radius;
      j["d_sum"] = chk.d_sum;
      j["ok"] = chk.ok() && chk.d_sum == r_budget && chk.radius <= r_budget;
      emit_result(j, out_path);
      return j["ok"].get<bool>() ? 0 : 1;
    }
    if (app.got_subcommand(tm_cmd)) {
      int r = cfg.source_degree - 1;
      RootedTree source = RootedTree::regular(cfg.source_degree, cfg.depth + 1);
      std::optional<RootedTree> target;
      if (!tree_path.empty())
        target = rooted_tree_from_json(Json::parse(read_text_file(tree_path)));
      else
        target = RootedTree::random_window(tree_seed, 3, 2, r - 1,
                                           cfg.depth * (r + 1) + r + 2);
      TreeMap fm = build_tree_map(source, *target, cfg.depth);
      ClauseReport clauses = verify_tree_map_clauses(source, *target, fm);
      QiReport qi = verify_quasi_isometry(source, *target, fm);
      if (emit == "dot") {
        std::ostringstream dot;
        dot << "digraph {\n";
        for (int v = 0; v < static_cast<int>(fm.f.size()); ++v) {
          if (fm.f[v] == -1) continue;
          dot << "  " << v << " [label=\"" << v << " -> " << fm.f[v] << "\"];\n";
          if (source.parent(v) != -1 && fm.f[source.parent(v)] != -1)
            dot << "  " << source.parent(v) << " -> " << v << ";\n";
        }
        dot << "}\n";
        if (out_path.empty())
          std::cout << dot.str();
        else
          write_text_file(out_path, dot.str());
        return clauses.all() && qi.upper_ok && qi.lower_ok && qi.density_ok ? 0 : 1;
      }
      Json j = stamp(cfg);
      Json pairs = Json::array();
      for (int v = 0; v < static_cast<int>(fm.f.size()); ++v)
        if (fm.f[v] != -1) pairs.push_back({v, fm.f[v]});
      j["map"] = pairs;
      j["clauses"] = {clauses.root_fixed,      clauses.fiber_shape,
                      clauses.edge_bound,      clauses.order_monotone,
                      clauses.fiber_witness,   clauses.fiber_size,
                      clauses.level_incomparable, clauses.level_perimeter};
      j["qi"] = {{"upper_ok", qi.upper_ok},
                 {"lower_ok", qi.lower_ok},
                 {"density_ok", qi.density_ok}};
      j["ok"] = clauses.all() && qi.upper_ok && qi.lower_ok && qi.density_ok;
      emit_result(j, out_path);
      return j["ok"].get<bool>() ? 0 : 1;
    }
    if (app.got_subcommand(span_cmd)) {
      GroupContext ctx = make_group(cfg.group_json);
      if (ctx.group->spec().declared_amenable)
        throw Error("regular spanning trees of degree >= 3 need a non-amenable group");
      Ball ball;
      Multigraph window = cayley_ball_graph(*ctx.group, ctx.gens, cfg.radius,
                                            cfg.collar, &ball, effective_cap(cfg.cap));
      RegularTreeReport rep;
      SpanningTreeCert cert = regular_spanning_tree_window(
          window, cfg.k, cfg.stretch_cap, ball.index_of(ctx.group->identity()), &rep);
      // The measured stretch fixes the power generating set W = S u ... u S^c.
      GeneratingSet w_set =
          power_generating_set(*ctx.group, ctx.gens, std::max(rep.stretch, 1),
                               effective_cap(cfg.cap));
      Json j = stamp(cfg);
      j["group"] = group_spec_to_json(ctx.group->spec());
      j["k"] = cfg.k;
      j["radius"] = cfg.radius;
      j["stretch_c"] = rep.stretch;
      j["power_set_size"] = static_cast<long long>(w_set.gens.size());
      Json edges = Json::array();
      for (const auto& e : cert.edges)
        edges.push_back({ctx.group->to_string(ball.elements[e.first]),
                         ctx.group->to_string(ball.elements[e.second])});
      j["edges"] = edges;
      j["report"] = rep.message;
      j["ok"] = rep.ok;
      if (emit == "dot") {
        Multigraph tree_graph = Multigraph::with_vertices(window.n);
        tree_graph.label = window.label;
        for (const auto& e : cert.edges) tree_graph.add_edge(e.first, e.second);
        if (out_path.empty())
          std::cout << to_dot(tree_graph);
        else
          write_text_file(out_path, to_dot(tree_graph));
        return rep.ok ? 0 : 1;
      }
      emit_result(j, out_path);
      return rep.ok ? 0 : 1;
    }
    if (app.got_subcommand(zz3_cmd)) {
      Json j = zz3_pipeline(cfg);
      emit_result(j, out_path);
      return j["ok"].get<bool>() ? 0 : 1;
    }
    if (app.got_subcommand(tile_cmd)) {
      if (tile_cmd->got_subcommand(tv) || tile_cmd->got_subcommand(ts)) {
        GroupContext ctx = make_group(cfg.group_json);
        Ball ball = enumerate_ball(*ctx.group, ctx.gens, cfg.radius,
                                   effective_cap(cfg.cap));
        ball.interior_radius = cfg.radius - cfg.collar;
        Window w = Window::from_ball(*ctx.group, ball);
        Json doc = Json::parse(read_text_file(tiles_path));
        if (tile_cmd->got_subcommand(tv)) {
          Polytile tiles = tiles_from_json(*ctx.group, doc);
          Polytiling tiling;
          tiling.tiles = tiles;
          for (const auto& dset : doc.at("deltas")) {
            std::vector<Element> ds;
            for (const auto& word : dset)
              ds.push_back(ctx.group->parse(word.get<std::string>()));
            tiling.deltas.push_back(make_set(std::move(ds)));
          }
          CoverageCert cert = verify_polytiling(*ctx.group, tiling, w);
          Json j = stamp(cfg);
          j["ok"] = cert.ok;
          j["uncovered"] = static_cast<long long>(cert.uncovered.size());
          j["doubly_covered"] = static_cast<long long>(cert.doubly_covered.size());
          Json counts = Json::array();
          for (int i = 0; i < w.size(); ++i)
            counts.push_back({{"element", ctx.group->to_string(w.elements[i])},
                              {"count", cert.counts[i]},
                              {"interior", static_cast<bool>(w.interior[i])}});
          j["coverage"] = counts;
          emit_result(j, out_path);
          return cert.ok ? 0 : 1;
        }
        Polytile tiles = tiles_from_json(*ctx.group, doc);
        CoverResult res = tile_search_exact_cover(
            *ctx.group, w, tiles,
            mode == "count" ? CoverMode::count : CoverMode::find);
        Json j = stamp(cfg);
        j["satisfiable"] = res.satisfiable;
        j["count"] = res.count;
        Json placements = Json::array();
        for (const auto& [i, d] : res.placements)
          placements.push_back({{"tile", i}, {"delta", ctx.group->to_string(d)}});
        j["placements"] = placements;
        emit_result(j, out_path);
        return res.satisfiable ? 0 : 1;
      }
      if (tile_cmd->got_subcommand(tp) || tile_cmd->got_subcommand(tc)) {
        Json j = tiling_pipeline(cfg);
        emit_result(j, out_path);
        return j["ok"].get<bool>() ? 0 : 1;
      }
      if (tile_cmd->got_subcommand(tz)) {
        std::vector<std::string> f_words = split_csv(f_csv);
        SizedTileResult sized = sized_fair_polytile(
            group_spec_from_json(cfg.group_json), f_words, n_size,
            tz->count("--radius") ? cfg.radius : 0);
        CoverageCert cert = verify_polytiling(*sized.group, sized.tiling, sized.window);
        Json j = stamp(cfg);
        j["route"] = sized.route;
        j["n"] = n_size;
        j["fair"] = is_fair(sized.tile);
        j["tiles"] = tiles_to_json(*sized.group, sized.tile)["tiles"];
        j["ok"] = cert.ok && is_fair(sized.tile);
        emit_result(j, out_path);
        return j["ok"].get<bool>() ? 0 : 1;
      }
    }
    if (app.got_subcommand(pipe_cmd)) {
      Json j = run_pipeline(pipeline_name, cfg);
      emit_result(j, out_path);
      return j["ok"].get<bool>() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace caykit::cli
