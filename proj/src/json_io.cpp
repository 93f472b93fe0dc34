#include "caykit/json_io.hpp"

#include <fstream>
#include <sstream>

namespace caykit {

namespace {

const std::map<std::string, Family>& family_names() {
  static const std::map<std::string, Family> names = {
      {"free_abelian", Family::FreeAbelian},
      {"free", Family::Free},
      {"finite_cyclic", Family::FiniteCyclic},
      {"finite_symmetric", Family::FiniteSymmetric},
      {"free_product_z_z3", Family::FreeProductZZ3},
      {"direct_product", Family::DirectProduct},
  };
  return names;
}

std::string family_name(Family f) {
  for (const auto& [name, fam] : family_names())
    if (fam == f) return name;
  throw Error("unknown family");
}

}  // namespace

GroupSpec group_spec_from_json(const Json& j) {
  std::string fam = j.at("family").get<std::string>();
  auto it = family_names().find(fam);
  if (it == family_names().end()) throw Error("unknown family: " + fam);
  Json params = j.value("params", Json::object());

  GroupSpec s;
  switch (it->second) {
    case Family::FreeAbelian:
      s = GroupSpec::free_abelian(params.value("dim", 1));
      break;
    case Family::Free:
      s = GroupSpec::free(params.value("rank", 2));
      break;
    case Family::FiniteCyclic:
      s = GroupSpec::finite_cyclic(params.value("order", 2));
      break;
    case Family::FiniteSymmetric:
      s = GroupSpec::finite_symmetric(params.value("degree", 3));
      break;
    case Family::FreeProductZZ3:
      s = GroupSpec::free_product_z_z3();
      break;
    case Family::DirectProduct: {
      std::vector<GroupSpec> factors;
      for (const auto& f : params.at("factors")) factors.push_back(group_spec_from_json(f));
      s = GroupSpec::direct_product(std::move(factors));
      break;
    }
  }
  if (j.contains("declared_ends")) {
    const auto& e = j.at("declared_ends");
    s.declared_ends = e.is_string() ? -1 : e.get<int>();
  }
  if (j.contains("declared_amenable"))
    s.declared_amenable = j.at("declared_amenable").get<bool>();
  return s;
}

GroupSpec group_spec_from_file(const std::string& path) {
  return group_spec_from_json(Json::parse(read_text_file(path)));
}

Json group_spec_to_json(const GroupSpec& s) {
  Json j;
  j["family"] = family_name(s.family);
  Json params = Json::object();
  switch (s.family) {
    case Family::FreeAbelian:
      params["dim"] = s.param;
      break;
    case Family::Free:
      params["rank"] = s.param;
      break;
    case Family::FiniteCyclic:
      params["order"] = s.param;
      break;
    case Family::FiniteSymmetric:
      params["degree"] = s.param;
      break;
    case Family::FreeProductZZ3:
      break;
    case Family::DirectProduct: {
      Json factors = Json::array();
      for (const auto& f : s.factors) factors.push_back(group_spec_to_json(f));
      params["factors"] = factors;
      break;
    }
  }
  j["params"] = params;
  j["declared_ends"] = s.declared_ends == -1 ? Json("infinity") : Json(s.declared_ends);
  j["declared_amenable"] = s.declared_amenable;
  return j;
}

GeneratingSet generators_from_json(const Group& g, const Json& j) {
  if (!j.contains("generators")) return g.default_generators();
  GeneratingSet s;
  for (const auto& w : j.at("generators"))
    s.gens.push_back(g.parse(w.get<std::string>()));
  if (s.gens.empty()) throw Error("empty generating set");
  return s;
}

Json multigraph_to_json(const Multigraph& g) {
  Json j;
  Json verts = Json::array();
  for (int v = 0; v < g.n; ++v) verts.push_back(g.vertex_name(v));
  Json edges = Json::array();
  for (const auto& [e, m] : g.edges) edges.push_back({e.first, e.second, m});
  Json interior = Json::array();
  for (int v : g.interior_vertices()) interior.push_back(v);
  j["vertices"] = verts;
  j["edges"] = edges;
  j["interior"] = interior;
  return j;
}

Multigraph multigraph_from_json(const Json& j) {
  Multigraph g;
  for (const auto& v : j.at("vertices")) g.add_vertex(v.get<std::string>());
  g.interior.assign(g.n, 0);
  for (const auto& v : j.at("interior")) g.interior.at(v.get<int>()) = 1;
  for (const auto& e : j.at("edges"))
    g.add_edge(e.at(0).get<int>(), e.at(1).get<int>(),
               e.size() > 2 ? e.at(2).get<int>() : 1);
  return g;
}

Json path_to_json(const Group& g, const Ball& ball, const PathSeq& p) {
  Json seq = Json::array();
  for (int v : p.verts) seq.push_back(g.to_string(ball.elements[v]));
  return seq;
}

RootedTree rooted_tree_from_json(const Json& j) {
  std::vector<int> parent;
  for (const auto& p : j.at("parent")) parent.push_back(p.get<int>());
  if (j.contains("truncated")) {
    std::vector<char> trunc;
    for (const auto& t : j.at("truncated"))
      trunc.push_back(static_cast<char>(t.get<int>()));
    return RootedTree::from_parents(parent, &trunc);
  }
  return RootedTree::from_parents(parent);
}

Json rooted_tree_to_json(RootedTree& t) {
  Json parent = Json::array(), trunc = Json::array();
  for (int v = 0; v < t.size(); ++v) {
    parent.push_back(t.parent(v));
    trunc.push_back(t.truncated(v) ? 1 : 0);
  }
  Json j;
  j["parent"] = parent;
  j["truncated"] = trunc;
  return j;
}

Json tiles_to_json(const Group& g, const Polytile& p) {
  Json tiles = Json::array();
  for (const auto& t : p.tiles) {
    Json tile = Json::array();
    for (const auto& e : t) tile.push_back(g.to_string(e));
    tiles.push_back(tile);
  }
  Json j;
  j["tiles"] = tiles;
  return j;
}

Polytile tiles_from_json(const Group& g, const Json& j) {
  Polytile p;
  for (const auto& tile : j.at("tiles")) {
    std::vector<Element> t;
    for (const auto& w : tile) t.push_back(g.parse(w.get<std::string>()));
    p.tiles.push_back(make_set(std::move(t)));
  }
  p.validate(g);
  return p;
}

Json tiling_to_json(const Group& g, const Polytiling& p) {
  Json j = tiles_to_json(g, p.tiles);
  Json deltas = Json::array();
  for (const auto& dset : p.deltas) {
    Json d = Json::array();
    for (const auto& e : dset) d.push_back(g.to_string(e));
    deltas.push_back(d);
  }
  j["deltas"] = deltas;
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace caykit
