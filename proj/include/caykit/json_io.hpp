#pragma once

#include <json.hpp>

#include "caykit/group.hpp"
#include "caykit/multigraph.hpp"
#include "caykit/rooted_tree.hpp"
#include "caykit/tiling.hpp"

namespace caykit {

using Json = nlohmann::json;

// {"family": "...", "params": {...}, "generators": ["a b", ...],
//  "declared_ends": 2|"infinity", "declared_amenable": bool}
GroupSpec group_spec_from_json(const Json& j);
GroupSpec group_spec_from_file(const std::string& path);
Json group_spec_to_json(const GroupSpec& s);

// Parses the optional "generators" list against the group; default generators
// when absent.
GeneratingSet generators_from_json(const Group& g, const Json& j);

Json multigraph_to_json(const Multigraph& g);
Multigraph multigraph_from_json(const Json& j);

Json path_to_json(const Group& g, const Ball& ball, const PathSeq& p);

// {"parent": [-1, 0, ...], "truncated": [0/1, ...] optional}
RootedTree rooted_tree_from_json(const Json& j);
Json rooted_tree_to_json(RootedTree& t);

Json tiles_to_json(const Group& g, const Polytile& p);
Polytile tiles_from_json(const Group& g, const Json& j);
Json tiling_to_json(const Group& g, const Polytiling& p);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace caykit
