#pragma once

#include <cstdint>
#include <string>

#include "caykit/json_io.hpp"

namespace caykit::cli {

struct RunConfig {
  Json group_json;  // parsed group spec document, may carry "generators"
  int radius = 4;
  int collar = 1;
  int k = 3;
  int stretch_cap = 3;
  int depth = 4;
  int source_degree = 6;
  int box = 12;  // tiling pipeline box side
  long long cap = 2'000'000;
  uint64_t seed = 1;
  int jobs = 1;
  std::string emit = "json";
};

// Composed runs: burnside, vonneumann, tiling, treemap, zz3. The returned
// document carries "ok"; callers map it to the exit status.
Json run_pipeline(const std::string& name, const RunConfig& cfg);

int run(int argc, char** argv);

}  // namespace caykit::cli
