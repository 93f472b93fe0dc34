#pragma once

#include <optional>
#include <vector>

#include "caykit/error.hpp"

namespace caykit {

// Dancing-links exact cover. Primary columns must be covered exactly once;
// secondary columns at most once. Column choice is most-constrained first
// (ties to the smaller id), rows are tried in insertion order.
class ExactCover {
 public:
  ExactCover(int primary_columns, int secondary_columns);

  int add_row(const std::vector<int>& columns);  // returns row id

  // Returns the first solution as row ids, or nullopt.
  std::optional<std::vector<int>> find();
  // Number of solutions, stopping at cap.
  long long count(long long cap = 1'000'000);

 private:
  struct Node {
    int l, r, u, d;
    int col;     // -1 for headers' root
    int row_id;  // -1 for column headers
  };
  std::vector<Node> nodes;
  std::vector<int> col_head, col_size;
  int primary_;
  int rows_ = 0;

  void cover(int c);
  void uncover(int c);
  bool search(std::vector<int>& stack, long long* counter, long long cap,
              std::vector<int>* out);
};

}  // namespace caykit
