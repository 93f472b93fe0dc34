#include "caykit/exact_cover.hpp"

#include <algorithm>
#include <optional>

namespace caykit {

ExactCover::ExactCover(int primary_columns, int secondary_columns)
    : primary_(primary_columns) {
  int c = primary_columns + secondary_columns;
  nodes.reserve(1 + c);
  // node 0 is the root of the primary header ring
  nodes.push_back({0, 0, 0, 0, -1, -1});
  col_head.resize(c);
  col_size.assign(c, 0);
  for (int i = 0; i < c; ++i) {
    int id = static_cast<int>(nodes.size());
    col_head[i] = id;
    nodes.push_back({id, id, id, id, i, -1});
    if (i < primary_columns) {
      // link into the header ring
      nodes[id].l = nodes[0].l;
      nodes[id].r = 0;
      nodes[nodes[0].l].r = id;
      nodes[0].l = id;
    }
  }
}

int ExactCover::add_row(const std::vector<int>& cols) {
  int row = rows_++;
  int first = -1;
  for (int c : cols) {
    if (c < 0 || c >= static_cast<int>(col_head.size()))
      throw Error("exact cover column out of range");
    int id = static_cast<int>(nodes.size());
    int head = col_head[c];
    nodes.push_back({id, id, nodes[head].u, head, c, row});
    nodes[nodes[head].u].d = id;
    nodes[head].u = id;
    ++col_size[c];
    if (first == -1) {
      first = id;
    } else {
      nodes[id].l = nodes[first].l;
      nodes[id].r = first;
      nodes[nodes[first].l].r = id;
      nodes[first].l = id;
    }
  }
  return row;
}

void ExactCover::cover(int c) {
  int head = col_head[c];
  nodes[nodes[head].r].l = nodes[head].l;
  nodes[nodes[head].l].r = nodes[head].r;
  for (int i = nodes[head].d; i != head; i = nodes[i].d)
    for (int j = nodes[i].r; j != i; j = nodes[j].r) {
      nodes[nodes[j].d].u = nodes[j].u;
      nodes[nodes[j].u].d = nodes[j].d;
      --col_size[nodes[j].col];
    }
}

void ExactCover::uncover(int c) {
  int head = col_head[c];
  for (int i = nodes[head].u; i != head; i = nodes[i].u)
    for (int j = nodes[i].l; j != i; j = nodes[j].l) {
      ++col_size[nodes[j].col];
      nodes[nodes[j].d].u = j;
      nodes[nodes[j].u].d = j;
    }
  nodes[nodes[head].r].l = head;
  nodes[nodes[head].l].r = head;
}

bool ExactCover::search(std::vector<int>& stack, long long* counter,
                        long long cap, std::vector<int>* out) {
  if (nodes[0].r == 0) {
    if (counter) {
      ++*counter;
      return *counter >= cap;  // stop only at the cap
    }
    if (out) *out = stack;
    return true;
  }
  int best = -1;
  for (int h = nodes[0].r; h != 0; h = nodes[h].r) {
    int c = nodes[h].col;
    if (best == -1 || col_size[c] < col_size[best] ||
        (col_size[c] == col_size[best] && c < best))
      best = c;
  }
  cover(best);
  int head = col_head[best];
  for (int i = nodes[head].d; i != head; i = nodes[i].d) {
    stack.push_back(nodes[i].row_id);
    for (int j = nodes[i].r; j != i; j = nodes[j].r) cover(nodes[j].col);
    bool done = search(stack, counter, cap, out);
    for (int j = nodes[i].l; j != i; j = nodes[j].l) uncover(nodes[j].col);
    stack.pop_back();
    if (done) {
      uncover(best);
      return true;
    }
  }
  uncover(best);
  return false;
}

std::optional<std::vector<int>> ExactCover::find() {
  std::vector<int> stack, out;
  if (search(stack, nullptr, 0, &out)) return out;
  return std::nullopt;
}

long long ExactCover::count(long long cap) {
  std::vector<int> stack;
  long long counter = 0;
  search(stack, &counter, cap, nullptr);
  return counter;
}

}  // namespace caykit
