#include <algorithm>
#include <deque>
#include <sstream>

#include "branchcones/cones.hpp"
#include "branchcones/errors.hpp"

namespace branchcones {

Tree::Tree(std::vector<std::pair<int, int>> edges) {
  int max_vertex = -1;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0) throw InvalidArgument("tree vertices must be nonnegative");
    if (a == b) throw InvalidArgument("tree edge is a loop");
    max_vertex = std::max({max_vertex, a, b});
  }
  const int count = max_vertex + 1;
  if (count < 3 || static_cast<int>(edges.size()) != count - 1)
    throw InvalidArgument("a tree on vertices 0..V-1 needs exactly V-1 edges");

  adjacency_.assign(count, {});
  for (auto [a, b] : edges) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) throw InvalidArgument("repeated tree edge");
  }

  n_ = -1;
  for (int v = 0; v < count; ++v)
    if (adjacency_[v].size() == 1) n_ = v;
  for (int v = 0; v <= n_; ++v)
    if (adjacency_[v].size() != 1) throw InvalidArgument("leaves must be numbered 0..n below every internal vertex");
  if (n_ < 2) throw InvalidArgument("tree needs at least three leaves");
  for (int v = n_ + 1; v < count; ++v) {
    if (adjacency_[v].empty()) throw InvalidArgument("vertex " + std::to_string(v) + " is isolated");
    internal_.push_back(v);
  }

  // Orient away from leaf 0.
  parent_.assign(count, -1);
  children_.assign(count, {});
  std::vector<bool> seen(count, false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : adjacency_[v]) {
      if (seen[u]) continue;
      seen[u] = true;
      parent_[u] = v;
      children_[v].push_back(u);
      edge_children_.push_back(u);
      queue.push_back(u);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw InvalidArgument("tree is not connected");
  std::sort(edge_children_.begin(), edge_children_.end());
}

Tree Tree::parse(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos) throw InvalidArgument("tree edge '" + item + "' is not of the form a-b");
    try {
      std::size_t used_a = 0, used_b = 0;
      std::string a = item.substr(0, dash), b = item.substr(dash + 1);
      int va = std::stoi(a, &used_a), vb = std::stoi(b, &used_b);
      if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument("trailing");
      edges.emplace_back(va, vb);
    } catch (const std::logic_error&) {
      throw InvalidArgument("tree edge '" + item + "' is not of the form a-b");
    }
  }
  return Tree(std::move(edges));
}

bool Tree::is_trivalent() const {
  return std::all_of(internal_.begin(), internal_.end(), [&](int v) { return adjacency_[v].size() == 3; });
}

int Tree::leaf_edge(int leaf) const {
  if (leaf < 0 || leaf > n_) throw InvalidArgument("not a leaf: " + std::to_string(leaf));
  return leaf == 0 ? children_[0].front() : leaf;
}

std::string Tree::edge_name(int child) const {
  if (child <= 0 || child >= vertex_count()) throw InvalidArgument("no edge ends at vertex " + std::to_string(child));
  return "e" + std::to_string(parent_[child]) + "-" + std::to_string(child);
}

std::vector<int> Tree::leaves_below(int child) const {
  std::vector<int> out;
  std::vector<int> stack{child};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (is_leaf(v)) out.push_back(v);
    for (int c : children_[v]) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Tree::to_string() const {
  std::string out;
  for (int c : edge_children_) {
    if (!out.empty()) out += ',';
    out += std::to_string(parent_[c]) + "-" + std::to_string(c);
  }
  return out;
}

}  // namespace branchcones
