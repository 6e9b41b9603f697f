#include "branchcones/itrails.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "branchcones/errors.hpp"

namespace branchcones {

bool WeightDiagram::contains(const Weight& w) const {
  return std::binary_search(weights.begin(), weights.end(), w);
}

std::size_t WeightDiagram::edge_count() const {
  std::size_t n = 0;
  for (const auto& m : lower) n += m.size();
  return n;
}

WeightDiagram minuscule_weight_diagram(const RootSystem& rs, int j) {
  if (!rs.is_type_a()) throw Unsupported("i-trails are implemented for type A only");
  if (j < 1 || j > rs.rank()) throw InvalidArgument("fundamental index out of range");

  const SimpleSet all = all_simple(rs);
  const Weight top = Weight::fundamental(rs.rank(), j);
  auto in_orbit = [&](const Weight& w) { return dominant_conjugate(rs, all, w) == top; };

  std::set<Weight> seen{top};
  std::deque<Weight> queue{top};
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rs.rank(); ++i) {
      Weight v = w - rs.simple_root(i);
      if (in_orbit(v) && seen.insert(v).second) queue.push_back(v);
    }
  }

  WeightDiagram d;
  d.rank = rs.rank();
  d.fundamental_index = j;
  d.weights.assign(seen.begin(), seen.end());
  d.lower.resize(rs.rank());
  for (const auto& w : d.weights)
    for (int i = 1; i <= rs.rank(); ++i) {
      Weight v = w - rs.simple_root(i);
      if (seen.count(v)) d.lower[i - 1].emplace(w, v);
    }
  return d;
}

std::vector<ITrail> enumerate_itrails(const WeightDiagram& diagram, const ReducedWord& word, const Weight& gamma,
                                      const Weight& eta) {
  std::vector<ITrail> out;
  if (!diagram.contains(gamma) || !diagram.contains(eta)) return out;
  for (int letter : word.letters)
    if (letter < 1 || letter > diagram.rank) throw InvalidArgument("word letter out of range");

  ITrail current;
  current.word = word;
  current.weights.push_back(gamma);
  auto dfs = [&](auto&& self, std::size_t k) -> void {
    const Weight here = current.weights.back();
    if (k == word.length()) {
      if (here == eta) out.push_back(current);
      return;
    }
    current.weights.push_back(here);
    current.steps.push_back(0);
    self(self, k + 1);
    current.weights.pop_back();
    current.steps.pop_back();

    const auto& edges = diagram.lower[word.letters[k] - 1];
    auto it = edges.find(here);
    if (it != edges.end()) {
      current.weights.push_back(it->second);
      current.steps.push_back(1);
      self(self, k + 1);
      current.weights.pop_back();
      current.steps.pop_back();
    }
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end(), [](const ITrail& a, const ITrail& b) { return a.weights < b.weights; });
  out.erase(std::unique(out.begin(), out.end(), [](const ITrail& a, const ITrail& b) { return a.weights == b.weights; }),
            out.end());
  return out;
}

std::vector<Rational> d_vector(const RootSystem& rs, const ITrail& trail) {
  if (trail.weights.size() != trail.word.length() + 1) throw InvalidArgument("malformed trail");
  std::vector<Rational> d;
  d.reserve(trail.word.length());
  for (std::size_t k = 0; k < trail.word.length(); ++k) {
    int i = trail.word.letters[k];
    std::int64_t twice = coroot_pairing(rs, i, trail.weights[k]) + coroot_pairing(rs, i, trail.weights[k + 1]);
    d.emplace_back(twice, 2);
  }
  return d;
}

}  // namespace branchcones
