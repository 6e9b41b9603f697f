#include "branchcones/bz.hpp"

#include <algorithm>

#include "branchcones/errors.hpp"

namespace branchcones {

std::size_t BZTemplate::index(int row, int position, Corner corner) const {
  if (row < 1 || row > m - 1 || position < 1 || position > row)
    throw InvalidArgument("no upward triangle at (" + std::to_string(row) + "," + std::to_string(position) + ")");
  std::size_t triangle = static_cast<std::size_t>((row - 1) * row / 2 + (position - 1));
  return 3 * triangle + static_cast<std::size_t>(corner);
}

BZTemplate bz_template(int m) {
  if (m < 2) throw InvalidArgument("BZ triangles need m >= 2");
  BZTemplate t;
  t.m = m;
  for (int r = 1; r <= m - 1; ++r)
    for (int p = 1; p <= r; ++p)
      for (Corner c : {Corner::kTop, Corner::kLeft, Corner::kRight}) t.vertices.push_back({r, p, c});

  for (int r = 1; r <= m - 2; ++r)
    for (int p = 1; p <= r; ++p) {
      t.hexagons.push_back({t.index(r, p, Corner::kLeft), t.index(r, p, Corner::kRight),
                            t.index(r + 1, p + 1, Corner::kTop), t.index(r + 1, p + 1, Corner::kLeft),
                            t.index(r + 1, p, Corner::kRight), t.index(r + 1, p, Corner::kTop)});
    }

  for (int r = 1; r <= m - 1; ++r) t.sides[0].emplace_back(t.index(r, 1, Corner::kTop), t.index(r, 1, Corner::kLeft));
  for (int p = 1; p <= m - 1; ++p)
    t.sides[1].emplace_back(t.index(m - 1, p, Corner::kLeft), t.index(m - 1, p, Corner::kRight));
  for (int r = m - 1; r >= 1; --r)
    t.sides[2].emplace_back(t.index(r, r, Corner::kRight), t.index(r, r, Corner::kTop));
  return t;
}

bool satisfies_hexagons(const BZTemplate& t, const BZFilling& f) {
  if (f.values.size() != t.vertices.size()) return false;
  for (const auto& h : t.hexagons) {
    auto v = [&](int k) { return f.values[h[k]]; };
    std::int64_t s = v(0) + v(1);
    if (v(3) + v(4) != s) return false;
    if (v(1) + v(2) != v(4) + v(5)) return false;
    if (v(2) + v(3) != v(5) + v(0)) return false;
  }
  return true;
}

std::array<Weight, 3> boundary_weights(const BZTemplate& t, const BZFilling& f) {
  if (f.values.size() != t.vertices.size())
    throw InvalidFilling("filling has " + std::to_string(f.values.size()) + " values, template has " +
                         std::to_string(t.vertices.size()) + " vertices");
  if (std::any_of(f.values.begin(), f.values.end(), [](std::int64_t v) { return v < 0; }))
    throw InvalidFilling("filling has a negative value");
  if (!satisfies_hexagons(t, f)) throw InvalidFilling("filling violates a hexagon condition");
  std::array<Weight, 3> out;
  for (int s = 0; s < 3; ++s) {
    Weight w = Weight::zero(t.m - 1);
    for (std::size_t j = 0; j < t.sides[s].size(); ++j) w[j] = f.values[t.sides[s][j].first] + f.values[t.sides[s][j].second];
    out[s] = std::move(w);
  }
  return out;
}

ConeH bz_cone(const BZTemplate& t) {
  ConeH cone;
  const std::size_t r = static_cast<std::size_t>(t.m - 1);
  const std::array<std::string, 3> names{"l1", "l2", "l3"};
  for (const auto& name : names) cone.add_block(name, BlockKind::kWeight, r);
  cone.add_block("v", BlockKind::kString, t.vertices.size());
  const std::size_t v0 = cone.block("v").offset;

  for (std::size_t k = 0; k < t.vertices.size(); ++k) {
    Row row(cone.dimension(), 0);
    row[v0 + k] = 1;
    cone.add_inequality(row);
  }
  for (const auto& h : t.hexagons) {
    for (int k = 0; k < 3; ++k) {
      Row row(cone.dimension(), 0);
      row[v0 + h[k]] += 1;
      row[v0 + h[(k + 1) % 6]] += 1;
      row[v0 + h[(k + 3) % 6]] -= 1;
      row[v0 + h[(k + 4) % 6]] -= 1;
      cone.add_equality(row);
    }
  }
  for (int s = 0; s < 3; ++s) {
    const Block& b = cone.block(names[s]);
    for (std::size_t j = 0; j < r; ++j) {
      Row row(cone.dimension(), 0);
      row[b.offset + j] = 1;
      row[v0 + t.sides[s][j].first] -= 1;
      row[v0 + t.sides[s][j].second] -= 1;
      cone.add_equality(row);
    }
  }
  cone.finalize();
  return cone;
}

namespace {

Polytope bz_slice(const BZTemplate& t, const Weight& l1, const Weight& l2, const Weight& l3) {
  for (const Weight* w : {&l1, &l2, &l3}) {
    if (w->rank() != t.m - 1) throw InvalidArgument("weight rank does not match SL_" + std::to_string(t.m));
    if (!w->is_dominant()) throw InvalidArgument("BZ boundary weights must be dominant, got " + to_string(*w));
  }
  return slice(bz_cone(t), std::map<std::string, Weight>{{"l1", l1}, {"l2", l2}, {"l3", l3}});
}

void dominant_weights_up_to(int rank, std::int64_t total, std::vector<Weight>& out) {
  Weight w = Weight::zero(rank);
  auto rec = [&](auto&& self, int k, std::int64_t left) -> void {
    if (k == rank) {
      out.push_back(w);
      return;
    }
    for (std::int64_t c = 0; c <= left; ++c) {
      w[k] = c;
      self(self, k + 1, left - c);
    }
    w[k] = 0;
  };
  rec(rec, 0, total);
}

}  // namespace

std::vector<BZFilling> enumerate_bz(const BZTemplate& t, const Weight& l1, const Weight& l2, const Weight& l3,
                                    const EnumOptions& options) {
  std::vector<BZFilling> out;
  for (auto& x : enumerate_points(bz_slice(t, l1, l2, l3), options)) out.push_back({std::move(x)});
  return out;
}

std::uint64_t count_bz(const BZTemplate& t, const Weight& l1, const Weight& l2, const Weight& l3,
                       const EnumOptions& options) {
  return count_points(bz_slice(t, l1, l2, l3), options);
}

std::array<Weight, 3> quilt_vertex_boundary(const Tree& tree, int v, const std::map<int, Weight>& edge_weights) {
  const auto& kids = tree.children(v);
  return {edge_weights.at(v).reversed(), edge_weights.at(kids[0]), edge_weights.at(kids[1])};
}

QuiltCount enumerate_quilts(int m, const Tree& tree, const std::vector<Weight>& leaf_weights, bool list,
                            const EnumOptions& options) {
  if (!tree.is_trivalent()) throw Unsupported("quilts need a trivalent tree");
  if (static_cast<int>(leaf_weights.size()) != tree.n() + 1)
    throw InvalidArgument("need one weight per leaf (" + std::to_string(tree.n() + 1) + ")");
  const BZTemplate t = bz_template(m);
  for (const auto& w : leaf_weights)
    if (w.rank() != m - 1 || !w.is_dominant()) throw InvalidArgument("leaf weights must be dominant for SL_" + std::to_string(m));

  std::map<int, Weight> edges;
  std::vector<int> internal_edges;
  std::int64_t total_sum = 0;
  for (const auto& w : leaf_weights) total_sum += w.coordinate_sum();
  for (int leaf = 0; leaf <= tree.n(); ++leaf) edges[tree.leaf_edge(leaf)] = leaf_weights[leaf];
  for (int c : tree.edge_children())
    if (!edges.count(c)) internal_edges.push_back(c);

  // Subtracting a positive root never raises the coordinate sum in type A, so
  // an internal edge weight is bounded by the leaf weights on either side.
  std::vector<std::vector<Weight>> candidates;
  for (int c : internal_edges) {
    std::int64_t below = 0;
    for (int leaf : tree.leaves_below(c)) below += leaf_weights[leaf].coordinate_sum();
    std::vector<Weight> ws;
    dominant_weights_up_to(m - 1, std::min(below, total_sum - below), ws);
    candidates.push_back(std::move(ws));
  }

  std::map<std::array<Weight, 3>, std::uint64_t> memo;
  auto vertex_count = [&](int v) {
    auto key = quilt_vertex_boundary(tree, v, edges);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    return memo[key] = count_bz(t, key[0], key[1], key[2], options);
  };

  QuiltCount result;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == internal_edges.size()) {
      std::uint64_t product = 1;
      for (int v : tree.internal_vertices()) {
        product *= vertex_count(v);
        if (product == 0) return;
      }
      result.count += product;
      if (result.count > options.point_cap)
        throw ResourceLimit("quilt count exceeds the cap of " + std::to_string(options.point_cap), options.point_cap);
      if (!list) return;
      // Cartesian product of the per-vertex fillings.
      std::vector<std::pair<int, std::vector<BZFilling>>> per_vertex;
      for (int v : tree.internal_vertices()) {
        auto b = quilt_vertex_boundary(tree, v, edges);
        per_vertex.emplace_back(v, enumerate_bz(t, b[0], b[1], b[2], options));
      }
      Quilt q;
      q.edge_weights = edges;
      auto expand = [&](auto&& again, std::size_t i) -> void {
        if (i == per_vertex.size()) {
          result.quilts.push_back(q);
          return;
        }
        for (const auto& f : per_vertex[i].second) {
          q.fillings[per_vertex[i].first] = f;
          again(again, i + 1);
        }
      };
      expand(expand, 0);
      return;
    }
    for (const auto& w : candidates[k]) {
      edges[internal_edges[k]] = w;
      self(self, k + 1);
    }
    edges.erase(internal_edges[k]);
  };
  rec(rec, 0);
  return result;
}

}  // namespace branchcones
