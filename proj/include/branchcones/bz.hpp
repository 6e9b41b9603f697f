#pragma once

// Berenstein-Zelevinsky triangles for SL_m and quilts of them over trees.
//
// Layout: the big triangle has m-1 small upward triangles per side. Upward
// triangle (r, p), r = 1..m-1 from the top and p = 1..r from the left, has
// corners top, left, right; these 3 m(m-1)/2 corners are the template
// vertices, stored in (r, p, corner) order. Between upward triangles (r, p),
// (r+1, p) and (r+1, p+1) sits one hexagon. Sides are read counter-clockwise:
// side 1 runs down the left edge, side 2 along the bottom left to right,
// side 3 up the right edge.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "branchcones/cones.hpp"
#include "branchcones/lattice.hpp"
#include "branchcones/rootsys.hpp"

namespace branchcones {

enum class Corner { kTop = 0, kLeft = 1, kRight = 2 };

struct BZVertex {
  int row;
  int position;
  Corner corner;
};

struct BZTemplate {
  static constexpr int kIndexScheme = 1;

  int m = 0;
  std::vector<BZVertex> vertices;
  /// Vertex indices around each hexagon in cyclic order; opposite sides are
  /// (h0,h1)|(h3,h4), (h1,h2)|(h4,h5), (h2,h3)|(h5,h0).
  std::vector<std::array<std::size_t, 6>> hexagons;
  /// sides[s][j] = the vertex pair on the j-th small triangle along side s+1.
  std::array<std::vector<std::pair<std::size_t, std::size_t>>, 3> sides;

  std::size_t index(int row, int position, Corner corner) const;
};

BZTemplate bz_template(int m);

struct BZFilling {
  std::vector<std::int64_t> values;  // one per template vertex

  auto operator<=>(const BZFilling&) const = default;
};

bool satisfies_hexagons(const BZTemplate& t, const BZFilling& f);
/// (lambda_1, lambda_2, lambda_3) read off the three sides. Throws InvalidFilling.
std::array<Weight, 3> boundary_weights(const BZTemplate& t, const BZFilling& f);

/// Cone with blocks l1, l2, l3 (rank m-1) and v (vertex values).
ConeH bz_cone(const BZTemplate& t);

/// Every filling with boundary (l1, l2, l3), in lexicographic order of values.
std::vector<BZFilling> enumerate_bz(const BZTemplate& t, const Weight& l1, const Weight& l2, const Weight& l3,
                                    const EnumOptions& options = {});
std::uint64_t count_bz(const BZTemplate& t, const Weight& l1, const Weight& l2, const Weight& l3,
                       const EnumOptions& options = {});

/// One BZ triangle per internal vertex v with boundary (dual(in-edge), out-edge 1, out-edge 2).
struct Quilt {
  std::map<int, Weight> edge_weights;  // by child vertex
  std::map<int, BZFilling> fillings;   // by internal vertex
};

struct QuiltCount {
  std::uint64_t count = 0;
  std::vector<Quilt> quilts;  // filled only when listing was requested
};

/// Leaf weights (lambda_0; lambda_1, ..., lambda_n) for SL_m on a trivalent tree.
QuiltCount enumerate_quilts(int m, const Tree& tree, const std::vector<Weight>& leaf_weights, bool list = false,
                            const EnumOptions& options = {});

/// Boundary of the triangle at internal vertex v for the given edge weights.
std::array<Weight, 3> quilt_vertex_boundary(const Tree& tree, int v, const std::map<int, Weight>& edge_weights);

}  // namespace branchcones
