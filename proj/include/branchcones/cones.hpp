#pragma once

// Half-space descriptions of the string cone C(i), the tensor-product cone
// C3(i), the Levi branching cone C_L(i) and their fiber products over trees,
// plus coweight functionals and the face/degeneracy pullbacks acting on them.

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "branchcones/rootsys.hpp"

namespace branchcones {

enum class BlockKind { kWeight, kString };

struct Block {
  std::string name;
  BlockKind kind;
  std::size_t offset;
  std::size_t length;
};

/// A homogeneous constraint row: <row, x> >= 0 (or = 0 for equalities).
/// Rows are stored normalized: integer, primitive (gcd 1); equalities also
/// carry a positive leading coefficient.
using Row = std::vector<std::int64_t>;

class ConeH {
 public:
  std::size_t dimension() const { return dimension_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  bool has_block(std::string_view name) const;
  const Block& block(std::string_view name) const;

  const std::vector<Row>& inequalities() const { return inequalities_; }
  const std::vector<Row>& equalities() const { return equalities_; }

  bool contains(std::span<const std::int64_t> x) const;

  // Construction. Rows may be added with rational entries; finalize()
  // normalizes, removes duplicates and sorts.
  const Block& add_block(std::string name, BlockKind kind, std::size_t length);
  void add_inequality(const std::vector<Rational>& row);
  void add_equality(const std::vector<Rational>& row);
  void add_inequality(const Row& row);
  void add_equality(const Row& row);
  void finalize();

 private:
  std::size_t dimension_ = 0;
  std::vector<Block> blocks_;
  std::vector<Row> inequalities_;
  std::vector<Row> equalities_;
};

/// Orientation of the lambda-string bounds.
enum class StringBound {
  kAtMost,   // t_k <= <lambda, alpha_{i_k}^vee> - sum_{l>k} a_{i_l,i_k} t_l
  kAtLeast,  // t_k + sum_{l>k} a_{i_k,i_l} t_l >= <lambda, alpha_{i_k}^vee>
};

/// How the third weight of C3 is tied to the string.
enum class MuSign {
  kLambdaPlusBetaMinusRoots,  // mu = lambda + beta - sum t_k alpha_{i_k}
  kRootsMinusLambdaPlusBeta,  // mu = sum t_k alpha_{i_k} - lambda + beta
};

/// Right-hand side of the beta trail family of C3.
enum class BetaSign {
  kPlusBeta,   // sum d_k t_k + <beta, alpha_j^vee> >= 0
  kMinusBeta,  // sum d_k t_k - <beta, alpha_j^vee> >= 0
};

/// Defaults are the orientations that reproduce the character oracle.
struct ConeVariant {
  StringBound bound = StringBound::kAtMost;
  MuSign mu_sign = MuSign::kLambdaPlusBetaMinusRoots;
  BetaSign beta_sign = BetaSign::kPlusBeta;

  bool operator==(const ConeVariant&) const = default;
};

std::string to_string(StringBound v);
std::string to_string(MuSign v);
std::string to_string(BetaSign v);
StringBound parse_string_bound(const std::string& s);
MuSign parse_mu_sign(const std::string& s);
BetaSign parse_beta_sign(const std::string& s);

enum class TrailFamily {
  kHighestToLowered,  // omega_j -> w0 s_j omega_j (string cone)
  kLoweredToLowest,   // s_j omega_j -> w0 omega_j (beta family of C3)
};

/// The d-vector of every i-trail of the family in V(omega_j), over all j, as (j, d).
std::vector<std::pair<int, std::vector<Rational>>> trail_inequalities(const RootSystem& rs, const ReducedWord& word,
                                                                      TrailFamily family);

ConeH string_cone(const RootSystem& rs, const ReducedWord& word, const ConeVariant& variant = {});
ConeH triple_cone(const RootSystem& rs, const ReducedWord& word, const ConeVariant& variant = {});
ConeH levi_cone(const RootSystem& rs, const SimpleSet& subset, const ReducedWord& levi_word,
                const ReducedWord& coset_word, const ConeVariant& variant = {});
ConeH levi_cone(const RootSystem& rs, const SimpleSet& subset, const ConeVariant& variant = {});

/// Oriented tree with leaves 0..n and internal vertices n+1, n+2, ...; leaf 0
/// is the source. Every edge is identified by its child vertex.
class Tree {
 public:
  explicit Tree(std::vector<std::pair<int, int>> edges);
  /// "0-4,1-4,4-5,2-5,3-5"
  static Tree parse(const std::string& text);

  int n() const { return n_; }  // leaves are 0..n
  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  bool is_leaf(int v) const { return v <= n_; }
  bool is_trivalent() const;
  const std::vector<int>& internal_vertices() const { return internal_; }

  int parent(int v) const { return parent_.at(v); }
  const std::vector<int>& children(int v) const { return children_.at(v); }
  /// Child vertices, one per edge, ascending; edge ids are these vertices.
  const std::vector<int>& edge_children() const { return edge_children_; }
  /// The edge touching leaf `leaf` (leaf 0: its unique out-edge).
  int leaf_edge(int leaf) const;
  std::string edge_name(int child) const;
  std::vector<int> leaves_below(int child) const;
  std::string to_string() const;

  bool operator==(const Tree& o) const { return to_string() == o.to_string(); }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<int> internal_;
  std::vector<int> edge_children_;
};

/// Per internal vertex: missing entries use the lexicographically smallest longest word.
using TreeStrings = std::map<int, ReducedWord>;

ConeH tree_fiber_cone(const RootSystem& rs, const Tree& tree, const TreeStrings& strings = {},
                      const ConeVariant& variant = {});
std::string tree_string_block(int vertex);
/// Block assignment fixing every leaf edge: leaf i gets leaf_weights[i].
std::map<std::string, Weight> tree_leaf_assignment(const Tree& tree, const std::vector<Weight>& leaf_weights);

// ----------------------------------------------------------- coweights

/// Rational coweight in fundamental-coweight coordinates: coords[i] = <alpha_{i+1}, rho>.
struct Coweight {
  std::shared_ptr<const RootSystem> group;
  std::vector<Rational> coords;
};

struct CoweightTuple {
  std::vector<Coweight> slots;

  std::size_t size() const { return slots.size(); }
  bool in_dual_chamber() const;
  bool strictly_interior() const;
};

Rational coweight_value(const CoweightTuple& rho, const std::vector<Weight>& lambdas);
/// Inserts a zero coweight at `position` (1 <= position <= k for k+1 slots).
/// The new slot's group defaults to the group of slot position-1.
CoweightTuple face_pullback(const CoweightTuple& rho, std::size_t position,
                            std::shared_ptr<const RootSystem> group = nullptr);
/// Replaces slots (position, position+1) by their sum.
CoweightTuple degeneracy_pullback(const CoweightTuple& rho, std::size_t position);
/// d_*: deletes lambdas[position].
std::vector<Weight> face_pushforward(const std::vector<Weight>& lambdas, std::size_t position);
/// s_*: duplicates lambdas[position].
std::vector<Weight> degeneracy_pushforward(const std::vector<Weight>& lambdas, std::size_t position);

}  // namespace branchcones
