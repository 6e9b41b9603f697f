#include "branchcones/cones.hpp"

#include <algorithm>
#include <numeric>

#include "branchcones/errors.hpp"
#include "branchcones/itrails.hpp"

namespace branchcones {

// ----------------------------------------------------------------- ConeH

bool ConeH::has_block(std::string_view name) const {
  return std::any_of(blocks_.begin(), blocks_.end(), [&](const Block& b) { return b.name == name; });
}

const Block& ConeH::block(std::string_view name) const {
  for (const auto& b : blocks_)
    if (b.name == name) return b;
  throw InvalidArgument("cone has no block named '" + std::string(name) + "'");
}

bool ConeH::contains(std::span<const std::int64_t> x) const {
  if (x.size() != dimension_) throw InvalidArgument("point dimension mismatch");
  auto dot = [&](const Row& r) {
    __int128 s = 0;
    for (std::size_t i = 0; i < dimension_; ++i) s += static_cast<__int128>(r[i]) * x[i];
    return s;
  };
  for (const auto& r : inequalities_)
    if (dot(r) < 0) return false;
  for (const auto& r : equalities_)
    if (dot(r) != 0) return false;
  return true;
}

const Block& ConeH::add_block(std::string name, BlockKind kind, std::size_t length) {
  if (has_block(name)) throw InvalidArgument("duplicate block name '" + name + "'");
  blocks_.push_back({std::move(name), kind, dimension_, length});
  dimension_ += length;
  for (auto& r : inequalities_) r.resize(dimension_, 0);
  for (auto& r : equalities_) r.resize(dimension_, 0);
  return blocks_.back();
}

namespace {

Row clear_denominators(const std::vector<Rational>& row) {
  std::int64_t l = 1;
  for (const auto& q : row) l = std::lcm(l, q.denominator());
  Row out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) out[i] = row[i].numerator() * (l / row[i].denominator());
  return out;
}

// Divides by the gcd; returns false for the zero row.
bool make_primitive(Row& r) {
  std::int64_t g = 0;
  for (auto v : r) g = std::gcd(g, v);
  if (g == 0) return false;
  for (auto& v : r) v /= g;
  return true;
}

}  // namespace

void ConeH::add_inequality(const std::vector<Rational>& row) { add_inequality(clear_denominators(row)); }
void ConeH::add_equality(const std::vector<Rational>& row) { add_equality(clear_denominators(row)); }

void ConeH::add_inequality(const Row& row) {
  if (row.size() != dimension_) throw InvalidArgument("inequality length does not match cone dimension");
  inequalities_.push_back(row);
}

void ConeH::add_equality(const Row& row) {
  if (row.size() != dimension_) throw InvalidArgument("equality length does not match cone dimension");
  equalities_.push_back(row);
}

void ConeH::finalize() {
  auto clean = [](std::vector<Row>& rows, bool canonical_sign) {
    std::vector<Row> kept;
    for (auto r : rows) {
      if (!make_primitive(r)) continue;
      if (canonical_sign) {
        auto lead = std::find_if(r.begin(), r.end(), [](std::int64_t v) { return v != 0; });
        if (*lead < 0)
          for (auto& v : r) v = -v;
      }
      kept.push_back(std::move(r));
    }
    std::sort(kept.begin(), kept.end(), std::greater<>());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    rows = std::move(kept);
  };
  clean(inequalities_, false);
  clean(equalities_, true);
}

// ----------------------------------------------------------- variants

std::string to_string(StringBound v) { return v == StringBound::kAtMost ? "at-most" : "at-least"; }
std::string to_string(MuSign v) {
  return v == MuSign::kLambdaPlusBetaMinusRoots ? "lambda+beta-roots" : "roots-lambda+beta";
}
std::string to_string(BetaSign v) { return v == BetaSign::kPlusBeta ? "plus" : "minus"; }

StringBound parse_string_bound(const std::string& s) {
  if (s == "at-most") return StringBound::kAtMost;
  if (s == "at-least") return StringBound::kAtLeast;
  throw InvalidArgument("string bound must be 'at-most' or 'at-least', got '" + s + "'");
}

MuSign parse_mu_sign(const std::string& s) {
  if (s == "lambda+beta-roots") return MuSign::kLambdaPlusBetaMinusRoots;
  if (s == "roots-lambda+beta") return MuSign::kRootsMinusLambdaPlusBeta;
  throw InvalidArgument("mu sign must be 'lambda+beta-roots' or 'roots-lambda+beta', got '" + s + "'");
}

BetaSign parse_beta_sign(const std::string& s) {
  if (s == "plus") return BetaSign::kPlusBeta;
  if (s == "minus") return BetaSign::kMinusBeta;
  throw InvalidArgument("beta sign must be 'plus' or 'minus', got '" + s + "'");
}

// ------------------------------------------------------------ builders

namespace {

template <class Source, class Target>
std::vector<std::pair<int, std::vector<Rational>>> collect_trails(const RootSystem& rs, const ReducedWord& word,
                                                                  Source&& source, Target&& target) {
  std::vector<std::pair<int, std::vector<Rational>>> out;
  for (int j = 1; j <= rs.rank(); ++j) {
    WeightDiagram diagram = minuscule_weight_diagram(rs, j);
    for (const auto& trail : enumerate_itrails(diagram, word, source(j), target(j)))
      out.emplace_back(j, d_vector(rs, trail));
  }
  return out;
}

void require_longest(const RootSystem& rs, const ReducedWord& word) {
  if (!rs.is_type_a()) throw Unsupported("cone construction needs i-trails, implemented for type A only");
  if (!is_longest_word(rs, word))
    throw InvalidArgument("word " + to_string(word) + " is not a reduced word for the longest element");
}

// Rational row of cone dimension with helpers for block-relative writes.
struct RowBuilder {
  std::vector<Rational> v;
  explicit RowBuilder(std::size_t dim) : v(dim, Rational(0)) {}
  void add(const Block& b, std::size_t k, Rational c) { v[b.offset + k] += c; }
};

void add_dominance(ConeH& cone, const Block& b) {
  for (std::size_t k = 0; k < b.length; ++k) {
    RowBuilder r(cone.dimension());
    r.add(b, k, 1);
    cone.add_inequality(r.v);
  }
}

void add_string_rows(ConeH& cone, const RootSystem& rs, const ReducedWord& word, const Block& lambda,
                     const Block& t, const ConeVariant& variant) {
  const std::size_t n = word.length();
  for (std::size_t k = 0; k < n; ++k) {
    RowBuilder nonneg(cone.dimension());
    nonneg.add(t, k, 1);
    cone.add_inequality(nonneg.v);

    const int ik = word.letters[k];
    RowBuilder r(cone.dimension());
    if (variant.bound == StringBound::kAtMost) {
      r.add(lambda, ik - 1, 1);
      r.add(t, k, -1);
      for (std::size_t l = k + 1; l < n; ++l) r.add(t, l, -rs.cartan(word.letters[l], ik));
    } else {
      r.add(lambda, ik - 1, -1);
      r.add(t, k, 1);
      for (std::size_t l = k + 1; l < n; ++l) r.add(t, l, rs.cartan(ik, word.letters[l]));
    }
    cone.add_inequality(r.v);
  }
}

void add_trail_rows(ConeH& cone, const Block& t, std::size_t t_shift,
                    const std::vector<std::pair<int, std::vector<Rational>>>& trails, const Block* beta = nullptr,
                    Rational beta_coeff = 0) {
  for (const auto& [j, d] : trails) {
    RowBuilder r(cone.dimension());
    for (std::size_t k = 0; k < d.size(); ++k) r.add(t, t_shift + k, d[k]);
    if (beta) r.add(*beta, j - 1, beta_coeff);
    cone.add_inequality(r.v);
  }
}

// derived = base_sign*lambda + other - sum t_k alpha_{i_k}, written as equality rows.
void add_weight_equalities(ConeH& cone, const RootSystem& rs, const ReducedWord& word, const Block& derived,
                           const Block& lambda, std::int64_t lambda_sign, const Block& t, std::int64_t root_sign,
                           const Block* other) {
  for (int c = 0; c < rs.rank(); ++c) {
    RowBuilder r(cone.dimension());
    r.add(derived, c, 1);
    r.add(lambda, c, -lambda_sign);
    if (other) r.add(*other, c, -1);
    for (std::size_t k = 0; k < word.length(); ++k) {
      std::int64_t a = rs.cartan(c + 1, word.letters[k]);  // (alpha_{i_k})_c
      if (a != 0) r.add(t, k, root_sign * a);
    }
    cone.add_equality(r.v);
  }
}

}  // namespace

std::vector<std::pair<int, std::vector<Rational>>> trail_inequalities(const RootSystem& rs, const ReducedWord& word,
                                                                      TrailFamily family) {
  const int r = rs.rank();
  if (family == TrailFamily::kHighestToLowered) {
    return collect_trails(
        rs, word, [&](int j) { return Weight::fundamental(r, j); },
        [&](int j) { return apply_longest(rs, simple_reflection(rs, j, Weight::fundamental(r, j))); });
  }
  return collect_trails(
      rs, word, [&](int j) { return simple_reflection(rs, j, Weight::fundamental(r, j)); },
      [&](int j) { return apply_longest(rs, Weight::fundamental(r, j)); });
}

ConeH string_cone(const RootSystem& rs, const ReducedWord& word, const ConeVariant& variant) {
  require_longest(rs, word);
  ConeH cone;
  cone.add_block("lambda", BlockKind::kWeight, rs.rank());
  cone.add_block("t", BlockKind::kString, word.length());
  const Block lambda = cone.block("lambda");
  const Block t = cone.block("t");

  add_dominance(cone, lambda);
  add_trail_rows(cone, t, 0, trail_inequalities(rs, word, TrailFamily::kHighestToLowered));
  add_string_rows(cone, rs, word, lambda, t, variant);
  cone.finalize();
  return cone;
}

ConeH triple_cone(const RootSystem& rs, const ReducedWord& word, const ConeVariant& variant) {
  require_longest(rs, word);
  ConeH cone;
  cone.add_block("lambda", BlockKind::kWeight, rs.rank());
  cone.add_block("t", BlockKind::kString, word.length());
  cone.add_block("beta", BlockKind::kWeight, rs.rank());
  cone.add_block("mu", BlockKind::kWeight, rs.rank());
  const Block lambda = cone.block("lambda");
  const Block t = cone.block("t");
  const Block beta = cone.block("beta");
  const Block mu = cone.block("mu");

  add_dominance(cone, lambda);
  add_dominance(cone, beta);
  add_dominance(cone, mu);
  add_trail_rows(cone, t, 0, trail_inequalities(rs, word, TrailFamily::kHighestToLowered));
  add_trail_rows(cone, t, 0, trail_inequalities(rs, word, TrailFamily::kLoweredToLowest), &beta,
                 variant.beta_sign == BetaSign::kPlusBeta ? 1 : -1);
  add_string_rows(cone, rs, word, lambda, t, variant);
  if (variant.mu_sign == MuSign::kLambdaPlusBetaMinusRoots)
    add_weight_equalities(cone, rs, word, mu, lambda, 1, t, 1, &beta);
  else
    add_weight_equalities(cone, rs, word, mu, lambda, -1, t, -1, &beta);
  cone.finalize();
  return cone;
}

ConeH levi_cone(const RootSystem& rs, const SimpleSet& subset, const ReducedWord& levi_word,
                const ReducedWord& coset_word, const ConeVariant& variant) {
  if (!rs.is_type_a()) throw Unsupported("cone construction needs i-trails, implemented for type A only");
  for (int i : subset)
    if (i < 1 || i > rs.rank()) throw InvalidArgument("Levi subset index out of range");

  std::size_t levi_roots = 0;
  for (const auto& root : rs.positive_roots()) {
    bool inside = true;
    for (int j = 0; j < rs.rank(); ++j)
      if (root[j] != 0 && !subset.count(j + 1)) inside = false;
    levi_roots += inside;
  }
  ReducedWord word = levi_word;
  word.letters.insert(word.letters.end(), coset_word.letters.begin(), coset_word.letters.end());
  bool adapted = levi_word.length() == levi_roots && validate_reduced_word(rs, levi_word) &&
                 std::all_of(levi_word.letters.begin(), levi_word.letters.end(),
                             [&](int i) { return subset.count(i) > 0; }) &&
                 is_longest_word(rs, word);
  if (!adapted) throw InvalidArgument("string not adapted to L: " + to_string(levi_word) + " + " + to_string(coset_word));

  ConeH cone;
  cone.add_block("lambda", BlockKind::kWeight, rs.rank());
  cone.add_block("t", BlockKind::kString, word.length());
  cone.add_block("eta", BlockKind::kWeight, rs.rank());
  const Block lambda = cone.block("lambda");
  const Block t = cone.block("t");
  const Block eta = cone.block("eta");
  const std::size_t head = levi_word.length();

  for (std::size_t k = 0; k < head; ++k) {
    RowBuilder r(cone.dimension());
    r.add(t, k, 1);
    cone.add_equality(r.v);
  }
  add_dominance(cone, lambda);
  for (int i : subset) {
    RowBuilder r(cone.dimension());
    r.add(eta, i - 1, 1);
    cone.add_inequality(r.v);
  }
  // Membership in C(i) and the coset-word trails from w0(I) omega_j.
  add_trail_rows(cone, t, 0, trail_inequalities(rs, word, TrailFamily::kHighestToLowered));
  const int r = rs.rank();
  add_trail_rows(cone, t, head,
                 collect_trails(
                     rs, coset_word, [&](int j) { return apply_word(rs, levi_word, Weight::fundamental(r, j)); },
                     [&](int j) { return apply_longest(rs, simple_reflection(rs, j, Weight::fundamental(r, j))); }));
  add_string_rows(cone, rs, word, lambda, t, variant);
  add_weight_equalities(cone, rs, word, eta, lambda, 1, t, 1, nullptr);
  cone.finalize();
  return cone;
}

ConeH levi_cone(const RootSystem& rs, const SimpleSet& subset, const ConeVariant& variant) {
  auto words = levi_adapted_words(rs, subset);
  return levi_cone(rs, subset, words.levi, words.coset, variant);
}

std::string tree_string_block(int vertex) { return "t" + std::to_string(vertex); }

ConeH tree_fiber_cone(const RootSystem& rs, const Tree& tree, const TreeStrings& strings, const ConeVariant& variant) {
  if (!tree.is_trivalent()) throw Unsupported("tree_fiber_cone needs a trivalent tree");
  for (const auto& [v, w] : strings)
    if (v <= tree.n() || v >= tree.vertex_count()) throw InvalidArgument("string given for a non-internal vertex");

  ConeH cone;
  for (int child : tree.edge_children()) cone.add_block(tree.edge_name(child), BlockKind::kWeight, rs.rank());
  for (int v : tree.internal_vertices())
    cone.add_block(tree_string_block(v), BlockKind::kString, rs.n_positive_roots());

  for (int v : tree.internal_vertices()) {
    auto it = strings.find(v);
    const ReducedWord& word = it == strings.end() ? rs.longest_word() : it->second;
    ConeH local = triple_cone(rs, word, variant);

    const auto& kids = tree.children(v);
    std::vector<std::size_t> column(local.dimension());
    auto map_block = [&](const std::string& from, const std::string& to) {
      const Block& src = local.block(from);
      const Block& dst = cone.block(to);
      for (std::size_t k = 0; k < src.length; ++k) column[src.offset + k] = dst.offset + k;
    };
    map_block("lambda", tree.edge_name(kids[0]));
    map_block("beta", tree.edge_name(kids[1]));
    map_block("mu", tree.edge_name(v));
    map_block("t", tree_string_block(v));

    auto remap = [&](const Row& row) {
      Row out(cone.dimension(), 0);
      for (std::size_t k = 0; k < row.size(); ++k) out[column[k]] += row[k];
      return out;
    };
    for (const auto& row : local.inequalities()) cone.add_inequality(remap(row));
    for (const auto& row : local.equalities()) cone.add_equality(remap(row));
  }
  cone.finalize();
  return cone;
}

std::map<std::string, Weight> tree_leaf_assignment(const Tree& tree, const std::vector<Weight>& leaf_weights) {
  if (static_cast<int>(leaf_weights.size()) != tree.n() + 1)
    throw InvalidArgument("need one weight per leaf (" + std::to_string(tree.n() + 1) + ")");
  std::map<std::string, Weight> out;
  for (int leaf = 0; leaf <= tree.n(); ++leaf) out[tree.edge_name(tree.leaf_edge(leaf))] = leaf_weights[leaf];
  return out;
}

}  // namespace branchcones
