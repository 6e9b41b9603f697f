#include <numeric>
#include <random>

#include "doctest.h"

#include "branchcones/errors.hpp"
#include "branchcones/lattice.hpp"
#include "branchcones/oracle.hpp"
#include "support.hpp"

using namespace branchcones;
using namespace testing_support;

namespace {

std::uint64_t slice_count(const ConeH& cone, const std::map<std::string, Weight>& fixed) {
  return count_points(slice(cone, fixed));
}

std::int64_t row_gcd(const Row& row) {
  std::int64_t g = 0;
  for (auto v : row) g = std::gcd(g, v);
  return g;
}

}  // namespace

TEST_CASE("A1 string cone is 0 <= t <= lambda") {
  auto rs = build_root_system(1);
  ConeH cone = string_cone(rs, ReducedWord{{1}});
  CHECK(cone.dimension() == 2);
  CHECK(cone.block("lambda").offset == 0);
  CHECK(cone.block("t").offset == 1);
  for (std::int64_t l = -2; l <= 4; ++l)
    for (std::int64_t t = -2; t <= 5; ++t) {
      std::vector<std::int64_t> x{l, t};
      CHECK(cone.contains(x) == (t >= 0 && t <= l));
    }
  for (std::int64_t l = 0; l <= 6; ++l) CHECK(slice_count(cone, {{"lambda", Weight{l}}}) == std::uint64_t(l + 1));
}

TEST_CASE("string cone slices count dimensions") {
  auto a2 = build_root_system(2);
  for (const auto& word : all_longest_words(a2)) {
    ConeH cone = string_cone(a2, word);
    CHECK(slice_count(cone, {{"lambda", Weight{1, 0}}}) == 3);
    CHECK(slice_count(cone, {{"lambda", Weight{1, 1}}}) == 8);
    CHECK(slice_count(cone, {{"lambda", Weight{2, 1}}}) == 15);
  }
  auto a3 = build_root_system(3);
  for (const auto& word : all_longest_words(a3)) {
    ConeH cone = string_cone(a3, word);
    for (const auto& lambda : dominant_weights(3, 2))
      CHECK(slice_count(cone, {{"lambda", lambda}}) == gelfand_tsetlin_count(lambda));
  }
  CHECK_THROWS_AS(string_cone(a2, ReducedWord{{1, 2}}), InvalidArgument);
  CHECK_THROWS_AS(string_cone(a2, ReducedWord{{1, 1, 2}}), InvalidArgument);
  RootSystem b2({{2, -2}, {-1, 2}});
  CHECK_THROWS_AS(string_cone(b2, b2.longest_word()), Unsupported);
}

TEST_CASE("tensor cone slices") {
  auto a1 = build_root_system(1);
  ConeH c1 = triple_cone(a1, ReducedWord{{1}});
  CHECK(slice_count(c1, {{"lambda", Weight{1}}, {"beta", Weight{1}}, {"mu", Weight{2}}}) == 1);
  CHECK(slice_count(c1, {{"lambda", Weight{1}}, {"beta", Weight{1}}, {"mu", Weight{0}}}) == 1);
  CHECK(slice_count(c1, {{"lambda", Weight{1}}, {"beta", Weight{1}}, {"mu", Weight{1}}}) == 0);

  auto a2 = build_root_system(2);
  for (const auto& word : all_longest_words(a2)) {
    ConeH cone = triple_cone(a2, word);
    CHECK(slice_count(cone, {{"lambda", Weight{1, 1}}, {"beta", Weight{1, 1}}, {"mu", Weight{1, 1}}}) == 2);
    std::mt19937 rng(3);
    for (int s = 0; s < 20; ++s) {
      Weight l = random_weight(rng, 2, 0, 3), b = random_weight(rng, 2, 0, 3);
      CHECK(slice_count(cone, {{"lambda", l}, {"beta", b}, {"mu", l + b}}) == 1);
    }
  }
}

TEST_CASE("non-default orientations disagree with the oracle") {
  auto a2 = build_root_system(2);
  const Weight w10{1, 0}, w01{0, 1}, w00{0, 0}, w11{1, 1};

  ConeVariant mu;
  mu.mu_sign = MuSign::kRootsMinusLambdaPlusBeta;
  CHECK(slice_count(triple_cone(a2, a2.longest_word(), mu), {{"lambda", w10}, {"beta", w01}, {"mu", w00}}) !=
        std::uint64_t(tensor_multiplicity(a2, w10, w01, w00)));

  ConeVariant beta;
  beta.beta_sign = BetaSign::kMinusBeta;
  CHECK(slice_count(triple_cone(a2, a2.longest_word(), beta), {{"lambda", w11}, {"beta", w11}, {"mu", w11}}) != 2);

  ConeVariant bound;
  bound.bound = StringBound::kAtLeast;
  bool wrong = false;
  try {
    wrong = slice_count(string_cone(a2, a2.longest_word(), bound), {{"lambda", w11}}) != 8;
  } catch (const UnboundedRegion&) {
    wrong = true;
  }
  CHECK(wrong);

  CHECK(to_string(StringBound::kAtLeast) == "at-least");
  CHECK(parse_mu_sign(to_string(MuSign::kRootsMinusLambdaPlusBeta)) == MuSign::kRootsMinusLambdaPlusBeta);
  CHECK(parse_beta_sign("plus") == BetaSign::kPlusBeta);
  CHECK_THROWS_AS(parse_string_bound("sideways"), InvalidArgument);
}

TEST_CASE("cone structure") {
  for (int r = 1; r <= 3; ++r) {
    auto rs = build_root_system(r);
    for (const ConeH& cone : {string_cone(rs, rs.longest_word()), triple_cone(rs, rs.longest_word()), levi_cone(rs, {1})}) {
      std::vector<std::int64_t> origin(cone.dimension(), 0);
      CHECK(cone.contains(origin));

      std::size_t covered = 0;
      for (const auto& b : cone.blocks()) {
        CHECK(b.offset == covered);
        covered += b.length;
      }
      CHECK(covered == cone.dimension());

      std::set<Row> seen;
      for (const auto& row : cone.inequalities()) {
        CHECK(row.size() == cone.dimension());
        CHECK(row_gcd(row) == 1);
        CHECK(seen.insert(row).second);
      }
      for (const auto& row : cone.equalities()) {
        CHECK(row_gcd(row) == 1);
        auto lead = std::find_if(row.begin(), row.end(), [](auto v) { return v != 0; });
        REQUIRE(lead != row.end());
        CHECK(*lead > 0);
      }
    }
  }
  auto rs = build_root_system(2);
  CHECK_THROWS_AS(string_cone(rs, rs.longest_word()).block("beta"), InvalidArgument);
}

TEST_CASE("sums of lattice points stay in the tensor cone") {
  auto rs = build_root_system(2);
  ConeH cone = triple_cone(rs, ReducedWord{{2, 1, 2}});
  std::vector<std::vector<std::int64_t>> points;
  for (const auto& l : dominant_weights(2, 2))
    for (const auto& b : dominant_weights(2, 2))
      for (const auto& [mu, m] : tensor_decomposition(rs, l, b)) {
        auto p = slice(cone, {{"lambda", l}, {"beta", b}, {"mu", mu}});
        for (const auto& x : enumerate_points(p)) points.push_back(p.lift(x));
      }
  REQUIRE(points.size() > 10);
  std::mt19937 rng(17);
  std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
  for (int s = 0; s < 200; ++s) {
    const auto& x = points[pick(rng)];
    const auto& y = points[pick(rng)];
    std::vector<std::int64_t> sum(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) sum[i] = x[i] + y[i];
    CHECK(cone.contains(sum));
  }
}

TEST_CASE("Levi cones") {
  auto a2 = build_root_system(2);
  ConeH full = levi_cone(a2, {1, 2});
  for (const auto& lambda : dominant_weights(2, 3)) {
    auto p = slice(full, {{"lambda", lambda}});
    auto pts = enumerate_points(p);
    REQUIRE(pts.size() == 1);
    auto x = p.lift(pts[0]);
    const auto& t = full.block("t");
    for (std::size_t k = 0; k < t.length; ++k) CHECK(x[t.offset + k] == 0);
  }

  ConeH torus = levi_cone(a2, {});
  for (const auto& lambda : dominant_weights(2, 3))
    CHECK(BigInt(slice_count(torus, {{"lambda", lambda}})) == irrep_dimension(a2, lambda));

  auto a3 = build_root_system(3);
  for (const SimpleSet& subset : {SimpleSet{1}, SimpleSet{2}, SimpleSet{1, 3}, SimpleSet{1, 2}}) {
    ConeH cone = levi_cone(a3, subset);
    for (const auto& lambda : dominant_weights(3, 2))
      for (const auto& [eta, m] : levi_branching(a3, subset, lambda))
        CHECK(BigInt(slice_count(cone, {{"lambda", lambda}, {"eta", eta}})) == m);
  }

  CHECK_THROWS_AS(levi_cone(a2, {1}, ReducedWord{{2}}, ReducedWord{{1, 2}}), InvalidArgument);
  try {
    levi_cone(a2, {1}, ReducedWord{{2}}, ReducedWord{{1, 2}});
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("string not adapted to L") != std::string::npos);
  }
  CHECK_THROWS_AS(levi_cone(a2, {3}), InvalidArgument);
}

TEST_CASE("trees") {
  Tree t = Tree::parse("0-4,1-4,4-5,2-5,3-5");
  CHECK(t.n() == 3);
  CHECK(t.is_trivalent());
  CHECK(t.internal_vertices() == std::vector<int>{4, 5});
  CHECK(t.parent(5) == 4);
  CHECK(t.leaf_edge(0) == 4);
  CHECK(t.leaf_edge(2) == 2);
  CHECK(t.edge_name(5) == "e4-5");
  CHECK(t.leaves_below(5) == std::vector<int>{2, 3});
  CHECK(Tree::parse(t.to_string()) == t);

  CHECK_THROWS_AS(Tree::parse("0-3,1-3"), InvalidArgument);          // two leaves
  CHECK_THROWS_AS(Tree::parse("0-3,1-3,2-3,0-1"), InvalidArgument);  // cycle
  CHECK_THROWS_AS(Tree::parse("0-3,1-3,2-2"), InvalidArgument);
  CHECK_THROWS_AS(Tree::parse("0-3,1-3,x"), InvalidArgument);
  CHECK_THROWS_AS(Tree::parse("0-3,1-3,2-3,3-4"), InvalidArgument);  // leaf 4 out of order

  Tree star = Tree::parse("0-4,1-4,2-4,3-4");
  CHECK_FALSE(star.is_trivalent());
  CHECK_THROWS_AS(tree_fiber_cone(build_root_system(1), star), Unsupported);
}

TEST_CASE("tree fiber cones count invariants") {
  auto a1 = build_root_system(1);
  for (const char* text : {"0-4,1-4,4-5,2-5,3-5", "0-4,2-4,4-5,1-5,3-5"}) {
    Tree tree = Tree::parse(text);
    ConeH cone = tree_fiber_cone(a1, tree);
    CHECK(cone.has_block(tree_string_block(4)));
    std::vector<Weight> leaves{Weight{2}, Weight{1}, Weight{1}, Weight{2}};
    CHECK(slice_count(cone, tree_leaf_assignment(tree, leaves)) == 2);
  }

  // One internal vertex: the fiber cone is the tensor cone in disguise.
  auto a2 = build_root_system(2);
  Tree tripod = Tree::parse("0-3,1-3,2-3");
  for (const auto& word : all_longest_words(a2)) {
    ConeH cone = tree_fiber_cone(a2, tripod, {{3, word}});
    for (const auto& a : dominant_weights(2, 2))
      for (const auto& b : dominant_weights(2, 2))
        for (const auto& c : dominant_weights(2, 2))
          CHECK(BigInt(slice_count(cone, tree_leaf_assignment(tripod, {a, b, c}))) ==
                multi_tensor_invariant_dim(a2, {a, b, c}));
  }
  CHECK_THROWS_AS(tree_fiber_cone(a2, tripod, {{1, a2.longest_word()}}), InvalidArgument);
  CHECK_THROWS_AS(tree_leaf_assignment(tripod, {Weight{0, 0}}), InvalidArgument);
}
