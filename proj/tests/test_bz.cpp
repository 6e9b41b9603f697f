#include <random>

#include "doctest.h"

#include "branchcones/bz.hpp"
#include "branchcones/errors.hpp"
#include "branchcones/io.hpp"
#include "branchcones/oracle.hpp"
#include "support.hpp"

using namespace branchcones;
using namespace testing_support;

namespace {

bool hexagons_balanced(const BZTemplate& t, const std::vector<std::int64_t>& v) {
  for (const auto& h : t.hexagons)
    for (int s = 0; s < 3; ++s)
      if (v[h[s]] + v[h[s + 1]] != v[h[s + 3]] + v[h[(s + 4) % 6]]) return false;
  return true;
}

std::array<Weight, 3> read_sides(const BZTemplate& t, const std::vector<std::int64_t>& v) {
  std::array<Weight, 3> out;
  for (int s = 0; s < 3; ++s) {
    std::vector<std::int64_t> c;
    for (auto [a, b] : t.sides[s]) c.push_back(v[a] + v[b]);
    out[s] = Weight(c);
  }
  return out;
}

}  // namespace

TEST_CASE("templates") {
  const std::size_t vertices[] = {0, 0, 3, 9, 18, 30};
  const std::size_t hexagons[] = {0, 0, 0, 1, 3, 6};
  for (int m = 2; m <= 5; ++m) {
    auto t = bz_template(m);
    CHECK(t.m == m);
    CHECK(t.vertices.size() == vertices[m]);
    CHECK(t.hexagons.size() == hexagons[m]);
    for (const auto& side : t.sides) CHECK(side.size() == std::size_t(m - 1));
    for (std::size_t k = 0; k < t.vertices.size(); ++k) {
      const auto& v = t.vertices[k];
      CHECK(t.index(v.row, v.position, v.corner) == k);
    }
  }
  CHECK_THROWS_AS(bz_template(1), InvalidArgument);
  CHECK_THROWS_AS(bz_template(3).index(3, 1, Corner::kTop), InvalidArgument);
}

TEST_CASE("boundary weights") {
  auto t2 = bz_template(2);
  auto b = boundary_weights(t2, BZFilling{{1, 2, 3}});
  CHECK(b[0] == Weight{3});
  CHECK(b[1] == Weight{5});
  CHECK(b[2] == Weight{4});

  auto t3 = bz_template(3);
  auto zero = boundary_weights(t3, BZFilling{std::vector<std::int64_t>(9, 0)});
  for (const auto& w : zero) CHECK(w == Weight{0, 0});
  CHECK_THROWS_AS(boundary_weights(t3, BZFilling{{1, 2, 3}}), InvalidFilling);
  CHECK_THROWS_AS(boundary_weights(t2, BZFilling{{-1, 2, 3}}), InvalidFilling);

  std::vector<std::int64_t> bad(9, 0);
  bad[t3.hexagons[0][0]] = 1;
  CHECK_FALSE(satisfies_hexagons(t3, BZFilling{bad}));
  CHECK_THROWS_AS(boundary_weights(t3, BZFilling{bad}), InvalidFilling);
}

TEST_CASE("counting fillings") {
  auto t2 = bz_template(2);
  CHECK(count_bz(t2, Weight{1}, Weight{1}, Weight{2}) == 1);
  CHECK(count_bz(t2, Weight{1}, Weight{1}, Weight{1}) == 0);
  auto t3 = bz_template(3);
  CHECK(count_bz(t3, Weight{1, 1}, Weight{1, 1}, Weight{1, 1}) == 2);
  CHECK_THROWS_AS(count_bz(t3, Weight{1, -1}, Weight{1, 1}, Weight{1, 1}), InvalidArgument);
  CHECK_THROWS_AS(count_bz(t3, Weight{1}, Weight{1, 1}, Weight{1, 1}), InvalidArgument);

  for (int m = 2; m <= 4; ++m) {
    auto t = bz_template(m);
    auto rs = build_root_system(m - 1);
    auto ws = dominant_weights(m - 1, m == 4 ? 1 : 2);
    for (const auto& a : ws)
      for (const auto& b : ws)
        for (const auto& c : ws) {
          auto fillings = enumerate_bz(t, a, b, c);
          CHECK(BigInt(fillings.size()) == triple_invariant_dim(rs, a, b, c));
          CHECK(std::is_sorted(fillings.begin(), fillings.end()));
          for (const auto& f : fillings) {
            auto sides = boundary_weights(t, f);
            CHECK(sides[0] == a);
            CHECK(sides[1] == b);
            CHECK(sides[2] == c);
          }
        }
  }
}

TEST_CASE("m = 3 fillings match a brute-force search") {
  auto t = bz_template(3);
  const std::int64_t cap = 2;
  std::map<std::array<Weight, 3>, std::size_t> brute;
  std::vector<std::int64_t> v(9, 0);
  while (true) {
    if (hexagons_balanced(t, v)) ++brute[read_sides(t, v)];
    std::size_t k = 0;
    while (k < v.size() && v[k] == cap) v[k++] = 0;
    if (k == v.size()) break;
    ++v[k];
  }
  REQUIRE(brute.size() > 20);
  for (const auto& [sides, n] : brute) {
    std::size_t small = 0;
    for (const auto& f : enumerate_bz(t, sides[0], sides[1], sides[2]))
      small += *std::max_element(f.values.begin(), f.values.end()) <= cap;
    CHECK(small == n);
  }
}

TEST_CASE("fillings add") {
  auto t = bz_template(3);
  std::vector<BZFilling> all;
  for (const auto& a : dominant_weights(2, 2))
    for (const auto& b : dominant_weights(2, 2))
      for (const auto& c : dominant_weights(2, 2))
        for (const auto& f : enumerate_bz(t, a, b, c)) all.push_back(f);
  std::mt19937 rng(31);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int s = 0; s < 200; ++s) {
    const auto& f = all[pick(rng)];
    const auto& g = all[pick(rng)];
    BZFilling h{f.values};
    for (std::size_t k = 0; k < h.values.size(); ++k) h.values[k] += g.values[k];
    CHECK(satisfies_hexagons(t, h));
    auto bf = boundary_weights(t, f), bg = boundary_weights(t, g), bh = boundary_weights(t, h);
    for (int k = 0; k < 3; ++k) CHECK(bh[k] == bf[k] + bg[k]);
  }
}

TEST_CASE("quilts") {
  Tree tripod = Tree::parse("0-3,1-3,2-3");
  auto t3 = bz_template(3);
  for (const auto& a : dominant_weights(2, 2))
    for (const auto& b : dominant_weights(2, 2))
      for (const auto& c : dominant_weights(2, 2)) {
        auto q = enumerate_quilts(3, tripod, {a, b, c});
        auto boundary = quilt_vertex_boundary(tripod, 3, {{1, b}, {2, c}, {3, a}});
        CHECK(q.count == count_bz(t3, boundary[0], boundary[1], boundary[2]));
      }

  for (const char* text : {"0-4,1-4,4-5,2-5,3-5", "0-4,2-4,4-5,1-5,3-5"}) {
    Tree tree = Tree::parse(text);
    CHECK(enumerate_quilts(2, tree, {Weight{2}, Weight{1}, Weight{1}, Weight{2}}).count == 2);
  }

  // Leaf 0 is the source; exchanging it with leaf k dualizes both weights.
  auto a2 = build_root_system(2);
  Tree cat = Tree::parse("0-4,1-4,4-5,2-5,3-5");
  std::mt19937 rng(37);
  for (int s = 0; s < 25; ++s) {
    std::vector<Weight> leaves;
    for (int k = 0; k < 4; ++k) leaves.push_back(random_weight(rng, 2, 0, 2));
    auto base = enumerate_quilts(3, cat, leaves).count;
    CHECK(BigInt(base) == multi_tensor_invariant_dim(a2, leaves));
    for (int k = 1; k <= 3; ++k) {
      auto swapped = leaves;
      swapped[0] = dual_weight(a2, leaves[k]);
      swapped[k] = dual_weight(a2, leaves[0]);
      CHECK(enumerate_quilts(3, cat, swapped).count == base);
    }
  }

  auto listed = enumerate_quilts(3, cat, {Weight{1, 1}, Weight{1, 1}, Weight{1, 1}, Weight{1, 1}}, true);
  CHECK(listed.quilts.size() == listed.count);
  CHECK(listed.count == std::uint64_t(multi_tensor_invariant_dim(a2, {Weight{1, 1}, Weight{1, 1}, Weight{1, 1}, Weight{1, 1}})));
  for (const auto& q : listed.quilts) {
    for (int v : cat.internal_vertices()) {
      auto expected = quilt_vertex_boundary(cat, v, q.edge_weights);
      auto got = boundary_weights(t3, q.fillings.at(v));
      CHECK(got == expected);
    }
    auto j = to_json(cat, t3, q);
    CHECK(j.at("fillings").size() == 2);
    CHECK(j.at("template").at("m") == 3);
  }
  CHECK_FALSE(enumerate_quilts(3, cat, {Weight{1, 1}, Weight{1, 1}, Weight{1, 1}, Weight{1, 1}}).quilts.size());

  CHECK_THROWS_AS(enumerate_quilts(3, Tree::parse("0-4,1-4,2-4,3-4"), {Weight{0, 0}, Weight{0, 0}, Weight{0, 0}, Weight{0, 0}}),
                  Unsupported);
  CHECK_THROWS_AS(enumerate_quilts(3, cat, {Weight{0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(enumerate_quilts(3, cat, {Weight{5, 5}, Weight{5, 5}, Weight{5, 5}, Weight{5, 5}}, false, EnumOptions{2, 1}),
                  ResourceLimit);
}
