#pragma once

// Generators and brute-force references shared by the tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "branchcones/rootsys.hpp"

namespace testing_support {

using branchcones::Weight;

/// Dominant weights of the given rank with coordinate sum <= total, in lexicographic order.
inline std::vector<Weight> dominant_weights(int rank, std::int64_t total) {
  std::vector<Weight> out;
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
  std::sort(out.begin(), out.end());
  return out;
}

/// Weights with every coordinate in [lo, hi].
inline std::vector<Weight> box_weights(int rank, std::int64_t lo, std::int64_t hi) {
  std::vector<Weight> out;
  Weight w = Weight::zero(rank);
  auto rec = [&](auto&& self, int k) -> void {
    if (k == rank) {
      out.push_back(w);
      return;
    }
    for (std::int64_t c = lo; c <= hi; ++c) {
      w[k] = c;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

inline Weight random_weight(std::mt19937& rng, int rank, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> d(lo, hi);
  Weight w = Weight::zero(rank);
  for (int i = 0; i < rank; ++i) w[i] = d(rng);
  return w;
}

/// Weyl group of A_r as permutations of 0..r; s_i swaps i-1 and i.
inline std::vector<int> permutation_of(const branchcones::ReducedWord& word, int rank) {
  std::vector<int> p(rank + 1);
  std::iota(p.begin(), p.end(), 0);
  for (int letter : word.letters) std::swap(p[letter - 1], p[letter]);
  return p;
}

inline int inversions(const std::vector<int>& p) {
  int n = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) n += p[i] > p[j];
  return n;
}

/// Number of Gelfand-Tsetlin patterns with top row given by the partition of lambda.
/// Independent of every character formula in the library.
inline std::uint64_t gelfand_tsetlin_count(const Weight& lambda) {
  const int n = lambda.rank() + 1;
  std::vector<std::int64_t> top(n, 0);
  for (int i = n - 2; i >= 0; --i) top[i] = top[i + 1] + lambda[i];
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, const std::vector<std::int64_t>& row) -> void {
    if (row.size() == 1) {
      ++count;
      return;
    }
    std::vector<std::int64_t> next(row.size() - 1);
    auto fill = [&](auto&& again, std::size_t k) -> void {
      if (k == next.size()) {
        self(self, next);
        return;
      }
      for (std::int64_t v = row[k + 1]; v <= row[k]; ++v) {
        next[k] = v;
        again(again, k + 1);
      }
    };
    fill(fill, 0);
  };
  rec(rec, top);
  return count;
}

}  // namespace testing_support
