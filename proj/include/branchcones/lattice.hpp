#pragma once

// Exact lattice-point enumeration in bounded slices of cones.
//
// A slice fixes some coordinate blocks of a ConeH; the remaining (free)
// coordinates live in a polytope given by integer rows b + <a, x> >= 0 and
// b + <a, x> = 0. Boundedness is certified with interval propagation and,
// for coordinates propagation cannot bound, Fourier-Motzkin projection.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "branchcones/cones.hpp"
#include "branchcones/rootsys.hpp"

namespace branchcones {

using Assignment = std::map<std::string, std::vector<std::int64_t>>;
Assignment to_assignment(const std::map<std::string, Weight>& weights);

struct Bounds {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

struct Polytope {
  std::size_t dimension = 0;  // number of free coordinates
  /// Rows [b, a_1, ..., a_d]: b + <a, x> >= 0 (resp. = 0).
  std::vector<std::vector<std::int64_t>> inequalities;
  std::vector<std::vector<std::int64_t>> equalities;
  /// Certified integer bounds per free coordinate (meaningless when empty).
  std::vector<Bounds> bounds;
  bool empty = false;

  /// Provenance: cone coordinate of each free coordinate, and the fixed values.
  std::vector<std::size_t> free_coords;
  std::vector<std::int64_t> base;  // full cone point with fixed blocks filled, zeros elsewhere
  Assignment fixed;

  bool satisfies(std::span<const std::int64_t> x) const;
  /// Free-coordinate point -> full cone point.
  std::vector<std::int64_t> lift(std::span<const std::int64_t> x) const;
};

Polytope slice(const ConeH& cone, const Assignment& fixed);
Polytope slice(const ConeH& cone, const std::map<std::string, Weight>& fixed);

/// BRANCHCONES_POINT_CAP if set to a positive integer, else 10^7.
std::uint64_t default_point_cap();

struct EnumOptions {
  std::uint64_t point_cap = default_point_cap();
  unsigned threads = 1;
};

/// All lattice points (free coordinates), lexicographically sorted.
std::vector<std::vector<std::int64_t>> enumerate_points(const Polytope& p, const EnumOptions& options = {});
std::uint64_t count_points(const Polytope& p, const EnumOptions& options = {});

}  // namespace branchcones
