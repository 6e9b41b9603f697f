#pragma once

// Root data and Weyl-group words for (mainly) type A.
//
// Weights are integer vectors in the fundamental-weight basis: coordinate j
// (0-based storage) is the coefficient of omega_{j+1}. Simple-root indices in
// the public API are 1-based, matching the usual reduced-word notation
// s_{i_1} s_{i_2} ... s_{i_L}.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace branchcones {

using Rational = boost::rational<std::int64_t>;

class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  static Weight zero(int rank);
  /// omega_j, 1-based.
  static Weight fundamental(int rank, int j);

  int rank() const { return static_cast<int>(coords_.size()); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  std::span<const std::int64_t> coords() const { return coords_; }
  const std::vector<std::int64_t>& vec() const { return coords_; }

  bool is_dominant() const;
  std::int64_t coordinate_sum() const;
  /// Coordinate reversal: the highest weight of the dual representation in type A.
  Weight reversed() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a);
  friend Weight operator*(std::int64_t k, Weight a);

  auto operator<=>(const Weight&) const = default;

 private:
  std::vector<std::int64_t> coords_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);
std::string to_string(const Weight& w);
/// Parses "1,0,2" (commas, optional spaces). Throws InvalidArgument.
Weight parse_weight(const std::string& text);

struct ReducedWord {
  std::vector<int> letters;  // simple indices, 1-based

  std::size_t length() const { return letters.size(); }
  auto operator<=>(const ReducedWord&) const = default;
};

std::string to_string(const ReducedWord& w);
ReducedWord parse_word(const std::string& text);

using SimpleSet = std::set<int>;  // 1-based simple indices

/// Cartan data plus the positive roots, in both simple-root and
/// fundamental-weight coordinates. Immutable after construction.
class RootSystem {
 public:
  /// Any finite-type Cartan matrix; a_{ij} = <alpha_j, alpha_i^vee>.
  explicit RootSystem(std::vector<std::vector<std::int64_t>> cartan);

  int rank() const { return rank_; }
  std::int64_t cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }  // 1-based
  const std::vector<std::vector<std::int64_t>>& cartan_matrix() const { return cartan_; }
  bool is_type_a() const { return type_a_; }
  bool is_symmetric() const;
  std::size_t n_positive_roots() const { return positive_roots_.size(); }

  /// Positive roots as nonnegative coefficient vectors over the simple roots.
  const std::vector<std::vector<std::int64_t>>& positive_roots() const { return positive_roots_; }
  /// alpha_i in fundamental-weight coordinates (column i of the Cartan matrix).
  Weight simple_root(int i) const;
  /// sum_j c_j alpha_j in fundamental-weight coordinates.
  Weight root_weight(std::span<const std::int64_t> simple_coeffs) const;
  Weight rho() const { return Weight(std::vector<std::int64_t>(rank_, 1)); }
  /// Lexicographically smallest reduced word of w0.
  const ReducedWord& longest_word() const { return longest_; }

  bool operator==(const RootSystem& o) const { return cartan_ == o.cartan_; }

 private:
  int rank_;
  std::vector<std::vector<std::int64_t>> cartan_;
  std::vector<std::vector<std::int64_t>> positive_roots_;
  ReducedWord longest_;
  bool type_a_;
};

RootSystem build_root_system(int rank);

std::int64_t coroot_pairing(const RootSystem& rs, int alpha_index, const Weight& w);
Weight simple_reflection(const RootSystem& rs, int index, const Weight& w);
/// s_{i_1} ... s_{i_L} (w): the last letter acts first.
Weight apply_word(const RootSystem& rs, const ReducedWord& word, const Weight& w);
/// w0(w) computed from the canonical longest word.
Weight apply_longest(const RootSystem& rs, const Weight& w);
/// Highest weight of V(lambda)^*, i.e. -w0(lambda).
Weight dual_weight(const RootSystem& rs, const Weight& lambda);

/// Dominant representative of the W_I-orbit of w (I empty means the identity).
/// `reflections` receives the number of simple reflections used.
Weight dominant_conjugate(const RootSystem& rs, const SimpleSet& subset, const Weight& w,
                          int* reflections = nullptr);

bool validate_reduced_word(const RootSystem& rs, const ReducedWord& word);
bool is_longest_word(const RootSystem& rs, const ReducedWord& word);
/// Reduced word of w0(I) in the parabolic subgroup W_I, lexicographically smallest.
ReducedWord longest_element_word(const RootSystem& rs, const SimpleSet& subset);
/// Every reduced word of w0, in lexicographic order.
std::vector<ReducedWord> all_longest_words(const RootSystem& rs);

/// Factorization w0 = w0(I) * (w0(I)^{-1} w0); each factor lexicographically smallest.
struct LeviWords {
  ReducedWord levi;     // i1, reduced for w0(I)
  ReducedWord coset;    // i2, reduced for w0(I)^{-1} w0
};
LeviWords levi_adapted_words(const RootSystem& rs, const SimpleSet& subset);

/// Coefficients c with w = sum_j c_j alpha_j (exact; rational in general).
std::vector<Rational> simple_root_coordinates(const RootSystem& rs, const Weight& w);
bool dominance_leq(const RootSystem& rs, const Weight& a, const Weight& b);

SimpleSet all_simple(const RootSystem& rs);

}  // namespace branchcones
