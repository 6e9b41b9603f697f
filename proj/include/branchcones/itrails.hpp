#pragma once

// i-trails in the fundamental representations of type A.
//
// Every fundamental representation of SL_{r+1} is minuscule: weight spaces are
// one-dimensional and e_i acts on a weight vector either by zero or onto the
// weight vector one alpha_i higher. A raising-operator composition is then
// nonzero exactly when every unit step is an edge of the weight diagram, and
// step multiplicities never exceed one.

#include <map>
#include <vector>

#include "branchcones/rootsys.hpp"

namespace branchcones {

struct WeightDiagram {
  int rank = 0;
  int fundamental_index = 0;  // j in V(omega_j)
  std::vector<Weight> weights;  // sorted
  /// lower[i-1] maps w -> w - alpha_i whenever both are weights.
  std::vector<std::map<Weight, Weight>> lower;

  bool contains(const Weight& w) const;
  std::size_t edge_count() const;
};

struct ITrail {
  ReducedWord word;
  std::vector<Weight> weights;  // gamma_0 .. gamma_L
  std::vector<int> steps;       // c_1 .. c_L, each 0 or 1

  auto operator<=>(const ITrail&) const = default;
};

WeightDiagram minuscule_weight_diagram(const RootSystem& rs, int j);

/// All i-trails from gamma to eta, sorted by weight sequence.
std::vector<ITrail> enumerate_itrails(const WeightDiagram& diagram, const ReducedWord& word, const Weight& gamma,
                                      const Weight& eta);

/// d_k = (1/2) <gamma_{k-1} + gamma_k, alpha_{i_k}^vee>.
std::vector<Rational> d_vector(const RootSystem& rs, const ITrail& trail);

}  // namespace branchcones
