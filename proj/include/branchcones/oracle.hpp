#pragma once

// Character-theoretic ground truth. Nothing here touches cones, trails or
// BZ triangles: multiplicities come from Freudenthal's recursion, the Weyl
// dimension formula and Brauer-Klimyk orbit summation.

#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "branchcones/rootsys.hpp"

namespace branchcones {

using BigInt = boost::multiprecision::cpp_int;

struct WeightMultiset {
  std::map<Weight, BigInt> entries;  // only positive multiplicities

  BigInt total() const;
  BigInt multiplicity(const Weight& w) const;
};

/// Character of the irreducible module of highest weight `highest` for the
/// Levi subalgebra with simple roots `subset`, as full torus weights.
/// Requires a symmetric Cartan matrix and `highest` dominant on `subset`.
WeightMultiset levi_character(const RootSystem& rs, const SimpleSet& subset, const Weight& highest);

WeightMultiset weight_multiplicities(const RootSystem& rs, const Weight& lambda);
BigInt irrep_dimension(const RootSystem& rs, const Weight& lambda);

/// Full decomposition of V(lambda) (x) V(beta): highest weight -> multiplicity.
std::map<Weight, BigInt> tensor_decomposition(const RootSystem& rs, const Weight& lambda, const Weight& beta);
/// dim Hom_G(V(mu), V(lambda) (x) V(beta)).
BigInt tensor_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& beta, const Weight& mu);
/// dim (V(l1) (x) V(l2) (x) V(l3))^G.
BigInt triple_invariant_dim(const RootSystem& rs, const Weight& l1, const Weight& l2, const Weight& l3);

/// Restriction of V(lambda) to the Levi with simple roots `subset`: (eta, multiplicity)
/// in extraction order (each eta maximal among the remaining weights).
std::vector<std::pair<Weight, BigInt>> levi_branching(const RootSystem& rs, const SimpleSet& subset,
                                                      const Weight& lambda);
BigInt levi_dimension(const RootSystem& rs, const SimpleSet& subset, const Weight& eta);

/// dim Hom_G(V(l_0), V(l_1) (x) ... (x) V(l_n)); `lambdas` = (l_0, l_1, ..., l_n), n >= 1.
BigInt multi_tensor_invariant_dim(const RootSystem& rs, const std::vector<Weight>& lambdas);

}  // namespace branchcones
