#include "branchcones/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <tuple>

#include "branchcones/errors.hpp"

namespace branchcones {

BigInt WeightMultiset::total() const {
  BigInt sum = 0;
  for (const auto& [w, m] : entries) sum += m;
  return sum;
}

BigInt WeightMultiset::multiplicity(const Weight& w) const {
  auto it = entries.find(w);
  return it == entries.end() ? BigInt(0) : it->second;
}

namespace {

using Cartan = std::vector<std::vector<std::int64_t>>;

void require_symmetric(const RootSystem& rs) {
  if (!rs.is_symmetric()) throw Unsupported("character oracle needs a symmetric (simply-laced) Cartan matrix");
}

void require_dominant(const RootSystem& rs, const Weight& w, const char* name) {
  if (w.rank() != rs.rank()) throw InvalidArgument(std::string(name) + ": rank mismatch");
  if (!w.is_dominant()) throw InvalidArgument(std::string(name) + " must be dominant, got " + to_string(w));
}

// Memo tables keyed by the Cartan matrix so distinct root systems never collide.
// Values are deterministic, so a racing recomputation is harmless.
template <class Key, class Value>
class Memo {
 public:
  template <class Fn>
  Value get(const Key& key, Fn&& compute) {
    {
      std::lock_guard lock(mu_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value v = compute();
    std::lock_guard lock(mu_);
    return table_.emplace(key, std::move(v)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<Key, Value> table_;
};

struct Level {
  Weight weight;
  std::vector<std::int64_t> depth;  // highest - weight = sum depth_j alpha_j
};

WeightMultiset freudenthal(const RootSystem& rs, const SimpleSet& subset, const Weight& highest) {
  const int r = rs.rank();
  std::vector<std::vector<std::int64_t>> roots;
  for (const auto& root : rs.positive_roots()) {
    bool inside = true;
    for (int j = 0; j < r; ++j)
      if (root[j] != 0 && !subset.count(j + 1)) inside = false;
    if (inside) roots.push_back(root);
  }

  auto is_dom = [&](const Weight& w) {
    for (int i : subset)
      if (w[i - 1] < 0) return false;
    return true;
  };

  std::map<Weight, BigInt> dominant_mult;
  auto lookup = [&](const Weight& w) -> BigInt {
    auto it = dominant_mult.find(dominant_conjugate(rs, subset, w));
    return it == dominant_mult.end() ? BigInt(0) : it->second;
  };

  WeightMultiset out;
  dominant_mult[highest] = 1;
  out.entries[highest] = 1;
  std::vector<Level> level{{highest, std::vector<std::int64_t>(r, 0)}};

  while (!level.empty()) {
    std::map<Weight, std::vector<std::int64_t>> next;
    for (const auto& [w, depth] : level) {
      for (int i : subset) {
        Weight child = w - rs.simple_root(i);
        if (next.count(child)) continue;
        auto d = depth;
        d[i - 1] += 1;
        next.emplace(std::move(child), std::move(d));
      }
    }
    // Dominant weights first: every other weight of this level is conjugate to a
    // dominant weight of strictly smaller depth.
    std::vector<Level> kept;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& [mu, depth] : next) {
        if (is_dom(mu) != (pass == 0)) continue;
        BigInt m;
        if (pass == 0) {
          BigInt numer = 0;
          for (const auto& root : roots) {
            for (std::int64_t k = 1;; ++k) {
              bool below_top = true;
              for (int j = 0; j < r; ++j)
                if (depth[j] - k * root[j] < 0) below_top = false;
              if (!below_top) break;
              Weight shifted = mu + k * rs.root_weight(root);
              BigInt mult = lookup(shifted);
              if (mult == 0) continue;
              std::int64_t inner = 0;
              for (int j = 0; j < r; ++j) inner += root[j] * shifted[j];
              numer += mult * inner;
            }
          }
          std::int64_t denom = 0;
          for (int j : subset) denom += depth[j - 1] * (highest[j - 1] + mu[j - 1] + 2);
          if (denom <= 0) throw InvariantBreach("Freudenthal denominator vanished at " + to_string(mu));
          BigInt twice = 2 * numer;
          if (twice % denom != 0) throw InvariantBreach("Freudenthal recursion gave a non-integer at " + to_string(mu));
          m = twice / denom;
          if (m > 0) dominant_mult[mu] = m;
        } else {
          m = lookup(mu);
        }
        if (m > 0) {
          out.entries[mu] = m;
          kept.push_back({mu, depth});
        }
      }
    }
    level = std::move(kept);
  }
  return out;
}

Memo<std::tuple<Cartan, std::vector<int>, Weight>, WeightMultiset>& character_memo() {
  static Memo<std::tuple<Cartan, std::vector<int>, Weight>, WeightMultiset> memo;
  return memo;
}

Memo<std::tuple<Cartan, Weight, Weight>, std::map<Weight, BigInt>>& tensor_memo() {
  static Memo<std::tuple<Cartan, Weight, Weight>, std::map<Weight, BigInt>> memo;
  return memo;
}

}  // namespace

WeightMultiset levi_character(const RootSystem& rs, const SimpleSet& subset, const Weight& highest) {
  require_symmetric(rs);
  if (highest.rank() != rs.rank()) throw InvalidArgument("highest weight rank mismatch");
  for (int i : subset) {
    if (i < 1 || i > rs.rank()) throw InvalidArgument("simple index out of range");
    if (highest[i - 1] < 0) throw InvalidArgument("highest weight must be dominant for the Levi");
  }
  std::tuple key{rs.cartan_matrix(), std::vector<int>(subset.begin(), subset.end()), highest};
  return character_memo().get(key, [&] { return freudenthal(rs, subset, highest); });
}

WeightMultiset weight_multiplicities(const RootSystem& rs, const Weight& lambda) {
  require_dominant(rs, lambda, "lambda");
  return levi_character(rs, all_simple(rs), lambda);
}

BigInt irrep_dimension(const RootSystem& rs, const Weight& lambda) {
  require_symmetric(rs);
  require_dominant(rs, lambda, "lambda");
  BigInt numer = 1, denom = 1;
  for (const auto& root : rs.positive_roots()) {
    std::int64_t top = 0, bottom = 0;
    for (int j = 0; j < rs.rank(); ++j) {
      top += root[j] * (lambda[j] + 1);
      bottom += root[j];
    }
    numer *= top;
    denom *= bottom;
  }
  if (numer % denom != 0) throw InvariantBreach("Weyl dimension formula gave a non-integer");
  return numer / denom;
}

std::map<Weight, BigInt> tensor_decomposition(const RootSystem& rs, const Weight& lambda, const Weight& beta) {
  require_dominant(rs, lambda, "lambda");
  require_dominant(rs, beta, "beta");
  std::tuple key{rs.cartan_matrix(), lambda, beta};
  return tensor_memo().get(key, [&] {
    const SimpleSet all = all_simple(rs);
    const Weight rho = rs.rho();
    std::map<Weight, BigInt> acc;
    for (const auto& [nu, mult] : weight_multiplicities(rs, lambda).entries) {
      int flips = 0;
      Weight d = dominant_conjugate(rs, all, nu + beta + rho, &flips);
      if (std::any_of(d.coords().begin(), d.coords().end(), [](std::int64_t c) { return c == 0; })) continue;
      acc[d - rho] += (flips % 2 ? -mult : mult);
    }
    std::map<Weight, BigInt> out;
    for (auto& [mu, m] : acc) {
      if (m < 0) throw InvariantBreach("Brauer-Klimyk produced a negative multiplicity at " + to_string(mu));
      if (m > 0) out.emplace(mu, m);
    }
    return out;
  });
}

BigInt tensor_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& beta, const Weight& mu) {
  require_dominant(rs, mu, "mu");
  auto dec = tensor_decomposition(rs, lambda, beta);
  auto it = dec.find(mu);
  return it == dec.end() ? BigInt(0) : it->second;
}

BigInt triple_invariant_dim(const RootSystem& rs, const Weight& l1, const Weight& l2, const Weight& l3) {
  require_dominant(rs, l3, "l3");
  return tensor_multiplicity(rs, l1, l2, dual_weight(rs, l3));
}

std::vector<std::pair<Weight, BigInt>> levi_branching(const RootSystem& rs, const SimpleSet& subset,
                                                      const Weight& lambda) {
  auto remaining = weight_multiplicities(rs, lambda).entries;
  auto height = [&](const Weight& w) {
    Rational h = 0;
    for (const auto& c : simple_root_coordinates(rs, lambda - w)) h += c;
    return h;
  };
  std::vector<std::pair<Weight, BigInt>> out;
  while (!remaining.empty()) {
    // A weight of minimal height is maximal in the Levi dominance order, hence a
    // highest weight of some Levi constituent.
    auto best = remaining.end();
    Rational best_h;
    for (auto it = remaining.begin(); it != remaining.end(); ++it) {
      Rational h = height(it->first);
      if (best == remaining.end() || h < best_h || (h == best_h && it->first > best->first)) {
        best = it;
        best_h = h;
      }
    }
    Weight eta = best->first;
    BigInt mult = best->second;
    for (int i : subset)
      if (eta[i - 1] < 0) throw InvariantBreach("Levi branching picked a non-dominant weight " + to_string(eta));
    for (const auto& [w, m] : levi_character(rs, subset, eta).entries) {
      auto it = remaining.find(w);
      if (it == remaining.end() || it->second < mult * m)
        throw InvariantBreach("Levi character subtraction went negative at " + to_string(w));
      it->second -= mult * m;
      if (it->second == 0) remaining.erase(it);
    }
    out.emplace_back(std::move(eta), std::move(mult));
  }
  return out;
}

BigInt levi_dimension(const RootSystem& rs, const SimpleSet& subset, const Weight& eta) {
  return levi_character(rs, subset, eta).total();
}

BigInt multi_tensor_invariant_dim(const RootSystem& rs, const std::vector<Weight>& lambdas) {
  if (lambdas.size() < 2) throw InvalidArgument("need (lambda_0; lambda_1, ..., lambda_n) with n >= 1");
  for (const auto& l : lambdas) require_dominant(rs, l, "lambda");
  std::map<Weight, BigInt> current{{lambdas[1], 1}};
  for (std::size_t i = 2; i < lambdas.size(); ++i) {
    std::map<Weight, BigInt> next;
    for (const auto& [mu, c] : current)
      for (const auto& [nu, d] : tensor_decomposition(rs, mu, lambdas[i])) next[nu] += c * d;
    current = std::move(next);
  }
  auto it = current.find(lambdas[0]);
  return it == current.end() ? BigInt(0) : it->second;
}

}  // namespace branchcones
