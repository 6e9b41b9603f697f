#include <algorithm>

#include "branchcones/cones.hpp"
#include "branchcones/errors.hpp"

namespace branchcones {

bool CoweightTuple::in_dual_chamber() const {
  return std::all_of(slots.begin(), slots.end(), [](const Coweight& c) {
    return std::all_of(c.coords.begin(), c.coords.end(), [](const Rational& q) { return q.numerator() >= 0; });
  });
}

bool CoweightTuple::strictly_interior() const {
  return std::all_of(slots.begin(), slots.end(), [](const Coweight& c) {
    return std::all_of(c.coords.begin(), c.coords.end(), [](const Rational& q) { return q.numerator() > 0; });
  });
}

Rational coweight_value(const CoweightTuple& rho, const std::vector<Weight>& lambdas) {
  if (rho.size() != lambdas.size())
    throw InvalidArgument("coweight tuple has " + std::to_string(rho.size()) + " slots but " +
                          std::to_string(lambdas.size()) + " weights were given");
  Rational value = 0;
  for (std::size_t s = 0; s < lambdas.size(); ++s) {
    const Coweight& c = rho.slots[s];
    if (!c.group) throw InvalidArgument("coweight slot has no group");
    if (static_cast<int>(c.coords.size()) != c.group->rank() || lambdas[s].rank() != c.group->rank())
      throw InvalidArgument("coweight slot " + std::to_string(s) + ": rank mismatch");
    auto alpha = simple_root_coordinates(*c.group, lambdas[s]);
    for (std::size_t j = 0; j < alpha.size(); ++j) value += alpha[j] * c.coords[j];
  }
  return value;
}

CoweightTuple face_pullback(const CoweightTuple& rho, std::size_t position, std::shared_ptr<const RootSystem> group) {
  const std::size_t k = rho.size() == 0 ? 0 : rho.size() - 1;
  if (position < 1 || position > k) throw InvalidArgument("face position must lie in 1..k");
  if (!group) group = rho.slots[position - 1].group;
  if (!group) throw InvalidArgument("face pullback needs a group for the inserted slot");
  CoweightTuple out = rho;
  out.slots.insert(out.slots.begin() + position, Coweight{group, std::vector<Rational>(group->rank(), Rational(0))});
  return out;
}

CoweightTuple degeneracy_pullback(const CoweightTuple& rho, std::size_t position) {
  if (position + 1 >= rho.size()) throw InvalidArgument("degeneracy position must lie in 0..k-1");
  const Coweight& a = rho.slots[position];
  const Coweight& b = rho.slots[position + 1];
  if (a.coords.size() != b.coords.size()) throw InvalidArgument("degeneracy pullback needs equal ranks");
  Coweight sum = a;
  for (std::size_t j = 0; j < sum.coords.size(); ++j) sum.coords[j] += b.coords[j];
  CoweightTuple out;
  for (std::size_t s = 0; s < rho.size(); ++s) {
    if (s == position) out.slots.push_back(sum);
    else if (s != position + 1) out.slots.push_back(rho.slots[s]);
  }
  return out;
}

std::vector<Weight> face_pushforward(const std::vector<Weight>& lambdas, std::size_t position) {
  if (position >= lambdas.size()) throw InvalidArgument("face position out of range");
  std::vector<Weight> out = lambdas;
  out.erase(out.begin() + position);
  return out;
}

std::vector<Weight> degeneracy_pushforward(const std::vector<Weight>& lambdas, std::size_t position) {
  if (position >= lambdas.size()) throw InvalidArgument("degeneracy position out of range");
  std::vector<Weight> out = lambdas;
  out.insert(out.begin() + position, lambdas[position]);
  return out;
}

}  // namespace branchcones
