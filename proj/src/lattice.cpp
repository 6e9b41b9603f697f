#include "branchcones/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <limits>
#include <numeric>
#include <optional>

#include "branchcones/errors.hpp"

namespace branchcones {

namespace {

using i128 = __int128;
using IntRow = std::vector<std::int64_t>;

constexpr std::size_t kMaxEliminationRows = 200000;
constexpr int kMaxPropagationRounds = 256;

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw ResourceLimit("integer overflow while normalizing constraint rows", 0);
  return static_cast<std::int64_t>(v);
}

// Divides [b, a] by gcd(a). Inequalities round b down (valid for integer x);
// equalities whose b is not divisible are infeasible. Returns false in that case.
bool tighten(IntRow& row, bool equality) {
  std::int64_t g = 0;
  for (std::size_t i = 1; i < row.size(); ++i) g = std::gcd(g, row[i]);
  if (g <= 1) return true;
  if (equality) {
    if (row[0] % g != 0) return false;
    for (auto& v : row) v /= g;
    return true;
  }
  row[0] = narrow(floor_div(row[0], g));
  for (std::size_t i = 1; i < row.size(); ++i) row[i] /= g;
  return true;
}

bool is_constant(const IntRow& row) {
  return std::all_of(row.begin() + 1, row.end(), [](std::int64_t v) { return v == 0; });
}

// Box of optional integer bounds, one per free coordinate.
struct Box {
  std::vector<std::int64_t> lo, hi;
  std::vector<char> has_lo, has_hi;

  explicit Box(std::size_t n) : lo(n, 0), hi(n, 0), has_lo(n, 0), has_hi(n, 0) {}
  bool fixed(std::size_t i) const { return has_lo[i] && has_hi[i] && lo[i] == hi[i]; }
  bool bounded(std::size_t i) const { return has_lo[i] && has_hi[i]; }
};

enum class Propagation { kConverged, kStalled, kEmpty };

// Tightens `box` against every row (equalities both ways) until nothing changes.
Propagation propagate(const std::vector<IntRow>& ineqs, const std::vector<IntRow>& eqs, Box& box) {
  bool changed = true;
  auto apply = [&](const IntRow& row, int sign) -> bool {
    // max over the box of sign*(b + <a,x>), tracked as finite part + count of infinite terms.
    const std::size_t n = row.size() - 1;
    i128 finite = sign * static_cast<i128>(row[0]);
    int infinite = 0;
    std::size_t infinite_at = 0;
    for (std::size_t i = 0; i < n; ++i) {
      i128 a = sign * static_cast<i128>(row[i + 1]);
      if (a > 0) {
        if (box.has_hi[i]) finite += a * box.hi[i];
        else ++infinite, infinite_at = i;
      } else if (a < 0) {
        if (box.has_lo[i]) finite += a * box.lo[i];
        else ++infinite, infinite_at = i;
      }
    }
    if (infinite == 0 && finite < 0) return false;
    if (infinite > 1) return true;
    for (std::size_t i = 0; i < n; ++i) {
      i128 a = sign * static_cast<i128>(row[i + 1]);
      if (a == 0) continue;
      if (infinite == 1 && i != infinite_at) continue;
      // rest = max of the row without term i.
      i128 rest = finite;
      if (infinite == 0) rest -= a > 0 ? a * box.hi[i] : a * box.lo[i];
      if (a > 0) {
        i128 bound = ceil_div(-rest, a);
        if (!box.has_lo[i] || bound > box.lo[i]) {
          box.lo[i] = narrow(bound);
          box.has_lo[i] = 1;
          changed = true;
        }
      } else {
        i128 bound = floor_div(rest, -a);
        if (!box.has_hi[i] || bound < box.hi[i]) {
          box.hi[i] = narrow(bound);
          box.has_hi[i] = 1;
          changed = true;
        }
      }
      if (box.has_lo[i] && box.has_hi[i] && box.lo[i] > box.hi[i]) return false;
    }
    return true;
  };

  for (int round = 0; changed; ++round) {
    if (round == kMaxPropagationRounds) return Propagation::kStalled;
    changed = false;
    for (const auto& row : ineqs)
      if (!apply(row, 1)) return Propagation::kEmpty;
    for (const auto& row : eqs)
      if (!apply(row, 1) || !apply(row, -1)) return Propagation::kEmpty;
  }
  return Propagation::kConverged;
}

// Projects the system onto coordinate `keep` and returns the implied integer
// interval, std::nullopt when the projection is empty. Throws UnboundedRegion.
std::optional<Bounds> eliminate_to(std::vector<IntRow> ineqs, std::vector<IntRow> eqs, std::size_t keep,
                                   const Box& box) {
  const std::size_t n = box.lo.size();
  // Known bounds are valid constraints too and keep the projection small.
  for (std::size_t i = 0; i < n; ++i) {
    if (box.has_lo[i]) {
      IntRow r(n + 1, 0);
      r[0] = -box.lo[i];
      r[i + 1] = 1;
      ineqs.push_back(std::move(r));
    }
    if (box.has_hi[i]) {
      IntRow r(n + 1, 0);
      r[0] = box.hi[i];
      r[i + 1] = -1;
      ineqs.push_back(std::move(r));
    }
  }

  auto combine = [](const IntRow& p, i128 cp, const IntRow& q, i128 cq, bool equality) -> std::optional<IntRow> {
    IntRow out(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) out[k] = narrow(cp * p[k] + cq * q[k]);
    if (!tighten(out, equality)) return std::nullopt;
    return out;
  };
  auto canonical = [](std::vector<IntRow>& rows) -> bool {
    std::vector<IntRow> kept;
    for (auto& r : rows) {
      if (is_constant(r)) {
        if (r[0] < 0) return false;
        continue;
      }
      kept.push_back(std::move(r));
    }
    // Among rows with equal normal keep the tightest right-hand side.
    std::sort(kept.begin(), kept.end(), [](const IntRow& a, const IntRow& b) {
      if (!std::equal(a.begin() + 1, a.end(), b.begin() + 1, b.end()))
        return std::lexicographical_compare(a.begin() + 1, a.end(), b.begin() + 1, b.end());
      return a[0] < b[0];
    });
    kept.erase(std::unique(kept.begin(), kept.end(),
                           [](const IntRow& a, const IntRow& b) { return std::equal(a.begin() + 1, a.end(), b.begin() + 1); }),
               kept.end());
    rows = std::move(kept);
    return true;
  };

  for (auto& r : ineqs) tighten(r, false);
  for (auto& r : eqs)
    if (!tighten(r, true)) return std::nullopt;

  // Substitute equalities away, preferring pivots other than `keep`.
  while (!eqs.empty()) {
    IntRow e = eqs.back();
    eqs.pop_back();
    if (is_constant(e)) {
      if (e[0] != 0) return std::nullopt;
      continue;
    }
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i)
      if (e[i + 1] != 0 && i != keep) {
        pivot = i;
        break;
      }
    if (pivot == n) {
      // Only `keep` occurs: the equality pins it.
      if (e[0] % e[keep + 1] != 0) return std::nullopt;
      std::int64_t v = -e[0] / e[keep + 1];
      IntRow lo(n + 1, 0), hi(n + 1, 0);
      lo[0] = -v, lo[keep + 1] = 1;
      hi[0] = v, hi[keep + 1] = -1;
      ineqs.push_back(lo);
      ineqs.push_back(hi);
      continue;
    }
    if (e[pivot + 1] < 0)
      for (auto& v : e) v = -v;
    const i128 ep = e[pivot + 1];
    auto substitute = [&](std::vector<IntRow>& rows, bool equality) -> bool {
      for (auto& r : rows) {
        if (r[pivot + 1] == 0) continue;
        auto c = combine(r, ep, e, -static_cast<i128>(r[pivot + 1]), equality);
        if (!c) return false;
        r = std::move(*c);
      }
      return true;
    };
    if (!substitute(ineqs, false) || !substitute(eqs, true)) return std::nullopt;
  }
  if (!canonical(ineqs)) return std::nullopt;

  for (;;) {
    // Choose the variable (other than keep) with the smallest pos*neg product.
    std::size_t best = n;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < n; ++i) {
      if (i == keep) continue;
      std::size_t pos = 0, neg = 0;
      for (const auto& r : ineqs) pos += r[i + 1] > 0, neg += r[i + 1] < 0;
      if (pos + neg == 0) continue;
      std::size_t cost = pos * neg;
      if (cost < best_cost) best = i, best_cost = cost;
    }
    if (best == n) break;
    std::vector<IntRow> next, pos, neg;
    for (auto& r : ineqs) {
      if (r[best + 1] > 0) pos.push_back(std::move(r));
      else if (r[best + 1] < 0) neg.push_back(std::move(r));
      else next.push_back(std::move(r));
    }
    if (next.size() + pos.size() * neg.size() > kMaxEliminationRows)
      throw ResourceLimit("Fourier-Motzkin elimination exceeded " + std::to_string(kMaxEliminationRows) + " rows",
                          kMaxEliminationRows);
    for (const auto& p : pos)
      for (const auto& q : neg) {
        auto c = combine(p, -static_cast<i128>(q[best + 1]), q, p[best + 1], false);
        next.push_back(std::move(*c));
      }
    ineqs = std::move(next);
    if (!canonical(ineqs)) return std::nullopt;
  }

  std::optional<i128> lo, hi;
  for (const auto& r : ineqs) {
    i128 a = r[keep + 1];
    if (a > 0) {
      i128 b = ceil_div(-static_cast<i128>(r[0]), a);
      if (!lo || b > *lo) lo = b;
    } else if (a < 0) {
      i128 b = floor_div(r[0], -a);
      if (!hi || b < *hi) hi = b;
    }
  }
  if (!lo || !hi) throw UnboundedRegion("slice is unbounded in free coordinate " + std::to_string(keep));
  if (*lo > *hi) return std::nullopt;
  return Bounds{narrow(*lo), narrow(*hi)};
}

std::vector<IntRow> substitute_rows(const ConeH& cone, const std::vector<Row>& rows,
                                    const std::vector<std::size_t>& free_coords,
                                    const std::vector<std::int64_t>& base) {
  std::vector<IntRow> out;
  for (const auto& row : rows) {
    IntRow r(free_coords.size() + 1, 0);
    i128 b = 0;
    for (std::size_t c = 0; c < cone.dimension(); ++c) b += static_cast<i128>(row[c]) * base[c];
    r[0] = narrow(b);
    for (std::size_t k = 0; k < free_coords.size(); ++k) r[k + 1] = row[free_coords[k]];
    out.push_back(std::move(r));
  }
  return out;
}

class Enumerator {
 public:
  Enumerator(const Polytope& p, const EnumOptions& options, std::atomic<std::uint64_t>& found,
             std::vector<std::vector<std::int64_t>>* sink)
      : p_(p), options_(options), found_(found), sink_(sink) {}

  std::uint64_t run(Box box) {
    recurse(box);
    return local_;
  }

 private:
  void record(std::uint64_t k, const Box& box) {
    if (found_.fetch_add(k) + k > options_.point_cap)
      throw ResourceLimit("lattice point count exceeds the cap of " + std::to_string(options_.point_cap),
                          options_.point_cap);
    local_ += k;
    if (sink_) sink_->push_back(box.lo);
  }

  void recurse(Box& box) {
    Propagation state = propagate(p_.inequalities, p_.equalities, box);
    if (state == Propagation::kEmpty) return;

    const std::size_t n = p_.dimension;
    std::size_t pick = n, open = 0;
    i128 best_width = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (box.fixed(i)) continue;
      ++open;
      i128 width = static_cast<i128>(box.hi[i]) - box.lo[i];
      if (pick == n || width < best_width) pick = i, best_width = width;
    }
    if (pick == n) {
      if (p_.satisfies(box.lo)) record(1, box);
      return;
    }
    // At a converged fixpoint a lone open coordinate ranges over its whole interval.
    if (!sink_ && open == 1 && state == Propagation::kConverged) {
      record(static_cast<std::uint64_t>(best_width + 1), box);
      return;
    }
    const std::int64_t lo = box.lo[pick], hi = box.hi[pick];
    for (std::int64_t v = lo; v <= hi; ++v) {
      Box child = box;
      child.lo[pick] = child.hi[pick] = v;
      recurse(child);
    }
  }

  const Polytope& p_;
  const EnumOptions& options_;
  std::atomic<std::uint64_t>& found_;
  std::vector<std::vector<std::int64_t>>* sink_;
  std::uint64_t local_ = 0;
};

Box initial_box(const Polytope& p) {
  Box box(p.dimension);
  for (std::size_t i = 0; i < p.dimension; ++i) {
    box.lo[i] = p.bounds[i].lo;
    box.hi[i] = p.bounds[i].hi;
    box.has_lo[i] = box.has_hi[i] = 1;
  }
  return box;
}

// Runs the enumerator, splitting the first coordinate's range across workers.
std::uint64_t drive(const Polytope& p, const EnumOptions& options, std::vector<std::vector<std::int64_t>>* sink) {
  if (p.empty) return 0;
  std::atomic<std::uint64_t> found{0};
  Box box = initial_box(p);
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || p.dimension == 0) return Enumerator(p, options, found, sink).run(box);

  const std::int64_t lo = box.lo[0], hi = box.hi[0];
  const std::int64_t span = hi - lo + 1;
  const std::int64_t parts = std::min<std::int64_t>(threads, span);
  std::vector<std::vector<std::vector<std::int64_t>>> sinks(parts);
  std::vector<std::future<std::uint64_t>> jobs;
  for (std::int64_t k = 0; k < parts; ++k) {
    Box sub = box;
    sub.lo[0] = lo + span * k / parts;
    sub.hi[0] = lo + span * (k + 1) / parts - 1;
    auto* part_sink = sink ? &sinks[k] : nullptr;
    jobs.push_back(std::async(std::launch::async, [&p, &options, &found, part_sink, sub]() {
      return Enumerator(p, options, found, part_sink).run(sub);
    }));
  }
  std::uint64_t total = 0;
  std::exception_ptr failure;
  for (auto& job : jobs) {
    try {
      total += job.get();
    } catch (...) {
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  if (sink)
    for (auto& s : sinks) sink->insert(sink->end(), s.begin(), s.end());
  return total;
}

}  // namespace

Assignment to_assignment(const std::map<std::string, Weight>& weights) {
  Assignment out;
  for (const auto& [name, w] : weights) out[name] = w.vec();
  return out;
}

bool Polytope::satisfies(std::span<const std::int64_t> x) const {
  if (x.size() != dimension) return false;
  auto value = [&](const std::vector<std::int64_t>& row) {
    i128 s = row[0];
    for (std::size_t i = 0; i < dimension; ++i) s += static_cast<i128>(row[i + 1]) * x[i];
    return s;
  };
  for (const auto& r : inequalities)
    if (value(r) < 0) return false;
  for (const auto& r : equalities)
    if (value(r) != 0) return false;
  return true;
}

std::vector<std::int64_t> Polytope::lift(std::span<const std::int64_t> x) const {
  if (x.size() != dimension) throw InvalidArgument("point dimension does not match the polytope");
  std::vector<std::int64_t> out = base;
  for (std::size_t i = 0; i < dimension; ++i) out[free_coords[i]] = x[i];
  return out;
}

Polytope slice(const ConeH& cone, const std::map<std::string, Weight>& fixed) {
  return slice(cone, to_assignment(fixed));
}

Polytope slice(const ConeH& cone, const Assignment& fixed) {
  Polytope p;
  p.fixed = fixed;
  p.base.assign(cone.dimension(), 0);
  std::vector<char> is_fixed(cone.dimension(), 0);
  for (const auto& [name, values] : fixed) {
    const Block& b = cone.block(name);
    if (values.size() != b.length)
      throw InvalidArgument("block '" + name + "' has length " + std::to_string(b.length) + ", got " +
                            std::to_string(values.size()) + " values");
    for (std::size_t k = 0; k < b.length; ++k) {
      p.base[b.offset + k] = values[k];
      is_fixed[b.offset + k] = 1;
    }
  }
  for (std::size_t c = 0; c < cone.dimension(); ++c)
    if (!is_fixed[c]) p.free_coords.push_back(c);
  p.dimension = p.free_coords.size();

  auto ineqs = substitute_rows(cone, cone.inequalities(), p.free_coords, p.base);
  auto eqs = substitute_rows(cone, cone.equalities(), p.free_coords, p.base);

  auto mark_empty = [&]() -> Polytope& {
    p.empty = true;
    p.bounds.assign(p.dimension, Bounds{0, -1});
    return p;
  };

  for (auto& r : ineqs) {
    tighten(r, false);
    if (is_constant(r) && r[0] < 0) return mark_empty();
  }
  for (auto& r : eqs) {
    if (!tighten(r, true)) return mark_empty();
    if (is_constant(r) && r[0] != 0) return mark_empty();
  }
  std::erase_if(ineqs, is_constant);
  std::erase_if(eqs, is_constant);
  std::sort(ineqs.begin(), ineqs.end());
  ineqs.erase(std::unique(ineqs.begin(), ineqs.end()), ineqs.end());
  std::sort(eqs.begin(), eqs.end());
  eqs.erase(std::unique(eqs.begin(), eqs.end()), eqs.end());
  p.inequalities = ineqs;
  p.equalities = eqs;

  Box box(p.dimension);
  for (;;) {
    if (propagate(ineqs, eqs, box) == Propagation::kEmpty) return mark_empty();
    std::size_t open = p.dimension;
    for (std::size_t i = 0; i < p.dimension; ++i)
      if (!box.bounded(i)) {
        open = i;
        break;
      }
    if (open == p.dimension) break;
    auto interval = eliminate_to(ineqs, eqs, open, box);
    if (!interval) return mark_empty();
    box.lo[open] = interval->lo;
    box.hi[open] = interval->hi;
    box.has_lo[open] = box.has_hi[open] = 1;
  }
  for (std::size_t i = 0; i < p.dimension; ++i) p.bounds.push_back({box.lo[i], box.hi[i]});
  return p;
}

std::uint64_t default_point_cap() {
  if (const char* env = std::getenv("BRANCHCONES_POINT_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000;
}

std::vector<std::vector<std::int64_t>> enumerate_points(const Polytope& p, const EnumOptions& options) {
  std::vector<std::vector<std::int64_t>> points;
  drive(p, options, &points);
  std::sort(points.begin(), points.end());
  return points;
}

std::uint64_t count_points(const Polytope& p, const EnumOptions& options) { return drive(p, options, nullptr); }

}  // namespace branchcones
