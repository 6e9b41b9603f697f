#include "branchcones/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "branchcones/errors.hpp"

namespace branchcones {

// ---------------------------------------------------------------- Weight

Weight Weight::zero(int rank) { return Weight(std::vector<std::int64_t>(rank, 0)); }

Weight Weight::fundamental(int rank, int j) {
  if (j < 1 || j > rank) throw InvalidArgument("fundamental weight index out of range");
  Weight w = zero(rank);
  w.coords_[j - 1] = 1;
  return w;
}

bool Weight::is_dominant() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c >= 0; });
}

std::int64_t Weight::coordinate_sum() const {
  return std::accumulate(coords_.begin(), coords_.end(), std::int64_t{0});
}

Weight Weight::reversed() const {
  return Weight(std::vector<std::int64_t>(coords_.rbegin(), coords_.rend()));
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.rank() != rank()) throw InvalidArgument("weight rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.rank() != rank()) throw InvalidArgument("weight rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Weight operator-(Weight a) {
  for (auto& c : a.coords_) c = -c;
  return a;
}

Weight operator*(std::int64_t k, Weight a) {
  for (auto& c : a.coords_) c *= k;
  return a;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << to_string(w); }

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < w.rank(); ++i) os << (i ? "," : "") << w[i];
  os << ')';
  return os.str();
}

namespace {

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) throw InvalidArgument(std::string("empty entry in ") + what + ": '" + text + "'");
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw InvalidArgument(std::string("bad integer in ") + what + ": '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidArgument(std::string("empty ") + what);
  return out;
}

}  // namespace

Weight parse_weight(const std::string& text) { return Weight(parse_int_list(text, "weight")); }

std::string to_string(const ReducedWord& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.letters.size(); ++i) os << (i ? "," : "") << w.letters[i];
  os << ')';
  return os.str();
}

ReducedWord parse_word(const std::string& text) {
  ReducedWord w;
  for (auto v : parse_int_list(text, "word")) w.letters.push_back(static_cast<int>(v));
  return w;
}

// ------------------------------------------------------------ RootSystem

namespace {

using RootVec = std::vector<std::int64_t>;

// s_i on a vector of simple-root coefficients.
RootVec reflect_root(const std::vector<std::vector<std::int64_t>>& a, int i, RootVec beta) {
  std::int64_t pairing = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) pairing += beta[j] * a[i][j];
  beta[i] -= pairing;
  return beta;
}

bool is_positive_root(const RootVec& v) {
  bool nonzero = false;
  for (auto c : v) {
    if (c < 0) return false;
    nonzero |= c != 0;
  }
  return nonzero;
}

// Reads a word off the element w determined by v = w(rho): repeatedly strip the
// smallest left descent (a coordinate of v that is negative).
void greedy_word(const RootSystem& rs, Weight v, ReducedWord& out) {
  for (;;) {
    int descent = 0;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (v[i - 1] < 0) {
        descent = i;
        break;
      }
    }
    if (descent == 0) return;
    out.letters.push_back(descent);
    v = simple_reflection(rs, descent, v);
  }
}

}  // namespace

RootSystem::RootSystem(std::vector<std::vector<std::int64_t>> cartan) : cartan_(std::move(cartan)) {
  rank_ = static_cast<int>(cartan_.size());
  if (rank_ < 1) throw InvalidArgument("root system rank must be positive");
  for (int i = 0; i < rank_; ++i) {
    if (static_cast<int>(cartan_[i].size()) != rank_) throw InvalidArgument("Cartan matrix must be square");
    if (cartan_[i][i] != 2) throw InvalidArgument("Cartan matrix diagonal must be 2");
    for (int j = 0; j < rank_; ++j) {
      if (i == j) continue;
      if (cartan_[i][j] > 0) throw InvalidArgument("Cartan off-diagonal entries must be <= 0");
      if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
        throw InvalidArgument("Cartan matrix zero pattern must be symmetric");
    }
  }

  type_a_ = true;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      std::int64_t expect = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
      if (cartan_[i][j] != expect) type_a_ = false;
    }

  // Positive roots: the W-orbit of the simple roots, restricted to the positive side.
  constexpr std::size_t kMaxRoots = 4096;
  std::set<RootVec> seen;
  std::deque<RootVec> queue;
  for (int i = 0; i < rank_; ++i) {
    RootVec e(rank_, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    RootVec beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank_; ++i) {
      RootVec image = reflect_root(cartan_, i, beta);
      if (is_positive_root(image) && seen.insert(image).second) {
        if (seen.size() > kMaxRoots) throw Unsupported("Cartan matrix is not of finite type");
        queue.push_back(image);
      }
    }
  }
  positive_roots_.assign(seen.begin(), seen.end());
  std::sort(positive_roots_.begin(), positive_roots_.end(), [](const RootVec& a, const RootVec& b) {
    auto ha = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    auto hb = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    if (ha != hb) return ha < hb;
    return a > b;
  });

  greedy_word(*this, -rho(), longest_);
}

bool RootSystem::is_symmetric() const {
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (cartan_[i][j] != cartan_[j][i]) return false;
  return true;
}

Weight RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank_) throw InvalidArgument("simple root index out of range");
  std::vector<std::int64_t> col(rank_);
  for (int k = 0; k < rank_; ++k) col[k] = cartan_[k][i - 1];
  return Weight(std::move(col));
}

Weight RootSystem::root_weight(std::span<const std::int64_t> c) const {
  std::vector<std::int64_t> out(rank_, 0);
  for (int k = 0; k < rank_; ++k)
    for (int j = 0; j < rank_; ++j) out[k] += cartan_[k][j] * c[j];
  return Weight(std::move(out));
}

RootSystem build_root_system(int rank) {
  if (rank < 1) throw InvalidArgument("rank must be >= 1");
  std::vector<std::vector<std::int64_t>> a(rank, std::vector<std::int64_t>(rank, 0));
  for (int i = 0; i < rank; ++i) {
    a[i][i] = 2;
    if (i + 1 < rank) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return RootSystem(std::move(a));
}

// ------------------------------------------------------------ operations

std::int64_t coroot_pairing(const RootSystem& rs, int alpha_index, const Weight& w) {
  if (alpha_index < 1 || alpha_index > rs.rank()) throw InvalidArgument("coroot index out of range");
  if (w.rank() != rs.rank()) throw InvalidArgument("weight rank mismatch");
  return w[alpha_index - 1];
}

Weight simple_reflection(const RootSystem& rs, int index, const Weight& w) {
  std::int64_t p = coroot_pairing(rs, index, w);
  if (p == 0) return w;
  return w - p * rs.simple_root(index);
}

Weight apply_word(const RootSystem& rs, const ReducedWord& word, const Weight& w) {
  Weight v = w;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) v = simple_reflection(rs, *it, v);
  return v;
}

Weight apply_longest(const RootSystem& rs, const Weight& w) { return apply_word(rs, rs.longest_word(), w); }

Weight dual_weight(const RootSystem& rs, const Weight& lambda) { return -apply_longest(rs, lambda); }

Weight dominant_conjugate(const RootSystem& rs, const SimpleSet& subset, const Weight& w, int* reflections) {
  Weight v = w;
  int count = 0;
  for (;;) {
    int hit = 0;
    for (int i : subset) {
      if (v[i - 1] < 0) {
        hit = i;
        break;
      }
    }
    if (hit == 0) break;
    v = simple_reflection(rs, hit, v);
    ++count;
  }
  if (reflections) *reflections = count;
  return v;
}

bool validate_reduced_word(const RootSystem& rs, const ReducedWord& word) {
  const auto& a = rs.cartan_matrix();
  for (std::size_t k = 0; k < word.letters.size(); ++k) {
    int letter = word.letters[k];
    if (letter < 1 || letter > rs.rank()) return false;
    // w_{k-1}(alpha_{i_k}) must stay positive for the length to grow.
    RootVec beta(rs.rank(), 0);
    beta[letter - 1] = 1;
    for (std::size_t l = k; l-- > 0;) beta = reflect_root(a, word.letters[l] - 1, beta);
    if (!is_positive_root(beta)) return false;
  }
  return true;
}

bool is_longest_word(const RootSystem& rs, const ReducedWord& word) {
  if (word.length() != rs.n_positive_roots()) return false;
  if (!validate_reduced_word(rs, word)) return false;
  Weight image = apply_word(rs, word, rs.rho());
  return std::all_of(image.coords().begin(), image.coords().end(), [](std::int64_t c) { return c < 0; });
}

ReducedWord longest_element_word(const RootSystem& rs, const SimpleSet& subset) {
  for (int i : subset)
    if (i < 1 || i > rs.rank()) throw InvalidArgument("simple index out of range");
  // w0(I) rho is the W_I-antidominant point of the orbit of rho.
  Weight v = rs.rho();
  for (;;) {
    int hit = 0;
    for (int i : subset)
      if (v[i - 1] > 0) {
        hit = i;
        break;
      }
    if (hit == 0) break;
    v = simple_reflection(rs, hit, v);
  }
  ReducedWord out;
  greedy_word(rs, v, out);
  return out;
}

std::vector<ReducedWord> all_longest_words(const RootSystem& rs) {
  std::vector<ReducedWord> out;
  ReducedWord prefix;
  auto rec = [&](auto&& self, const Weight& v) -> void {
    bool any = false;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (v[i - 1] >= 0) continue;
      any = true;
      prefix.letters.push_back(i);
      self(self, simple_reflection(rs, i, v));
      prefix.letters.pop_back();
    }
    if (!any) out.push_back(prefix);
  };
  rec(rec, -rs.rho());
  return out;
}

LeviWords levi_adapted_words(const RootSystem& rs, const SimpleSet& subset) {
  LeviWords out;
  out.levi = longest_element_word(rs, subset);
  // w0(I)^{-1} w0 = w0(I) w0 since w0(I) is an involution.
  Weight v = apply_word(rs, out.levi, apply_longest(rs, rs.rho()));
  greedy_word(rs, v, out.coset);
  return out;
}

std::vector<Rational> simple_root_coordinates(const RootSystem& rs, const Weight& w) {
  const int n = rs.rank();
  if (w.rank() != n) throw InvalidArgument("weight rank mismatch");
  // Solve A c = w by Gauss-Jordan elimination over the rationals.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rational(rs.cartan_matrix()[i][j]);
    m[i][n] = Rational(w[i]);
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && m[piv][col].numerator() == 0) ++piv;
    if (piv == n) throw InvariantBreach("singular Cartan matrix");
    std::swap(m[piv], m[col]);
    for (int i = 0; i < n; ++i) {
      if (i == col || m[i][col].numerator() == 0) continue;
      Rational f = m[i][col] / m[col][col];
      for (int j = col; j <= n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  std::vector<Rational> c(n);
  for (int i = 0; i < n; ++i) c[i] = m[i][n] / m[i][i];
  return c;
}

bool dominance_leq(const RootSystem& rs, const Weight& a, const Weight& b) {
  for (const auto& c : simple_root_coordinates(rs, b - a))
    if (c.denominator() != 1 || c.numerator() < 0) return false;
  return true;
}

SimpleSet all_simple(const RootSystem& rs) {
  SimpleSet s;
  for (int i = 1; i <= rs.rank(); ++i) s.insert(i);
  return s;
}

}  // namespace branchcones
