#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "kacfold/cartan.hpp"
#include "kacfold/error.hpp"
#include "kacfold/lattice.hpp"
#include "kacfold/quiver.hpp"

namespace kacfold {

/// Z^I together with a symmetric form B and symmetriser d, such that
/// (x, e_i) is always divisible by d_i. For a quiver, B = A and d = 1.
struct RootLattice {
  IntMatrix form;
  std::vector<std::int64_t> d;

  std::size_t rank() const { return d.size(); }

  /// (v, e_i)
  std::int64_t pairing(const LatticeVector& v, std::size_t i) const {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += v[j] * form(j, i);
    return s;
  }

  void check(const LatticeVector& v) const {
    if (v.size() != rank()) throw Error(ErrorKind::LatticeMismatch, to_string(v) + " has the wrong length for this lattice");
  }
};

inline RootLattice quiver_lattice(const Quiver& q) {
  return {symmetric_gcm(q), std::vector<std::int64_t>(q.vertex_count(), 1)};
}

inline RootLattice folded_lattice(const FoldData& f) { return {f.B, f.d}; }

inline RootLattice valued_lattice(const ValuedQuiver& vq) { return {vq.symmetrised_matrix(), vq.d}; }

/// r_i(v) = v - (v, e_i)/d_i e_i
inline LatticeVector reflect(const RootLattice& lattice, int i, LatticeVector v) {
  lattice.check(v);
  if (i < 0 || static_cast<std::size_t>(i) >= lattice.rank())
    throw Error(ErrorKind::UnknownVertex, "no vertex with index " + std::to_string(i) + " in the lattice");
  v[i] -= lattice.pairing(v, i) / lattice.d[i];
  return v;
}

/// Product of the quiver reflections r_i over the vertices of one orbit.
/// Vertices of an orbit are pairwise non-adjacent, so the order is irrelevant.
inline LatticeVector s_fold(const Quiver& q, const OrbitStructure& orbits, int orbit, LatticeVector v) {
  const RootLattice lattice = quiver_lattice(q);
  for (int i : orbits.vertex_orbits.at(orbit)) v = reflect(lattice, i, std::move(v));
  return v;
}

inline LatticeVector s_fold(const Quiver& q, const Automorphism& a, int orbit, LatticeVector v) {
  return s_fold(q, orbit_structure(q, a), orbit, std::move(v));
}

enum class RootKind { Real, Imaginary, NonRoot };

inline std::string to_string(RootKind k) {
  switch (k) {
    case RootKind::Real: return "real";
    case RootKind::Imaginary: return "imaginary";
    case RootKind::NonRoot: return "non-root";
  }
  return "unknown";
}

struct RootClassification {
  RootKind kind = RootKind::NonRoot;
  bool positive = true;
  std::vector<int> witness;  // reflections applied during descent, in order
  LatticeVector terminal;    // vector on which the descent stopped
  int simple = -1;           // simple root reached, for real roots
  std::string reason;        // for non-roots

  bool is_root() const { return kind != RootKind::NonRoot; }
};

namespace detail {

inline bool support_connected(const RootLattice& lattice, const LatticeVector& v) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) support.push_back(i);
  if (support.empty()) return false;
  std::vector<bool> reached(v.size(), false);
  std::vector<std::size_t> stack{support.front()};
  reached[support.front()] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j : support)
      if (!reached[j] && lattice.form(i, j) != 0) {
        reached[j] = true;
        ++count;
        stack.push_back(j);
      }
  }
  return count == support.size();
}

inline int simple_index(const LatticeVector& v) {
  int idx = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] != 1 || idx >= 0) return -1;
    idx = static_cast<int>(i);
  }
  return idx;
}

inline bool in_fundamental_region(const RootLattice& lattice, const LatticeVector& v) {
  if (is_zero(v) || !is_nonnegative(v)) return false;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (lattice.pairing(v, i) > 0) return false;
  return support_connected(lattice, v);
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (std::uint64_t{1} << 62)) return r;
  }
  return r;
}

}  // namespace detail

/// Height descent: reflect at the least vertex with positive pairing until a
/// simple root, a negative coordinate, or the fundamental region is reached.
inline RootClassification classify(const RootLattice& lattice, const LatticeVector& input) {
  lattice.check(input);
  if (is_zero(input)) throw Error(ErrorKind::ZeroVector, "cannot classify the zero vector");
  RootClassification out;
  LatticeVector v = input;
  const bool has_pos = std::any_of(v.begin(), v.end(), [](auto x) { return x > 0; });
  const bool has_neg = std::any_of(v.begin(), v.end(), [](auto x) { return x < 0; });
  if (has_pos && has_neg) {
    out.reason = "mixed signs";
    out.terminal = v;
    return out;
  }
  if (has_neg) {
    out.positive = false;
    v = -1 * v;
  }
  for (;;) {
    const int s = detail::simple_index(v);
    if (s >= 0) {
      out.kind = RootKind::Real;
      out.simple = s;
      out.terminal = v;
      return out;
    }
    int chosen = -1;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (lattice.pairing(v, i) > 0) {
        chosen = static_cast<int>(i);
        break;
      }
    if (chosen < 0) {
      out.terminal = v;
      if (detail::support_connected(lattice, v)) {
        out.kind = RootKind::Imaginary;
      } else {
        out.reason = "support of " + to_string(v) + " is disconnected";
      }
      return out;
    }
    v = reflect(lattice, chosen, std::move(v));
    out.witness.push_back(chosen);
    if (!is_nonnegative(v)) {
      out.terminal = v;
      out.reason = "descent reached " + to_string(v);
      return out;
    }
  }
}

/// Positive roots of bounded height, each tagged real or imaginary.
struct RootSet {
  std::map<LatticeVector, RootKind> roots;

  bool contains(const LatticeVector& v) const { return roots.count(v) > 0; }

  RootKind kind_of(const LatticeVector& v) const {
    auto it = roots.find(v);
    return it == roots.end() ? RootKind::NonRoot : it->second;
  }

  std::size_t size() const { return roots.size(); }

  /// Sorted by height, then lexicographically.
  std::vector<LatticeVector> sorted() const {
    std::vector<LatticeVector> out;
    for (const auto& [v, k] : roots) out.push_back(v);
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return height(x) < height(y); });
    return out;
  }
};

inline constexpr std::size_t kDefaultRootCap = 1'000'000;

inline RootSet positive_roots_up_to(const RootLattice& lattice, std::int64_t max_height,
                                    std::size_t cap = kDefaultRootCap) {
  if (max_height < 1) throw Error(ErrorKind::BadParameter, "height bound must be at least 1");
  const std::size_t n = lattice.rank();
  RootSet set;
  std::deque<LatticeVector> queue;
  auto insert = [&](const LatticeVector& v, RootKind kind) {
    if (!set.roots.emplace(v, kind).second) return;
    if (set.roots.size() > cap)
      throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(cap) + " roots below height " + std::to_string(max_height));
    queue.push_back(v);
  };
  for (std::size_t i = 0; i < n; ++i) insert(unit_vector(n, i), RootKind::Real);

  const std::uint64_t scan = detail::binomial(static_cast<std::uint64_t>(max_height) + n, n);
  if (scan > cap)
    throw Error(ErrorKind::BudgetExceeded, "fundamental region scan needs " + std::to_string(scan) + " lattice points");
  for (const auto& v : nonnegative_vectors_up_to(n, max_height))
    if (detail::in_fundamental_region(lattice, v)) insert(v, RootKind::Imaginary);

  while (!queue.empty()) {
    const LatticeVector v = queue.front();
    queue.pop_front();
    const RootKind kind = set.roots.at(v);
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t p = lattice.pairing(v, i);
      if (p >= 0) continue;
      LatticeVector w = v;
      w[i] -= p / lattice.d[i];
      if (height(w) <= max_height) insert(w, kind);
    }
  }
  return set;
}

/// Result of comparing f(sigma(Delta(Q)_+)) with Delta(Gamma)_+.
struct SigmaImageReport {
  std::vector<LatticeVector> image;
  std::vector<LatticeVector> folded_roots;
  /// For each real folded root: the a-orbits of its preimages, each orbit
  /// listed from its least member.
  std::map<LatticeVector, std::vector<std::vector<LatticeVector>>> preimage_orbits;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

inline std::vector<LatticeVector> dimension_orbit(const Automorphism& a, const LatticeVector& v) {
  std::vector<LatticeVector> orbit{v};
  for (LatticeVector w = act_on_dimension_vector(a, v); w != v; w = act_on_dimension_vector(a, w)) orbit.push_back(w);
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

inline SigmaImageReport sigma_root_image(const Quiver& q, const Automorphism& a, std::int64_t max_height,
                                         std::size_t cap = kDefaultRootCap) {
  const FoldData f = fold(q, a);
  const RootSet quiver_roots = positive_roots_up_to(quiver_lattice(q), a.order * max_height, cap);
  const RootSet folded = positive_roots_up_to(folded_lattice(f), max_height, cap);

  SigmaImageReport report;
  std::map<LatticeVector, std::set<std::vector<LatticeVector>>> orbits_by_image;
  std::set<LatticeVector> image;
  for (const auto& [beta, kind] : quiver_roots.roots) {
    const LatticeVector alpha = f_map(f.orbits, a, sigma(a, beta));
    if (height(alpha) > max_height) continue;
    image.insert(alpha);
    orbits_by_image[alpha].insert(dimension_orbit(a, beta));
  }
  report.image.assign(image.begin(), image.end());
  report.folded_roots = folded.sorted();
  std::sort(report.folded_roots.begin(), report.folded_roots.end());

  for (const auto& alpha : report.image)
    if (!folded.contains(alpha)) report.violations.push_back("image " + to_string(alpha) + " is not a folded root");
  for (const auto& alpha : report.folded_roots)
    if (!image.count(alpha)) report.violations.push_back("folded root " + to_string(alpha) + " is not in the image");
  for (const auto& [alpha, orbit_set] : orbits_by_image) {
    if (folded.kind_of(alpha) != RootKind::Real) continue;
    report.preimage_orbits[alpha].assign(orbit_set.begin(), orbit_set.end());
    if (orbit_set.size() != 1)
      report.violations.push_back("real folded root " + to_string(alpha) + " has " + std::to_string(orbit_set.size()) + " preimage orbits");
  }
  return report;
}

/// Primitive nonnegative generator of the radical of the form, when the
/// radical has rank one and is spanned by a nonnegative vector.
inline std::optional<LatticeVector> null_root(const RootLattice& lattice) {
  using Q = boost::rational<std::int64_t>;
  const std::size_t n = lattice.rank();
  std::vector<std::vector<Q>> m(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Q(lattice.form(i, j));

  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && m[p][col] == Q(0)) ++p;
    if (p == n) continue;
    std::swap(m[p], m[row]);
    const Q inv = Q(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m[r][col] == Q(0)) continue;
      const Q factor = m[r][col];
      for (std::size_t c = 0; c < n; ++c) m[r][c] -= factor * m[row][c];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  if (n - pivot_col.size() != 1) return std::nullopt;

  std::size_t free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free_col)) != pivot_col.end()) ++free_col;
  std::vector<Q> gen(n, Q(0));
  gen[free_col] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) gen[pivot_col[r]] = -m[r][free_col];

  std::int64_t denom = 1;
  for (const auto& x : gen) denom = std::lcm(denom, x.denominator());
  LatticeVector v(n);
  std::int64_t g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = (gen[i] * denom).numerator();
    g = std::gcd(g, v[i]);
  }
  for (auto& x : v) x /= g;
  if (!is_nonnegative(v)) v = -1 * v;
  if (!is_nonnegative(v)) return std::nullopt;
  return v;
}

/// <delta, x> for the null root delta of Q.
inline std::int64_t defect(const Quiver& q, const LatticeVector& x) {
  const auto delta = null_root(quiver_lattice(q));
  if (!delta) throw Error(ErrorKind::NoNullRoot, "quiver has no null root");
  return euler_form(q, *delta, x);
}

}  // namespace kacfold
