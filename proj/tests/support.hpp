#pragma once

// Brute-force oracles and random generators shared by the test binaries.
// Oracles deliberately avoid the library's fast paths: no log tables, no
// reduced state spaces, no Fitting splits.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "kacfold/kacfold.hpp"

namespace oracle {

using namespace kacfold;

inline constexpr std::uint64_t kSeed = 0x5eed2026;
inline constexpr int kSamples = 200;

/// Schoolbook product of two codes as polynomials over F_p, reduced modulo
/// x^m + sum modulus[i] x^i.
inline Elem poly_mul(std::uint32_t p, const std::vector<std::uint32_t>& modulus, Elem a, Elem b) {
  const std::size_t m = modulus.size();
  std::vector<std::int64_t> x(m), y(m), prod(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i, a /= p, b /= p) {
    x[i] = a % p;
    y[i] = b % p;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  for (std::size_t k = 2 * m - 1; k >= m; --k) {
    const std::int64_t c = prod[k];
    prod[k] = 0;
    for (std::size_t i = 0; i < m; ++i) prod[k - m + i] = ((prod[k - m + i] - c * modulus[i]) % p + p) % p;
    if (k == m) break;
  }
  Elem out = 0, place = 1;
  for (std::size_t i = 0; i < m; ++i, place *= p) out += static_cast<Elem>(prod[i]) * place;
  return out;
}

inline Elem poly_add(std::uint32_t p, std::size_t m, Elem a, Elem b) {
  Elem out = 0, place = 1;
  for (std::size_t i = 0; i < m; ++i, a /= p, b /= p, place *= p) out += ((a % p + b % p) % p) * place;
  return out;
}

/// Every n x n matrix; used to build groups and endomorphism rings by brute force.
inline void for_each_matrix(const FiniteField& f, std::size_t r, std::size_t c, const std::function<void(const Matrix&)>& fn) {
  Matrix m(r, c);
  const std::size_t total = r * c;
  for (;;) {
    fn(m);
    std::size_t k = 0;
    while (k < total && ++m.data[k] == f.size()) m.data[k++] = 0;
    if (k == total) return;
  }
}

inline std::vector<Matrix> general_linear_group(const FiniteField& f, std::size_t n) {
  std::vector<Matrix> g;
  for_each_matrix(f, n, n, [&](const Matrix& m) {
    if (is_invertible(f, m)) g.push_back(m);
  });
  return g;
}

inline std::uint64_t gl_order(std::uint64_t q, std::size_t n) {
  std::uint64_t qn = 1, out = 1;
  for (std::size_t i = 0; i < n; ++i) qn *= q;
  std::uint64_t qi = 1;
  for (std::size_t i = 0; i < n; ++i, qi *= q) out *= qn - qi;
  return out;
}

/// Isomorphism classes by acting with the whole product of general linear
/// groups on every matrix tuple; returns the class sizes, sorted.
inline std::vector<std::uint64_t> brute_class_sizes(const QuiverPtr& q, const FiniteField& f, const LatticeVector& d) {
  std::vector<std::vector<Matrix>> groups;
  for (auto x : d) groups.push_back(general_linear_group(f, static_cast<std::size_t>(x)));
  std::vector<std::pair<std::size_t, std::size_t>> shapes;
  std::size_t entries = 0;
  for (const auto& a : q->arrows()) {
    shapes.emplace_back(d[a.target], d[a.source]);
    entries += d[a.target] * d[a.source];
  }
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < entries; ++k) total *= f.size();

  auto unpack = [&](std::uint64_t code) {
    std::vector<Matrix> maps;
    std::vector<Elem> flat(entries);
    for (std::size_t k = 0; k < entries; ++k, code /= f.size()) flat[k] = static_cast<Elem>(code % f.size());
    std::size_t pos = 0;
    for (auto [r, c] : shapes) {
      Matrix m(r, c);
      for (auto& e : m.data) e = flat[pos++];
      maps.push_back(std::move(m));
    }
    return maps;
  };
  auto pack = [&](const std::vector<Matrix>& maps) {
    std::uint64_t code = 0, place = 1;
    for (const auto& m : maps)
      for (Elem e : m.data) {
        code += e * place;
        place *= f.size();
      }
    return code;
  };

  std::vector<bool> seen(total, false);
  std::vector<std::uint64_t> sizes;
  std::vector<std::size_t> pick(d.size(), 0);
  for (std::uint64_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    const auto maps = unpack(start);
    std::set<std::uint64_t> orbit;
    std::fill(pick.begin(), pick.end(), 0);
    for (;;) {
      std::vector<Matrix> moved;
      for (std::size_t k = 0; k < maps.size(); ++k) {
        const auto& a = q->arrows()[k];
        const Matrix& gs = groups[a.source][pick[a.source]];
        const Matrix& gt = groups[a.target][pick[a.target]];
        moved.push_back(multiply(f, multiply(f, gt, maps[k]), *inverse(f, gs)));
      }
      orbit.insert(pack(moved));
      std::size_t v = 0;
      while (v < d.size() && ++pick[v] == groups[v].size()) pick[v++] = 0;
      if (v == d.size()) break;
    }
    for (auto c : orbit) seen[c] = true;
    sizes.push_back(orbit.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

/// Indecomposable iff End X has no idempotent other than 0 and 1, checked on
/// every tuple of matrices commuting with the structure maps.
inline bool brute_indecomposable(const Representation& x) {
  if (x.is_zero()) return false;
  const FiniteField& f = x.field;
  const Quiver& q = *x.quiver;
  const std::size_t n = x.dim.size();
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + x.dim[i] * x.dim[i];
  std::vector<Elem> flat(offset[n], 0);
  auto block = [&](std::size_t i) {
    Matrix m(x.dim[i], x.dim[i]);
    std::copy_n(flat.begin() + offset[i], m.data.size(), m.data.begin());
    return m;
  };
  for (;;) {
    std::vector<Matrix> phi;
    for (std::size_t i = 0; i < n; ++i) phi.push_back(block(i));
    bool hom = true;
    for (std::size_t k = 0; k < q.arrow_count() && hom; ++k) {
      const auto& a = q.arrows()[k];
      hom = multiply(f, phi[a.target], x.maps[k]) == multiply(f, x.maps[k], phi[a.source]);
    }
    if (hom) {
      bool idem = true, zero = true, one = true;
      for (std::size_t i = 0; i < n; ++i) {
        idem = idem && multiply(f, phi[i], phi[i]) == phi[i];
        zero = zero && phi[i].is_zero();
        one = one && phi[i] == identity_matrix(x.dim[i]);
      }
      if (idem && !zero && !one) return false;
    }
    std::size_t k = 0;
    while (k < flat.size() && ++flat[k] == f.size()) flat[k++] = 0;
    if (k == flat.size()) return true;
  }
}

/// Positive real roots inside a box, as the W-orbit of the simple roots
/// under all reflections (not only height-increasing ones).
inline std::set<LatticeVector> weyl_orbit_real_roots(const RootLattice& l, std::int64_t max_height, std::int64_t box) {
  const std::size_t n = l.rank();
  std::set<LatticeVector> seen;
  std::vector<LatticeVector> queue;
  for (std::size_t i = 0; i < n; ++i) {
    seen.insert(unit_vector(n, i));
    queue.push_back(unit_vector(n, i));
  }
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (std::size_t i = 0; i < n; ++i) {
      LatticeVector w = reflect(l, static_cast<int>(i), queue[h]);
      bool inside = true;
      for (auto c : w) inside = inside && c >= -box && c <= box;
      if (inside && seen.insert(w).second) queue.push_back(w);
    }
  std::set<LatticeVector> out;
  for (const auto& v : seen)
    if (is_nonnegative(v) && height(v) <= max_height) out.insert(v);
  return out;
}

// ---- generators ----

inline LatticeVector random_vector(std::mt19937_64& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> d(lo, hi);
  LatticeVector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

inline Elem random_elem(std::mt19937_64& rng, const FiniteField& f) {
  return static_cast<Elem>(std::uniform_int_distribution<std::uint32_t>(0, f.size() - 1)(rng));
}

inline Representation random_representation(std::mt19937_64& rng, const QuiverPtr& q, const FiniteField& f, const LatticeVector& d) {
  std::vector<Matrix> maps;
  for (const auto& a : q->arrows()) {
    Matrix m(d[a.target], d[a.source]);
    for (auto& e : m.data) e = random_elem(rng, f);
    maps.push_back(std::move(m));
  }
  return make_representation(q, f, d, std::move(maps));
}

/// Random a-fixed dimension vector with entries in [0, hi].
inline LatticeVector random_fixed_vector(std::mt19937_64& rng, const OrbitStructure& os, std::int64_t hi) {
  LatticeVector w = random_vector(rng, os.orbit_count(), 0, hi);
  LatticeVector v(os.orbit_of.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = w[os.orbit_of[i]];
  return v;
}

inline QuiverPtr a2() { return share(validate_quiver({{"1", "2"}, {{"r", "1", "2"}}})); }

inline QuiverPtr a3_linear() { return share(validate_quiver({{"1", "2", "3"}, {{"r1", "1", "2"}, {"r2", "2", "3"}}})); }

}  // namespace oracle
