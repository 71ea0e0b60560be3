#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kacfold/error.hpp"
#include "kacfold/field.hpp"
#include "kacfold/lattice.hpp"
#include "kacfold/matrix.hpp"
#include "kacfold/quiver.hpp"

namespace kacfold {

using QuiverPtr = std::shared_ptr<const Quiver>;

inline QuiverPtr share(Quiver q) { return std::make_shared<const Quiver>(std::move(q)); }

/// Spaces F^{dim_i} at each vertex and a dim_j x dim_i matrix per arrow i -> j.
struct Representation {
  QuiverPtr quiver;
  FiniteField field;
  LatticeVector dim;
  std::vector<Matrix> maps;

  const Matrix& map(int arrow) const { return maps.at(arrow); }
  bool is_zero() const { return kacfold::is_zero(dim); }

  bool operator==(const Representation& o) const {
    return (quiver == o.quiver || *quiver == *o.quiver) && field == o.field && dim == o.dim && maps == o.maps;
  }
};

inline Representation make_representation(QuiverPtr q, FiniteField f, LatticeVector dim, std::vector<Matrix> maps) {
  if (dim.size() != q->vertex_count()) throw Error(ErrorKind::LatticeMismatch, "dimension vector length differs from the vertex count");
  if (maps.size() != q->arrow_count()) throw Error(ErrorKind::BadParameter, "expected one matrix per arrow");
  for (auto x : dim)
    if (x < 0) throw Error(ErrorKind::BadParameter, "negative dimension");
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const auto& a = q->arrows()[k];
    if (maps[k].rows != static_cast<std::size_t>(dim[a.target]) || maps[k].cols != static_cast<std::size_t>(dim[a.source]))
      throw Error(ErrorKind::BadParameter, "matrix of arrow '" + a.id + "' has shape " + std::to_string(maps[k].rows) + "x" +
                                               std::to_string(maps[k].cols));
    for (Elem x : maps[k].data)
      if (x >= f.size()) throw Error(ErrorKind::BadParameter, "entry of arrow '" + a.id + "' is not in F_" + f.name());
  }
  return {std::move(q), std::move(f), std::move(dim), std::move(maps)};
}

inline Representation zero_maps(QuiverPtr q, FiniteField f, LatticeVector dim) {
  std::vector<Matrix> maps;
  for (const auto& a : q->arrows()) maps.emplace_back(dim.at(a.target), dim.at(a.source));
  return make_representation(std::move(q), std::move(f), std::move(dim), std::move(maps));
}

inline Representation simple_representation(QuiverPtr q, FiniteField f, int vertex) {
  LatticeVector dim(q->vertex_count(), 0);
  dim.at(vertex) = 1;
  return zero_maps(std::move(q), std::move(f), std::move(dim));
}

namespace detail {

inline void check_compatible(const Representation& x, const Representation& y) {
  if (!(x.field == y.field)) throw Error(ErrorKind::FieldMismatch, "representations over F_" + x.field.name() + " and F_" + y.field.name());
  if (x.quiver != y.quiver && !(*x.quiver == *y.quiver))
    throw Error(ErrorKind::QuiverMismatch, "representations of different quivers");
}

}  // namespace detail

inline Representation direct_sum(const Representation& x, const Representation& y) {
  detail::check_compatible(x, y);
  Representation s{x.quiver, x.field, x.dim + y.dim, {}};
  for (std::size_t k = 0; k < x.maps.size(); ++k) {
    const Matrix& a = x.maps[k];
    const Matrix& b = y.maps[k];
    Matrix m(a.rows + b.rows, a.cols + b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
      for (std::size_t j = 0; j < a.cols; ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows; ++i)
      for (std::size_t j = 0; j < b.cols; ++j) m(a.rows + i, a.cols + j) = b(i, j);
    s.maps.push_back(std::move(m));
  }
  return s;
}

inline Representation direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw Error(ErrorKind::BadParameter, "empty direct sum");
  Representation s = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) s = direct_sum(s, parts[k]);
  return s;
}

/// A tuple (phi_i) of dim Y_i x dim X_i matrices.
using Morphism = std::vector<Matrix>;

struct HomBasis {
  std::vector<Morphism> basis;

  std::size_t dimension() const { return basis.size(); }
};

namespace detail {

/// Matrix of (phi_i) -> (phi_j X_rho - Y_rho phi_i)_rho with phi flattened
/// row-major vertex by vertex.
inline Matrix hom_system(const Representation& x, const Representation& y, std::vector<std::size_t>& offset) {
  const Quiver& q = *x.quiver;
  const FiniteField& f = x.field;
  const std::size_t n = q.vertex_count();
  offset.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + y.dim[i] * x.dim[i];
  std::size_t equations = 0;
  for (const auto& a : q.arrows()) equations += y.dim[a.target] * x.dim[a.source];
  Matrix sys(equations, offset[n]);
  std::size_t row = 0;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const auto& a = q.arrows()[k];
    const std::size_t di = x.dim[a.source], dj = x.dim[a.target];
    const std::size_t ei = y.dim[a.source], ej = y.dim[a.target];
    const Matrix& xr = x.maps[k];
    const Matrix& yr = y.maps[k];
    for (std::size_t r = 0; r < ej; ++r)
      for (std::size_t c = 0; c < di; ++c, ++row) {
        // sum_m phi_j[r][m] X[m][c]
        for (std::size_t m = 0; m < dj; ++m)
          if (xr(m, c)) sys(row, offset[a.target] + r * dj + m) = f.add(sys(row, offset[a.target] + r * dj + m), xr(m, c));
        // - sum_m Y[r][m] phi_i[m][c]
        for (std::size_t m = 0; m < ei; ++m)
          if (yr(r, m)) sys(row, offset[a.source] + m * di + c) = f.sub(sys(row, offset[a.source] + m * di + c), yr(r, m));
      }
  }
  return sys;
}

inline Morphism unflatten(const Representation& x, const Representation& y, const std::vector<std::size_t>& offset,
                          const std::vector<Elem>& v) {
  Morphism phi;
  for (std::size_t i = 0; i < x.dim.size(); ++i) {
    Matrix m(y.dim[i], x.dim[i]);
    std::copy(v.begin() + offset[i], v.begin() + offset[i + 1], m.data.begin());
    phi.push_back(std::move(m));
  }
  return phi;
}

}  // namespace detail

inline HomBasis hom_space(const Representation& x, const Representation& y) {
  detail::check_compatible(x, y);
  std::vector<std::size_t> offset;
  const Matrix sys = detail::hom_system(x, y, offset);
  const Matrix ns = nullspace(x.field, sys);
  HomBasis hb;
  for (std::size_t k = 0; k < ns.cols; ++k) {
    std::vector<Elem> v(ns.rows);
    for (std::size_t i = 0; i < ns.rows; ++i) v[i] = ns(i, k);
    hb.basis.push_back(detail::unflatten(x, y, offset, v));
  }
  return hb;
}

/// Dimension of the cokernel of the map whose kernel is Hom(X, Y).
inline std::size_t ext_dimension(const Representation& x, const Representation& y) {
  detail::check_compatible(x, y);
  std::vector<std::size_t> offset;
  const Matrix sys = detail::hom_system(x, y, offset);
  return sys.rows - rank(x.field, sys);
}

inline Morphism combine(const FiniteField& f, const std::vector<Morphism>& basis, const std::vector<Elem>& coeffs) {
  Morphism out = basis.front();
  for (auto& m : out) std::fill(m.data.begin(), m.data.end(), 0);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k] == 0) continue;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = add(f, out[i], scale(f, coeffs[k], basis[k][i]));
  }
  return out;
}

inline bool is_invertible(const FiniteField& f, const Morphism& phi) {
  for (const auto& m : phi)
    if (!is_invertible(f, m)) return false;
  return true;
}

/// Search limits shared by the exhaustive fallbacks.
struct SearchOptions {
  std::uint64_t cap = std::uint64_t{1} << 20;  // largest q^dim searched exhaustively
  std::uint64_t seed = 0x6b6163666f6c64ULL;
  int random_tries = 64;
};

namespace detail {

inline std::uint64_t bounded_power(std::uint64_t q, std::size_t k, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > limit / q + 1) return limit + 1;
    r *= q;
  }
  return r;
}

/// Walks every coefficient vector of length k over F, stopping when fn returns true.
template <typename Fn>
bool for_each_coefficients(const FiniteField& f, std::size_t k, Fn&& fn) {
  std::vector<Elem> c(k, 0);
  for (;;) {
    if (fn(c)) return true;
    std::size_t pos = 0;
    while (pos < k && ++c[pos] == f.size()) c[pos++] = 0;
    if (pos == k) return false;
  }
}

inline std::vector<Elem> random_coefficients(const FiniteField& f, std::size_t k, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> dist(0, f.size() - 1);
  std::vector<Elem> c(k);
  for (auto& x : c) x = dist(rng);
  return c;
}

/// y = x^D with D the largest vertex dimension; returns y when it is neither
/// zero nor invertible, since then X = im(y) + ker(y) properly.
inline std::optional<Morphism> fitting_split(const Representation& x, const Morphism& e) {
  std::int64_t dmax = 0;
  for (auto d : x.dim) dmax = std::max(dmax, d);
  Morphism y;
  bool all_zero = true, all_invertible = true;
  for (const auto& m : e) {
    Matrix p = power(x.field, m, static_cast<std::uint64_t>(dmax));
    if (!p.is_zero()) all_zero = false;
    if (!is_invertible(x.field, p)) all_invertible = false;
    y.push_back(std::move(p));
  }
  if (all_zero || all_invertible) return std::nullopt;
  return y;
}

/// Idempotent projecting onto one connected component of the support.
inline std::optional<Morphism> component_idempotent(const Representation& x) {
  const Quiver& q = *x.quiver;
  const std::size_t n = q.vertex_count();
  std::vector<int> comp(n, -1);
  int first = -1;
  for (std::size_t v = 0; v < n; ++v)
    if (x.dim[v] > 0) {
      first = static_cast<int>(v);
      break;
    }
  if (first < 0) return std::nullopt;
  std::vector<int> stack{first};
  comp[first] = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& a : q.arrows()) {
      int w = -1;
      if (a.source == v) w = a.target;
      if (a.target == v) w = a.source;
      if (w >= 0 && x.dim[w] > 0 && comp[w] < 0) {
        comp[w] = 0;
        stack.push_back(w);
      }
    }
  }
  bool other = false;
  for (std::size_t v = 0; v < n; ++v)
    if (x.dim[v] > 0 && comp[v] < 0) other = true;
  if (!other) return std::nullopt;
  Morphism e;
  for (std::size_t v = 0; v < n; ++v) e.push_back(comp[v] == 0 ? identity_matrix(x.dim[v]) : Matrix(x.dim[v], x.dim[v]));
  return e;
}

/// An endomorphism that is neither nilpotent nor invertible, or nothing when
/// End(X) is local. Random probes come first; a clean result is certified by
/// exhaustive search when End(X) is small enough.
inline std::optional<Morphism> find_splitting(const Representation& x, const SearchOptions& opts, bool shuffle = false) {
  if (auto e = component_idempotent(x)) return e;
  const HomBasis end = hom_space(x, x);
  const std::size_t k = end.dimension();
  if (k <= 1) return std::nullopt;
  const FiniteField& f = x.field;
  std::mt19937_64 rng(opts.seed);

  auto probe = [&](const std::vector<Elem>& c) { return fitting_split(x, combine(f, end.basis, c)); };
  if (shuffle) {
    for (int t = 0; t < opts.random_tries; ++t)
      if (auto y = probe(random_coefficients(f, k, rng))) return y;
  }
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Elem> c(k, 0);
    c[i] = 1;
    if (auto y = probe(c)) return y;
    for (std::size_t j = i + 1; j < k; ++j) {
      c[j] = 1;
      if (auto y = probe(c)) return y;
      c[j] = 0;
    }
  }
  for (int t = 0; t < opts.random_tries; ++t)
    if (auto y = probe(random_coefficients(f, k, rng))) return y;

  const std::uint64_t total = bounded_power(f.size(), k, opts.cap);
  if (total > opts.cap)
    throw Error(ErrorKind::EndRingTooLarge, "End(X) has dimension " + std::to_string(k) + " over F_" + f.name() + ", above the search cap");
  std::optional<Morphism> found;
  for_each_coefficients(f, k, [&](const std::vector<Elem>& c) {
    found = probe(c);
    return found.has_value();
  });
  return found;
}

/// X restricted to the complementary subrepresentations im(y) and ker(y).
inline std::pair<Representation, Representation> split_by(const Representation& x, const Morphism& y) {
  const FiniteField& f = x.field;
  const Quiver& q = *x.quiver;
  std::vector<Matrix> inv_basis(q.vertex_count());
  std::vector<std::size_t> image_dim(q.vertex_count());
  std::vector<Matrix> basis(q.vertex_count());
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    const Matrix im = column_space(f, y[i]);
    const Matrix ker = nullspace(f, y[i]);
    image_dim[i] = im.cols;
    basis[i] = hstack({im, ker}, x.dim[i]);
    inv_basis[i] = *inverse(f, basis[i]);
  }
  LatticeVector da(q.vertex_count()), db(q.vertex_count());
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    da[i] = static_cast<std::int64_t>(image_dim[i]);
    db[i] = x.dim[i] - da[i];
  }
  Representation a{x.quiver, f, da, {}};
  Representation b{x.quiver, f, db, {}};
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const auto& arrow = q.arrows()[k];
    const Matrix m = multiply(f, multiply(f, inv_basis[arrow.target], x.maps[k]), basis[arrow.source]);
    const std::size_t ai = image_dim[arrow.source], aj = image_dim[arrow.target];
    Matrix ma(aj, ai), mb(db[arrow.target], db[arrow.source]);
    for (std::size_t r = 0; r < aj; ++r)
      for (std::size_t c = 0; c < ai; ++c) ma(r, c) = m(r, c);
    for (std::size_t r = 0; r < mb.rows; ++r)
      for (std::size_t c = 0; c < mb.cols; ++c) mb(r, c) = m(aj + r, ai + c);
    a.maps.push_back(std::move(ma));
    b.maps.push_back(std::move(mb));
  }
  return {std::move(a), std::move(b)};
}

}  // namespace detail

/// True iff End(X) is local.
inline bool is_indecomposable(const Representation& x, const SearchOptions& opts = {}) {
  if (x.is_zero()) return false;
  return !detail::find_splitting(x, opts).has_value();
}

inline bool summand_less(const Representation& a, const Representation& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  return a.maps < b.maps;
}

/// Indecomposable summands, sorted by dimension vector and then matrices.
/// `shuffle` probes random endomorphisms first, which changes the splitting order.
inline std::vector<Representation> decompose(const Representation& x, const SearchOptions& opts = {}, bool shuffle = false) {
  std::vector<Representation> out;
  std::vector<Representation> work{x};
  std::uint64_t salt = 0;
  while (!work.empty()) {
    Representation r = std::move(work.back());
    work.pop_back();
    if (r.is_zero()) continue;
    SearchOptions local = opts;
    local.seed = opts.seed + 0x9e3779b97f4a7c15ULL * ++salt;
    if (auto y = detail::find_splitting(r, local, shuffle)) {
      auto [a, b] = detail::split_by(r, *y);
      work.push_back(std::move(a));
      work.push_back(std::move(b));
    } else {
      out.push_back(std::move(r));
    }
  }
  std::sort(out.begin(), out.end(), summand_less);
  return out;
}

inline bool is_isomorphic(const Representation& x, const Representation& y, const SearchOptions& opts = {}) {
  detail::check_compatible(x, y);
  if (x.dim != y.dim) return false;
  if (x.is_zero()) return true;
  const HomBasis hom = hom_space(x, y);
  const std::size_t k = hom.dimension();
  if (k == 0) return false;
  const FiniteField& f = x.field;
  for (const auto& phi : hom.basis)
    if (is_invertible(f, phi)) return true;
  std::mt19937_64 rng(opts.seed);
  for (int t = 0; t < opts.random_tries; ++t)
    if (is_invertible(f, combine(f, hom.basis, detail::random_coefficients(f, k, rng)))) return true;
  const std::uint64_t total = detail::bounded_power(f.size(), k, opts.cap);
  if (total <= opts.cap)
    return detail::for_each_coefficients(f, k, [&](const std::vector<Elem>& c) { return is_invertible(f, combine(f, hom.basis, c)); });

  // Repeated summands make invertible combinations rare; compare the
  // indecomposable summands instead, whose Hom spaces are local.
  const auto xs = decompose(x, opts), ys = decompose(y, opts);
  if (xs.size() > 1 || ys.size() > 1) {
    if (xs.size() != ys.size()) return false;
    std::vector<bool> used(ys.size(), false);
    for (const auto& p : xs) {
      bool matched = false;
      for (std::size_t j = 0; j < ys.size() && !matched; ++j)
        if (!used[j] && is_isomorphic(p, ys[j], opts)) used[j] = matched = true;
      if (!matched) return false;
    }
    return true;
  }
  throw Error(ErrorKind::HomSpaceTooLarge, "Hom(X,Y) has dimension " + std::to_string(k) + " over F_" + f.name() + ", above the search cap");
}

/// (aX)_i = X_{a^-1 i}, (aX)_rho = X_{a^-1 rho}.
inline Representation twist_auto(const Automorphism& a, const Representation& x) {
  Representation t = x;
  for (std::size_t i = 0; i < x.dim.size(); ++i) t.dim[a.vertex(static_cast<int>(i))] = x.dim[i];
  for (std::size_t k = 0; k < x.maps.size(); ++k) t.maps[a.arrow(static_cast<int>(k))] = x.maps[k];
  return t;
}

/// Every entry raised to the power p^s.
inline Representation twist_frobenius(int s, const Representation& x) {
  Representation t = x;
  for (auto& m : t.maps)
    for (auto& e : m.data) e = x.field.frobenius(e, s);
  return t;
}

enum class ReflectionDirection { Plus, Minus };

/// R_i^+ at a sink (kernel construction) or R_i^- at a source (cokernel).
inline Representation reflection_functor(const Representation& x, int vertex, ReflectionDirection dir) {
  const Quiver& q = *x.quiver;
  const FiniteField& f = x.field;
  if (vertex < 0 || static_cast<std::size_t>(vertex) >= q.vertex_count())
    throw Error(ErrorKind::UnknownVertex, "no vertex with index " + std::to_string(vertex));
  std::vector<int> incident;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const auto& a = q.arrows()[k];
    if (a.source == vertex || a.target == vertex) incident.push_back(static_cast<int>(k));
  }
  Representation out{share(reflect_quiver(q, vertex)), f, x.dim, x.maps};
  if (dir == ReflectionDirection::Plus) {
    if (!q.is_sink(vertex)) throw Error(ErrorKind::NotSink, "vertex '" + q.vertices()[vertex] + "' is not a sink");
    std::vector<Matrix> blocks;
    for (int k : incident) blocks.push_back(x.maps[k]);
    const Matrix h = hstack(blocks, x.dim[vertex]);
    const Matrix kernel = nullspace(f, h);  // (sum of source dims) x m
    out.dim[vertex] = static_cast<std::int64_t>(kernel.cols);
    std::size_t r0 = 0;
    for (int k : incident) {
      const std::size_t ds = x.dim[q.arrows()[k].source];
      out.maps[k] = row_block(kernel, r0, ds);
      r0 += ds;
    }
  } else {
    if (!q.is_source(vertex)) throw Error(ErrorKind::NotSource, "vertex '" + q.vertices()[vertex] + "' is not a source");
    std::vector<Matrix> blocks;
    for (int k : incident) blocks.push_back(x.maps[k]);
    const Matrix h = vstack(blocks, x.dim[vertex]);
    const Matrix pi = left_nullspace(f, h);  // m x (sum of target dims)
    out.dim[vertex] = static_cast<std::int64_t>(pi.rows);
    std::size_t c0 = 0;
    for (int k : incident) {
      const std::size_t dt = x.dim[q.arrows()[k].target];
      out.maps[k] = column_block(pi, c0, dt);
      c0 += dt;
    }
  }
  return out;
}

/// R^{+/-} applied at every vertex of one orbit.
inline Representation s_fold_functor(const Representation& x, const OrbitStructure& orbits, int orbit, ReflectionDirection dir) {
  Representation r = x;
  for (int v : orbits.vertex_orbits.at(orbit)) r = reflection_functor(r, v, dir);
  return r;
}

struct OrbitSum {
  Representation sum;
  int period = 1;
  std::vector<Representation> summands;  // Z, aZ, ..., a^{r-1}Z
};

/// Z + aZ + ... + a^{r-1}Z with r minimal such that a^r Z is isomorphic to Z.
inline OrbitSum ii_orbit_sum(const Automorphism& a, const Representation& z, const SearchOptions& opts = {}) {
  OrbitSum out;
  out.summands.push_back(z);
  Representation t = twist_auto(a, z);
  while (!is_isomorphic(t, z, opts)) {
    out.summands.push_back(t);
    t = twist_auto(a, t);
  }
  out.period = static_cast<int>(out.summands.size());
  out.sum = direct_sum(out.summands);
  return out;
}

}  // namespace kacfold
