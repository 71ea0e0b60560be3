#pragma once

#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "kacfold/error.hpp"
#include "kacfold/lattice.hpp"
#include "kacfold/quiver.hpp"

namespace kacfold {

/// a_ii = 2, a_ij = -(edges between i and j). Orientation is ignored.
inline IntMatrix symmetric_gcm(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  for (const auto& arrow : q.arrows()) {
    a(arrow.source, arrow.target) -= 1;
    a(arrow.target, arrow.source) -= 1;
  }
  return a;
}

/// Undirected edge of a valued graph between orbits i < j, stored as the
/// lossless weight |b_ij|.
struct ValuedEdge {
  int i;
  int j;
  std::int64_t weight;

  bool operator==(const ValuedEdge&) const = default;
};

struct FoldData {
  OrbitStructure orbits;
  IntMatrix B;
  std::vector<std::int64_t> d;
  IntMatrix C;
  std::vector<ValuedEdge> valued_graph;

  /// Display pair (|c_ji|, |c_ij|) for the edge i - j.
  std::pair<std::int64_t, std::int64_t> valuation(int i, int j) const {
    return {std::abs(C(j, i)), std::abs(C(i, j))};
  }
};

namespace detail {

inline IntMatrix cartan_from_symmetrised(const IntMatrix& b, const std::vector<std::int64_t>& d) {
  IntMatrix c(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (b(i, j) % d[i] != 0)
        throw Error(ErrorKind::InvalidValuedQuiver, "symmetriser entry does not divide b at row " + std::to_string(i));
      c(i, j) = b(i, j) / d[i];
    }
  return c;
}

inline std::vector<ValuedEdge> edges_of(const IntMatrix& b) {
  std::vector<ValuedEdge> edges;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = i + 1; j < b.cols(); ++j)
      if (b(i, j) != 0) edges.push_back({static_cast<int>(i), static_cast<int>(j), -b(i, j)});
  return edges;
}

}  // namespace detail

inline FoldData fold(const Quiver& q, const Automorphism& a) {
  FoldData f;
  f.orbits = orbit_structure(q, a);
  const std::size_t n = f.orbits.orbit_count();
  f.B = IntMatrix(n, n);
  f.d = f.orbits.sizes;
  for (std::size_t i = 0; i < n; ++i) f.B(i, i) = 2 * f.d[i];
  for (const auto& arrow : q.arrows()) {
    const int i = f.orbits.orbit_of[arrow.source];
    const int j = f.orbits.orbit_of[arrow.target];
    f.B(i, j) -= 1;
    f.B(j, i) -= 1;
  }
  f.C = detail::cartan_from_symmetrised(f.B, f.d);
  f.valued_graph = detail::edges_of(f.B);
  return f;
}

struct ValuedArrow {
  std::string from;
  std::string to;
  std::int64_t b;  // positive; enters B as -b
};

/// Oriented valued quiver with an explicit symmetriser.
struct ValuedQuiver {
  std::vector<std::string> vertices;
  std::vector<std::int64_t> d;
  std::vector<ValuedArrow> arrows;

  int vertex_index(const std::string& id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == id) return static_cast<int>(i);
    throw Error(ErrorKind::UnknownVertex, "no vertex '" + id + "' in valued quiver");
  }

  IntMatrix symmetrised_matrix() const {
    IntMatrix b(vertices.size(), vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) b(i, i) = 2 * d[i];
    for (const auto& e : arrows) {
      const int i = vertex_index(e.from);
      const int j = vertex_index(e.to);
      b(i, j) -= e.b;
      b(j, i) -= e.b;
    }
    return b;
  }

  IntMatrix cartan_matrix() const { return detail::cartan_from_symmetrised(symmetrised_matrix(), d); }
};

inline ValuedQuiver validate_valued_quiver(ValuedQuiver vq) {
  std::map<std::string, int> seen;
  for (const auto& v : vq.vertices)
    if (!seen.emplace(v, 0).second) throw Error(ErrorKind::DuplicateId, "valued vertex '" + v + "' declared twice");
  if (vq.d.size() != vq.vertices.size()) throw Error(ErrorKind::InvalidValuedQuiver, "symmetriser length differs from vertex count");
  for (std::size_t i = 0; i < vq.d.size(); ++i)
    if (vq.d[i] < 1) throw Error(ErrorKind::InvalidValuedQuiver, "symmetriser of '" + vq.vertices[i] + "' must be positive");
  for (const auto& e : vq.arrows) {
    if (!seen.count(e.from) || !seen.count(e.to)) throw Error(ErrorKind::DanglingEndpoint, "valued edge " + e.from + "->" + e.to);
    if (e.from == e.to) throw Error(ErrorKind::VertexLoop, "valued edge at '" + e.from + "'");
    if (e.b < 1) throw Error(ErrorKind::InvalidValuedQuiver, "edge weight must be positive");
    const auto di = vq.d[vq.vertex_index(e.from)];
    const auto dj = vq.d[vq.vertex_index(e.to)];
    if (e.b % di != 0 || e.b % dj != 0)
      throw Error(ErrorKind::InvalidValuedQuiver, "edge " + e.from + "->" + e.to + ": symmetriser does not divide b=" + std::to_string(e.b));
  }
  return vq;
}

/// The folded valued quiver of (Q, a): one oriented edge per arrow orbit,
/// weight = orbit length, orbit vertices named by their least member.
inline ValuedQuiver folded_valued_quiver(const Quiver& q, const Automorphism& a) {
  const FoldData f = fold(q, a);
  ValuedQuiver vq;
  for (const auto& orbit : f.orbits.vertex_orbits) vq.vertices.push_back(q.vertices()[orbit.front()]);
  vq.d = f.d;
  for (const auto& orbit : f.orbits.arrow_orbits) {
    const auto& arrow = q.arrows()[orbit.front()];
    vq.arrows.push_back({vq.vertices[f.orbits.orbit_of[arrow.source]], vq.vertices[f.orbits.orbit_of[arrow.target]],
                         static_cast<std::int64_t>(orbit.size())});
  }
  return vq;
}

inline std::int64_t bilinear_q(const IntMatrix& a, const LatticeVector& x, const LatticeVector& y) { return bilinear(a, x, y); }
inline std::int64_t bilinear_gamma(const IntMatrix& b, const LatticeVector& x, const LatticeVector& y) { return bilinear(b, x, y); }

/// <x,y> = sum_i x_i y_i - sum_{r:i->j} x_i y_j.
inline std::int64_t euler_form(const Quiver& q, const LatticeVector& x, const LatticeVector& y) {
  if (x.size() != q.vertex_count() || y.size() != q.vertex_count())
    throw Error(ErrorKind::LatticeMismatch, "euler form arguments must live in the quiver lattice");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  for (const auto& arrow : q.arrows()) s -= x[arrow.source] * y[arrow.target];
  return s;
}

inline LatticeVector f_map(const OrbitStructure& orbits, const Automorphism& a, const LatticeVector& v) {
  if (v.size() != orbits.orbit_of.size()) throw Error(ErrorKind::LatticeMismatch, "vector is not in the quiver lattice");
  if (!is_fixed(a, v)) throw Error(ErrorKind::NotFixed, to_string(v) + " is not fixed by the automorphism");
  LatticeVector out(orbits.orbit_count());
  for (std::size_t k = 0; k < orbits.orbit_count(); ++k) out[k] = v[orbits.vertex_orbits[k].front()];
  return out;
}

inline LatticeVector f_map(const Quiver& q, const Automorphism& a, const LatticeVector& v) {
  return f_map(orbit_structure(q, a), a, v);
}

inline LatticeVector f_inverse(const OrbitStructure& orbits, const LatticeVector& w) {
  if (w.size() != orbits.orbit_count()) throw Error(ErrorKind::LatticeMismatch, "vector is not in the folded lattice");
  LatticeVector out(orbits.orbit_of.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = w[orbits.orbit_of[i]];
  return out;
}

inline LatticeVector f_inverse(const Quiver& q, const Automorphism& a, const LatticeVector& w) {
  return f_inverse(orbit_structure(q, a), w);
}

/// v + a(v) + ... + a^{r-1}(v) with r minimal such that a^r(v) = v.
inline LatticeVector sigma(const Automorphism& a, const LatticeVector& v) {
  LatticeVector sum = v;
  for (LatticeVector w = act_on_dimension_vector(a, v); w != v; w = act_on_dimension_vector(a, w)) sum = sum + w;
  return sum;
}

/// Half of w^T B w. The diagonal of B is even, so this is always an integer.
inline std::int64_t root_length(const IntMatrix& b, const LatticeVector& w) { return bilinear(b, w, w) / 2; }

}  // namespace kacfold
