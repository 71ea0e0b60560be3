#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "kacfold/error.hpp"
#include "kacfold/lattice.hpp"

namespace kacfold {

struct RawArrow {
  std::string id;
  std::string from;
  std::string to;
};

/// Unvalidated quiver description, e.g. as read from a file.
struct RawQuiver {
  std::vector<std::string> vertices;
  std::vector<RawArrow> arrows;
};

struct Arrow {
  std::string id;
  int source;
  int target;

  bool operator==(const Arrow&) const = default;
};

/// A finite quiver without vertex loops. Vertices and arrows are addressed by
/// their position in declaration order; identifiers are kept for I/O.
class Quiver {
 public:
  Quiver() = default;

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  int vertex_index(const std::string& id) const {
    auto it = vertex_lookup_.find(id);
    if (it == vertex_lookup_.end()) throw Error(ErrorKind::UnknownVertex, "no vertex '" + id + "'");
    return it->second;
  }

  int arrow_index(const std::string& id) const {
    auto it = arrow_lookup_.find(id);
    if (it == arrow_lookup_.end()) throw Error(ErrorKind::ParseError, "no arrow '" + id + "'");
    return it->second;
  }

  /// Number of edges joining i and j in either direction.
  int edge_count(int i, int j) const {
    int n = 0;
    for (const auto& a : arrows_)
      if ((a.source == i && a.target == j) || (a.source == j && a.target == i)) ++n;
    return n;
  }

  bool is_sink(int v) const {
    return std::none_of(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.source == v; });
  }
  bool is_source(int v) const {
    return std::none_of(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.target == v; });
  }

  RawQuiver raw() const {
    RawQuiver r;
    r.vertices = vertices_;
    for (const auto& a : arrows_) r.arrows.push_back({a.id, vertices_[a.source], vertices_[a.target]});
    return r;
  }

  bool operator==(const Quiver& o) const { return vertices_ == o.vertices_ && arrows_ == o.arrows_; }

  friend Quiver validate_quiver(const RawQuiver& raw);

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, int> vertex_lookup_;
  std::unordered_map<std::string, int> arrow_lookup_;
};

inline Quiver validate_quiver(const RawQuiver& raw) {
  Quiver q;
  for (const auto& v : raw.vertices) {
    if (!q.vertex_lookup_.emplace(v, static_cast<int>(q.vertices_.size())).second)
      throw Error(ErrorKind::DuplicateId, "vertex '" + v + "' declared twice");
    q.vertices_.push_back(v);
  }
  for (const auto& a : raw.arrows) {
    auto s = q.vertex_lookup_.find(a.from);
    auto t = q.vertex_lookup_.find(a.to);
    if (s == q.vertex_lookup_.end() || t == q.vertex_lookup_.end())
      throw Error(ErrorKind::DanglingEndpoint, "arrow '" + a.id + "' has an undeclared endpoint");
    if (s->second == t->second) throw Error(ErrorKind::VertexLoop, "arrow '" + a.id + "' is a loop at '" + a.from + "'");
    if (!q.arrow_lookup_.emplace(a.id, static_cast<int>(q.arrows_.size())).second)
      throw Error(ErrorKind::DuplicateId, "arrow '" + a.id + "' declared twice");
    q.arrows_.push_back({a.id, s->second, t->second});
  }
  return q;
}

/// The quiver obtained by reversing every arrow incident to `vertex`.
inline Quiver reflect_quiver(const Quiver& q, int vertex) {
  RawQuiver r = q.raw();
  for (std::size_t k = 0; k < r.arrows.size(); ++k) {
    const auto& a = q.arrows()[k];
    if (a.source == vertex || a.target == vertex) std::swap(r.arrows[k].from, r.arrows[k].to);
  }
  return validate_quiver(r);
}

/// Admissible automorphism given as compatible vertex and arrow permutations.
struct Automorphism {
  std::vector<int> vertex_map;
  std::vector<int> arrow_map;
  int order = 1;

  int vertex(int v) const { return vertex_map[v]; }
  int arrow(int a) const { return arrow_map[a]; }
  bool is_identity() const { return order == 1; }
  bool operator==(const Automorphism&) const = default;
};

namespace detail {

inline bool is_permutation_of(const std::vector<int>& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

inline std::int64_t permutation_order(const std::vector<int>& p) {
  std::int64_t order = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::int64_t len = 0;
    for (std::size_t x = s; !seen[x]; x = p[x]) {
      seen[x] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

}  // namespace detail

/// Validates index-form permutations and computes the exact order.
inline Automorphism validate_automorphism(const Quiver& q, std::vector<int> vertex_map, std::vector<int> arrow_map) {
  if (!detail::is_permutation_of(vertex_map, q.vertex_count()))
    throw Error(ErrorKind::NotPermutation, "vertex map is not a permutation of the vertices");
  if (!detail::is_permutation_of(arrow_map, q.arrow_count()))
    throw Error(ErrorKind::NotPermutation, "arrow map is not a permutation of the arrows");
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const auto& a = q.arrows()[k];
    const auto& b = q.arrows()[arrow_map[k]];
    if (b.source != vertex_map[a.source] || b.target != vertex_map[a.target])
      throw Error(ErrorKind::Incompatible, "arrow '" + a.id + "' is sent to '" + b.id + "' whose endpoints disagree with the vertex map");
  }
  Automorphism aut;
  aut.vertex_map = std::move(vertex_map);
  aut.arrow_map = std::move(arrow_map);
  aut.order = static_cast<int>(std::lcm(detail::permutation_order(aut.vertex_map), detail::permutation_order(aut.arrow_map)));

  // admissibility: no arrow inside a vertex orbit
  std::vector<int> orbit_id(q.vertex_count(), -1);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (orbit_id[v] >= 0) continue;
    for (int x = static_cast<int>(v); orbit_id[x] < 0; x = aut.vertex_map[x]) orbit_id[x] = static_cast<int>(v);
  }
  for (const auto& a : q.arrows())
    if (orbit_id[a.source] == orbit_id[a.target])
      throw Error(ErrorKind::NotAdmissible, "arrow '" + a.id + "' joins two vertices of the same orbit");
  return aut;
}

/// Identifier-keyed form; unlisted vertices and arrows are fixed.
struct RawAutomorphism {
  std::map<std::string, std::string> vertices;
  std::map<std::string, std::string> arrows;
};

inline Automorphism validate_automorphism(const Quiver& q, const RawAutomorphism& raw) {
  std::vector<int> vmap(q.vertex_count());
  std::vector<int> amap(q.arrow_count());
  std::iota(vmap.begin(), vmap.end(), 0);
  std::iota(amap.begin(), amap.end(), 0);
  for (const auto& [from, to] : raw.vertices) vmap[q.vertex_index(from)] = q.vertex_index(to);
  for (const auto& [from, to] : raw.arrows) amap[q.arrow_index(from)] = q.arrow_index(to);
  return validate_automorphism(q, std::move(vmap), std::move(amap));
}

inline Automorphism identity_automorphism(const Quiver& q) {
  Automorphism a;
  a.vertex_map.resize(q.vertex_count());
  a.arrow_map.resize(q.arrow_count());
  std::iota(a.vertex_map.begin(), a.vertex_map.end(), 0);
  std::iota(a.arrow_map.begin(), a.arrow_map.end(), 0);
  a.order = 1;
  return a;
}

inline Automorphism inverse(const Automorphism& a) {
  Automorphism b = a;
  for (std::size_t v = 0; v < a.vertex_map.size(); ++v) b.vertex_map[a.vertex_map[v]] = static_cast<int>(v);
  for (std::size_t k = 0; k < a.arrow_map.size(); ++k) b.arrow_map[a.arrow_map[k]] = static_cast<int>(k);
  return b;
}

inline Automorphism compose(const Automorphism& outer, const Automorphism& inner) {
  Automorphism c = inner;
  for (auto& v : c.vertex_map) v = outer.vertex_map[v];
  for (auto& k : c.arrow_map) k = outer.arrow_map[k];
  c.order = static_cast<int>(std::lcm(detail::permutation_order(c.vertex_map), detail::permutation_order(c.arrow_map)));
  return c;
}

inline Automorphism power(const Automorphism& a, int k) {
  Automorphism out;
  out.vertex_map.resize(a.vertex_map.size());
  out.arrow_map.resize(a.arrow_map.size());
  std::iota(out.vertex_map.begin(), out.vertex_map.end(), 0);
  std::iota(out.arrow_map.begin(), out.arrow_map.end(), 0);
  out.order = 1;
  const int steps = ((k % a.order) + a.order) % a.order;
  for (int s = 0; s < steps; ++s) out = compose(a, out);
  return out;
}

/// Vertex and arrow orbits of an automorphism. Vertex orbits are indexed in
/// order of their least member (declaration position).
struct OrbitStructure {
  std::vector<std::vector<int>> vertex_orbits;  // each orbit listed as v, a(v), a^2(v), ...
  std::vector<int> orbit_of;                    // vertex -> orbit index
  std::vector<std::int64_t> sizes;              // d_i
  std::vector<std::vector<int>> arrow_orbits;   // each listed as r, a(r), ...
  int order = 1;

  std::size_t orbit_count() const { return vertex_orbits.size(); }
};

inline OrbitStructure orbit_structure(const Quiver& q, const Automorphism& a) {
  OrbitStructure os;
  os.order = a.order;
  os.orbit_of.assign(q.vertex_count(), -1);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (os.orbit_of[v] >= 0) continue;
    std::vector<int> orbit;
    for (int x = static_cast<int>(v); os.orbit_of[x] < 0; x = a.vertex_map[x]) {
      os.orbit_of[x] = static_cast<int>(os.vertex_orbits.size());
      orbit.push_back(x);
    }
    os.sizes.push_back(static_cast<std::int64_t>(orbit.size()));
    os.vertex_orbits.push_back(std::move(orbit));
  }
  std::vector<bool> seen(q.arrow_count(), false);
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    if (seen[k]) continue;
    std::vector<int> orbit;
    for (int x = static_cast<int>(k); !seen[x]; x = a.arrow_map[x]) {
      seen[x] = true;
      orbit.push_back(x);
    }
    os.arrow_orbits.push_back(std::move(orbit));
  }
  return os;
}

/// d' with d'_{a(i)} = d_i.
inline LatticeVector act_on_dimension_vector(const Automorphism& a, const LatticeVector& d) {
  if (d.size() != a.vertex_map.size()) throw Error(ErrorKind::LatticeMismatch, "dimension vector length differs from the vertex count");
  LatticeVector out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[a.vertex_map[i]] = d[i];
  return out;
}

inline bool is_fixed(const Automorphism& a, const LatticeVector& d) { return act_on_dimension_vector(a, d) == d; }

}  // namespace kacfold
