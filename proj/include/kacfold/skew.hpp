#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "kacfold/cartan.hpp"
#include "kacfold/error.hpp"
#include "kacfold/lattice.hpp"
#include "kacfold/quiver.hpp"
#include "kacfold/roots.hpp"

namespace kacfold {

struct QuiverWithAutomorphism {
  Quiver quiver;
  Automorphism automorphism;
};

/// Unfolding of an oriented valued quiver: vertices (i, mu) with 0 <= mu < d_i
/// and b_ij / lcm(d_i, d_j) arrows (i, mu) -> (j, nu) whenever
/// mu = nu mod gcd(d_i, d_j). Copies of a vertex with d_i = 1 keep its name.
inline QuiverWithAutomorphism unfold(const ValuedQuiver& vq) {
  if (vq.d.size() != vq.vertices.size())
    throw Error(ErrorKind::NotUnfoldable, "symmetriser length differs from vertex count");
  auto name = [&](std::size_t i, std::int64_t mu) {
    return vq.d[i] == 1 ? vq.vertices[i] : vq.vertices[i] + ":" + std::to_string(mu);
  };
  RawQuiver raw;
  std::vector<std::vector<int>> index(vq.vertices.size());
  for (std::size_t i = 0; i < vq.vertices.size(); ++i) {
    if (vq.d[i] < 1) throw Error(ErrorKind::NotUnfoldable, "symmetriser of '" + vq.vertices[i] + "' must be positive");
    for (std::int64_t mu = 0; mu < vq.d[i]; ++mu) {
      index[i].push_back(static_cast<int>(raw.vertices.size()));
      raw.vertices.push_back(name(i, mu));
    }
  }

  // arrow image under the automorphism, filled in as arrows are emitted
  struct Key {
    std::size_t edge;
    std::int64_t mu, nu, copy;
    bool operator<(const Key& o) const { return std::tie(edge, mu, nu, copy) < std::tie(o.edge, o.mu, o.nu, o.copy); }
  };
  std::map<Key, int> arrow_at;
  std::vector<Key> keys;
  for (std::size_t e = 0; e < vq.arrows.size(); ++e) {
    const auto& edge = vq.arrows[e];
    const int i = vq.vertex_index(edge.from);
    const int j = vq.vertex_index(edge.to);
    if (i == j) throw Error(ErrorKind::NotUnfoldable, "valued loop at '" + edge.from + "'");
    const std::int64_t di = vq.d[i];
    const std::int64_t dj = vq.d[j];
    const std::int64_t l = std::lcm(di, dj);
    if (edge.b <= 0 || edge.b % di != 0 || edge.b % dj != 0 || edge.b % l != 0)
      throw Error(ErrorKind::NotUnfoldable, "edge " + edge.from + "->" + edge.to + " with b=" + std::to_string(edge.b) +
                                                " is not divisible by lcm(" + std::to_string(di) + "," + std::to_string(dj) + ")");
    const std::int64_t copies = edge.b / l;
    const std::int64_t g = std::gcd(di, dj);
    for (std::int64_t mu = 0; mu < di; ++mu)
      for (std::int64_t nu = 0; nu < dj; ++nu) {
        if ((mu - nu) % g != 0) continue;
        for (std::int64_t c = 0; c < copies; ++c) {
          std::string id = edge.from + "->" + edge.to;
          if (vq.arrows.size() > 1) id += "#" + std::to_string(e);
          if (di > 1 || dj > 1) id += ":" + std::to_string(mu) + "," + std::to_string(nu);
          if (copies > 1) id += "/" + std::to_string(c);
          const Key key{e, mu, nu, c};
          arrow_at[key] = static_cast<int>(raw.arrows.size());
          keys.push_back(key);
          raw.arrows.push_back({id, raw.vertices[index[i][mu]], raw.vertices[index[j][nu]]});
        }
      }
  }
  Quiver q = validate_quiver(raw);

  std::vector<int> vmap(q.vertex_count());
  for (std::size_t i = 0; i < vq.vertices.size(); ++i)
    for (std::int64_t mu = 0; mu < vq.d[i]; ++mu) vmap[index[i][mu]] = index[i][(mu + 1) % vq.d[i]];
  std::vector<int> amap(q.arrow_count());
  for (std::size_t k = 0; k < keys.size(); ++k) {
    const Key& key = keys[k];
    const auto& edge = vq.arrows[key.edge];
    const std::int64_t di = vq.d[vq.vertex_index(edge.from)];
    const std::int64_t dj = vq.d[vq.vertex_index(edge.to)];
    amap[k] = arrow_at.at({key.edge, (key.mu + 1) % di, (key.nu + 1) % dj, key.copy});
  }
  Automorphism a = validate_automorphism(q, std::move(vmap), std::move(amap));
  return {std::move(q), std::move(a)};
}

struct SkewArrowOrigin {
  int arrow_orbit;
  std::int64_t residue;

  bool operator==(const SkewArrowOrigin&) const = default;
};

/// Skew quiver of (Q, a) with its dual automorphism.
struct SkewQuiver {
  Quiver quiver;
  Automorphism dual;
  std::vector<std::pair<int, std::int64_t>> label;  // vertex -> (orbit of Q, mu)
  std::vector<SkewArrowOrigin> provenance;          // arrow -> origin in Q
  std::vector<std::int64_t> orbit_sizes;            // d of the orbits of Q
  int order = 1;                                    // order n of a

  int vertex_of(int orbit, std::int64_t mu) const {
    for (std::size_t v = 0; v < label.size(); ++v)
      if (label[v].first == orbit && label[v].second == mu) return static_cast<int>(v);
    throw Error(ErrorKind::UnknownVertex, "no skew vertex (" + std::to_string(orbit) + "," + std::to_string(mu) + ")");
  }
};

inline std::int64_t positive_mod(std::int64_t x, std::int64_t m) { return ((x % m) + m) % m; }

inline SkewQuiver skew(const Quiver& q, const Automorphism& a) {
  const OrbitStructure os = orbit_structure(q, a);
  const std::int64_t n = a.order;
  SkewQuiver s;
  s.orbit_sizes = os.sizes;
  s.order = a.order;

  RawQuiver raw;
  std::vector<std::vector<int>> index(os.orbit_count());
  for (std::size_t k = 0; k < os.orbit_count(); ++k) {
    const std::int64_t copies = n / os.sizes[k];
    const std::string& base = q.vertices()[os.vertex_orbits[k].front()];
    for (std::int64_t mu = 0; mu < copies; ++mu) {
      index[k].push_back(static_cast<int>(raw.vertices.size()));
      raw.vertices.push_back(copies == 1 ? base : base + ":" + std::to_string(mu));
      s.label.emplace_back(static_cast<int>(k), mu);
    }
  }

  struct Emitted {
    int orbit_i, orbit_j;
    std::int64_t r, mu, nu;
  };
  std::vector<Emitted> emitted;
  std::map<std::tuple<int, std::int64_t, std::int64_t, std::int64_t>, int> arrow_at;  // (arrow orbit, r, mu, nu)
  for (std::size_t o = 0; o < os.arrow_orbits.size(); ++o) {
    const auto& first = q.arrows()[os.arrow_orbits[o].front()];
    const std::int64_t l = static_cast<std::int64_t>(os.arrow_orbits[o].size());
    const int oi = os.orbit_of[first.source];
    const int oj = os.orbit_of[first.target];
    const std::int64_t t = std::lcm(os.sizes[oi], os.sizes[oj]);
    const std::int64_t m = n / t;
    const std::int64_t ci = n / os.sizes[oi];
    const std::int64_t cj = n / os.sizes[oj];
    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> arrows;
    for (std::int64_t k = 0; k < l / t; ++k) {
      const std::int64_t r = positive_mod(k * (n / l), m);
      for (std::int64_t mu = 0; mu < ci; ++mu)
        for (std::int64_t nu = 0; nu < cj; ++nu)
          if (positive_mod(mu - nu - r, m) == 0) arrows.emplace_back(r, mu, nu);
    }
    for (const auto& [r, mu, nu] : arrows) {
      std::string id = first.id;
      if (arrows.size() > 1) id += ":" + std::to_string(r) + ":" + std::to_string(mu) + "," + std::to_string(nu);
      arrow_at[{static_cast<int>(o), r, mu, nu}] = static_cast<int>(raw.arrows.size());
      emitted.push_back({oi, oj, r, mu, nu});
      raw.arrows.push_back({id, raw.vertices[index[oi][mu]], raw.vertices[index[oj][nu]]});
      s.provenance.push_back({static_cast<int>(o), r});
    }
  }
  s.quiver = validate_quiver(raw);

  std::vector<int> vmap(s.quiver.vertex_count());
  for (std::size_t v = 0; v < s.label.size(); ++v) {
    const auto [k, mu] = s.label[v];
    vmap[v] = index[k][(mu + 1) % static_cast<std::int64_t>(index[k].size())];
  }
  std::vector<int> amap(s.quiver.arrow_count());
  for (std::size_t e = 0; e < emitted.size(); ++e) {
    const auto& em = emitted[e];
    const std::int64_t ci = static_cast<std::int64_t>(index[em.orbit_i].size());
    const std::int64_t cj = static_cast<std::int64_t>(index[em.orbit_j].size());
    amap[e] = arrow_at.at({s.provenance[e].arrow_orbit, em.r, (em.mu + 1) % ci, (em.nu + 1) % cj});
  }
  s.dual = validate_automorphism(s.quiver, std::move(vmap), std::move(amap));
  return s;
}

/// h(beta)_i = sum over mu of beta_(i, mu).
inline LatticeVector h_map(const SkewQuiver& s, const LatticeVector& beta) {
  if (beta.size() != s.label.size()) throw Error(ErrorKind::LatticeMismatch, "vector is not in the skew quiver lattice");
  LatticeVector out(s.orbit_sizes.size(), 0);
  for (std::size_t v = 0; v < beta.size(); ++v) out[s.label[v].first] += beta[v];
  return out;
}

/// Composite of the skew quiver reflections at (i, mu) over all mu.
inline LatticeVector skew_reflection(const SkewQuiver& s, int orbit, LatticeVector beta) {
  const RootLattice lattice = quiver_lattice(s.quiver);
  for (std::size_t v = 0; v < s.label.size(); ++v)
    if (s.label[v].first == orbit) beta = reflect(lattice, static_cast<int>(v), std::move(beta));
  return beta;
}

struct DoubleSkewReport {
  bool found = false;
  std::vector<int> vertex_map;  // Q vertex -> vertex of skew(skew(Q))
  std::vector<int> arrow_map;
};

namespace detail {

/// Searches for an isomorphism of quivers phi: (Q, a) -> (P, b) with
/// phi a = b phi on vertices and arrows.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> equivariant_isomorphism(
    const Quiver& q, const Automorphism& a, const Quiver& p, const Automorphism& b) {
  if (q.vertex_count() != p.vertex_count() || q.arrow_count() != p.arrow_count()) return std::nullopt;
  const OrbitStructure oq = orbit_structure(q, a);
  const OrbitStructure op = orbit_structure(p, b);
  const std::size_t nv = q.vertex_count();

  std::vector<std::vector<int>> count_q(nv, std::vector<int>(nv, 0));
  std::vector<std::vector<int>> count_p(nv, std::vector<int>(nv, 0));
  for (const auto& r : q.arrows()) ++count_q[r.source][r.target];
  for (const auto& r : p.arrows()) ++count_p[r.source][r.target];

  std::vector<int> phi(nv, -1);
  std::vector<bool> used(nv, false);
  std::optional<std::vector<int>> arrows;

  auto arrows_match = [&]() -> std::optional<std::vector<int>> {
    // arrow orbits of q matched greedily-with-backtracking to arrow orbits of p
    std::vector<int> psi(q.arrow_count(), -1);
    std::vector<bool> taken(p.arrow_count(), false);
    auto rec = [&](auto&& self, std::size_t o) -> bool {
      if (o == oq.arrow_orbits.size()) return true;
      const auto& orbit = oq.arrow_orbits[o];
      const auto& rep = q.arrows()[orbit.front()];
      for (const auto& porbit : op.arrow_orbits) {
        if (porbit.size() != orbit.size()) continue;
        for (int cand : porbit) {
          if (taken[cand]) continue;
          const auto& pa = p.arrows()[cand];
          if (pa.source != phi[rep.source] || pa.target != phi[rep.target]) continue;
          std::vector<int> assigned;
          int x = orbit.front();
          int y = cand;
          for (std::size_t k = 0; k < orbit.size(); ++k) {
            psi[x] = y;
            taken[y] = true;
            assigned.push_back(y);
            x = a.arrow(x);
            y = b.arrow(y);
          }
          if (self(self, o + 1)) return true;
          for (int z : assigned) taken[z] = false;
        }
      }
      return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return psi;
  };

  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == oq.orbit_count()) {
      for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nv; ++j)
          if (count_q[i][j] != count_p[phi[i]][phi[j]]) return false;
      arrows = arrows_match();
      return arrows.has_value();
    }
    const auto& orbit = oq.vertex_orbits[k];
    for (std::size_t w = 0; w < nv; ++w) {
      if (used[w] || op.sizes[op.orbit_of[w]] != oq.sizes[k]) continue;
      int x = orbit.front();
      int y = static_cast<int>(w);
      bool ok = true;
      std::vector<int> assigned;
      for (std::size_t s = 0; s < orbit.size(); ++s) {
        if (used[y]) {
          ok = false;
          break;
        }
        phi[x] = y;
        used[y] = true;
        assigned.push_back(x);
        x = a.vertex(x);
        y = b.vertex(y);
      }
      if (ok) {
        // prune on arrow counts among already placed vertices
        for (int u : assigned)
          for (std::size_t z = 0; z < nv && ok; ++z)
            if (phi[z] >= 0 && (count_q[u][z] != count_p[phi[u]][phi[z]] || count_q[z][u] != count_p[phi[z]][phi[u]])) ok = false;
      }
      if (ok && self(self, k + 1)) return true;
      for (int u : assigned) {
        used[phi[u]] = false;
        phi[u] = -1;
      }
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return std::make_pair(phi, *arrows);
}

}  // namespace detail

inline constexpr std::size_t kDefaultSkewVertexCap = 10;

/// Checks that skew(skew(Q, a)) is isomorphic to (Q, a) as a quiver with automorphism.
inline DoubleSkewReport double_skew_check(const Quiver& q, const Automorphism& a,
                                          std::size_t vertex_cap = kDefaultSkewVertexCap) {
  if (q.vertex_count() > vertex_cap)
    throw Error(ErrorKind::BudgetExceeded, "isomorphism search over " + std::to_string(q.vertex_count()) +
                                               " vertices exceeds the cap of " + std::to_string(vertex_cap));
  const SkewQuiver once = skew(q, a);
  const SkewQuiver twice = skew(once.quiver, once.dual);
  DoubleSkewReport report;
  if (auto iso = detail::equivariant_isomorphism(q, a, twice.quiver, twice.dual)) {
    report.found = true;
    report.vertex_map = std::move(iso->first);
    report.arrow_map = std::move(iso->second);
  }
  return report;
}

/// Bounded check that h maps the positive roots of the skew quiver onto the
/// positive roots of the folded lattice, with a unique orbit of real
/// preimages for every real folded root.
struct SkewRootReport {
  std::vector<LatticeVector> image;
  std::vector<LatticeVector> folded_roots;
  std::map<LatticeVector, std::vector<std::vector<LatticeVector>>> preimage_orbits;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

inline SkewRootReport skew_root_check(const Quiver& q, const Automorphism& a, std::int64_t max_height,
                                      std::size_t cap = kDefaultRootCap) {
  const FoldData f = fold(q, a);
  const SkewQuiver s = skew(q, a);
  const RootSet folded = positive_roots_up_to(folded_lattice(f), max_height, cap);
  const RootSet skew_roots = positive_roots_up_to(quiver_lattice(s.quiver), a.order * max_height, cap);

  SkewRootReport report;
  std::set<LatticeVector> image;
  std::map<LatticeVector, std::set<std::vector<LatticeVector>>> orbits;
  for (const auto& [beta, kind] : skew_roots.roots) {
    const LatticeVector alpha = h_map(s, beta);
    const bool in_range = height(alpha) <= max_height;
    if (in_range ? !folded.contains(alpha) : !classify(folded_lattice(f), alpha).is_root())
      report.violations.push_back("h" + to_string(beta) + " = " + to_string(alpha) + " is not a folded root");
    if (!in_range) continue;
    image.insert(alpha);
    if (folded.kind_of(alpha) == RootKind::Real) {
      if (kind != RootKind::Real)
        report.violations.push_back("imaginary " + to_string(beta) + " maps to real " + to_string(alpha));
      orbits[alpha].insert(dimension_orbit(s.dual, beta));
    }
  }
  report.image.assign(image.begin(), image.end());
  report.folded_roots = folded.sorted();
  std::sort(report.folded_roots.begin(), report.folded_roots.end());
  for (const auto& alpha : report.folded_roots) {
    if (!image.count(alpha)) report.violations.push_back("folded root " + to_string(alpha) + " has no preimage");
    if (folded.kind_of(alpha) != RootKind::Real) continue;
    auto& list = report.preimage_orbits[alpha];
    list.assign(orbits[alpha].begin(), orbits[alpha].end());
    if (list.size() != 1)
      report.violations.push_back("real folded root " + to_string(alpha) + " has " + std::to_string(list.size()) + " preimage orbits");
  }
  return report;
}

}  // namespace kacfold
