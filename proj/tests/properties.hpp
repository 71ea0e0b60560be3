#pragma once

// Randomised property suites. Each returns its violations so the gtest
// binary and the acceptance runner report the same checks.

#include <numeric>
#include <string>
#include <vector>

#include "support.hpp"

namespace props {

using namespace kacfold;
using Violations = std::vector<std::string>;

struct Pair {
  std::string name;
  QuiverPtr quiver;
  Automorphism automorphism;
};

inline std::vector<Pair> fixture_pairs() {
  const auto a3 = build_a3_flip();
  const auto d4 = build_dtilde4();
  const auto ce = build_counterexample();
  return {{"A3 flip", a3.quiver, a3.automorphism},
          {"D4 4-cycle", d4.quiver, d4.four_cycle},
          {"D4 3-cycle", d4.quiver, d4.three_cycle},
          {"3x2 bipartite", ce.quiver, ce.automorphism}};
}

/// (x, y)_Q = (f x, f y)_Gamma and f(s_i v) = r_i(f v) on random a-fixed vectors.
inline Violations fold_form_and_reflections() {
  Violations out;
  std::mt19937_64 rng(oracle::kSeed);
  for (const auto& p : fixture_pairs()) {
    const FoldData fd = fold(*p.quiver, p.automorphism);
    const IntMatrix a = symmetric_gcm(*p.quiver);
    const RootLattice folded = folded_lattice(fd);
    const auto fixed = [&] {
      LatticeVector w = oracle::random_vector(rng, fd.orbits.orbit_count(), -3, 3);
      return f_inverse(fd.orbits, w);
    };
    for (int s = 0; s < oracle::kSamples; ++s) {
      const LatticeVector x = fixed(), y = fixed();
      const LatticeVector fx = f_map(fd.orbits, p.automorphism, x), fy = f_map(fd.orbits, p.automorphism, y);
      if (bilinear_q(a, x, y) != bilinear_gamma(fd.B, fx, fy))
        out.push_back(p.name + ": form identity fails at " + to_string(x) + ", " + to_string(y));
      const int i = static_cast<int>(rng() % fd.orbits.orbit_count());
      if (f_map(fd.orbits, p.automorphism, s_fold(*p.quiver, fd.orbits, i, x)) != reflect(folded, i, fx))
        out.push_back(p.name + ": f(s_" + std::to_string(i) + " " + to_string(x) + ") differs from r_i(f x)");
    }
  }
  return out;
}

/// (h beta, e_i)_Gamma = d_i sum_mu (beta, e_(i,mu)) and h(s~_i beta) = r_i(h beta).
inline Violations h_map_identities() {
  Violations out;
  std::mt19937_64 rng(oracle::kSeed);
  for (const auto& p : fixture_pairs()) {
    const FoldData fd = fold(*p.quiver, p.automorphism);
    const SkewQuiver s = skew(*p.quiver, p.automorphism);
    const IntMatrix sk = symmetric_gcm(s.quiver);
    const RootLattice folded = folded_lattice(fd);
    const std::size_t n = s.quiver.vertex_count(), m = fd.orbits.orbit_count();
    for (int t = 0; t < oracle::kSamples; ++t) {
      const LatticeVector beta = oracle::random_vector(rng, n, -3, 3);
      const LatticeVector h = h_map(s, beta);
      for (std::size_t i = 0; i < m; ++i) {
        std::int64_t sum = 0;
        for (std::size_t v = 0; v < n; ++v)
          if (s.label[v].first == static_cast<int>(i)) sum += bilinear_q(sk, beta, unit_vector(n, v));
        if (bilinear_gamma(fd.B, h, unit_vector(m, i)) != fd.d[i] * sum)
          out.push_back(p.name + ": h-map form identity fails at " + to_string(beta) + ", orbit " + std::to_string(i));
      }
      const int i = static_cast<int>(rng() % m);
      if (h_map(s, skew_reflection(s, i, beta)) != reflect(folded, i, h))
        out.push_back(p.name + ": h(s~_" + std::to_string(i) + " " + to_string(beta) + ") differs from r_i(h beta)");
    }
  }
  return out;
}

inline Violations skew_surjectivity() {
  Violations out;
  const auto a3 = build_a3_flip();
  const auto d4 = build_dtilde4();
  for (const auto& [name, r] : {std::pair{std::string("A3 flip"), skew_root_check(*a3.quiver, a3.automorphism, 5)},
                                std::pair{std::string("D4 4-cycle"), skew_root_check(*d4.quiver, d4.four_cycle, 4)}})
    for (const auto& v : r.violations) out.push_back(name + ": " + v);
  return out;
}

/// dim R+_i X = s_i(dim X) + (dim coker of the map into X_i) e_i at every sink,
/// R+_i kills the simple, and indecomposables other than S_i reflect to
/// indecomposables of dimension s_i(dim X).
inline Violations reflection_functor_dimensions() {
  Violations out;
  std::mt19937_64 rng(oracle::kSeed);
  const FiniteField f2 = make_field(2), f3 = make_field(3);
  std::vector<QuiverPtr> quivers{oracle::a2(), oracle::a3_linear()};
  for (const auto& p : fixture_pairs()) quivers.push_back(p.quiver);
  for (const auto& q : quivers) {
    const RootLattice l = quiver_lattice(*q);
    for (int i = 0; i < static_cast<int>(q->vertex_count()); ++i) {
      if (!q->is_sink(i)) continue;
      for (const FiniteField& f : {f2, f3})
        if (!reflection_functor(simple_representation(q, f, i), i, ReflectionDirection::Plus).is_zero())
          out.push_back("R+ does not kill the simple at " + q->vertices()[i]);
      for (int s = 0; s < oracle::kSamples; ++s) {
        const FiniteField& f = s % 2 ? f3 : f2;
        const auto x = oracle::random_representation(rng, q, f, oracle::random_vector(rng, q->vertex_count(), 0, 2));
        std::vector<Matrix> incoming;
        for (std::size_t k = 0; k < q->arrow_count(); ++k)
          if (q->arrows()[k].target == i) incoming.push_back(x.maps[k]);
        const auto coker = x.dim[i] - static_cast<std::int64_t>(rank(f, hstack(incoming, x.dim[i])));
        LatticeVector expected = reflect(l, i, x.dim);
        expected[i] += coker;
        const auto y = reflection_functor(x, i, ReflectionDirection::Plus);
        if (y.dim != expected) out.push_back("dim R+_" + std::to_string(i) + " of " + to_string(x.dim) + " is " + to_string(y.dim));
      }
    }
  }
  const auto d4 = build_dtilde4();
  for (const auto& x : indecomposable_classes(d4.quiver, {1, 1, 1, 1, 2}, f2)) {
    const auto y = reflection_functor(x, 4, ReflectionDirection::Plus);
    if (y.dim != reflect(quiver_lattice(*d4.quiver), 4, x.dim) || !is_indecomposable(y))
      out.push_back("reflected indecomposable of dimension " + to_string(x.dim) + " is not indecomposable of dimension s(d)");
  }
  return out;
}

/// dim Hom(X, Y) - dim Ext(X, Y) = <dim X, dim Y> over every pair of classes.
inline Violations hom_euler() {
  Violations out;
  const auto q = oracle::a2();
  const FiniteField f2 = make_field(2);
  std::vector<Representation> all;
  for (std::int64_t a = 0; a <= 2; ++a)
    for (std::int64_t b = 0; b <= 2; ++b) {
      const IsoClassCatalog cat = isoclasses(q, {a, b}, f2);
      for (const auto& c : cat.classes()) all.push_back(c.representative);
    }
  for (const auto& x : all)
    for (const auto& y : all) {
      const auto lhs = static_cast<std::int64_t>(hom_space(x, y).dimension()) - static_cast<std::int64_t>(ext_dimension(x, y));
      if (lhs != euler_form(*q, x.dim, y.dim)) out.push_back("Hom-Euler fails for " + to_string(x.dim) + ", " + to_string(y.dim));
    }
  if (all.size() < 9) out.push_back("catalogue is unexpectedly small");
  return out;
}

inline Violations multiset() {
  return multiset_crosscheck(oracle::a2(), make_field(2), 4).violations;
}

/// Random oriented valued trees and cycles: fold(unfold(G)) recovers B and D.
inline Violations fold_unfold() {
  Violations out;
  std::mt19937_64 rng(oracle::kSeed);
  for (int s = 0; s < oracle::kSamples; ++s) {
    const std::size_t n = 2 + rng() % 2;
    ValuedQuiver vq;
    for (std::size_t i = 0; i < n; ++i) {
      vq.vertices.push_back("v" + std::to_string(i));
      vq.d.push_back(1 + static_cast<std::int64_t>(rng() % 4));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (j != i + 1 && rng() % 2) continue;
        const std::int64_t b = std::lcm(vq.d[i], vq.d[j]) * (1 + static_cast<std::int64_t>(rng() % 2));
        if (rng() % 2)
          vq.arrows.push_back({vq.vertices[i], vq.vertices[j], b});
        else
          vq.arrows.push_back({vq.vertices[j], vq.vertices[i], b});
      }
    vq = validate_valued_quiver(std::move(vq));
    const auto u = unfold(vq);
    const FoldData f = fold(u.quiver, u.automorphism);
    if (f.B != vq.symmetrised_matrix() || f.d != vq.d)
      out.push_back("fold(unfold) differs on sample " + std::to_string(s));
  }
  return out;
}

inline Violations double_skew() {
  Violations out;
  const auto a3 = build_a3_flip();
  const auto d4 = build_dtilde4();
  if (!double_skew_check(*a3.quiver, a3.automorphism).found) out.push_back("A3 flip: skew of skew is not isomorphic");
  if (!double_skew_check(*d4.quiver, d4.four_cycle).found) out.push_back("D4 4-cycle: skew of skew is not isomorphic");
  return out;
}

/// Addition and multiplication tables against polynomial arithmetic, inverses,
/// and sampled associativity and distributivity for every q <= 256.
inline Violations field_tables() {
  Violations out;
  std::mt19937_64 rng(oracle::kSeed);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    std::uint64_t q = p;
    for (int m = 1; q <= 256; ++m, q *= p) {
      const FiniteField f = make_field(p, m);
      std::size_t bad = 0;
      for (Elem a = 0; a < q; ++a) {
        if (f.add(a, f.neg(a)) != 0 || (a != 0 && f.mul(a, f.inv(a)) != 1)) ++bad;
        for (Elem b = 0; b < q; ++b)
          if (f.mul(a, b) != oracle::poly_mul(p, f.modulus(), a, b) || f.add(a, b) != oracle::poly_add(p, m, a, b)) ++bad;
      }
      for (int s = 0; s < oracle::kSamples; ++s) {
        const Elem a = oracle::random_elem(rng, f), b = oracle::random_elem(rng, f), c = oracle::random_elem(rng, f);
        if (f.mul(a, f.mul(b, c)) != f.mul(f.mul(a, b), c) || f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) ++bad;
      }
      if (bad) out.push_back("F_" + f.name() + ": " + std::to_string(bad) + " table mismatches");
    }
  }
  return out;
}

}  // namespace props
