#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kacfold/cartan.hpp"
#include "kacfold/error.hpp"
#include "kacfold/field.hpp"
#include "kacfold/matrix.hpp"
#include "kacfold/quiver.hpp"
#include "kacfold/representation.hpp"

namespace kacfold {

struct FixtureQuiver {
  QuiverPtr quiver;
  Automorphism automorphism;
};

struct DTilde4Fixture {
  QuiverPtr quiver;  // arms 1..4 pointing at the centre 5
  Automorphism four_cycle;   // (1 2 3 4)
  Automorphism three_cycle;  // (1 2 3), 4 fixed
};

inline DTilde4Fixture build_dtilde4() {
  RawQuiver raw{{"1", "2", "3", "4", "5"}, {}};
  for (int k = 1; k <= 4; ++k) raw.arrows.push_back({"r" + std::to_string(k), std::to_string(k), "5"});
  Quiver q = validate_quiver(raw);
  auto four = validate_automorphism(q, {1, 2, 3, 0, 4}, {1, 2, 3, 0});
  auto three = validate_automorphism(q, {1, 2, 0, 3, 4}, {1, 2, 0, 3});
  return {share(std::move(q)), std::move(four), std::move(three)};
}

/// 1 -> 2 <- 3 with the flip 1 <-> 3.
inline FixtureQuiver build_a3_flip() {
  Quiver q = validate_quiver({{"1", "2", "3"}, {{"r1", "1", "2"}, {"r2", "3", "2"}}});
  auto a = validate_automorphism(q, {2, 1, 0}, {1, 0});
  return {share(std::move(q)), std::move(a)};
}

/// Complete bipartite quiver {1,2,3} -> {4,5} with the order-6 automorphism (1 2 3)(4 5).
inline FixtureQuiver build_counterexample() {
  RawQuiver raw{{"1", "2", "3", "4", "5"}, {}};
  for (int i = 1; i <= 3; ++i)
    for (int j = 4; j <= 5; ++j) raw.arrows.push_back({std::to_string(i) + "->" + std::to_string(j), std::to_string(i), std::to_string(j)});
  Quiver q = validate_quiver(raw);
  const std::vector<int> vmap{1, 2, 0, 4, 3};
  std::vector<int> amap(q.arrow_count());
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const auto& a = q.arrows()[k];
    const std::string id = q.vertices()[vmap[a.source]] + "->" + q.vertices()[vmap[a.target]];
    amap[k] = q.arrow_index(id);
  }
  auto a = validate_automorphism(q, vmap, std::move(amap));
  return {share(std::move(q)), std::move(a)};
}

enum class RegularSimple { E0, E0p, E0pp, E1, E1p, E1pp };

inline std::string to_string(RegularSimple e) {
  switch (e) {
    case RegularSimple::E0: return "E0";
    case RegularSimple::E0p: return "E0'";
    case RegularSimple::E0pp: return "E0''";
    case RegularSimple::E1: return "E1";
    case RegularSimple::E1p: return "E1'";
    case RegularSimple::E1pp: return "E1''";
  }
  return "?";
}

inline RegularSimple parse_regular_simple(const std::string& s) {
  for (auto e : {RegularSimple::E0, RegularSimple::E0p, RegularSimple::E0pp, RegularSimple::E1, RegularSimple::E1p, RegularSimple::E1pp})
    if (to_string(e) == s) return e;
  throw Error(ErrorKind::ParseError, "unknown regular simple '" + s + "'");
}

/// The two arms carrying a one-dimensional space, besides the centre.
inline std::pair<int, int> regular_simple_support(RegularSimple e) {
  switch (e) {
    case RegularSimple::E0: return {2, 3};
    case RegularSimple::E0p: return {0, 3};
    case RegularSimple::E0pp: return {1, 3};
    case RegularSimple::E1: return {0, 1};
    case RegularSimple::E1p: return {1, 2};
    case RegularSimple::E1pp: return {0, 2};
  }
  return {0, 0};
}

/// Two arms and the centre, all one-dimensional, joined by identity maps.
inline Representation regular_simple(const DTilde4Fixture& fx, RegularSimple e, const FiniteField& f) {
  const auto [u, v] = regular_simple_support(e);
  LatticeVector dim{0, 0, 0, 0, 1};
  dim[u] = dim[v] = 1;
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < 4; ++k) {
    Matrix m(1, static_cast<std::size_t>(dim[k]));
    if (dim[k] == 1) m(0, 0) = 1;
    maps.push_back(std::move(m));
  }
  return make_representation(fx.quiver, f, std::move(dim), std::move(maps));
}

/// Homogeneous tube module T(lambda): dimension delta, arms embedded as the
/// lines (1,1), (1,lambda), (0,1), (1,0) of the two-dimensional centre.
inline Representation tube_rep(const DTilde4Fixture& fx, Elem lambda, const FiniteField& f) {
  if (lambda >= f.size()) throw Error(ErrorKind::BadParameter, "lambda is not an element of F_" + f.name());
  if (lambda == f.zero() || lambda == f.one())
    throw Error(ErrorKind::BadParameter, "T(lambda) needs lambda outside {0, 1}, got " + std::to_string(lambda));
  std::vector<Matrix> maps{Matrix::from_rows({{1}, {1}}), Matrix::from_rows({{1}, {lambda}}), Matrix::from_rows({{0}, {1}}),
                           Matrix::from_rows({{1}, {0}})};
  return make_representation(fx.quiver, f, {1, 1, 1, 1, 2}, std::move(maps));
}

/// lambda -> mu with aT(lambda) isomorphic to T(mu), found by isomorphism search.
inline std::map<Elem, Elem> tube_parameter_action(const DTilde4Fixture& fx, const Automorphism& a, const FiniteField& f) {
  if (f.size() < 3) throw Error(ErrorKind::BadParameter, "F_" + f.name() + " has no parameter outside {0, 1}");
  std::vector<Representation> tubes;
  for (Elem l = 2; l < f.size(); ++l) tubes.push_back(tube_rep(fx, l, f));
  std::map<Elem, Elem> action;
  for (Elem l = 2; l < f.size(); ++l) {
    const Representation t = twist_auto(a, tubes[l - 2]);
    for (Elem m = 2; m < f.size(); ++m)
      if (is_isomorphic(t, tubes[m - 2])) {
        action[l] = m;
        break;
      }
    if (!action.count(l)) throw Error(ErrorKind::BadParameter, "twist of T(" + std::to_string(l) + ") is not a tube module");
  }
  return action;
}

/// lambda/(lambda - 1), the expected action of the four-cycle.
inline Elem four_cycle_moebius(const FiniteField& f, Elem l) { return f.div(l, f.sub(l, f.one())); }

/// 1/(1 - lambda), the expected action of the three-cycle.
inline Elem three_cycle_moebius(const FiniteField& f, Elem l) { return f.inv(f.sub(f.one(), l)); }

struct CalibrationReport {
  std::vector<std::vector<RegularSimple>> four_cycle_orbits;
  std::vector<std::vector<RegularSimple>> three_cycle_orbits;
  std::map<Elem, Elem> four_cycle_action;   // over the field passed as `four_field`
  std::map<Elem, Elem> three_cycle_action;  // over `three_field`
  std::vector<Elem> three_cycle_fixed;      // roots of x^2 - x + 1 outside {0, 1}
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

namespace detail {

/// Orbits of the six regular simples under the a-twist, each in twist order.
inline std::vector<std::vector<RegularSimple>> regular_simple_orbits(const DTilde4Fixture& fx, const Automorphism& a,
                                                                     const FiniteField& f) {
  const std::vector<RegularSimple> all{RegularSimple::E0, RegularSimple::E0p, RegularSimple::E0pp,
                                       RegularSimple::E1, RegularSimple::E1p, RegularSimple::E1pp};
  std::vector<Representation> reps;
  for (auto e : all) reps.push_back(regular_simple(fx, e, f));
  std::vector<bool> seen(all.size(), false);
  std::vector<std::vector<RegularSimple>> orbits;
  for (std::size_t s = 0; s < all.size(); ++s) {
    if (seen[s]) continue;
    std::vector<RegularSimple> orbit;
    std::size_t cur = s;
    while (!seen[cur]) {
      seen[cur] = true;
      orbit.push_back(all[cur]);
      const Representation t = twist_auto(a, reps[cur]);
      std::size_t next = all.size();
      for (std::size_t k = 0; k < all.size(); ++k)
        if (is_isomorphic(t, reps[k])) next = k;
      if (next == all.size()) throw Error(ErrorKind::BadParameter, "twist of " + to_string(all[cur]) + " is not a regular simple");
      cur = next;
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace detail

/// Checks the fixed labelling against the expected orbit structure and tube actions.
inline CalibrationReport calibrate_dtilde4(const DTilde4Fixture& fx, const FiniteField& four_field, const FiniteField& three_field) {
  using RS = RegularSimple;
  CalibrationReport r;
  r.four_cycle_orbits = detail::regular_simple_orbits(fx, fx.four_cycle, four_field);
  r.three_cycle_orbits = detail::regular_simple_orbits(fx, fx.three_cycle, three_field);
  const std::vector<std::vector<RS>> want4{{RS::E0, RS::E0p, RS::E1, RS::E1p}, {RS::E0pp, RS::E1pp}};
  const std::vector<std::vector<RS>> want3{{RS::E0, RS::E0p, RS::E0pp}, {RS::E1, RS::E1p, RS::E1pp}};
  if (r.four_cycle_orbits != want4) r.violations.push_back("four-cycle orbits on regular simples differ");
  if (r.three_cycle_orbits != want3) r.violations.push_back("three-cycle orbits on regular simples differ");

  r.four_cycle_action = tube_parameter_action(fx, fx.four_cycle, four_field);
  for (const auto& [l, m] : r.four_cycle_action)
    if (four_cycle_moebius(four_field, l) != m)
      r.violations.push_back("four-cycle sends T(" + std::to_string(l) + ") to T(" + std::to_string(m) + ")");

  r.three_cycle_action = tube_parameter_action(fx, fx.three_cycle, three_field);
  for (const auto& [l, m] : r.three_cycle_action)
    if (three_cycle_moebius(three_field, l) != m)
      r.violations.push_back("three-cycle sends T(" + std::to_string(l) + ") to T(" + std::to_string(m) + ")");
  const FiniteField& f3 = three_field;
  for (Elem x : solve_univariate(f3, {f3.one(), f3.neg(f3.one()), f3.one()}))
    if (x != f3.zero() && x != f3.one()) r.three_cycle_fixed.push_back(x);
  std::vector<Elem> observed;
  for (const auto& [l, m] : r.three_cycle_action)
    if (l == m) observed.push_back(l);
  if (observed != r.three_cycle_fixed) r.violations.push_back("three-cycle fixed tubes differ from the roots of x^2 - x + 1");
  return r;
}

}  // namespace kacfold
