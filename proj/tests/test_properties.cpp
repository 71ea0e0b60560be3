#include <gtest/gtest.h>

#include "properties.hpp"

using namespace kacfold;

namespace {

std::string joined(const props::Violations& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size() && k < 10; ++k) s += v[k] + "\n";
  return s;
}

}  // namespace

TEST(Properties, FoldFormAndReflections) {
  const auto v = props::fold_form_and_reflections();
  EXPECT_TRUE(v.empty()) << joined(v);
}

TEST(Properties, HMapIdentities) {
  const auto v = props::h_map_identities();
  EXPECT_TRUE(v.empty()) << joined(v);
}

TEST(Properties, SkewRootSurjectivity) {
  const auto v = props::skew_surjectivity();
  EXPECT_TRUE(v.empty()) << joined(v);
}

TEST(Properties, ReflectionFunctorDimensions) {
  const auto v = props::reflection_functor_dimensions();
  EXPECT_TRUE(v.empty()) << joined(v);
}

TEST(Properties, HomEulerIdentity) {
  const auto v = props::hom_euler();
  EXPECT_TRUE(v.empty()) << joined(v);
}

TEST(Properties, MultisetCrosscheck) {
  const auto v = props::multiset();
  EXPECT_TRUE(v.empty()) << joined(v);
}

TEST(Properties, FoldOfUnfold) {
  const auto v = props::fold_unfold();
  EXPECT_TRUE(v.empty()) << joined(v);
}

TEST(Properties, DoubleSkew) {
  const auto v = props::double_skew();
  EXPECT_TRUE(v.empty()) << joined(v);
}

TEST(Properties, FieldTables) {
  const auto v = props::field_tables();
  EXPECT_TRUE(v.empty()) << joined(v);
}

// Decomposing with shuffled probes and regrouping into twist orbits gives the
// same multiset of ii-indecomposables.
TEST(Properties, IiDecompositionIsOrderIndependent) {
  const auto fx = build_dtilde4();
  const FiniteField f3 = make_field(3);
  std::mt19937_64 rng(oracle::kSeed);
  const OrbitStructure os = orbit_structure(*fx.quiver, fx.four_cycle);
  for (int s = 0; s < oracle::kSamples; ++s) {
    const auto z = oracle::random_representation(rng, fx.quiver, f3, oracle::random_fixed_vector(rng, os, 1));
    const auto x = ii_orbit_sum(fx.four_cycle, z).sum;
    const auto plain = decompose(x);
    SearchOptions other;
    other.seed = rng();
    const auto shuffled = decompose(x, other, true);
    ASSERT_EQ(plain.size(), shuffled.size());
    std::vector<bool> used(shuffled.size(), false);
    for (const auto& p : plain) {
      bool matched = false;
      for (std::size_t k = 0; k < shuffled.size() && !matched; ++k)
        if (!used[k] && is_isomorphic(p, shuffled[k])) used[k] = matched = true;
      EXPECT_TRUE(matched) << to_string(p.dim);
    }
    EXPECT_TRUE(is_isomorphic(twist_auto(fx.four_cycle, x), x));
  }
}

// Random representations land in a class of the catalogue whose
// representative is isomorphic to them, and the twist permutes classes.
TEST(Properties, LocateIsConsistentWithTwist) {
  const auto fx = build_dtilde4();
  const FiniteField f3 = make_field(3);
  Enumerator e(fx.quiver, f3);
  std::mt19937_64 rng(oracle::kSeed);
  const LatticeVector delta{1, 1, 1, 1, 2};
  for (int s = 0; s < oracle::kSamples; ++s) {
    const auto x = oracle::random_representation(rng, fx.quiver, f3, delta);
    const auto ref = e.locate(x);
    const auto tref = e.locate(twist_auto(fx.four_cycle, x));
    EXPECT_TRUE(tref == e.locate(twist_auto(fx.four_cycle, e.representative(ref))));
  }
}
