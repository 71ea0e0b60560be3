#include <gtest/gtest.h>

#include "support.hpp"

using namespace kacfold;

namespace {

RootLattice lattice_21() {
  const auto a3 = build_a3_flip();
  return folded_lattice(fold(*a3.quiver, a3.automorphism));
}

RootLattice lattice_41() {
  const auto d4 = build_dtilde4();
  return folded_lattice(fold(*d4.quiver, d4.four_cycle));
}

std::set<LatticeVector> keys(const RootSet& s) {
  std::set<LatticeVector> out;
  for (const auto& [v, k] : s.roots) out.insert(v);
  return out;
}

}  // namespace

TEST(Roots, ReflectExamples) {
  const RootLattice l = lattice_21();
  EXPECT_EQ(reflect(l, 0, {0, 1}), (LatticeVector{1, 1}));
  EXPECT_EQ(reflect(l, 1, {1, 0}), (LatticeVector{1, 2}));
  EXPECT_EQ(reflect(l, 0, {1, 0}), (LatticeVector{-1, 0}));
  EXPECT_THROW(reflect(l, 5, {1, 0}), Error);
  EXPECT_THROW(reflect(l, 0, {1, 0, 0}), Error);
}

TEST(Roots, SFoldExamples) {
  const auto a3 = build_a3_flip();
  const auto& q = *a3.quiver;
  EXPECT_EQ(s_fold(q, a3.automorphism, 0, {0, 1, 0}), (LatticeVector{1, 1, 1}));
  EXPECT_EQ(s_fold(q, a3.automorphism, 1, {1, 0, 1}), (LatticeVector{1, 2, 1}));
  const auto d4 = build_dtilde4();
  // e_4 is orthogonal to the orbit {1,2,3}
  EXPECT_EQ(s_fold(*d4.quiver, d4.three_cycle, 0, {0, 0, 0, 1, 0}), (LatticeVector{0, 0, 0, 1, 0}));
}

TEST(Roots, ClassifyExamples) {
  const auto c = classify(lattice_21(), {1, 2});
  EXPECT_EQ(c.kind, RootKind::Real);
  // replaying the witness backwards recovers the input from the simple root
  LatticeVector v = unit_vector(2, c.simple);
  for (auto it = c.witness.rbegin(); it != c.witness.rend(); ++it) v = reflect(lattice_21(), *it, v);
  EXPECT_EQ(v, (LatticeVector{1, 2}));

  EXPECT_EQ(classify(lattice_41(), {1, 2}).kind, RootKind::Imaginary);
  const auto e = classify(lattice_21(), {1, 0});
  EXPECT_EQ(e.kind, RootKind::Real);
  EXPECT_TRUE(e.witness.empty());
  EXPECT_EQ(classify(lattice_21(), {2, 0}).kind, RootKind::NonRoot);
  const auto neg = classify(lattice_21(), {-1, -2});
  EXPECT_EQ(neg.kind, RootKind::Real);
  EXPECT_FALSE(neg.positive);
  EXPECT_EQ(classify(lattice_21(), {1, -1}).kind, RootKind::NonRoot);
  EXPECT_THROW(classify(lattice_21(), {0, 0}), Error);
}

TEST(Roots, PositiveRootsExamples) {
  EXPECT_EQ(keys(positive_roots_up_to(lattice_21(), 4)), (std::set<LatticeVector>{{1, 0}, {0, 1}, {1, 1}, {1, 2}}));
  EXPECT_EQ(keys(positive_roots_up_to(quiver_lattice(*oracle::a2()), 3)), (std::set<LatticeVector>{{1, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(positive_roots_up_to(lattice_41(), 3).kind_of({1, 2}), RootKind::Imaginary);
  EXPECT_THROW(positive_roots_up_to(lattice_21(), 0), Error);
  try {
    positive_roots_up_to(quiver_lattice(*build_dtilde4().quiver), 12, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

// Enumeration against an exhaustive classify sweep, plus the real part against
// an unrestricted Weyl-orbit closure.
TEST(Roots, EnumerationMatchesClassifySweep) {
  const auto d4 = build_dtilde4();
  const auto ce = build_counterexample();
  std::vector<std::pair<RootLattice, std::int64_t>> cases{
      {lattice_21(), 6},
      {lattice_41(), 6},
      {quiver_lattice(*d4.quiver), 7},
      {folded_lattice(fold(*d4.quiver, d4.three_cycle)), 6},
      {folded_lattice(fold(*ce.quiver, ce.automorphism)), 6},
      {quiver_lattice(*oracle::a3_linear()), 5},
  };
  for (const auto& [l, h] : cases) {
    const RootSet roots = positive_roots_up_to(l, h);
    std::set<LatticeVector> sweep, real;
    for (const auto& v : nonnegative_vectors_up_to(l.rank(), h)) {
      if (is_zero(v)) continue;
      const auto c = classify(l, v);
      if (c.is_root()) {
        EXPECT_TRUE(c.positive);
        sweep.insert(v);
        EXPECT_EQ(roots.kind_of(v), c.kind) << to_string(v);
      }
      if (c.kind == RootKind::Real) real.insert(v);
    }
    EXPECT_EQ(keys(roots), sweep);
    EXPECT_EQ(oracle::weyl_orbit_real_roots(l, h, 4 * h), real);
  }
}

TEST(Roots, SigmaImage) {
  const auto a3 = build_a3_flip();
  const auto r = sigma_root_image(*a3.quiver, a3.automorphism, 4);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.image, (std::vector<LatticeVector>{{0, 1}, {1, 0}, {1, 1}, {1, 2}}));
  for (const auto& [alpha, orbits] : r.preimage_orbits) EXPECT_EQ(orbits.size(), 1u) << to_string(alpha);

  const auto d4 = build_dtilde4();
  const auto r4 = sigma_root_image(*d4.quiver, d4.four_cycle, 3);
  EXPECT_TRUE(r4.ok());
  EXPECT_NE(std::find(r4.image.begin(), r4.image.end(), LatticeVector{1, 2}), r4.image.end());
  EXPECT_NE(std::find(r4.image.begin(), r4.image.end(), LatticeVector{1, 1}), r4.image.end());

  const auto id = sigma_root_image(*d4.quiver, identity_automorphism(*d4.quiver), 4);
  EXPECT_TRUE(id.ok());
  EXPECT_EQ(id.image, id.folded_roots);
}

TEST(Roots, NullRootAndDefect) {
  const auto d4 = build_dtilde4();
  EXPECT_EQ(null_root(quiver_lattice(*d4.quiver)), (LatticeVector{1, 1, 1, 1, 2}));
  EXPECT_EQ(null_root(lattice_41()), (LatticeVector{1, 2}));
  EXPECT_FALSE(null_root(quiver_lattice(*oracle::a2())).has_value());
  EXPECT_EQ(defect(*d4.quiver, {1, 1, 0, 0, 1}), 0);
  EXPECT_EQ(defect(*d4.quiver, {0, 0, 0, 0, 1}), -2);
  EXPECT_EQ(defect(*d4.quiver, {1, 1, 1, 1, 2}), 0);
  try {
    defect(*oracle::a2(), {1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoNullRoot);
  }
}

TEST(Roots, HMapExamples) {
  const auto a3 = build_a3_flip();
  const SkewQuiver s = skew(*a3.quiver, a3.automorphism);
  EXPECT_EQ(h_map(s, {1, 0, 0}), (LatticeVector{1, 0}));
  EXPECT_EQ(h_map(s, {1, 1, 0}), (LatticeVector{1, 1}));
  EXPECT_EQ(h_map(s, {0, 0, 0}), (LatticeVector{0, 0}));
}
