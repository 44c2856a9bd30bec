#include <gtest/gtest.h>

#include "helpers.hpp"
#include "partent/verify/oracles.hpp"
#include "partent/verify/suites.hpp"

using namespace partent;
using namespace partent::testing;

namespace {

ErrorCode error_of(const std::function<void()>& f, std::vector<int>* indices = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (indices) *indices = e.indices();
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::Io;
}

}  // namespace

TEST(AlgebraNew, ValidAndCanonicalOrder) {
  const Algebra a = algebra({set({{"1/2", "1"}}), set({{"0", "1/2"}})});
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0], set({{"0", "1/2"}}));
  EXPECT_EQ(a, halves());
}

TEST(AlgebraNew, DistinctErrors) {
  std::vector<int> idx;
  EXPECT_EQ(error_of([] { algebra({set({{"0", "1/2"}}), set({{"1/3", "1"}})}); }, &idx), ErrorCode::AtomOverlap);
  EXPECT_EQ(idx, (std::vector<int>{0, 1}));
  EXPECT_EQ(error_of([] { algebra({set({{"0", "1/2"}})}); }), ErrorCode::AtomGap);
  EXPECT_EQ(error_of([] { algebra({MSet::whole(), MSet()}); }, &idx), ErrorCode::EmptyAtom);
  EXPECT_EQ(idx, (std::vector<int>{1}));
}

TEST(Join, Examples) {
  const Algebra b = algebra({set({{"0", "1/4"}}), set({{"1/4", "1"}})});
  EXPECT_EQ(join(halves(), b),
            algebra({set({{"0", "1/4"}}), set({{"1/4", "1/2"}}), set({{"1/2", "1"}})}));
  EXPECT_EQ(join(halves(), Algebra()), halves());
  EXPECT_EQ(join(b, b), b);
}

TEST(Independence, Examples) {
  const Algebra interleaved = algebra({set({{"0", "1/4"}, {"1/2", "3/4"}}), set({{"1/4", "1/2"}, {"3/4", "1"}})});
  EXPECT_TRUE(is_independent(halves(), interleaved));
  EXPECT_TRUE(is_independent(halves(), Algebra()));
  EXPECT_FALSE(is_independent(halves(), halves()));
}

TEST(IndependentWithProfile, Examples) {
  const Algebra c = independent_with_profile(halves(), AtomProfile({q(1, 3), q(2, 3)}));
  EXPECT_EQ(c, algebra({set({{"0", "1/6"}, {"1/2", "2/3"}}), set({{"1/6", "1/2"}, {"2/3", "1"}})}));
  EXPECT_TRUE(is_independent(halves(), c));
  EXPECT_EQ(independent_with_profile(Algebra(), AtomProfile({q(1, 2), q(1, 2)})), halves());
  EXPECT_EQ(independent_with_profile(Algebra::equipartition(5), AtomProfile({q(1)})), Algebra());
}

TEST(AtomProfile, Validation) {
  EXPECT_EQ(error_of([] { AtomProfile({q(1, 2), q(1, 3)}); }), ErrorCode::ProfileSum);
  EXPECT_EQ(error_of([] { AtomProfile({q(3, 2), q(-1, 2)}); }), ErrorCode::ProfileNonPositive);
  EXPECT_EQ(error_of([] { AtomProfile({}); }), ErrorCode::ProfileSum);
}

TEST(ConditionalIndependence, Examples) {
  // a independent of b, k a coarsening of a with b independent of k.
  const Algebra a = Algebra::equipartition(4);
  const Algebra k = halves();
  const Algebra b = independent_with_profile(a, AtomProfile({q(1, 3), q(2, 3)}));
  ASSERT_TRUE(is_independent(a, b));
  EXPECT_TRUE(is_independent(b, k));
  EXPECT_TRUE(conditional_independent(a, b, k));

  EXPECT_EQ(conditional_independent(a, b, Algebra()), is_independent(a, b));
  EXPECT_FALSE(conditional_independent(halves(), halves(), Algebra()));
}

TEST(Restrict, Examples) {
  const Restriction r1 = restrict(halves(), set({{"0", "1/2"}}));
  ASSERT_EQ(r1.atoms.size(), 1u);
  EXPECT_EQ(r1.atoms[0], set({{"0", "1/2"}}));
  EXPECT_EQ(restrict(Algebra::equipartition(3), MSet::whole()).atoms, Algebra::equipartition(3).atoms());
  const Restriction r3 = restrict(Algebra::equipartition(3), set({{"0", "1/2"}}));
  ASSERT_EQ(r3.atoms.size(), 2u);
  EXPECT_EQ(r3.atoms[1], set({{"1/3", "1/2"}}));
  EXPECT_EQ(error_of([] { restrict(halves(), MSet()); }), ErrorCode::ZeroMeasure);
}

TEST(SameAtomMeasures, Examples) {
  const Algebra outer = algebra({set({{"0", "1/4"}, {"3/4", "1"}}), set({{"1/4", "3/4"}})});
  EXPECT_TRUE(same_atom_measures(halves(), outer));
  EXPECT_FALSE(same_atom_measures(halves(), Algebra::equipartition(3)));
  EXPECT_FALSE(same_atom_measures(halves(), algebra({set({{"0", "1/3"}}), set({{"1/3", "1"}})})));
}

TEST(Distance, Examples) {
  const Algebra b = algebra({set({{"0", "1/4"}}), set({{"1/4", "1"}})});
  EXPECT_EQ(distance_d(halves(), halves()), q(0));
  EXPECT_EQ(distance_d(halves(), b), q(1, 4));
  const Algebra lopsided = algebra({set({{"0", "1/5"}}), set({{"1/5", "3/5"}}), set({{"3/5", "1"}})});
  EXPECT_EQ(distance_d(lopsided, Algebra()), q(1) - q(2, 5));

  EXPECT_EQ(distance_D(halves(), halves()), q(0));
  EXPECT_GE(distance_D(halves(), Algebra::equipartition(3)), q(1));
  EXPECT_EQ(distance_D(halves(), b), q(1, 4));
}

TEST(Distance, TooManyAtoms) {
  const Algebra big = Algebra::equipartition(17);
  EXPECT_EQ(error_of([&] { distance_d(big, big); }), ErrorCode::TooManyAtoms);
  // the DP masks over the smaller side, so one small side is enough
  EXPECT_EQ(distance_d(big, Algebra()), q(16, 17));
}

TEST(AlgebraProperties, JoinLawsAndIndependentProfiles) {
  Rng rng(5);
  for (int k = 0; k < 150; ++k) {
    const Algebra a = random_algebra(rng, 1, 6, 32), b = random_algebra(rng, 1, 6, 32),
                  c = random_algebra(rng, 1, 4, 32);
    ASSERT_EQ(join(a, b), join(b, a));
    ASSERT_EQ(join(join(a, b), c), join(a, join(b, c)));
    ASSERT_EQ(join(a, a), a);
    ASSERT_EQ(join(a, Algebra()), a);

    const AtomProfile profile = random_profile(rng, rng.uniform(1, 6));
    const Algebra ind = independent_with_profile(a, profile);
    ASSERT_TRUE(is_independent(a, ind));
    auto want = profile.weights();
    auto got = ind.atom_measures();
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    ASSERT_EQ(got, want);
  }
}

TEST(AlgebraProperties, SeparationEquivalence) {
  Rng rng(8);
  int both_true = 0, both_false = 0;
  for (int k = 0; k < 300; ++k) {
    const Algebra a = random_algebra(rng, 2, 6, 32);
    const Algebra kk = verify::random_coarsening(rng, a, rng.uniform(1, static_cast<int>(a.size())));
    const int mode = rng.uniform(0, 2);
    const Algebra b = mode == 0   ? independent_with_profile(a, random_profile(rng, 3))
                      : mode == 1 ? independent_with_profile(kk, random_profile(rng, 3))
                                  : random_algebra(rng, 2, 5, 32);
    const bool lhs = is_independent(a, b);
    const bool rhs = is_independent(b, kk) && conditional_independent(a, b, kk);
    ASSERT_EQ(lhs, rhs);
    (lhs ? both_true : both_false)++;
  }
  EXPECT_GT(both_true, 50);
  EXPECT_GT(both_false, 50);
}

TEST(AlgebraProperties, DistanceMatchesBruteForceAndIsPseudometric) {
  Rng rng(21);
  for (int k = 0; k < 100; ++k) {
    const Algebra a = random_algebra(rng, 1, 6, 24), b = random_algebra(rng, 1, 6, 24),
                  c = random_algebra(rng, 1, 6, 24);
    const Rat ab = distance_d(a, b);
    ASSERT_EQ(ab, oracle::distance_d_brute_force(a, b));
    ASSERT_EQ(ab, distance_d(b, a));
    ASSERT_TRUE(distance_d(a, a).is_zero());
    ASSERT_LE(distance_d(a, c), ab + distance_d(b, c));
    if (ab.is_zero()) {
      ASSERT_TRUE(same_atom_measures(a, b));
    }
  }
}

TEST(AlgebraProperties, SuitesPass) {
  for (const auto& c : verify::algebra_laws(60, 4)) EXPECT_TRUE(c.passed()) << c.name;
  for (const auto& c : verify::metrics(60, 4)) EXPECT_TRUE(c.passed()) << c.name;
}
