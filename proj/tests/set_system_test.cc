// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "deltamatroid/set_system.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "deltamatroid/binary.h"
#include "deltamatroid/error.h"
#include "generators.h"
#include "oracle.h"

namespace dmat {
namespace {

SubsetMask M(std::initializer_list<int> e) { return SubsetMask::Of(e); }

TEST(SubsetMaskTest, BitLayoutIsOneBased) {
  EXPECT_EQ(M({1}).bits(), 1u);
  EXPECT_EQ(M({1, 3}).bits(), 5u);
  EXPECT_EQ((M({1, 2}) ^ M({2, 3})), M({1, 3}));
  EXPECT_EQ(M({2, 4}).ToString(), "{2,4}");
  EXPECT_EQ(SubsetMask().ToString(), "{}");
  EXPECT_TRUE(M({3}).FitsIn(3));
  EXPECT_FALSE(M({4}).FitsIn(3));
  EXPECT_THROW(M({0}), Error);
  EXPECT_THROW(M({17}), Error);
}

TEST(SetSystemTest, MakeS1) {
  const SetSystem s1 = SetSystem::Make(
      3, {M({}), M({1, 2}), M({1, 3}), M({2, 3}), M({1, 2, 3})});
  EXPECT_EQ(s1, ExcludedMinor(1));
  EXPECT_EQ(s1.size(), 5u);
  EXPECT_TRUE(s1.contains(M({1, 3})));
  EXPECT_FALSE(s1.contains(M({1})));
}

TEST(SetSystemTest, SingleEmptyMember) {
  const SetSystem s = SetSystem::Make(1, {M({})});
  EXPECT_EQ(s.ground_size(), 1);
  EXPECT_EQ(s.size(), 1u);
}

TEST(SetSystemTest, DuplicatesCollapse) {
  const SetSystem s = SetSystem::Make(2, {M({1}), M({1}), M({})});
  EXPECT_EQ(s.size(), 2u);
}

TEST(SetSystemTest, EmptyFamilyRejected) {
  try {
    SetSystem::Make(2, std::span<const SubsetMask>{});
    FAIL() << "expected EmptyFamily";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyFamily);
  }
}

TEST(SetSystemTest, OutOfRangeMemberRejected) {
  try {
    SetSystem::Make(2, {M({3})});
    FAIL() << "expected OutOfRange";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
  }
}

TEST(SetSystemTest, GroundSizeLimits) {
  EXPECT_THROW(SetSystem::Make(0, {M({})}), Error);
  EXPECT_THROW(SetSystem::Make(17, {M({})}), Error);
  const SetSystem big = SetSystem::Make(16, {M({16}), M({1, 16})});
  EXPECT_EQ(big.bitmap().size(), 1024u);
  EXPECT_EQ(big.Members().size(), 2u);
}

TEST(SetSystemTest, FamilyEqual) {
  const SetSystem& s1 = ExcludedMinor(1);
  const SetSystem& s2 = ExcludedMinor(2);
  EXPECT_TRUE(FamilyEqual(s1, s1));
  EXPECT_FALSE(FamilyEqual(s1, s2));
  std::vector<SubsetMask> toggled = s1.Members();
  toggled.push_back(M({1}));
  EXPECT_FALSE(FamilyEqual(s1, SetSystem::Make(3, toggled)));
  EXPECT_FALSE(FamilyEqual(SetSystem::Make(2, {M({})}),
                           SetSystem::Make(3, {M({})})));
}

TEST(AxiomTest, ExcludedMinorsAreDeltaMatroids) {
  for (int i = 1; i <= 5; ++i) EXPECT_TRUE(IsDeltaMatroid(ExcludedMinor(i)));
}

TEST(AxiomTest, S2NeedsYEqualX) {
  // The pair ({}, {1}) can only be repaired by y = x = 1.
  EXPECT_TRUE(IsDeltaMatroid(ExcludedMinor(2)));
}

TEST(AxiomTest, S1Slide12ViolationIsLeast) {
  const SetSystem s = SetSystem::Make(
      3, {M({}), M({1, 2}), M({2, 3}), M({1, 2, 3})});
  const auto v = FindAxiomViolation(s);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->f1, M({1, 2, 3}));
  EXPECT_EQ(v->f2, M({}));
  EXPECT_EQ(v->x, 2);
  EXPECT_TRUE(ViolationHolds(s, *v));
}

TEST(AxiomTest, SingleMemberAlwaysPasses) {
  for (std::uint32_t m = 0; m < 16; ++m) {
    EXPECT_TRUE(IsDeltaMatroid(SetSystem::Make(4, {SubsetMask(m)})));
  }
}

TEST(AxiomTest, ViolationHoldsRejectsBogusTriples) {
  const SetSystem& s1 = ExcludedMinor(1);
  EXPECT_FALSE(ViolationHolds(s1, {M({}), M({1, 2}), 1}));
  EXPECT_FALSE(ViolationHolds(s1, {M({1}), M({1, 2}), 2}));
  EXPECT_FALSE(ViolationHolds(s1, {M({}), M({1, 2}), 3}));
}

TEST(AxiomTest, MatchesDefinitionExhaustivelyUpToThree) {
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t w = 1; w < (std::uint64_t{1} << (1u << n)); ++w) {
      const SetSystem s = SetSystem::FromWord(n, w);
      ASSERT_EQ(IsDeltaMatroid(s),
                oracle::SatisfiesExchange(oracle::ToFamily(s)))
          << "n=" << n << " word=" << w;
    }
  }
}

TEST(AxiomTest, MatchesDefinitionOnRandomSystems) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = testing::RandomInt(rng, 4, 6);
    // Sparse families make both verdicts likely.
    SetSystem s = testing::RandomSystem(rng, n);
    if (trial % 2 == 0) {
      SetSystemBuilder b(n);
      for (int k = 0; k < 4; ++k) b.Set(testing::RandomSubset(rng, n));
      s = std::move(b).Build();
    }
    ASSERT_EQ(IsDeltaMatroid(s),
              oracle::SatisfiesExchange(oracle::ToFamily(s)));
  }
}

TEST(AxiomTest, InvariantUnderMemberOrder) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const SetSystem s = testing::RandomSystem(rng, 4);
    std::vector<SubsetMask> members = s.Members();
    std::shuffle(members.begin(), members.end(), rng);
    const SetSystem t = SetSystem::Make(4, members);
    EXPECT_EQ(t, s);
    EXPECT_EQ(FindAxiomViolation(t), FindAxiomViolation(s));
  }
}

TEST(AxiomTest, EveryReportedViolationReplays) {
  std::mt19937_64 rng(3);
  int violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const SetSystem s = testing::RandomSystem(rng, testing::RandomInt(rng, 2, 5));
    if (const auto v = FindAxiomViolation(s)) {
      ++violations;
      ASSERT_TRUE(ViolationHolds(s, *v));
    }
  }
  EXPECT_GT(violations, 0);
}

TEST(SetSystemTest, OrderingComparesHighMasksFirst) {
  const SetSystem low = SetSystem::Make(2, {M({}), M({1})});
  const SetSystem high = SetSystem::Make(2, {M({1, 2})});
  EXPECT_LT(low, high);
  EXPECT_LT(SetSystem::Make(1, {M({1})}), low);
}

}  // namespace
}  // namespace dmat
