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

#include "deltamatroid/census.h"

#include <gtest/gtest.h>

#include "deltamatroid/binary.h"
#include "deltamatroid/error.h"
#include "deltamatroid/golden.h"

namespace dmat {
namespace {

SubsetMask M(std::initializer_list<int> e) { return SubsetMask::Of(e); }

TEST(FindEscapeTest, S4EscapesInOneSlide) {
  const auto w = FindEscape(ExcludedMinor(4), 2);
  ASSERT_TRUE(w.has_value());
  ASSERT_EQ(w->sequence.size(), 1u);
  EXPECT_EQ(w->sequence[0], (SlideInstruction{1, 2}));
  EXPECT_FALSE(w->is_dm);
  EXPECT_FALSE(IsDeltaMatroid(ApplySlides(ExcludedMinor(4), w->sequence)));
}

TEST(FindEscapeTest, TwistedS2HasAShorterEscapeThanTheTwoSlideOne) {
  const SetSystem s = Twist(ExcludedMinor(2), M({1, 3}));
  const auto w = FindEscape(s, 2);
  ASSERT_TRUE(w.has_value());
  ASSERT_EQ(w->sequence.size(), 1u);
  EXPECT_EQ(w->sequence[0], (SlideInstruction{1, 3}));
  // The two-slide sequence is an escape as well.
  const std::vector<SlideInstruction> two = {{2, 3}, {1, 2}};
  EXPECT_FALSE(ApplySequence(s, two).is_dm);
}

TEST(FindEscapeTest, BinarySystemsHaveNone) {
  EXPECT_FALSE(FindEscape(ExampleFamily(), 2).has_value());
  EXPECT_FALSE(FindEscape(SetSystem::Make(3, {M({})}), 2).has_value());
  EXPECT_FALSE(FindEscape(SetSystem::Make(1, {M({})}), 2).has_value());
}

TEST(FindEscapeTest, DepthZeroFindsNothing) {
  EXPECT_FALSE(FindEscape(ExcludedMinor(4), 0).has_value());
}

TEST(EnumerateTest, OneElement) {
  const std::vector<CensusRecord> records = EnumerateDeltaMatroids(1);
  ASSERT_EQ(records.size(), 3u);
  for (const CensusRecord& r : records) {
    EXPECT_TRUE(r.is_dm);
    EXPECT_EQ(r.is_binary, std::optional<bool>(true));
    EXPECT_FALSE(r.escape.has_value());
  }
  EXPECT_EQ(records[0].system, SetSystem::Make(1, {M({})}));
  EXPECT_EQ(records[1].system, SetSystem::Make(1, {M({1})}));
  EXPECT_EQ(records[2].system, SetSystem::Make(1, {M({}), M({1})}));
}

TEST(EnumerateTest, ThreeElementsContainsExcludedMinors) {
  const std::vector<CensusRecord> records = EnumerateDeltaMatroids(3);
  ASSERT_EQ(records.size(), 255u);
  for (int i = 1; i <= 3; ++i) {
    for (std::uint32_t a = 0; a < 8; ++a) {
      const SetSystem t = Twist(ExcludedMinor(i), SubsetMask(a));
      const CensusRecord& r = records[t.word() - 1];
      ASSERT_EQ(r.system, t);
      EXPECT_TRUE(r.is_dm);
      EXPECT_EQ(r.is_binary, std::optional<bool>(false));
      ASSERT_TRUE(r.escape.has_value());
      EXPECT_LE(r.escape->sequence.size(), 2u);
    }
  }
}

TEST(EnumerateTest, RecordInvariants) {
  for (int n = 1; n <= 3; ++n) {
    for (const CensusRecord& r : EnumerateDeltaMatroids(n)) {
      EXPECT_EQ(r.is_binary.has_value(), r.is_dm);
      if (r.escape) {
        EXPECT_TRUE(r.is_dm);
        EXPECT_EQ(r.is_binary, std::optional<bool>(false));
        EXPECT_FALSE(r.escape->is_dm);
        EXPECT_EQ(ApplySlides(r.system, r.escape->sequence), r.escape->result);
        EXPECT_FALSE(IsDeltaMatroid(r.escape->result));
      }
      if (r.is_binary.value_or(false)) EXPECT_FALSE(r.escape.has_value());
    }
  }
}

TEST(EnumerateTest, IndependentOfWorkerCount) {
  CensusOptions one;
  one.workers = 1;
  CensusOptions many;
  many.workers = 7;
  const auto a = EnumerateDeltaMatroids(3, one);
  const auto b = EnumerateDeltaMatroids(3, many);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(FormatCensusRecord(a[i]), FormatCensusRecord(b[i]));
  }
}

TEST(EnumerateTest, PaddingPreservesClassification) {
  // A census entry on n - 1 elements, padded with an element no feasible set
  // uses, classifies the same way at n and deletes back to itself.
  const auto smaller = EnumerateDeltaMatroids(2);
  const auto larger = EnumerateDeltaMatroids(3);
  for (const CensusRecord& r : smaller) {
    const SetSystem padded = SetSystem::Make(3, r.system.Members());
    const CensusRecord& big = larger[padded.word() - 1];
    EXPECT_EQ(big.is_dm, r.is_dm);
    EXPECT_EQ(big.is_binary, r.is_binary);
    EXPECT_EQ(Delete(padded, 3), r.system);
  }
}

TEST(EnumerateTest, TooLarge) {
  EXPECT_THROW(EnumerateDeltaMatroids(5), Error);
  EXPECT_THROW(EnumerateDeltaMatroids(0), Error);
}

TEST(FormatCensusRecordTest, Columns) {
  const auto records = EnumerateDeltaMatroids(3);
  const CensusRecord& s1 = records[ExcludedMinor(1).word() - 1];
  EXPECT_EQ(FormatCensusRecord(s1),
            "ground 3\t{} {1,2} {1,3} {2,3} {1,2,3}\tcanonical={} {1,2} {1,3} "
            "{2,3} {1,2,3}\tdm=yes\tbinary=no\tescape=1,2");
  const CensusRecord& bad =
      records[HandleSlide(ExcludedMinor(1), 1, 2).word() - 1];
  EXPECT_NE(FormatCensusRecord(bad).find("dm=no\tbinary=-\tescape=-"),
            std::string::npos);
}

TEST(SummaryTest, OneAndTwoElements) {
  const CensusSummary one = Summarize(1, EnumerateDeltaMatroids(1));
  EXPECT_EQ(one.families, 3u);
  EXPECT_EQ(one.delta_matroids, 3u);
  EXPECT_EQ(one.binary, 3u);
  EXPECT_EQ(one.non_binary, 0u);
  // The excluded minors need three elements, so nothing below is non-binary.
  const CensusSummary two = Summarize(2, EnumerateDeltaMatroids(2));
  EXPECT_EQ(two.families, 15u);
  EXPECT_EQ(two.binary + two.non_binary, two.delta_matroids);
  EXPECT_EQ(two.non_binary, 0u);
  const std::string table = FormatSummaryTable({one, two});
  EXPECT_NE(table.find("| 1 | 3 | 3 | 3 | 0 |"), std::string::npos);
}

TEST(ClosureTest, SmallGroundSets) {
  for (int n = 1; n <= 3; ++n) {
    const ClosureReport r = VerifyBinaryClosure(n);
    EXPECT_TRUE(r.holds()) << "n=" << n;
    EXPECT_EQ(r.slides_checked, r.binary_systems * n * (n - 1));
  }
}

TEST(ClosureTest, ExampleFamilyAllSlidesStayBinary) {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      if (a == b) continue;
      const SetSystem s = HandleSlide(ExampleFamily(), a, b);
      ASSERT_TRUE(IsDeltaMatroid(s));
      EXPECT_TRUE(IsBinaryBySearch(s).is_binary);
    }
  }
  EXPECT_EQ(HandleSlide(SetSystem::Make(3, {M({})}), 1, 2),
            SetSystem::Make(3, {M({})}));
}

TEST(TheoremTest, HoldsUpToThree) {
  const TheoremReport r = VerifyTheorem(3);
  EXPECT_TRUE(r.holds());
  ASSERT_EQ(r.rows.size(), 3u);
  EXPECT_GT(r.rows[2].non_binary, 0u);
  EXPECT_EQ(r.rows[2].non_binary, r.rows[2].non_binary_escaped);
  EXPECT_EQ(r.rows[2].binary_escaped, 0u);
}

TEST(CommutationTest, ExhaustiveThree) {
  const CommutationReport r = VerifyCommutationLaws(3);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_TRUE(r.holds());
  ASSERT_EQ(r.laws.size(), 4u);
  // 255 families, 6 ordered pairs, one e each.
  EXPECT_EQ(r.laws[0].checked, 255u * 6u);
  EXPECT_EQ(r.laws[1].checked, 255u * 6u);
  // A avoiding {a,b}: 2 choices; A containing {a,b}: 2 choices.
  EXPECT_EQ(r.laws[2].checked, 255u * 6u * 2u);
  EXPECT_EQ(r.laws[3].checked, 255u * 6u * 2u);
}

TEST(CommutationTest, SampledFive) {
  const CommutationReport r = VerifyCommutationLaws(5, 500, 3);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_TRUE(r.holds());
  for (const LawTally& t : r.laws) EXPECT_GE(t.checked, 500u);
}

TEST(CommutationTest, SpecificInstances) {
  const SetSystem& s1 = ExcludedMinor(1);
  EXPECT_EQ(Delete(HandleSlide(s1, 1, 2), 3), HandleSlide(Delete(s1, 3), 1, 2));
  EXPECT_EQ(Contract(HandleSlide(s1, 1, 2), 3),
            HandleSlide(Contract(s1, 3), 1, 2));
  EXPECT_EQ(HandleSlide(Twist(ExcludedMinor(4), M({3, 4})), 1, 2),
            Twist(HandleSlide(ExcludedMinor(4), 1, 2), M({3, 4})));
  EXPECT_EQ(HandleSlide(Twist(ExcludedMinor(5), M({1, 3})), 3, 1),
            Twist(HandleSlide(ExcludedMinor(5), 1, 3), M({1, 3})));
}

TEST(SampleDeltaMatroidsTest, DistinctDeltaMatroidsOfBothKinds) {
  const std::vector<SetSystem> sample = SampleDeltaMatroids(4, 300, 5);
  ASSERT_EQ(sample.size(), 300u);
  std::size_t binary = 0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    ASSERT_TRUE(IsDeltaMatroid(sample[i]));
    if (IsBinaryBySearch(sample[i]).is_binary) ++binary;
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      ASSERT_NE(sample[i], sample[j]);
    }
  }
  EXPECT_GT(binary, 0u);
  EXPECT_LT(binary, sample.size());
}

TEST(SampleDeltaMatroidsTest, Deterministic) {
  EXPECT_EQ(SampleDeltaMatroids(5, 20, 8), SampleDeltaMatroids(5, 20, 8));
}

}  // namespace
}  // namespace dmat
