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

#include "deltamatroid/text_format.h"

#include <gtest/gtest.h>

#include <random>

#include "deltamatroid/binary.h"
#include "deltamatroid/error.h"
#include "deltamatroid/golden.h"
#include "generators.h"

namespace dmat {
namespace {

SubsetMask M(std::initializer_list<int> e) { return SubsetMask::Of(e); }

TEST(ParseSystemTest, S1) {
  EXPECT_EQ(ParseSystem("ground 3\n{}\n{1,2}\n{1,3}\n{2,3}\n{1,2,3}\n"),
            ExcludedMinor(1));
}

TEST(ParseSystemTest, Minimal) {
  EXPECT_EQ(ParseSystem("ground 1\n{}\n"), SetSystem::Make(1, {M({})}));
  EXPECT_EQ(ParseSystem("ground 1\n{}"), SetSystem::Make(1, {M({})}));
}

TEST(ParseSystemTest, OutOfRange) {
  try {
    ParseSystem("ground 2\n{3}\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
  }
}

TEST(ParseSystemTest, EmptyFamily) {
  try {
    ParseSystem("ground 2\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyFamily);
  }
}

TEST(ParseSystemTest, CommentsBlankLinesAndSpaces) {
  EXPECT_EQ(ParseSystem("# S1\n\nground 3\n{ }\n{1, 2}\n\n{1,3}\n{2 ,3}\n"
                        "{1,2,3}\r\n"),
            ExcludedMinor(1));
}

TEST(ParseSystemTest, ErrorPositions) {
  struct Case {
    const char* text;
    int line;
    int column;
  };
  const Case cases[] = {
      {"ground x\n{}\n", 1, 8},
      {"grund 3\n{}\n", 1, 1},
      {"ground 3\n{2,1}\n", 2, 5},
      {"ground 3\n{1,1}\n", 2, 5},
      {"ground 3\n{1,2\n", 2, 5},
      {"ground 3\n1,2}\n", 2, 1},
      {"ground 3\n{1} {2}\n", 2, 5},
      {"ground 17\n{}\n", 1, 10},
      {"", 1, 1},
  };
  for (const Case& c : cases) {
    try {
      ParseSystem(c.text);
      ADD_FAILURE() << "no error for: " << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), c.line) << c.text;
      EXPECT_EQ(e.column(), c.column) << c.text;
    }
  }
}

TEST(FormatSystemTest, CanonicalOrder) {
  const SetSystem s = SetSystem::Make(3, {M({1, 2, 3}), M({}), M({3}), M({1})});
  EXPECT_EQ(FormatSystem(s), "ground 3\n{}\n{1}\n{3}\n{1,2,3}\n");
  EXPECT_EQ(FormatFamilyInline(s), "{} {1} {3} {1,2,3}");
}

TEST(FormatSystemTest, RoundTripOnRandomSystems) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const SetSystem s =
        testing::RandomSystem(rng, testing::RandomInt(rng, 1, 8));
    const std::string text = FormatSystem(s);
    EXPECT_EQ(ParseSystem(text), s);
    EXPECT_EQ(FormatSystem(ParseSystem(text)), text);
  }
}

TEST(ParseSubsetTest, Basics) {
  EXPECT_EQ(ParseSubset("{}"), SubsetMask());
  EXPECT_EQ(ParseSubset(" {1, 3} "), M({1, 3}));
  EXPECT_THROW(ParseSubset("{1,3"), ParseError);
  EXPECT_THROW(ParseSubset("{3,1}"), ParseError);
}

TEST(ParseMatrixTest, ExampleMatrix) {
  EXPECT_EQ(ParseMatrix("0 1 0 0\n1 0 1 1\n0 1 0 1\n0 1 1 0\n"),
            ExampleMatrix());
}

TEST(ParseMatrixTest, Errors) {
  EXPECT_THROW(ParseMatrix("0 1\n0 0\n"), ParseError);    // asymmetric
  EXPECT_THROW(ParseMatrix("0 1\n1\n"), ParseError);      // ragged
  EXPECT_THROW(ParseMatrix("0 1\n1 0\n0 0\n"), ParseError);  // not square
  EXPECT_THROW(ParseMatrix("0 2\n2 0\n"), ParseError);    // not a bit
  EXPECT_THROW(ParseMatrix(""), ParseError);
}

TEST(SlideSequenceTest, ParseAndFormat) {
  const std::vector<SlideInstruction> seq = ParseSlideSequence("2,3;1,2");
  ASSERT_EQ(seq.size(), 2u);
  EXPECT_EQ(seq[0], (SlideInstruction{2, 3}));
  EXPECT_EQ(seq[1], (SlideInstruction{1, 2}));
  EXPECT_EQ(FormatSlideSequence(seq), "2,3;1,2");
  EXPECT_TRUE(ParseSlideSequence("").empty());
  EXPECT_THROW(ParseSlideSequence("1;2"), ParseError);
  EXPECT_THROW(ParseSlideSequence("1,2;"), ParseError);
}

}  // namespace
}  // namespace dmat
