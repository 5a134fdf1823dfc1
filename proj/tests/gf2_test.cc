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

#include "deltamatroid/gf2.h"

#include <gtest/gtest.h>

#include "deltamatroid/error.h"
#include "deltamatroid/golden.h"
#include "oracle.h"

namespace dmat {
namespace {

SubsetMask M(std::initializer_list<int> e) { return SubsetMask::Of(e); }

std::vector<std::vector<int>> Dense(const SymmetricBinaryMatrix& a) {
  std::vector<std::vector<int>> out(a.size(), std::vector<int>(a.size()));
  for (int i = 1; i <= a.size(); ++i) {
    for (int j = 1; j <= a.size(); ++j) out[i - 1][j - 1] = a.at(i, j);
  }
  return out;
}

TEST(Gf2InvertibleTest, ExampleMatrix) {
  const SymmetricBinaryMatrix a = ExampleMatrix();
  EXPECT_TRUE(Gf2Invertible(a, M({1, 2})));
  EXPECT_TRUE(Gf2Invertible(a, M({})));
  EXPECT_FALSE(Gf2Invertible(a, M({1, 3})));
  EXPECT_TRUE(Gf2Invertible(a, M({1, 2, 3, 4})));
  EXPECT_THROW(Gf2Invertible(a, M({5})), Error);
}

TEST(Gf2InvertibleTest, EmptySubmatrixIsInvertible) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_TRUE(Gf2Invertible(SymmetricBinaryMatrix(n), SubsetMask()));
  }
}

TEST(Gf2InvertibleTest, OddAlternatingSubmatricesAreSingular) {
  for (int n = 1; n <= 5; ++n) {
    const std::uint64_t count = std::uint64_t{1}
                                << SymmetricBinaryMatrix::EncodingBits(n);
    for (std::uint64_t code = 0; code < count; ++code) {
      const SymmetricBinaryMatrix a =
          SymmetricBinaryMatrix::FromEncoding(n, code);
      bool zero_diagonal = true;
      for (int i = 1; i <= n; ++i) zero_diagonal &= !a.at(i, i);
      if (!zero_diagonal) continue;
      for (std::uint32_t w = 0; w < (1u << n); ++w) {
        if (std::popcount(w) % 2 == 1) {
          ASSERT_FALSE(Gf2Invertible(a, SubsetMask(w)));
        }
      }
    }
  }
}

TEST(Gf2InvertibleTest, MatchesPermutationExpansion) {
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t count = std::uint64_t{1}
                                << SymmetricBinaryMatrix::EncodingBits(n);
    for (std::uint64_t code = 0; code < count; ++code) {
      const SymmetricBinaryMatrix a =
          SymmetricBinaryMatrix::FromEncoding(n, code);
      const auto dense = Dense(a);
      for (const oracle::Set& w : oracle::AllSubsets(n)) {
        std::vector<int> e(w.begin(), w.end());
        ASSERT_EQ(Gf2Invertible(a, SubsetMask::Of(e)),
                  oracle::PrincipalDeterminant(dense, w));
      }
    }
  }
}

TEST(MatroidOfMatrixTest, ExampleFamily) {
  EXPECT_EQ(MatroidOfMatrix(ExampleMatrix()),
            SetSystem::Make(4, {M({}), M({1, 2}), M({2, 3}), M({2, 4}),
                                M({3, 4}), M({1, 2, 3, 4})}));
}

TEST(MatroidOfMatrixTest, ZeroAndIdentity) {
  EXPECT_EQ(MatroidOfMatrix(SymmetricBinaryMatrix(3)),
            SetSystem::Make(3, {M({})}));
  EXPECT_EQ(MatroidOfMatrix(SymmetricBinaryMatrix::Identity(2)),
            SetSystem::Make(2, {M({}), M({1}), M({2}), M({1, 2})}));
}

TEST(MatroidOfMatrixTest, AlwaysADeltaMatroid) {
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t count = std::uint64_t{1}
                                << SymmetricBinaryMatrix::EncodingBits(n);
    for (std::uint64_t code = 0; code < count; ++code) {
      const SetSystem d =
          MatroidOfMatrix(SymmetricBinaryMatrix::FromEncoding(n, code));
      ASSERT_TRUE(d.contains(SubsetMask()));
      ASSERT_TRUE(IsDeltaMatroid(d)) << "n=" << n << " code=" << code;
    }
  }
}

TEST(MatroidOfMatrixTest, DeterminesTheMatrix) {
  // Distinct matrices give distinct D(A): the diagonal is read off the
  // singletons and each off-diagonal entry off a pair.
  for (int n = 1; n <= 4; ++n) {
    std::set<SetSystem> seen;
    const std::uint64_t count = std::uint64_t{1}
                                << SymmetricBinaryMatrix::EncodingBits(n);
    for (std::uint64_t code = 0; code < count; ++code) {
      seen.insert(MatroidOfMatrix(SymmetricBinaryMatrix::FromEncoding(n, code)));
    }
    EXPECT_EQ(seen.size(), count);
  }
}

TEST(SymmetricBinaryMatrixTest, EncodingRoundTrip) {
  for (std::uint64_t code = 0; code < (1u << 10); ++code) {
    EXPECT_EQ(SymmetricBinaryMatrix::FromEncoding(4, code).Encoding(), code);
  }
}

TEST(SymmetricBinaryMatrixTest, RejectsAsymmetricRows) {
  const std::uint32_t rows[] = {0b10, 0b00};
  try {
    SymmetricBinaryMatrix::FromRows(rows);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeMismatch);
  }
  const std::uint32_t wide[] = {0b100, 0b000};
  EXPECT_THROW(SymmetricBinaryMatrix::FromRows(wide), Error);
}

TEST(SymmetricBinaryMatrixTest, ToString) {
  EXPECT_EQ(ExampleMatrix().ToString(),
            "0 1 0 0\n1 0 1 1\n0 1 0 1\n0 1 1 0\n");
}

}  // namespace
}  // namespace dmat
