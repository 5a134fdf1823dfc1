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

#include "deltamatroid/binary.h"

#include <algorithm>
#include <array>
#include <mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "deltamatroid/error.h"

namespace dmat {
namespace {

SubsetMask M(std::initializer_list<int> elements) {
  return SubsetMask::Of(elements);
}

std::array<SetSystem, 5> BuildExcludedMinors() {
  return {
      SetSystem::Make(3, {M({}), M({1, 2}), M({1, 3}), M({2, 3}),
                          M({1, 2, 3})}),
      SetSystem::Make(3, {M({}), M({1}), M({2}), M({3}), M({1, 2}),
                          M({1, 3}), M({2, 3})}),
      SetSystem::Make(3, {M({}), M({2}), M({3}), M({1, 2}), M({1, 3}),
                          M({1, 2, 3})}),
      SetSystem::Make(4, {M({}), M({1, 2}), M({1, 3}), M({1, 4}), M({2, 3}),
                          M({2, 4}), M({3, 4})}),
      SetSystem::Make(4, {M({}), M({1, 2}), M({1, 4}), M({2, 3}), M({3, 4}),
                          M({1, 2, 3, 4})}),
  };
}

void RequireDeltaMatroid(const SetSystem& system) {
  if (!IsDeltaMatroid(system)) {
    throw Error(ErrorCode::kNotDeltaMatroid,
                "binary representability is only defined for delta-matroids");
  }
}

// D(A) family word -> lowest matrix encoding with that D(A).
using MatrixTable = std::unordered_map<std::uint64_t, std::uint64_t>;

const MatrixTable& MatrixTableFor(int n) {
  static std::array<std::once_flag, kMaxSearchGroundSize + 1> once;
  static std::array<MatrixTable, kMaxSearchGroundSize + 1> tables;
  std::call_once(once[n], [n] {
    MatrixTable& table = tables[n];
    const std::uint64_t count = std::uint64_t{1}
                                << SymmetricBinaryMatrix::EncodingBits(n);
    for (std::uint64_t code = 0; code < count; ++code) {
      const SetSystem d =
          MatroidOfMatrix(SymmetricBinaryMatrix::FromEncoding(n, code));
      table.try_emplace(d.word(), code);
    }
  });
  return tables[n];
}

void CheckSearchSize(int n) {
  if (n > kMaxSearchGroundSize) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "matrix search supports ground sets up to " +
                    std::to_string(kMaxSearchGroundSize));
  }
}

}  // namespace

const SetSystem& ExcludedMinor(int index) {
  static const std::array<SetSystem, 5> minors = BuildExcludedMinors();
  if (index < 1 || index > 5) {
    throw Error(ErrorCode::kOutOfRange,
                "excluded minor index " + std::to_string(index) +
                    " outside 1..5");
  }
  return minors[index - 1];
}

BinaryVerdict IsBinaryBySearch(const SetSystem& system) {
  const int n = system.ground_size();
  CheckSearchSize(n);
  RequireDeltaMatroid(system);
  const MatrixTable& table = MatrixTableFor(n);

  std::optional<BinaryCertificate> best;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const SubsetMask twist(s);
    const auto it = table.find(Twist(system, twist).word());
    if (it == table.end()) continue;
    if (!best || it->second < best->matrix.Encoding()) {
      best = BinaryCertificate{
          SymmetricBinaryMatrix::FromEncoding(n, it->second), twist};
    }
  }
  BinaryVerdict verdict;
  verdict.is_binary = best.has_value();
  verdict.certificate = std::move(best);
  return verdict;
}

BinaryVerdict IsBinaryByExcludedMinors(const SetSystem& system) {
  RequireDeltaMatroid(system);
  for (const Minor& minor : Minors(system)) {
    const int n = minor.system.ground_size();
    if (n != 3 && n != 4) continue;
    const std::uint32_t twists = 1u << n;

    for (int index = 1; index <= 5; ++index) {
      const SetSystem& excluded = ExcludedMinor(index);
      if (excluded.ground_size() != n || excluded.size() != minor.system.size())
        continue;
      for (std::uint32_t a = 0; a < twists; ++a) {
        if (Twist(minor.system, SubsetMask(a)) == excluded) {
          return BinaryVerdict{false, std::nullopt,
                               ExcludedMinorWitness{minor.steps, SubsetMask(a),
                                                    index,
                                                    Relabeling::Identity(n)}};
        }
      }
    }
    for (int index = 1; index <= 5; ++index) {
      const SetSystem& excluded = ExcludedMinor(index);
      if (excluded.ground_size() != n || excluded.size() != minor.system.size())
        continue;
      for (std::uint32_t a = 0; a < twists; ++a) {
        if (auto p = AreIsomorphic(Twist(minor.system, SubsetMask(a)),
                                   excluded)) {
          return BinaryVerdict{
              false, std::nullopt,
              ExcludedMinorWitness{minor.steps, SubsetMask(a), index, *p}};
        }
      }
    }
  }
  return BinaryVerdict{true, std::nullopt, std::nullopt};
}

bool ReplayVerdict(const SetSystem& system, const BinaryVerdict& verdict) {
  if (verdict.certificate && verdict.witness) return false;
  if (verdict.certificate) {
    if (!verdict.is_binary) return false;
    const BinaryCertificate& c = verdict.certificate.value();
    if (c.matrix.size() != system.ground_size()) return false;
    return Twist(MatroidOfMatrix(c.matrix), c.twist) == system;
  }
  if (verdict.witness) {
    if (verdict.is_binary) return false;
    const ExcludedMinorWitness& w = verdict.witness.value();
    try {
      const SetSystem minor = ApplyMinorSteps(system, w.steps);
      return ApplyRelabeling(Twist(minor, w.twist), w.relabeling) ==
             ExcludedMinor(w.excluded_index);
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

const std::vector<SetSystem>& AllBinarySystems(int n) {
  CheckSearchSize(n);
  static std::array<std::once_flag, kMaxSearchGroundSize + 1> once;
  static std::array<std::vector<SetSystem>, kMaxSearchGroundSize + 1> lists;
  std::call_once(once[n], [n] {
    std::unordered_set<std::uint64_t> words;
    for (const auto& [word, code] : MatrixTableFor(n)) {
      const SetSystem d = SetSystem::FromWord(n, word);
      for (std::uint32_t s = 0; s < (1u << n); ++s) {
        words.insert(Twist(d, SubsetMask(s)).word());
      }
    }
    std::vector<SetSystem>& out = lists[n];
    out.reserve(words.size());
    for (std::uint64_t w : words) out.push_back(SetSystem::FromWord(n, w));
    std::sort(out.begin(), out.end());
  });
  return lists[n];
}

}  // namespace dmat
