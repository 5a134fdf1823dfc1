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

#ifndef DELTAMATROID_CENSUS_H_
#define DELTAMATROID_CENSUS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "deltamatroid/set_system.h"
#include "deltamatroid/transforms.h"

namespace dmat {

// Largest ground set for which the census enumerates every family.
inline constexpr int kMaxCensusGroundSize = 4;

struct CensusOptions {
  // 0 picks std::thread::hardware_concurrency().
  int workers = 0;
  int escape_depth = 2;
};

// Classification of one labeled family.
struct CensusRecord {
  SetSystem system;
  SetSystem canonical;
  bool is_dm = false;
  // Set only for delta-matroids.
  std::optional<bool> is_binary;
  // Shortest (then lexicographically least) slide sequence within the depth
  // bound whose result fails the exchange axiom. Searched for every
  // delta-matroid, binary or not.
  std::optional<SlideWitness> escape;
};

// Shortest escape of length <= max_depth, sequences of equal length tried in
// lexicographic order of their (a, b) pairs.
std::optional<SlideWitness> FindEscape(const SetSystem& system, int max_depth);

// Classifies all 2^(2^n) - 1 nonempty families on n elements, in family
// bitmap order. Work is split into contiguous bitmap ranges across workers;
// the output order does not depend on the worker count. Throws
// kGroundSetTooLarge above kMaxCensusGroundSize.
std::vector<CensusRecord> EnumerateDeltaMatroids(
    int n, const CensusOptions& options = {});

// One line: ground, family, canonical family, and classification columns.
//   ground 3\t{} {1,2}\tcanonical={} {1,2}\tdm=yes\tbinary=yes\tescape=-
std::string FormatCensusRecord(const CensusRecord& record);

struct CensusSummary {
  int n = 0;
  std::size_t families = 0;
  std::size_t delta_matroids = 0;
  std::size_t binary = 0;
  std::size_t non_binary = 0;
  std::size_t non_binary_escaped = 0;
  std::size_t binary_escaped = 0;
  int max_escape_length = 0;
  // Isomorphism classes, counted via canonical forms.
  std::size_t delta_matroid_classes = 0;
  std::size_t binary_classes = 0;
  std::size_t non_binary_classes = 0;
};

CensusSummary Summarize(int n, const std::vector<CensusRecord>& records);

// Markdown table, one row per summary.
std::string FormatSummaryTable(const std::vector<CensusSummary>& rows);

struct ClosureCounterexample {
  SetSystem source;
  SlideInstruction slide;
  SetSystem result;
  bool result_is_dm = false;
};

struct ClosureReport {
  int n = 0;
  std::size_t binary_systems = 0;
  std::size_t slides_checked = 0;
  std::vector<ClosureCounterexample> counterexamples;

  bool holds() const { return counterexamples.empty(); }
};

// Every single slide of every binary delta-matroid on exactly n elements
// must land on a binary delta-matroid.
ClosureReport VerifyBinaryClosure(int n);

struct TheoremReport {
  std::vector<CensusSummary> rows;
  // Non-binary delta-matroids without an escape, and binary ones with one.
  std::vector<SetSystem> exceptions;

  bool holds() const { return exceptions.empty(); }
};

// Receives each ground size's census before it is discarded.
using CensusSink =
    std::function<void(int n, const std::vector<CensusRecord>& records)>;

// Runs the census for every ground size 1..n.
TheoremReport VerifyTheorem(int n, const CensusOptions& options = {},
                            const CensusSink& sink = {});

struct LawTally {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  // First few failing cases, human readable.
  std::vector<std::string> failures;
};

struct CommutationReport {
  int n = 0;
  bool exhaustive = false;
  std::vector<LawTally> laws;

  bool holds() const;
};

// The four slide identities:
//   (D_ab) - e == (D - e)_ab and (D_ab) / e == (D / e)_ab for e not in {a,b},
//   (D * A)_ab == D_ab * A for A avoiding a and b,
//   (D * A)_ba == D_ab * A for A containing a and b.
// Over arbitrary set systems. Exhaustive for n <= kMaxCensusGroundSize,
// otherwise `samples` random cases per law.
CommutationReport VerifyCommutationLaws(int n, std::size_t samples = 10000,
                                        std::uint64_t seed = 1);

struct AgreementReport {
  int n = 0;
  bool exhaustive = false;
  std::size_t checked = 0;
  std::size_t binary = 0;
  // Systems where the deciders disagree or a certificate fails to replay.
  std::vector<SetSystem> mismatches;

  bool holds() const { return mismatches.empty(); }
};

// Runs both binary deciders on every delta-matroid on n elements
// (n <= kMaxCensusGroundSize) or on `samples` sampled ones (larger n) and
// replays every certificate.
AgreementReport VerifyOracleAgreement(int n, std::size_t samples = 1000,
                                      std::uint64_t seed = 1);

// Distinct delta-matroids on n elements drawn from a random walk that
// toggles one subset at a time and keeps the move only when the result is
// still a delta-matroid. The walk restarts periodically from a random
// binary system so both binary and non-binary regions get visited.
std::vector<SetSystem> SampleDeltaMatroids(int n, std::size_t count,
                                           std::uint64_t seed);

}  // namespace dmat

#endif  // DELTAMATROID_CENSUS_H_
