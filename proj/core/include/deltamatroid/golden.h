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

#ifndef DELTAMATROID_GOLDEN_H_
#define DELTAMATROID_GOLDEN_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "deltamatroid/gf2.h"
#include "deltamatroid/set_system.h"

namespace dmat {

// Adjacency matrix of the 4-vertex example graph: vertex 1 has degree 1,
// vertex 2 degree 3, vertices 3 and 4 degree 2.
SymmetricBinaryMatrix ExampleMatrix();

// D(ExampleMatrix()): {}, {1,2}, {2,3}, {2,4}, {3,4}, {1,2,3,4}.
SetSystem ExampleFamily();

// A published computation re-run through the library. `expected` is the
// value obtained by applying the definitions directly; `printed_listing` is
// set only where the printed value differs from it.
struct GoldenCase {
  std::string name;
  std::string input;
  std::function<SetSystem()> compute;
  SetSystem expected;
  bool expected_dm = false;
  std::optional<SetSystem> printed_listing;
  std::string provenance;
};

const std::vector<GoldenCase>& GoldenCases();

struct GoldenResult {
  const GoldenCase* golden = nullptr;
  SetSystem computed;
  bool family_ok = false;
  bool is_dm = false;
  // For non-delta-matroids: the least violation and whether it replays.
  std::optional<AxiomViolation> violation;
  bool violation_replays = false;

  bool flagged() const { return golden->printed_listing.has_value(); }
  bool pass() const;
};

struct GoldenReport {
  std::vector<GoldenResult> results;

  std::size_t passed() const;
  std::size_t flagged() const;
  bool all_pass() const { return passed() == results.size(); }
};

GoldenReport RunGoldenSuite();

// One block per case; flagged cases show both the computed family and the
// printed listing.
std::string FormatGoldenReport(const GoldenReport& report);

}  // namespace dmat

#endif  // DELTAMATROID_GOLDEN_H_
