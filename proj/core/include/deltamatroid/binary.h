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

#ifndef DELTAMATROID_BINARY_H_
#define DELTAMATROID_BINARY_H_

#include <optional>
#include <vector>

#include "deltamatroid/gf2.h"
#include "deltamatroid/isomorphism.h"
#include "deltamatroid/set_system.h"
#include "deltamatroid/transforms.h"

namespace dmat {

// The five excluded minors for binary delta-matroids, index 1..5.
const SetSystem& ExcludedMinor(int index);

// system == Twist(MatroidOfMatrix(matrix), twist).
struct BinaryCertificate {
  SymmetricBinaryMatrix matrix;
  SubsetMask twist;
};

// ApplyRelabeling(Twist(minor, twist), relabeling) == ExcludedMinor(index),
// where `minor` is ApplyMinorSteps(system, steps).
struct ExcludedMinorWitness {
  std::vector<MinorStep> steps;
  SubsetMask twist;
  int excluded_index = 0;
  Relabeling relabeling = Relabeling::Identity(1);
};

struct BinaryVerdict {
  bool is_binary = false;
  std::optional<BinaryCertificate> certificate;
  std::optional<ExcludedMinorWitness> witness;
};

// Largest ground set for the matrix search (2^(n(n+1)/2) matrices).
inline constexpr int kMaxSearchGroundSize = 5;

// Searches for a symmetric matrix A and twist S with D(A) * S == system.
// Ranging S over every subset (not only feasible ones) loses nothing: the
// empty set is always feasible in D(A), so S is feasible in D(A) * S.
//
// The matrices for each n are enumerated once and cached as a map from D(A)
// to the lowest encoding producing it, so the certificate returned is the one
// with the lowest matrix encoding. Throws kNotDeltaMatroid and
// kGroundSetTooLarge.
BinaryVerdict IsBinaryBySearch(const SetSystem& system);

// Looks for a minor that, after some twist, is isomorphic to one of the five
// excluded minors. Minors are visited breadth-first; within a minor an exact
// match (identity relabeling) is preferred over a general isomorphism, then
// lower excluded index, then lower twist. Throws kNotDeltaMatroid.
BinaryVerdict IsBinaryByExcludedMinors(const SetSystem& system);

// Re-validates whichever certificate the verdict carries. A verdict without
// a certificate (a negative answer from the matrix search) replays
// trivially.
bool ReplayVerdict(const SetSystem& system, const BinaryVerdict& verdict);

// Every binary family on n elements (n <= kMaxSearchGroundSize), as the
// sorted list of distinct D(A) * S.
const std::vector<SetSystem>& AllBinarySystems(int n);

}  // namespace dmat

#endif  // DELTAMATROID_BINARY_H_
