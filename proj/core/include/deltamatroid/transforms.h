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

#ifndef DELTAMATROID_TRANSFORMS_H_
#define DELTAMATROID_TRANSFORMS_H_

#include <span>
#include <string>
#include <vector>

#include "deltamatroid/set_system.h"

namespace dmat {

// Slide element a over element b (1-based, a != b).
struct SlideInstruction {
  int a = 0;
  int b = 0;

  friend bool operator==(const SlideInstruction&,
                         const SlideInstruction&) = default;
  friend auto operator<=>(const SlideInstruction&,
                          const SlideInstruction&) = default;
};

// The outcome of folding a slide sequence over a source system.
struct SlideWitness {
  std::vector<SlideInstruction> sequence;
  SetSystem result;
  bool is_dm = false;
};

// Family {A ^ X : X in family}.
SetSystem Twist(const SetSystem& system, SubsetMask twist_set);

// Twist by the whole ground set.
SetSystem Dual(const SetSystem& system);

// Toggles X + a for every feasible X + b with X avoiding {a, b}.
// Throws kSameElement if a == b and kOutOfRange for labels outside 1..n.
SetSystem HandleSlide(const SetSystem& system, int a, int b);

// Deletion and contraction at e. The surviving elements are renumbered
// order-preservingly to 1..n-1. Throw kWouldBeEmpty when the resulting
// family would be empty and kEmptyGroundSet when n == 1.
SetSystem Delete(const SetSystem& system, int e);
SetSystem Contract(const SetSystem& system, int e);

struct MinorStep {
  enum class Kind { kDelete, kContract };
  Kind kind = Kind::kDelete;
  // Label in the original system, not the current one.
  int element = 0;

  friend bool operator==(const MinorStep&, const MinorStep&) = default;
};

struct Minor {
  SetSystem system;
  std::vector<MinorStep> steps;
  // labels[i] is the original label of element i + 1 of `system`.
  std::vector<int> labels;

  // e.g. "D", "D-3", "D-3/1" (original labels).
  std::string Describe() const;
};

// Replays a recorded step list against the original system.
SetSystem ApplyMinorSteps(const SetSystem& system,
                          std::span<const MinorStep> steps);

// Every distinct minor (deduplicated on the relabeled family) reachable by
// deletions and contractions, in breadth-first order so each witness is as
// short as possible. The system itself comes first. Illegal steps (empty
// family, empty ground set) are skipped.
std::vector<Minor> Minors(const SetSystem& system);

SetSystem ApplySlides(const SetSystem& system,
                      std::span<const SlideInstruction> sequence);

// Folds HandleSlide over `sequence` and records the axiom verdict.
SlideWitness ApplySequence(const SetSystem& system,
                           std::span<const SlideInstruction> sequence);

}  // namespace dmat

#endif  // DELTAMATROID_TRANSFORMS_H_
