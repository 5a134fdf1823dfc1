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

#include "deltamatroid/transforms.h"

#include <string>
#include <unordered_set>

#include "deltamatroid/error.h"

namespace dmat {
namespace {

void CheckElement(const SetSystem& system, int e) {
  if (e < 1 || e > system.ground_size()) {
    throw Error(ErrorCode::kOutOfRange,
                "element " + std::to_string(e) + " outside 1.." +
                    std::to_string(system.ground_size()));
  }
}

// Removes bit `bit` and shifts the higher bits down by one.
std::uint32_t SqueezeOut(std::uint32_t mask, int bit) {
  const std::uint32_t low = mask & ((1u << bit) - 1u);
  const std::uint32_t high = (mask >> (bit + 1)) << bit;
  return low | high;
}

SetSystem Restrict(const SetSystem& system, int e, bool keep_with_e) {
  CheckElement(system, e);
  if (system.ground_size() == 1) {
    throw Error(ErrorCode::kEmptyGroundSet,
                "cannot remove the only element of the ground set");
  }
  const int bit = e - 1;
  SetSystemBuilder builder(system.ground_size() - 1);
  bool any = false;
  system.ForEachMember([&](SubsetMask m) {
    if (((m.bits() >> bit) & 1u) == (keep_with_e ? 1u : 0u)) {
      builder.Set(SubsetMask(SqueezeOut(m.bits(), bit)));
      any = true;
    }
  });
  if (!any) {
    throw Error(ErrorCode::kWouldBeEmpty,
                std::string(keep_with_e ? "contraction" : "deletion") +
                    " at " + std::to_string(e) + " leaves no feasible set");
  }
  return std::move(builder).Build();
}

}  // namespace

SetSystem Twist(const SetSystem& system, SubsetMask twist_set) {
  if (!twist_set.FitsIn(system.ground_size())) {
    throw Error(ErrorCode::kOutOfRange,
                "twist set " + twist_set.ToString() +
                    " exceeds ground set of size " +
                    std::to_string(system.ground_size()));
  }
  SetSystemBuilder builder(system.ground_size());
  system.ForEachMember([&](SubsetMask m) { builder.Set(m ^ twist_set); });
  return std::move(builder).Build();
}

SetSystem Dual(const SetSystem& system) {
  return Twist(system, SubsetMask::Full(system.ground_size()));
}

SetSystem HandleSlide(const SetSystem& system, int a, int b) {
  CheckElement(system, a);
  CheckElement(system, b);
  if (a == b) {
    throw Error(ErrorCode::kSameElement,
                "handle slide needs two distinct elements, got " +
                    std::to_string(a) + " twice");
  }
  const SubsetMask with_a = SubsetMask::Singleton(a);
  const SubsetMask with_b = SubsetMask::Singleton(b);

  std::vector<std::uint64_t> bitmap(system.bitmap().begin(),
                                    system.bitmap().end());
  system.ForEachMember([&](SubsetMask m) {
    if (m.contains(b) && !m.contains(a)) {
      const std::uint32_t t = ((m ^ with_b) | with_a).bits();
      bitmap[t >> 6] ^= std::uint64_t{1} << (t & 63);
    }
  });
  // Toggled sets all contain a; a family made only of them would need a
  // generator avoiding a, which is itself untouched. So never empty.
  return SetSystem::FromBitmap(system.ground_size(), std::move(bitmap));
}

SetSystem Delete(const SetSystem& system, int e) {
  return Restrict(system, e, false);
}

SetSystem Contract(const SetSystem& system, int e) {
  return Restrict(system, e, true);
}

std::string Minor::Describe() const {
  std::string out = "D";
  for (const MinorStep& step : steps) {
    out += step.kind == MinorStep::Kind::kDelete ? '-' : '/';
    out += std::to_string(step.element);
  }
  return out;
}

SetSystem ApplyMinorSteps(const SetSystem& system,
                          std::span<const MinorStep> steps) {
  SetSystem current = system;
  std::vector<int> labels(system.ground_size());
  for (int i = 0; i < system.ground_size(); ++i) labels[i] = i + 1;
  for (const MinorStep& step : steps) {
    int position = -1;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == step.element) position = static_cast<int>(i);
    }
    if (position < 0) {
      throw Error(ErrorCode::kOutOfRange,
                  "element " + std::to_string(step.element) +
                      " is no longer in the ground set");
    }
    current = step.kind == MinorStep::Kind::kDelete
                  ? Delete(current, position + 1)
                  : Contract(current, position + 1);
    labels.erase(labels.begin() + position);
  }
  return current;
}

std::vector<Minor> Minors(const SetSystem& system) {
  std::vector<Minor> out;
  std::unordered_set<SetSystem, SetSystemHash> seen;

  std::vector<int> labels(system.ground_size());
  for (int i = 0; i < system.ground_size(); ++i) labels[i] = i + 1;
  out.push_back(Minor{system, {}, labels});
  seen.insert(system);

  for (std::size_t head = 0; head < out.size(); ++head) {
    const Minor parent = out[head];
    const int n = parent.system.ground_size();
    if (n == 1) continue;
    for (int e = 1; e <= n; ++e) {
      for (MinorStep::Kind kind :
           {MinorStep::Kind::kDelete, MinorStep::Kind::kContract}) {
        const bool has_member = [&] {
          bool found = false;
          parent.system.ForEachMember([&](SubsetMask m) {
            if (m.contains(e) == (kind == MinorStep::Kind::kContract)) {
              found = true;
            }
          });
          return found;
        }();
        if (!has_member) continue;
        SetSystem child = kind == MinorStep::Kind::kDelete
                              ? Delete(parent.system, e)
                              : Contract(parent.system, e);
        if (!seen.insert(child).second) continue;
        Minor minor{std::move(child), parent.steps, parent.labels};
        minor.steps.push_back({kind, parent.labels[e - 1]});
        minor.labels.erase(minor.labels.begin() + (e - 1));
        out.push_back(std::move(minor));
      }
    }
  }
  return out;
}

SetSystem ApplySlides(const SetSystem& system,
                      std::span<const SlideInstruction> sequence) {
  SetSystem current = system;
  for (const SlideInstruction& step : sequence) {
    current = HandleSlide(current, step.a, step.b);
  }
  return current;
}

SlideWitness ApplySequence(const SetSystem& system,
                           std::span<const SlideInstruction> sequence) {
  SetSystem result = ApplySlides(system, sequence);
  const bool is_dm = IsDeltaMatroid(result);
  return SlideWitness{{sequence.begin(), sequence.end()}, std::move(result),
                      is_dm};
}

}  // namespace dmat
