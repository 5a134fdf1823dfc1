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

#include <algorithm>
#include <string>

#include "deltamatroid/error.h"

namespace dmat {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyFamily:
      return "EmptyFamily";
    case ErrorCode::kOutOfRange:
      return "OutOfRange";
    case ErrorCode::kSameElement:
      return "SameElement";
    case ErrorCode::kWouldBeEmpty:
      return "WouldBeEmpty";
    case ErrorCode::kEmptyGroundSet:
      return "EmptyGroundSet";
    case ErrorCode::kGroundSetTooLarge:
      return "GroundSetTooLarge";
    case ErrorCode::kSizeMismatch:
      return "SizeMismatch";
    case ErrorCode::kNotDeltaMatroid:
      return "NotDeltaMatroid";
    case ErrorCode::kParseError:
      return "ParseError";
  }
  return "Unknown";
}

ParseError::ParseError(int line, int column, const std::string& message)
    : Error(ErrorCode::kParseError, "line " + std::to_string(line) +
                                        ", column " + std::to_string(column) +
                                        ": " + message),
      line_(line),
      column_(column) {}

SubsetMask SubsetMask::Of(std::initializer_list<int> elements) {
  return Of(std::span<const int>(elements.begin(), elements.size()));
}

SubsetMask SubsetMask::Of(std::span<const int> elements) {
  std::uint32_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxGroundSize) {
      throw Error(ErrorCode::kOutOfRange,
                  "element " + std::to_string(e) + " outside 1.." +
                      std::to_string(kMaxGroundSize));
    }
    bits |= 1u << (e - 1);
  }
  return SubsetMask(bits);
}

std::vector<int> SubsetMask::Elements() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

std::string SubsetMask::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int e : Elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

namespace {

void CheckGroundSize(int ground_size) {
  if (ground_size < 1) {
    throw Error(ErrorCode::kEmptyGroundSet,
                "ground set must have at least one element");
  }
  if (ground_size > kMaxGroundSize) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "ground set size " + std::to_string(ground_size) +
                    " exceeds " + std::to_string(kMaxGroundSize));
  }
}

std::uint64_t TailMask(int ground_size) {
  if (ground_size >= 6) return ~std::uint64_t{0};
  return (std::uint64_t{1} << (1u << ground_size)) - 1;
}

}  // namespace

SetSystemBuilder::SetSystemBuilder(int ground_size) : ground_size_(ground_size) {
  CheckGroundSize(ground_size);
  bitmap_.assign(BitmapWords(ground_size), 0);
}

SetSystem SetSystemBuilder::Build() && {
  if (std::all_of(bitmap_.begin(), bitmap_.end(),
                  [](std::uint64_t w) { return w == 0; })) {
    throw Error(ErrorCode::kEmptyFamily, "family of feasible sets is empty");
  }
  return SetSystem(ground_size_, std::move(bitmap_));
}

SetSystem SetSystem::Make(int ground_size,
                          std::span<const SubsetMask> members) {
  SetSystemBuilder builder(ground_size);
  for (SubsetMask m : members) {
    if (!m.FitsIn(ground_size)) {
      throw Error(ErrorCode::kOutOfRange,
                  "member " + m.ToString() + " exceeds ground set of size " +
                      std::to_string(ground_size));
    }
    builder.Set(m);
  }
  return std::move(builder).Build();
}

SetSystem SetSystem::Make(int ground_size,
                          std::initializer_list<SubsetMask> members) {
  return Make(ground_size,
              std::span<const SubsetMask>(members.begin(), members.size()));
}

SetSystem SetSystem::FromBitmap(int ground_size,
                                std::vector<std::uint64_t> bitmap) {
  CheckGroundSize(ground_size);
  if (bitmap.size() != BitmapWords(ground_size) ||
      (bitmap.back() & ~TailMask(ground_size)) != 0) {
    throw Error(ErrorCode::kOutOfRange,
                "bitmap does not fit a ground set of size " +
                    std::to_string(ground_size));
  }
  if (std::all_of(bitmap.begin(), bitmap.end(),
                  [](std::uint64_t w) { return w == 0; })) {
    throw Error(ErrorCode::kEmptyFamily, "family of feasible sets is empty");
  }
  return SetSystem(ground_size, std::move(bitmap));
}

SetSystem SetSystem::FromWord(int ground_size, std::uint64_t word) {
  if (ground_size > 6) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "single-word families need n <= 6");
  }
  return FromBitmap(ground_size, {word});
}

std::size_t SetSystem::size() const {
  std::size_t total = 0;
  for (std::uint64_t w : bitmap_) total += std::popcount(w);
  return total;
}

std::vector<SubsetMask> SetSystem::Members() const {
  std::vector<SubsetMask> out;
  out.reserve(size());
  ForEachMember([&](SubsetMask m) { out.push_back(m); });
  return out;
}

std::strong_ordering operator<=>(const SetSystem& a, const SetSystem& b) {
  if (auto c = a.ground_size_ <=> b.ground_size_; c != 0) return c;
  for (std::size_t w = a.bitmap_.size(); w-- > 0;) {
    if (auto c = a.bitmap_[w] <=> b.bitmap_[w]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t SetSystemHash::operator()(const SetSystem& s) const {
  std::size_t h = std::hash<int>{}(s.ground_size());
  for (std::uint64_t w : s.bitmap()) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

std::optional<AxiomViolation> FindAxiomViolation(const SetSystem& system) {
  const int n = system.ground_size();
  const std::vector<SubsetMask> members = system.Members();

  // reach[i * n + x] holds every y with members[i] ^ {x} ^ {y} feasible
  // (y == x meaning members[i] ^ {x}). The exchange test for (f1, f2, x) is
  // then a single AND against f1 ^ f2.
  std::vector<std::uint32_t> reach(members.size() * n, 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int x = 0; x < n; ++x) {
      const std::uint32_t base = members[i].bits() ^ (1u << x);
      std::uint32_t ys = 0;
      for (int y = 0; y < n; ++y) {
        const std::uint32_t target = y == x ? base : base ^ (1u << y);
        if (system.contains(SubsetMask(target))) ys |= 1u << y;
      }
      reach[i * n + x] = ys;
    }
  }

  for (std::size_t i = 0; i < members.size(); ++i) {
    for (SubsetMask f2 : members) {
      const std::uint32_t diff = members[i].bits() ^ f2.bits();
      for (std::uint32_t d = diff; d != 0; d &= d - 1) {
        const int x = std::countr_zero(d);
        if ((reach[i * n + x] & diff) == 0) {
          return AxiomViolation{members[i], f2, x + 1};
        }
      }
    }
  }
  return std::nullopt;
}

bool ViolationHolds(const SetSystem& system, const AxiomViolation& v) {
  const int n = system.ground_size();
  if (v.x < 1 || v.x > n) return false;
  if (!system.contains(v.f1) || !system.contains(v.f2)) return false;
  const SubsetMask diff = v.f1 ^ v.f2;
  if (!diff.contains(v.x)) return false;
  for (int y : diff.Elements()) {
    SubsetMask moved = v.f1 ^ SubsetMask::Singleton(v.x);
    if (y != v.x) moved = moved ^ SubsetMask::Singleton(y);
    if (system.contains(moved)) return false;
  }
  return true;
}

}  // namespace dmat
