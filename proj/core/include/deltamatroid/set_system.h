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

#ifndef DELTAMATROID_SET_SYSTEM_H_
#define DELTAMATROID_SET_SYSTEM_H_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <utility>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dmat {

// Largest supported ground set. The family bitmap of a system on n elements
// has 2^n bits, so the cap keeps it at 8 KiB.
inline constexpr int kMaxGroundSize = 16;

// A subset of {1..n}. Element e is stored at bit e-1.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

  // Builds a mask from 1-based element labels.
  static SubsetMask Of(std::initializer_list<int> elements);
  static SubsetMask Of(std::span<const int> elements);
  static constexpr SubsetMask Full(int n) {
    return SubsetMask(n >= 32 ? ~0u : (1u << n) - 1u);
  }
  static constexpr SubsetMask Singleton(int element) {
    return SubsetMask(1u << (element - 1));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int element) const {
    return (bits_ >> (element - 1)) & 1u;
  }
  // True iff no element above n is present.
  constexpr bool FitsIn(int n) const { return (bits_ & ~Full(n).bits()) == 0; }
  constexpr bool IsSubsetOf(SubsetMask other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  // 1-based labels in increasing order.
  std::vector<int> Elements() const;
  // "{1,2,3}", "{}" for the empty set.
  std::string ToString() const;

  constexpr SubsetMask operator^(SubsetMask o) const {
    return SubsetMask(bits_ ^ o.bits_);
  }
  constexpr SubsetMask operator|(SubsetMask o) const {
    return SubsetMask(bits_ | o.bits_);
  }
  constexpr SubsetMask operator&(SubsetMask o) const {
    return SubsetMask(bits_ & o.bits_);
  }
  constexpr SubsetMask operator~() const { return SubsetMask(~bits_); }

  friend constexpr auto operator<=>(SubsetMask, SubsetMask) = default;

 private:
  std::uint32_t bits_ = 0;
};

// A ground set {1..n} together with a nonempty family of its subsets, stored
// as a membership bitmap indexed by subset mask. Immutable once built.
class SetSystem {
 public:
  // Collapses duplicates. Throws kEmptyFamily, kOutOfRange, or
  // kGroundSetTooLarge.
  static SetSystem Make(int ground_size, std::span<const SubsetMask> members);
  static SetSystem Make(int ground_size,
                        std::initializer_list<SubsetMask> members);
  // The bitmap must have exactly max(1, 2^n / 64) words with no bits past
  // 2^n.
  static SetSystem FromBitmap(int ground_size,
                              std::vector<std::uint64_t> bitmap);
  // Convenience for n <= 6, where the whole family fits in one word.
  static SetSystem FromWord(int ground_size, std::uint64_t word);

  int ground_size() const { return ground_size_; }
  // Number of feasible sets.
  std::size_t size() const;
  bool contains(SubsetMask set) const {
    const std::uint32_t m = set.bits();
    return (bitmap_[m >> 6] >> (m & 63)) & 1u;
  }
  // Members in ascending mask order.
  std::vector<SubsetMask> Members() const;
  std::span<const std::uint64_t> bitmap() const { return bitmap_; }
  // First bitmap word; the full family when n <= 6.
  std::uint64_t word() const { return bitmap_.front(); }

  template <typename Fn>
  void ForEachMember(Fn&& fn) const {
    for (std::size_t w = 0; w < bitmap_.size(); ++w) {
      std::uint64_t word = bitmap_[w];
      while (word != 0) {
        const int bit = std::countr_zero(word);
        fn(SubsetMask(static_cast<std::uint32_t>(w * 64 + bit)));
        word &= word - 1;
      }
    }
  }

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

  // Orders systems by ground size, then by family bitmap read as an unsigned
  // integer whose most significant bit is the largest mask.
  friend std::strong_ordering operator<=>(const SetSystem& a,
                                          const SetSystem& b);

 private:
  SetSystem(int ground_size, std::vector<std::uint64_t> bitmap)
      : ground_size_(ground_size), bitmap_(std::move(bitmap)) {}

  int ground_size_;
  std::vector<std::uint64_t> bitmap_;

  friend class SetSystemBuilder;
};

// Mutable staging area for algorithms that produce families bit by bit.
class SetSystemBuilder {
 public:
  explicit SetSystemBuilder(int ground_size);

  int ground_size() const { return ground_size_; }
  void Set(SubsetMask set) {
    bitmap_[set.bits() >> 6] |= std::uint64_t{1} << (set.bits() & 63);
  }
  void Toggle(SubsetMask set) {
    bitmap_[set.bits() >> 6] ^= std::uint64_t{1} << (set.bits() & 63);
  }
  // Throws kEmptyFamily if nothing was added.
  SetSystem Build() &&;

 private:
  int ground_size_;
  std::vector<std::uint64_t> bitmap_;
};

inline bool FamilyEqual(const SetSystem& a, const SetSystem& b) {
  return a == b;
}

// Number of 64-bit words in the bitmap of a system on n elements.
constexpr std::size_t BitmapWords(int ground_size) {
  return ground_size <= 6 ? 1 : std::size_t{1} << (ground_size - 6);
}

// A triple (f1, f2, x) for which the symmetric exchange axiom fails: x lies in
// f1 ^ f2, and no y in f1 ^ f2 (y == x included) puts f1 ^ {x, y} in the
// family. x is 1-based.
struct AxiomViolation {
  SubsetMask f1;
  SubsetMask f2;
  int x = 0;

  friend bool operator==(const AxiomViolation&,
                         const AxiomViolation&) = default;
};

// Returns the violation with the smallest (f1, f2, x) in numeric order, or
// nullopt when the system is a delta-matroid.
std::optional<AxiomViolation> FindAxiomViolation(const SetSystem& system);

inline bool IsDeltaMatroid(const SetSystem& system) {
  return !FindAxiomViolation(system).has_value();
}

// Re-checks that `violation` is a genuine counterexample for `system`.
bool ViolationHolds(const SetSystem& system, const AxiomViolation& violation);

struct SetSystemHash {
  std::size_t operator()(const SetSystem& s) const;
};

}  // namespace dmat

#endif  // DELTAMATROID_SET_SYSTEM_H_
