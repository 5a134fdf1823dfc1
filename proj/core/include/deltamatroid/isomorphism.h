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

#ifndef DELTAMATROID_ISOMORPHISM_H_
#define DELTAMATROID_ISOMORPHISM_H_

#include <optional>
#include <string>
#include <vector>

#include "deltamatroid/set_system.h"

namespace dmat {

// A permutation of {1..n}: element e maps to image(e).
class Relabeling {
 public:
  static Relabeling Identity(int n);
  // `images[i]` is the image of element i + 1. Throws kOutOfRange unless the
  // images form a permutation of 1..n.
  static Relabeling FromImages(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int image(int element) const { return images_[element - 1]; }
  const std::vector<int>& images() const { return images_; }
  SubsetMask Apply(SubsetMask set) const;
  Relabeling Inverse() const;
  bool IsIdentity() const;

  // "[2,3,1]"
  std::string ToString() const;

  friend bool operator==(const Relabeling&, const Relabeling&) = default;
  friend auto operator<=>(const Relabeling&, const Relabeling&) = default;

 private:
  explicit Relabeling(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

// Family {p(F) : F in family}. Throws kSizeMismatch if p has the wrong size.
SetSystem ApplyRelabeling(const SetSystem& system, const Relabeling& p);

// The lexicographically least p (by image sequence) with
// ApplyRelabeling(from, p) == to, if any.
std::optional<Relabeling> AreIsomorphic(const SetSystem& from,
                                        const SetSystem& to);

// Largest ground set accepted by CanonicalForm.
inline constexpr int kMaxCanonicalGroundSize = 8;

// The relabeling of `system` with the least family bitmap under the
// SetSystem ordering. Throws kGroundSetTooLarge above
// kMaxCanonicalGroundSize.
SetSystem CanonicalForm(const SetSystem& system);

}  // namespace dmat

#endif  // DELTAMATROID_ISOMORPHISM_H_
