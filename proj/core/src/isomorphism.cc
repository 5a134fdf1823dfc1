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

#include "deltamatroid/isomorphism.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "deltamatroid/error.h"

namespace dmat {

Relabeling Relabeling::Identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Relabeling(std::move(images));
}

Relabeling Relabeling::FromImages(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> hit(n + 1, false);
  for (int v : images) {
    if (v < 1 || v > n || hit[v]) {
      throw Error(ErrorCode::kOutOfRange,
                  "relabeling is not a permutation of 1.." +
                      std::to_string(n));
    }
    hit[v] = true;
  }
  return Relabeling(std::move(images));
}

SubsetMask Relabeling::Apply(SubsetMask set) const {
  std::uint32_t out = 0;
  for (std::uint32_t b = set.bits(); b != 0; b &= b - 1) {
    out |= 1u << (images_[std::countr_zero(b)] - 1);
  }
  return SubsetMask(out);
}

Relabeling Relabeling::Inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i] - 1] = static_cast<int>(i) + 1;
  }
  return Relabeling(std::move(inv));
}

bool Relabeling::IsIdentity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::string Relabeling::ToString() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(images_[i]);
  }
  out += ']';
  return out;
}

SetSystem ApplyRelabeling(const SetSystem& system, const Relabeling& p) {
  if (p.size() != system.ground_size()) {
    throw Error(ErrorCode::kSizeMismatch,
                "relabeling of size " + std::to_string(p.size()) +
                    " applied to ground set of size " +
                    std::to_string(system.ground_size()));
  }
  SetSystemBuilder builder(system.ground_size());
  system.ForEachMember([&](SubsetMask m) { builder.Set(p.Apply(m)); });
  return std::move(builder).Build();
}

namespace {

// Per-element fingerprint that every isomorphism must preserve: how many
// feasible sets of each cardinality contain the element.
using Profile = std::array<int, kMaxGroundSize + 1>;

std::vector<Profile> ElementProfiles(const SetSystem& system) {
  std::vector<Profile> profiles(system.ground_size(), Profile{});
  system.ForEachMember([&](SubsetMask m) {
    for (int e : m.Elements()) ++profiles[e - 1][m.size()];
  });
  return profiles;
}

std::vector<int> SizeHistogram(const SetSystem& system) {
  std::vector<int> hist(system.ground_size() + 1, 0);
  system.ForEachMember([&](SubsetMask m) { ++hist[m.size()]; });
  return hist;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const SetSystem& from, const SetSystem& to)
      : from_(from),
        to_(to),
        n_(from.ground_size()),
        from_members_(from.Members()),
        to_members_(to.Members()),
        from_profiles_(ElementProfiles(from)),
        to_profiles_(ElementProfiles(to)),
        images_(n_, 0),
        used_(n_ + 1, false) {}

  std::optional<Relabeling> Run() {
    if (Extend(0)) return Relabeling::FromImages(images_);
    return std::nullopt;
  }

 private:
  // Elements 1..depth are assigned. The projections of both families onto
  // the assigned elements (and their images) must agree as multisets.
  bool ProjectionsAgree(int depth) const {
    const std::uint32_t domain = (1u << depth) - 1u;
    std::uint32_t range = 0;
    for (int i = 0; i < depth; ++i) range |= 1u << (images_[i] - 1);
    std::vector<std::uint32_t> a;
    std::vector<std::uint32_t> b;
    a.reserve(from_members_.size());
    b.reserve(to_members_.size());
    for (SubsetMask m : from_members_) {
      std::uint32_t image = 0;
      for (std::uint32_t bits = m.bits() & domain; bits != 0;
           bits &= bits - 1) {
        image |= 1u << (images_[std::countr_zero(bits)] - 1);
      }
      a.push_back(image);
    }
    for (SubsetMask m : to_members_) b.push_back(m.bits() & range);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  bool Extend(int depth) {
    if (depth == n_) return true;
    for (int candidate = 1; candidate <= n_; ++candidate) {
      if (used_[candidate]) continue;
      if (from_profiles_[depth] != to_profiles_[candidate - 1]) continue;
      images_[depth] = candidate;
      used_[candidate] = true;
      if (ProjectionsAgree(depth + 1) && Extend(depth + 1)) return true;
      used_[candidate] = false;
    }
    return false;
  }

  const SetSystem& from_;
  const SetSystem& to_;
  int n_;
  std::vector<SubsetMask> from_members_;
  std::vector<SubsetMask> to_members_;
  std::vector<Profile> from_profiles_;
  std::vector<Profile> to_profiles_;
  std::vector<int> images_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<Relabeling> AreIsomorphic(const SetSystem& from,
                                        const SetSystem& to) {
  if (from.ground_size() != to.ground_size()) return std::nullopt;
  if (from.size() != to.size()) return std::nullopt;
  if (SizeHistogram(from) != SizeHistogram(to)) return std::nullopt;
  return IsomorphismSearch(from, to).Run();
}

SetSystem CanonicalForm(const SetSystem& system) {
  const int n = system.ground_size();
  if (n > kMaxCanonicalGroundSize) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "canonical form supports ground sets up to " +
                    std::to_string(kMaxCanonicalGroundSize));
  }
  const std::vector<SubsetMask> members = system.Members();
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::optional<SetSystem> best;
  do {
    SetSystemBuilder builder(n);
    for (SubsetMask m : members) {
      std::uint32_t image = 0;
      for (std::uint32_t b = m.bits(); b != 0; b &= b - 1) {
        image |= 1u << (images[std::countr_zero(b)] - 1);
      }
      builder.Set(SubsetMask(image));
    }
    SetSystem candidate = std::move(builder).Build();
    if (!best || candidate < *best) best = std::move(candidate);
  } while (std::next_permutation(images.begin(), images.end()));
  return *std::move(best);
}

}  // namespace dmat
