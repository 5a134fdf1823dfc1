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

#ifndef DELTAMATROID_GF2_H_
#define DELTAMATROID_GF2_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "deltamatroid/set_system.h"

namespace dmat {

// Symmetric n x n matrix over GF(2). Row i is a bit vector: bit j set means
// entry (i + 1, j + 1) is 1.
class SymmetricBinaryMatrix {
 public:
  // All-zero matrix.
  explicit SymmetricBinaryMatrix(int n);

  // One bit vector per row. Throws kOutOfRange for a bad size or a bit past
  // column n, and kSizeMismatch when the rows are not symmetric.
  static SymmetricBinaryMatrix FromRows(std::span<const std::uint32_t> rows);

  // Upper-triangle encoding: entries (i, j) with i <= j, row-major, the
  // first entry in bit 0. Matrices are enumerated in encoding order.
  static SymmetricBinaryMatrix FromEncoding(int n, std::uint64_t code);
  std::uint64_t Encoding() const;
  static int EncodingBits(int n) { return n * (n + 1) / 2; }

  static SymmetricBinaryMatrix Identity(int n);

  int size() const { return n_; }
  // 1-based.
  bool at(int i, int j) const { return (rows_[i - 1] >> (j - 1)) & 1u; }
  std::uint32_t row(int i) const { return rows_[i - 1]; }

  // Rows as space-separated bits, one per line.
  std::string ToString() const;

  friend bool operator==(const SymmetricBinaryMatrix&,
                         const SymmetricBinaryMatrix&) = default;

 private:
  int n_;
  std::array<std::uint32_t, kMaxGroundSize> rows_{};
};

// Whether the principal submatrix on `w` is invertible over GF(2). The empty
// submatrix counts as invertible.
bool Gf2Invertible(const SymmetricBinaryMatrix& matrix, SubsetMask w);

// The delta-matroid D(A): all W with A[W] invertible.
SetSystem MatroidOfMatrix(const SymmetricBinaryMatrix& matrix);

}  // namespace dmat

#endif  // DELTAMATROID_GF2_H_
