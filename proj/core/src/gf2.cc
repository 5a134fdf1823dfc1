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

#include "deltamatroid/gf2.h"

#include <string>
#include <utility>

#include "deltamatroid/error.h"

namespace dmat {
namespace {

void CheckDimension(int n) {
  if (n < 1 || n > kMaxGroundSize) {
    throw Error(ErrorCode::kOutOfRange,
                "matrix dimension " + std::to_string(n) + " outside 1.." +
                    std::to_string(kMaxGroundSize));
  }
}

}  // namespace

SymmetricBinaryMatrix::SymmetricBinaryMatrix(int n) : n_(n) {
  CheckDimension(n);
}

SymmetricBinaryMatrix SymmetricBinaryMatrix::FromRows(
    std::span<const std::uint32_t> rows) {
  const int n = static_cast<int>(rows.size());
  SymmetricBinaryMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (!SubsetMask(rows[i]).FitsIn(n)) {
      throw Error(ErrorCode::kOutOfRange,
                  "row " + std::to_string(i + 1) + " has bits past column " +
                      std::to_string(n));
    }
    m.rows_[i] = rows[i];
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (((rows[i] >> j) & 1u) != ((rows[j] >> i) & 1u)) {
        throw Error(ErrorCode::kSizeMismatch,
                    "matrix is not symmetric at (" + std::to_string(i + 1) +
                        "," + std::to_string(j + 1) + ")");
      }
    }
  }
  return m;
}

SymmetricBinaryMatrix SymmetricBinaryMatrix::FromEncoding(int n,
                                                          std::uint64_t code) {
  SymmetricBinaryMatrix m(n);
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j, ++bit) {
      if ((code >> bit) & 1u) {
        m.rows_[i] |= 1u << j;
        m.rows_[j] |= 1u << i;
      }
    }
  }
  return m;
}

std::uint64_t SymmetricBinaryMatrix::Encoding() const {
  std::uint64_t code = 0;
  int bit = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i; j < n_; ++j, ++bit) {
      if ((rows_[i] >> j) & 1u) code |= std::uint64_t{1} << bit;
    }
  }
  return code;
}

SymmetricBinaryMatrix SymmetricBinaryMatrix::Identity(int n) {
  SymmetricBinaryMatrix m(n);
  for (int i = 0; i < n; ++i) m.rows_[i] = 1u << i;
  return m;
}

std::string SymmetricBinaryMatrix::ToString() const {
  std::string out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (j > 1) out += ' ';
      out += at(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

bool Gf2Invertible(const SymmetricBinaryMatrix& matrix, SubsetMask w) {
  if (!w.FitsIn(matrix.size())) {
    throw Error(ErrorCode::kOutOfRange,
                "subset " + w.ToString() + " exceeds matrix dimension " +
                    std::to_string(matrix.size()));
  }
  // Restrict each selected row to the selected columns; the rows keep their
  // original column positions, which is harmless for rank.
  std::array<std::uint32_t, kMaxGroundSize> rows{};
  int k = 0;
  for (std::uint32_t b = w.bits(); b != 0; b &= b - 1) {
    rows[k++] = matrix.row(std::countr_zero(b) + 1) & w.bits();
  }
  // Gaussian elimination, pivoting on the lowest remaining column.
  int rank = 0;
  for (std::uint32_t cols = w.bits(); cols != 0; cols &= cols - 1) {
    const std::uint32_t pivot_bit = cols & (~cols + 1);
    int pivot = -1;
    for (int r = rank; r < k; ++r) {
      if (rows[r] & pivot_bit) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return false;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < k; ++r) {
      if (r != rank && (rows[r] & pivot_bit)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank == k;
}

SetSystem MatroidOfMatrix(const SymmetricBinaryMatrix& matrix) {
  const int n = matrix.size();
  SetSystemBuilder builder(n);
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t w = 0; w < limit; ++w) {
    if (Gf2Invertible(matrix, SubsetMask(w))) builder.Set(SubsetMask(w));
  }
  return std::move(builder).Build();
}

}  // namespace dmat
