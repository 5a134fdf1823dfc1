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

#include "deltamatroid/text_format.h"

#include <cctype>
#include <charconv>
#include <string>

#include "deltamatroid/error.h"

namespace dmat {
namespace {

// Cursor over one line of input with 1-based position tracking.
class LineReader {
 public:
  LineReader(std::string_view line, int line_number)
      : line_(line), line_number_(line_number) {}

  void SkipSpace() {
    while (pos_ < line_.size() &&
           std::isspace(static_cast<unsigned char>(line_[pos_]))) {
      ++pos_;
    }
  }
  bool AtEnd() {
    SkipSpace();
    return pos_ >= line_.size();
  }
  bool Consume(char c) {
    SkipSpace();
    if (pos_ < line_.size() && line_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void Expect(char c) {
    if (!Consume(c)) Fail(std::string("expected '") + c + "'");
  }
  int ReadInt() {
    SkipSpace();
    int value = 0;
    const char* begin = line_.data() + pos_;
    const char* end = line_.data() + line_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) Fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }
  bool ConsumeWord(std::string_view word) {
    SkipSpace();
    if (line_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  int column() const { return static_cast<int>(pos_) + 1; }
  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(line_number_, column(), message);
  }

 private:
  std::string_view line_;
  int line_number_;
  std::size_t pos_ = 0;
};

// Splits on '\n', dropping a trailing '\r'.
std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

bool IsSkippable(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Parses "{...}" with elements strictly increasing and at most `limit`.
SubsetMask ReadSubset(LineReader& reader, int limit) {
  reader.Expect('{');
  std::uint32_t bits = 0;
  if (reader.Consume('}')) return SubsetMask(bits);
  int previous = 0;
  while (true) {
    const int column = reader.column();
    const int e = reader.ReadInt();
    if (e < 1) reader.Fail("elements are 1-based");
    if (e > limit) {
      throw Error(ErrorCode::kOutOfRange,
                  "element " + std::to_string(e) + " at column " +
                      std::to_string(column) + " exceeds ground set of size " +
                      std::to_string(limit));
    }
    if (e <= previous) reader.Fail("elements must be strictly increasing");
    bits |= 1u << (e - 1);
    previous = e;
    if (reader.Consume('}')) break;
    reader.Expect(',');
  }
  return SubsetMask(bits);
}

}  // namespace

SetSystem ParseSystem(std::string_view text) {
  const std::vector<std::string_view> lines = SplitLines(text);
  std::size_t i = 0;
  while (i < lines.size() && IsSkippable(lines[i])) ++i;
  if (i == lines.size()) throw ParseError(1, 1, "missing 'ground <n>' header");

  LineReader header(lines[i], static_cast<int>(i) + 1);
  if (!header.ConsumeWord("ground")) header.Fail("expected 'ground <n>'");
  const int n = header.ReadInt();
  if (n < 1 || n > kMaxGroundSize) {
    header.Fail("ground set size must be in 1.." +
                std::to_string(kMaxGroundSize));
  }
  if (!header.AtEnd()) header.Fail("unexpected text after ground size");

  std::vector<SubsetMask> members;
  for (++i; i < lines.size(); ++i) {
    if (IsSkippable(lines[i])) continue;
    LineReader reader(lines[i], static_cast<int>(i) + 1);
    members.push_back(ReadSubset(reader, n));
    if (!reader.AtEnd()) reader.Fail("unexpected text after '}'");
  }
  if (members.empty()) {
    throw Error(ErrorCode::kEmptyFamily, "document lists no feasible sets");
  }
  return SetSystem::Make(n, members);
}

std::string FormatSystem(const SetSystem& system) {
  std::string out = "ground " + std::to_string(system.ground_size()) + "\n";
  system.ForEachMember([&](SubsetMask m) {
    out += m.ToString();
    out += '\n';
  });
  return out;
}

std::string FormatFamilyInline(const SetSystem& system) {
  std::string out;
  system.ForEachMember([&](SubsetMask m) {
    if (!out.empty()) out += ' ';
    out += m.ToString();
  });
  return out;
}

SubsetMask ParseSubset(std::string_view text) {
  LineReader reader(text, 1);
  const SubsetMask mask = ReadSubset(reader, kMaxGroundSize);
  if (!reader.AtEnd()) reader.Fail("unexpected text after '}'");
  return mask;
}

SymmetricBinaryMatrix ParseMatrix(std::string_view text) {
  std::vector<std::uint32_t> rows;
  std::vector<int> row_lines;
  int expected = -1;
  const std::vector<std::string_view> lines = SplitLines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (IsSkippable(lines[i])) continue;
    LineReader reader(lines[i], static_cast<int>(i) + 1);
    std::uint32_t row = 0;
    int count = 0;
    while (!reader.AtEnd()) {
      const int bit = reader.ReadInt();
      if (bit != 0 && bit != 1) reader.Fail("matrix entries must be 0 or 1");
      if (count >= kMaxGroundSize) reader.Fail("row is too long");
      if (bit) row |= 1u << count;
      ++count;
    }
    if (expected < 0) expected = count;
    if (count != expected) {
      reader.Fail("row has " + std::to_string(count) + " entries, expected " +
                  std::to_string(expected));
    }
    rows.push_back(row);
    row_lines.push_back(static_cast<int>(i) + 1);
  }
  if (rows.empty()) throw ParseError(1, 1, "matrix is empty");
  const int n = static_cast<int>(rows.size());
  if (n != expected) {
    throw ParseError(row_lines.back(), 1,
                     "matrix has " + std::to_string(n) + " rows and " +
                         std::to_string(expected) + " columns");
  }
  for (int r = 0; r < n; ++r) {
    for (int c = r + 1; c < n; ++c) {
      if (((rows[r] >> c) & 1u) != ((rows[c] >> r) & 1u)) {
        throw ParseError(row_lines[c], 2 * r + 1,
                         "matrix is not symmetric at (" +
                             std::to_string(r + 1) + "," +
                             std::to_string(c + 1) + ")");
      }
    }
  }
  return SymmetricBinaryMatrix::FromRows(rows);
}

std::vector<SlideInstruction> ParseSlideSequence(std::string_view text) {
  std::vector<SlideInstruction> out;
  LineReader reader(text, 1);
  if (reader.AtEnd()) return out;
  while (true) {
    SlideInstruction step;
    step.a = reader.ReadInt();
    reader.Expect(',');
    step.b = reader.ReadInt();
    out.push_back(step);
    if (reader.AtEnd()) break;
    reader.Expect(';');
  }
  return out;
}

std::string FormatSlideSequence(const std::vector<SlideInstruction>& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) out += ';';
    out += std::to_string(seq[i].a) + "," + std::to_string(seq[i].b);
  }
  return out;
}

}  // namespace dmat
