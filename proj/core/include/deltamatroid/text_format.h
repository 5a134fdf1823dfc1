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

#ifndef DELTAMATROID_TEXT_FORMAT_H_
#define DELTAMATROID_TEXT_FORMAT_H_

#include <string>
#include <string_view>
#include <vector>

#include "deltamatroid/gf2.h"
#include "deltamatroid/set_system.h"
#include "deltamatroid/transforms.h"

namespace dmat {

// System document:
//
//   ground 3
//   {}
//   {1,2}
//   {1,2,3}
//
// One feasible set per line, elements strictly increasing. Blank lines and
// lines starting with '#' are skipped. Duplicate sets collapse. Throws
// ParseError (with position), or kOutOfRange / kEmptyFamily.
SetSystem ParseSystem(std::string_view text);

// Canonical document: sets in ascending mask order, trailing newline.
std::string FormatSystem(const SetSystem& system);

// "{}" or "{1,3}". Whitespace around tokens is allowed.
SubsetMask ParseSubset(std::string_view text);

// n lines of n whitespace-separated bits. Asymmetric or ragged input is a
// ParseError.
SymmetricBinaryMatrix ParseMatrix(std::string_view text);

// "a1,b1;a2,b2". An empty string is the empty sequence.
std::vector<SlideInstruction> ParseSlideSequence(std::string_view text);
std::string FormatSlideSequence(const std::vector<SlideInstruction>& seq);

// Feasible sets on one line, space-separated: "{} {1,2} {1,2,3}".
std::string FormatFamilyInline(const SetSystem& system);

}  // namespace dmat

#endif  // DELTAMATROID_TEXT_FORMAT_H_
