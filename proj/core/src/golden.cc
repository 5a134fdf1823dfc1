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

#include "deltamatroid/golden.h"

#include <algorithm>
#include <initializer_list>
#include <sstream>

#include "deltamatroid/binary.h"
#include "deltamatroid/text_format.h"
#include "deltamatroid/transforms.h"

namespace dmat {
namespace {

SetSystem Fam(int n, std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<SubsetMask> members;
  for (const auto& s : sets) members.push_back(SubsetMask::Of(s));
  return SetSystem::Make(n, members);
}

std::vector<GoldenCase> BuildCases() {
  // Expected families come from applying the definitions by hand (checked
  // with an independent script), not from this library.
  return {
      {"example_matrix", "D(A) for the 4x4 example adjacency matrix", [] { return MatroidOfMatrix(ExampleMatrix()); }, Fam(4, {{}, {1,2}, {2,3}, {2,4}, {3,4}, {1,2,3,4}}), true, std::nullopt, "worked example: invertible principal submatrices"},
      {"F_12", "slide 1 over 2 in the example family", [] { return HandleSlide(ExampleFamily(), 1, 2); }, Fam(4, {{}, {1,2}, {1,3}, {2,3}, {1,4}, {2,4}, {3,4}, {1,2,3,4}}), true, Fam(4, {{}, {1,2}, {1,3}, {2,3}, {1,4}, {2,4}, {1,2,3,4}}), "worked example; printed listing omits {3,4}, which the definition keeps"},
      {"F_21", "slide 2 over 1 in the example family (fixed point)", [] { return HandleSlide(ExampleFamily(), 2, 1); }, Fam(4, {{}, {1,2}, {2,3}, {2,4}, {3,4}, {1,2,3,4}}), true, std::nullopt, "worked example"},
      {"F_23", "slide 2 over 3 in the example family", [] { return HandleSlide(ExampleFamily(), 2, 3); }, Fam(4, {{}, {1,2}, {2,3}, {3,4}, {1,2,3,4}}), true, std::nullopt, "worked example"},
      {"F_32", "slide 3 over 2 in the example family", [] { return HandleSlide(ExampleFamily(), 3, 2); }, Fam(4, {{}, {1,2}, {1,3}, {2,3}, {2,4}, {1,2,3,4}}), true, std::nullopt, "worked example"},
      {"(S1)_12", "(S1)_12", [] { return HandleSlide(ExcludedMinor(1), 1, 2); }, Fam(3, {{}, {1,2}, {2,3}, {1,2,3}}), false, std::nullopt, "minimal non-binary slide"},
      {"(S2)_12", "(S2)_12", [] { return HandleSlide(ExcludedMinor(2), 1, 2); }, Fam(3, {{}, {2}, {1,2}, {3}, {2,3}}), false, std::nullopt, "minimal non-binary slide"},
      {"(S3)_23", "(S3)_23", [] { return HandleSlide(ExcludedMinor(3), 2, 3); }, Fam(3, {{}, {3}, {1,3}, {1,2,3}}), false, std::nullopt, "minimal non-binary slide"},
      {"(S4)_12", "(S4)_12", [] { return HandleSlide(ExcludedMinor(4), 1, 2); }, Fam(4, {{}, {1,2}, {2,3}, {2,4}, {3,4}}), false, std::nullopt, "minimal non-binary slide; S4 is proved although the statement's list omits it"},
      {"(S5)_13", "(S5)_13", [] { return HandleSlide(ExcludedMinor(5), 1, 3); }, Fam(4, {{}, {2,3}, {3,4}, {1,2,3,4}}), false, std::nullopt, "minimal non-binary slide"},
      {"(S1*{1})_12", "(S1*{1})_12", [] { return HandleSlide(Twist(ExcludedMinor(1), SubsetMask::Of({1})), 1, 2); }, Fam(3, {{2}, {3}, {1,3}, {2,3}, {1,2,3}}), false, std::nullopt, "case analysis, S1 twists"},
      {"(S1*{2})_12", "(S1*{2})_12", [] { return HandleSlide(Twist(ExcludedMinor(1), SubsetMask::Of({2})), 1, 2); }, Fam(3, {{2}, {3}, {1,3}, {1,2,3}}), false, std::nullopt, "case analysis, S1 twists"},
      {"(S1*{1,3})_12", "(S1*{1,3})_12", [] { return HandleSlide(Twist(ExcludedMinor(1), SubsetMask::Of({1,3})), 1, 2); }, Fam(3, {{}, {1}, {2}, {1,2}, {2,3}}), false, std::nullopt, "case analysis, S1 twists"},
      {"(S1*{2,3})_12", "(S1*{2,3})_12", [] { return HandleSlide(Twist(ExcludedMinor(1), SubsetMask::Of({2,3})), 1, 2); }, Fam(3, {{}, {1}, {1,2}, {2,3}}), false, std::nullopt, "case analysis, S1 twists"},
      {"(S1*{1,2})_21", "(S1*{1,2})_21", [] { return HandleSlide(Twist(ExcludedMinor(1), SubsetMask::Of({1,2})), 2, 1); }, Fam(3, {{}, {1,2}, {3}, {1,3}}), false, std::nullopt, "case analysis, S1 twists"},
      {"(S1*{3})_12", "(S1*{3})_12", [] { return HandleSlide(Twist(ExcludedMinor(1), SubsetMask::Of({3})), 1, 2); }, Fam(3, {{2}, {1,2}, {3}, {1,2,3}}), false, std::nullopt, "case analysis, S1 twists"},
      {"(S1*{1,2,3})_21", "(S1*{1,2,3})_21", [] { return HandleSlide(Twist(ExcludedMinor(1), SubsetMask::Of({1,2,3})), 2, 1); }, Fam(3, {{}, {1}, {3}, {1,2,3}}), false, std::nullopt, "case analysis, S1 twists"},
      {"(S2*{1})_12", "(S2*{1})_12", [] { return HandleSlide(Twist(ExcludedMinor(2), SubsetMask::Of({1})), 1, 2); }, Fam(3, {{}, {2}, {1,2}, {3}, {1,3}, {1,2,3}}), true, std::nullopt, "twist that survives the slide: a delta-matroid"},
      {"(S2)_12 [case analysis]", "(S2)_12", [] { return HandleSlide(ExcludedMinor(2), 1, 2); }, Fam(3, {{}, {2}, {1,2}, {3}, {2,3}}), false, Fam(3, {{}, {1}, {2}, {1,2}, {3}, {2,3}}), "case analysis, S2 twists; printed listing adds {1}, which the definition removes"},
      {"(S2*{1})_23", "(S2*{1})_23", [] { return HandleSlide(Twist(ExcludedMinor(2), SubsetMask::Of({1})), 2, 3); }, Fam(3, {{}, {1}, {3}, {1,3}, {1,2,3}}), false, std::nullopt, "case analysis, S2 twists"},
      {"(S2*{2})_13", "(S2*{2})_13", [] { return HandleSlide(Twist(ExcludedMinor(2), SubsetMask::Of({2})), 1, 3); }, Fam(3, {{}, {2}, {3}, {2,3}, {1,2,3}}), false, std::nullopt, "case analysis, S2 twists"},
      {"(S2*{3})_12", "(S2*{3})_12", [] { return HandleSlide(Twist(ExcludedMinor(2), SubsetMask::Of({3})), 1, 2); }, Fam(3, {{}, {2}, {3}, {2,3}, {1,2,3}}), false, std::nullopt, "case analysis, S2 twists"},
      {"(S2*{1,2})_21", "(S2*{1,2})_21", [] { return HandleSlide(Twist(ExcludedMinor(2), SubsetMask::Of({1,2})), 2, 1); }, Fam(3, {{}, {1}, {1,2}, {1,3}, {1,2,3}}), false, std::nullopt, "case analysis, S2 twists"},
      {"((S2*{1,3})_23)_12", "((S2*{1,3})_23)_12", [] { return HandleSlide(HandleSlide(Twist(ExcludedMinor(2), SubsetMask::Of({1,3})), 2, 3), 1, 2); }, Fam(3, {{}, {2}, {3}, {2,3}, {1,2,3}}), false, std::nullopt, "case analysis, S2 twists; two-slide escape"},
      {"((S2*{2,3})_13)_12", "((S2*{2,3})_13)_12", [] { return HandleSlide(HandleSlide(Twist(ExcludedMinor(2), SubsetMask::Of({2,3})), 1, 3), 1, 2); }, Fam(3, {{}, {2}, {3}, {2,3}, {1,2,3}}), false, std::nullopt, "case analysis, S2 twists; two-slide escape"},
      {"(S2*{1,2,3})_21", "(S2*{1,2,3})_21", [] { return HandleSlide(Twist(ExcludedMinor(2), SubsetMask::Of({1,2,3})), 2, 1); }, Fam(3, {{1}, {1,2}, {3}, {1,3}, {1,2,3}}), false, std::nullopt, "case analysis, S2 twists"},
      {"S2 all slides (1,2)", "(S2)_12", [] { return HandleSlide(ExcludedMinor(2), 1, 2); }, Fam(3, {{}, {2}, {1,2}, {3}, {2,3}}), false, std::nullopt, "every slide of S2 fails"},
      {"S2 all slides (1,3)", "(S2)_13", [] { return HandleSlide(ExcludedMinor(2), 1, 3); }, Fam(3, {{}, {2}, {3}, {1,3}, {2,3}}), false, std::nullopt, "every slide of S2 fails"},
      {"S2 all slides (2,1)", "(S2)_21", [] { return HandleSlide(ExcludedMinor(2), 2, 1); }, Fam(3, {{}, {1}, {1,2}, {3}, {1,3}}), false, std::nullopt, "every slide of S2 fails"},
      {"S2 all slides (2,3)", "(S2)_23", [] { return HandleSlide(ExcludedMinor(2), 2, 3); }, Fam(3, {{}, {1}, {3}, {1,3}, {2,3}}), false, std::nullopt, "every slide of S2 fails"},
      {"S2 all slides (3,1)", "(S2)_31", [] { return HandleSlide(ExcludedMinor(2), 3, 1); }, Fam(3, {{}, {1}, {2}, {1,2}, {1,3}}), false, std::nullopt, "every slide of S2 fails"},
      {"S2 all slides (3,2)", "(S2)_32", [] { return HandleSlide(ExcludedMinor(2), 3, 2); }, Fam(3, {{}, {1}, {2}, {1,2}, {2,3}}), false, std::nullopt, "every slide of S2 fails"},
      {"(S3*{2})_12", "(S3*{2})_12", [] { return HandleSlide(Twist(ExcludedMinor(3), SubsetMask::Of({2})), 1, 2); }, Fam(3, {{}, {2}, {2,3}, {1,2,3}}), false, std::nullopt, "case analysis, S3 twists"},
      {"(S3*{3})_13", "(S3*{3})_13", [] { return HandleSlide(Twist(ExcludedMinor(3), SubsetMask::Of({3})), 1, 3); }, Fam(3, {{}, {3}, {2,3}, {1,2,3}}), false, std::nullopt, "case analysis, S3 twists"},
      {"(S3*{1,2})_13", "(S3*{1,2})_13", [] { return HandleSlide(Twist(ExcludedMinor(3), SubsetMask::Of({1,2})), 1, 3); }, Fam(3, {{}, {3}, {2,3}, {1,2,3}}), false, std::nullopt, "case analysis, S3 twists"},
      {"(S3*{1,3})_12", "(S3*{1,3})_12", [] { return HandleSlide(Twist(ExcludedMinor(3), SubsetMask::Of({1,3})), 1, 2); }, Fam(3, {{}, {2}, {2,3}, {1,2,3}}), false, std::nullopt, "case analysis, S3 twists"},
      {"(S3*{1})_23", "(S3*{1})_23", [] { return HandleSlide(Twist(ExcludedMinor(3), SubsetMask::Of({1})), 2, 3); }, Fam(3, {{1}, {3}, {1,3}, {2,3}}), false, std::nullopt, "case analysis, S3 twists"},
      {"(S3*{2,3})_32", "(S3*{2,3})_32", [] { return HandleSlide(Twist(ExcludedMinor(3), SubsetMask::Of({2,3})), 3, 2); }, Fam(3, {{1}, {2}, {1,2}, {2,3}}), false, std::nullopt, "case analysis, S3 twists"},
      {"(S3*{1,2,3})_23", "(S3*{1,2,3})_23", [] { return HandleSlide(Twist(ExcludedMinor(3), SubsetMask::Of({1,2,3})), 2, 3); }, Fam(3, {{}, {3}, {1,3}, {1,2,3}}), false, Fam(3, {{}, {2}, {1,2}, {1,2,3}}), "case analysis, S3 twists; printed as (S3)_23*{1,2,3}, but the twist identity for a,b in A reverses the slide"},
      {"(S3*{1,2,3})_32", "(S3*{1,2,3})_32", [] { return HandleSlide(Twist(ExcludedMinor(3), SubsetMask::Of({1,2,3})), 3, 2); }, Fam(3, {{}, {2}, {1,2}, {1,2,3}}), false, std::nullopt, "case analysis, S3 twists; reversed slide equals (S3)_23*{1,2,3}"},
      {"S4 all slides (1,2)", "(S4)_12", [] { return HandleSlide(ExcludedMinor(4), 1, 2); }, Fam(4, {{}, {1,2}, {2,3}, {2,4}, {3,4}}), false, std::nullopt, "every slide of S4 fails"},
      {"S4 all slides (1,3)", "(S4)_13", [] { return HandleSlide(ExcludedMinor(4), 1, 3); }, Fam(4, {{}, {1,3}, {2,3}, {2,4}, {3,4}}), false, std::nullopt, "every slide of S4 fails"},
      {"S4 all slides (1,4)", "(S4)_14", [] { return HandleSlide(ExcludedMinor(4), 1, 4); }, Fam(4, {{}, {2,3}, {1,4}, {2,4}, {3,4}}), false, std::nullopt, "every slide of S4 fails"},
      {"S4 all slides (2,1)", "(S4)_21", [] { return HandleSlide(ExcludedMinor(4), 2, 1); }, Fam(4, {{}, {1,2}, {1,3}, {1,4}, {3,4}}), false, std::nullopt, "every slide of S4 fails"},
      {"S4 all slides (2,3)", "(S4)_23", [] { return HandleSlide(ExcludedMinor(4), 2, 3); }, Fam(4, {{}, {1,3}, {2,3}, {1,4}, {3,4}}), false, std::nullopt, "every slide of S4 fails"},
      {"S4 all slides (2,4)", "(S4)_24", [] { return HandleSlide(ExcludedMinor(4), 2, 4); }, Fam(4, {{}, {1,3}, {1,4}, {2,4}, {3,4}}), false, std::nullopt, "every slide of S4 fails"},
      {"S4 all slides (3,1)", "(S4)_31", [] { return HandleSlide(ExcludedMinor(4), 3, 1); }, Fam(4, {{}, {1,2}, {1,3}, {1,4}, {2,4}}), false, std::nullopt, "every slide of S4 fails"},
      {"S4 all slides (3,2)", "(S4)_32", [] { return HandleSlide(ExcludedMinor(4), 3, 2); }, Fam(4, {{}, {1,2}, {2,3}, {1,4}, {2,4}}), false, std::nullopt, "every slide of S4 fails"},
      {"S4 all slides (3,4)", "(S4)_34", [] { return HandleSlide(ExcludedMinor(4), 3, 4); }, Fam(4, {{}, {1,2}, {1,4}, {2,4}, {3,4}}), false, std::nullopt, "every slide of S4 fails"},
      {"S4 all slides (4,1)", "(S4)_41", [] { return HandleSlide(ExcludedMinor(4), 4, 1); }, Fam(4, {{}, {1,2}, {1,3}, {2,3}, {1,4}}), false, std::nullopt, "every slide of S4 fails"},
      {"S4 all slides (4,2)", "(S4)_42", [] { return HandleSlide(ExcludedMinor(4), 4, 2); }, Fam(4, {{}, {1,2}, {1,3}, {2,3}, {2,4}}), false, std::nullopt, "every slide of S4 fails"},
      {"S4 all slides (4,3)", "(S4)_43", [] { return HandleSlide(ExcludedMinor(4), 4, 3); }, Fam(4, {{}, {1,2}, {1,3}, {2,3}, {3,4}}), false, std::nullopt, "every slide of S4 fails"},
      {"(S5)_24", "(S5)_24", [] { return HandleSlide(ExcludedMinor(5), 2, 4); }, Fam(4, {{}, {1,4}, {3,4}, {1,2,3,4}}), false, std::nullopt, "case analysis, S5 twists"},
      {"(S5*{1,2})_14", "(S5*{1,2})_14", [] { return HandleSlide(Twist(ExcludedMinor(5), SubsetMask::Of({1,2})), 1, 4); }, Fam(4, {{}, {2,4}, {3,4}, {1,2,3,4}}), false, std::nullopt, "case analysis, S5 twists"},
      {"(S5*{3,4})_14", "(S5*{3,4})_14", [] { return HandleSlide(Twist(ExcludedMinor(5), SubsetMask::Of({3,4})), 1, 4); }, Fam(4, {{}, {2,4}, {3,4}, {1,2,3,4}}), false, std::nullopt, "case analysis, S5 twists"},
      {"(S5*{1,4})_12", "(S5*{1,4})_12", [] { return HandleSlide(Twist(ExcludedMinor(5), SubsetMask::Of({1,4})), 1, 2); }, Fam(4, {{}, {2,3}, {2,4}, {1,2,3,4}}), false, std::nullopt, "case analysis, S5 twists; printed with ground set {1,2,3}, family as computed"},
      {"(S5*{2,3})_12", "(S5*{2,3})_12", [] { return HandleSlide(Twist(ExcludedMinor(5), SubsetMask::Of({2,3})), 1, 2); }, Fam(4, {{}, {2,3}, {2,4}, {1,2,3,4}}), false, std::nullopt, "case analysis, S5 twists"},
      {"(S4*{3,4})_12", "(S4*{3,4})_12", [] { return HandleSlide(Twist(ExcludedMinor(4), SubsetMask::Of({3,4})), 1, 2); }, Fam(4, {{}, {2,3}, {2,4}, {3,4}, {1,2,3,4}}), false, std::nullopt, "twist identity, A avoids a,b: equals (S4)_12*{3,4}"},
      {"(S5*{1,3})_31", "(S5*{1,3})_31", [] { return HandleSlide(Twist(ExcludedMinor(5), SubsetMask::Of({1,3})), 3, 1); }, Fam(4, {{1,2}, {1,3}, {1,4}, {2,4}}), false, std::nullopt, "twist identity, A contains a,b: equals (S5)_13*{1,3}"},
  };
}

}  // namespace

SymmetricBinaryMatrix ExampleMatrix() {
  const std::uint32_t rows[] = {0b0010, 0b1101, 0b1010, 0b0110};
  return SymmetricBinaryMatrix::FromRows(rows);
}

SetSystem ExampleFamily() {
  return Fam(4, {{}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {1, 2, 3, 4}});
}

const std::vector<GoldenCase>& GoldenCases() {
  static const std::vector<GoldenCase> cases = BuildCases();
  return cases;
}

bool GoldenResult::pass() const {
  if (!family_ok || is_dm != golden->expected_dm) return false;
  return is_dm || violation_replays;
}

std::size_t GoldenReport::passed() const {
  return std::count_if(results.begin(), results.end(),
                       [](const GoldenResult& r) { return r.pass(); });
}

std::size_t GoldenReport::flagged() const {
  return std::count_if(results.begin(), results.end(),
                       [](const GoldenResult& r) { return r.flagged(); });
}

GoldenReport RunGoldenSuite() {
  GoldenReport report;
  for (const GoldenCase& c : GoldenCases()) {
    SetSystem computed = c.compute();
    GoldenResult r{&c, computed, computed == c.expected, false, std::nullopt,
                   false};
    r.violation = FindAxiomViolation(computed);
    r.is_dm = !r.violation.has_value();
    r.violation_replays = r.violation && ViolationHolds(computed, *r.violation);
    report.results.push_back(std::move(r));
  }
  return report;
}

std::string FormatGoldenReport(const GoldenReport& report) {
  std::ostringstream out;
  for (const GoldenResult& r : report.results) {
    const GoldenCase& c = *r.golden;
    out << (r.pass() ? "PASS " : "FAIL ") << c.name
        << (r.flagged() ? "  [printed listing differs]" : "") << '\n';
    out << "  input:    " << c.input << '\n';
    out << "  computed: " << FormatFamilyInline(r.computed) << '\n';
    if (!r.family_ok) {
      out << "  expected: " << FormatFamilyInline(c.expected) << '\n';
    }
    if (c.printed_listing) {
      out << "  printed:  " << FormatFamilyInline(*c.printed_listing) << '\n';
    }
    out << "  delta-matroid: " << (r.is_dm ? "yes" : "no")
        << " (expected " << (c.expected_dm ? "yes" : "no") << ")\n";
    if (r.violation) {
      out << "  violation: F1=" << r.violation->f1.ToString()
          << " F2=" << r.violation->f2.ToString() << " x=" << r.violation->x
          << (r.violation_replays ? " (replays)" : " (DOES NOT REPLAY)")
          << '\n';
    }
    out << "  note: " << c.provenance << '\n';
  }
  out << report.passed() << "/" << report.results.size() << " passed, "
      << report.flagged() << " flagged\n";
  return out.str();
}

}  // namespace dmat
