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

#include "deltamatroid/census.h"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "deltamatroid/binary.h"
#include "deltamatroid/error.h"
#include "deltamatroid/gf2.h"
#include "deltamatroid/isomorphism.h"
#include "deltamatroid/text_format.h"

namespace dmat {
namespace {

std::vector<SlideInstruction> AllSlides(int n) {
  std::vector<SlideInstruction> out;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (a != b) out.push_back({a, b});
    }
  }
  return out;
}

// Depth-first over sequences of exactly `remaining` more slides.
bool SearchExact(const SetSystem& current,
                 const std::vector<SlideInstruction>& slides, int remaining,
                 std::vector<SlideInstruction>& path,
                 std::optional<SlideWitness>& found) {
  for (const SlideInstruction& s : slides) {
    SetSystem next = HandleSlide(current, s.a, s.b);
    path.push_back(s);
    if (remaining == 1) {
      if (!IsDeltaMatroid(next)) {
        found = SlideWitness{path, std::move(next), false};
        return true;
      }
    } else if (SearchExact(next, slides, remaining - 1, path, found)) {
      return true;
    }
    path.pop_back();
  }
  return false;
}

int ResolveWorkers(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 16u));
}

CensusRecord Classify(SetSystem system, int escape_depth) {
  CensusRecord record{system, CanonicalForm(system), false, std::nullopt,
                      std::nullopt};
  record.is_dm = IsDeltaMatroid(system);
  if (record.is_dm) {
    record.is_binary = IsBinaryBySearch(system).is_binary;
    record.escape = FindEscape(system, escape_depth);
  }
  return record;
}

void CheckCensusSize(int n) {
  if (n < 1 || n > kMaxCensusGroundSize) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "census supports ground sets of size 1.." +
                    std::to_string(kMaxCensusGroundSize));
  }
}

std::string Describe(const SetSystem& s) {
  return "ground " + std::to_string(s.ground_size()) + " [" +
         FormatFamilyInline(s) + "]";
}

// Systems equal, or both sides refused with the same error code.
template <typename Lhs, typename Rhs>
bool SameOutcome(Lhs lhs, Rhs rhs) {
  std::optional<SetSystem> left;
  std::optional<SetSystem> right;
  std::optional<ErrorCode> left_error;
  std::optional<ErrorCode> right_error;
  try {
    left = lhs();
  } catch (const Error& e) {
    left_error = e.code();
  }
  try {
    right = rhs();
  } catch (const Error& e) {
    right_error = e.code();
  }
  if (left_error || right_error) return left_error == right_error;
  return *left == *right;
}

void Record(LawTally& tally, bool ok, const std::string& detail) {
  ++tally.checked;
  if (ok) return;
  ++tally.failed;
  if (tally.failures.size() < 8) tally.failures.push_back(detail);
}

// Label of element x after removing e from the ground set.
int Shift(int x, int e) { return x > e ? x - 1 : x; }

void CheckMinorLaws(const SetSystem& s, int a, int b, int e, LawTally& del,
                    LawTally& con) {
  const std::string where = Describe(s) + " a=" + std::to_string(a) +
                            " b=" + std::to_string(b) +
                            " e=" + std::to_string(e);
  Record(del,
         SameOutcome([&] { return Delete(HandleSlide(s, a, b), e); },
                     [&] {
                       return HandleSlide(Delete(s, e), Shift(a, e),
                                          Shift(b, e));
                     }),
         where);
  Record(con,
         SameOutcome([&] { return Contract(HandleSlide(s, a, b), e); },
                     [&] {
                       return HandleSlide(Contract(s, e), Shift(a, e),
                                          Shift(b, e));
                     }),
         where);
}

void CheckTwistLaws(const SetSystem& s, int a, int b, SubsetMask twist,
                    LawTally& disjoint, LawTally& containing) {
  const std::string where = Describe(s) + " a=" + std::to_string(a) +
                            " b=" + std::to_string(b) +
                            " A=" + twist.ToString();
  const bool has_a = twist.contains(a);
  const bool has_b = twist.contains(b);
  if (!has_a && !has_b) {
    Record(disjoint,
           HandleSlide(Twist(s, twist), a, b) ==
               Twist(HandleSlide(s, a, b), twist),
           where);
  } else if (has_a && has_b) {
    Record(containing,
           HandleSlide(Twist(s, twist), b, a) ==
               Twist(HandleSlide(s, a, b), twist),
           where);
  }
}

}  // namespace

std::optional<SlideWitness> FindEscape(const SetSystem& system,
                                       int max_depth) {
  if (system.ground_size() < 2) return std::nullopt;
  const std::vector<SlideInstruction> slides = AllSlides(system.ground_size());
  for (int depth = 1; depth <= max_depth; ++depth) {
    std::vector<SlideInstruction> path;
    std::optional<SlideWitness> found;
    if (SearchExact(system, slides, depth, path, found)) return found;
  }
  return std::nullopt;
}

std::vector<CensusRecord> EnumerateDeltaMatroids(int n,
                                                 const CensusOptions& options) {
  CheckCensusSize(n);
  const std::uint64_t total = (std::uint64_t{1} << (1u << n)) - 1;
  // Warm the matrix table before the workers race for it.
  IsBinaryBySearch(SetSystem::FromWord(n, 1));

  const int workers =
      static_cast<int>(std::min<std::uint64_t>(ResolveWorkers(options.workers),
                                               total));
  std::vector<std::vector<CensusRecord>> parts(workers);
  {
    std::vector<std::jthread> threads;
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        const std::uint64_t begin = 1 + total * w / workers;
        const std::uint64_t end = 1 + total * (w + 1) / workers;
        std::vector<CensusRecord>& out = parts[w];
        out.reserve(end - begin);
        for (std::uint64_t word = begin; word < end; ++word) {
          out.push_back(
              Classify(SetSystem::FromWord(n, word), options.escape_depth));
        }
      });
    }
  }
  std::vector<CensusRecord> records;
  records.reserve(total);
  for (auto& part : parts) {
    for (auto& r : part) records.push_back(std::move(r));
  }
  return records;
}

std::string FormatCensusRecord(const CensusRecord& record) {
  std::string out = "ground " + std::to_string(record.system.ground_size());
  out += '\t';
  out += FormatFamilyInline(record.system);
  out += "\tcanonical=";
  out += FormatFamilyInline(record.canonical);
  out += record.is_dm ? "\tdm=yes" : "\tdm=no";
  out += "\tbinary=";
  out += record.is_binary ? (*record.is_binary ? "yes" : "no") : "-";
  out += "\tescape=";
  out += record.escape ? FormatSlideSequence(record.escape->sequence) : "-";
  return out;
}

CensusSummary Summarize(int n, const std::vector<CensusRecord>& records) {
  CensusSummary s;
  s.n = n;
  std::set<SetSystem> dm_classes;
  std::set<SetSystem> binary_classes;
  std::set<SetSystem> non_binary_classes;
  for (const CensusRecord& r : records) {
    ++s.families;
    if (!r.is_dm) continue;
    ++s.delta_matroids;
    dm_classes.insert(r.canonical);
    const bool binary = r.is_binary.value_or(false);
    if (binary) {
      ++s.binary;
      binary_classes.insert(r.canonical);
      if (r.escape) ++s.binary_escaped;
    } else {
      ++s.non_binary;
      non_binary_classes.insert(r.canonical);
      if (r.escape) ++s.non_binary_escaped;
    }
    if (r.escape) {
      s.max_escape_length = std::max(
          s.max_escape_length, static_cast<int>(r.escape->sequence.size()));
    }
  }
  s.delta_matroid_classes = dm_classes.size();
  s.binary_classes = binary_classes.size();
  s.non_binary_classes = non_binary_classes.size();
  return s;
}

std::string FormatSummaryTable(const std::vector<CensusSummary>& rows) {
  std::ostringstream out;
  out << "| n | families | delta-matroids | binary | non-binary | "
         "non-binary escaped | binary escaped | max escape length | "
         "dm classes | binary classes | non-binary classes |\n";
  out << "|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const CensusSummary& s : rows) {
    out << "| " << s.n << " | " << s.families << " | " << s.delta_matroids
        << " | " << s.binary << " | " << s.non_binary << " | "
        << s.non_binary_escaped << " | " << s.binary_escaped << " | "
        << s.max_escape_length << " | " << s.delta_matroid_classes << " | "
        << s.binary_classes << " | " << s.non_binary_classes << " |\n";
  }
  return out.str();
}

ClosureReport VerifyBinaryClosure(int n) {
  CheckCensusSize(n);
  ClosureReport report;
  report.n = n;
  const std::vector<SetSystem>& binaries = AllBinarySystems(n);
  report.binary_systems = binaries.size();
  const std::vector<SlideInstruction> slides = AllSlides(n);
  for (const SetSystem& source : binaries) {
    for (const SlideInstruction& s : slides) {
      ++report.slides_checked;
      SetSystem result = HandleSlide(source, s.a, s.b);
      const bool is_dm = IsDeltaMatroid(result);
      if (is_dm && IsBinaryBySearch(result).is_binary) continue;
      report.counterexamples.push_back({source, s, std::move(result), is_dm});
    }
  }
  return report;
}

TheoremReport VerifyTheorem(int n, const CensusOptions& options,
                            const CensusSink& sink) {
  CheckCensusSize(n);
  TheoremReport report;
  for (int m = 1; m <= n; ++m) {
    const std::vector<CensusRecord> records = EnumerateDeltaMatroids(m, options);
    for (const CensusRecord& r : records) {
      if (!r.is_dm) continue;
      const bool binary = r.is_binary.value_or(false);
      if (binary == r.escape.has_value()) report.exceptions.push_back(r.system);
    }
    report.rows.push_back(Summarize(m, records));
    if (sink) sink(m, records);
  }
  return report;
}

bool CommutationReport::holds() const {
  return std::all_of(laws.begin(), laws.end(),
                     [](const LawTally& t) { return t.failed == 0; });
}

CommutationReport VerifyCommutationLaws(int n, std::size_t samples,
                                        std::uint64_t seed) {
  if (n < 2 || n > kMaxGroundSize) {
    throw Error(ErrorCode::kOutOfRange,
                "commutation laws need a ground set of size 2.." +
                    std::to_string(kMaxGroundSize));
  }
  CommutationReport report;
  report.n = n;
  report.exhaustive = n <= kMaxCensusGroundSize;
  for (const char* name :
       {"slide/delete", "slide/contract", "twist/slide, A avoids a,b",
        "twist/slide, A contains a,b"}) {
    LawTally tally;
    tally.name = name;
    report.laws.push_back(std::move(tally));
  }
  LawTally& del = report.laws[0];
  LawTally& con = report.laws[1];
  LawTally& disjoint = report.laws[2];
  LawTally& containing = report.laws[3];

  if (report.exhaustive) {
    const std::uint64_t total = (std::uint64_t{1} << (1u << n)) - 1;
    const std::vector<SlideInstruction> slides = AllSlides(n);
    for (std::uint64_t word = 1; word <= total; ++word) {
      const SetSystem s = SetSystem::FromWord(n, word);
      for (const SlideInstruction& sl : slides) {
        for (int e = 1; e <= n; ++e) {
          if (e != sl.a && e != sl.b) CheckMinorLaws(s, sl.a, sl.b, e, del, con);
        }
        for (std::uint32_t a = 0; a < (1u << n); ++a) {
          CheckTwistLaws(s, sl.a, sl.b, SubsetMask(a), disjoint, containing);
        }
      }
    }
    return report;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> element(1, n);
  const std::uint32_t subsets = 1u << n;
  std::uniform_int_distribution<std::uint32_t> subset(0, subsets - 1);
  std::bernoulli_distribution coin(0.5);
  auto random_system = [&] {
    SetSystemBuilder builder(n);
    bool any = false;
    for (std::uint32_t m = 0; m < subsets; ++m) {
      if (coin(rng)) {
        builder.Set(SubsetMask(m));
        any = true;
      }
    }
    if (!any) builder.Set(SubsetMask(subset(rng)));
    return std::move(builder).Build();
  };
  auto random_pair = [&] {
    int a = element(rng);
    int b = element(rng);
    while (b == a) b = element(rng);
    return SlideInstruction{a, b};
  };
  while (del.checked < samples) {
    const SetSystem s = random_system();
    const SlideInstruction sl = random_pair();
    int e = element(rng);
    while (e == sl.a || e == sl.b) e = element(rng);
    CheckMinorLaws(s, sl.a, sl.b, e, del, con);
  }
  while (disjoint.checked < samples || containing.checked < samples) {
    const SetSystem s = random_system();
    const SlideInstruction sl = random_pair();
    SubsetMask twist(subset(rng));
    // Force the twist into whichever class still needs samples.
    const SubsetMask ab =
        SubsetMask::Singleton(sl.a) | SubsetMask::Singleton(sl.b);
    if (disjoint.checked < samples && (containing.checked >= samples ||
                                       coin(rng))) {
      twist = twist & ~ab;
    } else {
      twist = twist | ab;
    }
    CheckTwistLaws(s, sl.a, sl.b, twist, disjoint, containing);
  }
  return report;
}

AgreementReport VerifyOracleAgreement(int n, std::size_t samples,
                                      std::uint64_t seed) {
  AgreementReport report;
  report.n = n;
  report.exhaustive = n <= kMaxCensusGroundSize;
  std::vector<SetSystem> systems;
  if (report.exhaustive) {
    CheckCensusSize(n);
    const std::uint64_t total = (std::uint64_t{1} << (1u << n)) - 1;
    for (std::uint64_t word = 1; word <= total; ++word) {
      SetSystem s = SetSystem::FromWord(n, word);
      if (IsDeltaMatroid(s)) systems.push_back(std::move(s));
    }
  } else {
    systems = SampleDeltaMatroids(n, samples, seed);
  }
  for (const SetSystem& s : systems) {
    ++report.checked;
    const BinaryVerdict by_search = IsBinaryBySearch(s);
    const BinaryVerdict by_minors = IsBinaryByExcludedMinors(s);
    if (by_search.is_binary) ++report.binary;
    if (by_search.is_binary != by_minors.is_binary ||
        !ReplayVerdict(s, by_search) || !ReplayVerdict(s, by_minors)) {
      report.mismatches.push_back(s);
    }
  }
  return report;
}

std::vector<SetSystem> SampleDeltaMatroids(int n, std::size_t count,
                                           std::uint64_t seed) {
  if (n < 1 || n > kMaxCensusGroundSize + 2) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "sampling supports ground sets of size 1.." +
                    std::to_string(kMaxCensusGroundSize + 2));
  }
  std::mt19937_64 rng(seed);
  const std::uint32_t subsets = 1u << n;
  std::uniform_int_distribution<std::uint32_t> subset(0, subsets - 1);
  std::uniform_int_distribution<std::uint64_t> matrix(
      0, (std::uint64_t{1} << SymmetricBinaryMatrix::EncodingBits(n)) - 1);

  auto restart = [&] {
    return Twist(MatroidOfMatrix(SymmetricBinaryMatrix::FromEncoding(
                     n, matrix(rng))),
                 SubsetMask(subset(rng)));
  };

  constexpr int kRestartEvery = 400;
  std::vector<SetSystem> out;
  std::unordered_set<SetSystem, SetSystemHash> seen;
  SetSystem current = restart();
  // Bound the walk so a tiny state space (n = 1) cannot loop forever.
  const std::size_t max_steps = 2000 * count + 10000;
  for (std::size_t step = 0; out.size() < count && step < max_steps; ++step) {
    if (step % kRestartEvery == 0 && step > 0) current = restart();
    std::vector<std::uint64_t> bitmap(current.bitmap().begin(),
                                      current.bitmap().end());
    const std::uint32_t t = subset(rng);
    bitmap[t >> 6] ^= std::uint64_t{1} << (t & 63);
    if (std::all_of(bitmap.begin(), bitmap.end(),
                    [](std::uint64_t w) { return w == 0; })) {
      continue;
    }
    SetSystem next = SetSystem::FromBitmap(n, std::move(bitmap));
    if (!IsDeltaMatroid(next)) continue;
    current = std::move(next);
    if (seen.insert(current).second) out.push_back(current);
  }
  return out;
}

}  // namespace dmat
