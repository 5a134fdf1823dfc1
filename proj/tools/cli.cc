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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "deltamatroid/binary.h"
#include "deltamatroid/census.h"
#include "deltamatroid/error.h"
#include "deltamatroid/gf2.h"
#include "deltamatroid/golden.h"
#include "deltamatroid/isomorphism.h"
#include "deltamatroid/set_system.h"
#include "deltamatroid/text_format.h"
#include "deltamatroid/transforms.h"
#include "json.hpp"

namespace dmat::cli {
namespace {

using nlohmann::json;

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SetSystem ReadSystem(const std::string& path) {
  return ParseSystem(ReadInput(path));
}

json SubsetJson(SubsetMask m) { return m.Elements(); }

json SystemJson(const SetSystem& s) {
  json family = json::array();
  s.ForEachMember([&](SubsetMask m) { family.push_back(SubsetJson(m)); });
  return {{"ground", s.ground_size()}, {"family", family}};
}

json ViolationJson(const std::optional<AxiomViolation>& v) {
  if (!v) return nullptr;
  return {{"f1", SubsetJson(v->f1)}, {"f2", SubsetJson(v->f2)}, {"x", v->x}};
}

json MatrixJson(const SymmetricBinaryMatrix& a) {
  json rows = json::array();
  for (int i = 1; i <= a.size(); ++i) {
    json row = json::array();
    for (int j = 1; j <= a.size(); ++j) row.push_back(a.at(i, j) ? 1 : 0);
    rows.push_back(row);
  }
  return rows;
}

json SequenceJson(const std::vector<SlideInstruction>& seq) {
  json out = json::array();
  for (const SlideInstruction& s : seq) out.push_back({s.a, s.b});
  return out;
}

json VerdictJson(const BinaryVerdict& v) {
  json out = {{"is_binary", v.is_binary},
              {"certificate", nullptr},
              {"witness", nullptr}};
  if (v.certificate) {
    out["certificate"] = {{"matrix", MatrixJson(v.certificate->matrix)},
                          {"twist", SubsetJson(v.certificate->twist)}};
  }
  if (v.witness) {
    json steps = json::array();
    Minor described{SetSystem::Make(1, {SubsetMask()}), v.witness->steps, {}};
    for (const MinorStep& step : v.witness->steps) {
      steps.push_back(
          {{"op", step.kind == MinorStep::Kind::kDelete ? "delete"
                                                        : "contract"},
           {"element", step.element}});
    }
    out["witness"] = {{"steps", steps},
                      {"minor", described.Describe()},
                      {"twist", SubsetJson(v.witness->twist)},
                      {"excluded", "S" + std::to_string(
                                             v.witness->excluded_index)},
                      {"relabeling", v.witness->relabeling.images()}};
  }
  return out;
}

void PrintVerdict(std::ostream& out, const std::string& method,
                  const SetSystem& s, const BinaryVerdict& v) {
  out << "method: " << method << '\n';
  out << "binary: " << (v.is_binary ? "yes" : "no") << '\n';
  if (v.certificate) {
    out << "twist: " << v.certificate->twist.ToString() << '\n';
    out << "matrix:\n" << v.certificate->matrix.ToString();
  }
  if (v.witness) {
    Minor described{s, v.witness->steps, {}};
    out << "minor: " << described.Describe() << '\n';
    out << "twist: " << v.witness->twist.ToString() << '\n';
    out << "excluded: S" << v.witness->excluded_index << '\n';
    out << "relabeling: " << v.witness->relabeling.ToString() << '\n';
  }
}

void PrintViolation(std::ostream& out, const AxiomViolation& v) {
  out << "violation: F1=" << v.f1.ToString() << " F2=" << v.f2.ToString()
      << " x=" << v.x << '\n';
}

struct Replication {
  GoldenReport golden;
  TheoremReport theorem;
  std::vector<ClosureReport> closure;
  std::vector<CommutationReport> commutation;
  std::vector<AgreementReport> agreement;

  bool holds() const {
    bool ok = golden.all_pass() && theorem.holds();
    for (const auto& r : closure) ok = ok && r.holds();
    for (const auto& r : commutation) ok = ok && r.holds();
    for (const auto& r : agreement) ok = ok && r.holds();
    return ok;
  }
};

std::string ClosureText(const std::vector<ClosureReport>& reports) {
  std::ostringstream out;
  for (const ClosureReport& r : reports) {
    out << "n=" << r.n << ": " << r.binary_systems << " binary systems, "
        << r.slides_checked << " slides, " << r.counterexamples.size()
        << " counterexamples\n";
    for (const ClosureCounterexample& c : r.counterexamples) {
      out << "  " << FormatFamilyInline(c.source) << " slide " << c.slide.a
          << "," << c.slide.b << " -> " << FormatFamilyInline(c.result)
          << (c.result_is_dm ? " (delta-matroid, not binary)" : " (not dm)")
          << '\n';
    }
  }
  return out.str();
}

std::string CommutationText(const std::vector<CommutationReport>& reports) {
  std::ostringstream out;
  for (const CommutationReport& r : reports) {
    out << "n=" << r.n << (r.exhaustive ? " (exhaustive)" : " (sampled)")
        << '\n';
    for (const LawTally& t : r.laws) {
      out << "  " << t.name << ": " << t.checked << " checked, " << t.failed
          << " failed\n";
      for (const std::string& f : t.failures) out << "    " << f << '\n';
    }
  }
  return out.str();
}

std::string AgreementText(const std::vector<AgreementReport>& reports) {
  std::ostringstream out;
  for (const AgreementReport& r : reports) {
    out << "n=" << r.n << (r.exhaustive ? " (exhaustive)" : " (sampled)")
        << ": " << r.checked << " delta-matroids, " << r.binary
        << " binary, " << r.mismatches.size() << " mismatches\n";
    for (const SetSystem& s : r.mismatches) {
      out << "  " << FormatFamilyInline(s) << '\n';
    }
  }
  return out.str();
}

json ReplicationJson(const Replication& r) {
  json rows = json::array();
  for (const CensusSummary& s : r.theorem.rows) {
    rows.push_back({{"n", s.n},
                    {"families", s.families},
                    {"delta_matroids", s.delta_matroids},
                    {"binary", s.binary},
                    {"non_binary", s.non_binary},
                    {"non_binary_escaped", s.non_binary_escaped},
                    {"binary_escaped", s.binary_escaped},
                    {"max_escape_length", s.max_escape_length},
                    {"delta_matroid_classes", s.delta_matroid_classes},
                    {"binary_classes", s.binary_classes},
                    {"non_binary_classes", s.non_binary_classes}});
  }
  json closure = json::array();
  for (const ClosureReport& c : r.closure) {
    closure.push_back({{"n", c.n},
                       {"binary_systems", c.binary_systems},
                       {"slides_checked", c.slides_checked},
                       {"counterexamples", c.counterexamples.size()}});
  }
  json commutation = json::array();
  for (const CommutationReport& c : r.commutation) {
    json laws = json::array();
    for (const LawTally& t : c.laws) {
      laws.push_back(
          {{"law", t.name}, {"checked", t.checked}, {"failed", t.failed}});
    }
    commutation.push_back(
        {{"n", c.n}, {"exhaustive", c.exhaustive}, {"laws", laws}});
  }
  json agreement = json::array();
  for (const AgreementReport& a : r.agreement) {
    agreement.push_back({{"n", a.n},
                         {"exhaustive", a.exhaustive},
                         {"checked", a.checked},
                         {"binary", a.binary},
                         {"mismatches", a.mismatches.size()}});
  }
  return {{"command", "replicate"},
          {"holds", r.holds()},
          {"golden",
           {{"cases", r.golden.results.size()},
            {"passed", r.golden.passed()},
            {"flagged", r.golden.flagged()}}},
          {"theorem",
           {{"holds", r.theorem.holds()},
            {"exceptions", r.theorem.exceptions.size()},
            {"census", rows}}},
          {"closure", closure},
          {"commutation", commutation},
          {"agreement", agreement}};
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Delta-matroid toolkit: twists, handle slides, minors, and "
               "binary representability on small ground sets.",
               "dmtool"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  // Each subcommand parses into these and installs its action.
  std::function<int()> action;
  std::string file;
  std::string file2;
  int a = 0;
  int b = 0;
  int e = 0;
  std::string twist_text;
  std::string sequence_text;
  std::string method = "search";
  int census_n = kMaxCensusGroundSize;
  std::string out_dir;
  int workers = 0;
  std::size_t samples = 1000;
  std::size_t commutation_samples = 10000;
  std::uint64_t seed = 1;

  auto emit_system = [&](const std::string& command, const SetSystem& result,
                         json extra) {
    if (as_json) {
      extra["command"] = command;
      extra["result"] = SystemJson(result);
      out << extra.dump() << '\n';
    } else {
      out << FormatSystem(result);
    }
    return kExitOk;
  };

  CLI::App* check = app.add_subcommand("check", "Test the exchange axiom");
  check->add_option("file", file, "System document ('-' for stdin)")
      ->required();
  check->callback([&] {
    action = [&] {
      const SetSystem s = ReadSystem(file);
      const auto v = FindAxiomViolation(s);
      if (as_json) {
        out << json{{"command", "check"},
                    {"system", SystemJson(s)},
                    {"is_delta_matroid", !v.has_value()},
                    {"violation", ViolationJson(v)}}
                   .dump()
            << '\n';
      } else {
        out << "delta-matroid: " << (v ? "no" : "yes") << '\n';
        if (v) PrintViolation(out, *v);
      }
      return v ? kExitNo : kExitOk;
    };
  });

  CLI::App* slide = app.add_subcommand("slide", "Handle slide of a over b");
  slide->add_option("file", file)->required();
  slide->add_option("a", a)->required();
  slide->add_option("b", b)->required();
  slide->callback([&] {
    action = [&] {
      return emit_system("slide", HandleSlide(ReadSystem(file), a, b),
                         {{"a", a}, {"b", b}});
    };
  });

  CLI::App* twist = app.add_subcommand("twist", "Twist by a subset");
  twist->add_option("file", file)->required();
  twist->add_option("-A,--set", twist_text, "Subset, e.g. \"{1,3}\"")
      ->required();
  twist->callback([&] {
    action = [&] {
      const SubsetMask set = ParseSubset(twist_text);
      return emit_system("twist", Twist(ReadSystem(file), set),
                         {{"twist", SubsetJson(set)}});
    };
  });

  CLI::App* dual = app.add_subcommand("dual", "Twist by the ground set");
  dual->add_option("file", file)->required();
  dual->callback([&] {
    action = [&] { return emit_system("dual", Dual(ReadSystem(file)), {}); };
  });

  CLI::App* del = app.add_subcommand("delete", "Deletion at an element");
  del->add_option("file", file)->required();
  del->add_option("e", e)->required();
  del->callback([&] {
    action = [&] {
      return emit_system("delete", Delete(ReadSystem(file), e),
                         {{"element", e}});
    };
  });

  CLI::App* con = app.add_subcommand("contract", "Contraction at an element");
  con->add_option("file", file)->required();
  con->add_option("e", e)->required();
  con->callback([&] {
    action = [&] {
      return emit_system("contract", Contract(ReadSystem(file), e),
                         {{"element", e}});
    };
  });

  CLI::App* seq = app.add_subcommand("seq", "Apply a slide sequence");
  seq->add_option("file", file)->required();
  seq->add_option("sequence", sequence_text, "e.g. \"2,3;1,2\"")->required();
  seq->callback([&] {
    action = [&] {
      const std::vector<SlideInstruction> steps =
          ParseSlideSequence(sequence_text);
      const SlideWitness w = ApplySequence(ReadSystem(file), steps);
      const auto v = FindAxiomViolation(w.result);
      if (as_json) {
        out << json{{"command", "seq"},
                    {"sequence", SequenceJson(w.sequence)},
                    {"result", SystemJson(w.result)},
                    {"is_delta_matroid", w.is_dm},
                    {"violation", ViolationJson(v)}}
                   .dump()
            << '\n';
      } else {
        out << FormatSystem(w.result);
        out << "delta-matroid: " << (w.is_dm ? "yes" : "no") << '\n';
        if (v) PrintViolation(out, *v);
      }
      return w.is_dm ? kExitOk : kExitNo;
    };
  });

  CLI::App* binary = app.add_subcommand("binary", "Binary representability");
  binary->add_option("file", file)->required();
  binary->add_option("--method", method, "search, minor, or both")
      ->check(CLI::IsMember({"search", "minor", "both"}));
  binary->callback([&] {
    action = [&] {
      const SetSystem s = ReadSystem(file);
      std::optional<BinaryVerdict> by_search;
      std::optional<BinaryVerdict> by_minor;
      if (method != "minor") by_search = IsBinaryBySearch(s);
      if (method != "search") by_minor = IsBinaryByExcludedMinors(s);
      const bool agree =
          !(by_search && by_minor) ||
          by_search->is_binary == by_minor->is_binary;
      const bool is_binary =
          by_search ? by_search->is_binary : by_minor->is_binary;
      if (as_json) {
        json doc = {{"command", "binary"},
                    {"method", method},
                    {"is_binary", is_binary},
                    {"agree", agree},
                    {"search", nullptr},
                    {"minor", nullptr}};
        if (by_search) doc["search"] = VerdictJson(*by_search);
        if (by_minor) doc["minor"] = VerdictJson(*by_minor);
        out << doc.dump() << '\n';
      } else {
        if (by_search) PrintVerdict(out, "search", s, *by_search);
        if (by_minor) PrintVerdict(out, "minor", s, *by_minor);
        if (by_search && by_minor) {
          out << "agree: " << (agree ? "yes" : "no") << '\n';
        }
      }
      if (!agree) {
        err << "dmtool: binary deciders disagree\n";
        return kExitNo;
      }
      return is_binary ? kExitOk : kExitNo;
    };
  });

  CLI::App* iso = app.add_subcommand("iso", "Isomorphism witness");
  iso->add_option("file1", file)->required();
  iso->add_option("file2", file2)->required();
  iso->callback([&] {
    action = [&] {
      const auto p = AreIsomorphic(ReadSystem(file), ReadSystem(file2));
      if (as_json) {
        out << json{{"command", "iso"},
                    {"isomorphic", p.has_value()},
                    {"relabeling",
                     p ? json(p->images()) : json(nullptr)}}
                   .dump()
            << '\n';
      } else {
        out << (p ? p->ToString() : "none") << '\n';
      }
      return p ? kExitOk : kExitNo;
    };
  });

  CLI::App* canonical = app.add_subcommand("canonical", "Canonical form");
  canonical->add_option("file", file)->required();
  canonical->callback([&] {
    action = [&] {
      return emit_system("canonical", CanonicalForm(ReadSystem(file)), {});
    };
  });

  CLI::App* minors = app.add_subcommand("minors", "List distinct minors");
  minors->add_option("file", file)->required();
  minors->callback([&] {
    action = [&] {
      const std::vector<Minor> all = Minors(ReadSystem(file));
      if (as_json) {
        json list = json::array();
        for (const Minor& m : all) {
          list.push_back({{"minor", m.Describe()},
                          {"labels", m.labels},
                          {"system", SystemJson(m.system)}});
        }
        out << json{{"command", "minors"}, {"minors", list}}.dump() << '\n';
      } else {
        for (const Minor& m : all) {
          out << m.Describe() << "\tground " << m.system.ground_size()
              << "\t" << FormatFamilyInline(m.system) << '\n';
        }
      }
      return kExitOk;
    };
  });

  CLI::App* matrix = app.add_subcommand("matrix", "D(A) of a 0/1 matrix");
  matrix->add_option("file", file)->required();
  matrix->callback([&] {
    action = [&] {
      const SymmetricBinaryMatrix m = ParseMatrix(ReadInput(file));
      return emit_system("matrix", MatroidOfMatrix(m),
                         {{"matrix", MatrixJson(m)}});
    };
  });

  CLI::App* replicate =
      app.add_subcommand("replicate", "Golden suite, census, and theorem");
  replicate->add_option("--n", census_n, "Largest census ground set")
      ->check(CLI::Range(1, kMaxCensusGroundSize));
  replicate->add_option("--out", out_dir, "Directory for report files");
  replicate->add_option("--workers", workers, "Census threads (0 = auto)");
  replicate->add_option("--samples", samples,
                        "Sampled 5-element systems for decider agreement");
  replicate->add_option("--commutation-samples", commutation_samples,
                        "Sampled cases per law at n = 5");
  replicate->add_option("--seed", seed, "Sampling seed");
  replicate->callback([&] {
    action = [&] {
      Replication r;
      std::filesystem::path dir;
      if (!out_dir.empty()) {
        dir = out_dir;
        std::filesystem::create_directories(dir);
      }
      r.golden = RunGoldenSuite();
      CensusOptions options;
      options.workers = workers;
      r.theorem = VerifyTheorem(
          census_n, options,
          [&](int n, const std::vector<CensusRecord>& records) {
            if (dir.empty()) return;
            std::string text;
            for (const CensusRecord& rec : records) {
              text += FormatCensusRecord(rec);
              text += '\n';
            }
            WriteFile(dir / ("census_n" + std::to_string(n) + ".tsv"), text);
          });
      for (int n = 1; n <= census_n; ++n) {
        r.closure.push_back(VerifyBinaryClosure(n));
        r.agreement.push_back(VerifyOracleAgreement(n));
        if (n >= 2) r.commutation.push_back(VerifyCommutationLaws(n));
      }
      r.commutation.push_back(VerifyCommutationLaws(
          kMaxCensusGroundSize + 1, commutation_samples, seed));
      r.agreement.push_back(
          VerifyOracleAgreement(kMaxCensusGroundSize + 1, samples, seed));

      const std::string table = FormatSummaryTable(r.theorem.rows);
      if (!dir.empty()) {
        WriteFile(dir / "golden.txt", FormatGoldenReport(r.golden));
        WriteFile(dir / "summary.md", table);
        WriteFile(dir / "closure.txt", ClosureText(r.closure));
        WriteFile(dir / "commutation.txt", CommutationText(r.commutation));
        WriteFile(dir / "agreement.txt", AgreementText(r.agreement));
        std::string exceptions;
        for (const SetSystem& s : r.theorem.exceptions) {
          exceptions += FormatFamilyInline(s) + '\n';
        }
        WriteFile(dir / "theorem_exceptions.txt", exceptions);
        WriteFile(dir / "replicate.json", ReplicationJson(r).dump(2) + "\n");
      }
      if (as_json) {
        out << ReplicationJson(r).dump() << '\n';
      } else {
        out << "golden: " << r.golden.passed() << "/"
            << r.golden.results.size() << " passed, " << r.golden.flagged()
            << " flagged as misprints\n";
        out << "theorem (n <= " << census_n << "): "
            << (r.theorem.holds() ? "holds" : "FAILS") << ", "
            << r.theorem.exceptions.size() << " exceptions\n";
        out << table;
        out << "binary closure:\n" << ClosureText(r.closure);
        out << "commutation laws:\n" << CommutationText(r.commutation);
        out << "decider agreement:\n" << AgreementText(r.agreement);
      }
      return r.holds() ? kExitOk : kExitNo;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "dmtool: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const ParseError& e) {
    err << "dmtool: ParseError: " << e.what() << '\n';
    return kExitNo;
  } catch (const Error& e) {
    err << "dmtool: " << ErrorCodeName(e.code()) << ": " << e.what() << '\n';
    return kExitNo;
  } catch (const std::exception& e) {
    err << "dmtool: " << e.what() << '\n';
    return kExitNo;
  }
}

}  // namespace dmat::cli
