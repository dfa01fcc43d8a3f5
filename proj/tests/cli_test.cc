// Copyright 2026 The defunc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "harness.h"
#include "support.h"

namespace defunc::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name,
                                const std::string& contents) {
  const auto path =
      std::filesystem::temp_directory_path() / ("defunc_cli_test_" + name);
  std::ofstream(path, std::ios::binary) << contents;
  return path;
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

TEST(Variants, Exhaustive) {
  // The enumerators are dense from 0; kAllVariants must list each in order.
  ASSERT_EQ(kAllVariants.size(),
            static_cast<std::size_t>(Variant::kCompiled) + 1);
  std::set<std::string_view> names;
  for (std::size_t i = 0; i < kAllVariants.size(); ++i) {
    EXPECT_EQ(static_cast<std::size_t>(kAllVariants[i]), i);
    const std::string_view name = variant_name(kAllVariants[i]);
    EXPECT_NE(name, "?");
    EXPECT_EQ(parse_variant(name), kAllVariants[i]);
    names.insert(name);
  }
  EXPECT_EQ(names.size(), kAllVariants.size());
  EXPECT_FALSE(parse_variant("nope").has_value());

  // Fuzz mismatches carry one value per variant.
  FuzzOptions options{1, 3, 4, 1};
  Mismatch m{0, 1, "(1 - 2)", {}, {"exec_law"}};
  for (Variant v : kAllVariants) m.values.emplace_back(variant_name(v));
  FuzzReport report{1, {m}, 0, 0};
  const std::string text = format_fuzz_report(options, report);
  for (Variant v : kAllVariants) {
    EXPECT_NE(text.find(std::string(variant_name(v)) + " = "),
              std::string::npos);
  }
  EXPECT_NE(text.find("(1 - 2)"), std::string::npos);
  EXPECT_NE(text.find("failed exec_law"), std::string::npos);
}

TEST(Eval, SampleValueUnderEveryVariant) {
  for (Variant v : kAllVariants) {
    const Result r =
        run({"eval", "--variant", std::string(variant_name(v)), "(3 - 4) - 5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "-6\n") << variant_name(v);
  }
  EXPECT_EQ(run({"eval", "7"}).out, "7\n");
  EXPECT_EQ(run({"eval", "-5"}).out, "-5\n");
  EXPECT_EQ(run({"eval", "--", "-1 - -1"}).out, "0\n");
}

TEST(Eval, DifferentialOnGenerated) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const std::string text =
        print_expr(gen_expr(derive_seed(61, i), 7, testing::kAllLiterals));
    const std::string want = run({"eval", text}).out;
    for (Variant v : kAllVariants) {
      ASSERT_EQ(
          run({"eval", "--variant", std::string(variant_name(v)), text}).out,
          want);
    }
  }
}

TEST(Eval, Errors) {
  Result r = run({"eval", "(1 -"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("offset 4"), std::string::npos);
  EXPECT_EQ(run({"eval", "99999999999999999999"}).code, 2);
  EXPECT_EQ(run({"eval", "--variant", "fast", "1"}).code, 2);
  EXPECT_EQ(run({"eval"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"eval", "--help"}).code, 0);
}

TEST(Compile, BothRoutes) {
  const std::string sample = "PUSH 3\nPUSH 4\nSUB\nPUSH 5\nSUB\n";
  EXPECT_EQ(run({"compile", "(3 - 4) - 5"}).out, sample);
  EXPECT_EQ(run({"compile", "--route", "direct", "(3 - 4) - 5"}).out, sample);
  EXPECT_EQ(run({"compile", "--route", "rotate", "(3 - 4) - 5"}).out, sample);
  EXPECT_EQ(run({"compile", "--route", "rotate", "7"}).out, "PUSH 7\n");
  EXPECT_EQ(run({"compile", "--route", "sideways", "7"}).code, 2);
  EXPECT_EQ(run({"compile", "1 -"}).code, 2);
  for (std::uint64_t i = 0; i < 300; ++i) {
    const std::string text =
        print_expr(gen_expr(derive_seed(62, i), 8, testing::kAllLiterals));
    ASSERT_EQ(run({"compile", "--route", "rotate", text}).out,
              run({"compile", "--route", "direct", text}).out);
  }
}

TEST(Run, Examples) {
  const auto sample =
      temp_file("sample.txt", "PUSH 3\nPUSH 4\nSUB\nPUSH 5\nSUB\n");
  EXPECT_EQ(run({"run", sample.string()}).out, "-6\n");
  EXPECT_EQ(run({"run", sample.string(), "--stack", ""}).out, "-6\n");
  EXPECT_EQ(run({"run", sample.string(), "--stack", "8,9"}).out, "-6,8,9\n");
  const auto empty = temp_file("empty.txt", "");
  EXPECT_EQ(run({"run", empty.string(), "--stack", "1,2"}).out, "1,2\n");
  EXPECT_EQ(run({"run", empty.string()}).out, "\n");
  const auto sub = temp_file("sub.txt", "SUB\n");
  EXPECT_EQ(run({"run", sub.string(), "--stack", "4,3"}).out, "-1\n");
  EXPECT_EQ(run({"run", sub.string(), "--stack", "-4,-3"}).out, "1\n");
}

TEST(Run, Errors) {
  const auto sub = temp_file("sub2.txt", "PUSH 1\nSUB\nSUB\n");
  const Result under = run({"run", sub.string(), "--stack", "7"});
  EXPECT_EQ(under.code, 1);
  EXPECT_NE(under.err.find("instruction 2"), std::string::npos);
  const auto bad = temp_file("bad.txt", "PUSH 1\nPOP\n");
  const Result asm_err = run({"run", bad.string()});
  EXPECT_EQ(asm_err.code, 2);
  EXPECT_NE(asm_err.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"run", "/nonexistent/prog.txt"}).code, 2);
  EXPECT_EQ(run({"run", sub.string(), "--stack", "1,,2"}).code, 2);
  EXPECT_EQ(run({"run", sub.string(), "--stack", "x"}).code, 2);
}

TEST(Trace, Format) {
  EXPECT_EQ(run({"trace", "5"}).out, "EVAL 5 | []\nAPPLY 5 | []\nHALT 5\n");
  const Result sample = run({"trace", "(3 - 4) - 5"});
  EXPECT_EQ(count_lines(sample.out), 11u);
  EXPECT_NE(sample.out.rfind("HALT -6\n"), std::string::npos);
  EXPECT_EQ(sample.out.substr(sample.out.size() - 8), "HALT -6\n");
  EXPECT_EQ(run({"trace", "("}).code, 2);
}

TEST(Trace, LineCountLaw) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    const Expr e = gen_expr(derive_seed(63, i), 7, testing::kSmallLiterals);
    const Result r = run({"trace", print_expr(e)});
    ASSERT_EQ(r.code, 0);
    ASSERT_EQ(count_lines(r.out), 4 * diff_count(e) + 3);
  }
}

TEST(Rotate, Output) {
  EXPECT_EQ(run({"rotate", "7"}).out, "PUSHRET 7 (arity 0)\nHALT (arity 1)\n");
  const Result r = run({"rotate", "--show-tree", "1 - 2"});
  EXPECT_EQ(r.out,
            "B1 (arity 0)\n  RET 1 (arity 0)\n  B2 (arity 1)\n"
            "    RET 2 (arity 0)\n    SUB (arity 2)\n"
            "PUSHRET 1 (arity 0)\nPUSHRET 2 (arity 1)\nSUBCONT (arity 2)\n"
            "HALT (arity 1)\n");
}

TEST(Fuzz, ZeroCases) {
  const Result r =
      run({"fuzz", "--cases", "0", "--seed", "9", "--max-depth", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("cases_run: 0\n"), std::string::npos);
  EXPECT_NE(r.out.find("mismatches: 0\n"), std::string::npos);
}

TEST(Fuzz, DeterministicAcrossJobs) {
  const std::vector<std::string> base = {
      "fuzz", "--cases", "2000", "--seed", "7", "--max-depth", "8"};
  const Result one = run(base);
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(run(base).out, one.out);
  for (const char* jobs : {"2", "3", "8"}) {
    std::vector<std::string> args = base;
    args.insert(args.end(), {"--jobs", jobs});
    EXPECT_EQ(run(args).out, one.out) << jobs;
  }
  EXPECT_NE(
      run({"fuzz", "--cases", "2000", "--seed", "8", "--max-depth", "8"}).out,
      one.out);
  EXPECT_NE(one.err.find("elapsed_ms"), std::string::npos);
  EXPECT_EQ(one.out.find("elapsed"), std::string::npos);
}

TEST(Fuzz, Errors) {
  EXPECT_EQ(run({"fuzz", "--cases", "1", "--seed", "1"}).code, 2);
  EXPECT_EQ(
      run({"fuzz", "--cases", "x", "--seed", "1", "--max-depth", "2"}).code, 2);
  EXPECT_EQ(
      run({"fuzz", "--cases", "1", "--seed", "1", "--max-depth", "0"}).code, 2);
}

TEST(Fuzz, ReportMatchesRunFuzz) {
  const FuzzOptions options{500, 1234, 6, 1};
  const FuzzReport report = run_fuzz(options);
  EXPECT_EQ(report.cases_run, 500u);
  EXPECT_TRUE(report.mismatches.empty());
  EXPECT_EQ(
      run({"fuzz", "--cases", "500", "--seed", "1234", "--max-depth", "6"}).out,
      format_fuzz_report(options, report));
}

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

TEST(Bench, CsvContents) {
  const auto path =
      std::filesystem::temp_directory_path() / "defunc_bench_left.csv";
  const Result r = run({"bench", "--shape", "left", "--sizes", "10,100",
                        "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = read_csv(path);
  ASSERT_EQ(rows.size(), 1 + 2 * kBenchVariants.size());
  EXPECT_EQ(rows[0],
            (std::vector<std::string>{"variant", "size", "append_steps",
                                      "cons_steps", "loop_iterations"}));
  bool saw_direct = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    ASSERT_EQ(row.size(), 5u);
    const std::uint64_t n = std::stoull(row[1]);
    if (row[0] == "flatten_direct" && n == 100) {
      EXPECT_EQ(row[2], "4950");
      saw_direct = true;
    }
    if (row[0] == "flatten_stack") {
      EXPECT_EQ(std::stoull(row[4]), 2 * n - 1);
    }
    if (row[0] == "reverse_acc") {
      EXPECT_EQ(std::stoull(row[3]), n);
    }
  }
  EXPECT_TRUE(saw_direct);
}

TEST(Bench, EveryShapeDeterministic) {
  for (const char* shape : {"left", "right", "random"}) {
    const auto a =
        std::filesystem::temp_directory_path() / "defunc_bench_a.csv";
    const auto b =
        std::filesystem::temp_directory_path() / "defunc_bench_b.csv";
    ASSERT_EQ(run({"bench", "--shape", shape, "--sizes", "1,17,64", "--out",
                   a.string()})
                  .code,
              0);
    ASSERT_EQ(run({"bench", "--shape", shape, "--sizes", "1,17,64", "--out",
                   b.string()})
                  .code,
              0);
    const auto ra = read_csv(a);
    EXPECT_EQ(ra, read_csv(b));
    for (std::size_t i = 1; i < ra.size(); ++i) {
      const std::uint64_t n = std::stoull(ra[i][1]);
      if (ra[i][0] == "flatten_stack") {
        EXPECT_EQ(std::stoull(ra[i][4]), 2 * n - 1) << shape;
      }
      if (ra[i][0] == "reverse_acc") {
        EXPECT_EQ(std::stoull(ra[i][3]), n);
      }
    }
  }
}

TEST(Bench, DepthLimitSkipsRows) {
  std::vector<std::string> skipped;
  const std::size_t sizes[] = {150000};
  const auto rows = run_bench(Shape::kRight, sizes, &skipped);
  EXPECT_FALSE(skipped.empty());
  EXPECT_EQ(rows.size() + skipped.size(), kBenchVariants.size());
  for (const auto& row : rows) {
    if (row.variant == "flatten_stack") {
      EXPECT_EQ(row.loop_iterations, 299999u);
    }
  }
}

TEST(Bench, Errors) {
  EXPECT_EQ(run({"bench", "--shape", "left", "--sizes", "10", "--out",
                 "/nonexistent/dir/x.csv"})
                .code,
            2);
  const auto path =
      std::filesystem::temp_directory_path() / "defunc_bench_e.csv";
  EXPECT_EQ(run({"bench", "--shape", "zigzag", "--sizes", "10", "--out",
                 path.string()})
                .code,
            2);
  EXPECT_EQ(
      run({"bench", "--shape", "left", "--sizes", "0", "--out", path.string()})
          .code,
      2);
  EXPECT_EQ(run({"bench", "--shape", "left", "--out", path.string()}).code, 2);
}

}  // namespace
}  // namespace defunc::cli
