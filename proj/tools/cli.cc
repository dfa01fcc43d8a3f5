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

#include <CLI11.hpp>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "defunc/detail/big_stack.h"
#include "defunc/expr.h"
#include "defunc/gencomp.h"
#include "defunc/machine.h"
#include "defunc/stack_machine.h"
#include "harness.h"

namespace defunc::cli {
namespace {

// Evaluators recurse on the expression; command-line input is bounded by
// the argument size limit, so this is plenty.
constexpr std::size_t kCommandStackBytes = std::size_t{256} << 20;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_stack_csv(const std::string& text) {
  std::vector<std::int64_t> stack;
  if (text.empty()) return stack;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = std::string_view(text).substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    std::int64_t value = 0;
    auto [end, ec] =
        std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size()) {
      throw UsageError("bad stack entry '" + std::string(item) + "'");
    }
    stack.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return stack;
}

std::string join_stack(const Stack& s) {
  std::string text;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) text += ',';
    text += std::to_string(s[i]);
  }
  return text;
}

struct Options {
  std::string expr;
  std::string variant = "direct";
  std::string route = "direct";
  std::string file;
  std::string stack;
  bool show_tree = false;
  std::uint64_t cases = 0;
  std::uint64_t seed = 0;
  std::size_t max_depth = 8;
  std::size_t jobs = 1;
  std::string shape;
  std::vector<std::size_t> sizes;
  std::string out_path;
};

int cmd_eval(const Options& o, std::ostream& out) {
  const auto v = parse_variant(o.variant);
  if (!v) throw UsageError("unknown variant " + o.variant);
  const Expr e = parse_expr(o.expr);
  out << evaluate(*v, e) << "\n";
  return kExitOk;
}

int cmd_compile(const Options& o, std::ostream& out) {
  const Expr e = parse_expr(o.expr);
  if (o.route == "direct") {
    out << disassemble(compile(e));
  } else if (o.route == "rotate") {
    out << disassemble(compile_linear(rep_linear(e)));
  } else {
    throw UsageError("unknown route " + o.route);
  }
  return kExitOk;
}

int cmd_run(const Options& o, std::ostream& out, std::ostream& err) {
  std::ifstream in(o.file, std::ios::binary);
  if (!in) throw UsageError("cannot read " + o.file);
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  const Prog program = assemble(text);
  const Stack initial = parse_stack_csv(o.stack);
  try {
    out << join_stack(exec(program, initial)) << "\n";
  } catch (const ExecError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_trace(const Options& o, std::ostream& out) {
  const MachineRun run = machine_run(parse_expr(o.expr));
  out << format_trace(run.trace) << "\n";
  return kExitOk;
}

int cmd_rotate(const Options& o, std::ostream& out) {
  const TreeCode tree = rep_tree(parse_expr(o.expr));
  if (o.show_tree) out << render_tree(tree);
  out << render_linear(rotate(tree));
  return kExitOk;
}

int cmd_fuzz(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.max_depth == 0) throw UsageError("--max-depth must be positive");
  FuzzOptions options{o.cases, o.seed, o.max_depth, o.jobs == 0 ? 1 : o.jobs};
  const FuzzReport report = run_fuzz(options);
  out << format_fuzz_report(options, report);
  err << "elapsed_ms: " << static_cast<std::uint64_t>(report.elapsed_ms)
      << "\n";
  return report.mismatches.empty() ? kExitOk : kExitFailure;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  const auto shape = parse_shape(o.shape);
  if (!shape) throw UsageError("unknown shape " + o.shape);
  if (o.sizes.empty()) throw UsageError("--sizes is empty");
  for (std::size_t n : o.sizes) {
    if (n == 0) throw UsageError("sizes must be positive");
  }
  std::vector<std::string> skipped;
  const std::vector<BenchRow> rows = run_bench(*shape, o.sizes, &skipped);
  std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot write " + o.out_path);
  file << format_bench_csv(rows);
  file.close();
  if (!file) throw UsageError("cannot write " + o.out_path);
  for (const std::string& s : skipped) {
    err << "warning: depth limit reached, no row for " << s << "\n";
  }
  out << "wrote " << rows.size() << " rows to " << o.out_path << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Evaluators, machines and compilers for a subtraction language",
               "defunc"};
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  eval->add_option("--variant", o.variant,
                   "direct, cps, machine, tree, linear or compiled")
      ->capture_default_str();
  eval->add_option("EXPR", o.expr, "Expression, e.g. \"(3 - 4) - 5\"")
      ->required();

  auto* comp = app.add_subcommand("compile", "Print stack machine code");
  comp->add_option("--route", o.route, "direct or rotate")
      ->capture_default_str();
  comp->add_option("EXPR", o.expr)->required();

  auto* run = app.add_subcommand("run", "Assemble and execute a program file");
  run->add_option("FILE", o.file)->required();
  run->add_option("--stack", o.stack, "Initial stack, top first, e.g. 4,3");

  auto* trace = app.add_subcommand("trace", "Print the abstract machine trace");
  trace->add_option("EXPR", o.expr)->required();

  auto* rot = app.add_subcommand("rotate", "Print the rotated linear code");
  rot->add_flag("--show-tree", o.show_tree, "Also print the tree code");
  rot->add_option("EXPR", o.expr)->required();

  auto* fuzz = app.add_subcommand("fuzz", "Differential fuzzing");
  fuzz->add_option("--cases", o.cases)->required();
  fuzz->add_option("--seed", o.seed)->required();
  fuzz->add_option("--max-depth", o.max_depth)->required();
  fuzz->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();

  auto* bench = app.add_subcommand("bench", "Operation counts as CSV");
  bench->add_option("--shape", o.shape, "left, right or random")->required();
  bench->add_option("--sizes", o.sizes, "Comma-separated tip counts")
      ->required()
      ->delimiter(',');
  bench->add_option("--out", o.out_path)->required();

  // CLI11 consumes the vector from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto dispatch = [&]() -> int {
    if (*eval) return cmd_eval(o, out);
    if (*comp) return cmd_compile(o, out);
    if (*run) return cmd_run(o, out, err);
    if (*trace) return cmd_trace(o, out);
    if (*rot) return cmd_rotate(o, out);
    if (*fuzz) return cmd_fuzz(o, out, err);
    return cmd_bench(o, out, err);
  };

  try {
    return detail::call_on_stack(kCommandStackBytes, dispatch);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const AssembleError& e) {
    err << "assembly error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace defunc::cli
