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

#ifndef DEFUNC_TOOLS_HARNESS_H_
#define DEFUNC_TOOLS_HARNESS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "defunc/accumulation.h"
#include "defunc/expr.h"

namespace defunc::cli {

// The fixed set of evaluators. Fuzzing iterates kAllVariants, so a new
// variant must be added there as well as to the switch in evaluate().
enum class Variant { kDirect, kCps, kMachine, kTree, kLinear, kCompiled };

inline constexpr std::array<Variant, 6> kAllVariants = {
    Variant::kDirect, Variant::kCps,    Variant::kMachine,
    Variant::kTree,   Variant::kLinear, Variant::kCompiled,
};

std::string_view variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view name);
std::int64_t evaluate(Variant v, const Expr& e);

// Extra laws checked on every fuzz case besides agreement of the variants.
inline constexpr std::array<std::string_view, 3> kFuzzChecks = {
    "exec_law",        // exec(compile e, s) == eval e :: s
    "rotate_rep",      // rotate (rep_tree e) == rep_linear e
    "compile_routes",  // compile_linear (rep_linear e) == compile e
};

struct FuzzOptions {
  std::uint64_t cases = 0;
  std::uint64_t seed = 0;
  std::size_t max_depth = 8;
  std::size_t jobs = 1;
};

struct Mismatch {
  std::uint64_t index;
  std::uint64_t case_seed;
  std::string expr_text;
  // Parallel to kAllVariants: decimal value or "error: <what>".
  std::vector<std::string> values;
  std::vector<std::string> failed_checks;
};

struct FuzzReport {
  std::uint64_t cases_run = 0;
  std::vector<Mismatch> mismatches;
  // Hash over every computed value, in case order.
  std::uint64_t digest = 0;
  double elapsed_ms = 0;
};

// Each case draws all of its randomness from derive_seed(seed, index), so
// the report does not depend on `jobs`.
FuzzReport run_fuzz(const FuzzOptions& options);

// Deterministic text form. The elapsed time is left out so reruns are
// byte-identical; callers print it separately.
std::string format_fuzz_report(const FuzzOptions& options,
                               const FuzzReport& report);

enum class Shape { kLeft, kRight, kRandom };
std::optional<Shape> parse_shape(std::string_view name);

struct BenchRow {
  std::string variant;
  std::size_t size;
  std::uint64_t append_steps;
  std::uint64_t cons_steps;
  std::uint64_t loop_iterations;
};

inline constexpr std::array<std::string_view, 11> kBenchVariants = {
    "flatten_direct",    "flatten_cps_left",     "flatten_defunc_left",
    "flatten_cps_right", "flatten_defunc_right", "flatten_pair",
    "flatten_stack",     "flatten_nontail",      "reverse_naive",
    "reverse_cps",       "reverse_acc",
};

// Tree input of the given shape and tip count (random shapes use a fixed
// seed per size).
Tree bench_tree(Shape shape, std::size_t size);

// One row per (variant, size), sizes outer. A recursive variant that hits
// its depth limit yields no row; its name and size are appended to
// `skipped` instead.
std::vector<BenchRow> run_bench(Shape shape, std::span<const std::size_t> sizes,
                                std::vector<std::string>* skipped = nullptr);

// Header `variant,size,append_steps,cons_steps,loop_iterations`.
std::string format_bench_csv(std::span<const BenchRow> rows);

}  // namespace defunc::cli

#endif  // DEFUNC_TOOLS_HARNESS_H_
